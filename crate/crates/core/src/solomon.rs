//! Group-algebra arithmetic over `Z[W]` and Solomon's descent algebra.
//!
//! Structure constants are counted over double coset representatives:
//! `a_JKL = #{w ∈ X_JK : w⁻¹(J) ∩ K = L}`. [`WeylGroup::decompose`] recovers
//! the same numbers from an actual product by elimination over the `x_L`
//! basis, so the two routes check each other.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cosets::WeylGroup;
use crate::error::{Error, Result};
use crate::weyl::{image_meet, longest_element, Permutation, SimpleSubset};

/// A finitely supported integer combination of permutations.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAlgebraElement {
    rank: usize,
    terms: BTreeMap<Permutation, i64>,
}

impl GroupAlgebraElement {
    pub fn zero(rank: usize) -> Self {
        GroupAlgebraElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1·e`.
    pub fn identity(rank: usize) -> Self {
        Self::basis(Permutation::identity(rank))
    }

    pub fn basis(w: Permutation) -> Self {
        GroupAlgebraElement {
            rank: w.rank(),
            terms: BTreeMap::from([(w, 1)]),
        }
    }

    /// Sums repeated permutations and drops zero coefficients.
    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Permutation, i64)>) -> Result<Self> {
        let mut out = Self::zero(rank);
        for (w, c) in terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    /// The indicator sum of a set of permutations.
    pub fn indicator<'a>(rank: usize, elements: impl IntoIterator<Item = &'a Permutation>) -> Result<Self> {
        Self::from_terms(rank, elements.into_iter().map(|w| (*w, 1)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, i64> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Permutation) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients (the augmentation).
    pub fn mass(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    pub fn add_term(&mut self, w: Permutation, c: i64) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&w);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, *c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_scale(-1)?)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        if factor != 0 {
            for (w, c) in &self.terms {
                terms.insert(*w, c.checked_mul(factor).ok_or(Error::Overflow)?);
            }
        }
        Ok(GroupAlgebraElement {
            rank: self.rank,
            terms,
        })
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{w}")?;
        }
        Ok(())
    }
}

/// The product in `Z[W]`, bilinear over composition.
pub fn convolve(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    a.same_rank(b)?;
    let mut acc: HashMap<Permutation, i64> = HashMap::with_capacity(a.len() * b.len());
    for (p, &u) in &a.terms {
        for (q, &v) in &b.terms {
            let c = u.checked_mul(v).ok_or(Error::Overflow)?;
            let slot = acc.entry(p.compose_unchecked(q)).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        }
    }
    Ok(GroupAlgebraElement {
        rank: a.rank,
        terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
    })
}

impl WeylGroup {
    /// `x_J`, the sum of the elements of `X_J`.
    pub fn x_of(&self, subset: SimpleSubset) -> Result<GroupAlgebraElement> {
        self.x_parabolic(subset, self.full())
    }

    /// `x_K^J`, the sum of the elements of `X_K^J`.
    pub fn x_parabolic(&self, target: SimpleSubset, context: SimpleSubset) -> Result<GroupAlgebraElement> {
        let reps = self.min_coset_reps_parabolic(target, context)?;
        GroupAlgebraElement::indicator(self.rank(), reps.reps())
    }

    /// Every nonzero `a_JKL`, keyed by `L`.
    pub fn structure_constants(
        &self,
        left: SimpleSubset,
        right: SimpleSubset,
    ) -> Result<Arc<BTreeMap<SimpleSubset, u64>>> {
        self.check(left)?;
        self.check(right)?;
        self.structure_constants_parabolic(left, right, self.full())
    }

    /// Every nonzero `a^J_MNP`, keyed by `P`, counted inside `W_J`.
    pub fn structure_constants_parabolic(
        &self,
        left: SimpleSubset,
        right: SimpleSubset,
        context: SimpleSubset,
    ) -> Result<Arc<BTreeMap<SimpleSubset, u64>>> {
        self.check_inside(left, context)?;
        self.check_inside(right, context)?;
        self.constant_rows
            .get_or_try_fill((context.mask(), left.mask(), right.mask()), || {
                let mut row = BTreeMap::new();
                for d in self.double_coset_reps_parabolic(left, right, context)? {
                    let meet = image_meet(&d.inverse(), left, right);
                    *row.entry(meet).or_insert(0u64) += 1;
                }
                Ok(Arc::new(row))
            })
    }

    /// `a_JKL`; zero whenever `L ⊄ K`.
    pub fn structure_constant(&self, j: SimpleSubset, k: SimpleSubset, l: SimpleSubset) -> Result<u64> {
        self.check(l)?;
        Ok(self.structure_constants(j, k)?.get(&l).copied().unwrap_or(0))
    }

    /// `a^J_MNP`. Requires `M, N ⊆ J` and `P ⊆ N`.
    pub fn structure_constant_parabolic(
        &self,
        m: SimpleSubset,
        n: SimpleSubset,
        p: SimpleSubset,
        j: SimpleSubset,
    ) -> Result<u64> {
        self.check_inside(p, n)?;
        Ok(self
            .structure_constants_parabolic(m, n, j)?
            .get(&p)
            .copied()
            .unwrap_or(0))
    }

    /// Writes `z` as `Σ_{L ⊆ J} c_L x_L^J`, returning the nonzero `c_L`.
    ///
    /// An element of `W_J` with descent set `S` lies in `X_L^J` exactly when
    /// `S ∩ L = ∅`, so reading `z` at the longest element of `W_{J∖L}` gives
    /// `Σ_{L' ⊆ L} c_{L'}`. Solving in order of `|L|` is triangular. The
    /// result is then checked against every coefficient of `z`.
    pub fn decompose(&self, z: &GroupAlgebraElement, context: SimpleSubset) -> Result<BTreeMap<SimpleSubset, i64>> {
        self.check(context)?;
        if z.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: z.rank(),
            });
        }
        let mut order = context.subsets();
        order.sort_by_key(|s| (s.len(), s.mask()));

        let mut coeffs: BTreeMap<SimpleSubset, i64> = BTreeMap::new();
        for l in order {
            let probe = longest_element(context.difference(&l));
            let mut c = z.coefficient(&probe);
            for (smaller, v) in &coeffs {
                if smaller.is_subset_of(&l) {
                    c = c.checked_sub(*v).ok_or(Error::Overflow)?;
                }
            }
            if c != 0 {
                coeffs.insert(l, c);
            }
        }

        let mut matched = 0;
        for w in self.parabolic_subgroup(context)?.iter() {
            let descents = w.right_descent_mask();
            let mut expected = 0i64;
            for (l, c) in &coeffs {
                if l.mask() & descents == 0 {
                    expected = expected.checked_add(*c).ok_or(Error::Overflow)?;
                }
            }
            let actual = z.coefficient(w);
            if expected != actual {
                return Err(Error::DecompositionFailure(format!(
                    "coefficient of {w} is {actual}, the x_L^J combination gives {expected}"
                )));
            }
            if actual != 0 {
                matched += 1;
            }
        }
        if matched != z.len() {
            return Err(Error::DecompositionFailure(format!(
                "{} terms lie outside W_J for J = {{{context}}}",
                z.len() - matched
            )));
        }
        Ok(coeffs)
    }

    /// Decomposes `x_J x_K` over the `x_L` basis by convolution and elimination.
    pub fn solomon_decompose(&self, j: SimpleSubset, k: SimpleSubset) -> Result<BTreeMap<SimpleSubset, i64>> {
        let product = convolve(&self.x_of(j)?, &self.x_of(k)?)?;
        self.decompose(&product, self.full())
    }
}
