//! Distinguished coset and double coset representatives.
//!
//! `X_K^J` is the set of `w ∈ W_J` with `w(α) > 0` for every `α ∈ K`: the
//! minimal-length representatives of the left cosets `wW_K` in `W_J`. With
//! `J = Π` this is the usual `X_K`. Representatives are found by filtering an
//! explicit enumeration of the ambient group.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::weyl::{all_elements, generate_parabolic, Permutation, SimpleSubset, DEFAULT_RANK_CAP, MAX_RANK};

/// `X_target^context`, sorted by length then one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRepSet {
    context: SimpleSubset,
    target: SimpleSubset,
    reps: Vec<Permutation>,
}

impl CosetRepSet {
    pub fn context(&self) -> SimpleSubset {
        self.context
    }

    pub fn target(&self) -> SimpleSubset {
        self.target
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.reps.binary_search(w).is_ok()
    }
}

/// An enumerated `W(A_n)` together with memoized coset data.
///
/// All queries are pure; the caches may be shared across threads.
pub struct WeylGroup {
    rank: usize,
    elements: Arc<Vec<Permutation>>,
    parabolics: Memo<u32, Arc<Vec<Permutation>>>,
    coset_reps: Memo<(u32, u32), Arc<CosetRepSet>>,
    pub(crate) constant_rows: Memo<(u32, u32, u32), Arc<BTreeMap<SimpleSubset, u64>>>,
}

impl std::fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeylGroup").field("rank", &self.rank).finish()
    }
}

impl WeylGroup {
    /// `W(A_rank)` under the default rank cap.
    pub fn new(rank: usize) -> Result<Self> {
        Self::with_cap(rank, DEFAULT_RANK_CAP)
    }

    pub fn with_cap(rank: usize, cap: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::RankZero);
        }
        let cap = cap.min(MAX_RANK);
        if rank > cap {
            return Err(Error::RankCap { rank, cap });
        }
        Ok(WeylGroup {
            rank,
            elements: Arc::new(all_elements(rank)),
            parabolics: Memo::new(),
            coset_reps: Memo::new(),
            constant_rows: Memo::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.rank)
    }

    /// `Π`.
    pub fn full(&self) -> SimpleSubset {
        SimpleSubset::full(self.rank)
    }

    pub fn empty(&self) -> SimpleSubset {
        SimpleSubset::empty(self.rank)
    }

    pub fn subset(&self, indices: &[usize]) -> Result<SimpleSubset> {
        SimpleSubset::from_indices(self.rank, indices)
    }

    /// Every `J ⊆ Π` in mask order.
    pub fn all_subsets(&self) -> Vec<SimpleSubset> {
        self.full().subsets()
    }

    pub(crate) fn check(&self, subset: SimpleSubset) -> Result<()> {
        if subset.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: subset.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_inside(&self, inner: SimpleSubset, outer: SimpleSubset) -> Result<()> {
        self.check(inner)?;
        self.check(outer)?;
        if !inner.is_subset_of(&outer) {
            return Err(Error::NotSubset {
                inner: format!("{{{inner}}}"),
                outer: format!("{{{outer}}}"),
            });
        }
        Ok(())
    }

    /// The elements of `W_J`, sorted.
    pub fn parabolic_subgroup(&self, subset: SimpleSubset) -> Result<Arc<Vec<Permutation>>> {
        self.check(subset)?;
        if subset.is_full() {
            return Ok(self.elements.clone());
        }
        self.parabolics
            .get_or_try_fill(subset.mask(), || Ok(Arc::new(generate_parabolic(subset))))
    }

    /// `X_K`.
    pub fn min_coset_reps(&self, target: SimpleSubset) -> Result<Arc<CosetRepSet>> {
        self.min_coset_reps_parabolic(target, self.full())
    }

    /// `X_K^J`, the minimal left coset representatives of `W_K` in `W_J`.
    pub fn min_coset_reps_parabolic(
        &self,
        target: SimpleSubset,
        context: SimpleSubset,
    ) -> Result<Arc<CosetRepSet>> {
        self.check_inside(target, context)?;
        self.coset_reps
            .get_or_try_fill((context.mask(), target.mask()), || {
                let reps = self
                    .parabolic_subgroup(context)?
                    .iter()
                    .filter(|w| w.keeps_positive(target))
                    .copied()
                    .collect();
                Ok(Arc::new(CosetRepSet {
                    context,
                    target,
                    reps,
                }))
            })
    }

    /// `X_JK = X_J⁻¹ ∩ X_K`.
    pub fn double_coset_reps(&self, left: SimpleSubset, right: SimpleSubset) -> Result<Vec<Permutation>> {
        self.check(left)?;
        self.check(right)?;
        self.double_coset_reps_parabolic(left, right, self.full())
    }

    /// `{w ∈ W_J : w⁻¹ ∈ X_M^J, w ∈ X_N^J}`.
    pub fn double_coset_reps_parabolic(
        &self,
        left: SimpleSubset,
        right: SimpleSubset,
        context: SimpleSubset,
    ) -> Result<Vec<Permutation>> {
        self.check_inside(left, context)?;
        self.check_inside(right, context)?;
        let reps = self.min_coset_reps_parabolic(right, context)?;
        Ok(reps
            .reps()
            .iter()
            .filter(|w| w.left_descent_mask() & left.mask() == 0)
            .copied()
            .collect())
    }
}
