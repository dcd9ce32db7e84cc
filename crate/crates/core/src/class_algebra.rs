//! The class descent algebra `Σ_W(A_n)` and its parabolic analogues `Σ_{W_J}(A_n)`.
//!
//! A basis element `[x_K^J]` is the class of `x_K^J` over all `L ⊆ J`
//! equivalent to `K`. Two notions of equivalence are available: conjugacy
//! under the whole of `W` (the default) or under `W_J` only. For `J = Π` they
//! coincide. Products multiply a chosen pair of representatives with
//! Solomon's rule and then collapse each `x_L` to its class.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cosets::WeylGroup;
use crate::error::{Error, Result};
use crate::weyl::{class_of, Partition, SimpleSubset};

/// Which group acts on subsets of a context `J` when forming classes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Equivalence {
    /// `L ∼ K` iff `L = w(K)` for some `w ∈ W`.
    #[default]
    Full,
    /// `L ∼ K` iff `L = w(K)` for some `w ∈ W_J`.
    Parabolic,
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equivalence::Full => "full",
            Equivalence::Parabolic => "parabolic",
        })
    }
}

impl FromStr for Equivalence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(Equivalence::Full),
            "parabolic" => Ok(Equivalence::Parabolic),
            other => Err(format!("unknown equivalence {other:?}, expected full or parabolic")),
        }
    }
}

/// Canonical name of one equivalence class of subsets of `context`.
///
/// `partition` is the W-orbit label of the representative, and the
/// representative is the member with the smallest mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassLabel {
    pub context: SimpleSubset,
    pub equivalence: Equivalence,
    pub partition: Partition,
    pub representative: SimpleSubset,
}

impl ClassLabel {
    /// Every subset of the context in this class, in mask order.
    pub fn members(&self) -> Vec<SimpleSubset> {
        let key = class_key(self.representative, self.context, self.equivalence);
        self.context
            .subsets()
            .into_iter()
            .filter(|l| class_key(*l, self.context, self.equivalence) == key)
            .collect()
    }
}

impl PartialOrd for ClassLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ClassLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.context,
            self.equivalence,
            Reverse(&self.partition),
            self.representative,
        )
            .cmp(&(
                other.context,
                other.equivalence,
                Reverse(&other.partition),
                other.representative,
            ))
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{{{}}}", self.partition, self.representative)
    }
}

/// Orbit invariant of `subset` inside `context`. Under W-conjugacy it is the
/// global partition; under `W_J`-conjugacy it is the partition induced on
/// each component of `J` separately.
fn class_key(subset: SimpleSubset, context: SimpleSubset, equivalence: Equivalence) -> Vec<Partition> {
    match equivalence {
        Equivalence::Full => vec![class_of(subset)],
        Equivalence::Parabolic => context
            .components()
            .into_iter()
            .map(|(start, len)| {
                let local = (subset.mask() >> (start - 1)) & ((1u32 << len) - 1);
                class_of(SimpleSubset::new(len, local).expect("component fits its rank"))
            })
            .collect(),
    }
}

/// The class of `subset` among subsets of `context`.
pub fn class_label(subset: SimpleSubset, context: SimpleSubset, equivalence: Equivalence) -> Result<ClassLabel> {
    if subset.rank() != context.rank() {
        return Err(Error::RankMismatch {
            left: context.rank(),
            right: subset.rank(),
        });
    }
    if !subset.is_subset_of(&context) {
        return Err(Error::NotSubset {
            inner: format!("{{{subset}}}"),
            outer: format!("{{{context}}}"),
        });
    }
    let key = class_key(subset, context, equivalence);
    let representative = context
        .subsets()
        .into_iter()
        .find(|l| class_key(*l, context, equivalence) == key)
        .expect("subset is a member of its own class");
    Ok(ClassLabel {
        context,
        equivalence,
        partition: class_of(representative),
        representative,
    })
}

/// One label per class of subsets of `context`, in label order.
pub fn class_basis(context: SimpleSubset, equivalence: Equivalence) -> Vec<ClassLabel> {
    let labels: BTreeSet<ClassLabel> = context
        .subsets()
        .into_iter()
        .map(|l| class_label(l, context, equivalence).expect("subset of context"))
        .collect();
    labels.into_iter().collect()
}

/// A labelled coefficient, the serialized form of one term of a combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTerm {
    pub label: ClassLabel,
    pub coefficient: i64,
}

pub(crate) fn add_labelled(
    coeffs: &mut BTreeMap<ClassLabel, i64>,
    context: SimpleSubset,
    equivalence: Equivalence,
    label: ClassLabel,
    c: i64,
) -> Result<()> {
    if label.context != context || label.equivalence != equivalence {
        return Err(Error::ContextMismatch {
            expected: format!("{{{context}}}/{equivalence}"),
            found: format!("{{{}}}/{}", label.context, label.equivalence),
        });
    }
    if c == 0 {
        return Ok(());
    }
    let entry = coeffs.entry(label.clone()).or_insert(0);
    *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
    if *entry == 0 {
        coeffs.remove(&label);
    }
    Ok(())
}

/// An element of `Σ_{W_J}(A_n)` in the class basis; `J = Π` gives `Σ_W(A_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CombinationRepr", into = "CombinationRepr")]
pub struct ClassVector {
    context: SimpleSubset,
    equivalence: Equivalence,
    coeffs: BTreeMap<ClassLabel, i64>,
}

impl ClassVector {
    pub fn zero(context: SimpleSubset, equivalence: Equivalence) -> Self {
        ClassVector {
            context,
            equivalence,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(label: ClassLabel) -> Self {
        ClassVector {
            context: label.context,
            equivalence: label.equivalence,
            coeffs: BTreeMap::from([(label, 1)]),
        }
    }

    pub fn context(&self) -> SimpleSubset {
        self.context
    }

    pub fn equivalence(&self) -> Equivalence {
        self.equivalence
    }

    pub fn terms(&self) -> &BTreeMap<ClassLabel, i64> {
        &self.coeffs
    }

    pub fn to_terms(&self) -> Vec<ClassTerm> {
        self.coeffs
            .iter()
            .map(|(label, &coefficient)| ClassTerm {
                label: label.clone(),
                coefficient,
            })
            .collect()
    }

    pub fn coefficient(&self, label: &ClassLabel) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, label: ClassLabel, c: i64) -> Result<()> {
        add_labelled(&mut self.coeffs, self.context, self.equivalence, label, c)
    }

    pub fn checked_add(&self, other: &ClassVector) -> Result<ClassVector> {
        let mut out = self.clone();
        for (label, &c) in &other.coeffs {
            out.add_term(label.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<ClassVector> {
        let mut out = ClassVector::zero(self.context, self.equivalence);
        for (label, &c) in &self.coeffs {
            out.add_term(label.clone(), c.checked_mul(factor).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{label}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Serialize, Deserialize)]
pub(crate) struct CombinationRepr {
    pub(crate) context: SimpleSubset,
    pub(crate) equivalence: Equivalence,
    pub(crate) terms: Vec<ClassTerm>,
}

impl From<ClassVector> for CombinationRepr {
    fn from(v: ClassVector) -> Self {
        CombinationRepr {
            context: v.context,
            equivalence: v.equivalence,
            terms: v.to_terms(),
        }
    }
}

impl TryFrom<CombinationRepr> for ClassVector {
    type Error = Error;

    fn try_from(repr: CombinationRepr) -> Result<Self> {
        let mut out = ClassVector::zero(repr.context, repr.equivalence);
        for term in repr.terms {
            out.add_term(term.label, term.coefficient)?;
        }
        Ok(out)
    }
}

/// Both sides of `a_KNP = Σ_{M⊆J} a_KJM a^J_MNP` for one `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRow {
    pub p: SimpleSubset,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub k: SimpleSubset,
    pub n: SimpleSubset,
    pub j: SimpleSubset,
    pub rows: Vec<FactorizationRow>,
    pub holds: bool,
}

/// A pair of representatives whose product disagrees with the canonical one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeMismatch {
    pub left: ClassLabel,
    pub right: ClassLabel,
    pub left_representative: SimpleSubset,
    pub right_representative: SimpleSubset,
    pub canonical: ClassVector,
    pub found: ClassVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellDefinednessReport {
    pub context: SimpleSubset,
    pub equivalence: Equivalence,
    pub classes: usize,
    pub representative_pairs: usize,
    pub counterexamples: Vec<RepresentativeMismatch>,
    pub holds: bool,
}

impl WeylGroup {
    /// Collapses `Σ c_L x_L^J` to the class basis over `J`.
    pub fn class_projection(
        &self,
        coeffs: &BTreeMap<SimpleSubset, i64>,
        context: SimpleSubset,
        equivalence: Equivalence,
    ) -> Result<ClassVector> {
        let mut out = ClassVector::zero(context, equivalence);
        for (l, &c) in coeffs {
            out.add_term(class_label(*l, context, equivalence)?, c)?;
        }
        Ok(out)
    }

    /// `Σ_{L⊆K} a^J_{MKL} [x_L^J]` for the specific subsets `M, K ⊆ J`.
    pub fn product_of_representatives(
        &self,
        m: SimpleSubset,
        k: SimpleSubset,
        context: SimpleSubset,
        equivalence: Equivalence,
    ) -> Result<ClassVector> {
        let mut out = ClassVector::zero(context, equivalence);
        for l in k.subsets() {
            let a = self.structure_constant_parabolic(m, k, l, context)?;
            if a > 0 {
                let a = i64::try_from(a).map_err(|_| Error::Overflow)?;
                out.add_term(class_label(l, context, equivalence)?, a)?;
            }
        }
        Ok(out)
    }

    /// `[x_J][x_K]` in `Σ_W(A_n)`.
    pub fn class_product(&self, a: &ClassLabel, b: &ClassLabel) -> Result<ClassVector> {
        let full = self.full();
        for label in [a, b] {
            if label.context != full {
                return Err(Error::ContextMismatch {
                    expected: format!("{{{full}}}"),
                    found: format!("{{{}}}", label.context),
                });
            }
        }
        self.parabolic_class_product(a, b, full)
    }

    /// `[x_M^J][x_N^J]` in `Σ_{W_J}(A_n)`.
    pub fn parabolic_class_product(
        &self,
        a: &ClassLabel,
        b: &ClassLabel,
        context: SimpleSubset,
    ) -> Result<ClassVector> {
        self.check(context)?;
        for label in [a, b] {
            self.check_inside(label.representative, context)?;
            if label.context != context || label.equivalence != a.equivalence {
                return Err(Error::ContextMismatch {
                    expected: format!("{{{context}}}/{}", a.equivalence),
                    found: format!("{{{}}}/{}", label.context, label.equivalence),
                });
            }
        }
        self.product_of_representatives(a.representative, b.representative, context, a.equivalence)
    }

    /// Bilinear extension of [`WeylGroup::parabolic_class_product`].
    pub fn multiply(&self, u: &ClassVector, v: &ClassVector) -> Result<ClassVector> {
        if u.context != v.context || u.equivalence != v.equivalence {
            return Err(Error::ContextMismatch {
                expected: format!("{{{}}}/{}", u.context, u.equivalence),
                found: format!("{{{}}}/{}", v.context, v.equivalence),
            });
        }
        let mut out = ClassVector::zero(u.context, u.equivalence);
        for (a, &ca) in &u.coeffs {
            for (b, &cb) in &v.coeffs {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                let product = self.parabolic_class_product(a, b, u.context)?;
                out = out.checked_add(&product.checked_scale(c)?)?;
            }
        }
        Ok(out)
    }

    /// Compares `a_KNP` with `Σ_{M⊆J} a_KJM a^J_MNP` for every `P ⊆ N`.
    pub fn factorization_check(
        &self,
        k: SimpleSubset,
        n: SimpleSubset,
        j: SimpleSubset,
    ) -> Result<FactorizationReport> {
        self.check(k)?;
        self.check_inside(n, j)?;
        let outer = self.structure_constants(k, j)?;
        let mut rows = Vec::new();
        for p in n.subsets() {
            let lhs = self.structure_constant(k, n, p)?;
            let mut rhs = 0u64;
            for m in j.subsets() {
                let a = outer.get(&m).copied().unwrap_or(0);
                if a == 0 {
                    continue;
                }
                let b = self.structure_constant_parabolic(m, n, p, j)?;
                rhs = a
                    .checked_mul(b)
                    .and_then(|t| rhs.checked_add(t))
                    .ok_or(Error::Overflow)?;
            }
            rows.push(FactorizationRow { p, lhs, rhs });
        }
        let holds = rows.iter().all(|r| r.lhs == r.rhs);
        Ok(FactorizationReport { k, n, j, rows, holds })
    }

    /// Recomputes every class product from every pair of representatives and
    /// lists those that differ from the canonical product.
    pub fn well_definedness_report(
        &self,
        context: SimpleSubset,
        equivalence: Equivalence,
    ) -> Result<WellDefinednessReport> {
        self.check(context)?;
        let basis = class_basis(context, equivalence);
        let members: Vec<Vec<SimpleSubset>> = basis.iter().map(ClassLabel::members).collect();
        let mut counterexamples = Vec::new();
        let mut representative_pairs = 0;
        for (a, a_members) in basis.iter().zip(&members) {
            for (b, b_members) in basis.iter().zip(&members) {
                let canonical = self.parabolic_class_product(a, b, context)?;
                for &m in a_members {
                    for &n in b_members {
                        representative_pairs += 1;
                        let found = self.product_of_representatives(m, n, context, equivalence)?;
                        if found != canonical {
                            counterexamples.push(RepresentativeMismatch {
                                left: a.clone(),
                                right: b.clone(),
                                left_representative: m,
                                right_representative: n,
                                canonical: canonical.clone(),
                                found,
                            });
                        }
                    }
                }
            }
        }
        Ok(WellDefinednessReport {
            context,
            equivalence,
            classes: basis.len(),
            representative_pairs,
            holds: counterexamples.is_empty(),
            counterexamples,
        })
    }
}
