//! The parabolic Burnside ring `PB(W_M)` and the comparison maps `Θ`.
//!
//! A basis element is the transitive `W_M`-set `W_M/W_K`, named by the same
//! [`ClassLabel`] as `[x_K^M]`. Products follow the Mackey formula over the
//! double coset representatives of `W_M`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::class_algebra::{add_labelled, class_basis, class_label, ClassLabel, ClassTerm, ClassVector, CombinationRepr, Equivalence};
use crate::cosets::WeylGroup;
use crate::error::{Error, Result};
use crate::transfer::TransferContext;
use crate::weyl::{image_meet, parabolic_order, SimpleSubset};

/// An integer combination of transitive `W_M`-sets `W_M/W_K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CombinationRepr", into = "CombinationRepr")]
pub struct BurnsideElement {
    context: SimpleSubset,
    equivalence: Equivalence,
    coeffs: BTreeMap<ClassLabel, i64>,
}

impl BurnsideElement {
    pub fn zero(context: SimpleSubset, equivalence: Equivalence) -> Self {
        BurnsideElement {
            context,
            equivalence,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single coset space named by `label`.
    pub fn transitive(label: ClassLabel) -> Self {
        BurnsideElement {
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

    pub fn coefficient(&self, label: &ClassLabel) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, label: ClassLabel, c: i64) -> Result<()> {
        add_labelled(&mut self.coeffs, self.context, self.equivalence, label, c)
    }

    pub fn checked_add(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        let mut out = self.clone();
        for (label, &c) in &other.coeffs {
            out.add_term(label.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<BurnsideElement> {
        let mut out = BurnsideElement::zero(self.context, self.equivalence);
        for (label, &c) in &self.coeffs {
            out.add_term(label.clone(), c.checked_mul(factor).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// Total number of points, `Σ c · |W_M/W_K|`.
    pub fn point_count(&self) -> Result<i64> {
        let mut total = 0i64;
        for (label, &c) in &self.coeffs {
            let points = i64::try_from(transitive_size(label)).map_err(|_| Error::Overflow)?;
            total = points
                .checked_mul(c)
                .and_then(|t| total.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·W/W{{{}}}", label.representative)?;
        }
        Ok(())
    }
}

impl From<BurnsideElement> for CombinationRepr {
    fn from(v: BurnsideElement) -> Self {
        CombinationRepr {
            context: v.context,
            equivalence: v.equivalence,
            terms: v
                .coeffs
                .into_iter()
                .map(|(label, coefficient)| ClassTerm { label, coefficient })
                .collect(),
        }
    }
}

impl TryFrom<CombinationRepr> for BurnsideElement {
    type Error = Error;

    fn try_from(repr: CombinationRepr) -> Result<Self> {
        let mut out = BurnsideElement::zero(repr.context, repr.equivalence);
        for term in repr.terms {
            out.add_term(term.label, term.coefficient)?;
        }
        Ok(out)
    }
}

/// `|W_M/W_K| = |W_M| / |W_K|`.
pub fn transitive_size(label: &ClassLabel) -> u64 {
    parabolic_order(label.context) / parabolic_order(label.representative)
}

/// `Θ`: sends `[x_K^J]` to `W_J/W_K`, keeping coefficients.
pub fn theta(v: &ClassVector) -> BurnsideElement {
    BurnsideElement {
        context: v.context(),
        equivalence: v.equivalence(),
        coeffs: v.terms().clone(),
    }
}

/// Both paths around one square, evaluated on one basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareMismatch {
    pub input: ClassLabel,
    pub via_algebra: BurnsideElement,
    pub via_burnside: BurnsideElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareReport {
    pub lower: SimpleSubset,
    pub upper: SimpleSubset,
    pub equivalence: Equivalence,
    pub restriction: Vec<SquareMismatch>,
    pub induction: Vec<SquareMismatch>,
    pub holds: bool,
}

/// Whether `Θ` carries products to products in the same or the reversed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwiningReport {
    pub context: SimpleSubset,
    pub equivalence: Equivalence,
    pub pairs: usize,
    pub order_preserving_failures: Vec<(ClassLabel, ClassLabel)>,
    pub order_reversing_failures: Vec<(ClassLabel, ClassLabel)>,
    pub is_homomorphism: bool,
    pub is_anti_homomorphism: bool,
}

fn expect_context(v: &BurnsideElement, context: SimpleSubset) -> Result<()> {
    if v.context() != context {
        return Err(Error::ContextMismatch {
            expected: format!("{{{context}}}"),
            found: format!("{{{}}}", v.context()),
        });
    }
    Ok(())
}

impl WeylGroup {
    /// `W_M/W_J × W_M/W_K = Σ_d W_M/W_{d⁻¹(J) ∩ K}` over double coset
    /// representatives `d` of `W_J \ W_M / W_K`.
    fn transitive_product(&self, a: &ClassLabel, b: &ClassLabel) -> Result<BurnsideElement> {
        let context = a.context;
        let mut out = BurnsideElement::zero(context, a.equivalence);
        for d in self.double_coset_reps_parabolic(a.representative, b.representative, context)? {
            let stabilizer = image_meet(&d.inverse(), a.representative, b.representative);
            out.add_term(class_label(stabilizer, context, a.equivalence)?, 1)?;
        }
        Ok(out)
    }

    /// Multiplication in `PB(W_M)`.
    pub fn mackey_product(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        if a.context != b.context || a.equivalence != b.equivalence {
            return Err(Error::ContextMismatch {
                expected: format!("{{{}}}/{}", a.context, a.equivalence),
                found: format!("{{{}}}/{}", b.context, b.equivalence),
            });
        }
        self.check(a.context)?;
        let mut out = BurnsideElement::zero(a.context, a.equivalence);
        for (x, &cx) in &a.coeffs {
            for (y, &cy) in &b.coeffs {
                let c = cx.checked_mul(cy).ok_or(Error::Overflow)?;
                out = out.checked_add(&self.transitive_product(x, y)?.checked_scale(c)?)?;
            }
        }
        Ok(out)
    }

    /// `res_{W_J}^{W_M}(W_M/W_K) = Σ_{d} W_J/W_{J ∩ d⁻¹(K)}` over the double
    /// coset representatives of `W_K \ W_M / W_J` taken inside `W_M`.
    pub fn res_pb(&self, v: &BurnsideElement, ctx: TransferContext) -> Result<BurnsideElement> {
        expect_context(v, ctx.upper())?;
        let mut out = BurnsideElement::zero(ctx.lower(), v.equivalence);
        for (label, &c) in &v.coeffs {
            let k = label.representative;
            for d in self.double_coset_reps_parabolic(k, ctx.lower(), ctx.upper())? {
                let meet = image_meet(&d.inverse(), k, ctx.lower());
                out.add_term(class_label(meet, ctx.lower(), v.equivalence)?, c)?;
            }
        }
        Ok(out)
    }

    /// `ind_{W_J}^{W_M}(W_J/W_K) = W_M/W_K`.
    pub fn ind_pb(&self, v: &BurnsideElement, ctx: TransferContext) -> Result<BurnsideElement> {
        expect_context(v, ctx.lower())?;
        let mut out = BurnsideElement::zero(ctx.upper(), v.equivalence);
        for (label, &c) in &v.coeffs {
            out.add_term(class_label(label.representative, ctx.upper(), v.equivalence)?, c)?;
        }
        Ok(out)
    }

    /// Evaluates `Θ_J ∘ res` against `res ∘ Θ_M` on every basis class of
    /// `Σ_{W_M}`, and `Θ_M ∘ ind` against `ind ∘ Θ_J` on every basis class of
    /// `Σ_{W_J}`.
    pub fn commuting_square_check(&self, ctx: TransferContext, equivalence: Equivalence) -> Result<SquareReport> {
        let mut restriction = Vec::new();
        for label in class_basis(ctx.upper(), equivalence) {
            let v = ClassVector::basis(label.clone());
            let via_algebra = theta(&self.restrict(&v, ctx)?);
            let via_burnside = self.res_pb(&theta(&v), ctx)?;
            if via_algebra != via_burnside {
                restriction.push(SquareMismatch {
                    input: label,
                    via_algebra,
                    via_burnside,
                });
            }
        }
        let mut induction = Vec::new();
        for label in class_basis(ctx.lower(), equivalence) {
            let v = ClassVector::basis(label.clone());
            let via_algebra = theta(&self.induce(&v, ctx)?);
            let via_burnside = self.ind_pb(&theta(&v), ctx)?;
            if via_algebra != via_burnside {
                induction.push(SquareMismatch {
                    input: label,
                    via_algebra,
                    via_burnside,
                });
            }
        }
        Ok(SquareReport {
            lower: ctx.lower(),
            upper: ctx.upper(),
            equivalence,
            holds: restriction.is_empty() && induction.is_empty(),
            restriction,
            induction,
        })
    }

    /// Compares `Θ(a·b)` with `Θ(a)·Θ(b)` and with `Θ(b)·Θ(a)` on all basis pairs.
    pub fn intertwining_report(&self, context: SimpleSubset, equivalence: Equivalence) -> Result<IntertwiningReport> {
        let basis = class_basis(context, equivalence);
        let mut order_preserving_failures = Vec::new();
        let mut order_reversing_failures = Vec::new();
        for a in &basis {
            for b in &basis {
                let image = theta(&self.parabolic_class_product(a, b, context)?);
                let ta = BurnsideElement::transitive(a.clone());
                let tb = BurnsideElement::transitive(b.clone());
                if image != self.mackey_product(&ta, &tb)? {
                    order_preserving_failures.push((a.clone(), b.clone()));
                }
                if image != self.mackey_product(&tb, &ta)? {
                    order_reversing_failures.push((a.clone(), b.clone()));
                }
            }
        }
        Ok(IntertwiningReport {
            context,
            equivalence,
            pairs: basis.len() * basis.len(),
            is_homomorphism: order_preserving_failures.is_empty(),
            is_anti_homomorphism: order_reversing_failures.is_empty(),
            order_preserving_failures,
            order_reversing_failures,
        })
    }
}
