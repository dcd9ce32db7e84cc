//! Induction and restriction between `Σ_{W_J}` and `Σ_{W_M}` for `J ⊆ M`.

use serde::{Deserialize, Serialize};

use crate::class_algebra::{class_label, ClassVector};
use crate::cosets::WeylGroup;
use crate::error::{Error, Result};
use crate::solomon::convolve;
use crate::weyl::{image_meet, SimpleSubset};

/// A pair `J ⊆ M ⊆ Π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransferContext {
    lower: SimpleSubset,
    upper: SimpleSubset,
}

impl TransferContext {
    pub fn new(lower: SimpleSubset, upper: SimpleSubset) -> Result<Self> {
        if lower.rank() != upper.rank() {
            return Err(Error::RankMismatch {
                left: lower.rank(),
                right: upper.rank(),
            });
        }
        if !lower.is_subset_of(&upper) {
            return Err(Error::NotSubset {
                inner: format!("{{{lower}}}"),
                outer: format!("{{{upper}}}"),
            });
        }
        Ok(TransferContext { lower, upper })
    }

    pub fn lower(&self) -> SimpleSubset {
        self.lower
    }

    pub fn upper(&self) -> SimpleSubset {
        self.upper
    }
}

fn expect_context(v: &ClassVector, context: SimpleSubset) -> Result<()> {
    if v.context() != context {
        return Err(Error::ContextMismatch {
            expected: format!("{{{context}}}"),
            found: format!("{{{}}}", v.context()),
        });
    }
    Ok(())
}

impl WeylGroup {
    /// `ind_J^M([x_K^J]) = [x_J^M][x_K^J]`, extended linearly.
    ///
    /// The product `x_J^M x_K^J` is formed in the group algebra and decomposed
    /// over the `x_P^M`; the result must be the single class `[x_K^M]`, and a
    /// different outcome is reported as an invariant violation.
    pub fn induce(&self, v: &ClassVector, ctx: TransferContext) -> Result<ClassVector> {
        expect_context(v, ctx.lower)?;
        let eq = v.equivalence();
        let top = self.x_parabolic(ctx.lower, ctx.upper)?;
        let mut out = ClassVector::zero(ctx.upper, eq);
        for (label, &c) in v.terms() {
            let k = label.representative;
            let product = convolve(&top, &self.x_parabolic(k, ctx.lower)?)?;
            let coeffs = self.decompose(&product, ctx.upper)?;
            let image = self.class_projection(&coeffs, ctx.upper, eq)?;
            let closed_form = ClassVector::basis(class_label(k, ctx.upper, eq)?);
            if image != closed_form {
                return Err(Error::InvariantViolation(format!(
                    "induction of {label} gave {image}, expected {closed_form}"
                )));
            }
            out = out.checked_add(&image.checked_scale(c)?)?;
        }
        Ok(out)
    }

    /// `res_J^M([x_K^M]) = Σ_{d ∈ W_M ∩ X_KJ} [x^J_{J ∩ d⁻¹(K)}]`, extended linearly.
    pub fn restrict(&self, v: &ClassVector, ctx: TransferContext) -> Result<ClassVector> {
        expect_context(v, ctx.upper)?;
        let eq = v.equivalence();
        let mut out = ClassVector::zero(ctx.lower, eq);
        for (label, &c) in v.terms() {
            let k = label.representative;
            for d in self.global_double_reps_inside(k, ctx.lower, ctx.upper)? {
                let meet = image_meet(&d.inverse(), k, ctx.lower);
                out.add_term(class_label(meet, ctx.lower, eq)?, c)?;
            }
        }
        Ok(out)
    }

    /// The same map through `Σ_{d ∈ W_M ∩ X_JK} [x^J_{J ∩ d(K)}]`.
    pub fn restrict_alt(&self, v: &ClassVector, ctx: TransferContext) -> Result<ClassVector> {
        expect_context(v, ctx.upper)?;
        let eq = v.equivalence();
        let mut out = ClassVector::zero(ctx.lower, eq);
        for (label, &c) in v.terms() {
            let k = label.representative;
            for d in self.global_double_reps_inside(ctx.lower, k, ctx.upper)? {
                let meet = image_meet(&d, k, ctx.lower);
                out.add_term(class_label(meet, ctx.lower, eq)?, c)?;
            }
        }
        Ok(out)
    }

    /// `W_M ∩ X_AB` with `X_AB` the double coset representatives of the whole group.
    pub(crate) fn global_double_reps_inside(
        &self,
        left: SimpleSubset,
        right: SimpleSubset,
        ambient: SimpleSubset,
    ) -> Result<Vec<crate::weyl::Permutation>> {
        self.check(ambient)?;
        let inside = self.parabolic_subgroup(ambient)?;
        Ok(self
            .double_coset_reps(left, right)?
            .into_iter()
            .filter(|d| inside.binary_search(d).is_ok())
            .collect())
    }
}
