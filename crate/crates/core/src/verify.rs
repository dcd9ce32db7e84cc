//! Named identity sweeps, one outcome row per checked case.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::class_algebra::{class_basis, ClassVector, Equivalence};
use crate::cosets::WeylGroup;
use crate::error::{Error, Result};
use crate::solomon::{convolve, GroupAlgebraElement};
use crate::transfer::TransferContext;
use crate::weyl::SimpleSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Suite {
    /// `x_J x_K = Σ_L a_JKL x_L`, with the constants also recovered by elimination.
    #[serde(rename = "solomon")]
    Solomon,
    /// `x_K = x_J x_K^J` for `K ⊆ J`.
    #[serde(rename = "lemma22")]
    CosetFactorization,
    /// `a_KNP = Σ_{M⊆J} a_KJM a^J_MNP`.
    #[serde(rename = "theorem21")]
    ConstantFactorization,
    /// Class products do not depend on the chosen representatives.
    #[serde(rename = "well-defined")]
    WellDefined,
    /// Restriction forms agree, induction has its closed form, both squares
    /// through the Burnside ring commute, and `Θ` respects products.
    #[serde(rename = "theorem25")]
    Transfer,
    #[serde(rename = "all")]
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["solomon", "lemma22", "theorem21", "well-defined", "theorem25", "all"];

    fn name(self) -> &'static str {
        match self {
            Suite::Solomon => "solomon",
            Suite::CosetFactorization => "lemma22",
            Suite::ConstantFactorization => "theorem21",
            Suite::WellDefined => "well-defined",
            Suite::Transfer => "theorem25",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "solomon" => Ok(Suite::Solomon),
            "lemma22" => Ok(Suite::CosetFactorization),
            "theorem21" => Ok(Suite::ConstantFactorization),
            "well-defined" => Ok(Suite::WellDefined),
            "theorem25" => Ok(Suite::Transfer),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?}, expected one of {}",
                Suite::NAMES.join(", ")
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(suite: Suite, case: String, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        suite,
        case,
        passed,
        detail,
    }
}

/// Runs one suite (or all of them). `context` selects the algebra swept by
/// `well-defined`; it defaults to `Π`.
pub fn run_suite(
    g: &WeylGroup,
    suite: Suite,
    equivalence: Equivalence,
    context: Option<SimpleSubset>,
) -> Result<Vec<CheckOutcome>> {
    match suite {
        Suite::Solomon => solomon(g),
        Suite::CosetFactorization => coset_factorization(g),
        Suite::ConstantFactorization => constant_factorization(g),
        Suite::WellDefined => well_defined(g, context.unwrap_or_else(|| g.full()), equivalence),
        Suite::Transfer => transfer(g, equivalence),
        Suite::All => {
            let mut rows = Vec::new();
            for s in [
                Suite::Solomon,
                Suite::CosetFactorization,
                Suite::ConstantFactorization,
                Suite::WellDefined,
                Suite::Transfer,
            ] {
                rows.extend(run_suite(g, s, equivalence, context)?);
            }
            Ok(rows)
        }
    }
}

/// `Σ_{L} c_L x_L^J` as an element of `Z[W]`.
pub fn expand(
    g: &WeylGroup,
    coeffs: impl IntoIterator<Item = (SimpleSubset, i64)>,
    context: SimpleSubset,
) -> Result<GroupAlgebraElement> {
    let mut out = GroupAlgebraElement::zero(g.rank());
    for (l, c) in coeffs {
        out = out.checked_add(&g.x_parabolic(l, context)?.checked_scale(c)?)?;
    }
    Ok(out)
}

fn solomon(g: &WeylGroup) -> Result<Vec<CheckOutcome>> {
    let mut rows = Vec::new();
    for j in g.all_subsets() {
        let xj = g.x_of(j)?;
        for k in g.all_subsets() {
            let product = convolve(&xj, &g.x_of(k)?)?;
            let constants = g.structure_constants(j, k)?;
            let counted = constants
                .iter()
                .map(|(l, &a)| Ok((*l, i64::try_from(a).map_err(|_| Error::Overflow)?)))
                .collect::<Result<Vec<_>>>()?;
            let expected = expand(g, counted.iter().copied(), g.full())?;
            let eliminated = g.solomon_decompose(j, k)?;
            let elimination_agrees = eliminated.iter().map(|(l, c)| (*l, *c)).eq(counted.iter().copied());
            let passed = product == expected && elimination_agrees;
            let detail = if passed {
                format!("{} terms", product.len())
            } else {
                format!("counted {counted:?}, eliminated {eliminated:?}")
            };
            rows.push(outcome(Suite::Solomon, format!("J={{{j}}} K={{{k}}}"), passed, detail));
        }
    }
    Ok(rows)
}

fn coset_factorization(g: &WeylGroup) -> Result<Vec<CheckOutcome>> {
    let mut rows = Vec::new();
    for j in g.all_subsets() {
        let xj = g.x_of(j)?;
        for k in j.subsets() {
            let lhs = g.x_of(k)?;
            let rhs = convolve(&xj, &g.x_parabolic(k, j)?)?;
            let passed = lhs == rhs;
            let detail = format!("|X_K| = {}, product has {} terms", lhs.len(), rhs.len());
            rows.push(outcome(
                Suite::CosetFactorization,
                format!("K={{{k}}} J={{{j}}}"),
                passed,
                detail,
            ));
        }
    }
    Ok(rows)
}

fn constant_factorization(g: &WeylGroup) -> Result<Vec<CheckOutcome>> {
    let mut rows = Vec::new();
    for j in g.all_subsets() {
        for n in j.subsets() {
            for k in g.all_subsets() {
                let report = g.factorization_check(k, n, j)?;
                let detail = report
                    .rows
                    .iter()
                    .filter(|r| r.lhs != r.rhs)
                    .map(|r| format!("P={{{}}}: {} vs {}", r.p, r.lhs, r.rhs))
                    .collect::<Vec<_>>()
                    .join("; ");
                rows.push(outcome(
                    Suite::ConstantFactorization,
                    format!("K={{{k}}} N={{{n}}} J={{{j}}}"),
                    report.holds,
                    detail,
                ));
            }
        }
    }
    Ok(rows)
}

fn well_defined(g: &WeylGroup, context: SimpleSubset, equivalence: Equivalence) -> Result<Vec<CheckOutcome>> {
    let report = g.well_definedness_report(context, equivalence)?;
    if report.holds {
        return Ok(vec![outcome(
            Suite::WellDefined,
            format!("context={{{context}}} equivalence={equivalence}"),
            true,
            format!(
                "{} classes, {} representative pairs",
                report.classes, report.representative_pairs
            ),
        )]);
    }
    Ok(report
        .counterexamples
        .iter()
        .map(|c| {
            outcome(
                Suite::WellDefined,
                format!(
                    "context={{{context}}} {} x {} via {{{}}} x {{{}}}",
                    c.left, c.right, c.left_representative, c.right_representative
                ),
                false,
                format!("canonical {} but found {}", c.canonical, c.found),
            )
        })
        .collect())
}

fn transfer(g: &WeylGroup, equivalence: Equivalence) -> Result<Vec<CheckOutcome>> {
    let mut rows = Vec::new();
    for m in g.all_subsets() {
        for j in m.subsets() {
            let ctx = TransferContext::new(j, m)?;
            let case = format!("J={{{j}}} M={{{m}}}");

            let mut disagreements = Vec::new();
            for label in class_basis(m, equivalence) {
                let v = ClassVector::basis(label.clone());
                let a = g.restrict(&v, ctx)?;
                let b = g.restrict_alt(&v, ctx)?;
                if a != b {
                    disagreements.push(format!("{label}: {a} vs {b}"));
                }
            }
            rows.push(outcome(
                Suite::Transfer,
                format!("{case} restriction forms"),
                disagreements.is_empty(),
                disagreements.join("; "),
            ));

            // `induce` rejects any product that is not the closed form.
            let mut failures = Vec::new();
            for label in class_basis(j, equivalence) {
                if let Err(e) = g.induce(&ClassVector::basis(label.clone()), ctx) {
                    failures.push(format!("{label}: {e}"));
                }
            }
            rows.push(outcome(
                Suite::Transfer,
                format!("{case} induction closed form"),
                failures.is_empty(),
                failures.join("; "),
            ));

            let report = g.commuting_square_check(ctx, equivalence)?;
            let detail = report
                .restriction
                .iter()
                .map(|m| format!("res {}: {} vs {}", m.input, m.via_algebra, m.via_burnside))
                .chain(
                    report
                        .induction
                        .iter()
                        .map(|m| format!("ind {}: {} vs {}", m.input, m.via_algebra, m.via_burnside)),
                )
                .collect::<Vec<_>>()
                .join("; ");
            rows.push(outcome(Suite::Transfer, format!("{case} squares"), report.holds, detail));
        }
        let report = g.intertwining_report(m, equivalence)?;
        rows.push(outcome(
            Suite::Transfer,
            format!("M={{{m}}} theta on products"),
            report.is_homomorphism,
            format!(
                "order-preserving: {}, order-reversing: {}",
                report.is_homomorphism, report.is_anti_homomorphism
            ),
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("theorem99".parse::<Suite>().is_err());
    }

    #[test]
    fn all_suites_pass_at_rank_two() {
        let g = WeylGroup::new(2).unwrap();
        let rows = run_suite(&g, Suite::All, Equivalence::Full, None).unwrap();
        assert!(rows.iter().all(|r| r.passed), "{rows:#?}");
        assert!(rows.iter().any(|r| r.suite == Suite::Transfer));
    }

    #[test]
    fn well_defined_reports_each_counterexample() {
        let g = WeylGroup::new(4).unwrap();
        let context = g.subset(&[1, 3]).unwrap();
        let rows = run_suite(&g, Suite::WellDefined, Equivalence::Full, Some(context)).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| !r.passed));
        let rows = run_suite(&g, Suite::WellDefined, Equivalence::Parabolic, Some(context)).unwrap();
        assert!(rows.iter().all(|r| r.passed));
    }
}
