//! Acceptance criteria, one line of output per criterion.
//!
//! All comparisons are exact integer equalities.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use descent::cli::{self, Table, ConstantRow};
use descent::solomon::convolve;
use descent::verify::expand;
use descent::weyl::conjugate_subset;
use descent::{class_basis, class_label, ClassVector, Equivalence, GroupAlgebraElement, SimpleSubset, TransferContext, WeylGroup};

type Check = Result<String, String>;

fn groups(max_rank: usize) -> Vec<WeylGroup> {
    (1..=max_rank).map(|n| WeylGroup::new(n).unwrap()).collect()
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn lift<T>(r: descent::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// 1. `x_J x_K = Σ_{L⊆K} a_JKL x_L` in `Z[W]`, all `J, K`, `n ≤ 5`.
fn solomon_identity() -> Check {
    let mut pairs = 0;
    for g in groups(5) {
        let xs: Vec<GroupAlgebraElement> = g.all_subsets().into_iter().map(|j| g.x_of(j).unwrap()).collect();
        for (j, xj) in g.all_subsets().into_iter().zip(&xs) {
            for (k, xk) in g.all_subsets().into_iter().zip(&xs) {
                let product = lift(convolve(xj, xk))?;
                let mut rhs = GroupAlgebraElement::zero(g.rank());
                for l in k.subsets() {
                    let a = lift(g.structure_constant(j, k, l))? as i64;
                    rhs = lift(rhs.checked_add(&lift(xs[l.mask() as usize].checked_scale(a))?))?;
                }
                ensure(product == rhs, || format!("n={} J={j:?} K={k:?}", g.rank()))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

/// 2. `x_K = x_J x_K^J` for every chain `K ⊆ J ⊆ Π`, `n ≤ 5`.
fn coset_factorization() -> Check {
    let mut chains = 0;
    for g in groups(5) {
        for j in g.all_subsets() {
            let xj = lift(g.x_of(j))?;
            for k in j.subsets() {
                let rhs = lift(convolve(&xj, &lift(g.x_parabolic(k, j))?))?;
                ensure(lift(g.x_of(k))? == rhs, || format!("n={} K={k:?} J={j:?}", g.rank()))?;
                chains += 1;
            }
        }
    }
    Ok(format!("{chains} chains"))
}

/// 3. `a_KNP = Σ_{M⊆J} a_KJM a^J_MNP`, all admissible `K, N, J, P`, `n ≤ 5`.
fn constant_factorization() -> Check {
    let mut cases = 0;
    for g in groups(5) {
        for j in g.all_subsets() {
            for n in j.subsets() {
                for k in g.all_subsets() {
                    for p in n.subsets() {
                        let lhs = lift(g.structure_constant(k, n, p))?;
                        let mut rhs = 0;
                        for m in j.subsets() {
                            rhs += lift(g.structure_constant(k, j, m))?
                                * lift(g.structure_constant_parabolic(m, n, p, j))?;
                        }
                        ensure(lhs == rhs, || {
                            format!("n={} K={k:?} N={n:?} J={j:?} P={p:?}: {lhs} vs {rhs}", g.rank())
                        })?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} (K,N,J,P) tuples"))
}

/// 4. Class products over `Π` do not depend on representatives, `n ≤ 4`.
fn well_definedness() -> Check {
    let mut pairs = 0;
    for g in groups(4) {
        let report = lift(g.well_definedness_report(g.full(), Equivalence::Full))?;
        ensure(report.counterexamples.is_empty(), || {
            format!("n={}: {} counterexamples", g.rank(), report.counterexamples.len())
        })?;
        pairs += report.representative_pairs;
    }
    Ok(format!("{pairs} representative pairs, no counterexamples"))
}

/// 5. `ind_J^M([x_K^J]) = [x_K^M]` through convolution and decomposition, `n ≤ 4`.
fn induction_closed_form() -> Check {
    let mut cases = 0;
    for g in groups(4) {
        for m in g.all_subsets() {
            for j in m.subsets() {
                let ctx = lift(TransferContext::new(j, m))?;
                for k in j.subsets() {
                    // honest product, independent of `induce`
                    let product = lift(convolve(&lift(g.x_parabolic(j, m))?, &lift(g.x_parabolic(k, j))?))?;
                    ensure(product == lift(g.x_parabolic(k, m))?, || {
                        format!("n={} product K={k:?} J={j:?} M={m:?}", g.rank())
                    })?;
                    let input = ClassVector::basis(lift(class_label(k, j, Equivalence::Full))?);
                    let image = lift(g.induce(&input, ctx))?;
                    let expected = ClassVector::basis(lift(class_label(k, m, Equivalence::Full))?);
                    ensure(image == expected, || format!("n={} K={k:?} J={j:?} M={m:?}", g.rank()))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (K,J,M) triples"))
}

/// 6. Both restriction formulas agree on every basis class, `n ≤ 4`.
fn restriction_forms() -> Check {
    let mut cases = 0;
    for g in groups(4) {
        for eq in [Equivalence::Full, Equivalence::Parabolic] {
            for m in g.all_subsets() {
                for j in m.subsets() {
                    let ctx = lift(TransferContext::new(j, m))?;
                    for label in class_basis(m, eq) {
                        let v = ClassVector::basis(label.clone());
                        let a = lift(g.restrict(&v, ctx))?;
                        let b = lift(g.restrict_alt(&v, ctx))?;
                        ensure(a == b, || format!("n={} {label} J={j:?} M={m:?}: {a} vs {b}", g.rank()))?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} basis restrictions"))
}

/// 7. Both squares through the Burnside ring commute, all `J ⊆ M`, `n ≤ 4`.
fn commuting_squares() -> Check {
    let mut contexts = 0;
    for g in groups(4) {
        for m in g.all_subsets() {
            for j in m.subsets() {
                let ctx = lift(TransferContext::new(j, m))?;
                let report = lift(g.commuting_square_check(ctx, Equivalence::Full))?;
                ensure(report.restriction.is_empty() && report.induction.is_empty(), || {
                    format!("n={} J={j:?} M={m:?}: {report:?}", g.rank())
                })?;
                contexts += 1;
            }
        }
    }
    Ok(format!("{contexts} (J,M) pairs, both squares"))
}

/// Number of partitions of `m`, by the standard recurrence on the largest part.
fn partition_count(m: usize) -> usize {
    let mut ways = vec![0usize; m + 1];
    ways[0] = 1;
    for part in 1..=m {
        for total in part..=m {
            ways[total] += ways[total - part];
        }
    }
    ways[m]
}

/// 8. Dimension, identity element, and mass of the structure constants.
fn structural_counts() -> Check {
    let expected_dims = [(2, 3), (3, 5), (4, 7), (5, 11)];
    for (n, dim) in expected_dims {
        let g = WeylGroup::new(n).unwrap();
        let basis = class_basis(g.full(), Equivalence::Full);
        // orbits of subsets under W, by brute force
        let orbits: BTreeSet<BTreeSet<SimpleSubset>> = g
            .all_subsets()
            .into_iter()
            .map(|j| g.elements().iter().filter_map(|w| conjugate_subset(w, j)).collect())
            .collect();
        ensure(basis.len() == dim && orbits.len() == dim && partition_count(n + 1) == dim, || {
            format!("n={n}: basis {} orbits {} p(n+1) {}", basis.len(), orbits.len(), partition_count(n + 1))
        })?;
    }
    for g in groups(5) {
        let identity = lift(class_label(g.full(), g.full(), Equivalence::Full))?;
        for a in class_basis(g.full(), Equivalence::Full) {
            let unit = ClassVector::basis(a.clone());
            ensure(lift(g.class_product(&identity, &a))? == unit, || format!("left unit {a}"))?;
            ensure(lift(g.class_product(&a, &identity))? == unit, || format!("right unit {a}"))?;
        }
        for j in g.all_subsets() {
            let xj = lift(g.min_coset_reps(j))?.len() as u64;
            for k in g.all_subsets() {
                let xk = lift(g.min_coset_reps(k))?.len() as u64;
                let mut mass = 0;
                for l in k.subsets() {
                    mass += lift(g.structure_constant(j, k, l))? * lift(g.min_coset_reps(l))?.len() as u64;
                }
                ensure(mass == xj * xk, || format!("n={} J={j:?} K={k:?}: {mass} vs {}", g.rank(), xj * xk))?;
            }
        }
    }
    Ok("dims 3,5,7,11; two-sided identity; mass identity".into())
}

/// 9. The worked example in `A_2`, and byte-identical CLI output.
fn worked_fixture() -> Check {
    let g = WeylGroup::new(2).unwrap();
    let a1 = g.subset(&[1]).unwrap();
    ensure(lift(g.structure_constant(a1, a1, g.empty()))? == 1, || "a(a1,a1,∅)".into())?;
    ensure(lift(g.structure_constant(a1, a1, a1))? == 1, || "a(a1,a1,a1)".into())?;

    let x1 = lift(g.x_of(a1))?;
    let oracle = lift(expand(&g, [(g.empty(), 1), (a1, 1)], g.full()))?;
    ensure(lift(convolve(&x1, &x1))? == oracle, || "x_a1 squared".into())?;

    let class = lift(class_label(a1, g.full(), Equivalence::Full))?;
    let mut expected = ClassVector::basis(lift(class_label(g.empty(), g.full(), Equivalence::Full))?);
    lift(expected.add_term(class.clone(), 1))?;
    ensure(lift(g.class_product(&class, &class))? == expected, || "[x_a1]^2".into())?;

    let args = ["descent", "constants", "--rank", "2", "--J", "a1", "--K", "a1"];
    let first = cli::run(args, 8);
    let second = cli::run(args, 8);
    ensure(first.code == 0, || format!("exit {}: {}", first.code, first.stderr))?;
    ensure(first.stdout.as_bytes() == second.stdout.as_bytes(), || "CLI output differs between runs".into())?;
    let table: Table<ConstantRow> = serde_json::from_str(&first.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<(SimpleSubset, u64)> = table.rows.iter().map(|r| (r.l, r.coefficient)).collect();
    ensure(rows == vec![(g.empty(), 1), (a1, 1)], || format!("rows {rows:?}"))?;
    Ok("a = 1, 1; [x_a1]^2 = [x_∅] + [x_a1]; CLI stable".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("1 solomon identity (n<=5)", solomon_identity),
        ("2 x_K = x_J x_K^J (n<=5)", coset_factorization),
        ("3 structure constant factorization (n<=5)", constant_factorization),
        ("4 class product well-defined over full context (n<=4)", well_definedness),
        ("5 induction closed form (n<=4)", induction_closed_form),
        ("6 restriction two-form agreement (n<=4)", restriction_forms),
        ("7 commuting squares (n<=4)", commuting_squares),
        ("8 structural counts", structural_counts),
        ("9 A_2 worked fixture and CLI determinism", worked_fixture),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(summary) => println!("PASS criterion {name}: {summary} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{:.2?}]", start.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
