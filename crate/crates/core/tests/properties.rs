use std::collections::BTreeSet;

use descent::burnside::{theta, transitive_size, BurnsideElement};
use descent::weyl::{all_roots, conjugate_subset, parabolic_order};
use descent::{
    class_basis, class_label, class_of, convolve, ClassVector, Equivalence, Permutation, SimpleSubset,
    TransferContext, WeylGroup,
};
use proptest::prelude::*;

fn permutation(rank: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=rank as u8 + 1).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

proptest! {
    #[test]
    fn length_is_subadditive_with_parity(p in permutation(6), q in permutation(6)) {
        let pq = p.compose(&q).unwrap();
        prop_assert!(pq.length() <= p.length() + q.length());
        prop_assert_eq!(pq.length() % 2, (p.length() + q.length()) % 2);
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn inverse_undoes_the_root_action(p in permutation(5)) {
        let inv = p.inverse();
        let mut images = BTreeSet::new();
        for r in all_roots(5) {
            let image = p.act_on_root(r).unwrap();
            prop_assert_eq!(inv.act_on_root(image).unwrap(), r);
            images.insert(image);
        }
        prop_assert_eq!(images.len(), all_roots(5).len());
    }

    #[test]
    fn class_vectors_combine_linearly(coeffs in proptest::collection::vec(-4i64..=4, 5), c in -3i64..=3) {
        let g = WeylGroup::new(3).unwrap();
        let basis = class_basis(g.full(), Equivalence::Full);
        let mut v = ClassVector::zero(g.full(), Equivalence::Full);
        for (label, &a) in basis.iter().zip(&coeffs) {
            v.add_term(label.clone(), a).unwrap();
        }
        let j = g.subset(&[1, 3]).unwrap();
        let ctx = TransferContext::new(j, g.full()).unwrap();
        let scaled = g.restrict(&v.checked_scale(c).unwrap(), ctx).unwrap();
        prop_assert_eq!(scaled, g.restrict(&v, ctx).unwrap().checked_scale(c).unwrap());
        let doubled = g.restrict(&v.checked_add(&v).unwrap(), ctx).unwrap();
        prop_assert_eq!(doubled, g.restrict(&v, ctx).unwrap().checked_scale(2).unwrap());

        let identity = ClassVector::basis(class_label(g.full(), g.full(), Equivalence::Full).unwrap());
        prop_assert_eq!(g.multiply(&identity, &v).unwrap(), v.clone());
        let json = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<ClassVector>(&json).unwrap(), v);
    }
}

#[test]
fn class_of_is_an_orbit_invariant() {
    for rank in 1..=5 {
        let g = WeylGroup::new(rank).unwrap();
        for j in g.all_subsets() {
            let mut orbit = BTreeSet::new();
            for w in g.elements() {
                if let Some(k) = conjugate_subset(w, j) {
                    assert_eq!(class_of(k), class_of(j));
                    orbit.insert(k);
                }
            }
            for k in g.all_subsets() {
                assert_eq!(orbit.contains(&k), class_of(k) == class_of(j), "n={rank} J={j:?} K={k:?}");
            }
        }
    }
}

#[test]
fn parabolic_orders_divide_the_group_order() {
    for rank in 1..=6 {
        let g = WeylGroup::new(rank).unwrap();
        for j in g.all_subsets() {
            let order = g.parabolic_subgroup(j).unwrap().len();
            assert_eq!(order as u64, parabolic_order(j));
            assert_eq!(g.order() % order, 0);
        }
    }
}

#[test]
fn class_product_is_associative() {
    for rank in 1..=4 {
        let g = WeylGroup::new(rank).unwrap();
        let basis = class_basis(g.full(), Equivalence::Full);
        for a in &basis {
            for b in &basis {
                let ab = g.class_product(a, b).unwrap();
                for c in &basis {
                    let vc = ClassVector::basis(c.clone());
                    let left = g.multiply(&ab, &vc).unwrap();
                    let bc = g.class_product(b, c).unwrap();
                    let right = g.multiply(&ClassVector::basis(a.clone()), &bc).unwrap();
                    assert_eq!(left, right, "n={rank} {a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn dimension_is_the_number_of_orbits() {
    for rank in 1..=6 {
        let g = WeylGroup::new(rank).unwrap();
        let orbits: BTreeSet<BTreeSet<SimpleSubset>> = g
            .all_subsets()
            .into_iter()
            .map(|j| g.elements().iter().filter_map(|w| conjugate_subset(w, j)).collect())
            .collect();
        assert_eq!(class_basis(g.full(), Equivalence::Full).len(), orbits.len());
        assert_eq!(
            class_basis(g.full(), Equivalence::Full).len(),
            descent::Partition::all(rank as u32 + 1).len()
        );
    }
}

/// Projecting the group-algebra product to classes gives the class product,
/// whichever representatives are multiplied.
#[test]
fn class_product_is_the_projection_of_the_group_algebra_product() {
    for rank in 1..=5 {
        let g = WeylGroup::new(rank).unwrap();
        for j in g.all_subsets() {
            for k in g.all_subsets() {
                let coeffs = g.solomon_decompose(j, k).unwrap();
                let projected = g.class_projection(&coeffs, g.full(), Equivalence::Full).unwrap();
                let a = class_label(j, g.full(), Equivalence::Full).unwrap();
                let b = class_label(k, g.full(), Equivalence::Full).unwrap();
                assert_eq!(projected, g.class_product(&a, &b).unwrap(), "n={rank} J={j:?} K={k:?}");
                assert_eq!(
                    g.parabolic_class_product(&a, &b, g.full()).unwrap(),
                    g.class_product(&a, &b).unwrap()
                );
            }
        }
    }
}

#[test]
fn class_level_factorization_through_a_parabolic() {
    let g = WeylGroup::new(4).unwrap();
    for j in g.all_subsets() {
        for n in j.subsets() {
            for k in g.all_subsets() {
                let mut via_j = ClassVector::zero(g.full(), Equivalence::Full);
                for p in n.subsets() {
                    let mut c = 0;
                    for m in j.subsets() {
                        c += g.structure_constant(k, j, m).unwrap()
                            * g.structure_constant_parabolic(m, n, p, j).unwrap();
                    }
                    via_j
                        .add_term(class_label(p, g.full(), Equivalence::Full).unwrap(), c as i64)
                        .unwrap();
                }
                let direct = g.product_of_representatives(k, n, g.full(), Equivalence::Full).unwrap();
                assert_eq!(via_j, direct);
            }
        }
    }
}

#[test]
fn well_definedness_by_context_and_equivalence() {
    for rank in 1..=4 {
        let g = WeylGroup::new(rank).unwrap();
        for context in g.all_subsets() {
            let local = g.well_definedness_report(context, Equivalence::Parabolic).unwrap();
            assert!(local.holds, "n={rank} J={context:?}");
            let full = g.well_definedness_report(context, Equivalence::Full).unwrap();
            // the two notions differ only when a W-class splits into several W_J-classes
            if full.classes == local.classes {
                assert!(full.holds, "n={rank} J={context:?}");
            }
        }
        let full = g.well_definedness_report(g.full(), Equivalence::Full).unwrap();
        assert!(full.holds);
    }
}

#[test]
fn induction_is_transitive_and_has_its_closed_form() {
    for rank in 1..=4 {
        let g = WeylGroup::new(rank).unwrap();
        for eq in [Equivalence::Full, Equivalence::Parabolic] {
            for m in g.all_subsets() {
                for j in m.subsets() {
                    let inner = TransferContext::new(j, m).unwrap();
                    let outer = TransferContext::new(m, g.full()).unwrap();
                    let direct = TransferContext::new(j, g.full()).unwrap();
                    for label in class_basis(j, eq) {
                        let v = ClassVector::basis(label.clone());
                        let stepwise = g.induce(&g.induce(&v, inner).unwrap(), outer).unwrap();
                        assert_eq!(stepwise, g.induce(&v, direct).unwrap());
                        assert_eq!(
                            g.induce(&v, inner).unwrap(),
                            ClassVector::basis(class_label(label.representative, m, eq).unwrap())
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn burnside_identity_and_point_counts() {
    for rank in 1..=4 {
        let g = WeylGroup::new(rank).unwrap();
        for m in g.all_subsets() {
            let basis = class_basis(m, Equivalence::Parabolic);
            let top = BurnsideElement::transitive(class_label(m, m, Equivalence::Parabolic).unwrap());
            for a in &basis {
                let x = BurnsideElement::transitive(a.clone());
                assert_eq!(g.mackey_product(&top, &x).unwrap(), x);
                assert_eq!(g.mackey_product(&x, &top).unwrap(), x);
                for b in &basis {
                    let y = BurnsideElement::transitive(b.clone());
                    let xy = g.mackey_product(&x, &y).unwrap();
                    assert_eq!(
                        xy.point_count().unwrap() as u64,
                        transitive_size(a) * transitive_size(b)
                    );
                }
            }
        }
    }
}

#[test]
fn theta_is_a_bijection_and_intertwines_products() {
    for rank in 1..=4 {
        let g = WeylGroup::new(rank).unwrap();
        for m in g.all_subsets() {
            for eq in [Equivalence::Full, Equivalence::Parabolic] {
                let basis = class_basis(m, eq);
                let images: BTreeSet<_> = basis
                    .iter()
                    .map(|l| theta(&ClassVector::basis(l.clone())).terms().keys().cloned().collect::<Vec<_>>())
                    .collect();
                assert_eq!(images.len(), basis.len());
                let report = g.intertwining_report(m, eq).unwrap();
                assert!(report.is_homomorphism, "n={rank} M={m:?} {eq}");
                assert!(report.is_anti_homomorphism, "n={rank} M={m:?} {eq}");
            }
        }
    }
}

#[test]
fn squares_commute_under_parabolic_equivalence() {
    for rank in 1..=4 {
        let g = WeylGroup::new(rank).unwrap();
        for m in g.all_subsets() {
            for j in m.subsets() {
                let ctx = TransferContext::new(j, m).unwrap();
                assert!(g.commuting_square_check(ctx, Equivalence::Parabolic).unwrap().holds);
            }
        }
    }
}

#[test]
fn group_algebra_mass_matches_coset_counts() {
    let g = WeylGroup::new(4).unwrap();
    for j in g.all_subsets() {
        for k in g.all_subsets() {
            let product = convolve(&g.x_of(j).unwrap(), &g.x_of(k).unwrap()).unwrap();
            let expected = g.min_coset_reps(j).unwrap().len() * g.min_coset_reps(k).unwrap().len();
            assert_eq!(product.mass().unwrap() as usize, expected);
        }
    }
}
