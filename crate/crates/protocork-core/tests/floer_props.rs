//! Property tests for the graded-module layer: grading laws, torsion
//! orders, exactness shapes, and the arithmetic gate.

use num_rational::Ratio;
use proptest::prelude::*;
use protocork_core::floer::{
    bar_gr, binomial, cobordism_map_degree, dimension_additivity_check, exact_sequence_check,
    exact_sequence_check_with, formal_dimension, ms_gate, reduced_membership_hint, split_package,
    standard_package, torsion_order, u_shift, CyclicSummand, FiniteUModule, Flavor, SequenceMaps,
};

type Rational = Ratio<i64>;

fn reduced_strategy() -> impl Strategy<Value = FiniteUModule> {
    proptest::collection::vec(((-20i64..=20), (1u32..=9)), 0..6).prop_map(|raw| {
        FiniteUModule::new(
            raw.into_iter()
                .map(|(num, order)| CyclicSummand {
                    grading: Rational::new(num, 2),
                    order,
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bar_gr_is_antisymmetric_and_additive(
        fa in 0u32..=30, i in -50i64..=50,
        fb in 0u32..=30, j in -50i64..=50,
        fc in 0u32..=30, k in -50i64..=50,
    ) {
        prop_assert_eq!(bar_gr(fa, i, fb, j), -bar_gr(fb, j, fa, i));
        prop_assert_eq!(
            bar_gr(fa, i, fc, k),
            bar_gr(fa, i, fb, j) + bar_gr(fb, j, fc, k)
        );
    }

    #[test]
    fn dimension_additivity_holds_everywhere(b1 in 0u32..=10, f in 0u32..=10, i in -20i64..=20) {
        let f = f.min(b1);
        prop_assert!(dimension_additivity_check(b1, f, i));
        let d = formal_dimension(b1, f, i);
        // Adjacent levels on one side differ by the degree of U.
        if i > 0 {
            prop_assert_eq!(formal_dimension(b1, f, i - 1), d + 2);
        }
        if i < -1 {
            prop_assert_eq!(formal_dimension(b1, f, i + 1), d - 2);
        }
    }

    #[test]
    fn torsion_order_obeys_the_shift_law(m in reduced_strategy(), raw in proptest::collection::vec(((0usize..6), (0u32..4), (-5i64..=5)), 0..5), a in 0u32..6) {
        let element: Vec<(usize, u32, i64)> = raw
            .into_iter()
            .filter(|&(s, _, _)| s < m.len())
            .collect();
        let t = torsion_order(&m, &element);
        let shifted = u_shift(&element, a);
        prop_assert_eq!(torsion_order(&m, &shifted), t.saturating_sub(a));
        let max_order = m.summands().iter().map(|s| s.order).max().unwrap_or(0);
        prop_assert!(t <= max_order);
    }

    #[test]
    fn exactness_holds_for_random_reduced_parts_and_breaks_under_corruption(
        b1 in 0u32..=5,
        reduced in reduced_strategy(),
        flip in any::<proptest::sample::Index>(),
    ) {
        let check = split_package(b1, Flavor::Check, reduced.clone()).unwrap();
        let hat = split_package(b1, Flavor::Hat, reduced).unwrap();
        let bar = standard_package(b1, Flavor::Bar);
        prop_assert_eq!(exact_sequence_check(&check, &hat, &bar), Ok(true));
        let mut maps = SequenceMaps::standard_model(&hat);
        let total = maps.j_image_standard.len()
            + maps.j_image_reduced.len()
            + maps.p_kernel_standard.len()
            + maps.p_kernel_reduced.len();
        let k = flip.index(total);
        let (a, b, c) = (
            maps.j_image_standard.len(),
            maps.j_image_standard.len() + maps.j_image_reduced.len(),
            maps.j_image_standard.len() + maps.j_image_reduced.len() + maps.p_kernel_standard.len(),
        );
        if k < a {
            maps.j_image_standard[k] = !maps.j_image_standard[k];
        } else if k < b {
            maps.j_image_reduced[k - a] = !maps.j_image_reduced[k - a];
        } else if k < c {
            maps.p_kernel_standard[k - b] = !maps.p_kernel_standard[k - b];
        } else {
            maps.p_kernel_reduced[k - c] = !maps.p_kernel_reduced[k - c];
        }
        prop_assert_eq!(exact_sequence_check_with(&check, &hat, &bar, &maps), Ok(false));
    }

    #[test]
    fn gate_is_exactly_the_inequality(
        c1 in -100i64..=100,
        chi in -100i64..=100,
        sigma in -100i64..=100,
        d_delta in 0u32..=20,
    ) {
        let g = ms_gate(c1, chi, sigma, d_delta);
        prop_assert_eq!(g.d, Rational::new(c1 - 2 * chi - 3 * sigma, 4));
        prop_assert_eq!(g.passes, g.d >= Rational::from_integer(2 * i64::from(d_delta)));
    }

    #[test]
    fn degree_is_dimension_shift_plus_b1_correction(
        c1 in -40i64..=40, chi in -40i64..=40, sigma in -40i64..=40,
        b_in in 0i64..=8, b_out in 0i64..=8,
    ) {
        let d = cobordism_map_degree(c1, chi, sigma, b_in, b_out);
        let gate = ms_gate(c1, chi, sigma, 0);
        prop_assert_eq!(d, gate.d - Rational::new(b_out - b_in, 2));
    }

    #[test]
    fn cancelling_tower_parts_look_reduced(
        coords in proptest::collection::vec(((0usize..4), (-6i64..=6), (-5i64..=5)), 0..6)
    ) {
        let mut doubled = coords.clone();
        doubled.extend(coords.iter().map(|&(t, p, c)| (t, p, -c)));
        prop_assert!(reduced_membership_hint(&doubled));
        let lone: Vec<(usize, i64, i64)> = vec![(0, 0, 1)];
        prop_assert!(!reduced_membership_hint(&lone));
    }
}

#[test]
fn tower_multiplicities_total_the_rank_of_the_exterior_algebra() {
    for b1 in 0..=8u32 {
        for flavor in [Flavor::Hat, Flavor::Check, Flavor::Bar] {
            let p = standard_package(b1, flavor);
            assert_eq!(p.standard.len() as u32, b1 + 1);
            let total: u64 = p.standard.iter().map(|t| t.multiplicity).sum();
            assert_eq!(total, 1 << b1);
            for (k, t) in p.standard.iter().enumerate() {
                assert_eq!(t.multiplicity, binomial(b1, k as u32));
            }
        }
    }
}
