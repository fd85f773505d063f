use proptest::prelude::*;

use tropkit::arith::{int_to_rat, ratio, QVector, Rat};
use tropkit::bernstein::newton_polytope;
use tropkit::complexes::check_balanced;
use tropkit::polyhedra::{mixed_volume, Polyhedron};
use tropkit::puiseux::{LaurentPoly, PuiseuxScalar};
use tropkit::trop::{
    intersection_number_transverse, is_transverse, stable_intersection_number, star_at,
    trop_hypersurface, Convention, DEFAULT_RETRIES,
};

fn poly_strategy(n: usize, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        (prop::collection::vec(-2i64..=2, n), (-8i64..=8, 1i64..=4)),
        1..=max_terms,
    )
    .prop_map(move |terms| {
        LaurentPoly::new(
            n,
            terms.into_iter().map(|(e, (p, q))| {
                (e, PuiseuxScalar::from_terms([(ratio(1, 1), ratio(p, q))]))
            }),
        )
        .unwrap()
    })
}

fn any_poly() -> impl Strategy<Value = LaurentPoly> {
    (1usize..=3).prop_flat_map(|n| poly_strategy(n, 8))
}

fn plane_pair() -> impl Strategy<Value = (LaurentPoly, LaurentPoly)> {
    (poly_strategy(2, 5), poly_strategy(2, 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(210))]

    #[test]
    fn hypersurfaces_are_balanced_and_pure(f in any_poly()) {
        let n = f.num_vars();
        let c = trop_hypersurface(&f, Convention::MinPlus).unwrap();
        prop_assert!(check_balanced(&c.complex).balanced);
        prop_assert_eq!(c.dim(), n - 1);
        for (p, m) in c.complex.facets() {
            prop_assert_eq!(p.dim(), n - 1);
            prop_assert!(*m > 0.into());
        }
        prop_assert_eq!(c.is_empty(), f.is_monomial());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn stable_intersection_matches_mixed_volume((f, g) in plane_pair()) {
        let a = trop_hypersurface(&f, Convention::Paper).unwrap();
        let b = trop_hypersurface(&g, Convention::Paper).unwrap();
        let mv = mixed_volume(&[newton_polytope(&f).unwrap(), newton_polytope(&g).unwrap()]).unwrap();
        let totals: Vec<_> = (0..5u64)
            .map(|seed| stable_intersection_number(&a, &b, seed, DEFAULT_RETRIES).unwrap().total)
            .collect();
        for t in &totals {
            prop_assert_eq!(t, &totals[0]);
        }
        prop_assert_eq!(Rat::from_integer(totals[0].clone()), mv);
    }

    #[test]
    fn negation_swaps_conventions_and_keeps_totals((f, g) in plane_pair(), seed in 0u64..1000) {
        let a = trop_hypersurface(&f, Convention::Paper).unwrap();
        let b = trop_hypersurface(&g, Convention::Paper).unwrap();
        let am = trop_hypersurface(&f, Convention::MinPlus).unwrap();
        prop_assert_eq!(a.negate().convention, Convention::MinPlus);
        prop_assert_eq!(&a.negate().complex, &am.complex);
        prop_assert_eq!(&a.negate().negate(), &a);
        prop_assert_eq!(&am.in_convention(Convention::Paper), &a);
        let paper = stable_intersection_number(&a, &b, seed, DEFAULT_RETRIES).unwrap().total;
        let minplus = stable_intersection_number(&a.negate(), &b.negate(), seed, DEFAULT_RETRIES)
            .unwrap()
            .total;
        prop_assert_eq!(paper, minplus);
    }

    #[test]
    fn stars_at_facet_points_are_spans(f in (2usize..=3).prop_flat_map(|n| poly_strategy(n, 6))) {
        let c = trop_hypersurface(&f, Convention::Paper).unwrap();
        for (p, m) in c.complex.facets() {
            let x = p.relative_interior_point();
            let s = star_at(&c, &x).unwrap();
            let span: Vec<QVector> = p
                .direction_lattice()
                .basis_rows()
                .iter()
                .map(|r| int_to_rat(r))
                .collect();
            let expected = Polyhedron::cone(c.ambient_dim(), &[], &span).unwrap();
            prop_assert_eq!(s.complex.facets().to_vec(), vec![(expected, m.clone())]);
        }
        for v in c.complex.complex().cells_of_dim(0) {
            let s = star_at(&c, &v.vertices()[0]).unwrap();
            prop_assert!(check_balanced(&s.complex).balanced);
        }
    }

    /// A transverse pair needs no translation: the stable number equals the
    /// direct count.
    #[test]
    fn transverse_pairs_agree_with_stable((f, g) in plane_pair()) {
        let a = trop_hypersurface(&f, Convention::MinPlus).unwrap();
        let b = trop_hypersurface(&g, Convention::MinPlus).unwrap();
        if is_transverse(&a, &b).unwrap() {
            let direct = intersection_number_transverse(&a, &b).unwrap().total;
            let stable = stable_intersection_number(&a, &b, 7, DEFAULT_RETRIES).unwrap().total;
            prop_assert_eq!(direct, stable);
        }
    }
}
