use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use tropkit::arith::IntVector;
use tropkit::lattice::{hnf, lattice_index, perp, saturate, IntMatrix, SubLattice};

fn to_rows(raw: &[Vec<i64>]) -> Vec<IntVector> {
    raw.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=5).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(-6i64..=6, n), 0..=5),
        )
    })
}

fn is_canonical(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        let row = h.row(i);
        match row.iter().position(|x| x.sign() != num_bigint::Sign::NoSign) {
            None => seen_zero = true,
            Some(p) => {
                if seen_zero || last_pivot.is_some_and(|q| p <= q) || !row[p].is_positive() {
                    return false;
                }
                for k in 0..i {
                    let above = &h[(k, p)];
                    if above.is_negative() || above >= &row[p] {
                        return false;
                    }
                }
                last_pivot = Some(p);
            }
        }
    }
    true
}

/// Size of ℤⁿ/(L+M) by breadth-first search over cosets, capped.
fn coset_count(sum: &SubLattice, n: usize, cap: usize) -> Option<usize> {
    let mut reps: Vec<IntVector> = vec![vec![BigInt::from(0); n]];
    let mut frontier = reps.clone();
    while let Some(x) = frontier.pop() {
        for i in 0..n {
            let mut y = x.clone();
            y[i] += 1;
            let known = reps.iter().any(|r| {
                let d: IntVector = y.iter().zip(r).map(|(a, b)| a - b).collect();
                sum.contains(&d)
            });
            if !known {
                reps.push(y.clone());
                frontier.push(y);
                if reps.len() > cap {
                    return None;
                }
            }
        }
    }
    Some(reps.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn hnf_is_unimodular_and_canonical((n, raw) in matrix()) {
        let m = IntMatrix::from_rows(n, &to_rows(&raw)).unwrap();
        let (h, u) = hnf(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert!(u.det().unwrap().abs().is_one());
        prop_assert!(is_canonical(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn perp_twice_is_saturation((n, raw) in matrix()) {
        let l = SubLattice::new(n, &to_rows(&raw)).unwrap();
        let s = saturate(&l);
        prop_assert_eq!(perp(&perp(&l)), s.clone());
        prop_assert_eq!(perp(&l).rank(), n - s.rank());
        prop_assert_eq!(saturate(&s), s.clone());
        for v in l.basis_rows() {
            prop_assert!(s.contains(&v));
        }
    }

    #[test]
    fn index_matches_perp_and_cosets(
        (n, k, a, b) in (1usize..=5).prop_flat_map(|n| (0..=n).prop_flat_map(move |k| (
            Just(n),
            Just(k),
            prop::collection::vec(prop::collection::vec(-4i64..=4, n), k),
            prop::collection::vec(prop::collection::vec(-4i64..=4, n), n - k),
        )))
    ) {
        let l = saturate(&SubLattice::new(n, &to_rows(&a)).unwrap());
        let m = saturate(&SubLattice::new(n, &to_rows(&b)).unwrap());
        prop_assume!(l.rank() == k && m.rank() == n - k);
        let Ok(idx) = lattice_index(&l, &m) else {
            return Ok(());
        };
        prop_assert_eq!(&idx, &lattice_index(&perp(&l), &perp(&m)).unwrap());
        let sum = l.sum(&m).unwrap();
        if idx <= BigInt::from(64) {
            prop_assert_eq!(BigInt::from(coset_count(&sum, n, 64).unwrap()), idx);
        }
    }
}
