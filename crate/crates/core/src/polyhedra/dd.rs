//! Double description method over ℤ.
//!
//! Converts `{y : A y ≥ 0, E y = 0}` into its lineality space and extreme
//! rays by adding constraints one at a time. Rays are kept primitive so
//! coefficients stay small; adjacency uses the combinatorial test on sets of
//! tight constraints, which is exact because the intermediate ray sets are
//! always minimal.

use num_traits::{Signed, Zero};

use crate::arith::{dot_int, primitive_int, Int, IntVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    pub(crate) fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub(crate) fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn ones(&self, len: usize) -> impl Iterator<Item = usize> + '_ {
        (0..len).filter(move |&i| self.contains(i))
    }
}

pub(crate) struct ConeGenerators {
    pub lineality: Vec<IntVector>,
    pub rays: Vec<IntVector>,
}

struct Ray {
    v: IntVector,
    tight: Bits,
}

/// `s0·x − s·l0`, made primitive.
fn eliminate(x: &[Int], s: &Int, l0: &[Int], s0: &Int) -> IntVector {
    let v: IntVector = x.iter().zip(l0).map(|(xi, li)| s0 * xi - s * li).collect();
    primitive_int(&v).unwrap_or(v)
}

pub(crate) fn double_description(
    dim: usize,
    ineqs: &[IntVector],
    eqs: &[IntVector],
) -> ConeGenerators {
    let mut lin: Vec<IntVector> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut eff_dim = dim;
    for e in eqs {
        let Some(i) = lin.iter().position(|l| !dot_int(e, l).is_zero()) else {
            continue;
        };
        let l0 = lin.remove(i);
        let s0 = dot_int(e, &l0);
        for l in lin.iter_mut() {
            let s = dot_int(e, l);
            if !s.is_zero() {
                *l = eliminate(l, &s, &l0, &s0);
            }
        }
        eff_dim -= 1;
    }

    let m = ineqs.len();
    let mut rays: Vec<Ray> = Vec::new();
    for (j, a) in ineqs.iter().enumerate() {
        if let Some(i) = lin.iter().position(|l| !dot_int(a, l).is_zero()) {
            let mut l0 = lin.remove(i);
            let mut s0 = dot_int(a, &l0);
            if s0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
                s0 = -s0;
            }
            for l in lin.iter_mut() {
                let s = dot_int(a, l);
                if !s.is_zero() {
                    *l = eliminate(l, &s, &l0, &s0);
                }
            }
            for r in rays.iter_mut() {
                let s = dot_int(a, &r.v);
                if !s.is_zero() {
                    r.v = eliminate(&r.v, &s, &l0, &s0);
                }
                r.tight.insert(j);
            }
            let mut tight = Bits::new(m);
            for k in 0..j {
                tight.insert(k);
            }
            rays.push(Ray { v: l0, tight });
            continue;
        }

        let vals: Vec<Int> = rays.iter().map(|r| dot_int(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.tight.insert(j);
                }
            }
            continue;
        }
        // Adjacent rays share at least (pointed dimension − 2) tight constraints.
        let need = (eff_dim - lin.len()).saturating_sub(2);
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.and(&rays[q].tight);
                if common.count() < need {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && common.is_subset(&r.tight));
                if blocked {
                    continue;
                }
                let v: IntVector = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| &vals[p] * x - &vals[q] * y)
                    .collect();
                let v = primitive_int(&v).unwrap_or(v);
                let mut tight = common;
                tight.insert(j);
                fresh.push(Ray { v, tight });
            }
        }
        let mut next = Vec::with_capacity(pos.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                r.tight.insert(j);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    ConeGenerators {
        lineality: lin,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ivec;

    fn sorted(mut v: Vec<IntVector>) -> Vec<IntVector> {
        v.sort();
        v
    }

    #[test]
    fn positive_orthant() {
        let g = double_description(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[]);
        assert!(g.lineality.is_empty());
        assert_eq!(sorted(g.rays), vec![ivec(&[0, 1]), ivec(&[1, 0])]);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // Homogenized unit square: x0 ≥ 0, x ≥ 0, y ≥ 0, x0 − x ≥ 0, x0 − y ≥ 0.
        let ineqs = vec![
            ivec(&[1, 0, 0]),
            ivec(&[0, 1, 0]),
            ivec(&[0, 0, 1]),
            ivec(&[1, -1, 0]),
            ivec(&[1, 0, -1]),
        ];
        let g = double_description(3, &ineqs, &[]);
        assert!(g.lineality.is_empty());
        assert_eq!(
            sorted(g.rays),
            vec![
                ivec(&[1, 0, 0]),
                ivec(&[1, 0, 1]),
                ivec(&[1, 1, 0]),
                ivec(&[1, 1, 1])
            ]
        );
    }

    #[test]
    fn half_plane_keeps_lineality() {
        let g = double_description(2, &[ivec(&[1, 1])], &[]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
        let l = &g.lineality[0];
        assert!(dot_int(&ivec(&[1, 1]), l).is_zero());
    }

    #[test]
    fn equalities_cut_dimension() {
        let g = double_description(3, &[ivec(&[1, 0, 0])], &[ivec(&[0, 0, 1])]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays, vec![ivec(&[1, 0, 0])]);
    }
}
