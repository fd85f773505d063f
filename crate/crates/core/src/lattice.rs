//! Exact integer linear algebra: Hermite normal form, sublattices of ℤⁿ,
//! lattice indices, saturation and perpendicular lattices.
//!
//! The HNF convention is row-style: the nonzero rows come first, each pivot
//! is positive and lies strictly to the right of the pivot above it, and the
//! entries above a pivot are reduced into `[0, pivot)`. Zero rows sink to the
//! bottom. Every [`SubLattice`] stores its basis in this form, so two
//! sublattices are equal exactly when their bases are.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, IntVector};
use crate::error::{check_dim, Error, Result};

/// Dense integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Result<Self> {
        check_dim(rows * cols, entries.len())?;
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    /// Builds a matrix from row vectors of a common length `cols`.
    pub fn from_rows(cols: usize, rows: &[IntVector]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_dim(cols, r.len())?;
            entries.extend(r.iter().cloned());
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self> {
        check_dim(self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Int> {
        check_dim(self.rows, self.cols)?;
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut m = self.to_rows();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(p) => {
                        m.swap(k, p);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(sign * &m[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(a, j)]);
            self[(a, j)] = v;
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] -= v;
        }
    }

    fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
            }))
            .finish()
    }
}

/// Row-style Hermite normal form. Returns `(h, u)` with `u` unimodular and
/// `u · m = h`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        loop {
            // Bring the smallest nonzero entry of column c (rows r..) to row r.
            let best = (r..m.rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut done = true;
            for i in r + 1..m.rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.sub_row(i, r, &q);
                u.sub_row(i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.sub_row(i, r, &q);
            u.sub_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Inverse of a unimodular matrix.
fn unimodular_inverse(u: &IntMatrix) -> IntMatrix {
    // The HNF of a unimodular matrix is the identity, so the transform is u⁻¹.
    let (h, v) = hnf(u);
    debug_assert_eq!(h, IntMatrix::identity(u.rows));
    v
}

/// A sublattice of ℤⁿ stored by its canonical HNF basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubLattice {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl SubLattice {
    /// The lattice generated by arbitrary (possibly dependent) generators.
    pub fn new(ambient_dim: usize, generators: &[IntVector]) -> Result<Self> {
        let m = IntMatrix::from_rows(ambient_dim, generators)?;
        Ok(Self::from_matrix(&m))
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        let (h, _) = hnf(m);
        let rows: Vec<IntVector> = (0..h.rows)
            .filter(|&i| !h.is_zero_row(i))
            .map(|i| h.row(i).to_vec())
            .collect();
        SubLattice {
            ambient_dim: m.cols,
            basis: IntMatrix::from_rows(m.cols, &rows).expect("uniform rows"),
        }
    }

    pub fn zero(n: usize) -> Self {
        SubLattice {
            ambient_dim: n,
            basis: IntMatrix::zeros(0, n),
        }
    }

    pub fn full(n: usize) -> Self {
        SubLattice {
            ambient_dim: n,
            basis: IntMatrix::identity(n),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<IntVector> {
        self.basis.to_rows()
    }

    pub fn sum(&self, other: &SubLattice) -> Result<SubLattice> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        SubLattice::new(self.ambient_dim, &rows)
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[Int]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut v = v.to_vec();
        for i in 0..self.basis.rows {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let (q, rem) = v[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn is_saturated(&self) -> bool {
        saturate(self) == *self
    }
}

impl fmt::Debug for SubLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubLattice(ℤ^{}, {:?})", self.ambient_dim, self.basis)
    }
}

/// The index `[ℤⁿ : l1 + l2]`.
pub fn lattice_index(l1: &SubLattice, l2: &SubLattice) -> Result<Int> {
    let n = l1.ambient_dim;
    let s = l1.sum(l2)?;
    if s.rank() < n {
        return Err(Error::RankError);
    }
    Ok((0..n).map(|i| s.basis[(i, i)].clone()).product())
}

/// Integer vectors pairing to zero with every vector of `l`.
pub fn perp(l: &SubLattice) -> SubLattice {
    let n = l.ambient_dim;
    if l.rank() == 0 {
        return SubLattice::full(n);
    }
    // u · Bᵀ = h; rows of u beyond the rank annihilate B.
    let (h, u) = hnf(&l.basis.transpose());
    let r = (0..h.rows).filter(|&i| !h.is_zero_row(i)).count();
    let rows: Vec<IntVector> = (r..n).map(|i| u.row(i).to_vec()).collect();
    SubLattice::new(n, &rows).expect("uniform rows")
}

/// The smallest saturated sublattice containing `l`: `(ℚ ⊗ l) ∩ ℤⁿ`.
pub fn saturate(l: &SubLattice) -> SubLattice {
    let n = l.ambient_dim;
    let r = l.rank();
    if r == 0 {
        return l.clone();
    }
    // u · Bᵀ = [H'; 0] gives B = H'ᵀ · (first r columns of u⁻¹)ᵀ, and those
    // columns extend to a basis of ℤⁿ.
    let (_, u) = hnf(&l.basis.transpose());
    let inv = unimodular_inverse(&u);
    let rows: Vec<IntVector> = (0..r)
        .map(|j| (0..n).map(|i| inv[(i, j)].clone()).collect())
        .collect();
    SubLattice::new(n, &rows).expect("uniform rows")
}

/// `v` divided by the gcd of its entries.
pub fn primitive(v: &[Int]) -> Result<IntVector> {
    crate::arith::primitive_int(v).ok_or(Error::ZeroVector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ivec;

    fn lat(n: usize, rows: &[&[i64]]) -> SubLattice {
        let rows: Vec<IntVector> = rows.iter().map(|r| ivec(r)).collect();
        SubLattice::new(n, &rows).unwrap()
    }

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<IntVector> = rows.iter().map(|r| ivec(r)).collect();
        IntMatrix::from_rows(rows[0].len(), &rows).unwrap()
    }

    #[test]
    fn hnf_identity() {
        let (h, u) = hnf(&IntMatrix::identity(2));
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_examples() {
        for (m, expect) in [
            (mat(&[&[1, 1], &[1, -1]]), mat(&[&[1, 1], &[0, 2]])),
            // {(1,3),(0,2)} spans the same lattice, but 3 is not reduced mod 2.
            (mat(&[&[2, 4], &[1, 3]]), mat(&[&[1, 1], &[0, 2]])),
        ] {
            let (h, u) = hnf(&m);
            assert_eq!(h, expect);
            assert_eq!(u.mul(&m).unwrap(), h);
            assert_eq!(u.det().unwrap().abs(), Int::one());
        }
    }

    #[test]
    fn unreduced_echelon_form_normalizes() {
        let a = SubLattice::from_matrix(&mat(&[&[1, 3], &[0, 2]]));
        let b = SubLattice::from_matrix(&mat(&[&[2, 4], &[1, 3]]));
        assert_eq!(a, b);
        assert_eq!(a.basis(), &mat(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn hnf_rank_deficient_puts_zero_rows_last() {
        let m = mat(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 5]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, mat(&[&[1, 2, 3], &[0, 0, 5], &[0, 0, 0]]));
        assert_eq!(u.mul(&m).unwrap(), h);
    }

    #[test]
    fn index_examples() {
        let e1 = lat(2, &[&[1, 0]]);
        let e2 = lat(2, &[&[0, 1]]);
        assert_eq!(lattice_index(&e1, &e2).unwrap(), Int::from(1));
        let a = lat(2, &[&[1, 1]]);
        let b = lat(2, &[&[1, -1]]);
        assert_eq!(lattice_index(&a, &b).unwrap(), Int::from(2));
        let c = lat(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let d = lat(3, &[&[0, 0, 3]]);
        assert_eq!(lattice_index(&c, &d).unwrap(), Int::from(3));
        assert_eq!(lattice_index(&a, &a), Err(Error::RankError));
    }

    #[test]
    fn perp_examples() {
        assert_eq!(perp(&lat(2, &[&[1, 0]])), lat(2, &[&[0, 1]]));
        assert_eq!(perp(&lat(2, &[&[1, 1]])), lat(2, &[&[1, -1]]));
        assert_eq!(perp(&lat(2, &[&[2, 4]])), lat(2, &[&[2, -1]]));
        assert_eq!(perp(&SubLattice::zero(3)), SubLattice::full(3));
        assert_eq!(perp(&SubLattice::full(3)), SubLattice::zero(3));
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(saturate(&lat(2, &[&[2, 0]])), lat(2, &[&[1, 0]]));
        assert_eq!(saturate(&lat(2, &[&[2, 4]])), lat(2, &[&[1, 2]]));
        let s = lat(3, &[&[1, 2, 0], &[0, 1, 1]]);
        assert_eq!(saturate(&s), s);
        assert!(!lat(3, &[&[1, 1, 0], &[1, -1, 0]]).is_saturated());
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&ivec(&[2, 4])).unwrap(), ivec(&[1, 2]));
        assert_eq!(primitive(&ivec(&[-3, 0, 6])).unwrap(), ivec(&[-1, 0, 2]));
        assert_eq!(primitive(&ivec(&[5, 7])).unwrap(), ivec(&[5, 7]));
        assert_eq!(primitive(&ivec(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn membership() {
        let l = lat(2, &[&[1, 1], &[1, -1]]);
        assert!(l.contains(&ivec(&[2, 0])));
        assert!(l.contains(&ivec(&[3, 1])));
        assert!(!l.contains(&ivec(&[1, 0])));
    }

    #[test]
    fn det_matches_small_cases() {
        assert_eq!(mat(&[&[1, 1], &[1, -1]]).det().unwrap(), Int::from(-2));
        assert_eq!(
            mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).det().unwrap(),
            Int::from(6)
        );
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).det().unwrap(), Int::from(-1));
    }
}
