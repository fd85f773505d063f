//! Exact scalar and vector helpers shared by every module.
//!
//! Integers are arbitrary precision ([`Int`]); rationals are [`Rat`]. Vectors
//! are plain `Vec`s; a rational point of ℝⁿ is a [`QVector`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type QVector = Vec<Rat>;
pub type IntVector = Vec<Int>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn qvec(xs: &[i64]) -> QVector {
    xs.iter().map(|&x| rat(x)).collect()
}

pub fn ivec(xs: &[i64]) -> IntVector {
    xs.iter().map(|&x| Int::from(x)).collect()
}

pub fn int_to_rat(v: &[Int]) -> QVector {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Parses `"p/q"`, `"p"` (optionally signed). Denominators must be nonzero;
/// the result is normalized to lowest terms.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Int = parse_int(num).ok_or_else(bad)?;
    let den: Int = parse_int(den).ok_or_else(bad)?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

fn parse_int(s: &str) -> Option<Int> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Lowest-terms string form: `"p/q"` with `q > 1`, or `"p"` for integers.
pub fn format_rational(q: &Rat) -> String {
    q.to_string()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Pairing of an integer covector with a rational vector.
pub fn pair(a: &[Int], x: &[Rat]) -> Rat {
    a.iter()
        .zip(x)
        .map(|(ai, xi)| xi * ai)
        .fold(Rat::zero(), |acc, t| acc + t)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(c: &Rat, a: &[Rat]) -> QVector {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Rat]) -> QVector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn is_integral(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_integer())
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Positive rescaling of a nonzero rational vector to a primitive integer
/// vector. Returns `None` for the zero vector.
pub fn primitive_of(v: &[Rat]) -> Option<IntVector> {
    if is_zero_vec(v) {
        return None;
    }
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let ints: IntVector = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = gcd_all(&ints);
    Some(ints.into_iter().map(|x| x / &g).collect())
}

/// Same as [`primitive_of`] for an integer vector.
pub fn primitive_int(v: &[Int]) -> Option<IntVector> {
    let g = gcd_all(v);
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Reduced row echelon form over ℚ. Returns the nonzero rows and their
/// pivot columns.
pub fn rref(rows: &[QVector], ncols: usize) -> (Vec<QVector>, Vec<usize>) {
    let mut m: Vec<QVector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[QVector], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Solves `A x = b` for square nonsingular `A` (given by rows).
/// Returns `None` if `A` is singular.
pub fn solve(a: &[QVector], b: &[Rat]) -> Option<QVector> {
    let n = a.len();
    let aug: Vec<QVector> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, piv) = rref(&aug, n + 1);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(red.into_iter().map(|r| r[n].clone()).collect())
}

/// Basis of the rational kernel `{x : A x = 0}` of a matrix given by rows.
pub fn kernel(rows: &[QVector], ncols: usize) -> Vec<QVector> {
    let (red, piv) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &p) in red.iter().zip(&piv) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn sign(x: &Rat) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational(" -3 ").unwrap(), rat(-3));
        assert_eq!(parse_rational("5/-10").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        for bad in ["", "1/0", "a", "1/2/3", "--1", "1.5", "/", "+"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![ratio(1, 2), ratio(-3, 4)];
        assert_eq!(primitive_of(&v).unwrap(), ivec(&[2, -3]));
        assert!(primitive_of(&qvec(&[0, 0])).is_none());
    }

    #[test]
    fn kernel_and_solve() {
        let rows = vec![qvec(&[1, 1, 0])];
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(&rows[0], v).is_zero());
        }
        let a = vec![qvec(&[2, 1]), qvec(&[1, -1])];
        assert_eq!(solve(&a, &qvec(&[3, 0])).unwrap(), qvec(&[1, 1]));
        assert!(solve(&[qvec(&[1, 1]), qvec(&[2, 2])], &qvec(&[0, 0])).is_none());
    }
}
