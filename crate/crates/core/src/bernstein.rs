//! Root-count bounds for square polynomial systems.

use crate::arith::{Int, QVector};
use crate::error::{Error, Result};
use crate::polyhedra::{conv_hull, mixed_volume, Polyhedron};
use crate::puiseux::LaurentPoly;
use crate::subdivision::int_point;
use crate::trop::{stable_intersection_number, trop_hypersurface, Convention};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub bezout: Int,
    pub bernstein: Int,
    /// Stable tropical intersection number; computed for two variables only.
    pub tropical: Option<Int>,
    pub agree: Option<bool>,
}

fn check_square(fs: &[LaurentPoly]) -> Result<usize> {
    let n = fs.len();
    for f in fs {
        if f.num_vars() != n {
            return Err(Error::ArityMismatch {
                expected: f.num_vars(),
                got: n,
            });
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    if n == 0 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: 0,
        });
    }
    Ok(n)
}

/// Total degree after translating the support into the nonnegative orthant.
fn shifted_degree(f: &LaurentPoly) -> i64 {
    let n = f.num_vars();
    let mins: Vec<i64> = (0..n)
        .map(|i| f.support().iter().map(|e| e[i]).min().unwrap_or(0))
        .collect();
    f.support()
        .iter()
        .map(|e| e.iter().zip(&mins).map(|(x, m)| x - m).sum::<i64>())
        .max()
        .unwrap_or(0)
}

pub fn bezout_bound(fs: &[LaurentPoly]) -> Result<Int> {
    check_square(fs)?;
    Ok(fs.iter().map(|f| Int::from(shifted_degree(f))).product())
}

pub fn newton_polytope(f: &LaurentPoly) -> Result<Polyhedron> {
    let pts: Vec<QVector> = f.support().iter().map(|e| int_point(e)).collect();
    conv_hull(&pts)
}

/// Mixed volume of the Newton polytopes.
pub fn bernstein_bound(fs: &[LaurentPoly]) -> Result<Int> {
    check_square(fs)?;
    let ps = fs.iter().map(newton_polytope).collect::<Result<Vec<_>>>()?;
    let mv = mixed_volume(&ps)?;
    debug_assert!(mv.is_integer());
    Ok(mv.to_integer())
}

pub fn cross_check(fs: &[LaurentPoly], seed: u64, retries: usize) -> Result<BoundReport> {
    let bezout = bezout_bound(fs)?;
    let bernstein = bernstein_bound(fs)?;
    let tropical = if fs.len() == 2 {
        let a = trop_hypersurface(&fs[0], Convention::Paper)?;
        let b = trop_hypersurface(&fs[1], Convention::Paper)?;
        Some(stable_intersection_number(&a, &b, seed, retries)?.total)
    } else {
        None
    };
    let agree = tropical.as_ref().map(|t| *t == bernstein);
    Ok(BoundReport {
        bezout,
        bernstein,
        tropical,
        agree,
    })
}
