//! Exact rational polyhedra, cones and fans.
//!
//! A [`Polyhedron`] always carries both a V-representation (vertices, rays,
//! lineality) and an H-representation (equalities, facet inequalities), each
//! in a canonical form so that structural equality coincides with set
//! equality. Conversions go through an integer double description method.

pub(crate) mod dd;
mod fan;
mod polyhedron;

pub use fan::{covers_by_union, Fan};
pub use polyhedron::{Cone, Constraint, Polyhedron};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{self, int_to_rat, Int, QVector, Rat};
use crate::error::{check_dim, Error, Result};
use crate::lattice::IntMatrix;

/// Convex hull of a nonempty point list.
pub fn conv_hull(points: &[QVector]) -> Result<Polyhedron> {
    let n = points.first().ok_or(Error::EmptyPolytope)?.len();
    Polyhedron::from_generators(n, points, &[], &[])
}

/// The face of `p` on which `⟨x, v⟩` is minimal.
pub fn face_in_direction(p: &Polyhedron, v: &[Rat]) -> Result<Polyhedron> {
    p.face_in_direction(v)
}

/// Inward normal fan: one maximal cone per vertex, generated by the inward
/// normals of the facets through it; the equality normals span the
/// lineality of every cone.
pub fn normal_fan(p: &Polyhedron) -> Fan {
    let n = p.ambient_dim();
    let lin: Vec<QVector> = p
        .equalities()
        .iter()
        .map(|c| int_to_rat(&c.normal))
        .collect();
    let cones = p
        .vertices()
        .iter()
        .map(|v| {
            let rays: Vec<QVector> = p
                .inequalities()
                .iter()
                .filter(|c| c.eval(v).is_zero())
                .map(|c| int_to_rat(&c.normal))
                .collect();
            Polyhedron::cone(n, &rays, &lin).expect("uniform dimension")
        })
        .collect();
    Fan::new(n, cones).expect("uniform dimension")
}

pub fn minkowski_sum(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    check_dim(p.ambient_dim(), q.ambient_dim())?;
    let mut verts = Vec::with_capacity(p.vertices().len() * q.vertices().len());
    for a in p.vertices() {
        for b in q.vertices() {
            verts.push(arith::add(a, b));
        }
    }
    let rays: Vec<QVector> = p
        .rays()
        .iter()
        .chain(q.rays())
        .map(|r| int_to_rat(r))
        .collect();
    let lin: Vec<QVector> = p
        .lineality()
        .basis_rows()
        .iter()
        .chain(&q.lineality().basis_rows())
        .map(|r| int_to_rat(r))
        .collect();
    Polyhedron::from_generators(p.ambient_dim(), &verts, &rays, &lin)
}

fn factorial(n: usize) -> Int {
    (1..=n).map(Int::from).product()
}

/// Euclidean volume; zero for lower-dimensional polytopes.
pub fn volume(p: &Polyhedron) -> Result<Rat> {
    if !p.is_bounded() {
        return Err(Error::UnboundedDirection);
    }
    let n = p.ambient_dim();
    if p.dim() < n {
        return Ok(Rat::zero());
    }
    if n == 0 {
        return Ok(Rat::from_integer(1.into()));
    }
    let verts = p.vertices();
    let mut total = Rat::zero();
    for simplex in p.triangulate() {
        let base = &verts[simplex[0]];
        let rows: Vec<QVector> = simplex[1..]
            .iter()
            .map(|&i| arith::sub(&verts[i], base))
            .collect();
        total += rat_det(&rows).abs();
    }
    Ok(total / Rat::from_integer(factorial(n)))
}

/// Determinant of a square rational matrix via a common denominator.
fn rat_det(rows: &[QVector]) -> Rat {
    let n = rows.len();
    let l = rows
        .iter()
        .flatten()
        .fold(Int::from(1), |l, x| l.lcm(x.denom()));
    let entries: Vec<Int> = rows
        .iter()
        .flatten()
        .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let m = IntMatrix::new(n, n, entries).expect("square");
    let d = m.det().expect("square");
    Rat::new(d, num_traits::pow(l, n))
}

/// Mixed volume of `n` polytopes in ℝⁿ, normalized so that `MV(P,…,P) = n!·Vol(P)`.
pub fn mixed_volume(ps: &[Polyhedron]) -> Result<Rat> {
    let n = ps.first().map(|p| p.ambient_dim()).unwrap_or(0);
    if ps.len() != n || n == 0 {
        return Err(Error::ArityMismatch {
            expected: n.max(1),
            got: ps.len(),
        });
    }
    for p in ps {
        check_dim(n, p.ambient_dim())?;
        if !p.is_bounded() {
            return Err(Error::UnboundedDirection);
        }
    }
    let mut total = Rat::zero();
    for mask in 1u32..(1 << n) {
        let mut sum: Option<Polyhedron> = None;
        for (i, p) in ps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum = Some(match sum {
                    None => p.clone(),
                    Some(s) => minkowski_sum(&s, p)?,
                });
            }
        }
        let v = volume(&sum.expect("nonempty subset"))?;
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// Number of lattice segments on a lattice edge.
pub fn lattice_length(e: &Polyhedron) -> Result<Int> {
    if !e.is_bounded() || e.dim() != 1 || e.vertices().len() != 2 {
        return Err(Error::NotAnEdge);
    }
    let [a, b] = e.vertices() else {
        unreachable!()
    };
    if !arith::is_integral(a) || !arith::is_integral(b) {
        return Err(Error::NonIntegralEndpoints);
    }
    let d: Vec<Int> = arith::sub(b, a).iter().map(|x| x.to_integer()).collect();
    Ok(arith::gcd_all(&d))
}

/// Whether every cone of `f2` is a union of cones of `f1`.
pub fn is_refinement(f1: &Fan, f2: &Fan) -> bool {
    f1.refines(f2)
}
