//! Tropical hypersurfaces, stars, and tropical intersection numbers.
//!
//! Cycles are stored in one of two orientations. `MinPlus` is the corner
//! locus of `F(u) = min_ω ⟨ω,u⟩ + v(a_ω)`; `Paper` is its pointwise negative,
//! the locus of `w` where `init_w f` is not a monomial.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, int_to_rat, Int, QVector, Rat};
use crate::complexes::{check_balanced, WeightedComplex};
use crate::error::{check_dim, Error, Result};
use crate::lattice::lattice_index;
use crate::polyhedra::{conv_hull, lattice_length, normal_fan, Cone, Fan, Polyhedron};
use crate::puiseux::{newton_data, LaurentPoly};
use crate::subdivision::dual_complex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    Paper,
    MinPlus,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Paper => "paper",
            Convention::MinPlus => "minplus",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Convention::Paper),
            "minplus" => Ok(Convention::MinPlus),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalCycle {
    pub complex: WeightedComplex,
    pub convention: Convention,
}

impl TropicalCycle {
    pub fn new(complex: WeightedComplex, convention: Convention) -> TropicalCycle {
        TropicalCycle {
            complex,
            convention,
        }
    }

    /// Like [`TropicalCycle::new`], but rejects unbalanced input.
    pub fn checked(complex: WeightedComplex, convention: Convention) -> Result<TropicalCycle> {
        let report = check_balanced(&complex);
        if let Some((tau, v)) = report.violations.first() {
            return Err(Error::InvalidComplex(format!(
                "not balanced at {tau:?} (deficiency {v:?})"
            )));
        }
        Ok(Self::new(complex, convention))
    }

    pub fn ambient_dim(&self) -> usize {
        self.complex.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    /// The same set expressed in the other orientation.
    pub fn negate(&self) -> TropicalCycle {
        let convention = match self.convention {
            Convention::Paper => Convention::MinPlus,
            Convention::MinPlus => Convention::Paper,
        };
        TropicalCycle::new(self.complex.negate(), convention)
    }

    pub fn in_convention(&self, c: Convention) -> TropicalCycle {
        if self.convention == c {
            self.clone()
        } else {
            self.negate()
        }
    }

    pub fn translate(&self, t: &[Rat]) -> TropicalCycle {
        TropicalCycle::new(self.complex.translate(t), self.convention)
    }
}

/// Codimension-one cells of the dual complex of the Newton data, weighted by
/// the lattice length of the dual edge.
pub fn trop_hypersurface(f: &LaurentPoly, convention: Convention) -> Result<TropicalCycle> {
    let cfg = newton_data(f)?;
    let n = f.num_vars();
    let m = n.saturating_sub(1);
    if f.is_monomial() {
        log::warn!("tropical hypersurface of a monomial is empty");
        return Ok(TropicalCycle::new(WeightedComplex::empty(n, m), convention));
    }
    let dual = dual_complex(&cfg);
    let facets = dual
        .subdivision
        .cells
        .iter()
        .zip(&dual.cells)
        .filter(|(c, _)| c.dim() == 1)
        .map(|(c, d)| Ok((d.cell.clone(), lattice_length(&c.hull)?)))
        .collect::<Result<Vec<_>>>()?;
    let minplus = TropicalCycle::new(WeightedComplex::new(n, m, facets)?, Convention::MinPlus);
    Ok(minplus.in_convention(convention))
}

/// Normal fan of `−Conv(A)` for a polynomial with constant coefficients.
pub fn grobner_fan_hypersurface(f: &LaurentPoly) -> Result<Fan> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.terms().values().any(|c| !c.valuation().is_some_and(Zero::is_zero)) {
        return Err(Error::NonConstantCoefficients);
    }
    let pts: Vec<QVector> = f
        .support()
        .iter()
        .map(|e| e.iter().map(|&x| arith::rat(-x)).collect())
        .collect();
    Ok(normal_fan(&conv_hull(&pts)?))
}

/// Fan of directions of `c` at `w`, each cone weighted by its source facet.
pub fn star_at(c: &TropicalCycle, w: &[Rat]) -> Result<TropicalCycle> {
    check_dim(c.ambient_dim(), w.len())?;
    let facets = c
        .complex
        .facets()
        .iter()
        .filter(|(p, _)| p.contains(w))
        .map(|(p, m)| Ok((p.tangent_cone(w)?, m.clone())))
        .collect::<Result<Vec<_>>>()?;
    if facets.is_empty() {
        return Err(Error::PointNotOnCycle);
    }
    Ok(TropicalCycle::new(
        WeightedComplex::new(c.ambient_dim(), c.dim(), facets)?,
        c.convention,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub x: QVector,
    pub m: Int,
    pub n: Int,
    pub index: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub points: Vec<IntersectionPoint>,
    pub total: Int,
    pub transverse: bool,
    pub translation_used: QVector,
}

enum Meeting {
    Empty,
    Transverse(QVector),
    Degenerate,
}

fn rows(p: &Polyhedron) -> Vec<(QVector, Rat)> {
    p.equalities()
        .iter()
        .map(|c| (int_to_rat(&c.normal), c.rhs.clone()))
        .collect()
}

/// How two cells of complementary dimension meet.
fn meet(a: &Polyhedron, b: &Polyhedron) -> Result<Meeting> {
    let n = a.ambient_dim();
    let mut eqs = rows(a);
    eqs.extend(rows(b));
    if eqs.len() == n {
        let lhs: Vec<QVector> = eqs.iter().map(|(r, _)| r.clone()).collect();
        let rhs: Vec<Rat> = eqs.iter().map(|(_, c)| c.clone()).collect();
        if let Some(x) = arith::solve(&lhs, &rhs) {
            let vals = a.inequalities().iter().chain(b.inequalities()).map(|c| c.eval(&x));
            let mut tight = false;
            for v in vals {
                if v.is_negative() {
                    return Ok(Meeting::Empty);
                }
                tight |= v.is_zero();
            }
            return Ok(if tight {
                Meeting::Degenerate
            } else {
                Meeting::Transverse(x)
            });
        }
    }
    // Affine spans are not complementary: any common point is degenerate.
    let aug: Vec<QVector> = eqs
        .iter()
        .map(|(r, c)| {
            let mut r = r.clone();
            r.push(c.clone());
            r
        })
        .collect();
    if arith::rref(&aug, n + 1).1.contains(&n) {
        return Ok(Meeting::Empty);
    }
    Ok(match a.intersection(b)? {
        Some(_) => Meeting::Degenerate,
        None => Meeting::Empty,
    })
}

/// All transverse meeting points, or `None` if some pair meets degenerately.
fn meeting_points(
    c1: &[(Polyhedron, Int)],
    c2: &[(Polyhedron, Int)],
) -> Result<Option<Vec<IntersectionPoint>>> {
    let mut out = Vec::new();
    for (a, m) in c1 {
        for (b, k) in c2 {
            match meet(a, b)? {
                Meeting::Empty => {}
                Meeting::Degenerate => return Ok(None),
                Meeting::Transverse(x) => out.push(IntersectionPoint {
                    x,
                    m: m.clone(),
                    n: k.clone(),
                    index: lattice_index(&a.normal_lattice(), &b.normal_lattice())?,
                }),
            }
        }
    }
    out.sort_by(|p, q| p.x.cmp(&q.x));
    Ok(Some(out))
}

fn check_pair(c1: &TropicalCycle, c2: &TropicalCycle) -> Result<()> {
    let n = c1.ambient_dim();
    check_dim(n, c2.ambient_dim())?;
    if c1.convention != c2.convention {
        return Err(Error::ConventionMismatch);
    }
    check_dim(n, c1.dim() + c2.dim())
}

/// Whether every common point lies in the relative interiors of facets
/// whose spans are complementary.
pub fn is_transverse(c1: &TropicalCycle, c2: &TropicalCycle) -> Result<bool> {
    check_pair(c1, c2)?;
    Ok(meeting_points(c1.complex.facets(), c2.complex.facets())?.is_some())
}

pub fn intersection_number_transverse(
    c1: &TropicalCycle,
    c2: &TropicalCycle,
) -> Result<IntersectionReport> {
    check_pair(c1, c2)?;
    let points =
        meeting_points(c1.complex.facets(), c2.complex.facets())?.ok_or(Error::NotTransverse)?;
    Ok(report(points, vec![Rat::zero(); c1.ambient_dim()]))
}

fn report(points: Vec<IntersectionPoint>, translation_used: QVector) -> IntersectionReport {
    let total = points.iter().map(|p| &p.m * &p.n * &p.index).sum();
    IntersectionReport {
        points,
        total,
        transverse: true,
        translation_used,
    }
}

/// Denominator of the random translation vectors: a prime near 10⁶.
pub const TRANSLATION_DENOMINATOR: i64 = 1_000_003;
pub const DEFAULT_RETRIES: usize = 16;

/// Intersection number after translating `c2` by a seeded pseudo-random
/// rational vector, retrying until the configuration is transverse.
pub fn stable_intersection_number(
    c1: &TropicalCycle,
    c2: &TropicalCycle,
    seed: u64,
    retries: usize,
) -> Result<IntersectionReport> {
    check_pair(c1, c2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = c1.ambient_dim();
    for attempt in 0..retries {
        let t: QVector = (0..n)
            .map(|_| arith::ratio(rng.gen_range(-1_000_000..=1_000_000), TRANSLATION_DENOMINATOR))
            .collect();
        let moved = c2.translate(&t);
        if let Some(points) = meeting_points(c1.complex.facets(), moved.complex.facets())? {
            return Ok(report(points, t));
        }
        log::debug!("translation attempt {attempt} was not transverse");
    }
    Err(Error::TransversalityFailure(retries))
}

/// `Σ m_x [T^∧ : M_x + σ^⊥]` over `x ∈ −σ° ∩ (−w + Trop)`, with the cycle
/// read in the `Paper` convention.
pub fn multiplicity_along_orbit(c: &TropicalCycle, w: &[Rat], sigma: &Cone) -> Result<Int> {
    let n = c.ambient_dim();
    check_dim(n, w.len())?;
    check_dim(n, sigma.ambient_dim())?;
    let k = c.dim();
    if sigma.dim() + k != n {
        return Err(Error::CodimensionMismatch {
            expected: k,
            got: n - sigma.dim(),
        });
    }
    let moved = c
        .in_convention(Convention::Paper)
        .translate(&arith::neg(w));
    let cone = sigma.negate();
    let mut total = Int::zero();
    for (a, m) in moved.complex.facets() {
        let Some(common) = a.intersection(&cone)? else {
            continue;
        };
        // Only the open cone counts; meetings on its boundary belong to
        // other orbits.
        let q = common.relative_interior_point();
        if !cone.relint_contains(&q) {
            continue;
        }
        if common.dim() > 0 || !a.relint_contains(&q) {
            return Err(Error::NonTransverseConfiguration);
        }
        total += m * lattice_index(&a.normal_lattice(), &cone.normal_lattice())?;
    }
    Ok(total)
}
