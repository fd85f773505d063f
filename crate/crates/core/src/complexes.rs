//! Polyhedral complexes, weighted (tropical) complexes and balancing.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, int_to_rat, Int, IntVector, QVector, Rat};
use crate::error::{check_dim, Error, Result};
use crate::lattice::{perp, SubLattice};
use crate::polyhedra::{covers_by_union, Cone, Fan, Polyhedron};

/// A finite face-closed collection of polyhedra in ℝⁿ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyComplex {
    ambient_dim: usize,
    cells: Vec<Polyhedron>,
}

fn sort_by_dim(cells: &mut [Polyhedron]) {
    cells.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
}

impl PolyComplex {
    /// The face closure of `cells`. Does not check that cells meet properly;
    /// see [`PolyComplex::validate`].
    pub fn new(n: usize, cells: &[Polyhedron]) -> Result<PolyComplex> {
        for c in cells {
            check_dim(n, c.ambient_dim())?;
        }
        let all: BTreeSet<Polyhedron> = cells.iter().flat_map(|c| c.faces()).collect();
        let mut cells: Vec<Polyhedron> = all.into_iter().collect();
        sort_by_dim(&mut cells);
        Ok(PolyComplex {
            ambient_dim: n,
            cells,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All cells, ordered by dimension.
    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim())
    }

    pub fn cells_of_dim(&self, k: usize) -> impl Iterator<Item = &Polyhedron> {
        self.cells.iter().filter(move |c| c.dim() == k)
    }

    pub fn maximal_cells(&self) -> Vec<&Polyhedron> {
        self.cells
            .iter()
            .filter(|c| {
                !self
                    .cells
                    .iter()
                    .any(|d| d.dim() > c.dim() && c.is_subset_of(d))
            })
            .collect()
    }

    pub fn contains_cell(&self, p: &Polyhedron) -> bool {
        self.cells.binary_search_by(|c| c.dim().cmp(&p.dim()).then_with(|| c.cmp(p))).is_ok()
    }

    pub fn is_integral(&self) -> bool {
        self.cells
            .iter()
            .all(|c| c.vertices().iter().all(|v| arith::is_integral(v)))
    }

    /// The unique cell containing `x` in its relative interior.
    pub fn cell_containing(&self, x: &[Rat]) -> Option<&Polyhedron> {
        self.cells.iter().find(|c| c.relint_contains(x))
    }

    /// Cells having `p` as a face (including `p`).
    pub fn cells_containing(&self, p: &Polyhedron) -> Vec<&Polyhedron> {
        self.cells.iter().filter(|c| p.is_face_of(c)).collect()
    }

    /// Checks that any two maximal cells meet in a common face.
    pub fn validate(&self) -> Result<()> {
        let max = self.maximal_cells();
        for (i, a) in max.iter().enumerate() {
            for b in &max[i + 1..] {
                if let Some(f) = a.intersection(b)? {
                    if !f.is_face_of(a) || !f.is_face_of(b) {
                        return Err(Error::InvalidComplex(format!(
                            "cells {a:?} and {b:?} do not meet in a common face"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A pure `m`-dimensional complex with nonzero integer weights on its
/// maximal cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedComplex {
    ambient_dim: usize,
    dim: usize,
    facets: Vec<(Polyhedron, Int)>,
}

impl WeightedComplex {
    /// Builds a weighted complex of pure dimension `m` from its facets.
    /// Weights on repeated facets add; zero totals are dropped.
    pub fn new(n: usize, m: usize, facets: Vec<(Polyhedron, Int)>) -> Result<WeightedComplex> {
        if m > n {
            return Err(Error::InvalidComplex(format!(
                "pure dimension {m} exceeds ambient dimension {n}"
            )));
        }
        let mut acc: BTreeMap<Polyhedron, Int> = BTreeMap::new();
        for (p, w) in facets {
            check_dim(n, p.ambient_dim())?;
            if p.dim() != m {
                return Err(Error::NotPure(format!(
                    "cell of dimension {} in a complex of dimension {m}",
                    p.dim()
                )));
            }
            *acc.entry(p).or_insert_with(Int::zero) += w;
        }
        Ok(WeightedComplex {
            ambient_dim: n,
            dim: m,
            facets: acc.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
        })
    }

    pub fn empty(n: usize, m: usize) -> WeightedComplex {
        WeightedComplex {
            ambient_dim: n,
            dim: m,
            facets: vec![],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Maximal cells and their weights, in canonical order.
    pub fn facets(&self) -> &[(Polyhedron, Int)] {
        &self.facets
    }

    pub fn weight(&self, p: &Polyhedron) -> Option<&Int> {
        self.facets
            .binary_search_by(|(q, _)| q.cmp(p))
            .ok()
            .map(|i| &self.facets[i].1)
    }

    pub fn complex(&self) -> PolyComplex {
        let cells: Vec<Polyhedron> = self.facets.iter().map(|(p, _)| p.clone()).collect();
        PolyComplex::new(self.ambient_dim, &cells).expect("uniform dimension")
    }

    /// Whether `x` lies on the support.
    pub fn support_contains(&self, x: &[Rat]) -> bool {
        self.facets.iter().any(|(p, _)| p.contains(x))
    }

    pub fn translate(&self, t: &[Rat]) -> WeightedComplex {
        self.map_cells(|p| p.translate(t))
    }

    pub fn negate(&self) -> WeightedComplex {
        self.map_cells(Polyhedron::negate)
    }

    pub(crate) fn map_cells(&self, f: impl Fn(&Polyhedron) -> Polyhedron) -> WeightedComplex {
        let facets = self
            .facets
            .iter()
            .map(|(p, w)| (f(p), w.clone()))
            .collect();
        WeightedComplex::new(self.ambient_dim, self.dim, facets).expect("same shape")
    }

    /// The codimension-one faces of the facets, each with the facets
    /// containing it.
    pub fn ridges(&self) -> Vec<(Polyhedron, Vec<usize>)> {
        let mut map: BTreeMap<Polyhedron, Vec<usize>> = BTreeMap::new();
        for (i, (p, _)) in self.facets.iter().enumerate() {
            for f in p.facets() {
                map.entry(f).or_default().push(i);
            }
        }
        map.into_iter().collect()
    }
}

/// Integer map `ℤⁿ → ℤⁿ/V` given by a basis of the annihilator of `V`.
#[derive(Clone, Debug)]
pub struct Quotient {
    rows: Vec<IntVector>,
}

impl Quotient {
    pub fn new(v: &SubLattice) -> Quotient {
        Quotient {
            rows: perp(v).basis_rows(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, x: &[Rat]) -> QVector {
        self.rows.iter().map(|r| arith::pair(r, x)).collect()
    }
}

/// Primitive integer generator of the ray spanned by the image of
/// facet `sigma` in the quotient by the span of its face `tau`.
pub fn quotient_generator(q: &Quotient, sigma: &Polyhedron, tau: &Polyhedron) -> Option<IntVector> {
    let d = arith::sub(
        &sigma.relative_interior_point(),
        &tau.relative_interior_point(),
    );
    arith::primitive_of(&q.apply(&d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// Codimension-one cells where the weighted sum of generators is nonzero,
    /// with that sum in quotient coordinates.
    pub violations: Vec<(Polyhedron, IntVector)>,
}

/// Checks the balancing condition at every codimension-one cell.
pub fn check_balanced(w: &WeightedComplex) -> BalanceReport {
    let mut violations = Vec::new();
    if w.dim() > 0 {
        for (tau, adj) in w.ridges() {
            let q = Quotient::new(&tau.direction_lattice());
            let mut sum = vec![Int::zero(); q.rank()];
            for &j in &adj {
                let (sigma, m) = &w.facets()[j];
                let v = quotient_generator(&q, sigma, &tau).expect("facet is not parallel to ridge");
                for (s, x) in sum.iter_mut().zip(&v) {
                    *s += m * x;
                }
            }
            if sum.iter().any(|x| !x.is_zero()) {
                violations.push((tau, sum));
            }
        }
    }
    BalanceReport {
        balanced: violations.is_empty(),
        violations,
    }
}

/// The fan of directions `{v : x + εv ∈ Q}` over the cells `Q ⊇ p`, taken
/// at a relative-interior point `basepoint` of `p`.
pub fn star(c: &PolyComplex, p: &Polyhedron, basepoint: &[Rat]) -> Result<Fan> {
    check_dim(c.ambient_dim(), basepoint.len())?;
    if !c.contains_cell(p) {
        return Err(Error::NotACell);
    }
    if !p.relint_contains(basepoint) {
        return Err(Error::BasepointNotInterior);
    }
    let cones = c
        .cells_containing(p)
        .into_iter()
        .map(|q| q.tangent_cone(basepoint))
        .collect::<Result<Vec<_>>>()?;
    Fan::new(c.ambient_dim(), cones)
}

/// Integer weights on the codimension-`codim` cones of a fan.
#[derive(Clone, Debug)]
pub struct MinkowskiWeight {
    pub fan: Fan,
    pub codim: usize,
    pub weights: Vec<(Cone, Int)>,
}

impl MinkowskiWeight {
    fn weight(&self, c: &Cone) -> Int {
        self.weights
            .iter()
            .find(|(d, _)| d == c)
            .map(|(_, w)| w.clone())
            .unwrap_or_default()
    }
}

/// Lattice normal `n_{σ,τ}`: an element of `N_σ` generating `N_σ/N_τ` and
/// pointing into `σ`.
fn lattice_normal(sigma: &Cone, tau: &Cone) -> IntVector {
    let n = sigma.ambient_dim();
    let basis: Vec<QVector> = sigma
        .direction_lattice()
        .basis_rows()
        .iter()
        .map(|b| int_to_rat(b))
        .collect();
    let r = basis.len();
    // Coordinates of a vector of span(σ) in the lattice basis of N_σ.
    let coords = |x: &[Rat]| -> QVector {
        let a: Vec<QVector> = (0..n)
            .map(|i| basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        let (red, piv) = arith::rref(
            &a.iter()
                .zip(x)
                .map(|(row, xi)| {
                    let mut row = row.clone();
                    row.push(xi.clone());
                    row
                })
                .collect::<Vec<_>>(),
            r + 1,
        );
        let mut c = vec![Rat::zero(); r];
        for (row, &p) in red.iter().zip(&piv) {
            c[p] = row[r].clone();
        }
        c
    };
    let tau_coords: Vec<IntVector> = tau
        .direction_lattice()
        .basis_rows()
        .iter()
        .map(|t| {
            coords(&int_to_rat(t))
                .iter()
                .map(|x| x.to_integer())
                .collect()
        })
        .collect();
    let phi = perp(&SubLattice::new(r, &tau_coords).expect("uniform rows")).basis_rows();
    debug_assert_eq!(phi.len(), 1);
    let mut phi = phi[0].clone();
    let inward = coords(&arith::sub(
        &sigma.relative_interior_point(),
        &tau.relative_interior_point(),
    ));
    if arith::pair(&phi, &inward).is_negative() {
        phi.iter_mut().for_each(|x| *x = -&*x);
    }
    // Solve ⟨φ, c⟩ = 1 by extended gcd over the entries of φ.
    let mut c = vec![Int::zero(); r];
    let mut g = Int::zero();
    for (i, a) in phi.iter().enumerate() {
        let e = g.extended_gcd(a);
        for cj in c.iter_mut().take(i) {
            *cj *= &e.x;
        }
        c[i] = e.y;
        g = e.gcd;
    }
    debug_assert!(g.is_one());
    let mut out = vec![Int::zero(); n];
    for (ci, b) in c.iter().zip(sigma.direction_lattice().basis_rows()) {
        for (o, bi) in out.iter_mut().zip(&b) {
            *o += ci * bi;
        }
    }
    out
}

/// Checks `Σ_σ c(σ)⟨u, n_{σ,τ}⟩ = 0` for every cone `τ` one dimension below
/// the weighted cones and every `u` in a basis of `τ^⊥`.
pub fn is_minkowski_weight(mw: &MinkowskiWeight) -> Result<bool> {
    if !mw.fan.is_complete() {
        return Err(Error::IncompleteFan);
    }
    let n = mw.fan.ambient_dim();
    if mw.codim >= n {
        return Ok(true);
    }
    let k = n - mw.codim;
    let cones = mw.fan.all_cones();
    let top: Vec<&Cone> = cones.iter().filter(|c| c.dim() == k).collect();
    for tau in cones.iter().filter(|c| c.dim() + 1 == k) {
        let us = perp(&tau.direction_lattice()).basis_rows();
        let mut sums = vec![Int::zero(); us.len()];
        for sigma in top.iter().filter(|s| tau.is_face_of(s)) {
            let c = mw.weight(sigma);
            if c.is_zero() {
                continue;
            }
            let nv = lattice_normal(sigma, tau);
            for (s, u) in sums.iter_mut().zip(&us) {
                *s += &c * arith::dot_int(u, &nv);
            }
        }
        if sums.iter().any(|s| !s.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every cell of `d` is a union of cells of `c`, and every cell of
/// `c` lies in some cell of `d`.
pub fn is_complex_refinement(c: &PolyComplex, d: &PolyComplex) -> bool {
    c.ambient_dim() == d.ambient_dim()
        && d.maximal_cells()
            .iter()
            .all(|cell| covers_by_union(c.cells(), cell))
        && c.maximal_cells()
            .iter()
            .all(|cell| d.cells().iter().any(|e| cell.is_subset_of(e)))
}
