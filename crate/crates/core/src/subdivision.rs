//! Regular subdivisions induced by height functions and their dual complexes.
//!
//! Points `χ ∈ A` are lifted to `(χ, a_χ)`; the cells of the subdivision are
//! the bounded faces of `Conv(lifts) + ℝ₊·e_{n+1}`, each remembering every
//! point of `A` whose lift lies on it. The dual complex is cut out by the
//! piecewise-linear function `F(w) = min_χ ⟨χ,w⟩ + a_χ`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::{self, int_to_rat, Int, QVector, Rat};
use crate::complexes::PolyComplex;
use crate::error::{check_dim, Error, Result};
use crate::lattice::IntMatrix;
use crate::polyhedra::{conv_hull, Polyhedron};

/// A finite point set `A ⊂ ℤⁿ` with rational heights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeightedConfig {
    dim: usize,
    points: Vec<Vec<i64>>,
    heights: Vec<Rat>,
}

impl HeightedConfig {
    pub fn new(dim: usize, points: Vec<Vec<i64>>, heights: Vec<Rat>) -> Result<Self> {
        check_dim(points.len(), heights.len())?;
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        for p in &points {
            check_dim(dim, p.len())?;
        }
        let mut sorted: Vec<&Vec<i64>> = points.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Schema("points must be distinct".into()));
        }
        Ok(HeightedConfig {
            dim,
            points,
            heights,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn heights(&self) -> &[Rat] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub(crate) fn point_q(&self, i: usize) -> QVector {
        self.points[i].iter().map(|&x| arith::rat(x)).collect()
    }

    fn lifted(&self, i: usize) -> QVector {
        let mut v = self.point_q(i);
        v.push(self.heights[i].clone());
        v
    }

    /// The affine form `⟨χ, w⟩ + a_χ` of point `i`.
    pub fn form(&self, i: usize, w: &[Rat]) -> Rat {
        arith::dot(&self.point_q(i), w) + &self.heights[i]
    }
}

/// A cell `Γ ⊆ A` of a subdivision together with the polytope `Conv(Γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    /// Indices into the configuration, increasing.
    pub marked: Vec<usize>,
    pub hull: Polyhedron,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.hull.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSubdivision {
    pub config: HeightedConfig,
    /// All cells, closed under faces, ordered by dimension then marked set.
    pub cells: Vec<Cell>,
}

impl RegularSubdivision {
    pub fn maximal_cells(&self) -> Vec<&Cell> {
        self.cells
            .iter()
            .filter(|c| {
                !self.cells.iter().any(|d| {
                    d.dim() > c.dim() && c.marked.iter().all(|i| d.marked.contains(i))
                })
            })
            .collect()
    }

    pub fn marked_points(&self, c: &Cell) -> Vec<Vec<i64>> {
        c.marked.iter().map(|&i| self.config.points[i].clone()).collect()
    }
}

pub fn upper_hull_subdivision(cfg: &HeightedConfig) -> RegularSubdivision {
    let n = cfg.dim;
    let lifts: Vec<QVector> = (0..cfg.len()).map(|i| cfg.lifted(i)).collect();
    let mut up = vec![Rat::zero(); n + 1];
    up[n] = Rat::one();
    let uh = Polyhedron::from_generators(n + 1, &lifts, &[up], &[]).expect("nonempty config");
    let mut cells: Vec<Cell> = uh
        .faces()
        .into_iter()
        .filter(|f| f.rays().is_empty())
        .map(|f| {
            let marked: Vec<usize> = (0..cfg.len()).filter(|&i| f.contains(&lifts[i])).collect();
            let pts: Vec<QVector> = marked.iter().map(|&i| cfg.point_q(i)).collect();
            Cell {
                hull: conv_hull(&pts).expect("nonempty face"),
                marked,
            }
        })
        .collect();
    cells.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.marked.cmp(&b.marked)));
    RegularSubdivision {
        config: cfg.clone(),
        cells,
    }
}

/// The closed cell `C_Γ = {w : ⟨χ,w⟩ + a_χ = F(w) for all χ ∈ Γ}`.
fn dual_cell(cfg: &HeightedConfig, gamma: &[usize]) -> Polyhedron {
    let n = cfg.dim;
    let g0 = gamma[0];
    let x0 = cfg.point_q(g0);
    let a0 = &cfg.heights[g0];
    // ⟨χ − χ₀, w⟩ (= or ≥) a₀ − a_χ
    let row = |i: usize| (arith::sub(&cfg.point_q(i), &x0), a0 - &cfg.heights[i]);
    let eqs: Vec<(QVector, Rat)> = gamma[1..].iter().map(|&i| row(i)).collect();
    let ineqs: Vec<(QVector, Rat)> = (0..cfg.len())
        .filter(|i| !gamma.contains(i))
        .map(row)
        .collect();
    Polyhedron::from_constraints(n, &ineqs, &eqs)
        .expect("uniform dimension")
        .expect("dual of a lower face is nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCell {
    /// The subdivision cell `Γ` this cell is dual to.
    pub gamma: Vec<usize>,
    pub cell: Polyhedron,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualComplex {
    pub config: HeightedConfig,
    /// `cells[i]` is dual to `subdivision.cells[i]`.
    pub cells: Vec<DualCell>,
    pub subdivision: RegularSubdivision,
}

impl DualComplex {
    pub fn complex(&self) -> PolyComplex {
        let cells: Vec<Polyhedron> = self.cells.iter().map(|c| c.cell.clone()).collect();
        PolyComplex::new(self.config.dim, &cells).expect("uniform dimension")
    }

    /// Full-dimensional regions, each with the point `χ` and height `a_χ`
    /// of the affine form `F` restricts to there.
    pub fn regions(&self) -> Vec<(&Polyhedron, &[i64], &Rat)> {
        self.cells
            .iter()
            .filter(|c| c.gamma.len() == 1)
            .map(|c| {
                let i = c.gamma[0];
                (&c.cell, self.config.points[i].as_slice(), &self.config.heights[i])
            })
            .collect()
    }

    pub fn cells_of_dim(&self, k: usize) -> impl Iterator<Item = &DualCell> {
        self.cells.iter().filter(move |c| c.cell.dim() == k)
    }
}

pub fn dual_complex(cfg: &HeightedConfig) -> DualComplex {
    let sub = upper_hull_subdivision(cfg);
    let cells = sub
        .cells
        .iter()
        .map(|c| DualCell {
            gamma: c.marked.clone(),
            cell: dual_cell(cfg, &c.marked),
        })
        .collect();
    DualComplex {
        config: cfg.clone(),
        cells,
        subdivision: sub,
    }
}

/// `F(w)` and the indices of all points attaining it.
pub fn pl_min(cfg: &HeightedConfig, w: &[Rat]) -> Result<(Rat, Vec<usize>)> {
    check_dim(cfg.dim, w.len())?;
    let vals: Vec<Rat> = (0..cfg.len()).map(|i| cfg.form(i, w)).collect();
    let m = vals.iter().min().expect("nonempty config").clone();
    let arg = (0..cfg.len()).filter(|&i| vals[i] == m).collect();
    Ok((m, arg))
}

/// Image configuration `B = p(A)` with `b(ψ) = min{a(χ) : p(χ) = ψ}`.
/// Image points appear in order of first occurrence.
pub fn image_height(cfg: &HeightedConfig, proj: &IntMatrix) -> Result<HeightedConfig> {
    check_dim(cfg.dim, proj.cols())?;
    let mut order: Vec<Vec<i64>> = Vec::new();
    let mut best: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
    for (p, a) in cfg.points.iter().zip(&cfg.heights) {
        let x: Vec<Int> = p.iter().map(|&v| Int::from(v)).collect();
        let img = (0..proj.rows())
            .map(|r| {
                let v = arith::dot_int(proj.row(r), &x);
                i64::try_from(v).map_err(|_| Error::Schema("projected coordinate overflows".into()))
            })
            .collect::<Result<Vec<i64>>>()?;
        match best.get_mut(&img) {
            Some(b) if *b <= *a => {}
            Some(b) => *b = a.clone(),
            None => {
                order.push(img.clone());
                best.insert(img, a.clone());
            }
        }
    }
    let heights = order.iter().map(|p| best[p].clone()).collect();
    HeightedConfig::new(proj.rows(), order, heights)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitNode {
    pub cell: Vec<usize>,
    pub dim: usize,
}

/// Face poset of the subdivision: nodes labelled by hull dimension, and
/// cover relations `(lower, upper)` as node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoset {
    pub nodes: Vec<OrbitNode>,
    pub covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    pub fn count_by_dim(&self) -> Vec<usize> {
        let top = self.nodes.iter().map(|n| n.dim).max().unwrap_or(0);
        (0..=top)
            .map(|d| self.nodes.iter().filter(|n| n.dim == d).count())
            .collect()
    }

    pub fn maximal(&self) -> Vec<&OrbitNode> {
        (0..self.nodes.len())
            .filter(|&i| !self.covers.iter().any(|&(lo, _)| lo == i))
            .map(|i| &self.nodes[i])
            .collect()
    }
}

pub fn orbit_poset(cfg: &HeightedConfig) -> OrbitPoset {
    let sub = upper_hull_subdivision(cfg);
    let nodes: Vec<OrbitNode> = sub
        .cells
        .iter()
        .map(|c| OrbitNode {
            cell: c.marked.clone(),
            dim: c.dim(),
        })
        .collect();
    let mut covers = Vec::new();
    for (i, a) in sub.cells.iter().enumerate() {
        for (j, b) in sub.cells.iter().enumerate() {
            if b.dim() == a.dim() + 1 && a.hull.is_face_of(&b.hull) {
                covers.push((i, j));
            }
        }
    }
    OrbitPoset { nodes, covers }
}

pub(crate) fn int_point(p: &[i64]) -> QVector {
    int_to_rat(&p.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
}
