use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::{Cone, Polyhedron};
use crate::error::{check_dim, Result};

/// A fan stored by its maximal cones; faces are generated on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    ambient_dim: usize,
    cones: Vec<Cone>,
}

impl Fan {
    /// Builds a fan from cones, discarding any cone contained in another.
    /// The caller guarantees the cones meet along common faces.
    pub fn new(n: usize, cones: Vec<Cone>) -> Result<Fan> {
        for c in &cones {
            check_dim(n, c.ambient_dim())?;
        }
        let uniq: BTreeSet<Cone> = cones.into_iter().collect();
        let uniq: Vec<Cone> = uniq.into_iter().collect();
        let cones = uniq
            .iter()
            .enumerate()
            .filter(|(i, c)| {
                !uniq
                    .iter()
                    .enumerate()
                    .any(|(j, d)| *i != j && c.is_subset_of(d))
            })
            .map(|(_, c)| c.clone())
            .collect();
        Ok(Fan {
            ambient_dim: n,
            cones,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn maximal_cones(&self) -> &[Cone] {
        &self.cones
    }

    /// Every cone of the fan (faces of maximal cones), by dimension.
    pub fn all_cones(&self) -> Vec<Cone> {
        let set: BTreeSet<Cone> = self.cones.iter().flat_map(|c| c.faces()).collect();
        let mut v: Vec<Cone> = set.into_iter().collect();
        v.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        v
    }

    pub fn cones_of_dim(&self, k: usize) -> Vec<Cone> {
        self.all_cones().into_iter().filter(|c| c.dim() == k).collect()
    }

    /// Union is ℝⁿ: every maximal cone is full-dimensional and each
    /// codimension-one face borders exactly two of them.
    pub fn is_complete(&self) -> bool {
        let n = self.ambient_dim;
        if self.cones.is_empty() || self.cones.iter().any(|c| c.dim() != n) {
            return false;
        }
        let mut count: HashMap<Cone, usize> = HashMap::new();
        for c in &self.cones {
            for f in c.facets() {
                *count.entry(f).or_default() += 1;
            }
        }
        count.values().all(|&k| k == 2)
    }

    /// Whether every cone of `other` is a union of cones of `self`.
    pub fn refines(&self, other: &Fan) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        let cells = self.all_cones();
        other.cones.iter().all(|d| covers_by_union(&cells, d))
    }

    /// Cones `σ ∩ τ` for maximal `σ`, `τ` of the two fans.
    pub fn common_refinement(&self, other: &Fan) -> Result<Fan> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut cones = Vec::new();
        for a in &self.cones {
            for b in &other.cones {
                if let Some(c) = a.intersection(b)? {
                    cones.push(c);
                }
            }
        }
        Fan::new(self.ambient_dim, cones)
    }

    /// The maximal cones containing `x`.
    pub fn cones_containing(&self, x: &[num_rational::BigRational]) -> Vec<&Cone> {
        self.cones.iter().filter(|c| c.contains(x)).collect()
    }
}

/// Whether `d` is the union of those cells of a face-closed collection that
/// it contains. The top-dimensional cells inside `d` must be nonempty and
/// every ridge of them must either lie on the boundary of `d` or be shared by
/// exactly two of them.
pub fn covers_by_union(cells: &[Polyhedron], d: &Polyhedron) -> bool {
    let k = d.dim();
    let inside: Vec<&Polyhedron> = cells
        .iter()
        .filter(|c| c.dim() == k && c.ambient_dim() == d.ambient_dim() && c.is_subset_of(d))
        .collect();
    if inside.is_empty() {
        return false;
    }
    if k == 0 || d.inequalities().is_empty() && inside.len() == 1 && *inside[0] == *d {
        return true;
    }
    let mut count: HashMap<Polyhedron, usize> = HashMap::new();
    for c in &inside {
        for f in c.facets() {
            *count.entry(f).or_default() += 1;
        }
    }
    count.iter().all(|(f, &m)| {
        let x = f.relative_interior_point();
        let on_boundary = d.inequalities().iter().any(|c| c.eval(&x).is_zero());
        if on_boundary {
            m == 1
        } else {
            m == 2
        }
    })
}
