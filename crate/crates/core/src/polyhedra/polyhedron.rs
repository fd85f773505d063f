use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::dd::{double_description, Bits};
use crate::arith::{
    self, int_to_rat, pair, primitive_of, rank, rref, IntVector, QVector, Rat,
};
use crate::error::{check_dim, Error, Result};
use crate::lattice::{perp, saturate, SubLattice};

/// `⟨normal, x⟩ ≥ rhs` (or `=` when used as an equality). Normals are
/// primitive integer vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Constraint {
    pub normal: IntVector,
    pub rhs: Rat,
}

impl Constraint {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        pair(&self.normal, x) - &self.rhs
    }

    /// Homogeneous value on a direction (ray or lineality vector).
    pub fn eval_dir(&self, d: &[Rat]) -> Rat {
        pair(&self.normal, d)
    }
}

/// A nonempty rational polyhedron with both representations in canonical
/// form. Two polyhedra are equal as sets iff they compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyhedron {
    ambient_dim: usize,
    vertices: Vec<QVector>,
    rays: Vec<IntVector>,
    lineality: SubLattice,
    equalities: Vec<Constraint>,
    inequalities: Vec<Constraint>,
}

/// A cone is a polyhedron whose only vertex (modulo lineality) is the origin.
pub type Cone = Polyhedron;

struct LinealityReducer {
    rows: Vec<QVector>,
    pivots: Vec<usize>,
}

impl LinealityReducer {
    fn new(lin: &SubLattice) -> Self {
        let rows: Vec<QVector> = lin.basis_rows().iter().map(|r| int_to_rat(r)).collect();
        let (rows, pivots) = rref(&rows, lin.ambient_dim());
        LinealityReducer { rows, pivots }
    }

    fn reduce(&self, x: &[Rat]) -> QVector {
        let mut x = x.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !x[p].is_zero() {
                let f = x[p].clone();
                for (xi, ri) in x.iter_mut().zip(row) {
                    *xi -= &f * ri;
                }
            }
        }
        x
    }
}

fn to_int_row(v: &[Rat]) -> IntVector {
    primitive_of(v).unwrap_or_else(|| vec![Default::default(); v.len()])
}

impl Polyhedron {
    /// Assembles a canonical polyhedron from raw, mutually consistent data.
    /// `ineqs` must contain exactly the facet-defining inequalities (possibly
    /// repeated or scaled); vertices and rays must be the minimal generators.
    fn assemble(
        n: usize,
        eqs: &[(QVector, Rat)],
        ineqs: &[(QVector, Rat)],
        vertices: &[QVector],
        rays: &[QVector],
        lineality: SubLattice,
    ) -> Polyhedron {
        let aug: Vec<QVector> = eqs
            .iter()
            .map(|(a, b)| {
                let mut r = a.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let (red, pivots) = rref(&aug, n + 1);
        debug_assert!(pivots.iter().all(|&p| p < n), "inconsistent equalities");
        let equalities: Vec<Constraint> = red
            .iter()
            .map(|row| {
                let a = to_int_row(&row[..n]);
                // Positive rescaling that turns row[..n] into `a`.
                let p = a.iter().position(|x| !x.is_zero()).unwrap();
                let f = Rat::from_integer(a[p].clone()) / &row[p];
                Constraint {
                    rhs: &row[n] * &f,
                    normal: a,
                }
            })
            .collect();

        let mut inequalities: Vec<Constraint> = ineqs
            .iter()
            .filter_map(|(a, b)| {
                let mut a = a.clone();
                let mut b = b.clone();
                for (row, &p) in red.iter().zip(&pivots) {
                    if !a[p].is_zero() {
                        let f = a[p].clone();
                        for (ai, ri) in a.iter_mut().zip(row.iter()) {
                            *ai -= &f * ri;
                        }
                        b -= &f * &row[n];
                    }
                }
                let ai = primitive_of(&a)?;
                let k = a
                    .iter()
                    .zip(&ai)
                    .find(|(x, _)| !x.is_zero())
                    .map(|(x, y)| Rat::from_integer(y.clone()) / x)
                    .unwrap();
                Some(Constraint {
                    normal: ai,
                    rhs: b * k,
                })
            })
            .collect();
        inequalities.sort();
        inequalities.dedup();

        let lin = saturate(&lineality);
        let reducer = LinealityReducer::new(&lin);
        let mut verts: Vec<QVector> = vertices.iter().map(|v| reducer.reduce(v)).collect();
        verts.sort();
        verts.dedup();
        let mut rs: Vec<IntVector> = rays
            .iter()
            .filter_map(|r| primitive_of(&reducer.reduce(r)))
            .collect();
        rs.sort();
        rs.dedup();
        Polyhedron {
            ambient_dim: n,
            vertices: verts,
            rays: rs,
            lineality: lin,
            equalities,
            inequalities,
        }
    }

    /// The polyhedron `conv(vertices) + cone(rays) + span(lineality)`.
    pub fn from_generators(
        n: usize,
        vertices: &[QVector],
        rays: &[QVector],
        lineality: &[QVector],
    ) -> Result<Polyhedron> {
        if vertices.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        for v in vertices.iter().chain(rays).chain(lineality) {
            check_dim(n, v.len())?;
        }
        let lin_rows: Vec<IntVector> = lineality.iter().filter_map(|l| primitive_of(l)).collect();
        let lin = saturate(&SubLattice::new(n, &lin_rows)?);
        let lin_q: Vec<QVector> = lin.basis_rows().iter().map(|r| int_to_rat(r)).collect();

        // Polar cone in (c0, a)-space: c0 + ⟨a, v⟩ ≥ 0, ⟨a, r⟩ ≥ 0, ⟨a, l⟩ = 0.
        let hom = |x0: i64, x: &[Rat]| -> IntVector {
            let mut v = vec![arith::rat(x0)];
            v.extend_from_slice(x);
            to_int_row(&v)
        };
        let mut cons: Vec<IntVector> = vertices.iter().map(|v| hom(1, v)).collect();
        cons.extend(rays.iter().filter(|r| !arith::is_zero_vec(r)).map(|r| hom(0, r)));
        let eqs: Vec<IntVector> = lin_q.iter().map(|l| hom(0, l)).collect();
        let polar = double_description(n + 1, &cons, &eqs);

        let split = |c: &IntVector| -> (QVector, Rat) {
            (int_to_rat(&c[1..]), -Rat::from_integer(c[0].clone()))
        };
        let eq_rows: Vec<(QVector, Rat)> = polar.lineality.iter().map(split).collect();
        let ineq_rows: Vec<(QVector, Rat)> = polar
            .rays
            .iter()
            .map(split)
            .filter(|(a, _)| !arith::is_zero_vec(a))
            .collect();

        // Keep only extreme generators.
        let lin_dim = lin.rank();
        let eq_normals: Vec<QVector> = eq_rows.iter().map(|(a, _)| a.clone()).collect();
        let tight_rank = |x: &[Rat], homogeneous: bool| -> usize {
            let mut rows = eq_normals.clone();
            for (a, b) in &ineq_rows {
                let v = arith::dot(a, x);
                let t = if homogeneous { v.is_zero() } else { v == *b };
                if t {
                    rows.push(a.clone());
                }
            }
            rank(&rows, n)
        };
        let verts: Vec<QVector> = vertices
            .iter()
            .filter(|v| tight_rank(v, false) == n - lin_dim)
            .cloned()
            .collect();
        let reducer = LinealityReducer::new(&lin);
        let rs: Vec<QVector> = rays
            .iter()
            .filter(|r| !arith::is_zero_vec(&reducer.reduce(r)))
            .filter(|r| tight_rank(r, true) == n - lin_dim - 1)
            .cloned()
            .collect();
        Ok(Self::assemble(n, &eq_rows, &ineq_rows, &verts, &rs, lin))
    }

    /// `{x : ⟨a,x⟩ ≥ b for (a,b) in ineqs, ⟨e,x⟩ = f for (e,f) in eqs}`, or
    /// `None` if that set is empty.
    pub fn from_constraints(
        n: usize,
        ineqs: &[(QVector, Rat)],
        eqs: &[(QVector, Rat)],
    ) -> Result<Option<Polyhedron>> {
        for (a, _) in ineqs.iter().chain(eqs) {
            check_dim(n, a.len())?;
        }
        let hom = |(a, b): &(QVector, Rat)| -> IntVector {
            let mut v = vec![-b.clone()];
            v.extend_from_slice(a);
            to_int_row(&v)
        };
        let mut cons = vec![{
            let mut e = vec![Rat::zero(); n + 1];
            e[0] = Rat::one();
            to_int_row(&e)
        }];
        cons.extend(ineqs.iter().map(hom));
        let eq_rows: Vec<IntVector> = eqs.iter().map(hom).collect();
        let g = double_description(n + 1, &cons, &eq_rows);

        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in &g.rays {
            let x0 = Rat::from_integer(r[0].clone());
            let rest = int_to_rat(&r[1..]);
            if x0.is_zero() {
                rays.push(rest);
            } else {
                vertices.push(arith::scale(&x0.recip(), &rest));
            }
        }
        if vertices.is_empty() {
            return Ok(None);
        }
        let lineality: Vec<QVector> = g.lineality.iter().map(|l| int_to_rat(&l[1..])).collect();
        Self::from_generators(n, &vertices, &rays, &lineality).map(Some)
    }

    pub fn point(x: &[Rat]) -> Polyhedron {
        Self::from_generators(x.len(), &[x.to_vec()], &[], &[]).expect("nonempty")
    }

    /// The whole space ℝⁿ.
    pub fn whole_space(n: usize) -> Polyhedron {
        let lin: Vec<QVector> = (0..n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n];
                e[i] = Rat::one();
                e
            })
            .collect();
        Self::from_generators(n, &[vec![Rat::zero(); n]], &[], &lin).expect("nonempty")
    }

    /// The cone generated by `rays` plus the linear span of `lineality`.
    pub fn cone(n: usize, rays: &[QVector], lineality: &[QVector]) -> Result<Cone> {
        Self::from_generators(n, &[vec![Rat::zero(); n]], rays, lineality)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equalities.len()
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vertices
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &SubLattice {
        &self.lineality
    }

    pub fn equalities(&self) -> &[Constraint] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Constraint] {
        &self.inequalities
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.rank() == 0
    }

    pub fn is_cone(&self) -> bool {
        self.vertices.len() == 1 && arith::is_zero_vec(&self.vertices[0])
    }

    fn ray_q(&self) -> Vec<QVector> {
        self.rays.iter().map(|r| int_to_rat(r)).collect()
    }

    fn lineality_q(&self) -> Vec<QVector> {
        self.lineality.basis_rows().iter().map(|r| int_to_rat(r)).collect()
    }

    /// Barycenter of the vertices plus the sum of the rays: a strictly
    /// positive combination of all generators, hence relatively interior.
    pub fn relative_interior_point(&self) -> QVector {
        let k = Rat::from_integer(self.vertices.len().into());
        let mut p = vec![Rat::zero(); self.ambient_dim];
        for v in &self.vertices {
            p = arith::add(&p, v);
        }
        p = arith::scale(&k.recip(), &p);
        for r in &self.rays {
            p = arith::add(&p, &int_to_rat(r));
        }
        p
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.ambient_dim
            && self.equalities.iter().all(|c| c.eval(x).is_zero())
            && self.inequalities.iter().all(|c| !c.eval(x).is_negative())
    }

    pub fn relint_contains(&self, x: &[Rat]) -> bool {
        x.len() == self.ambient_dim
            && self.equalities.iter().all(|c| c.eval(x).is_zero())
            && self.inequalities.iter().all(|c| c.eval(x).is_positive())
    }

    /// Containment of sets, checked on generators.
    pub fn is_subset_of(&self, other: &Polyhedron) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        let rays = self.ray_q();
        let lin = self.lineality_q();
        self.vertices.iter().all(|v| other.contains(v))
            && rays.iter().all(|r| {
                other.equalities.iter().all(|c| c.eval_dir(r).is_zero())
                    && other.inequalities.iter().all(|c| !c.eval_dir(r).is_negative())
            })
            && lin.iter().all(|l| {
                other
                    .equalities
                    .iter()
                    .chain(&other.inequalities)
                    .all(|c| c.eval_dir(l).is_zero())
            })
    }

    /// Saturated lattice of integer vectors parallel to the affine hull.
    pub fn direction_lattice(&self) -> SubLattice {
        perp(&self.normal_lattice())
    }

    /// Saturated lattice of integer covectors constant on the polyhedron.
    pub fn normal_lattice(&self) -> SubLattice {
        let rows: Vec<IntVector> = self.equalities.iter().map(|c| c.normal.clone()).collect();
        saturate(&SubLattice::new(self.ambient_dim, &rows).expect("uniform rows"))
    }

    pub fn translate(&self, t: &[Rat]) -> Polyhedron {
        let eqs: Vec<(QVector, Rat)> = self
            .equalities
            .iter()
            .map(|c| (int_to_rat(&c.normal), &c.rhs + pair(&c.normal, t)))
            .collect();
        let ineqs: Vec<(QVector, Rat)> = self
            .inequalities
            .iter()
            .map(|c| (int_to_rat(&c.normal), &c.rhs + pair(&c.normal, t)))
            .collect();
        let verts: Vec<QVector> = self.vertices.iter().map(|v| arith::add(v, t)).collect();
        Self::assemble(
            self.ambient_dim,
            &eqs,
            &ineqs,
            &verts,
            &self.ray_q(),
            self.lineality.clone(),
        )
    }

    /// The pointwise negation `−P`.
    pub fn negate(&self) -> Polyhedron {
        let flip = |c: &Constraint| (arith::neg(&int_to_rat(&c.normal)), c.rhs.clone());
        let eqs: Vec<(QVector, Rat)> = self.equalities.iter().map(flip).collect();
        let ineqs: Vec<(QVector, Rat)> = self.inequalities.iter().map(flip).collect();
        let verts: Vec<QVector> = self.vertices.iter().map(|v| arith::neg(v)).collect();
        let rays: Vec<QVector> = self.ray_q().iter().map(|r| arith::neg(r)).collect();
        Self::assemble(
            self.ambient_dim,
            &eqs,
            &ineqs,
            &verts,
            &rays,
            self.lineality.clone(),
        )
    }

    pub fn intersection(&self, other: &Polyhedron) -> Result<Option<Polyhedron>> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let as_rows = |cs: &[Constraint]| -> Vec<(QVector, Rat)> {
            cs.iter()
                .map(|c| (int_to_rat(&c.normal), c.rhs.clone()))
                .collect()
        };
        let mut ineqs = as_rows(&self.inequalities);
        ineqs.extend(as_rows(&other.inequalities));
        let mut eqs = as_rows(&self.equalities);
        eqs.extend(as_rows(&other.equalities));
        Self::from_constraints(self.ambient_dim, &ineqs, &eqs)
    }

    /// Image under an invertible linear map given by its matrix rows.
    pub fn map_linear(&self, rows: &[QVector]) -> Result<Polyhedron> {
        check_dim(self.ambient_dim, rows.len())?;
        let apply = |x: &[Rat]| -> QVector { rows.iter().map(|r| arith::dot(r, x)).collect() };
        let verts: Vec<QVector> = self.vertices.iter().map(|v| apply(v)).collect();
        let rays: Vec<QVector> = self.ray_q().iter().map(|r| apply(r)).collect();
        let lin: Vec<QVector> = self.lineality_q().iter().map(|l| apply(l)).collect();
        Self::from_generators(self.ambient_dim, &verts, &rays, &lin)
    }

    // ---- face structure -------------------------------------------------

    fn generator_count(&self) -> usize {
        self.vertices.len() + self.rays.len()
    }

    /// Incidence of each facet with the generators (vertices, then rays).
    fn incidence(&self) -> Vec<Bits> {
        let g = self.generator_count();
        let rays = self.ray_q();
        self.inequalities
            .iter()
            .map(|c| {
                let mut b = Bits::new(g);
                for (i, v) in self.vertices.iter().enumerate() {
                    if c.eval(v).is_zero() {
                        b.insert(i);
                    }
                }
                for (i, r) in rays.iter().enumerate() {
                    if c.eval_dir(r).is_zero() {
                        b.insert(self.vertices.len() + i);
                    }
                }
                b
            })
            .collect()
    }

    fn gen_set_dim(&self, s: &Bits) -> Option<usize> {
        let nv = self.vertices.len();
        let verts: Vec<usize> = s.ones(nv).collect();
        let v0 = &self.vertices[*verts.first()?];
        let mut rows: Vec<QVector> = verts[1..]
            .iter()
            .map(|&i| arith::sub(&self.vertices[i], v0))
            .collect();
        for i in s.ones(self.generator_count()).filter(|&i| i >= nv) {
            rows.push(int_to_rat(&self.rays[i - nv]));
        }
        rows.extend(self.lineality_q());
        Some(rank(&rows, self.ambient_dim))
    }

    fn face_from_gens(&self, s: &Bits, inc: &[Bits]) -> Polyhedron {
        let nv = self.vertices.len();
        let g = self.generator_count();
        let d = self.gen_set_dim(s).expect("face has a vertex");
        let mut eqs: Vec<(QVector, Rat)> = self
            .equalities
            .iter()
            .map(|c| (int_to_rat(&c.normal), c.rhs.clone()))
            .collect();
        let mut ineqs = Vec::new();
        for (c, b) in self.inequalities.iter().zip(inc) {
            let row = (int_to_rat(&c.normal), c.rhs.clone());
            if s.is_subset(b) {
                eqs.push(row);
            } else if d > 0 && self.gen_set_dim(&s.and(b)) == Some(d - 1) {
                ineqs.push(row);
            }
        }
        let verts: Vec<QVector> = s.ones(nv).map(|i| self.vertices[i].clone()).collect();
        let rays: Vec<QVector> = s
            .ones(g)
            .filter(|&i| i >= nv)
            .map(|i| int_to_rat(&self.rays[i - nv]))
            .collect();
        Self::assemble(
            self.ambient_dim,
            &eqs,
            &ineqs,
            &verts,
            &rays,
            self.lineality.clone(),
        )
    }

    /// All nonempty faces, including the polyhedron itself, sorted by
    /// dimension and then canonical order.
    pub fn faces(&self) -> Vec<Polyhedron> {
        let g = self.generator_count();
        let inc = self.incidence();
        let mut seen: HashSet<Bits> = HashSet::new();
        let full = Bits::full(g);
        let mut stack = vec![(full.clone(), self.dim())];
        seen.insert(full.clone());
        let mut out = vec![];
        while let Some((s, d)) = stack.pop() {
            out.push(s.clone());
            if d == 0 {
                continue;
            }
            for b in &inc {
                let t = s.and(b);
                if t == s || seen.contains(&t) {
                    continue;
                }
                if self.gen_set_dim(&t) == Some(d - 1) {
                    seen.insert(t.clone());
                    stack.push((t, d - 1));
                }
            }
        }
        let mut faces: Vec<Polyhedron> = out
            .iter()
            .map(|s| {
                if *s == full {
                    self.clone()
                } else {
                    self.face_from_gens(s, &inc)
                }
            })
            .collect();
        faces.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        faces
    }

    /// Faces of dimension one less than the polyhedron.
    pub fn facets(&self) -> Vec<Polyhedron> {
        let d = self.dim();
        if d == 0 {
            return vec![];
        }
        let inc = self.incidence();
        let mut sets: BTreeSet<Bits> = BTreeSet::new();
        let mut out = vec![];
        for b in &inc {
            if self.gen_set_dim(b) == Some(d - 1) && sets.insert(b.clone()) {
                out.push(self.face_from_gens(b, &inc));
            }
        }
        out.sort();
        out
    }

    /// The smallest face containing `x` (which must lie in the polyhedron).
    pub fn smallest_face_containing(&self, x: &[Rat]) -> Option<Polyhedron> {
        if !self.contains(x) {
            return None;
        }
        let inc = self.incidence();
        let mut s = Bits::full(self.generator_count());
        for (c, b) in self.inequalities.iter().zip(&inc) {
            if c.eval(x).is_zero() {
                s = s.and(b);
            }
        }
        if s == Bits::full(self.generator_count()) {
            return Some(self.clone());
        }
        Some(self.face_from_gens(&s, &inc))
    }

    pub fn is_face_of(&self, other: &Polyhedron) -> bool {
        self.is_subset_of(other)
            && other
                .smallest_face_containing(&self.relative_interior_point())
                .as_ref()
                == Some(self)
    }

    /// The face minimizing `⟨x, v⟩`.
    pub fn face_in_direction(&self, v: &[Rat]) -> Result<Polyhedron> {
        check_dim(self.ambient_dim, v.len())?;
        let bounded = self
            .ray_q()
            .iter()
            .all(|r| !arith::dot(r, v).is_negative())
            && self
                .lineality_q()
                .iter()
                .all(|l| arith::dot(l, v).is_zero());
        if !bounded {
            return Err(Error::UnboundedDirection);
        }
        let m = self
            .vertices
            .iter()
            .map(|x| arith::dot(x, v))
            .min()
            .expect("nonempty");
        let mut eqs: Vec<(QVector, Rat)> = self
            .equalities
            .iter()
            .map(|c| (int_to_rat(&c.normal), c.rhs.clone()))
            .collect();
        if !arith::is_zero_vec(v) {
            eqs.push((v.to_vec(), m));
        }
        let ineqs: Vec<(QVector, Rat)> = self
            .inequalities
            .iter()
            .map(|c| (int_to_rat(&c.normal), c.rhs.clone()))
            .collect();
        Ok(Self::from_constraints(self.ambient_dim, &ineqs, &eqs)?.expect("face is nonempty"))
    }

    /// Tangent cone at a point of the polyhedron: `{v : x + εv ∈ P, ε > 0 small}`.
    pub fn tangent_cone(&self, x: &[Rat]) -> Result<Cone> {
        check_dim(self.ambient_dim, x.len())?;
        let ineqs: Vec<(QVector, Rat)> = self
            .inequalities
            .iter()
            .filter(|c| c.eval(x).is_zero())
            .map(|c| (int_to_rat(&c.normal), Rat::zero()))
            .collect();
        let eqs: Vec<(QVector, Rat)> = self
            .equalities
            .iter()
            .map(|c| (int_to_rat(&c.normal), Rat::zero()))
            .collect();
        Ok(Self::from_constraints(self.ambient_dim, &ineqs, &eqs)?.expect("contains origin"))
    }

    /// Simplices (as vertex index lists) triangulating a polytope by pulling
    /// the least vertex of every face.
    pub(crate) fn triangulate(&self) -> Vec<Vec<usize>> {
        debug_assert!(self.is_bounded());
        let inc = self.incidence();
        let full = Bits::full(self.vertices.len());
        let mut out = Vec::new();
        self.pull(&full, self.dim(), &inc, &mut Vec::new(), &mut out);
        out
    }

    fn pull(
        &self,
        s: &Bits,
        d: usize,
        inc: &[Bits],
        apex: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let nv = self.vertices.len();
        let v0 = s.ones(nv).next().expect("nonempty face");
        if d == 0 {
            let mut simplex = apex.clone();
            simplex.push(v0);
            out.push(simplex);
            return;
        }
        let mut seen = BTreeSet::new();
        for b in inc {
            let t = s.and(b);
            if t.contains(v0) || t == *s || !seen.insert(t.clone()) {
                continue;
            }
            if self.gen_set_dim(&t) == Some(d - 1) {
                apex.push(v0);
                self.pull(&t, d - 1, inc, apex, out);
                apex.pop();
            }
        }
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = |v: &QVector| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let z = |v: &IntVector| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "Polyhedron(dim {}/{}; V[", self.dim(), self.ambient_dim)?;
        for v in &self.vertices {
            write!(f, "({})", q(v))?;
        }
        write!(f, "] R[")?;
        for r in &self.rays {
            write!(f, "({})", z(r))?;
        }
        write!(f, "] L[")?;
        for l in self.lineality.basis_rows() {
            write!(f, "({})", z(&l))?;
        }
        write!(f, "])")
    }
}
