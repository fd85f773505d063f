//! JSON schemas for polynomials, weighted complexes and heighted configurations.
//!
//! Rationals are written as lowest-terms strings (`"3/2"`, `"-4"`). On input a
//! plain JSON integer is accepted wherever a rational or integer is expected.
//! Malformed JSON is a `Parse` error; well-formed JSON of the wrong shape is a
//! `Schema` error.

use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{format_rational, parse_rational, Int, QVector, Rat};
use crate::complexes::WeightedComplex;
use crate::error::{Error, Result};
use crate::polyhedra::{Fan, Polyhedron};
use crate::puiseux::{LaurentPoly, PuiseuxScalar};
use crate::subdivision::HeightedConfig;
use crate::trop::{Convention, TropicalCycle};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Str(String),
    Int(i64),
}

impl Num {
    fn rational(&self) -> Result<Rat> {
        match self {
            Num::Str(s) => parse_rational(s).map_err(|e| Error::Schema(e.to_string())),
            Num::Int(i) => Ok(Rat::from_integer((*i).into())),
        }
    }

    fn integer(&self) -> Result<Int> {
        let q = self.rational()?;
        if !q.is_integer() {
            return Err(Error::Schema(format!("expected an integer, got {q}")));
        }
        Ok(q.to_integer())
    }
}

fn num_of_rat(q: &Rat) -> Num {
    Num::Str(format_rational(q))
}

fn num_of_int(z: &Int) -> Num {
    match z.to_i64() {
        Some(i) => Num::Int(i),
        None => Num::Str(z.to_string()),
    }
}

fn from_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(classify)
}

fn from_value<T: DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(classify)
}

fn classify(e: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Data => Error::Schema(e.to_string()),
        _ => Error::Parse(e.to_string()),
    }
}

fn rat_vec(xs: &[Num], n: usize, what: &str) -> Result<QVector> {
    if xs.len() != n {
        return Err(Error::Schema(format!(
            "{what} has length {}, expected {n}",
            xs.len()
        )));
    }
    xs.iter().map(Num::rational).collect()
}

// ---------------------------------------------------------------- polynomials

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarTerm {
    c: Num,
    q: Num,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyTerm {
    exp: Vec<i64>,
    coeff: Vec<ScalarTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyDoc {
    vars: usize,
    terms: Vec<PolyTerm>,
}

fn scalar_from_doc(terms: &[ScalarTerm]) -> Result<PuiseuxScalar> {
    let t = terms
        .iter()
        .map(|t| Ok((t.c.rational()?, t.q.rational()?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PuiseuxScalar::from_terms(t))
}

fn scalar_to_doc(c: &PuiseuxScalar) -> Vec<ScalarTerm> {
    c.terms()
        .iter()
        .map(|(c, q)| ScalarTerm {
            c: num_of_rat(c),
            q: num_of_rat(q),
        })
        .collect()
}

pub fn parse_scalar(s: &str) -> Result<PuiseuxScalar> {
    scalar_from_doc(&from_str::<Vec<ScalarTerm>>(s)?)
}

pub fn scalar_to_value(c: &PuiseuxScalar) -> Value {
    serde_json::to_value(scalar_to_doc(c)).expect("serializable")
}

pub fn parse_polynomial(s: &str) -> Result<LaurentPoly> {
    polynomial_from_value(from_str(s)?)
}

pub fn polynomial_from_value(v: Value) -> Result<LaurentPoly> {
    let doc: PolyDoc = from_value(v)?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        if t.exp.len() != doc.vars {
            return Err(Error::Schema(format!(
                "exponent {:?} has length {}, expected {}",
                t.exp,
                t.exp.len(),
                doc.vars
            )));
        }
        terms.push((t.exp.clone(), scalar_from_doc(&t.coeff)?));
    }
    LaurentPoly::new(doc.vars, terms)
}

pub fn polynomial_to_value(f: &LaurentPoly) -> Value {
    let doc = PolyDoc {
        vars: f.num_vars(),
        terms: f
            .terms()
            .iter()
            .map(|(e, c)| PolyTerm {
                exp: e.clone(),
                coeff: scalar_to_doc(c),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

// ------------------------------------------------------- polyhedra/complexes

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellDoc {
    #[serde(default)]
    vertices: Vec<Vec<Num>>,
    #[serde(default)]
    rays: Vec<Vec<Num>>,
    #[serde(default)]
    lineality: Vec<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<Num>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDoc {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    puredim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    convention: Option<String>,
    cells: Vec<CellDoc>,
}

fn cell_from_doc(c: &CellDoc, n: usize) -> Result<Polyhedron> {
    let mut vertices = c
        .vertices
        .iter()
        .map(|v| rat_vec(v, n, "vertex"))
        .collect::<Result<Vec<_>>>()?;
    if vertices.is_empty() {
        vertices.push(vec![Rat::from_integer(0.into()); n]);
    }
    let rays = c
        .rays
        .iter()
        .map(|v| rat_vec(v, n, "ray"))
        .collect::<Result<Vec<_>>>()?;
    let lin = c
        .lineality
        .iter()
        .map(|v| rat_vec(v, n, "lineality vector"))
        .collect::<Result<Vec<_>>>()?;
    Polyhedron::from_generators(n, &vertices, &rays, &lin)
}

fn cell_to_doc(p: &Polyhedron, weight: Option<&Int>) -> CellDoc {
    let origin_only = p.vertices().len() == 1 && p.vertices()[0].iter().all(|x| *x == Rat::from_integer(0.into()));
    let ints = |rows: Vec<Vec<Int>>| -> Vec<Vec<Num>> {
        rows.iter()
            .map(|r| r.iter().map(num_of_int).collect())
            .collect()
    };
    CellDoc {
        vertices: if origin_only && p.is_cone() {
            Vec::new()
        } else {
            p.vertices()
                .iter()
                .map(|v| v.iter().map(num_of_rat).collect())
                .collect()
        },
        rays: ints(p.rays().to_vec()),
        lineality: ints(p.lineality().basis_rows()),
        weight: weight.map(num_of_int),
    }
}

/// A single polyhedron in cell syntax; empty `vertices` means the origin.
pub fn parse_polyhedron(s: &str, n: usize) -> Result<Polyhedron> {
    cell_from_doc(&from_str(s)?, n)
}

pub fn polyhedron_to_value(p: &Polyhedron) -> Value {
    serde_json::to_value(cell_to_doc(p, None)).expect("serializable")
}

/// A point as a JSON array of rationals.
pub fn parse_point(s: &str) -> Result<QVector> {
    let xs: Vec<Num> = from_str(s)?;
    xs.iter().map(Num::rational).collect()
}

pub fn point_to_value(x: &[Rat]) -> Value {
    serde_json::to_value(x.iter().map(num_of_rat).collect::<Vec<_>>()).expect("serializable")
}

pub fn parse_weighted_complex(s: &str) -> Result<WeightedComplex> {
    complex_from_doc(&from_str(s)?).map(|(w, _)| w)
}

fn complex_from_doc(doc: &ComplexDoc) -> Result<(WeightedComplex, Option<Convention>)> {
    let m = doc
        .puredim
        .ok_or_else(|| Error::Schema("missing field `puredim`".into()))?;
    let convention = doc
        .convention
        .as_deref()
        .map(|c| c.parse::<Convention>())
        .transpose()?;
    let facets = doc
        .cells
        .iter()
        .map(|c| {
            let w = c
                .weight
                .as_ref()
                .ok_or_else(|| Error::Schema("cell without `weight`".into()))?
                .integer()?;
            Ok((cell_from_doc(c, doc.dim)?, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((WeightedComplex::new(doc.dim, m, facets)?, convention))
}

pub fn weighted_complex_to_value(w: &WeightedComplex) -> Value {
    complex_value(w, None)
}

fn complex_value(w: &WeightedComplex, convention: Option<Convention>) -> Value {
    let doc = ComplexDoc {
        dim: w.ambient_dim(),
        puredim: Some(w.dim()),
        convention: convention.map(|c| c.to_string()),
        cells: w
            .facets()
            .iter()
            .map(|(p, m)| cell_to_doc(p, Some(m)))
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

/// A cycle is a weighted complex with an optional `convention` field; when it
/// is absent `default` applies.
pub fn parse_cycle(s: &str, default: Convention) -> Result<TropicalCycle> {
    let (w, c) = complex_from_doc(&from_str(s)?)?;
    Ok(TropicalCycle::new(w, c.unwrap_or(default)))
}

pub fn cycle_to_value(c: &TropicalCycle) -> Value {
    complex_value(&c.complex, Some(c.convention))
}

/// Fans use the complex schema with weightless cells and no `puredim`.
pub fn parse_fan(s: &str) -> Result<Fan> {
    let doc: ComplexDoc = from_str(s)?;
    let cones = doc
        .cells
        .iter()
        .map(|c| {
            let p = cell_from_doc(c, doc.dim)?;
            if !p.is_cone() {
                return Err(Error::Schema("fan cell is not a cone".into()));
            }
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?;
    Fan::new(doc.dim, cones)
}

pub fn fan_to_value(f: &Fan) -> Value {
    let doc = ComplexDoc {
        dim: f.ambient_dim(),
        puredim: None,
        convention: None,
        cells: f
            .maximal_cones()
            .iter()
            .map(|p| cell_to_doc(p, None))
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

// ------------------------------------------------------------ configurations

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    points: Vec<Vec<i64>>,
    heights: Vec<Num>,
}

pub fn parse_config(s: &str) -> Result<HeightedConfig> {
    let doc: ConfigDoc = from_str(s)?;
    let dim = doc
        .points
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Schema("configuration has no points".into()))?;
    if let Some(p) = doc.points.iter().find(|p| p.len() != dim) {
        return Err(Error::Schema(format!(
            "point {p:?} has length {}, expected {dim}",
            p.len()
        )));
    }
    if doc.heights.len() != doc.points.len() {
        return Err(Error::Schema(format!(
            "{} heights for {} points",
            doc.heights.len(),
            doc.points.len()
        )));
    }
    let heights = doc
        .heights
        .iter()
        .map(Num::rational)
        .collect::<Result<Vec<_>>>()?;
    HeightedConfig::new(dim, doc.points, heights)
}

pub fn config_to_value(c: &HeightedConfig) -> Value {
    let doc = ConfigDoc {
        points: c.points().to_vec(),
        heights: c.heights().iter().map(num_of_rat).collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn rational_to_value(q: &Rat) -> Value {
    Value::String(format_rational(q))
}

pub fn integer_to_value(z: &Int) -> Value {
    serde_json::to_value(num_of_int(z)).expect("serializable")
}
