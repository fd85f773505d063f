//! Command-line front-end: JSON in, exact JSON out.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use tropkit::arith::{format_rational, parse_rational, QVector, Rat};
use tropkit::bernstein::{cross_check, newton_polytope};
use tropkit::complexes::{check_balanced, WeightedComplex};
use tropkit::json::{self as js};
use tropkit::polyhedra::{conv_hull, lattice_length, mixed_volume, Polyhedron};
use tropkit::puiseux::init_form;
use tropkit::subdivision::{dual_complex, orbit_poset, upper_hull_subdivision, HeightedConfig};
use tropkit::trop::{
    intersection_number_transverse, multiplicity_along_orbit, stable_intersection_number, star_at,
    trop_hypersurface, Convention, IntersectionReport, TropicalCycle, DEFAULT_RETRIES,
};
use tropkit::{Error, Result};

mod plot;

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Orientation of tropical cycles: `paper` (Trop = -v) or `minplus`.
    #[arg(long, default_value = "paper", global = true)]
    pub convention: Convention,
    /// Seed for generic translations.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_RETRIES, global = true)]
    pub retries: usize,
    /// Write clipped 2D segments of the result to this path.
    #[arg(long, global = true)]
    pub plot: Option<PathBuf>,
    /// Plot window `xmin,ymin,xmax,ymax`.
    #[arg(long, default_value = "-10,-10,10,10", global = true, allow_hyphen_values = true)]
    pub bbox: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regular subdivision induced by a heighted configuration.
    Subdivide { config: String },
    /// Dual complex with the affine form on each region.
    DualComplex { config: String },
    /// Cells of the subdivision ordered by inclusion.
    OrbitPoset { config: String },
    /// Initial form of a polynomial at a weight.
    InitForm {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Tropical hypersurface of a polynomial.
    Trop { poly: String },
    /// Balancing check for a weighted complex.
    Balance { complex: String },
    /// Star of a cycle at a point.
    Star {
        cycle: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Intersection number of two cycles of complementary dimension.
    Intersect {
        first: String,
        second: String,
        /// Count without translating; fails unless the cycles meet transversely.
        #[arg(long)]
        transverse: bool,
    },
    /// Mixed volume of polytopes given as polynomials or point lists.
    MixedVolume {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Bezout and Bernstein bounds with the tropical cross-check.
    Bernstein {
        #[arg(required = true)]
        polys: Vec<String>,
    },
    /// Multiplicity of a degeneration along a torus orbit.
    AlongOrbit {
        cycle: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Cone file in cell syntax.
        #[arg(long)]
        cone: String,
    },
}

#[derive(Parser, Debug)]
#[command(name = "tropkit", version, about = "Exact tropical geometry toolkit")]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

/// Exit status for an error, by category.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Schema(_) => 2,
        Error::TransversalityFailure(_) | Error::NotTransverse | Error::NonTransverseConfiguration => 4,
        _ => 3,
    }
}

pub fn error_value(e: &Error) -> Value {
    json!({"error": e.code(), "detail": e.to_string()})
}

/// Runs one invocation; `stdin` is consumed by the first input named `-`.
pub fn run(inv: &Invocation, stdin: &mut dyn Read) -> Result<Value> {
    let mut io = Inputs { stdin, used: false };
    let c = &inv.common;
    let (out, segments) = match &inv.command {
        Command::Subdivide { config } => (subdivide(&io.config(config)?), None),
        Command::DualComplex { config } => {
            let cfg = io.config(config)?;
            let segs = plot_dual(&cfg);
            (dual(&cfg), Some(segs))
        }
        Command::OrbitPoset { config } => (poset(&io.config(config)?), None),
        Command::InitForm { poly, weight } => {
            let f = js::parse_polynomial(&io.read(poly)?)?;
            (js::polynomial_to_value(&init_form(&f, &parse_vector(weight)?)?), None)
        }
        Command::Trop { poly } => {
            let f = js::parse_polynomial(&io.read(poly)?)?;
            let t = trop_hypersurface(&f, c.convention)?;
            let segs = plot::weighted(&t.complex);
            (js::cycle_to_value(&t), Some(segs))
        }
        Command::Balance { complex } => {
            let w = io.complex(complex)?;
            let r = check_balanced(&w);
            let violations: Vec<Value> = r
                .violations
                .iter()
                .map(|(cell, d)| {
                    json!({
                        "cell": js::polyhedron_to_value(cell),
                        "deficiency": d.iter().map(js::integer_to_value).collect::<Vec<_>>(),
                    })
                })
                .collect();
            (json!({"balanced": r.balanced, "violations": violations}), None)
        }
        Command::Star { cycle, point } => {
            let z = io.cycle(cycle, c.convention)?;
            let s = star_at(&z, &parse_vector(point)?)?;
            let segs = plot::weighted(&s.complex);
            (js::cycle_to_value(&s), Some(segs))
        }
        Command::Intersect {
            first,
            second,
            transverse,
        } => {
            let a = io.cycle(first, c.convention)?;
            let b = io.cycle(second, c.convention)?;
            let r = if *transverse {
                intersection_number_transverse(&a, &b)?
            } else {
                stable_intersection_number(&a, &b, c.seed, c.retries)?
            };
            (report(&r, c.convention), None)
        }
        Command::MixedVolume { inputs } => {
            let ps = inputs
                .iter()
                .map(|p| io.polytope(p))
                .collect::<Result<Vec<_>>>()?;
            (json!({"mixed_volume": js::rational_to_value(&mixed_volume(&ps)?)}), None)
        }
        Command::Bernstein { polys } => {
            let fs = polys
                .iter()
                .map(|p| js::parse_polynomial(&io.read(p)?))
                .collect::<Result<Vec<_>>>()?;
            let r = cross_check(&fs, c.seed, c.retries)?;
            let opt = |v: Option<Value>| v.unwrap_or(Value::Null);
            (
                json!({
                    "bezout": js::integer_to_value(&r.bezout),
                    "bernstein": js::integer_to_value(&r.bernstein),
                    "tropical": opt(r.tropical.as_ref().map(js::integer_to_value)),
                    "agree": opt(r.agree.map(Value::Bool)),
                }),
                None,
            )
        }
        Command::AlongOrbit {
            cycle,
            weight,
            cone,
        } => {
            let z = io.cycle(cycle, c.convention)?;
            let w = parse_vector(weight)?;
            let sigma = js::parse_polyhedron(&io.read(cone)?, z.ambient_dim())?;
            if !sigma.is_cone() {
                return Err(Error::Schema("`--cone` is not a cone".into()));
            }
            let m = multiplicity_along_orbit(&z, &w, &sigma)?;
            (json!({"multiplicity": js::integer_to_value(&m)}), None)
        }
    };
    if let Some(path) = &c.plot {
        let segs = segments
            .ok_or_else(|| Error::Schema("this command has no plot output".into()))?
            .ok_or_else(|| Error::Schema("plot output needs a one-dimensional complex in the plane".into()))?;
        let bbox = plot::parse_bbox(&c.bbox)?;
        let data = plot::clip_all(&segs, &bbox);
        std::fs::write(path, serde_json::to_string_pretty(&data).expect("serializable"))
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(out)
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.used {
                return Err(Error::Parse("standard input named twice".into()));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
    }

    fn config(&mut self, path: &str) -> Result<HeightedConfig> {
        js::parse_config(&self.read(path)?)
    }

    /// A weighted complex file, or a polynomial standing for its hypersurface.
    fn complex(&mut self, path: &str) -> Result<WeightedComplex> {
        let text = self.read(path)?;
        if is_polynomial(&text) {
            let f = js::parse_polynomial(&text)?;
            return Ok(trop_hypersurface(&f, Convention::MinPlus)?.complex);
        }
        js::parse_weighted_complex(&text)
    }

    /// A cycle in the requested convention. Complex files are checked for
    /// balancing before use.
    fn cycle(&mut self, path: &str, convention: Convention) -> Result<TropicalCycle> {
        let text = self.read(path)?;
        if is_polynomial(&text) {
            return trop_hypersurface(&js::parse_polynomial(&text)?, convention);
        }
        let c = js::parse_cycle(&text, convention)?;
        let c = TropicalCycle::checked(c.complex, c.convention)?;
        Ok(c.in_convention(convention))
    }

    /// A polynomial's Newton polytope, or the hull of a JSON point list.
    fn polytope(&mut self, path: &str) -> Result<Polyhedron> {
        let text = self.read(path)?;
        if is_polynomial(&text) {
            return newton_polytope(&js::parse_polynomial(&text)?);
        }
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Schema("expected a polynomial or a list of points".into()))?;
        let pts = rows
            .iter()
            .map(|r| js::parse_point(&r.to_string()))
            .collect::<Result<Vec<QVector>>>()?;
        if let Some(p) = pts.iter().find(|p| p.len() != pts[0].len()) {
            return Err(Error::Schema(format!("point of length {} in a mixed list", p.len())));
        }
        conv_hull(&pts)
    }
}

fn is_polynomial(text: &str) -> bool {
    serde_json::from_str::<Value>(text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("vars")))
        .unwrap_or(false)
}

/// `"1/2,-3"` or a JSON array such as `["1/2", -3]`.
pub fn parse_vector(s: &str) -> Result<QVector> {
    let s = s.trim();
    if s.starts_with('[') {
        return js::parse_point(s);
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

fn ints(xs: &[i64]) -> Value {
    json!(xs)
}

fn subdivide(cfg: &HeightedConfig) -> Value {
    let sub = upper_hull_subdivision(cfg);
    let maximal: Vec<Vec<usize>> = sub.maximal_cells().iter().map(|c| c.marked.clone()).collect();
    let cells: Vec<Value> = sub
        .cells
        .iter()
        .map(|c| {
            json!({
                "dim": c.dim(),
                "marked": c.marked,
                "points": sub.marked_points(c),
                "vertices": c.hull.vertices().iter().map(|v| js::point_to_value(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({"dim": cfg.dim(), "cells": cells, "maximal": maximal})
}

/// `⟨χ, w⟩ + a` written as `w1+w2+1`.
pub fn affine_label(chi: &[i64], a: &Rat) -> String {
    let mut s = String::new();
    for (i, &c) in chi.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = c.unsigned_abs();
        let coeff = if mag == 1 { String::new() } else { mag.to_string() };
        s.push_str(&format!("{sign}{coeff}w{}", i + 1));
    }
    let zero = Rat::from_integer(0.into());
    if *a != zero || s.is_empty() {
        let t = format_rational(a);
        if s.is_empty() || t.starts_with('-') {
            s.push_str(&t);
        } else {
            s.push('+');
            s.push_str(&t);
        }
    }
    s
}

fn dual(cfg: &HeightedConfig) -> Value {
    let d = dual_complex(cfg);
    let cells: Vec<Value> = d
        .cells
        .iter()
        .map(|c| {
            let mut o = Map::new();
            o.insert("gamma".into(), json!(c.gamma));
            o.insert("dim".into(), json!(c.cell.dim()));
            o.insert("cell".into(), js::polyhedron_to_value(&c.cell));
            if let [i] = c.gamma[..] {
                let chi = &cfg.points()[i];
                o.insert("label".into(), Value::String(affine_label(chi, &cfg.heights()[i])));
                o.insert("linear".into(), ints(chi));
                o.insert("constant".into(), js::rational_to_value(&cfg.heights()[i]));
            }
            Value::Object(o)
        })
        .collect();
    let vertices: Vec<Value> = d
        .cells_of_dim(0)
        .map(|c| js::point_to_value(&c.cell.vertices()[0]))
        .collect();
    json!({"dim": cfg.dim(), "cells": cells, "vertices": vertices})
}

fn plot_dual(cfg: &HeightedConfig) -> Option<Vec<(Polyhedron, Value)>> {
    if cfg.dim() != 2 {
        return None;
    }
    let d = dual_complex(cfg);
    Some(
        d.subdivision
            .cells
            .iter()
            .zip(&d.cells)
            .filter(|(s, _)| s.dim() == 1)
            .map(|(s, c)| {
                let w = lattice_length(&s.hull).map(|m| js::integer_to_value(&m)).unwrap_or(Value::Null);
                (c.cell.clone(), w)
            })
            .collect(),
    )
}

fn poset(cfg: &HeightedConfig) -> Value {
    let p = orbit_poset(cfg);
    let nodes: Vec<Value> = p
        .nodes
        .iter()
        .map(|n| json!({"cell": n.cell, "dim": n.dim}))
        .collect();
    let covers: Vec<[usize; 2]> = p.covers.iter().map(|&(a, b)| [a, b]).collect();
    json!({"nodes": nodes, "covers": covers, "counts_by_dim": p.count_by_dim()})
}

fn report(r: &IntersectionReport, convention: Convention) -> Value {
    let points: Vec<Value> = r
        .points
        .iter()
        .map(|p| {
            json!({
                "x": js::point_to_value(&p.x),
                "m": js::integer_to_value(&p.m),
                "n": js::integer_to_value(&p.n),
                "index": js::integer_to_value(&p.index),
            })
        })
        .collect();
    json!({
        "total": js::integer_to_value(&r.total),
        "transverse": r.transverse,
        "translation": js::point_to_value(&r.translation_used),
        "convention": convention.to_string(),
        "points": points,
    })
}

/// Parses arguments, runs, and renders; returns the exit status and the
/// text for standard output.
pub fn execute<I, T>(args: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let inv = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        // Help and version requests are not errors.
        Err(e) if !e.use_stderr() => return (0, e.render().to_string()),
        Err(e) => {
            let err = Error::Parse(e.render().to_string().trim_end().to_owned());
            return (exit_code(&err), render(&error_value(&err)));
        }
    };
    match run(&inv, stdin) {
        Ok(v) => (0, render(&v)),
        Err(e) => (exit_code(&e), render(&error_value(&e))),
    }
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}
