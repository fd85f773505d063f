//! Planar plot data: one-dimensional cells clipped to a box.

use serde_json::{json, Value};

use tropkit::arith::{int_to_rat, parse_rational, QVector, Rat};
use tropkit::complexes::WeightedComplex;
use tropkit::json as js;
use tropkit::polyhedra::Polyhedron;
use tropkit::{Error, Result};

pub type Segments = Option<Vec<(Polyhedron, Value)>>;

pub struct BBox {
    lo: [Rat; 2],
    hi: [Rat; 2],
}

pub fn parse_bbox(s: &str) -> Result<BBox> {
    let v = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    match &v[..] {
        [x0, y0, x1, y1] if x0 < x1 && y0 < y1 => Ok(BBox {
            lo: [x0.clone(), y0.clone()],
            hi: [x1.clone(), y1.clone()],
        }),
        _ => Err(Error::Parse(format!("bad bounding box {s:?}"))),
    }
}

pub fn weighted(w: &WeightedComplex) -> Segments {
    if w.ambient_dim() != 2 || w.dim() != 1 {
        return None;
    }
    Some(
        w.facets()
            .iter()
            .map(|(p, m)| (p.clone(), js::integer_to_value(m)))
            .collect(),
    )
}

/// The cell as `base + s·dir` with `s` in `[lo, hi]`; `None` means unbounded.
fn parametrize(p: &Polyhedron) -> (QVector, QVector, Option<Rat>, Option<Rat>) {
    let zero = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());
    let base = p.vertices()[0].clone();
    if p.vertices().len() == 2 {
        let dir = p.vertices()[1].iter().zip(&base).map(|(a, b)| a - b).collect();
        return (base, dir, Some(zero), Some(one));
    }
    if let Some(r) = p.rays().first() {
        return (base, int_to_rat(r), Some(zero), None);
    }
    let line = int_to_rat(&p.lineality().basis_rows()[0]);
    (base, line, None, None)
}

fn clip(p: &Polyhedron, b: &BBox) -> Option<(QVector, QVector)> {
    let (base, dir, mut lo, mut hi) = parametrize(p);
    for k in 0..2 {
        if dir[k] == Rat::from_integer(0.into()) {
            if base[k] < b.lo[k] || base[k] > b.hi[k] {
                return None;
            }
            continue;
        }
        let s0 = (&b.lo[k] - &base[k]) / &dir[k];
        let s1 = (&b.hi[k] - &base[k]) / &dir[k];
        let (a, c) = if s0 <= s1 { (s0, s1) } else { (s1, s0) };
        lo = Some(match lo {
            Some(l) if l > a => l,
            _ => a,
        });
        hi = Some(match hi {
            Some(h) if h < c => h,
            _ => c,
        });
    }
    let (lo, hi) = (lo?, hi?);
    if lo > hi {
        return None;
    }
    let at = |s: &Rat| -> QVector { base.iter().zip(&dir).map(|(x, d)| x + s * d).collect() };
    Some((at(&lo), at(&hi)))
}

pub fn clip_all(cells: &[(Polyhedron, Value)], b: &BBox) -> Value {
    let segs: Vec<Value> = cells
        .iter()
        .filter_map(|(p, w)| {
            clip(p, b).map(|(from, to)| {
                json!({
                    "from": js::point_to_value(&from),
                    "to": js::point_to_value(&to),
                    "weight": w,
                })
            })
        })
        .collect();
    Value::Array(segs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropkit::arith::qvec;

    fn bbox() -> BBox {
        parse_bbox("-2,-2,2,2").unwrap()
    }

    fn sorted(a: QVector, b: QVector) -> (QVector, QVector) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    #[test]
    fn clips_rays_lines_and_segments() {
        let ray = Polyhedron::from_generators(2, &[qvec(&[0, 0])], &[qvec(&[1, 1])], &[]).unwrap();
        assert_eq!(clip(&ray, &bbox()), Some((qvec(&[0, 0]), qvec(&[2, 2]))));

        let line = Polyhedron::from_generators(2, &[qvec(&[0, 1])], &[], &[qvec(&[1, 0])]).unwrap();
        let (a, b) = clip(&line, &bbox()).unwrap();
        assert_eq!(sorted(a, b), (qvec(&[-2, 1]), qvec(&[2, 1])));

        let outside = Polyhedron::from_generators(2, &[qvec(&[3, 3])], &[qvec(&[1, 0])], &[]).unwrap();
        assert_eq!(clip(&outside, &bbox()), None);

        let seg = Polyhedron::from_generators(2, &[qvec(&[-5, 0]), qvec(&[1, 0])], &[], &[]).unwrap();
        let (a, b) = clip(&seg, &bbox()).unwrap();
        assert_eq!(sorted(a, b), (qvec(&[-2, 0]), qvec(&[1, 0])));
    }

    #[test]
    fn bad_boxes() {
        assert!(parse_bbox("1,1,0,2").is_err());
        assert!(parse_bbox("0,0,1").is_err());
    }
}
