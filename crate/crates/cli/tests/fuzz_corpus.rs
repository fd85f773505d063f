//! Replays the fuzz corpus seeds through the fuzz targets' round-trip checks
//! on the stable toolchain.

use std::path::PathBuf;

use tropkit::arith::{format_rational, parse_rational};
use tropkit::json::*;
use tropkit_cli::parse_vector;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn rational_seeds() {
    for s in seeds("rational") {
        let q = parse_rational(&s).unwrap();
        assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}

#[test]
fn polynomial_seeds() {
    for s in seeds("polynomial") {
        let f = parse_polynomial(&s).unwrap();
        let out = polynomial_to_value(&f).to_string();
        assert_eq!(parse_polynomial(&out).unwrap(), f);
    }
}

#[test]
fn config_seeds() {
    for s in seeds("heighted_config") {
        let c = parse_config(&s).unwrap();
        assert_eq!(parse_config(&config_to_value(&c).to_string()).unwrap(), c);
    }
}

#[test]
fn complex_seeds() {
    for s in seeds("weighted_complex") {
        let w = parse_weighted_complex(&s).unwrap();
        let out = weighted_complex_to_value(&w).to_string();
        assert_eq!(parse_weighted_complex(&out).unwrap(), w);
        assert_eq!(weighted_complex_to_value(&parse_weighted_complex(&out).unwrap()).to_string(), out);
    }
}

#[test]
fn vector_seeds() {
    for s in seeds("cli_vectors") {
        let v = parse_vector(&s).unwrap();
        assert_eq!(parse_point(&point_to_value(&v).to_string()).unwrap(), v);
    }
}
