use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tropkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(s) = stdin {
        pipe.write_all(s.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str]) -> Value {
    let out = run(args, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fails(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let out = run(args, stdin);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    (out.status.code().unwrap(), v)
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("tropkit-cli-{}-{name}", std::process::id()))
}

#[test]
fn trop_of_a_line_in_minplus() {
    let c = ok(&["trop", &data("line.json"), "--convention", "minplus"]);
    let cells = c["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 3);
    let mut rays: Vec<Value> = cells.iter().map(|c| c["rays"][0].clone()).collect();
    rays.sort_by_key(|v| v.to_string());
    assert_eq!(rays, vec![json!([-1, -1]), json!([0, 1]), json!([1, 0])]);
    assert!(cells.iter().all(|c| c["weight"] == json!(1)));
    assert_eq!(c["convention"], "minplus");
}

#[test]
fn emitted_cycles_round_trip_byte_for_byte() {
    // The tropical line is a fan, so its star at the origin is itself: the
    // re-parsed and re-emitted cycle must match the original bytes.
    for convention in ["paper", "minplus"] {
        let first = run(&["trop", &data("line.json"), "--convention", convention], None).stdout;
        let path = tmp(&format!("cycle-{convention}.json"));
        std::fs::write(&path, &first).unwrap();
        let p = path.to_string_lossy().into_owned();
        let again = run(&["star", &p, "--point", "0,0", "--convention", convention], None).stdout;
        assert_eq!(String::from_utf8(again).unwrap(), String::from_utf8(first).unwrap());
        assert_eq!(ok(&["balance", &p])["balanced"], true);
        std::fs::remove_file(path).ok();
    }
}

#[test]
fn output_is_deterministic_for_a_seed() {
    let args = ["intersect", &data("conic_f.json"), &data("conic_g.json"), "--seed", "11"];
    let a = run(&args, None).stdout;
    let b = run(&args, None).stdout;
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["total"], 4);
    assert_eq!(v["transverse"], true);
}

#[test]
fn stdin_input() {
    let text = std::fs::read_to_string(data("square.json")).unwrap();
    let out = run(&["orbit-poset", "-"], Some(&text));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["counts_by_dim"], json!([4, 5, 2]));
}

#[test]
fn exit_codes_and_error_objects() {
    let (code, v) = fails(&["trop", "-"], Some("{\"vars\": 2,"));
    assert_eq!((code, v["error"].as_str()), (2, Some("ParseError")));

    let (code, v) = fails(&["trop", "-"], Some("{\"vars\": 2, \"terms\": [{\"exp\": [1]}]}"));
    assert_eq!((code, v["error"].as_str()), (2, Some("SchemaError")));

    let (code, v) = fails(&["trop", "-"], Some("{\"vars\": 2, \"terms\": []}"));
    assert_eq!((code, v["error"].as_str()), (3, Some("ZeroPolynomial")));

    let (code, v) = fails(&["intersect", &data("unbalanced.json"), &data("line.json")], None);
    assert_eq!((code, v["error"].as_str()), (3, Some("InvalidComplex")));

    let (code, v) = fails(
        &["intersect", &data("line.json"), &data("tripod.json"), "--transverse"],
        None,
    );
    assert_eq!((code, v["error"].as_str()), (4, Some("NotTransverse")));

    let (code, v) = fails(&["trop"], None);
    assert_eq!((code, v["error"].as_str()), (2, Some("ParseError")));

    let (code, v) = fails(&["star", &data("tripod.json"), "--point", "5,1"], None);
    assert_eq!((code, v["error"].as_str()), (3, Some("PointNotOnCycle")));
    assert!(v["detail"].is_string());
}

#[test]
fn balance_reports_deficiency() {
    let v = ok(&["balance", &data("unbalanced.json")]);
    assert_eq!(v["balanced"], false);
    assert_eq!(v["violations"][0]["deficiency"], json!([1, 1]));
    assert_eq!(ok(&["balance", &data("tripod.json")])["balanced"], true);
}

#[test]
fn mixed_volume_inputs() {
    let tri = data("triangle_points.json");
    assert_eq!(ok(&["mixed-volume", &tri, &tri])["mixed_volume"], "1");
    let v = ok(&["mixed-volume", &data("conic_f.json"), &data("conic_g.json")]);
    assert_eq!(v["mixed_volume"], "4");
    let (code, v) = fails(&["mixed-volume", &tri], None);
    assert_eq!((code, v["error"].as_str()), (3, Some("ArityMismatch")));
}

#[test]
fn along_orbit_multiplicities() {
    let v = ok(&["along-orbit", &data("line.json"), "--weight", "1,0", "--cone", &data("ray.json")]);
    assert_eq!(v["multiplicity"], 1);
    let v = ok(&["along-orbit", &data("line.json"), "--weight", "0,0", "--cone", &data("ray.json")]);
    assert_eq!(v["multiplicity"], 0);
}

#[test]
fn plot_clips_to_the_box() {
    let path = tmp("plot.json");
    let p = path.to_string_lossy().into_owned();
    ok(&["trop", &data("line.json"), "--plot", &p, "--bbox", "-2,-2,2,2"]);
    let segs: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let segs = segs.as_array().unwrap();
    assert_eq!(segs.len(), 3);
    for s in segs {
        assert_eq!(s["from"], json!(["0", "0"]));
        assert_eq!(s["weight"], 1);
    }
    let mut ends: Vec<String> = segs.iter().map(|s| s["to"].to_string()).collect();
    ends.sort();
    assert_eq!(ends, [r#"["-2","0"]"#, r#"["0","-2"]"#, r#"["2","2"]"#]);

    let (code, v) = fails(&["subdivide", &data("square.json"), "--plot", &p], None);
    assert_eq!((code, v["error"].as_str()), (2, Some("SchemaError")));
    std::fs::remove_file(path).ok();
}

#[test]
fn bernstein_in_one_variable_has_no_tropical_leg() {
    let f = r#"{"vars": 1, "terms": [
        {"exp": [0], "coeff": [{"c": "1", "q": "0"}]},
        {"exp": [1], "coeff": [{"c": "1", "q": "0"}]},
        {"exp": [2], "coeff": [{"c": "1", "q": "0"}]}]}"#;
    let out = run(&["bernstein", "-"], Some(f));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, json!({"bezout": 2, "bernstein": 2, "tropical": null, "agree": null}));
}
