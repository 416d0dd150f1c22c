use std::process::Command;

use vertexlab::cli::{run, EXIT_GUARD, EXIT_INPUT, EXIT_OK};
use vertexlab::graphs::GraphJson;
use vertexlab::GaussianRational;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn vl(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("vertexlab").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn value(args: &[&str]) -> String {
    let (code, out) = vl(args);
    assert_eq!(code, EXIT_OK, "{args:?}");
    out.lines().nth(1).unwrap().to_string()
}

#[test]
fn eval_examples() {
    assert_eq!(value(&["eval", &data("matchings.json"), &data("path3.json")]), "3");
    assert_eq!(value(&["eval", &data("matchings.json"), &data("cycle5.json")]), "11");
    assert_eq!(value(&["eval", &data("parity.json"), &data("triangle.json")]), "-1");
    for (model, n) in [("parity.json", "1"), ("matchings.json", "2"), ("ones2.json", "2"), ("gaussian2.json", "2")] {
        assert_eq!(value(&["eval", &data(model), &data("O.json")]), n);
        assert_eq!(value(&["eval", "--brute-force", &data(model), &data("O.json")]), n);
    }
}

#[test]
fn rank_example_respects_the_bound() {
    let (code, out) = vl(&["rank", "--model", &data("ones2.json"), "--k", "1"]);
    assert_eq!(code, EXIT_OK);
    let row = out.lines().find(|l| l.starts_with("rank<=n^k")).unwrap();
    let cols: Vec<&str> = row.split('\t').collect();
    assert!(cols[2].parse::<u32>().unwrap() <= 2);
    assert_eq!(cols[4], "pass");
}

#[test]
fn tensor_has_one_row_per_boundary_coloring() {
    let (code, out) = vl(&["tensor", &data("gaussian2.json"), &data("braid2.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1 + 16);
}

#[test]
fn glueid_and_kernelq_pass() {
    let (code, out) = vl(&["glueid", "--model", &data("gaussian2.json"), "--fragment", &data("braid2.json"), "--m", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1 + 36);
    let (code, out) = vl(&["kernelq", "--n", "1", "--catalog-vertices", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().skip(1).all(|l| l.ends_with("\tpass")));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["--seed", "5", "criterion", "--model", &data("matchings.json")],
        vec!["--format", "json", "connmat", "--model", &data("gaussian2.json"), "--k", "2"],
        vec!["catalog", "--k", "2", "--catalog-vertices", "2", "--catalog-edges", "4"],
    ] {
        let args: Vec<String> = args.into_iter().map(String::from).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(vl(&args), vl(&args));
    }
}

#[test]
fn json_scalars_round_trip() {
    let (code, out) = vl(&["--format", "json", "connmat", "--model", &data("gaussian2.json"), "--k", "1"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for row in v["rows"].as_array().unwrap() {
        for text in row[1].as_str().unwrap().split(',') {
            let x: GaussianRational = text.parse().unwrap();
            assert_eq!(x.to_string(), text);
        }
    }
}

#[test]
fn catalog_rows_parse_back() {
    let (_, out) = vl(&["catalog", "--k", "2"]);
    for line in out.lines().skip(1) {
        let json = line.split('\t').nth(4).unwrap();
        let f = GraphJson::parse(json).unwrap().to_fragment().unwrap();
        assert_eq!(f.arity(), 2);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_vertexlab");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let ok = status(&["mnd", "3", "0,1,2,1/2"]);
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "d\tcomputed\tformula\tmatch\n0\t0\t0\tok\n1\t1\t1\tok\n2\t5\t5\tok\n1/2\t6\t6\tok\n");

    let bad = status(&["eval", &data("matchings.json"), &data("matchings.json")]);
    assert_eq!(bad.status.code(), Some(EXIT_INPUT));
    assert!(!bad.stderr.is_empty());

    let guard = status(&["--frontier-guard", "1", "eval", &data("matchings.json"), &data("cycle5.json")]);
    assert_eq!(guard.status.code(), Some(EXIT_GUARD));
    let guard = status(&["glueid", "--model", &data("gaussian2.json"), "--fragment", &data("braid2.json"), "--m", "6"]);
    assert_eq!(guard.status.code(), Some(EXIT_GUARD));
}
