use std::process::Command;

use polya_cli::grammar::{parse_spec, SeqSpec};
use polya_cli::schema::{BettiTableJson, LayoutJson, OrthoTerm, PfReportJson, SchurTerm, ValueJson};
use polya_cli::{run, Outcome};
use polya_core::sequences::{GradedSequence, Leaf, Level, Value};
use polya_core::shapes::{Partition, SkewShape};
use proptest::prelude::*;

fn polya(args: &[&str]) -> Outcome {
    run(std::iter::once("polya").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = polya(args);
    assert_eq!(out.code, 0, "polya {}: {}", args.join(" "), out.stderr);
    out.stdout
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_polya");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let out = status(&["jt-minor", "--seq", "heisenberg:2", "--lambda", "1,1,1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-2\n");
    // a class-valued minor of a dimension-only sequence is a domain error
    let out = status(&["jt-minor", "--seq", "squares", "--lambda", "1", "--level", "class"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    let out = status(&["jt-minor", "--seq", "nope:1", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seq"));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
    assert_eq!(status(&[]).status.code(), Some(2));
}

#[test]
fn usage_errors_name_the_flag() {
    for (args, flag) in [
        (&["lr", "--mu", "1,2", "--nu", "1"][..], "--mu"),
        (&["dim", "gl", "--lambda", "2"][..], "--m"),
        (&["dim", "super", "--lambda", "2", "--r", "1"][..], "--s"),
        (&["efw", "--shifts", "1,0"][..], "--shifts"),
        (&["pf-check", "--seq", "poly:2", "--format", "xml"][..], "--format"),
    ] {
        let out = polya(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stderr.contains(flag), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn domain_errors() {
    for args in [
        &["jt-minor", "--seq", "poly:2", "--lambda", "2,1", "--r", "1"][..],
        &["ortho-decomp", "--m", "3", "--lambda", "1,1"][..],
        &["jt-minor", "--seq", "tensor:poly:2,super:1,1", "--lambda", "1", "--level", "class"][..],
        &["jt-minor", "--seq", "poly:2", "--lambda", "1,1,1", "--level", "class", "--max-cost", "2"][..],
        &["zelevinsky", "--seq", "poly:2", "--lambda", "1", "--n", "9"][..],
        &["hk-solve", "--degrees", "0,0,1"][..],
        &["resolve", "quadric", "--m", "3", "--shifts", "1,1"][..],
        &["validate", "--table", "/nonexistent/table.csv", "--seq", "poly:2"][..],
    ] {
        let out = polya(args);
        assert_eq!(out.code, 1, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn outputs_reparse_under_the_schema() {
    let report: PfReportJson = serde_json::from_str(&ok(&["pf-check", "--seq", "quadric:3", "--order", "3", "--window", "4"])).unwrap();
    assert_eq!(report.verdict, "positive-up-to-bounds");
    assert!(report.witness.is_none());

    let class: Vec<SchurTerm> = serde_json::from_str(&ok(&["skew-expand", "--lambda", "3,2", "--mu", "1"])).unwrap();
    assert_eq!(class.len(), 2);
    let class: Vec<SchurTerm> = serde_json::from_str(&ok(&["lr", "--mu", "1", "--nu", "1"])).unwrap();
    assert_eq!(class.len(), 2);

    let dec: Vec<OrthoTerm> = serde_json::from_str(&ok(&["ortho-decomp", "--m", "4", "--lambda", "2"])).unwrap();
    assert_eq!(dec.len(), 1);

    let layout: LayoutJson = serde_json::from_str(&ok(&["zelevinsky", "--seq", "quadric:3", "--lambda", "2,2"])).unwrap();
    assert_eq!(layout.euler_characteristic, layout.minor);
    assert_eq!(layout.degrees[1].terms[0].weight, [3, 1]);

    for args in [
        &["resolve", "quadric", "--m", "3", "--shifts", "1,1,1"][..],
        &["resolve", "rnc", "--d", "3", "--shifts", "1,1,1"][..],
        &["resolve", "poly", "--shifts", "2,1"][..],
        &["efw", "--shifts", "2,1,2,3", "--count", "5"][..],
    ] {
        let t: BettiTableJson = serde_json::from_str(&ok(args)).unwrap();
        t.into_table().unwrap().validate().unwrap();
    }

    let json: serde_json::Value = serde_json::from_str(&ok(&["segre", "--seq", "quadric:2", "--with", "squares", "--lambda", "2,2,2"])).unwrap();
    let v: ValueJson = serde_json::from_value(json["value"].clone()).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), "-60");
    for args in [
        &["veronese", "--seq", "poly:2", "--d", "2", "--lambda", "2,1"][..],
        &["tensor", "--seq", "quadric:3", "--with", "poly:2", "--lambda", "2,1"][..],
        &["e-class", "--seq", "poly:3", "--d", "2", "--level", "class"][..],
        &["schur-profile", "--seq", "super:2,1"][..],
        &["hs-check", "--m", "2", "--n", "2", "--trunc", "4"][..],
        &["hk-solve", "--degrees", "0,2,3"][..],
        &["dim", "quadric", "--lambda", "3,1", "--m", "3", "--method", "all"][..],
        &["dim", "super", "--lambda", "3,1", "--r", "1", "--s", "1"][..],
        &["lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"][..],
    ] {
        let v: serde_json::Value = serde_json::from_str(&ok(args)).unwrap();
        assert!(v.is_object(), "{args:?}");
    }
}

#[test]
fn identity_reports() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["veronese", "--seq", "quadric:3", "--d", "3", "--lambda", "2,1", "--mu", "1"])).unwrap();
    assert_eq!(v["equal"], true);
    let v: serde_json::Value = serde_json::from_str(&ok(&["tensor", "--seq", "quadric:3", "--with", "super:1,1", "--lambda", "2,2"])).unwrap();
    assert_eq!(v["cauchy_binet"], true);
    let v: serde_json::Value = serde_json::from_str(&ok(&["dim", "quadric", "--lambda", "3,2,2", "--m", "3", "--method", "all"])).unwrap();
    assert_eq!((v["agree"].clone(), v["dimension"].clone()), (serde_json::json!(true), serde_json::json!(0)));
    assert_eq!(ok(&["lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--format", "text"]), "2\n");
}

#[test]
fn tables_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for (args, seq, dim) in [
        (&["resolve", "quadric", "--m", "3", "--shifts", "1,1,2"][..], "quadric:3", Some(8)),
        (&["resolve", "quadric", "--m", "3", "--shifts", "1,1,1"][..], "quadric:3", Some(1)),
        (&["resolve", "rnc", "--d", "3", "--shifts", "1,1,1"][..], "veronese:3,poly:2", None),
        (&["resolve", "poly", "--shifts", "1,2"][..], "poly:2", None),
    ] {
        for format in ["csv", "json"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let path = dir.path().join(format!("table.{format}"));
            std::fs::write(&path, ok(&full)).unwrap();
            let out = ok(&["validate", "--table", path.to_str().unwrap(), "--seq", seq]);
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            assert_eq!((v["polynomial"].clone(), v["nonnegative"].clone()), (true.into(), true.into()), "{full:?}");
            if let Some(d) = dim {
                assert_eq!(v["dimension"], d, "{full:?}");
            }
        }
    }
}

#[test]
fn text_and_csv_formats() {
    let csv = ok(&["resolve", "quadric", "--m", "3", "--shifts", "1,1,1", "--tail-terms", "2", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("index,twist,rank,label"));
    assert!(csv.ends_with("# tail start=2 rank=4 step=1 ratio=1\n"));
    let text = ok(&["pf-check", "--seq", "hadamard:quadric:2,squares", "--order", "3", "--window", "6", "--format", "text"]);
    assert!(text.contains("witness   (2,2,2)"), "{text}");
    let csv = ok(&["ortho-decomp", "--m", "4", "--lambda", "2", "--format", "csv"]);
    assert_eq!(csv, "mu,mult\n(2),1\n");
}

#[test]
fn class_values_have_dimensions() {
    let c = GradedSequence::leaf(Leaf::Polynomial { m: 2 }, Level::Class).unwrap();
    let v = c.segre(&c).unwrap().schur(&SkewShape::straight(Partition::new(vec![2, 2, 2]).unwrap())).unwrap();
    assert!(matches!(v, Value::Class(_)));
}

#[test]
fn output_is_deterministic() {
    let args = ["pf-check", "--seq", "segre:poly:2,poly:2", "--level", "class", "--order", "3", "--window", "3"];
    let first = ok(&args);
    for _ in 0..3 {
        assert_eq!(ok(&args), first);
    }
    let bin = env!("CARGO_BIN_EXE_polya");
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).env("RAYON_NUM_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8(a.stdout).unwrap(), first);
}

fn leaf() -> impl Strategy<Value = SeqSpec> {
    prop_oneof![
        (1usize..5).prop_map(|m| SeqSpec::Leaf(Leaf::Polynomial { m })),
        (1usize..5).prop_map(|m| SeqSpec::Leaf(Leaf::Quadric { m })),
        (1usize..5).prop_map(|m| SeqSpec::Leaf(Leaf::QuadricDual { m })),
        (1usize..5).prop_map(|m| SeqSpec::Leaf(Leaf::TensorAlgebra { m })),
        (1usize..5).prop_map(|u| SeqSpec::Leaf(Leaf::Heisenberg { u })),
        (0usize..3, 1usize..3).prop_map(|(r, s)| SeqSpec::Leaf(Leaf::Super { r, s })),
        Just(SeqSpec::Leaf(Leaf::Squares)),
        prop::collection::vec(0i64..9, 0..4).prop_map(|mut v| {
            v.insert(0, 1);
            SeqSpec::Leaf(Leaf::Explicit(v.into_iter().map(Into::into).collect()))
        }),
    ]
}

fn spec() -> impl Strategy<Value = SeqSpec> {
    leaf().prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (1usize..4, inner.clone()).prop_map(|(d, s)| SeqSpec::Veronese(d, Box::new(s))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SeqSpec::Tensor(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| SeqSpec::Segre(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn grammar_round_trips(s in spec()) {
        prop_assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn printed_specs_match_the_core(s in spec()) {
        let built = s.build(polya_core::sequences::Level::Dim).unwrap();
        prop_assert_eq!(built.spec(), s.to_string());
    }

    #[test]
    fn jt_minor_json_reparses(l in prop::collection::vec(0usize..4, 1..4), m in 1usize..4) {
        let mut l = l;
        l.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = l.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let seq = format!("quadric:{m}");
        let out = ok(&["jt-minor", "--seq", &seq, "--lambda", &lambda, "--level", "class"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let back: ValueJson = serde_json::from_value(v["value"].clone()).unwrap();
        prop_assert_eq!(serde_json::to_value(&back).unwrap(), v["value"].clone());
    }
}
