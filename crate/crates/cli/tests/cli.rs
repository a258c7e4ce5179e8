use serde_json::Value;
use zinbiel::{run, Outcome};

fn call(args: &[&str], stdin: &str) -> Outcome {
    let argv = std::iter::once("zinbiel").chain(args.iter().copied());
    run(argv, &mut stdin.as_bytes())
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

fn built(args: &[&str]) -> String {
    let mut full = vec!["catalog", "build"];
    full.extend_from_slice(args);
    let o = call(&full, "");
    assert_eq!(o.code, 0, "{}", o.stdout);
    o.stdout
}

#[test]
fn build_then_check() {
    let z34 = built(&["z34"]);
    let o = call(&["check"], &z34);
    assert_eq!((o.code, json(&o)["zinbiel"].clone()), (0, Value::Bool(true)));
    let o = call(&["check", "-"], &z34);
    assert_eq!(o.code, 0);
}

#[test]
fn check_reports_a_witness() {
    // (e1 e1) e1 = e1 but e1 (2 e1 e1) = 2 e1
    let bad = r#"{"dim_even":1,"dim_odd":0,"products":[{"left":"e1","right":"e1","result":{"e1":"1"}}]}"#;
    let o = call(&["check"], bad);
    assert_eq!(o.code, 1);
    let v = json(&o);
    assert_eq!(v["triple"], serde_json::json!(["e1", "e1", "e1"]));
    assert_eq!(v["residual"], "-e1");
}

#[test]
fn null_filiform_series() {
    let a = built(&["NullFiliformSuper", "--dim", "7"]);
    let v = json(&call(&["series"], &a));
    assert_eq!(v["power"], serde_json::json!([7, 6, 5, 4, 3, 2, 1, 0]));
    assert_eq!(v["nilpotency_index"], 8);
    assert_eq!(v["null_filiform"], true);
}

#[test]
fn bad_rational_is_an_input_error() {
    let bad = r#"{"dim_even":1,"dim_odd":0,"products":[{"left":"e1","right":"e1","result":{"e1":"1/0"}}]}"#;
    let o = call(&["check"], bad);
    assert_eq!(o.code, 2);
    assert_eq!(json(&o)["error"]["kind"], "rational");
}

#[test]
fn input_errors() {
    for (stdin, kind) in [
        ("{", "malformed_json"),
        (r#"{"dim_even":1}"#, "schema"),
        (r#"{"dim_even":1,"dim_odd":0,"products":[{"left":"f1","right":"e1","result":{}}]}"#, "dimension_mismatch"),
        (r#"{"dim_even":1,"dim_odd":0,"products":[{"left":"x1","right":"e1","result":{}}]}"#, "label"),
        (r#"{"dim_even":1,"dim_odd":1,"products":[{"left":"e1","right":"e1","result":{"f1":"1"}}]}"#, "grading"),
    ] {
        let o = call(&["series"], stdin);
        assert_eq!((o.code, json(&o)["error"]["kind"].as_str().unwrap().to_owned()), (2, kind.to_owned()), "{stdin}");
    }
    let o = call(&["series", "/no/such/file"], "");
    assert_eq!((o.code, json(&o)["error"]["kind"].clone()), (2, Value::from("io")));
}

#[test]
fn usage_and_help() {
    assert_eq!(call(&["frobnicate"], "").code, 2);
    let help = call(&["--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("charseq"));
}

#[test]
fn catalog_constraints_exit_2() {
    let o = call(&["catalog", "build", "NullFiliformSuper", "--n", "2", "--m", "4"], "");
    assert_eq!((o.code, json(&o)["error"]["kind"].clone()), (2, Value::from("constraint")));
    let o = call(&["catalog", "build", "NF4", "--n", "7", "--m", "4"], "");
    assert_eq!(o.code, 2);
    let o = call(&["catalog", "build", "NoSuchFamily"], "");
    assert_eq!(o.code, 2);
    assert_eq!(call(&["catalog", "list"], "").code, 0);
}

#[test]
fn catalog_parameters() {
    let a = built(&["NF2", "--n", "6", "--m", "4", "--alpha", "-3/7"]);
    assert_eq!(call(&["check"], &a).code, 0);
    let o = call(&["catalog", "build", "NF2", "--alpha", "x"], "");
    assert_eq!(o.code, 2);
}

#[test]
fn charseq_at_element_and_search() {
    let a = built(&["NF1", "--n", "6", "--m", "4"]);
    let v = json(&call(&["charseq", "--element", "e1"], &a));
    assert_eq!(v["c0"], serde_json::json!([5, 1]));
    assert_eq!(v["c1"], serde_json::json!([4]));
    let v = json(&call(&["charseq"], &a));
    assert_eq!(v["filiform"], "yes");
    let o = call(&["charseq", "--element", "e9"], &a);
    assert_eq!(o.code, 2);
}

#[test]
fn gr_on_nf_and_on_a_violator() {
    let a = built(&["NF3", "--n", "6", "--m", "5"]);
    let v = json(&call(&["gr"], &a));
    assert_eq!(v["layers"][0], serde_json::json!([2, 1]));
    assert_eq!(v["verdict"]["naturally_graded"], "yes");
    assert_eq!(call(&["check"], &zinbiel::format::to_text(&v["gr"])).code, 0);
    let nfs = built(&["NullFiliformSuper", "--dim", "5"]);
    let o = call(&["gr"], &nfs);
    assert_eq!(o.code, 1);
    assert!(json(&o)["violation"].is_object());
}

#[test]
fn structure_of_z39() {
    let v = json(&call(&["structure"], &built(&["z39"])));
    assert_eq!(v["type_n1"]["holds"], true);
    assert_eq!(v["minimal_ideal"]["dim"], 1);
}

#[test]
fn iso_verify_between_files() {
    let dir = std::env::temp_dir().join(format!("zinbiel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let put = |name: &str, text: &str| {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    let a = put("a.json", &built(&["z33"]));
    let b = put("b.json", &built(&["z34"]));
    let id = put("id.json", r#"{"even":[["1"]],"odd":[["1","0"],["0","1"]]}"#);
    let o = call(&["iso-verify", &a, &a, &id], "");
    assert_eq!((o.code, json(&o)["isomorphism"].clone()), (0, Value::Bool(true)));
    let o = call(&["iso-verify", &a, &b, &id], "");
    assert_eq!(o.code, 1);
    assert!(json(&o)["first_failure"].is_array());
    let sing = put("s.json", r#"{"even":[["1"]],"odd":[["1","1"],["1","1"]]}"#);
    assert_eq!(call(&["iso-verify", &a, &a, &sing], "").code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_system_and_comparison() {
    let v = json(&call(&["classify-system", "--pattern", "1,2", "--compare"], ""));
    assert_eq!(v["comparison"]["unmatched"], serde_json::json!([]));
    assert_eq!(v["comparison"]["unmatched_by_sign"]["first-second"], 4);
    let o = call(&["classify-system", "--pattern", "1,2", "--first-second-sign", "--compare"], "");
    assert_eq!(o.code, 1);
    assert_eq!(call(&["classify-system", "--pattern", "x"], "").code, 2);
}

#[test]
fn classify_verify_is_seeded() {
    let a = call(&["--seed", "3", "classify-verify", "--family", "(b)"], "");
    let b = call(&["classify-verify", "--family", "b", "--seed", "3"], "");
    assert_eq!(a, b);
    assert_eq!(json(&a)["passed"], true);
    assert_ne!(a, call(&["--seed", "4", "classify-verify", "--family", "b"], ""));
    assert_eq!(call(&["classify-verify", "--family", "z"], "").code, 2);
}
