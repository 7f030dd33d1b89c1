use std::process::{Command, Output};

fn lacunary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lacunary")).args(args).output().expect("spawn lacunary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = lacunary(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn exit_codes() {
    assert_eq!(lacunary(&["bounds", "--d", "-1+x+x^5+x^14"]).status.code(), Some(0));
    assert_eq!(lacunary(&["reproduce", "--table", "table4"]).status.code(), Some(1));
    assert_eq!(lacunary(&["np", "--poly", "x^2+", "--pmax", "10"]).status.code(), Some(2));
    assert_eq!(lacunary(&["np", "--poly", "x", "--primes", "4"]).status.code(), Some(2));
    assert_eq!(lacunary(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(lacunary(&["beta", "--target", "theta:1"]).status.code(), Some(2));
    let o = lacunary(&["reproduce", "--table", "table3", "--out", "/proc/lacunary-unwritable"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(lacunary(&["--help"]).status.code(), Some(0));
}

#[test]
fn class_b_shorthand() {
    let long = lacunary(&["np", "--poly", "-1+x+x^3+x^5", "--pmax", "200"]);
    let short = lacunary(&["np", "--poly", "B:n=3;m=5", "--pmax", "200"]);
    assert_eq!(long.status.code(), Some(0));
    assert_eq!(stdout(&long), stdout(&short));
    assert_eq!(lacunary(&["np", "--poly", "B:n=3;m=4", "--pmax", "10"]).status.code(), Some(2));
}

#[test]
fn np_csv() {
    let o = lacunary(&["np", "--poly", "-1+x+x^2", "--primes", "2,5,11,13"]);
    assert_eq!(stdout(&o), "p,np\n2,0\n5,1\n11,2\n13,0\n");
}

#[test]
fn jobs_do_not_change_output() {
    let cases: [&[&str]; 3] = [
        &["density", "--poly", "-1+x+x^4", "--pmax", "30000", "--checkpoints", "1000,30000"],
        &["arc", "--n", "18"],
        &["conjb", "--n", "3", "--m1", "5"],
    ];
    for args in cases {
        let one = lacunary(&[&["--jobs", "1"], args].concat());
        let three = lacunary(&[&["--jobs", "3"], args].concat());
        assert_eq!(one.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&one), stdout(&three), "{args:?}");
    }
}

#[test]
fn arc_sampling_is_seeded() {
    let a = lacunary(&["arc", "--n", "40", "--sample", "500", "--seed", "9"]);
    let b = lacunary(&["arc", "--n", "40", "--sample", "500", "--seed", "9"]);
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["exhaustive"], false);
    assert_eq!(v["total"], 500);
    assert_eq!(v["seed"], 9);
}

#[test]
fn factor_json_shape() {
    let v = json(&["factor", "--poly", "x^4-1"]);
    let ks: Vec<u64> = v["A"].as_array().unwrap().iter().map(|e| e["k"].as_u64().unwrap()).collect();
    assert_eq!(ks, [1, 2, 4]);
    assert_eq!(v["B"], "1");
    assert_eq!(v["C"], "1");
    assert_eq!(v["conjB"], true);
}

#[test]
fn bounds_json_shape() {
    let v = json(&["--format", "json", "bounds", "--d", "-1+x+x^5+x^14"]);
    assert_eq!(v["N1"], 292);
    assert_eq!(v["N4"], 480);
    assert_eq!(v["N3"], "596046447753906250");
    assert!((v["N2_log10"].as_f64().unwrap() - 4553919.0).abs() < 10.0);
}

#[test]
fn beta_json_shape() {
    let v = json(&["beta", "--target", "lehmer", "--terms", "120"]);
    let ex: Vec<u64> = v["exponents"].as_array().unwrap().iter().map(|e| e.as_u64().unwrap()).collect();
    assert_eq!(&ex[..8], [1, 12, 31, 44, 63, 86, 105, 118]);
    assert_eq!(v["finite"], false);
    let v = json(&["beta", "--target", "theta:5"]);
    assert_eq!(v["digits"], "10001");
    assert_eq!(v["finite"], true);
}

#[test]
fn newform_csv() {
    let o = lacunary(&["newform", "--n", "7", "--pmax", "100000"]);
    assert_eq!(stdout(&o), "p,formula_value_or_class,np_actual,consistent\n41143,max,7,true\n82883,max,7,true\n");
    let o = lacunary(&["newform", "--n", "4", "--pmax", "2000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn reproduce_writes_tables() {
    let dir = std::env::temp_dir().join(format!("lacunary-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = lacunary(&["reproduce", "--table", "table3", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let table = std::fs::read_to_string(dir.join("table3.csv")).unwrap();
    assert_eq!(table, "x,np0,np2,pi\n101,14,11,26\n1001,89,78,168\n10001,619,609,1229\n");
    let diff = std::fs::read_to_string(dir.join("table3.diff.csv")).unwrap();
    assert_eq!(diff, "row,col,expected,got\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reproduce_text_reports_once() {
    let o = lacunary(&["reproduce", "--table", "table2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("column headed 27 is computed at p = 29"));
    assert!(out.contains("row 1 col 29: expected 1, got 2"));
    assert!(o.stderr.is_empty());
}
