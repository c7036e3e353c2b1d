use std::path::PathBuf;
use std::process::Command;

use mdcodes::text::parse_poly;
use mdcodes::ChainRing;
use mdcodes_cli::{cmd_canonical, cmd_generate, cmd_idempotents, cmd_root, cmd_verify, JobConfig, MethodChoice, RootConfig};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    format!("@{}", p.display())
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mdcodes")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

const EX2_C0: &str = "5*(x^8 + x^6 + x^4 + x^2 + 1), x^9 + x^8 + x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1";

#[test]
fn canonical_staircases() {
    let out = cmd_canonical(&JobConfig::new("Z/25", &[10], EX2_C0)).unwrap();
    let exps: Vec<u64> = out.json["entries"].as_array().unwrap().iter().map(|e| e["gamma_exp"].as_u64().unwrap()).collect();
    assert_eq!(exps, vec![1, 0]);
    let one = cmd_canonical(&JobConfig::new("Z/25", &[10], "1")).unwrap();
    assert!(one.text.contains("gamma^0 * (1)"));
    let zero = cmd_canonical(&JobConfig::new("Z/25", &[10], "")).unwrap();
    assert_eq!(zero.exit, 0);
    assert!(zero.text.contains("zero code"));
}

#[test]
fn generate_from_levels_and_from_generators_agree() {
    let mut config = JobConfig::new("Z/25", &[10, 4], "");
    config.levels = Some(fixture("example2.levels"));
    config.method = MethodChoice::Method2;
    config.verify = true;
    let from_levels = cmd_generate(&config).unwrap();
    assert_eq!(from_levels.json["generators"].as_array().unwrap().len(), 6);
    assert_eq!(from_levels.json["certified"], Value::Bool(true));

    // the same code, now given by those six generators
    let gens: Vec<String> = from_levels.json["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["poly"].as_str().unwrap().to_string())
        .collect();
    let mut again = JobConfig::new("Z/25", &[10, 4], &gens.join(", "));
    again.method = MethodChoice::Method2;
    again.verify = true;
    let out = cmd_generate(&again).unwrap();
    assert_eq!(out.json["method"], "method2");
    assert_eq!(out.json["certified"], Value::Bool(true));
    let gs = out.json["generators"].as_array().unwrap();
    assert_eq!(gs.len(), 6);
    assert!(gs.iter().all(|g| g["separable"] == Value::Bool(true)));
}

#[test]
fn empty_report_for_zero_code() {
    let out = cmd_generate(&JobConfig::new("Z/9", &[2, 2], "0")).unwrap();
    assert!(out.json["generators"].as_array().unwrap().is_empty());
    assert!(out.text.contains("none (zero code)"));
}

#[test]
fn auto_routing_follows_divisibility() {
    // Z/9 has q - 1 = 2: the length-2 variable is split, the length-3 one peeled
    let mut c = JobConfig::new("Z/9", &[2, 3], "x + y");
    c.verify = true;
    let out = cmd_generate(&c).unwrap();
    assert_eq!(out.json["method"], "method2");
    assert!(out.json["notes"][0].as_str().unwrap().contains("x, y"));
    let out = cmd_generate(&JobConfig::new("Z/9", &[3, 3], "x + y")).unwrap();
    assert_eq!(out.json["method"], "method1");
    let out = cmd_generate(&JobConfig::new("Z/9", &[3, 3, 2], "x1 + x2*x3")).unwrap();
    assert_eq!(out.json["method"], "hybrid");
}

#[test]
fn printed_polynomials_reparse() {
    let ring = ChainRing::parse("F4[g]/(g^2)").unwrap();
    let mut c = JobConfig::new("F4[g]/(g^2)", &[4, 3], "(a*x + g)*(y^2 + a), x^3 + g*y");
    c.verify = true;
    for method in [MethodChoice::Method1, MethodChoice::Method2] {
        c.method = method;
        let out = cmd_generate(&c).unwrap();
        assert_eq!(out.json["certified"], Value::Bool(true));
        for g in out.json["generators"].as_array().unwrap() {
            let text = g["poly"].as_str().unwrap();
            let f = parse_poly(&ring, &[4, 3], text).unwrap();
            assert_eq!(f.to_string(), text);
            for factor in g["form"]["factors"].as_array().unwrap() {
                let var = factor["var"].as_str().unwrap();
                let dims = if var == "x" { [4, 1] } else { [1, 3] };
                let poly = factor["poly"].as_str().unwrap();
                assert_eq!(parse_poly(&ring, &dims, poly).unwrap().to_string(), poly);
            }
        }
        for level in out.json["levels"].as_array().unwrap() {
            for e in level["entries"].as_array().unwrap() {
                let q = e["q"].as_str().unwrap();
                assert_eq!(parse_poly(&ring, &[4], q).unwrap().to_string(), q);
            }
        }
    }
}

#[test]
fn verify_passes_and_catches_mutations() {
    let mut c = JobConfig::new("Z/9", &[2, 2], "3*(x + y), x*y + 1 + 3*x");
    let ok = cmd_verify(&c).unwrap();
    assert_eq!(ok.exit, 0, "{}", ok.text);
    assert!(ok.text.contains("result: PASS"));

    let claimed: Vec<String> = cmd_generate(&c).unwrap().json["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["poly"].as_str().unwrap().to_string())
        .collect();
    c.claim = Some(format!("{}, x", claimed.join(", ")));
    let bad = cmd_verify(&c).unwrap();
    assert_eq!(bad.exit, 4);
    assert!(bad.text.contains("counterexample (in the claimed span, not in the code)"));
}

#[test]
fn binary_exit_codes() {
    let (code, out, _) = run(&["canonical", "--ring", "Z/4", "--dims", "2", "--gens", "2*(x + 1)"]);
    assert_eq!(code, 0);
    assert!(out.contains("gamma^1 * (x + 1)"));
    let (code, _, err) = run(&["canonical", "--ring", "Z/4", "--dims", "2", "--gens", "x +\n $"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 2"), "{err}");
    let (code, _, _) = run(&["canonical", "--ring", "Z/6", "--dims", "2"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["generate", "--ring", "Z/4", "--dims", "2,2", "--gens", "x", "--method", "method2"]);
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = run(&["verify", "--ring", "Z/9", "--dims", "4,4", "--gens", "1", "--budget", "100000"]);
    assert_eq!(code, 5);
    let (code, _, _) = run(&[
        "verify", "--ring", "Z/9", "--dims", "2,2", "--gens", "x + 1", "--claim", "x + 2",
    ]);
    assert_eq!(code, 4);
    let (code, out, _) = run(&["generate", "--ring", "Z/9", "--dims", "2,2", "--gens", "x + y", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    for key in ["ring", "dims", "method", "generators", "levels", "certified"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn idempotents_and_roots() {
    let out = cmd_idempotents(&RootConfig { ring: "Z/25".into(), n: 4, ..Default::default() }).unwrap();
    assert!(out.text.contains("zeta: 7"));
    assert!(out.text.contains("theta_0 = 19*(1 + y + y^2 + y^3)"));
    assert!(out.text.contains("theta_1 = 19*(1 + 18*y + 24*y^2 + 7*y^3)"));
    assert!(out.text.contains("theta_2 = 19*(1 + 24*y + y^2 + 24*y^3)"));
    assert!(out.text.contains("theta_3 = 19*(1 + 7*y + 24*y^2 + 18*y^3)"));
    let err = cmd_idempotents(&RootConfig { ring: "Z/25".into(), n: 3, ..Default::default() }).unwrap_err();
    assert_eq!(err.exit_code(), 3);

    let root = cmd_root(&RootConfig { ring: "Z/25".into(), n: 4, ..Default::default() }).unwrap();
    assert_eq!(root.json["zeta"], "7");
    let lifted = cmd_root(&RootConfig { ring: "Z/25".into(), n: 4, residue: Some("3".into()), ..Default::default() }).unwrap();
    assert_eq!(lifted.json["zeta"], "18");
    assert_eq!(lifted.json["primitive"], Value::Bool(true));
}
