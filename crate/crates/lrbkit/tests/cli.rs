use std::process::{Command, Output};

use serde_json::Value;

fn lrbkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrbkit")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = lrbkit(&a);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (v, out.status.code().unwrap())
}

#[test]
fn info_counts() {
    let (v, code) = json(&["info", "--instance", "builtin:cubulated-ngon?n=4&group=dihedral"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["summary"]["elements"], 25);
    assert_eq!(r["summary"]["supports"], 9);
    assert_eq!((r["element_orbits"].as_u64(), r["support_orbits"].as_u64()), (Some(6), Some(3)));
    assert_eq!(r["semisimple"], false);

    let (v, _) = json(&["info", "--instance", "builtin:free-lrb?n=3"]);
    assert_eq!(v["result"]["summary"]["elements"], 16);
    assert_eq!(v["result"]["summary"]["supports"], 8);

    let (v, _) = json(&["info", "--instance", "builtin:boolean-semilattice?n=2&group=trivial"]);
    assert_eq!(v["result"]["semisimple"], true);
}

#[test]
fn info_text() {
    let out = lrbkit(&["info", "--instance", "builtin:boolean-semilattice?n=2&group=trivial", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("semisimple (kB)^G: yes"), "{text}");
}

#[test]
fn cartan_matrices() {
    for (group, corner) in [("dihedral", 1), ("cyclic", 2)] {
        let (v, code) = json(&["cartan", "--instance", &format!("builtin:cubulated-ngon?n=5&group={group}")]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["entries"], serde_json::json!([[1, 0, 0], [1, 1, 0], [1, corner, 1]]));
    }
    // dimensions only over F_p
    let (v, code) = json(&["cartan", "--instance", "builtin:cubulated-ngon?n=5&group=dihedral", "--field", "fp:3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["entries"], serde_json::json!([[1, 0, 0], [1, 1, 0], [1, 1, 1]]));
}

#[test]
fn random_to_top_multiplicities() {
    let (v, code) = json(&["rtt", "--instance", "builtin:free-lrb?n=4"]);
    assert_eq!(code, 0);
    let m: Vec<u64> = v["result"]["eigenspaces"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(m, vec![9, 8, 6, 0, 1]);
    assert_eq!(m.iter().sum::<u64>(), 24);
    assert_eq!(v["result"]["flags"], 24);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify-all", "--format", "json"],
        vec!["theorem-c", "--instance", "builtin:arrangement?m=4", "--format", "json", "--parallel", "3"],
        vec!["peirce", "--instance", "builtin:free-lrb?n=3", "--format", "json", "--seed-policy", "max"],
    ] {
        let a = lrbkit(&args);
        let b = lrbkit(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_all_on_corpus() {
    let (v, code) = json(&["verify-all"]);
    assert_eq!(code, 0, "{}", v["failures"]);
    assert_eq!(v["pass"], true);
    let reports = v["reports"].as_array().unwrap();
    let keys: Vec<&str> = reports.iter().map(|r| r["instance"].as_str().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for cmd in ["theorem-c", "theorem-d", "theorem-e", "catzero", "det", "rtt", "derangement"] {
        assert!(reports.iter().any(|r| r["command"] == cmd), "{cmd} never ran");
    }
}

#[test]
fn verify_all_over_a_prime_field() {
    let (v, code) = json(&["verify-all", "--instance", "builtin:free-lrb?n=3 builtin:cubulated-ngon?n=5", "--field", "fp:7"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn errors_are_machine_readable() {
    let (v, code) = json(&["theorem-c", "--instance", "builtin:free-lrb?n=3"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "precondition");
    assert_eq!(v["pass"], false);

    let (v, code) = json(&["info", "--instance", "builtin:nonesuch?n=1"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");

    let (v, code) = json(&["rtt", "--instance", "builtin:free-lrb?n=3", "--field", "fp:5"]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("characteristic"));

    let out = lrbkit(&["info", "--instance", "builtin:free-lrb?n=2", "--field", "fp:4"]);
    assert!(!out.status.success());
    let out = lrbkit(&["info"]);
    assert!(!out.status.success());
}

#[test]
fn instance_files() {
    let dir = std::env::temp_dir().join(format!("lrbkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("free2.json");
    std::fs::write(&path, r#"{"name": "free2", "builtin": "builtin:free-lrb?n=2"}"#).unwrap();
    let (v, code) = json(&["theorem-a", "--instance", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["instance"], "free2");
    assert_eq!(v["result"]["consistent"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}
