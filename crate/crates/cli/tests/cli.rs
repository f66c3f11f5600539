use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn repo() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn psichar(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psichar"))
        .args(args)
        .current_dir(repo())
        .env("PSI_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}); stderr: {}", String::from_utf8_lossy(&out.stderr))
    })
}

fn check<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap()
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn analyze_sym3() {
    let cache = tempfile::tempdir().unwrap();
    let out = psichar(cache.path(), &["analyze", "--group", "sym:3", "--prime", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(strs(&r["psi_values"]), ["4", "0", "1"]);
    assert_eq!(strs(&r["nu"]), ["1", "1", "1"]);
    assert_eq!(r["q"], "4");
}

#[test]
fn analyze_p_prime_group_is_trivial() {
    let cache = tempfile::tempdir().unwrap();
    let out = psichar(cache.path(), &["analyze", "--group", "cyclic:15", "--prime", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(strs(&r["psi_values"]).iter().all(|v| v == "1"));
    let cor = check(&r, "cor_2_4");
    assert_eq!(cor["status"], "pass");
    assert_eq!(cor["witness"]["psi_trivial"], true);
}

#[test]
fn analyze_with_decomposition_data() {
    let cache = tempfile::tempdir().unwrap();
    let out =
        psichar(cache.path(), &["analyze", "--group", "psl:2,7", "--prime", "7", "--dec", "data/psl2_7_p7.dec"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let proj = check(&r, "psi_projectivity");
    assert_eq!(proj["status"], "pass");
    assert_eq!(proj["witness"]["m"], serde_json::json!([1, 1, 1, 2]));
}

#[test]
fn analyze_pi_set_and_out_file() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out =
        psichar(cache.path(), &["analyze", "--group", "sym:5", "--pi", "3,2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["pi"], serde_json::json!([2, 3]));
    assert_eq!(r["q"], "24");
    // identity, then 5-cycles are the only π-regular class
    let psi = strs(&r["psi_values"]);
    assert_eq!(psi[0], "96");
    assert_eq!(psi.iter().filter(|v| *v != "0").count(), 2);
}

#[test]
fn usage_errors_exit_one() {
    let cache = tempfile::tempdir().unwrap();
    for args in [
        &["analyze", "--group", "sym:3"][..],
        &["analyze", "--group", "sym:3", "--prime", "4"],
        &["analyze", "--group", "nope:3", "--prime", "2"],
        &["analyze", "--group", "sym:3", "--prime", "2", "--pi", "2"],
        &["analyze", "--group", "sym:3", "--prime", "2", "--format", "xml"],
        &["analyze", "--group", "sym:3", "--prime", "2", "--dec", "missing.dec"],
        &["analyze", "--group", "sym:3", "--pi", "2,3", "--dec", "data/sym4_p2.dec"],
        &["suite", "no/such/config.toml"],
        &["frobnicate"],
        &[],
    ] {
        let out = psichar(cache.path(), args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
    let help = psichar(cache.path(), &["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn rejected_data_is_a_failure() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(repo().join("data/alt4_p2.dec")).unwrap();
    // make the last row of D wrong
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    *lines.last_mut().unwrap() = "2 1 1".into();
    let bad = dir.path().join("bad.dec");
    std::fs::write(&bad, lines.join("\n")).unwrap();

    let out = psichar(cache.path(), &["analyze", "--group", "alt:4", "--prime", "2", "--dec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(check(&json(&out), "brauer_system")["status"], "fail");

    let out =
        psichar(cache.path(), &["decomp-validate", "--group", "alt:4", "--prime", "2", "--dec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["valid"], false);

    let out = psichar(cache.path(), &["decomp-validate", "--group", "alt:4", "--prime", "2", "--dec", "data/alt4_p2.dec"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["cartan"], serde_json::json!([[2, 1, 1], [1, 2, 1], [1, 1, 2]]));
}

fn write_config(dir: &Path, body: &str) -> PathBuf {
    let path = dir.join("corpus.toml");
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn suite_single_p_prime_entry() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "[[entry]]\ngroup = \"cyclic:15\"\npi = [\"2\"]\n");
    let out = psichar(cache.path(), &["suite", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let s = json(&out);
    let reports = s["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert!(strs(&reports[0]["psi_values"]).iter().all(|v| v == "1"));
    assert_eq!(s["counts"]["fail"], 0);
}

#[test]
fn suite_cap_overflow_is_not_applicable() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "poset_cap = 4\n[[entry]]\ngroup = \"sym:4\"\npi = [\"2\"]\n");
    let out = psichar(cache.path(), &["suite", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let s = json(&out);
    let r = &s["reports"][0];
    for id in ["chain_orbits", "thm_11_1", "webb_inversion"] {
        assert_eq!(check(r, id)["status"], "not_applicable", "{id}");
    }
    assert_eq!(check(r, "psi_dual_definition")["status"], "pass");
    assert!(r["poset"].is_null());
}

#[test]
fn suite_counts_sum_over_reports() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let body = format!(
        "[[entry]]\ngroup = \"alt:4\"\npi = [\"primes\", \"2,3\"]\ndec = {{ \"2\" = \"{}\" }}\n\n[[entry]]\ngroup = \"dihedral:10\"\n",
        repo().join("data/alt4_p2.dec").display()
    );
    let cfg = write_config(dir.path(), &body);
    let out = psichar(cache.path(), &["suite", cfg.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let s = json(&out);
    let reports = s["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 5);
    for key in ["pass", "fail", "not_applicable"] {
        let sum: u64 = reports.iter().map(|r| r["summary"][key].as_u64().unwrap()).sum();
        assert_eq!(s["counts"][key].as_u64().unwrap(), sum);
    }
    assert_eq!(check(&reports[0], "psi_projectivity")["status"], "pass");
}

#[test]
fn suite_config_errors() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    for body in [
        "[[entry]]\ngroup = \"sym:0\"\n",
        "[[entry]]\ngroup = \"sym:3\"\npi = [\"4\"]\n",
        "[[entry]]\ngroup = \"sym:3\"\ndec = { \"2\" = \"missing.dec\" }\n",
        "[[entry]]\ngroup = \"sym:3\"\ncolour = \"blue\"\n",
        "not toml at all [",
    ] {
        let cfg = write_config(dir.path(), body);
        let out = psichar(cache.path(), &["suite", cfg.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{body}");
    }
}

#[test]
fn cold_and_warm_cache_give_identical_reports() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "[[entry]]\ngroup = \"sym:4\"\npi = [\"primes\", \"2,3\"]\n\n[[entry]]\ngroup = \"psl:2,7\"\n",
    );
    let cold = psichar(cache.path(), &["suite", cfg.to_str().unwrap(), "--jobs", "1"]);
    let warm = psichar(cache.path(), &["suite", cfg.to_str().unwrap(), "--jobs", "3"]);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(cold.stdout, warm.stdout);
    assert!(std::fs::read_dir(cache.path()).unwrap().count() >= 2);
}

#[test]
fn corrupt_cache_entries_are_replaced() {
    let cache = tempfile::tempdir().unwrap();
    let first = psichar(cache.path(), &["table", "--group", "sym:4"]);
    let entries: Vec<PathBuf> = std::fs::read_dir(cache.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    let text = std::fs::read_to_string(&entries[0]).unwrap();
    std::fs::write(&entries[0], text.replacen("chi 2: 1@1", "chi 2: 2@1", 1)).unwrap();
    let second = psichar(cache.path(), &["table", "--group", "sym:4"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_to_string(&entries[0]).unwrap(), text);
}

#[test]
fn table_output() {
    let cache = tempfile::tempdir().unwrap();
    let a = psichar(cache.path(), &["table", "--group", "sym:3"]);
    let b = psichar(cache.path(), &["table", "--group", "sym:3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let t = json(&a);
    assert_eq!(t["degrees"], serde_json::json!([1, 1, 2]));
    assert_eq!(t["hash"].as_str().unwrap().len(), 64);

    let alt5 = json(&psichar(cache.path(), &["table", "--group", "alt:5"]));
    let golden = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/alt5.chartab")).unwrap();
    assert_eq!(alt5["serialization"].as_str().unwrap(), golden);
    assert_eq!(alt5["degrees"], serde_json::json!([1, 3, 3, 4, 5]));
}

fn oracle_classes(v: &Value, key: &str) -> Vec<u64> {
    v["classes"].as_array().unwrap().iter().map(|c| c[key].as_u64().unwrap()).collect()
}

#[test]
fn oracle_counts() {
    let cache = tempfile::tempdir().unwrap();
    let s4 = json(&psichar(cache.path(), &["oracle", "--group", "sym:4", "--pi", "2"]));
    assert_eq!(s4["pi_elements"], 16);
    assert_eq!(s4["hall_exponent"], 8);
    assert_eq!(s4["q"], "16");
    assert_eq!(oracle_classes(&s4, "roots_hall"), oracle_classes(&s4, "roots_q"));
    assert_eq!(oracle_classes(&s4, "roots_hall")[0], 16);

    let a5 = json(&psichar(cache.path(), &["oracle", "--group", "alt:5", "--prime", "2"]));
    assert_eq!(a5["pi_elements"], 16);

    let c4 = json(&psichar(cache.path(), &["oracle", "--group", "cyclic:4", "--prime", "2"]));
    assert_eq!(oracle_classes(&c4, "roots_hall"), [4, 0, 0, 0]);
}

#[test]
fn oracle_size_cap() {
    let cache = tempfile::tempdir().unwrap();
    // |PSL(2,59)| = 102660 is buildable but above the oracle limit
    let out = psichar(cache.path(), &["oracle", "--group", "psl:2,59", "--prime", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));
}
