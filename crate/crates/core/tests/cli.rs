use std::path::Path;
use std::process::{Command, Output, Stdio};
use std::io::Write;

fn unimass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unimass"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("UNIMASS_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mass_text_and_decimal() {
    let o = unimass(&["mass", "3", "1", "--decimal", "20"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("mass: beta(2)/(12*pi^2)"), "{text}");
    assert!(text.contains("decimal: 0.0077338931814744200615"), "{text}");
}

#[test]
fn mass_json_schema() {
    let o = unimass(&["mass", "5", "1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["d"], 6);
    assert_eq!(v["n"], 3);
    assert_eq!(v["residue"], 4);
    assert_eq!(v["lambda2"], "21/2");
    assert_eq!(v["mass_exact"]["coeff"], "7/7680");
    assert_eq!(v["mass_exact"]["pi_power"], -3);
    assert_eq!(v["mass_exact"]["zeta"], serde_json::json!([3]));
    assert_eq!(v["mass_pretty"], "7*zeta(3)/(7680*pi^3)");
    assert!(v.get("mass_decimal").is_none());
}

#[test]
fn json_is_byte_stable() {
    let args = ["mass", "10", "3", "--json", "--decimal", "50"];
    let first = unimass(&args).stdout;
    for _ in 0..3 {
        assert_eq!(unimass(&args).stdout, first);
    }
    let t = ["table", "--even", "--nmax", "6", "--format", "json"];
    assert_eq!(unimass(&t).stdout, unimass(&t).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(unimass(&["mass", "2", "0"]).status.code(), Some(2));
    assert_eq!(unimass(&["mass", "7", "2", "--even"]).status.code(), Some(3));
    assert_eq!(unimass(&["mass", "4", "2", "--even"]).status.code(), Some(3));
    assert_eq!(unimass(&["invariants", "3", "0", "--prime", "15"]).status.code(), Some(2));
    assert_eq!(unimass(&["table", "--odd", "--nmax", "0"]).status.code(), Some(2));
    assert_eq!(unimass(&["table", "--odd", "--even"]).status.code(), Some(2));
    assert_eq!(unimass(&["oracle", "Cargo.toml"]).status.code(), Some(2));
    assert_eq!(unimass(&["oracle", "no-such-file"]).status.code(), Some(2));
}

#[test]
fn oracle_size_bound_exits_4() {
    let dir = std::env::temp_dir().join(format!("unimass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let big = dir.join("z10.gram");
    let mut text = String::from("10\n");
    for i in 0..10 {
        let row: Vec<&str> = (0..10).map(|j| if i == j { "1" } else { "0" }).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    std::fs::write(&big, text).unwrap();
    let o = unimass(&["oracle", big.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    let bad = dir.join("indefinite.gram");
    std::fs::write(&bad, "2\n1 0\n0 -1\n").unwrap();
    assert_eq!(unimass(&["oracle", bad.to_str().unwrap()]).status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn swapped_signature_warns() {
    let o = unimass(&["mass", "1", "4", "--json"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert_eq!(o.stdout, unimass(&["mass", "4", "1", "--json"]).stdout);
}

#[test]
fn precision_env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_unimass"))
        .args(["mass", "3", "0", "--decimal"])
        .env("UNIMASS_PRECISION", "15")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("decimal: 0.0416666666666667"));
}

#[test]
fn invariants_examples() {
    let text = stdout(&unimass(&["invariants", "5", "3", "--prime", "2"]));
    assert!(text.contains("disc -1") && text.contains("case A") && text.contains("lambda2: 1/2"), "{text}");
    let text = stdout(&unimass(&["invariants", "8", "0", "--prime", "2"]));
    assert!(text.contains("disc 1,") && text.contains("case C") && text.contains("lambda2: 135/2"), "{text}");
    let text = stdout(&unimass(&["invariants", "3", "0", "--prime", "7"]));
    assert!(text.contains("hasse_witt 1,") && text.contains("lambda 1"), "{text}");
    let text = stdout(&unimass(&["invariants", "4", "3", "--all"]));
    assert!(text.contains("place inf") && text.contains("case split"), "{text}");
}

#[test]
fn oracle_examples() {
    assert_eq!(stdout(&unimass(&["oracle", "data/z8.gram"])), "total=10321920 so=5160960\n");
    assert_eq!(stdout(&unimass(&["oracle", "data/e8.gram"])), "total=696729600 so=348364800\n");
    let text = stdout(&unimass(&["oracle", "data/z9.gram", "data/e8z1.gram"]));
    assert!(text.ends_with("mass=17/1393459200\n"), "{text}");
    assert!(stdout(&unimass(&["oracle", "--so", "data/e8.gram"])).ends_with("mass=1/348364800\n"));
}

#[test]
fn table_row_one() {
    let text = stdout(&unimass(&["table", "--odd", "--nmax", "1", "--format", "csv"]));
    assert_eq!(text, "n,+-1,+-3\n1,1/8,1/24\n");
    let text = stdout(&unimass(&["table", "--odd", "--nmax", "2"]));
    assert_eq!(text.lines().count(), 3);
}

fn compare(parity: &str, fixture: &str) {
    let table = unimass(&["table", parity, "--nmax", "10", "--format", "csv"]);
    assert!(table.status.success());
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut child = Command::new("sh")
        .arg(root.join("scripts/compare_table.sh"))
        .arg(root.join(fixture))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&table.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "{}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr));
}

#[test]
fn table1_matches_fixture() {
    compare("--odd", "data/table1.csv");
}

#[test]
fn table2_matches_fixture() {
    compare("--even", "data/table2.csv");
}
