use std::process::{Command, Output};

fn lexiring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexiring"))
        .args(args)
        .env_remove("LEXIRING_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ring_info_lists_z12_ideals() {
    let o = lexiring(&["ring-info", "zmod:12"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("6 principal left ideals"), "{s}");
    assert!(s.contains("gamma      {6, 4, 3, 2, 1}"), "{s}");
}

#[test]
fn ring_info_json() {
    let o = lexiring(&["ring-info", "gf:4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 4);
    assert_eq!(v["commutative"], true);
}

#[test]
fn bad_ring_is_config_error() {
    let o = lexiring(&["ring-info", "zmod:x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn run_z4_lee_json() {
    let o = lexiring(&[
        "run", "--ring", "zmod:4", "--n", "4", "--prop", "lee>=2 zero:false", "--oracle", "all", "--format", "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 64);
    let oracles = v["oracles"].as_array().unwrap();
    assert!(!oracles.is_empty());
    assert!(oracles.iter().all(|r| r["verdict"] == "holds"), "{v}");
}

#[test]
fn unrespectful_order_is_gated() {
    let args = ["run", "--ring", "zmod:4", "--n", "3", "--order", "explicit:0<2<1<3", "--prop", "hamming>=2"];
    let o = lexiring(&args);
    assert_eq!(o.status.code(), Some(3));
    let mut forced = args.to_vec();
    forced.push("--allow-unrespectful");
    let o = lexiring(&forced);
    assert!(o.status.success());
}

#[test]
fn noncommutative_selfdot_needs_override() {
    let o = lexiring(&["run", "--ring", "mat:2,2", "--n", "2", "--prop", "selfdot==0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn member_atom_uses_named_code() {
    let o = lexiring(&[
        "run", "--ring", "zmod:4", "--n", "4", "--prop", "member:C zero:asis", "--code", "C=1111", "--format", "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 4);
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lexiring"))
        .args(["run", "--ring", "zmod:4", "--n", "6", "--prop", "hamming>=2"])
        .env("LEXIRING_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reproduce_all_passes() {
    let o = lexiring(&["reproduce", "all"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("18/18 pass"));
}

#[test]
fn reproduce_unknown_id() {
    let o = lexiring(&["reproduce", "9.9"]);
    assert_eq!(o.status.code(), Some(2));
}
