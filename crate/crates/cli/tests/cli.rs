use std::process::{Command, Output};

fn sptforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sptforge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spt_b2_csv_rows() {
    let o = sptforge(&["spt", "--family", "B2", "--max", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n1,0\n2,1\n3,2\n4,5\n");
}

#[test]
fn verify_one_dissection() {
    let o = sptforge(&["--format", "json", "verify", "--id", "dissect_B2_7", "--order", "250"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["id"], "dissect_B2_7");
    assert_eq!(reports[0]["order"], 250);
    assert_eq!(reports[0]["status"], "verified");
    assert!(reports[0]["first_mismatch"].is_null());
    assert!(reports[0]["millis"].is_u64());
}

#[test]
fn congruence_f3_7n_plus_4() {
    let o = sptforge(&["congruence", "--family", "F3", "--p", "7", "--b", "4", "--max", "300"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified congruence_F3_7n+4"));
}

#[test]
fn false_congruence_exits_one() {
    let o = sptforge(&["--format", "json", "congruence", "--family", "B2", "--p", "5", "--b", "2", "--max", "60"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["status"], "mismatch");
    assert_eq!(v[0]["failure"]["check"], "divisibility");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--bogus"][..],
        &["frobnicate"],
        &["spt", "--family", "Z9", "--max", "3"],
        &["spt", "--family", "B2", "--max", "2001"],
        &["verify", "--id", "dissect_B2_7", "--order", "1201"],
        &["verify", "--id", "no_such_case"],
        &["congruence", "--family", "F3", "--p", "4", "--b", "0", "--max", "10"],
    ] {
        let o = sptforge(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_round_trips_byte_for_byte() {
    let o = sptforge(&["--no-timing", "--format", "json", "verify", "--id", "series_*"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap() + "\n", stdout(&o));
    for r in v.as_array().unwrap() {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["id", "order", "status", "first_mismatch", "millis"]);
        assert!(r["millis"].is_null());
    }
}

#[test]
fn seed_changes_dispatch_not_output() {
    let base = sptforge(&["--no-timing", "--format", "json", "verify", "--id", "dissect_*"]);
    let shuffled = sptforge(&["--no-timing", "--format", "json", "--seed", "17", "--parallelism", "3", "verify", "--id", "dissect_*"]);
    assert_eq!(base.status.code(), Some(0));
    assert_eq!(base.stdout, shuffled.stdout);
}

#[test]
fn paper_bounds_pin_mod7_orders() {
    let o = sptforge(&["--paper-bounds", "--format", "json", "verify", "--id", "*mod7*"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let orders: Vec<(String, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["id"].as_str().unwrap().to_string(), r["order"].as_u64().unwrap()))
        .collect();
    assert!(orders.contains(&("f3_crank_mod7".into(), 211)));
    assert!(orders.contains(&("mod7_rank_pieces".into(), 148)));
}

#[test]
fn crank_classes_sum_to_spt() {
    let spt = sptforge(&["spt", "--family", "F3", "--max", "20", "--format", "csv"]);
    let crank = sptforge(&["crank", "--family", "F3", "--t", "3", "--max", "20", "--format", "csv"]);
    assert_eq!(crank.status.code(), Some(0));
    let mut sums = vec![0i64; 21];
    for line in stdout(&crank).lines().skip(1) {
        let f: Vec<i64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        sums[f[0] as usize] += f[2];
    }
    for line in stdout(&spt).lines().skip(1) {
        let f: Vec<i64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(sums[f[0] as usize], f[1], "n={}", f[0]);
    }
}

#[test]
fn oracle_compare_clamps_to_enumeration_cap() {
    let o = sptforge(&["--format", "json", "oracle-compare", "--family", "J2", "--max", "500"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["order"], 61);
    assert!(String::from_utf8_lossy(&o.stderr).contains("capped"));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("sptforge-list-{}.csv", std::process::id()));
    let o = sptforge(&["--format", "csv", "--output", path.to_str().unwrap(), "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("id,ring,default_order,statement\n"));
    assert!(!text.contains('\r'));
    assert!(text.lines().count() > 40);
}
