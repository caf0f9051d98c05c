use std::process::{Command, Output};

fn capf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capf"))
        .args(args)
        .env_remove("CAPF_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn info_on_sl25() {
    let o = capf(&["info", "SL(2,5)"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let chief: Vec<&str> = text.lines().filter(|l| l.starts_with("CHIEF")).collect();
    assert_eq!(chief, ["CHIEF 1 < 2 order=2 pd=2", "CHIEF 2 < 120 order=60 pd=2,3,5"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("NORMAL")).count(), 3);
}

#[test]
fn trivial_group_has_one_subgroup() {
    let o = capf(&["info", "C1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("SUBGROUPS 1\n"));
}

#[test]
fn strong_two_cap_witness() {
    let o = capf(&[
        "cap",
        "--group",
        "SL(2,5)",
        "--subgroup",
        "gens:0 1 4 0",
        "--variant",
        "strong-pcap:2",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "VERDICT false\nWITNESS overgroup=24#0 factor=2-8\n");
}

#[test]
fn subgroup_by_label_and_partial_series() {
    let o = capf(&[
        "cap",
        "--group",
        "S4",
        "--subgroup",
        "order:24,index:0",
        "--variant",
        "partial",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "VERDICT true\nSERIES 1 4 12 24\n");
}

#[test]
fn json_lines_parse() {
    let o = capf(&[
        "--format",
        "json-lines",
        "fusion",
        "--group",
        "A5",
        "-p",
        "5",
        "--chain",
        "--strongly-closed",
    ]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(rows.iter().all(|r| r["kind"].is_string()));
    let chain = rows.iter().find(|r| r["kind"] == "chain").unwrap();
    assert_eq!(chain["orders"], "1 5");
    let ss = rows.iter().find(|r| r["kind"] == "supersolvable").unwrap();
    assert_eq!(ss["holds"], true);
}

#[test]
fn verify_all_at_sixty_is_clean() {
    let o = capf(&["verify", "all", "--corpus-max-order", "60", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let summaries: Vec<&str> = text.lines().filter(|l| l.starts_with("SUMMARY")).collect();
    assert_eq!(summaries.len(), 17);
    assert!(summaries.iter().all(|l| l.ends_with("violations=0")));
    assert!(text
        .lines()
        .filter(|l| l.starts_with("VERDICT"))
        .all(|l| l.contains(" ms=0")));
}

#[test]
fn verify_json_lines_and_workers_agree() {
    let one = capf(&[
        "--workers",
        "1",
        "verify",
        "T-3.1",
        "--corpus-max-order",
        "24",
        "--no-timings",
    ]);
    let many = capf(&[
        "--workers",
        "4",
        "verify",
        "T-3.1",
        "--corpus-max-order",
        "24",
        "--no-timings",
    ]);
    assert_eq!(one.stdout, many.stdout);
    let o = capf(&["--format", "json-lines", "verify", "T-3.1", "--corpus-max-order", "24"]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["kind"].is_string());
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(capf(&["info", "NotAGroup"]).status.code(), Some(2));
    assert_eq!(capf(&["fusion", "--group", "S4", "-p", "4"]).status.code(), Some(2));
    assert_eq!(
        capf(&[
            "cap",
            "--group",
            "S4",
            "--subgroup",
            "order:5,index:0",
            "--variant",
            "cap"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        capf(&["verify", "all", "--corpus-max-order", "24", "--lattice-cap", "nope"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn lattice_cap_skips_are_reported() {
    let o = capf(&[
        "--lattice-cap",
        "20",
        "verify",
        "T-1.5",
        "--corpus-max-order",
        "24",
        "--no-timings",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("SKIP theorem=T-1.5 group=S4")));
}

#[test]
fn corpus_listing() {
    let o = capf(&["corpus", "list", "--max-order", "8"]);
    let text = stdout(&o);
    assert!(text.starts_with("GRAMMAR "));
    for name in ["C1", "S3", "D8", "Q8", "C2xC2xC2"] {
        assert!(text.contains(&format!("ENTRY {name} order=")), "{name}");
    }
}

#[test]
fn group_from_file() {
    let dir = std::env::temp_dir().join(format!("capf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q8.txt");
    std::fs::write(&path, "name Q8-matrices\nmatrix 3\n0 1 2 0\n1 1 1 2\n").unwrap();
    let o = capf(&["info", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("GROUP Q8-matrices order=8\n"));
    std::fs::remove_dir_all(&dir).ok();
}
