use std::process::{Command, Output};

use gf2m_synth::Circuit;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gf2m-synth")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn summary_value(text: &str, key: &str) -> Option<usize> {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .map(|v| v.parse().unwrap())
}

#[test]
fn params_reports() {
    let o = bin(&["params", "-m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("gnb_type=2") && text.contains("gnb_p=11"));
    assert!(text.contains("f_table=0,1,3,2,4,4,2,3,1,0"));
    assert!(stdout(&bin(&["params", "-m", "163"])).contains("gnb_type=4"));
    assert!(stdout(&bin(&["params", "-m", "4"])).contains("ghost_bit=supported"));
    assert_eq!(bin(&["params", "-m", "8"]).status.code(), Some(2));
}

#[test]
fn synth_summaries_match_reparsed_netlists() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &str, usize); 3] = [
        (&["synth", "mult", "--rep", "gbb", "-m", "4"], "toffoli", 25),
        (&["synth", "selfmult", "--rep", "gbb", "-m", "4", "-r", "2"], "depth", 10),
        (&["synth", "mult", "--rep", "gnb", "-m", "5"], "toffoli", 45),
    ];
    for (i, (args, key, value)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("{i}.txt"));
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--out", path.to_str().unwrap()]);
        let o = bin(&full);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert_eq!(summary_value(&text, key), Some(*value));
        let circuit = Circuit::parse_netlist(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(text, circuit.resources().to_string());
    }
    let o = bin(&["synth", "mult", "--rep", "gbb", "-m", "4"]);
    assert_eq!(summary_value(&stdout(&o), "depth"), Some(5));
}

#[test]
fn inverter_netlist_has_blocks() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inv.txt");
    let o = bin(&["synth", "invert", "--rep", "gnb", "-m", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("# block forward")).count(), 3);
    assert!(text.lines().any(|l| l == "reg output 21 7"));
}

#[test]
fn verify_modes_and_exit_codes() {
    let o = bin(&["verify", "invert", "--rep", "gbb", "-m", "4", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS 16 inputs"));

    let o = bin(&["verify", "mult", "--rep", "gnb", "-m", "163", "--random", "20", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS 20 inputs"));
    assert!(stdout(&bin(&["verify", "mult", "-m", "5"])).contains("seed=0xb10f"));

    // Exhaustive over 2^22 cases is refused.
    assert_eq!(bin(&["verify", "mult", "--rep", "gbb", "-m", "10", "--exhaustive"]).status.code(), Some(2));
}

#[test]
fn tampered_netlist_fails_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    let p = path.to_str().unwrap();
    assert!(bin(&["synth", "mult", "--rep", "gbb", "-m", "4", "--out", p]).status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let first_gate = lines.iter().position(|l| l.starts_with("ccx")).unwrap();
    lines.remove(first_gate);
    std::fs::write(&path, lines.join("\n")).unwrap();

    let o = bin(&["verify", "mult", "--rep", "gbb", "-m", "4", "--in", p, "--exhaustive"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL") && out.contains("input_a="), "{out}");
}

#[test]
fn io_and_parse_failures_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("none.txt");
    assert_eq!(
        bin(&["verify", "mult", "-m", "5", "--in", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "qubits 15\nccx 0 0 1\n").unwrap();
    assert_eq!(bin(&["verify", "mult", "-m", "5", "--in", bad.to_str().unwrap()]).status.code(), Some(3));
    let nodir = dir.path().join("no/such/dir.txt");
    assert_eq!(
        bin(&["synth", "mult", "-m", "5", "--out", nodir.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn table_rows() {
    let o = bin(&["table", "-m", "4,5,7,10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().filter(|t| *t != "|").collect())
        .collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r[3] == "1"), "addition depth is 1");
    let gbb4 = rows.iter().find(|r| r[0] == "4" && r[1] == "gbb").unwrap();
    assert_eq!(gbb4[5], "5/5");
    // Inversion depth grows with m: directly for ghost-bit, and per unit of
    // t + (t mod 2) for normal bases, whose type changes from row to row.
    let inv_depth = |r: &Vec<&str>| r[7].split('/').next().unwrap().parse::<f64>().unwrap();
    let ghost: Vec<f64> = rows.iter().filter(|r| r[1] == "gbb").map(inv_depth).collect();
    assert!(ghost.windows(2).all(|w| w[0] < w[1]), "{ghost:?}");
    let gnb: Vec<f64> = rows
        .iter()
        .filter(|r| r[1] == "gnb")
        .map(|r| {
            let t: f64 = r[2].parse().unwrap();
            inv_depth(r) / (t + t % 2.0)
        })
        .collect();
    assert!(gnb.windows(2).all(|w| w[0] < w[1]), "{gnb:?}");
    assert!(String::from_utf8(o.stderr).unwrap().contains("skipping m=5 gbb"));
}

#[test]
fn identical_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        assert!(bin(&["synth", "invert", "--rep", "gnb", "-m", "7", "--out", p.to_str().unwrap()]).status.success());
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}
