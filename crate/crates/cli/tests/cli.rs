use std::io::Write;
use std::process::{Command, Output};

fn kauffman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kauffman"))
        .args(args)
        .output()
        .expect("run kauffman")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("kauffman-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

#[test]
fn parse_summaries() {
    let o = kauffman(&["parse", "corpus:torus33sing"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in ["vertices: 6", "edges: 12", "faces: 8", "planar: true"] {
        assert!(s.lines().any(|l| l == line), "{line} missing from {s}");
    }
    let o = kauffman(&["parse", "corpus:unknot"]);
    let s = stdout(&o);
    assert!(s.contains("vertices: 0") && s.contains("planar: true"));
}

#[test]
fn malformed_file_exits_2_with_position() {
    let path = write_temp("bad.skd", "X+ 1 2 3 4\nS 1 2 two 1\nQ 1\n");
    let o = kauffman(&["parse", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2, column 7"), "{err}");
}

#[test]
fn io_and_lookup_errors() {
    assert_eq!(kauffman(&["parse", "/definitely/not/here.skd"]).status.code(), Some(1));
    assert_eq!(kauffman(&["parse", "corpus:nope"]).status.code(), Some(2));
    assert_eq!(kauffman(&["--q", "99", "parse", "corpus:trefoil"]).status.code(), Some(2));
}

#[test]
fn alexander_outputs() {
    let o = kauffman(&["alexander", "corpus:trefoil"]);
    assert_eq!(stdout(&o).lines().next(), Some("T - 1 + T^-1"));
    let o = kauffman(&["alexander", "corpus:sing-kink"]);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
    let o = kauffman(&["alexander", "corpus:sing-hopf2", "--method", "skein"]);
    assert_eq!(stdout(&o).trim(), "-T^(1/2) - T^(-1/2)");
    let o = kauffman(&["--json", "alexander", "corpus:sing-kink"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"chi_hfa":[[0,1]],"delta":[[0,1]],"ell":0,"methods_agree":true}"#
    );
}

#[test]
fn marked_edge_override() {
    let a = stdout(&kauffman(&["--q", "5", "alexander", "corpus:figure8"]));
    let b = stdout(&kauffman(&["alexander", "corpus:figure8"]));
    assert_eq!(a, b);
    let s = stdout(&kauffman(&["--q", "5", "parse", "corpus:figure8"]));
    assert!(s.contains("marked edge: 5"));
}

#[test]
fn euler_outputs() {
    let s = stdout(&kauffman(&["euler", "corpus:sing-kink"]));
    assert!(s.contains("chi(HF-) = 1") && s.contains("ell = 0") && s.contains("chi(HFa) = 1"));
    let o = kauffman(&["euler", "corpus:trefoil"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("chi(HF-) = T - 1 + T^-1"));
    assert!(!s.contains("chi(HFa) ="));
}

#[test]
fn homology_outputs() {
    let o = kauffman(&["--json", "homology", "corpus:sing-kink"]);
    assert_eq!(stdout(&o).trim(), r#"{"euler":[[0,1]],"planar":true,"ranks":[[0,0,1]]}"#);
    let s = stdout(&kauffman(&["homology", "corpus:trefoil"]));
    assert!(s.contains("chain-level"));
    let o = kauffman(&["--json", "homology", "corpus:trefoil"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["planar"], false);
    assert_eq!(v["chain_level_only"], true);
    let tsv = stdout(&kauffman(&["--tsv", "homology", "corpus:trefoil-sing3"]));
    assert_eq!(tsv, "d\\s\t-1\t0\t1\n2\t.\t.\t1\n0\t.\t2\t.\n-2\t1\t.\t.\n");
}

#[test]
fn states_listing() {
    let tsv = stdout(&kauffman(&["--tsv", "states", "corpus:sing-kink"]));
    assert_eq!(tsv, "v0\tS\tM\tN\nC\t0\t0\t0\n");
    let o = kauffman(&["--json", "states", "corpus:torus33sing"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 21);
}

#[test]
fn corpus_listing() {
    let s = stdout(&kauffman(&["corpus"]));
    for name in ["unknot", "kink+", "sing-kink", "trefoil", "figure8", "hopf+", "sing-hopf2",
        "sing-trefoil1", "trefoil-sing3", "torus33sing"] {
        assert!(s.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}

#[test]
fn verify_passes_and_negative_control_fails() {
    let o = kauffman(&["verify", "--seed", "7", "--count", "100", "--max-crossings", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    let o = kauffman(&["verify", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("golden-values"));
    let o = kauffman(&["verify", "--count", "10", "--corrupt-weights"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("method-agreement"));
}

#[test]
fn json_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_kauffman"))
            .args(["--json", "verify", "--seed", "11", "--count", "30"])
            .env("KAUFFMAN_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let states = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_kauffman"))
            .args(["--json", "states", "corpus:torus33sing"])
            .env("KAUFFMAN_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(states("1"), states("3"));
}

#[test]
fn braid_file_input() {
    let path = write_temp("t33.skd", "# torus link\nbraid 3 1,2,1,2,1,2 sing 1,2,3,4,5,6\n");
    let o = kauffman(&["alexander", path.to_str().unwrap(), "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("T^2 + 5*T + 9 + 5*T^-1 + T^-2"));
}
