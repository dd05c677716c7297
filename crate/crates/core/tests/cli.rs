use std::process::{Command, Output};

use hurwitz_core::cli::{
    cmd_admissible, cmd_braid, cmd_charp, cmd_defdatum, cmd_group, cmd_hurwitz, cmd_tails,
    AdmissibleReport, BraidReport, CharpReport, DefDatumReport, GroupCommandReport, HurwitzMode,
    HurwitzReport, RunConfig, TailsReport,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env_remove("HURWITZ_MAX_DEGREE")
        .env_remove("HURWITZ_MAX_DEGREE_PURE")
        .env_remove("HURWITZ_MAX_WORK")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hurwitz(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// JSON from the binary parses back to the library value and re-serializes
/// to the same text.
fn round_trip<T: DeserializeOwned + Serialize + PartialEq + std::fmt::Debug>(args: &[&str], expected: &T) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let text = stdout(&full);
    let parsed: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&parsed, expected, "{args:?}");
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
}

#[test]
fn hurwitz_both_prints_pass() {
    let text = stdout(&["hurwitz", "5:2,2,4,4", "--mode", "both"]);
    assert!(text.lines().nth(1).unwrap().split_whitespace().eq(["5:2,2,4,4", "8", "8", "PASS"]), "{text}");
}

#[test]
fn exit_codes() {
    let out = hurwitz(&["hurwitz", "9:2,2,4,4", "--mode", "brute"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("genus condition violated"));
    assert_eq!(hurwitz(&["hurwitz", "5:x"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["hurwitz", "10:2-2,8,10", "--mode", "brute"]).status.code(), Some(3));
    let guarded = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["hurwitz", "8:2,2,2,2,2,2,2,2,2,2,2,2,2,2", "--mode", "brute"])
        .env("HURWITZ_MAX_WORK", "1000")
        .output()
        .unwrap();
    assert_eq!(guarded.status.code(), Some(3));
    assert_eq!(hurwitz(&["defdatum", "5", "2,2,2,1"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["group", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn charp_and_defdatum_tables() {
    let text = stdout(&["charp", "7:3,3,5,5"]);
    assert!(text.lines().nth(1).unwrap().split_whitespace().eq(["7:3,3,5,5", "7", "15", "8", "7", "true"]), "{text}");
    let text = stdout(&["defdatum", "3", "1,1,1,1"]);
    assert!(text.contains("1 + λ") && text.contains("[2]"), "{text}");
    let text = stdout(&["charp", "7:2,4,4,6", "--format", "csv"]);
    assert_eq!(text.lines().nth(1), Some("\"7:2,4,4,6\",7,12,5,{7|9},unknown"));
}

#[test]
fn json_round_trips() {
    let cfg = RunConfig::default();
    round_trip::<HurwitzReport>(
        &["hurwitz", "7:3-3,3,7", "--mode", "both"],
        &cmd_hurwitz("7:3-3,3,7", HurwitzMode::Both, &cfg).unwrap(),
    );
    round_trip::<BraidReport>(&["braid", "6:2,3,4,5"], &cmd_braid("6:2,3,4,5", &cfg).unwrap());
    round_trip::<AdmissibleReport>(
        &["admissible", "7:2,4,4,6", "--char", "7"],
        &cmd_admissible("7:2,4,4,6", Some(7)).unwrap(),
    );
    round_trip::<CharpReport>(&["charp", "7:2-3,4,7"], &cmd_charp("7:2-3,4,7", None).unwrap());
    round_trip::<DefDatumReport>(&["defdatum", "7", "3,4,2,3"], &cmd_defdatum(7, "3,4,2,3").unwrap());
    round_trip::<TailsReport>(&["tails", "11", "3-4"], &cmd_tails(11, "3-4").unwrap());
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/groups/pgaml2_16.txt");
    let text = std::fs::read_to_string(path).unwrap();
    round_trip::<GroupCommandReport>(&["group", path], &cmd_group(&text, &cfg).unwrap());
}

#[test]
fn output_is_independent_of_thread_count() {
    for args in [["braid", "8:3,4,5,6"], ["hurwitz", "9:2-3,6,9"]] {
        let mut outputs = Vec::new();
        for threads in ["1", "2", "4"] {
            let mut full = args.to_vec();
            full.extend(["--mode", "brute"].iter().take(if args[0] == "hurwitz" { 2 } else { 0 }));
            full.extend(["--format", "json", "--threads", threads]);
            outputs.push(stdout(&full));
        }
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn verify_single_criterion() {
    let text = stdout(&["verify", "--only", "10"]);
    assert!(text.contains("PASS") && !text.contains("FAIL"), "{text}");
    assert_eq!(hurwitz(&["verify", "--only", "12"]).status.code(), Some(2));
}
