use std::process::{Command, Output};

use frobenius::{GapSet, IntPoly, StatReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobenius"))
        .args(args)
        .env_remove("FROBENIUS_MAX_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn report(args: &[&str]) -> StatReport {
    let out = run(args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(&out).trim()).unwrap()
}

#[test]
fn compute_examples() {
    let g = report(&["compute", "--params", "5,7", "--k", "0", "--stat", "g"]);
    assert_eq!(g.value, Some(23.into()));
    let c = report(&["compute", "--params", "5,7", "--k", "0", "--stat", "c"]);
    assert_eq!(c.value, Some(12.into()));
    let sm = report(&["compute", "--params", "3,5", "--k", "1", "--stat", "sm", "--m", "2"]);
    assert_eq!(sm.value, Some(2335.into()));
    assert_eq!(stdout(&run(&["compute", "--params", "3,5", "--k", "1", "--stat", "sm", "--m", "2"])).trim(),
        r#"{"stat":"s^m","a":3,"b":5,"k":1,"m":2,"value":"2335","provenance":"closed-form"}"#);
}

#[test]
fn compute_routes_to_oracle_when_asked_or_needed() {
    let out = run(&["compute", "--params", "3,5", "--k", "0", "--stat", "sm", "--m", "2"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--oracle"));

    // 1^2 + 2^2 + 4^2 + 7^2
    let r = report(&["compute", "--params", "3,5", "--k", "0", "--stat", "sm", "--m", "2", "--oracle"]);
    assert_eq!(r.value, Some(70.into()));
    assert_eq!(serde_json::to_value(&r).unwrap()["provenance"], "oracle");

    let r = report(&["compute", "--params", "6,9,20", "--stat", "g"]);
    assert_eq!(r.value, Some(43.into()));
    assert_eq!(serde_json::to_value(&r).unwrap()["provenance"], "oracle");
}

#[test]
fn compute_several_stats_emits_json_lines() {
    let out = run(&["compute", "--params", "3,5", "--k", "2", "--stat", "g,c,s,gle,cle,sle"]);
    assert_eq!(code(&out), 0);
    let reports: Vec<StatReport> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 6);
    assert_eq!(reports[0].value, Some(37.into()));
    assert_eq!(reports[1].value, Some(15.into()));
}

#[test]
fn compute_validation_errors_exit_two() {
    assert_eq!(code(&run(&["compute", "--params", "4,6", "--stat", "g"])), 2);
    assert_eq!(code(&run(&["compute", "--params", "0,5", "--stat", "g"])), 2);
    assert_eq!(code(&run(&["compute", "--params", "-3,5", "--stat", "g"])), 2);
    assert_eq!(code(&run(&["compute", "--params", "3,5", "--stat", "sm"])), 2);
}

#[test]
fn classify_examples() {
    let out = run(&["classify", "--params", "3,5", "--bound", "7"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("j,count,k"));
    let zero: Vec<u64> = lines
        .filter_map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            (cols[2] == "0").then(|| cols[0].parse().unwrap())
        })
        .collect();
    assert_eq!(zero, [1, 2, 4, 7]);

    let out = run(&["classify", "--params", "3,5", "--bound", "0"]);
    assert_eq!(stdout(&out), "j,count,k\n0,1,1\n");

    let out = run(&["classify", "--params", "5,7", "--bound", "23"]);
    assert_eq!(stdout(&out).lines().last(), Some("23,0,0"));
}

#[test]
fn genfun_examples() {
    let out = run(&["genfun", "--params", "3,5", "--numerator"]);
    assert_eq!(stdout(&out).trim(), "1 - z^15");
    let out = run(&["genfun", "--params", "3,5", "--k", "0"]);
    assert_eq!(stdout(&out).trim(), "z + z^2 + z^4 + z^7");
    let out = run(&["genfun", "--params", "2,3,5", "--denham"]);
    assert_eq!(stdout(&out).trim(), "4");
    let out = run(&["genfun", "--cyclotomic", "15"]);
    assert_eq!(stdout(&out).trim(), "1 - z + z^3 - z^4 + z^5 - z^7 + z^8");
}

#[test]
fn genfun_json_round_trips() {
    let out = run(&["genfun", "--params", "3,5,7", "--numerator", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let h: IntPoly = serde_json::from_str(stdout(&out).trim()).unwrap();
    let plain = run(&["genfun", "--params", "3,5,7", "--numerator"]);
    assert_eq!(h.to_string(), stdout(&plain).trim());
    assert_eq!(h.to_string().parse::<IntPoly>().unwrap(), h);
}

#[test]
fn genfun_indicator_bits() {
    let out = run(&["genfun", "--params", "3,5", "--k", "1", "--indicator", "--bound", "20"]);
    assert_eq!(code(&out), 0);
    // r(j) > 1 first at 15, 18, 20 and then from 23 on.
    assert_eq!(stdout(&out).trim(), "000000000000000100101");
}

#[test]
fn denham_requires_three_denominations() {
    let out = run(&["genfun", "--params", "3,5", "--denham"]);
    assert_eq!(code(&out), 2);
    let out = run(&["genfun", "--params", "2,3,5,7", "--denham"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn enumerate_round_trips_through_json() {
    let out = run(&["enumerate", "--params", "3,5", "--k", "1"]);
    assert_eq!(code(&out), 0);
    let set: GapSet = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(set.complete);
    assert_eq!(set.elements, [0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16, 17, 19, 22]);
    assert_eq!(serde_json::to_string(&set).unwrap(), stdout(&out).trim());
}

#[test]
fn enumerate_infinite_and_resource_guards() {
    assert_eq!(code(&run(&["enumerate", "--params", "1", "--k", "1"])), 3);
    assert_eq!(code(&run(&["enumerate", "--params", "3,5", "--k", "1", "--max-bound", "10"])), 4);
    let out = Command::new(env!("CARGO_BIN_EXE_frobenius"))
        .args(["classify", "--params", "3,5", "--bound", "1000"])
        .env("FROBENIUS_MAX_BOUND", "100")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "--sweep", "30", "--kmax", "5", "--mmax", "4"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let summary: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(summary["checks"], summary["passed"]);
    assert_eq!(summary["pairs"], 277);

    let out = run(&["verify", "--params", "4,6"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd is 2"));

    let out = run(&["verify", "--params", "3,5", "--kmax", "0", "--mmax", "1"]);
    assert_eq!(code(&out), 0);

    assert_eq!(code(&run(&["verify", "--params", "2,3,5"])), 2);
}

#[test]
fn verify_output_is_independent_of_workers() {
    let base = ["verify", "--sweep", "12", "--kmax", "3", "--mmax", "3"];
    let outputs: Vec<Vec<u8>> = ["1", "2", "5"]
        .iter()
        .flat_map(|w| {
            ["json", "csv", "plain"].map(|f| {
                let mut args = base.to_vec();
                args.extend(["--workers", w, "--format", f]);
                run(&args).stdout
            })
        })
        .collect();
    for chunk in 0..3 {
        for w in 1..3 {
            assert_eq!(outputs[w * 3 + chunk], outputs[chunk]);
        }
    }
}
