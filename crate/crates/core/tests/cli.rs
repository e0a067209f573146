//! End-to-end tests of the command-line binary: output shapes, golden
//! bytes, determinism, and the exit-code contract (0 success, 1
//! verification failure, 2 usage error).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_variant-totient"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "command {args:?} failed: {out:?}");
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn totient_t_spot_values_golden() {
    assert_eq!(
        stdout_of(&["totient", "10", "--function", "T"]),
        "{\"command\":\"totient\",\"inputs\":{\"function\":\"T\",\"n\":10,\"oracle\":false},\
         \"outputs\":{\"evaluation\":{\"kind\":\"exact\",\"parity\":\"even\",\
         \"rule\":\"twice-prime-power-1-mod-4\",\"value\":2}}}\n"
    );
    assert_eq!(
        stdout_of(&["totient", "1", "--function", "T"]),
        "{\"command\":\"totient\",\"inputs\":{\"function\":\"T\",\"n\":1,\"oracle\":false},\
         \"outputs\":{\"evaluation\":{\"kind\":\"exact\",\"parity\":\"even\",\
         \"rule\":\"power-of-two\",\"value\":0}}}\n"
    );
}

#[test]
fn totient_other_functions() {
    let phi = stdout_of(&["totient", "10", "--function", "phi"]);
    assert!(phi.contains("\"value\":4"), "{phi}");
    let schemmel = stdout_of(&["totient", "15", "--function", "schemmel"]);
    assert!(schemmel.contains("\"value\":3"), "{schemmel}");
    let schemmel3 = stdout_of(&["totient", "35", "--function", "schemmel", "--r", "3"]);
    assert!(schemmel3.contains("\"value\":8"), "{schemmel3}");
    let tr = stdout_of(&["totient", "10", "--function", "Tr", "--r", "2"]);
    assert!(tr.contains("\"value\":2"), "{tr}");
}

#[test]
fn totient_oracle_resolves_constrained() {
    let out = stdout_of(&["totient", "105", "--function", "T", "--oracle"]);
    assert!(out.contains("\"kind\":\"constrained\""), "{out}");
    assert!(out.contains("\"oracle_value\":7"), "{out}");
    assert!(out.contains("\"lower\":1"), "{out}");
    assert!(out.contains("\"upper\":13"), "{out}");
}

#[test]
fn table_jsonl_and_csv() {
    let jsonl = stdout_of(&["table", "1", "10", "--function", "T"]);
    assert_eq!(jsonl.lines().count(), 10);
    assert!(jsonl.lines().next().unwrap().starts_with("{\"n\":1,"));

    let csv = stdout_of(&["table", "1", "10", "--function", "T", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,kind,value,lower,upper,parity,candidates,rule"
    );
    assert_eq!(lines.count(), 10);
    assert!(csv.contains("10,exact,2,2,2,even,,twice-prime-power-1-mod-4"));
    // the two-prime odd case carries its candidate pair
    let csv = stdout_of(&["table", "15", "15", "--function", "T", "--format", "csv"]);
    assert!(csv.contains("15,constrained,,0,2,even,0|2,odd-two-prime-powers"), "{csv}");
}

#[test]
fn verify_commands_pass_and_exit_zero() {
    let out = run(&["verify", "range", "1", "2000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"violations\":[]"), "{text}");

    let out = run(&["verify", "lemmas", "315"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "group", "units:33", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "group", "additive:16", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn crypto_roundtrip_through_cli() {
    let enc = stdout_of(&["crypto", "encrypt", "--p", "11", "--x", "3", "--e", "7", "--g", "2"]);
    assert!(enc.contains("\"c\":10"), "{enc}");
    let dec = stdout_of(&["crypto", "decrypt", "--p", "11", "--x", "3", "--e", "7", "--c", "10"]);
    assert!(dec.contains("\"g\":2"), "{dec}");
}

#[test]
fn crypto_keygen_is_seed_deterministic() {
    let a = run(&["crypto", "keygen", "--safe-prime-bits", "24", "--seed", "9"]);
    let b = run(&["crypto", "keygen", "--safe-prime-bits", "24", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout, "same seed must give identical bytes");
    let c = run(&["crypto", "keygen", "--safe-prime-bits", "24", "--seed", "10"]);
    assert_ne!(a.stdout, c.stdout, "different seed should differ");
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("\"p\":"), "{text}");
    assert!(text.contains("\"sophie_germain_q\":"), "{text}");
}

#[test]
fn attack_commands() {
    let pairs = stdout_of(&["attack", "pairs", "--p", "11", "--g", "2", "--x", "3", "--e", "7"]);
    assert!(pairs.contains("\"pair_count\":6"), "{pairs}");
    assert!(pairs.contains("\"bound_satisfied\":true"), "{pairs}");
    assert!(pairs.contains("\"theoretical_lower_bound\":2"), "{pairs}");

    let exp = stdout_of(&["attack", "exponents", "--p", "11", "--c", "3"]);
    assert!(exp.contains("\"pair_count\":6"), "{exp}");
    assert!(exp.contains("\"exponent_count\":3"), "{exp}");
    assert!(exp.contains("\"solvable\":true"), "{exp}");

    // a non-square has no solutions; the bound is vacuous
    let exp = stdout_of(&["attack", "exponents", "--p", "11", "--c", "2"]);
    assert!(exp.contains("\"pair_count\":0"), "{exp}");
    assert!(exp.contains("\"solvable\":false"), "{exp}");
    assert!(exp.contains("\"bound_satisfied\":null"), "{exp}");
}

#[test]
fn survey_parity_golden() {
    assert_eq!(
        stdout_of(&["survey", "parity", "--limit", "5"]),
        "p,q,a,b,parity_of_a\n3,5,2,1,even\n"
    );
}

#[test]
fn survey_corollary_rows() {
    let csv = stdout_of(&["survey", "corollary", "--limit", "100"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "p,q,e,f,n,schemmel,totient,which_candidate");
    assert!(csv.contains("3,5,1,1,15,3,0,lower"), "{csv}");
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 8, "bad row {line}");
        assert!(fields[7] == "lower" || fields[7] == "upper");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["totient"]).status.code(), Some(2));
    assert_eq!(run(&["totient", "0"]).status.code(), Some(2));
    assert_eq!(run(&["totient", "10", "--function", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["totient", "10", "--function", "Tr", "--r", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["crypto", "keygen", "--safe-prime-bits", "3", "--seed", "1"]).status.code(),
        Some(2)
    );
    // a non-unit exponent is an input error
    assert_eq!(
        run(&["crypto", "encrypt", "--p", "11", "--x", "3", "--e", "5", "--g", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "lemmas", "10"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "group", "rings:5", "--seed", "1"]).status.code(), Some(2));
    // randomized subcommands demand an explicit seed
    assert_eq!(run(&["crypto", "keygen", "--safe-prime-bits", "16"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "group", "units:11"]).status.code(), Some(2));
    // brute-force budgets are enforced up front
    assert_eq!(
        run(&["totient", "999999999999", "--function", "Tr"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["totient", "999999999999", "--function", "T", "--oracle"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "range", "1", "99999999"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "lemmas", "99999999999"]).status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["totient", "--help"]).status.code(), Some(0));
}

#[test]
fn diagnostics_go_to_stderr_not_stdout() {
    let out = run(&["totient", "10", "--function", "T"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(!stdout.contains("elapsed_ms"), "timing leaked into stdout: {stdout}");
    assert!(stderr.contains("elapsed_ms="), "missing timing diagnostic: {stderr}");
    assert_eq!(stdout.lines().count(), 1, "data stream must be one JSON line");
}

#[test]
fn identical_argv_gives_identical_stdout() {
    for args in [
        vec!["totient", "9699690", "--function", "T"],
        vec!["table", "1", "50", "--function", "T"],
        vec!["verify", "lemmas", "1155"],
        vec!["survey", "corollary", "--limit", "200"],
        vec!["verify", "group", "units:20", "--seed", "77"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic stdout for {args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
