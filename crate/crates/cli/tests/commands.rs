use std::path::PathBuf;
use std::process::Command;

use learnspace::fixtures::{f_ex, g_ex, k_ny, l_ex, letters};
use learnspace_cli::{
    parse_family, run, serialize_family, Format, EXIT_FALSE, EXIT_OK, EXIT_USAGE,
};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("learnspace").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn fixture_files_match_library_fixtures() {
    for (name, family) in [
        ("f_ex", f_ex()),
        ("g_ex", g_ex()),
        ("l_ex", l_ex()),
        ("k_ny", k_ny()),
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let parsed = parse_family(&text).unwrap();
        assert!(parsed.warnings.is_empty(), "{name}");
        assert_eq!(parsed.family, family, "{name}");
        assert_eq!(parsed.family.domain().items(), family.domain().items());
        assert_eq!(parsed.family.states(), family.states(), "{name} bit-exact");
    }
    assert_eq!(f_ex().len(), 24);
}

#[test]
fn fixtures_round_trip_in_both_formats() {
    for family in [f_ex(), g_ex(), l_ex(), k_ny()] {
        for format in [Format::Lines, Format::Json] {
            let text = serialize_family(&family, format);
            let back = parse_family(&text).unwrap().family;
            assert_eq!(back.states(), family.states());
            assert_eq!(serialize_family(&back, format), text);
        }
    }
}

#[test]
fn children_keep_item_names() {
    let f = f_ex();
    let adf = f.domain().state(["a", "d", "f"]).unwrap();
    for child in f.children(adf).unwrap() {
        let text = serialize_family(child.family(), Format::Json);
        let back = parse_family(&text).unwrap().family;
        assert_eq!(&back, child.family());
    }
}

#[test]
fn project_worked_example() {
    let (code, out, _) = invoke(&["project", &fixture("f_ex"), "--items", "a,d,f"]);
    assert_eq!(code, EXIT_OK);
    let p = parse_family(&out).unwrap().family;
    assert_eq!(p.len(), 8);
    assert_eq!(
        p,
        letters("adf", &["", "a", "d", "f", "ad", "af", "df", "adf"])
    );
}

#[test]
fn children_of_g_ex() {
    let (code, out, _) = invoke(&["children", &fixture("g_ex"), "--items", "c"]);
    assert_eq!(code, EXIT_OK);
    let blocks: Vec<&str> = out.split("# child ").skip(1).collect();
    assert_eq!(blocks.len(), 2);
    let expected = [
        letters("ab", &["", "a", "b", "ab"]),
        letters("ab", &["", "a", "ab"]),
    ];
    for (block, want) in blocks.iter().zip(&expected) {
        let body = block.split_once('\n').unwrap().1;
        assert_eq!(&parse_family(body).unwrap().family, want);
    }
    assert!(out.ends_with("# children: 2\n"));
}

#[test]
fn trivial_child_is_marked() {
    let (code, out, _) = invoke(&["children", &fixture("f_ex"), "--items", "a,d,f"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches(": trivial\n").count(), 1);
    assert_eq!(out.matches("plus child learning space: yes").count(), 4);
}

#[test]
fn check_reports_predicates() {
    let (code, out, _) = invoke(&["check", &fixture("f_ex")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("learning space: yes"));

    let (code, out, _) = invoke(&["check", &fixture("l_ex")]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("union-closed: no"));
    assert!(out.contains("well-graded: no"));
    assert!(out.contains("partial knowledge structure: yes"));
}

#[test]
fn yielding_reports_violation() {
    let (code, out, _) = invoke(&["yielding", &fixture("f_ex"), "--items", "a,d,f"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "yielding: true\n"));
    let (code, out, _) = invoke(&["yielding", &fixture("k_ny"), "--items", "d"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("minimal state {a,b,d}"));
}

#[test]
fn assess_recovers_state() {
    let (code, out, _) = invoke(&[
        "assess",
        &fixture("f_ex"),
        "--true-state",
        "b,c,d,e",
        "--items",
        "a,d,f",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("result {b,c,d,e}\n"));
    assert!(out.starts_with("level 1 states 24 subset {a,d,f}\n"));

    let (code, _, err) = invoke(&["assess", &fixture("f_ex"), "--true-state", "d"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("error"));
}

#[test]
fn enumerate_counts() {
    let (code, out, _) = invoke(&["enumerate", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("count: 22\n"));
    assert_eq!(out.lines().count(), 23);
    let (_, out, _) = invoke(&["enumerate", "--n", "2", "--structures"]);
    assert!(out.ends_with("count: 4\n"));
}

#[test]
fn generate_is_deterministic_and_sound() {
    let args = ["generate", "--n", "6", "--steps", "40", "--seed", "7"];
    let (code, a, _) = invoke(&args);
    let (_, b, _) = invoke(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(a, b);
    assert!(parse_family(&a).unwrap().family.is_learning_space());
}

#[test]
fn verify_exit_codes_and_summary() {
    let (code, out, _) = invoke(&["verify", "--suite", "pt1", "--n", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("PASS pt1.projection_is_learning_space"));

    let (code, out, _) = invoke(&[
        "verify", "--suite", "pt2", "--n", "4", "--seeds", "10", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], true);
    let claims = v["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["failures"] == 0));

    // No two-item family is a partial learning space without being union-closed.
    let (code, _, _) = invoke(&["verify", "--suite", "lemmas", "--n", "2"]);
    assert_eq!(code, EXIT_FALSE);
    let (code, _, _) = invoke(&["verify", "--suite", "lemmas", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn usage_and_format_errors_exit_2() {
    assert_eq!(invoke(&["frob"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["project", &fixture("f_ex")]).0, EXIT_USAGE);
    assert_eq!(invoke(&["check", "/nonexistent/family"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["project", &fixture("f_ex"), "--items", "z"]).0,
        EXIT_USAGE
    );
    assert_eq!(invoke(&["verify", "--suite", "pt9"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["verify", "--suite", "lemmas", "--seeds", "3"]).0,
        EXIT_USAGE
    );
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Usage"));
}

#[test]
fn binary_exit_codes_and_stable_output() {
    let bin = env!("CARGO_BIN_EXE_learnspace");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let a = status(&["project", &fixture("f_ex"), "--items", "a,d,f"]);
    let b = status(&["project", &fixture("f_ex"), "--items", "a,d,f"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(status(&["check", &fixture("l_ex")]).status.code(), Some(1));
    assert_eq!(status(&["nope"]).status.code(), Some(2));
}
