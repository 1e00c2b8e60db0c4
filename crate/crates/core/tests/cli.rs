mod common;

use common::{fixture_path, run_cli, temp_spec};
use hetcat::cli::spec::{parse_spec, SpecError};

#[test]
fn represent_left_prints_the_universal() {
    let chain = fixture_path("chain.spec");
    let (code, out, err) = run_cli(&["represent-left", &chain, "--het", "ceil", "--object", "3"]);
    assert_eq!(
        (code, out.as_str(), err.as_str()),
        (0, "F(3) = 2, universal = u_3_2\n", "")
    );
    let (code, out, _) = run_cli(&["represent-right", &chain, "--het", "ceil", "--object", "1"]);
    assert_eq!((code, out.as_str()), (0, "G(1) = 2, universal = u_2_1\n"));
}

#[test]
fn broken_associativity_is_an_input_error() {
    let (code, out, err) = run_cli(&["validate", &fixture_path("broken.spec")]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("associativity at [t, s, t]"), "{err}");
}

#[test]
fn powerset_diagonal_is_a_brain_functor() {
    let power = fixture_path("powerset.spec");
    let (code, out, _) = run_cli(&[
        "brain-from-adjoints",
        &power,
        "--left",
        "join",
        "--mid",
        "diag",
        "--right",
        "meet",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("BRAIN FUNCTOR: verified"));
    let (code, out, _) = run_cli(&[
        "brain",
        &power,
        "--functor",
        "diag",
        "--out",
        "diag_out",
        "--in",
        "diag_in",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("BRAIN FUNCTOR: verified"));
}

#[test]
fn adjunction_report() {
    let (code, out, _) = run_cli(&["adjunction", &fixture_path("chain.spec"), "--het", "ceil"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "F = {0 -> 0, 1 -> 1, 2 -> 1, 3 -> 2, 4 -> 2}\nG = {0 -> 0, 1 -> 2, 2 -> 4}\n\
         adjunctive squares: 9 of 9 commute\nADJUNCTION: verified\n"
    );
    let (code, out, _) = run_cli(&[
        "adjunction",
        &fixture_path("truncated.spec"),
        "--het",
        "ceil",
    ]);
    assert_eq!(code, 1);
    assert!(out.starts_with("ADJUNCTION: not verified"));
    assert!(out.contains("not representable"));
}

#[test]
fn negative_answers_exit_one() {
    let truncated = fixture_path("truncated.spec");
    let (code, out, err) = run_cli(&[
        "represent-left",
        &truncated,
        "--het",
        "ceil",
        "--object",
        "4",
    ]);
    assert_eq!(
        (code, out.as_str(), err.as_str()),
        (1, "F(4): not representable (no hets out of 4)\n", "")
    );
    let (code, _, _) = run_cli(&[
        "report-selection",
        &truncated,
        "--het",
        "ceil",
        "--element",
        "u_0_0",
    ]);
    assert_eq!(code, 1);
    let (code, out, _) = run_cli(&[
        "emit-dot",
        "square",
        &truncated,
        "--het",
        "ceil",
        "--element",
        "u_0_0",
    ]);
    assert_eq!(code, 1);
    assert!(!out.contains("digraph"));
}

#[test]
fn miscoded_points_are_not_a_brain_functor() {
    let text = std::fs::read_to_string(fixture_path("coordinate.spec"))
        .unwrap()
        .replace("obj P1 = (0,0)", "obj P1 = (1,0)")
        .replace("obj P2 = (1,0)", "obj P2 = (0,0)");
    let path = temp_spec("miscoded", &text);
    let (code, out, err) = run_cli(&[
        "brain",
        &path,
        "--functor",
        "coord",
        "--out",
        "code",
        "--in",
        "plot",
    ]);
    assert_eq!(code, 1, "{err}");
    assert!(out.starts_with("BRAIN FUNCTOR: not verified"));
    assert!(out.contains("het_out (sending side)"));
}

#[test]
fn input_errors_exit_two() {
    let chain = fixture_path("chain.spec");
    let cases: [&[&str]; 7] = [
        &["validate", "/nonexistent/file.spec"],
        &["represent-left", &chain, "--het", "nope", "--object", "3"],
        &["represent-left", &chain, "--het", "ceil", "--object", "9"],
        &["represent-left", &chain, "--het", "ceil"],
        &["gallery", "no-such-fixture"],
        &["gallery", "powerset-diagonal", "k=9"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, out, err) = run_cli(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (code, out, _) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("represent-left"));
}

#[test]
fn gallery_runs_and_emits_specs() {
    let (code, out, _) = run_cli(&["gallery", "chain-galois", "n=4", "m=2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("fixture chain-galois (n=4, m=2)\n"));
    assert!(!out.contains("FAIL"));
    let (code, spec, _) = run_cli(&["gallery", "coordinate-coding", "--emit-spec"]);
    assert_eq!(code, 0);
    let doc = parse_spec(&spec).unwrap();
    assert!(doc.functor("coord").is_some());
}

#[test]
fn selection_report_through_the_cli() {
    let (code, out, _) = run_cli(&[
        "report-selection",
        &fixture_path("chain.spec"),
        "--het",
        "ceil",
        "--element",
        "u_3_2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("generator of diversity:     F(3) = 2"));
    assert!(out.contains("amplification hom is the identity"));
    let free = fixture_path("free.spec");
    let (code, out, _) = run_cli(&[
        "report-selection",
        &free,
        "--het",
        "fun",
        "--element",
        "S1~Pre2_1[1]",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.contains("polling (universal het):    h_S1 = S1~Disc1[0]"),
        "{out}"
    );
}

#[test]
fn square_dot_matches_the_factorization() {
    let (code, out, _) = run_cli(&[
        "emit-dot",
        "square",
        &fixture_path("chain.spec"),
        "--het",
        "ceil",
        "--element",
        "u_1_2",
    ]);
    assert_eq!(code, 0);
    for line in [
        "  x [label=\"1\"];",
        "  fx [label=\"1\"];",
        "  ga [label=\"4\"];",
        "  a [label=\"2\"];",
        "  x -> fx [label=\"u_1_1\", style=dashed];",
        "  fx -> a [label=\"le_1_2\", style=solid];",
        "  x -> ga [label=\"le_1_4\", style=solid];",
        "  ga -> a [label=\"u_4_2\", style=dashed];",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line}\n{out}");
    }
}

#[test]
fn butterfly_dot_has_dashed_hets_around_the_centre() {
    let coord = fixture_path("coordinate.spec");
    let args = [
        "emit-dot",
        "butterfly",
        &coord,
        "--functor",
        "coord",
        "--out",
        "code",
        "--in",
        "plot",
        "--out-element",
        "code_P4",
        "--in-element",
        "plot_(1,1)",
    ];
    let (code, out, _) = run_cli(&args);
    assert_eq!(code, 0);
    let dashed: Vec<&str> = out.lines().filter(|l| l.contains("style=dashed")).collect();
    assert_eq!(dashed.len(), 2);
    assert!(dashed.iter().any(|l| l.starts_with("  x_out -> fx")));
    assert!(dashed.iter().any(|l| l.starts_with("  fx -> x_in")));
    assert_eq!(out.lines().filter(|l| l.contains("style=solid")).count(), 2);

    let mismatched = [
        "emit-dot",
        "butterfly",
        &coord,
        "--functor",
        "coord",
        "--out",
        "code",
        "--in",
        "plot",
        "--out-element",
        "code_P4",
        "--in-element",
        "plot_(0,0)",
    ];
    assert_eq!(run_cli(&mismatched).0, 2);
}

#[test]
fn relation_shorthand_synthesizes_actions() {
    let head =
        "category X\n  poset-chain 4\nend\ncategory A\n  poset-chain 3\nend\nhet h : X ~> A\n";
    let doc = parse_spec(&format!(
        "{head}  rel 0 2\n  rel 1 2\n  rel 2 2\n  rel 3 2\nend\n"
    ))
    .unwrap();
    let het = doc.het("h").unwrap();
    assert_eq!(het.het_set_named("3", "2").unwrap().len(), 1);
    assert_eq!(het.element_count(), 4);
    // alone, 3 ~> 2 has nowhere to send its restriction along 0 -> 3
    match parse_spec(&format!("{head}  rel 3 2\nend\n")).unwrap_err() {
        SpecError::Invalid { report, .. } => assert!(report.has("missing right action")),
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn undeclared_category_names_its_line() {
    let err =
        parse_spec("category X\n  poset-chain 2\nend\n\nfunctor F : X -> Z\nend\n").unwrap_err();
    assert!(
        matches!(err, SpecError::Undeclared { line: 5, ref name, .. } if name == "Z"),
        "{err}"
    );
    assert!(err
        .to_string()
        .starts_with("line 5, column 18: undeclared category `Z`"));
}
