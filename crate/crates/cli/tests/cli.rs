use std::path::Path;

use frobform::{corpus, parse_algebra_file, FieldSpec};
use frobform_cli::{parse_element, run, run_with_input, CliError};

fn cli(args: &[&str]) -> (i32, String) {
    let mut full = vec!["frobform"];
    full.extend_from_slice(args);
    run(full)
}

fn cli_stdin(args: &[&str], input: &str) -> (i32, String) {
    let mut full = vec!["frobform"];
    full.extend_from_slice(args);
    run_with_input(full, &mut input.as_bytes())
}

fn verdict(report: &str) -> &str {
    report
        .lines()
        .rev()
        .find_map(|l| l.strip_prefix("VERDICT: "))
        .unwrap_or_else(|| panic!("no verdict in:\n{report}"))
}

fn corpus_text(args: &[&str]) -> String {
    let mut full = vec!["corpus"];
    full.extend_from_slice(args);
    let (code, text) = cli(&full);
    assert_eq!(code, 0, "{text}");
    text
}

fn write_corpus(dir: &Path, file: &str, args: &[&str]) -> String {
    let path = dir.join(file).to_string_lossy().into_owned();
    let mut full = vec!["corpus"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let (code, report) = cli(&full);
    assert_eq!(code, 0, "{report}");
    path
}

#[test]
fn extended_nn_nakayama_through_a_pipe() {
    let file = corpus_text(&["extended_nn"]);
    let (code, report) = cli_stdin(&["nakayama", "-"], &file);
    assert_eq!(code, 0);
    assert_eq!(verdict(&report), "ORDER 2");
    assert!(report.contains("[ 0 0 1 0 0 0 ]\n[ 0 1 0 0 0 0 ]"), "{report}");
}

#[test]
fn probe_on_the_xyx_pair_is_obstructed() {
    let file = corpus_text(&["extended_nn"]);
    let (code, report) = cli_stdin(&["probe", "-", "--unit", "1 + x"], &file);
    assert_eq!(code, 0);
    assert_eq!(verdict(&report), "OBSTRUCTED central-norm");
    assert!(report.contains("nakayama matrices: not similar"));
    let (_, report) = cli_stdin(&["probe", "-", "--unit", "1 + x - y"], &file);
    assert_eq!(verdict(&report), "INCONCLUSIVE");
}

#[test]
fn planar_quartic_det_class() {
    let file = corpus_text(&["planar_quartic", "--a", "1", "--b", "1", "--c", "2"]);
    let (code, report) = cli_stdin(&["detclass", "-"], &file);
    assert_eq!(code, 0);
    assert_eq!(verdict(&report), "CLASS 2");
    let file = corpus_text(&["planar_quartic", "--field", "GF(7)", "--a", "1", "--b", "1", "--c", "2"]);
    // 2 = 3^2 in GF(7)
    assert_eq!(verdict(&cli_stdin(&["detclass", "-"], &file).1), "CLASS 1");
}

#[test]
fn norms_and_straightening() {
    let file = corpus_text(&["extended_nn"]);
    let (_, report) = cli_stdin(&["norm", "-", "--unit", "1 + x"], &file);
    assert!(report.contains("norm: 1 + x + y + xy"));
    assert_eq!(verdict(&report), "NONCENTRAL");
    let (_, report) = cli_stdin(&["norm", "-", "--unit", "1 + x - y"], &file);
    assert_eq!(verdict(&report), "CENTRAL");

    let twisted = {
        let (code, text) = cli_stdin(&["twist", "-", "--unit", "1 + x", "-o", "-"], &file);
        assert_eq!(code, 0);
        text
    };
    let (code, report) = cli_stdin(&["straighten", "-", "--functional", "lambda_twisted"], &twisted);
    assert_eq!(code, 0, "{report}");
    assert_eq!(verdict(&report), "STRAIGHTENED ORDER 2");
}

#[test]
fn files_round_trip_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let builds: [(&str, &[&str]); 6] = [
        ("nn.json", &["nakayama_nesbitt", "--alpha", "-3/4"]),
        ("xyx.json", &["extended_nn", "--field", "GF(5)"]),
        ("quartic.json", &["planar_quartic", "--a", "2/3", "--b", "-1", "--c", "5"]),
        ("companion.json", &["quartic_companion", "--delta", "7/2"]),
        ("t5.json", &["truncated_poly", "--field", "3", "--n", "5"]),
        ("h27.json", &["heisenberg27", "--field", "GF(3)"]),
    ];
    for (file, args) in builds {
        let path = write_corpus(dir.path(), file, args);
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = parse_algebra_file(&text).unwrap();
        assert_eq!(frobform::write_algebra_file(&parsed), text, "{file}");
        let (code, report) = cli(&["validate", &path]);
        assert_eq!((code, verdict(&report)), (0, "VALID"), "{file}");

        let out = dir.path().join(format!("twisted-{file}")).to_string_lossy().into_owned();
        let (code, report) = cli(&["twist", &path, "--unit", "1 + 1", "-o", &out]);
        assert_eq!(code, 0, "{report}");
        let again = parse_algebra_file(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(again.algebra, parsed.algebra);
        assert!(again.functionals.contains_key("lambda_twisted"));
    }
}

#[test]
fn reports_are_deterministic() {
    let file = corpus_text(&["extended_nn"]);
    let args = ["conjecture", "-", "--trials", "30", "--seed", "11"];
    let first = cli_stdin(&args, &file);
    let second = cli_stdin(&args, &file);
    assert_eq!(first, second);
    assert_eq!(verdict(&first.1), "CANDIDATES 0");
    assert!(first.1.contains("trials: 30"));
}

#[test]
fn structural_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_corpus(dir.path(), "t4.json", &["truncated_poly", "--n", "4"]);
    assert_eq!(verdict(&cli(&["radical", &path]).1), "RADICAL DIM 3");
    assert_eq!(verdict(&cli(&["local", &path]).1), "LOCAL");
    assert_eq!(verdict(&cli(&["frobenius", &path]).1), "FROBENIUS");
    assert_eq!(verdict(&cli(&["form", &path]).1), "FORM SYMMETRIC");
    let nn = write_corpus(dir.path(), "nn.json", &["nakayama_nesbitt", "--alpha", "2"]);
    assert_eq!(verdict(&cli(&["form", &nn]).1), "FORM NONSYMMETRIC");
    assert_eq!(verdict(&cli(&["nakayama", &nn, "--order-bound", "20"]).1), "ORDER NONE");
}

#[test]
fn precondition_failures_exit_with_one() {
    let file = corpus_text(&["extended_nn"]);
    let (code, report) = cli_stdin(&["probe", "-", "--unit", "x"], &file);
    assert_eq!(code, 1);
    assert!(verdict(&report).starts_with("ERROR"));
    let (code, report) = cli_stdin(&["probe", "-", "--unit", "1 + z"], &file);
    assert_eq!(code, 1);
    assert!(report.contains("unknown basis name `z`"));
    let (code, _) = cli_stdin(&["probe", "-", "--unit", "1 +"], &file);
    assert_eq!(code, 1);
    let (code, _) = cli_stdin(&["form", "-", "--functional", "mu"], &file);
    assert_eq!(code, 1);
    let (code, _) = cli(&["validate", "/nonexistent/algebra.json"]);
    assert_eq!(code, 1);
    let (code, _) = cli(&["corpus", "nakayama_nesbitt", "--alpha", "0"]);
    assert_eq!(code, 1);
    let (code, _) = cli(&["corpus", "planar_quartic", "--a", "1", "--b", "2", "--c", "4"]);
    assert_eq!(code, 1);
    let (code, _) = cli(&["no-such-command"]);
    assert_eq!(code, 1);
    let (code, _) = cli_stdin(&["validate", "-"], "{\"field\": \"Q\"}");
    assert_eq!(code, 1);
}

#[test]
fn assertion_failures_exit_with_two() {
    let e = CliError::Core(frobform::Error::Assertion("broken".into()));
    assert_eq!(e.exit_code(), 2);
    assert_eq!(CliError::Core(frobform::Error::NotAUnit).exit_code(), 1);
}

#[test]
fn expressions_respect_noncommutativity() {
    let q = FieldSpec::Rationals;
    let nn = corpus::nakayama_nesbitt(q, &q.int(3)).unwrap().algebra;
    let commutator = parse_element("x*y - y*x", &nn).unwrap();
    assert_eq!(commutator, nn.basis(3).scale(&q.int(-2)));
    let xyx = corpus::extended_nn(q).algebra;
    assert!(parse_element("x^2", &xyx).unwrap().is_zero());
    assert_ne!(parse_element("x*y", &xyx).unwrap(), parse_element("y*x", &xyx).unwrap());
}
