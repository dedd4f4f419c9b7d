use std::io::Write;
use std::process::{Command, Output, Stdio};

use turan_core::formulas::g_formula_sum;
use turan_core::{from_graph6, Graph, PartSpec};

fn turan(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let o = turan(args, stdin);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn construct_emits_graph6() {
    let text = ok(&["construct", "--family", "g", "--n", "6", "--c", "5", "--k", "2"], "");
    let g = from_graph6(text.trim()).unwrap();
    assert_eq!((g.order(), g.edge_count()), (6, 10));
    let f = from_graph6(ok(&["construct", "--family", "f", "--n", "7", "--c", "4"], "").trim()).unwrap();
    assert_eq!(f.edge_count(), 12);
    let h = from_graph6(ok(&["construct", "--family", "h", "--n", "7", "--p", "3"], "").trim()).unwrap();
    assert_eq!(h.edge_count(), 6); // 2K_3 + K_1
    let star = from_graph6(ok(&["construct", "--family", "krs", "--r", "2", "--s", "3"], "").trim()).unwrap();
    assert_eq!(star.edge_count(), 1 + 6);
}

#[test]
fn formula_and_count_examples() {
    assert_eq!(ok(&["formula", "--which", "g-sum", "--n", "6", "--c", "5", "--k", "1", "--spec", "1,1"], ""), "11\n");
    assert_eq!(ok(&["formula", "--which", "g-closed", "--n", "6", "--c", "5", "--k", "1", "--spec", "1,1"], ""), "11\n");
    assert_eq!(ok(&["count", "--spec", "2,2", "--graph6", "-"], "C~\n"), "3\n");
    // order-insensitive spec syntax
    assert_eq!(ok(&["count", "--spec", "1,2"], "C~\nD?{\n"), "12\n6\n");
    assert_eq!(ok(&["count", "--spec", "3,1", "--through", "4"], "D?{\n"), "4\n");
}

#[test]
fn construct_piped_into_count_matches_formula() {
    let specs = ["1,1", "2,1", "2,2", "1,1,1", "2,1,1"];
    let mut lines = String::new();
    let mut points = Vec::new();
    for n in 5..=12 {
        for c in 4..n {
            for k in 0..=c / 2 {
                let args = ["construct", "--family", "g", "--n", &n.to_string(), "--c", &c.to_string(), "--k", &k.to_string()].map(String::from);
                lines.push_str(&ok(&args.iter().map(String::as_str).collect::<Vec<_>>(), ""));
                points.push((n, c, k));
            }
        }
    }
    for s in specs {
        let counted = ok(&["count", "--spec", s], &lines);
        let spec: PartSpec = s.parse().unwrap();
        let expected: Vec<String> = points.iter().map(|&(n, c, k)| g_formula_sum(n, c, k, &spec).unwrap().to_string()).collect();
        assert_eq!(counted.lines().collect::<Vec<_>>(), expected, "spec {s}");
    }
}

#[test]
fn bound_values() {
    assert_eq!(ok(&["bound", "--theorem", "C10", "--n", "7", "--alpha", "2", "--spec", "1,1"], ""), "11\n");
    assert_eq!(ok(&["bound", "--theorem", "c10", "--n", "7", "--param", "2", "--spec", "1,1", "--terms"], ""), "11\n10\n11\n");
    let o = turan(&["bound", "--theorem", "T3", "--n", "5", "--param", "2", "--spec", "1,1"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reductions_emit_graph6() {
    // G(9,6,2) has K_5 as its 4-core
    let g = ok(&["construct", "--family", "g", "--n", "9", "--c", "6", "--k", "2"], "");
    let core = from_graph6(ok(&["core", "--t", "3"], &g).trim()).unwrap();
    assert_eq!(core, Graph::complete(5).unwrap());
    let seeded = from_graph6(ok(&["core", "--t", "3", "--seed", "9"], &g).trim()).unwrap();
    assert_eq!(seeded, core);
    // C_4 closes to K_4 at threshold 4
    let c4 = turan_core::to_graph6(&Graph::cycle(4).unwrap());
    assert_eq!(from_graph6(ok(&["closure", "--threshold", "4"], &c4).trim()).unwrap(), Graph::complete(4).unwrap());
    let c5 = turan_core::to_graph6(&Graph::cycle(5).unwrap());
    assert_eq!(from_graph6(ok(&["saturate", "--by", "circumference"], &c5).trim()).unwrap(), Graph::complete(5).unwrap());
    let sat = from_graph6(ok(&["saturate", "--by", "matching"], "D?{\n").trim()).unwrap();
    assert_eq!(turan_core::invariants::matching_number(&sat), 1);
    let o = turan(&["saturate", "--by", "matching", "--value", "2"], "D?{\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invariants_formats() {
    let text = ok(&["invariants"], "Dhc\n");
    assert!(text.starts_with("order=5 edges=5 min_degree=2"), "{text}");
    assert!(text.contains("circumference=5") && text.contains("hamiltonian=true"));
    let kv = ok(&["invariants", "--format", "kv"], "Dhc\nC~\n");
    assert_eq!(kv.matches("graph6=").count(), 2);
    assert!(kv.lines().any(|l| l == "matching_number=2"));
}

#[test]
fn verify_reports_and_exit_codes() {
    let args = ["verify", "--theorem", "C8", "--n", "6", "--c", "5", "--spec", "2,1", "--spec", "1,1", "--format", "kv"];
    let serial = ok(&args, "");
    assert_eq!(serial.matches("pass=true").count(), 2);
    assert_eq!(serial.matches("tight=true").count(), 2);
    assert!(serial.contains("graphs_scanned=32768"));
    let mut parallel_args = args.to_vec();
    parallel_args.extend(["--jobs", "3"]);
    assert_eq!(ok(&parallel_args, ""), serial);

    // Ore at n = 6 with a bound one too small fails the check
    let o = turan(&["verify", "--bound", "10", "--n", "6", "--nonhamiltonian", "--spec", "1,1", "--format", "kv"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("observed_max=11"));
    assert_eq!(ok(&["verify", "--bound", "11", "--n", "6", "--nonhamiltonian", "--spec", "1,1"], "").lines().next().unwrap().split(' ').next(), Some("PASS"));

    // a filter that does not imply the hypotheses is a usage error
    let o = turan(&["verify", "--theorem", "C8", "--n", "6", "--c", "6", "--spec", "1,1"], "");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).lines().count(), 1);
}

#[test]
fn verify_over_a_graph6_stream() {
    let input = "E~r?\nnot graph6\nE?~w\n";
    let o = turan(&["verify", "--theorem", "C8", "--n", "6", "--c", "5", "--spec", "1,1", "--graph6", "-", "--on-error", "skip", "--format", "kv"], input);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("graphs_scanned=2"));
    assert!(stderr(&o).contains("line 2"));
    let o = turan(&["verify", "--theorem", "C8", "--n", "6", "--c", "5", "--spec", "1,1", "--graph6", "-"], input);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_subcommand() {
    let o = turan(&["check", "--lemma", "L12", "--lemma", "L15", "--property", "core-order", "--max-order", "4", "--rounds", "3", "--seed", "5"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 3);
    // the pendant-pair inequality has counterexamples from t = 2 on
    let o = turan(&["check", "--lemma", "L11", "--max-t", "2", "--format", "kv"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("pass=false"));
}

#[test]
fn usage_errors_are_one_line() {
    for args in [
        &["frobnicate"][..],
        &["count", "--spec", "2,x"],
        &["count", "--spec", "2,1", "--bogus"],
        &["construct", "--family", "g", "--n", "5", "--c", "5", "--k", "1"],
        &["construct", "--family", "g", "--n", "5"],
        &["check"],
        &["verify", "--n", "6", "--spec", "1,1"],
    ] {
        let o = turan(args, "");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}: {}", stderr(&o));
    }
    let o = turan(&["count", "--spec", "1,1"], "C~\n@@@@\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
}
