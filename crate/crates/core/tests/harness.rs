use std::io::Write;

use ltl_reduce::harness::{
    analyze, fuzz_differential, fuzz_formulas, run_corpus, CorpusError, FuzzConfig, RunConfig,
    EXIT_BUGGY_DIVERGENCE, EXIT_CLEAN,
};
use ltl_reduce::semantics::{eval, Bounds, LassoWord};
use ltl_reduce::{parse, ClassifierVariant, Formula};

const PAPER_CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/paper.ltl");

fn has_until_finally_nesting(f: &Formula) -> bool {
    fn contains(f: &Formula, pred: fn(&Formula) -> bool) -> bool {
        pred(f) || f.children().into_iter().any(|c| contains(c, pred))
    }
    let is_until = |f: &Formula| matches!(f, Formula::Until(..));
    let is_finally = |f: &Formula| matches!(f, Formula::Finally(..));
    f.subformulas().into_iter().any(|(_, g)| match g {
        Formula::Until(l, r) => contains(l, is_finally) || contains(r, is_finally),
        Formula::Finally(x) => contains(x, is_until),
        _ => false,
    })
}

#[test]
fn default_generator_nests_until_and_finally() {
    // Measured once for seed 42 and pinned.
    let config = FuzzConfig {
        seed: 42,
        count: 1000,
        ..FuzzConfig::default()
    };
    let formulas = fuzz_formulas(&config).unwrap();
    let nested = formulas.iter().filter(|f| has_until_finally_nesting(f)).count();
    assert_eq!(nested, 174);
}

#[test]
fn shipped_corpus_reproduces_two_buggy_divergences() {
    let report = run_corpus(PAPER_CORPUS, &Bounds::default()).unwrap();
    let d = &report.summary.divergences;
    assert_eq!((d.buggy, d.corrected, d.patched), (2, 0, 0));
    assert_eq!(report.exit_code(), EXIT_BUGGY_DIVERGENCE);

    let ac: LassoWord = "a | c".parse().unwrap();
    for rec in &report.records {
        assert_eq!(rec.variant, ClassifierVariant::Buggy);
        assert!(rec.verify());
        assert_eq!(rec.reduced, parse("(F b) U c").unwrap());
        if rec.original == parse("a U ((F b) U c)").unwrap() {
            assert!(eval(&rec.original, &ac, 0) && !eval(&rec.reduced, &ac, 0));
        }
    }
}

#[test]
fn corpus_errors() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.ltl");
    std::fs::File::create(&empty).unwrap();
    let report = run_corpus(&empty, &Bounds::default()).unwrap();
    assert!(report.cases.is_empty());
    assert_eq!(report.exit_code(), EXIT_CLEAN);

    let broken = dir.path().join("broken.ltl");
    let mut file = std::fs::File::create(&broken).unwrap();
    writeln!(file, "a U b\n# fine\nF (a &").unwrap();
    match run_corpus(&broken, &Bounds::default()) {
        Err(CorpusError::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn fuzz_records_are_self_verifying() {
    let config = FuzzConfig {
        seed: 42,
        count: 300,
        ..FuzzConfig::default()
    };
    let records = fuzz_differential(&config).unwrap();
    assert!(records.iter().all(|r| r.variant == ClassifierVariant::Buggy));
    assert!(records.iter().all(|r| r.verify()));
    assert!(records.iter().all(|r| r.pivot_flags.buggy && !r.pivot_flags.corrected));
}

#[test]
fn json_report_schema() {
    let formulas = vec![parse("a U ((F b) U c)").unwrap(), parse("a").unwrap()];
    let report = analyze(
        &formulas,
        RunConfig::Corpus {
            path: "inline".into(),
            bounds: Bounds::default(),
        },
    );
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(json["config"]["source"], "corpus");
    let cases = json["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 6);
    let buggy = &cases[0];
    assert_eq!(buggy["formula"], "a U ((F b) U c)");
    assert_eq!(buggy["variant"], "buggy");
    assert_eq!(buggy["reduced"], "(F b) U c");
    assert_eq!(buggy["equivalent"], false);
    assert!(buggy["counterexample_word"].is_string());
    assert_eq!(buggy["trace"][0], "UntilRule [] a U ((F b) U c) => (F b) U c");
    assert!(cases[1].get("counterexample_word").is_none());
    assert!(cases[1].get("trace").is_none());
    assert_eq!(json["summary"]["divergences"]["buggy"], 1);
    assert!(json["summary"]["final_effect"]["syntactic_rate"].is_number());
}
