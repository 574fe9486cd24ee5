//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line
//! (plus indented sub-check lines) and asserts on the outcome.
//!
//! The shared random suite is 1000 formulas from seed 42, depth at most 6,
//! propositions `a b c`, default oracle bounds (prefix <= 3, period <= 3).

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ltl_reduce::harness::{analyze, fuzz_formulas, gen_formula, FuzzConfig, Report, RunConfig};
use ltl_reduce::semantics::{
    equivalent_bounded, eval, eval_reference, implies_bounded, left_append_closed_bounded,
    Alphabet, Bounds, LassoWord, Letter,
};
use ltl_reduce::{is_pure_eventuality, nnf, parse, reduce, ClassifierVariant, Formula};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ClassifierVariant::{Buggy, Corrected, Patched};

const SUITE_SEED: u64 = 42;
const SUITE_SIZE: usize = 1000;
const MAX_APPEND: usize = 2;

fn p(s: &str) -> Formula {
    parse(s).unwrap()
}

fn w(s: &str) -> LassoWord {
    s.parse().unwrap()
}

fn pe(f: &Formula, v: ClassifierVariant) -> bool {
    is_pure_eventuality(f, v).unwrap()
}

fn suite_config() -> FuzzConfig {
    FuzzConfig {
        seed: SUITE_SEED,
        count: SUITE_SIZE,
        max_depth: 6,
        props: vec!["a".into(), "b".into(), "c".into()],
        bounds: Bounds {
            max_prefix: 3,
            max_period: 3,
            ..Bounds::default()
        },
        ..FuzzConfig::default()
    }
}

fn suite() -> &'static [Formula] {
    static SUITE: OnceLock<Vec<Formula>> = OnceLock::new();
    SUITE.get_or_init(|| {
        let formulas = fuzz_formulas(&suite_config()).unwrap();
        assert!(formulas.iter().all(|f| f.depth() <= 6 && f.props().len() <= 3));
        formulas
    })
}

/// The differential run over the suite, with its wall-clock time.
fn suite_report() -> &'static (Report, Duration) {
    static REPORT: OnceLock<(Report, Duration)> = OnceLock::new();
    REPORT.get_or_init(|| {
        let start = Instant::now();
        let r = analyze(suite(), RunConfig::Fuzz(suite_config()));
        (r, start.elapsed())
    })
}

/// Prints a sub-check line and returns its outcome.
fn check(name: &str, ok: bool) -> bool {
    println!("    [{}] {name}", if ok { "ok" } else { "FAILED" });
    ok
}

fn verdict(n: u32, title: &str, ok: bool) {
    println!("criterion {n}: {} - {title}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {title}");
}

#[test]
fn criterion_1_closure_counterexample() {
    let start = Instant::now();
    let f = p("(F b) U c");
    let mut ok = check("(F b) U c is buggy-pure", pe(&f, Buggy));
    ok &= check("c^w satisfies (F b) U c", eval(&f, &w("| c"), 0));
    ok &= check("a.c^w violates (F b) U c", !eval(&f, &w("a | c"), 0));

    let bounds = Bounds::default()
        .with_props(&["a", "b", "c"])
        .with_alphabet(Alphabet::Singletons);
    let v = left_append_closed_bounded(&f, &bounds, MAX_APPEND);
    let cex = v.counterexample();
    ok &= check(
        "closure check over letters a,b,c: witness c^w with {a} prepended",
        cex.is_some_and(|c| {
            c.word == w("| c")
                && c.appended == Some(vec![Letter::from(["a".to_string()])])
                && c.confirms_append_violation(&f)
        }),
    );
    let default = left_append_closed_bounded(&f, &Bounds::default(), MAX_APPEND);
    ok &= check(
        "closure check at default bounds also finds a valid violation",
        default.counterexample().is_some_and(|c| c.confirms_append_violation(&f)),
    );
    let elapsed = start.elapsed();
    ok &= check(&format!("runtime {elapsed:?} < 1s"), elapsed < Duration::from_secs(1));
    verdict(1, "paper counterexample reproduction", ok);
}

#[test]
fn criterion_2_reduction_bug() {
    let target = p("(F b) U c");
    let ac = w("a | c");
    let mut ok = true;
    for text in ["a U ((F b) U c)", "F ((F b) U c)"] {
        let start = Instant::now();
        let f = p(text);
        let (r, _) = reduce(&f, Buggy);
        ok &= check(&format!("buggy reduce({text}) = (F b) U c"), r == target);
        let v = equivalent_bounded(&f, &r, &Bounds::default());
        ok &= check(
            &format!("{text} vs reduct: bounded counterexample that re-verifies"),
            v.counterexample().is_some_and(|c| c.confirms_difference(&f, &r)),
        );
        ok &= check(
            &format!("a.c^w separates {text} from its reduct"),
            eval(&f, &ac, 0) && !eval(&r, &ac, 0),
        );
        let elapsed = start.elapsed();
        ok &= check(&format!("runtime {elapsed:?} < 1s"), elapsed < Duration::from_secs(1));
    }
    verdict(2, "reduction bug reproduction", ok);
}

#[test]
fn criterion_3_fixes_are_sound() {
    let mut ok = true;
    for text in ["a U ((F b) U c)", "F ((F b) U c)"] {
        let f = p(text);
        for v in [Corrected, Patched] {
            let (r, trace) = reduce(&f, v);
            ok &= check(
                &format!("{v} leaves {text} unreduced"),
                r == f && trace.steps.is_empty(),
            );
        }
    }
    let (report, elapsed) = suite_report();
    let d = &report.summary.divergences;
    ok &= check(
        &format!(
            "{SUITE_SIZE}-formula suite: corrected={} patched={} counterexamples (buggy={})",
            d.corrected, d.patched, d.buggy
        ),
        d.corrected == 0 && d.patched == 0,
    );
    ok &= check(
        &format!("suite runtime {elapsed:?} < 5min"),
        *elapsed < Duration::from_secs(300),
    );
    verdict(3, "fix verification", ok);
}

#[test]
fn criterion_4_inclusion_chain() {
    let mut corrected_not_patched = Vec::new();
    let mut patched_not_buggy = Vec::new();
    let mut corrected_not_buggy = Vec::new();
    for f in suite() {
        let n = nnf(f);
        let (b, c, pa) = (pe(&n, Buggy), pe(&n, Corrected), pe(&n, Patched));
        if c && !pa {
            corrected_not_patched.push(n.clone());
        }
        if pa && !b {
            patched_not_buggy.push(n.clone());
        }
        if c && !b {
            corrected_not_buggy.push(n);
        }
    }
    let mut ok = check(
        &format!("corrected => patched: {} violations", corrected_not_patched.len()),
        corrected_not_patched.is_empty(),
    );
    ok &= check(
        &format!("corrected => buggy: {} violations", corrected_not_buggy.len()),
        corrected_not_buggy.is_empty(),
    );
    ok &= check(
        &format!(
            "patched => buggy: {} violations{}",
            patched_not_buggy.len(),
            patched_not_buggy
                .first()
                .map(|f| format!(", e.g. {f}"))
                .unwrap_or_default()
        ),
        patched_not_buggy.is_empty(),
    );

    let fb_u_c = p("(F b) U c");
    ok &= check(
        "(F b) U c is buggy-only",
        pe(&fb_u_c, Buggy) && !pe(&fb_u_c, Corrected) && !pe(&fb_u_c, Patched),
    );
    let a_u_fb = p("a U F b");
    ok &= check(
        "a U F b is patched but not corrected",
        pe(&a_u_fb, Patched) && !pe(&a_u_fb, Corrected),
    );
    ok &= check(
        "a U F b is consistent with patched => buggy",
        !pe(&a_u_fb, Patched) || pe(&a_u_fb, Buggy),
    );
    verdict(4, "inclusion chain corrected <= patched <= buggy", ok);
}

#[test]
fn criterion_5_fixed_classes_left_append_closed() {
    let mut checked = 0;
    let mut violations = Vec::new();
    for f in suite() {
        let n = nnf(f);
        if pe(&n, Corrected) || pe(&n, Patched) {
            checked += 1;
            let v = left_append_closed_bounded(&n, &Bounds::default(), MAX_APPEND);
            if !v.is_pass() {
                violations.push(format!("{n}: {v}"));
            }
        }
    }
    let ok = check(
        &format!(
            "{checked} corrected/patched-pure suite formulas, {} closure violations",
            violations.len()
        ),
        checked > 0 && violations.is_empty(),
    );
    for v in violations.iter().take(5) {
        println!("      {v}");
    }
    verdict(5, "left-append closure of the fixed classes", ok);
}

#[test]
fn criterion_6_universal_implications() {
    let config = FuzzConfig {
        max_depth: 4,
        ..suite_config()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut violations = Vec::new();
    for _ in 0..1000 {
        let phi = gen_formula(rng.gen(), &config).unwrap();
        let psi = gen_formula(rng.gen(), &config).unwrap();
        let bounds = Bounds::default();
        for (name, g) in [
            ("F psi", psi.clone().finally()),
            ("phi U psi", phi.clone().until(psi.clone())),
        ] {
            if let Some(c) = implies_bounded(&psi, &g, &bounds).counterexample() {
                violations.push(format!("psi={psi}, phi={phi}: psi does not imply {name} on {}", c.word));
            }
        }
    }
    let ok = check(
        &format!("1000 (phi, psi) pairs: {} violations", violations.len()),
        violations.is_empty(),
    );
    for v in violations.iter().take(5) {
        println!("      {v}");
    }
    verdict(6, "psi => F psi and psi => phi U psi", ok);
}

#[test]
fn criterion_7_final_effect_agreement() {
    let (report, _) = suite_report();
    let fe = &report.summary.final_effect;
    let mut ok = check(
        &format!(
            "corrected vs patched bounded-equivalent in {}/{} cases",
            fe.semantically_equal, fe.compared
        ),
        fe.compared == SUITE_SIZE && fe.semantically_equal == fe.compared,
    );
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    let rate = &json["summary"]["final_effect"]["syntactic_rate"];
    ok &= check(
        &format!("syntactic agreement rate reported in JSON summary: {rate}"),
        rate.is_number(),
    );
    verdict(7, "final-effect agreement", ok);
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            ["a", "b", "c"]
                .into_iter()
                .filter(|_| rng.gen_bool(0.5))
                .map(str::to_string)
                .collect()
        })
        .collect()
}

#[test]
fn criterion_8_oracle_self_consistency() {
    const TRIPLES: usize = 10_000;
    let config = suite_config();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut disagree, mut duality, mut periodic, mut shift) = (0, 0, 0, 0);
    for _ in 0..TRIPLES {
        let f = gen_formula(rng.gen(), &config).unwrap();
        let prefix = random_word(&mut rng, 3);
        let mut period = random_word(&mut rng, 3);
        if period.is_empty() {
            period.push(Letter::new());
        }
        let word = LassoWord::new(prefix, period).unwrap();
        let i = rng.gen_range(0..2 * word.span() + 1);
        if eval(&f, &word, i) != eval_reference(&f, &word, i) {
            disagree += 1;
        }
        if eval(&nnf(&f.clone().not()), &word, 0) == eval(&f, &word, 0) {
            duality += 1;
        }
        let (pl, pp) = (word.prefix().len(), word.period().len());
        let k = rng.gen_range(0..3 * pp);
        if eval(&f, &word, pl + k) != eval(&f, &word, pl + k % pp) {
            periodic += 1;
        }
        let v = random_word(&mut rng, 3);
        if eval(&f, &word.prepend(&v), v.len()) != eval(&f, &word, 0) {
            shift += 1;
        }
    }
    let mut ok = check(
        &format!("eval vs eval_reference on {TRIPLES} triples: {disagree} disagreements"),
        disagree == 0,
    );
    ok &= check(&format!("duality: {duality} violations"), duality == 0);
    ok &= check(&format!("periodicity: {periodic} violations"), periodic == 0);
    ok &= check(&format!("prepend shift: {shift} violations"), shift == 0);
    verdict(8, "oracle self-consistency", ok);
}

#[test]
fn criterion_9_determinism() {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_ltl-reduce"))
            .args(["fuzz", "--seed", "42", "--count", "1000", "--json"])
            .output()
            .expect("binary runs");
        assert!(matches!(out.status.code(), Some(0) | Some(3)), "{:?}", out.status);
        out.stdout
    };
    let (first, second) = (run(), run());
    let ok = check(
        &format!("two runs, {} bytes each, byte-identical", first.len()),
        !first.is_empty() && first == second,
    );
    verdict(9, "fuzz report determinism", ok);
}
