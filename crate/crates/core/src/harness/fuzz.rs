use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{classify_nnf, ClassifierVariant};
use crate::reduce::{reduce, replay, ReductionTrace};
use crate::semantics::{equivalent_bounded, Bounds, Counterexample};
use crate::syntax::Formula;

use super::gen::{gen_formula, ConfigError, FuzzConfig};

/// Classification of one subformula under every variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub buggy: bool,
    pub corrected: bool,
    pub patched: bool,
}

impl ClassFlags {
    pub fn of(f: &Formula) -> Self {
        ClassFlags {
            buggy: classify_nnf(f, ClassifierVariant::Buggy),
            corrected: classify_nnf(f, ClassifierVariant::Corrected),
            patched: classify_nnf(f, ClassifierVariant::Patched),
        }
    }
}

/// A reduction whose result the oracle tells apart from its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceRecord {
    pub original: Formula,
    pub variant: ClassifierVariant,
    pub reduced: Formula,
    pub trace: ReductionTrace,
    pub counterexample: Counterexample,
    /// Index of the first step whose kept operand is outside the corrected
    /// class, falling back to the first step.
    pub pivot_step: usize,
    /// The operand that step kept.
    pub pivot: Formula,
    pub pivot_flags: ClassFlags,
}

impl DivergenceRecord {
    fn new(trace: ReductionTrace, counterexample: Counterexample) -> Self {
        let pivot_step = trace
            .steps
            .iter()
            .position(|s| !classify_nnf(&s.after, ClassifierVariant::Corrected))
            .unwrap_or(0);
        let pivot = trace
            .steps
            .get(pivot_step)
            .map(|s| s.after.clone())
            .unwrap_or_else(|| trace.result.clone());
        DivergenceRecord {
            original: trace.original.clone(),
            variant: trace.variant,
            reduced: trace.result.clone(),
            pivot_flags: ClassFlags::of(&pivot),
            pivot,
            pivot_step,
            trace,
            counterexample,
        }
    }

    /// Replays the trace and re-evaluates the witness.
    pub fn verify(&self) -> bool {
        replay(&self.trace).as_ref() == Ok(&self.reduced)
            && self.counterexample.confirms_difference(&self.original, &self.reduced)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub formula: String,
    pub variant: ClassifierVariant,
    pub reduced: String,
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerVariant {
    pub buggy: usize,
    pub corrected: usize,
    pub patched: usize,
}

impl PerVariant {
    fn bump(&mut self, v: ClassifierVariant) {
        match v {
            ClassifierVariant::Buggy => self.buggy += 1,
            ClassifierVariant::Corrected => self.corrected += 1,
            ClassifierVariant::Patched => self.patched += 1,
        }
    }
}

/// Corrected-versus-patched comparison of final reduction results.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FinalEffect {
    pub compared: usize,
    pub semantically_equal: usize,
    pub syntactically_equal: usize,
    pub syntactic_rate: f64,
    /// Formulas (as text) whose corrected and patched results differ on some
    /// bounded word.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub semantic_mismatches: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub formulas: usize,
    pub reduced: PerVariant,
    pub divergences: PerVariant,
    pub final_effect: FinalEffect,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "lowercase")]
pub enum RunConfig {
    Fuzz(FuzzConfig),
    Corpus { path: String, bounds: Bounds },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
    #[serde(skip)]
    pub records: Vec<DivergenceRecord>,
}

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_BUGGY_DIVERGENCE: i32 = 3;
pub const EXIT_FIXED_DIVERGENCE: i32 = 4;

impl Report {
    /// 4 if a corrected or patched reduction diverged, 3 if only buggy ones
    /// did, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        let d = &self.summary.divergences;
        if d.corrected + d.patched > 0 || !self.summary.final_effect.semantic_mismatches.is_empty() {
            EXIT_FIXED_DIVERGENCE
        } else if d.buggy > 0 {
            EXIT_BUGGY_DIVERGENCE
        } else {
            EXIT_CLEAN
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable report: divergent cases first, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for rec in &self.records {
            let _ = writeln!(
                out,
                "DIVERGENCE [{}] {}  =>  {}",
                rec.variant, rec.original, rec.reduced
            );
            let _ = writeln!(out, "  witness: {}", rec.counterexample);
            for step in &rec.trace.steps {
                let _ = writeln!(out, "  step: {step}");
            }
            let fl = rec.pivot_flags;
            let _ = writeln!(
                out,
                "  pivot: {} (buggy={}, corrected={}, patched={})",
                rec.pivot, fl.buggy, fl.corrected, fl.patched
            );
        }
        let s = &self.summary;
        let _ = writeln!(out, "formulas: {}", s.formulas);
        let _ = writeln!(
            out,
            "reduced:     buggy={} corrected={} patched={}",
            s.reduced.buggy, s.reduced.corrected, s.reduced.patched
        );
        let _ = writeln!(
            out,
            "divergences: buggy={} corrected={} patched={}",
            s.divergences.buggy, s.divergences.corrected, s.divergences.patched
        );
        let fe = &s.final_effect;
        let _ = writeln!(
            out,
            "corrected vs patched: {}/{} bounded-equivalent, {}/{} identical ({:.4})",
            fe.semantically_equal, fe.compared, fe.syntactically_equal, fe.compared, fe.syntactic_rate
        );
        out
    }
}

/// Reduces each formula under every variant and checks each result against
/// its input with the bounded oracle.
pub fn analyze(formulas: &[Formula], config: RunConfig) -> Report {
    let bounds = match &config {
        RunConfig::Fuzz(c) => c.bounds.clone(),
        RunConfig::Corpus { bounds, .. } => bounds.clone(),
    };
    let mut cases = Vec::with_capacity(formulas.len() * 3);
    let mut records = Vec::new();
    let mut summary = Summary {
        formulas: formulas.len(),
        ..Summary::default()
    };

    for f in formulas {
        let mut results: Vec<(ClassifierVariant, Formula, Option<Counterexample>)> = Vec::new();
        for v in ClassifierVariant::ALL {
            let (reduced, trace) = reduce(f, v);
            if !trace.steps.is_empty() {
                summary.reduced.bump(v);
            }
            let cex = if &reduced == f {
                None
            } else if let Some((_, _, prior)) = results.iter().find(|(_, r, _)| *r == reduced) {
                prior.clone()
            } else {
                equivalent_bounded(f, &reduced, &bounds).counterexample().cloned()
            };
            cases.push(CaseReport {
                formula: f.to_string(),
                variant: v,
                reduced: reduced.to_string(),
                equivalent: cex.is_none(),
                counterexample_word: cex.as_ref().map(|c| c.word.to_string()),
                trace: (!trace.steps.is_empty())
                    .then(|| trace.steps.iter().map(ToString::to_string).collect()),
            });
            if let Some(c) = &cex {
                summary.divergences.bump(v);
                records.push(DivergenceRecord::new(trace, c.clone()));
            }
            results.push((v, reduced, cex));
        }

        let corrected = &results[1].1;
        let patched = &results[2].1;
        let fe = &mut summary.final_effect;
        fe.compared += 1;
        if corrected == patched {
            fe.syntactically_equal += 1;
            fe.semantically_equal += 1;
        } else if equivalent_bounded(corrected, patched, &bounds).is_pass() {
            fe.semantically_equal += 1;
        } else {
            fe.semantic_mismatches.push(f.to_string());
        }
    }
    let fe = &mut summary.final_effect;
    fe.syntactic_rate = if fe.compared == 0 {
        0.0
    } else {
        fe.syntactically_equal as f64 / fe.compared as f64
    };

    Report {
        config,
        cases,
        summary,
        records,
    }
}

/// The formulas a fuzz run checks.
pub fn fuzz_formulas(config: &FuzzConfig) -> Result<Vec<Formula>, ConfigError> {
    config
        .case_seeds()
        .into_iter()
        .map(|s| gen_formula(s, config))
        .collect()
}

/// Full fuzz run with report.
pub fn run_fuzz(config: &FuzzConfig) -> Result<Report, ConfigError> {
    let formulas = fuzz_formulas(config)?;
    Ok(analyze(&formulas, RunConfig::Fuzz(config.clone())))
}

/// Generates `config.count` formulas and returns every reduction the oracle
/// refutes.
pub fn fuzz_differential(config: &FuzzConfig) -> Result<Vec<DivergenceRecord>, ConfigError> {
    Ok(run_fuzz(config)?.records)
}
