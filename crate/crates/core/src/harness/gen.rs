use rand::distributions::{Distribution, WeightedIndex};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semantics::Bounds;
use crate::syntax::{is_valid_atom_name, Formula};

/// Relative frequency of each node kind in generated formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorWeights {
    #[serde(rename = "true")]
    pub tt: u32,
    #[serde(rename = "false")]
    pub ff: u32,
    pub atom: u32,
    pub not: u32,
    pub and: u32,
    pub or: u32,
    pub next: u32,
    pub until: u32,
    pub release: u32,
    pub finally: u32,
    pub globally: u32,
}

impl Default for OperatorWeights {
    /// Temporal operators are twice as likely as propositional ones.
    fn default() -> Self {
        OperatorWeights {
            tt: 1,
            ff: 1,
            atom: 4,
            not: 1,
            and: 1,
            or: 1,
            next: 2,
            until: 2,
            release: 2,
            finally: 2,
            globally: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Next,
    Until,
    Release,
    Finally,
    Globally,
}

impl OperatorWeights {
    fn leaves(&self) -> [(Kind, u32); 3] {
        [
            (Kind::True, self.tt),
            (Kind::False, self.ff),
            (Kind::Atom, self.atom),
        ]
    }

    fn operators(&self) -> [(Kind, u32); 8] {
        [
            (Kind::Not, self.not),
            (Kind::And, self.and),
            (Kind::Or, self.or),
            (Kind::Next, self.next),
            (Kind::Until, self.until),
            (Kind::Release, self.release),
            (Kind::Finally, self.finally),
            (Kind::Globally, self.globally),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub max_depth: usize,
    pub props: Vec<String>,
    pub weights: OperatorWeights,
    pub bounds: Bounds,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            count: 100,
            max_depth: 6,
            props: vec!["a".into(), "b".into(), "c".into()],
            weights: OperatorWeights::default(),
            bounds: Bounds::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("max_depth must be at least 1")]
    ZeroDepth,
    #[error("at least one leaf kind (true, false, atom) needs a positive weight")]
    NoLeafWeight,
    #[error("atoms have positive weight but the proposition pool is empty")]
    NoProps,
    #[error("invalid proposition name `{0}`")]
    BadProp(String),
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.count == 0 {
            return Err(ConfigError::ZeroCount);
        }
        if self.max_depth == 0 {
            return Err(ConfigError::ZeroDepth);
        }
        if let Some(p) = self.props.iter().find(|p| !is_valid_atom_name(p)) {
            return Err(ConfigError::BadProp(p.clone()));
        }
        let w = &self.weights;
        let atom = if self.props.is_empty() { 0 } else { w.atom };
        if w.tt + w.ff + atom == 0 {
            return Err(if w.atom > 0 {
                ConfigError::NoProps
            } else {
                ConfigError::NoLeafWeight
            });
        }
        Ok(())
    }

    /// Per-case seeds, drawn from a generator seeded with `self.seed`.
    pub fn case_seeds(&self) -> Vec<u64> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count).map(|_| rng.next_u64()).collect()
    }
}

struct Generator<'c> {
    config: &'c FuzzConfig,
    rng: ChaCha8Rng,
    leaves: Vec<Kind>,
    leaf_dist: WeightedIndex<u32>,
    all: Vec<Kind>,
    all_dist: WeightedIndex<u32>,
}

impl Generator<'_> {
    fn formula(&mut self, depth_left: usize) -> Formula {
        let kind = if depth_left <= 1 {
            self.leaves[self.leaf_dist.sample(&mut self.rng)]
        } else {
            self.all[self.all_dist.sample(&mut self.rng)]
        };
        let d = depth_left.saturating_sub(1);
        match kind {
            Kind::True => Formula::True,
            Kind::False => Formula::False,
            Kind::Atom => {
                let i = (self.rng.next_u32() as usize) % self.config.props.len();
                Formula::Atom(self.config.props[i].clone())
            }
            Kind::Not => self.formula(d).not(),
            Kind::Next => self.formula(d).next(),
            Kind::Finally => self.formula(d).finally(),
            Kind::Globally => self.formula(d).globally(),
            Kind::And => {
                let l = self.formula(d);
                l.and(self.formula(d))
            }
            Kind::Or => {
                let l = self.formula(d);
                l.or(self.formula(d))
            }
            Kind::Until => {
                let l = self.formula(d);
                l.until(self.formula(d))
            }
            Kind::Release => {
                let l = self.formula(d);
                l.release(self.formula(d))
            }
        }
    }
}

/// Draws one random formula of depth at most `config.max_depth`.
pub fn gen_formula(seed: u64, config: &FuzzConfig) -> Result<Formula, ConfigError> {
    config.validate()?;
    let w = &config.weights;
    let mut leaves: Vec<(Kind, u32)> = w.leaves().into_iter().filter(|&(_, x)| x > 0).collect();
    if config.props.is_empty() {
        leaves.retain(|&(k, _)| k != Kind::Atom);
    }
    let mut all = leaves.clone();
    all.extend(w.operators().into_iter().filter(|&(_, x)| x > 0));
    let dist = |ks: &[(Kind, u32)]| WeightedIndex::new(ks.iter().map(|&(_, x)| x)).expect("positive weight");
    let mut g = Generator {
        config,
        rng: ChaCha8Rng::seed_from_u64(seed),
        leaf_dist: dist(&leaves),
        leaves: leaves.iter().map(|&(k, _)| k).collect(),
        all_dist: dist(&all),
        all: all.iter().map(|&(k, _)| k).collect(),
    };
    Ok(g.formula(config.max_depth))
}
