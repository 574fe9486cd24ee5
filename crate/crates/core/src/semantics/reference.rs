//! Top-down evaluator used to cross-check [`super::eval`].
//!
//! Memoizes on `(subformula, normalized position)`. A cycle back to an
//! in-progress `U`/`F` entry counts as false and one back to `R`/`G` as true,
//! which yields the least and greatest fixpoints respectively.

use std::collections::HashMap;

use crate::syntax::Formula;

use super::word::LassoWord;

#[derive(Clone, Copy)]
enum Memo {
    InProgress,
    Done(bool),
}

struct Reference<'w> {
    word: &'w LassoWord,
    memo: HashMap<(*const Formula, usize), Memo>,
}

impl Reference<'_> {
    fn succ(&self, i: usize) -> usize {
        self.word.normalize(i + 1)
    }

    fn sat(&mut self, f: &Formula, i: usize) -> bool {
        let key = (f as *const Formula, i);
        match self.memo.get(&key) {
            Some(Memo::Done(v)) => return *v,
            Some(Memo::InProgress) => {
                return matches!(f, Formula::Release(..) | Formula::Globally(_));
            }
            None => {}
        }
        self.memo.insert(key, Memo::InProgress);
        let v = match f {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(p) => self.word.letter_at(i).contains(p),
            Formula::Not(g) => !self.sat(g, i),
            Formula::And(l, r) => self.sat(l, i) && self.sat(r, i),
            Formula::Or(l, r) => self.sat(l, i) || self.sat(r, i),
            Formula::Next(g) => {
                let j = self.succ(i);
                self.sat(g, j)
            }
            Formula::Until(l, r) => {
                self.sat(r, i) || (self.sat(l, i) && {
                    let j = self.succ(i);
                    self.sat(f, j)
                })
            }
            Formula::Release(l, r) => {
                self.sat(r, i) && (self.sat(l, i) || {
                    let j = self.succ(i);
                    self.sat(f, j)
                })
            }
            Formula::Finally(g) => {
                self.sat(g, i) || {
                    let j = self.succ(i);
                    self.sat(f, j)
                }
            }
            Formula::Globally(g) => {
                self.sat(g, i) && {
                    let j = self.succ(i);
                    self.sat(f, j)
                }
            }
        };
        self.memo.insert(key, Memo::Done(v));
        v
    }
}

/// Whether `f` holds at position `i` of `w`, computed by memoized recursion.
pub fn eval_reference(f: &Formula, w: &LassoWord, i: usize) -> bool {
    let mut r = Reference {
        word: w,
        memo: HashMap::new(),
    };
    let i = w.normalize(i);
    r.sat(f, i)
}
