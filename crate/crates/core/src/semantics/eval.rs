//! Table-based evaluation over lasso words.
//!
//! A formula is flattened into a post-order node list. Satisfaction is
//! computed node by node over the loop positions (least fixpoints for `U`/`F`,
//! greatest for `R`/`G`, each settled by two backward sweeps around the
//! loop), and then column by column backwards through the prefix.

use crate::syntax::Formula;

use super::word::LassoWord;

#[derive(Debug, Clone, Copy)]
enum Node {
    True,
    False,
    /// Index into the program's proposition list; `None` never holds.
    Atom(Option<usize>),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Next(usize),
    Until(usize, usize),
    Release(usize, usize),
    Finally(usize),
    Globally(usize),
}

/// One or more formulas compiled against a fixed proposition list.
#[derive(Debug, Clone)]
pub(crate) struct Program {
    nodes: Vec<Node>,
    roots: Vec<usize>,
}

impl Program {
    pub fn new(formulas: &[&Formula], props: &[String]) -> Self {
        let mut p = Program {
            nodes: Vec::new(),
            roots: Vec::new(),
        };
        for f in formulas {
            let r = p.push(f, props);
            p.roots.push(r);
        }
        p
    }

    fn push(&mut self, f: &Formula, props: &[String]) -> usize {
        let node = match f {
            Formula::True => Node::True,
            Formula::False => Node::False,
            Formula::Atom(name) => Node::Atom(props.iter().position(|q| q == name)),
            Formula::Not(g) => Node::Not(self.push(g, props)),
            Formula::Next(g) => Node::Next(self.push(g, props)),
            Formula::Finally(g) => Node::Finally(self.push(g, props)),
            Formula::Globally(g) => Node::Globally(self.push(g, props)),
            Formula::And(l, r) => Node::And(self.push(l, props), self.push(r, props)),
            Formula::Or(l, r) => Node::Or(self.push(l, props), self.push(r, props)),
            Formula::Until(l, r) => Node::Until(self.push(l, props), self.push(r, props)),
            Formula::Release(l, r) => Node::Release(self.push(l, props), self.push(r, props)),
        };
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self, k: usize) -> usize {
        self.roots[k]
    }

    /// Satisfaction table over the loop alone, stored column-major:
    /// `table[pos * width + node]`.
    pub fn loop_table(&self, period_len: usize, holds: impl Fn(usize, usize) -> bool) -> Vec<bool> {
        let w = self.width();
        let n = period_len;
        let mut t = vec![false; n * w];
        let succ = |pos: usize| if pos + 1 == n { 0 } else { pos + 1 };
        for (k, node) in self.nodes.iter().enumerate() {
            match *node {
                Node::True => (0..n).for_each(|i| t[i * w + k] = true),
                Node::False => {}
                Node::Atom(None) => {}
                Node::Atom(Some(p)) => (0..n).for_each(|i| t[i * w + k] = holds(i, p)),
                Node::Not(c) => (0..n).for_each(|i| t[i * w + k] = !t[i * w + c]),
                Node::And(l, r) => (0..n).for_each(|i| t[i * w + k] = t[i * w + l] && t[i * w + r]),
                Node::Or(l, r) => (0..n).for_each(|i| t[i * w + k] = t[i * w + l] || t[i * w + r]),
                Node::Next(c) => (0..n).for_each(|i| t[i * w + k] = t[succ(i) * w + c]),
                Node::Until(l, r) => sweep(&mut t, w, n, k, false, |t, i, next| {
                    t[i * w + r] || (t[i * w + l] && next)
                }),
                Node::Finally(c) => sweep(&mut t, w, n, k, false, |t, i, next| t[i * w + c] || next),
                Node::Release(l, r) => sweep(&mut t, w, n, k, true, |t, i, next| {
                    t[i * w + r] && (t[i * w + l] || next)
                }),
                Node::Globally(c) => sweep(&mut t, w, n, k, true, |t, i, next| t[i * w + c] && next),
            }
        }
        t
    }

    /// Fills `out` with the column at a position labelled by a letter whose
    /// successor column is `next`.
    pub fn step(&self, holds: impl Fn(usize) -> bool, next: &[bool], out: &mut [bool]) {
        for (k, node) in self.nodes.iter().enumerate() {
            out[k] = match *node {
                Node::True => true,
                Node::False | Node::Atom(None) => false,
                Node::Atom(Some(p)) => holds(p),
                Node::Not(c) => !out[c],
                Node::And(l, r) => out[l] && out[r],
                Node::Or(l, r) => out[l] || out[r],
                Node::Next(c) => next[c],
                Node::Until(l, r) => out[r] || (out[l] && next[k]),
                Node::Finally(c) => out[c] || next[k],
                Node::Release(l, r) => out[r] && (out[l] || next[k]),
                Node::Globally(c) => out[c] && next[k],
            };
        }
    }
}

/// Solves a one-step recurrence around the loop. The first sweep assumes
/// `seed` beyond the last loop position; that pins down position 0 exactly,
/// and the second sweep propagates it.
fn sweep(
    t: &mut [bool],
    w: usize,
    n: usize,
    k: usize,
    seed: bool,
    f: impl Fn(&[bool], usize, bool) -> bool,
) {
    let mut carry = seed;
    for i in (0..n).rev() {
        carry = f(t, i, carry);
        t[i * w + k] = carry;
    }
    carry = t[k];
    for i in (0..n).rev() {
        carry = f(t, i, carry);
        t[i * w + k] = carry;
    }
}

/// Whether `f` holds at position `i` of `w`.
pub fn eval(f: &Formula, w: &LassoWord, i: usize) -> bool {
    let props: Vec<String> = f.props().into_iter().collect();
    let program = Program::new(&[f], &props);
    let width = program.width();
    let root = program.root(0);

    let period = w.period();
    let table = program.loop_table(period.len(), |pos, p| period[pos].contains(&props[p]));
    let pl = w.prefix().len();
    if i >= pl {
        let j = (i - pl) % period.len();
        return table[j * width + root];
    }
    let mut next = table[..width].to_vec();
    let mut col = vec![false; width];
    for pos in (i..pl).rev() {
        let letter = &w.prefix()[pos];
        program.step(|p| letter.contains(&props[p]), &next, &mut col);
        std::mem::swap(&mut next, &mut col);
    }
    next[root]
}
