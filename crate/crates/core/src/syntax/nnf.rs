use super::Formula;

/// Pushes negations down to the atoms.
///
/// Formulas already in negation normal form come back structurally unchanged.
pub fn nnf(f: &Formula) -> Formula {
    positive(f)
}

fn positive(f: &Formula) -> Formula {
    match f {
        Formula::True | Formula::False | Formula::Atom(_) => f.clone(),
        Formula::Not(g) => negative(g),
        Formula::And(l, r) => positive(l).and(positive(r)),
        Formula::Or(l, r) => positive(l).or(positive(r)),
        Formula::Next(g) => positive(g).next(),
        Formula::Until(l, r) => positive(l).until(positive(r)),
        Formula::Release(l, r) => positive(l).release(positive(r)),
        Formula::Finally(g) => positive(g).finally(),
        Formula::Globally(g) => positive(g).globally(),
    }
}

/// NNF of `!f`.
fn negative(f: &Formula) -> Formula {
    match f {
        Formula::True => Formula::False,
        Formula::False => Formula::True,
        Formula::Atom(_) => f.clone().not(),
        Formula::Not(g) => positive(g),
        Formula::And(l, r) => negative(l).or(negative(r)),
        Formula::Or(l, r) => negative(l).and(negative(r)),
        Formula::Next(g) => negative(g).next(),
        Formula::Until(l, r) => negative(l).release(negative(r)),
        Formula::Release(l, r) => negative(l).until(negative(r)),
        Formula::Finally(g) => negative(g).globally(),
        Formula::Globally(g) => negative(g).finally(),
    }
}
