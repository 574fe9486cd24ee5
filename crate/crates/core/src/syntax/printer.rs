//! Canonical printing.
//!
//! Parentheses are omitted wherever precedence makes them redundant, with one
//! exception: non-literal operands of `U` and `R` are always bracketed, so the
//! output reads `(F b) U c` rather than `F b U c`.

use std::fmt::{self, Write};

use super::Formula;

pub(super) fn write_formula(out: &mut impl Write, f: &Formula) -> fmt::Result {
    match f {
        Formula::True => out.write_str("true"),
        Formula::False => out.write_str("false"),
        Formula::Atom(p) => out.write_str(p),
        Formula::Not(g) => {
            out.write_char('!')?;
            write_unary_operand(out, g)
        }
        Formula::Next(g) => write_prefix(out, "X", g),
        Formula::Finally(g) => write_prefix(out, "F", g),
        Formula::Globally(g) => write_prefix(out, "G", g),
        Formula::Until(l, r) => write_temporal(out, l, " U ", r),
        Formula::Release(l, r) => write_temporal(out, l, " R ", r),
        Formula::And(l, r) => {
            write_wrapped(out, l, matches!(**l, Formula::Or(..)))?;
            out.write_str(" & ")?;
            write_wrapped(out, r, matches!(**r, Formula::Or(..) | Formula::And(..)))
        }
        Formula::Or(l, r) => {
            write_formula(out, l)?;
            out.write_str(" | ")?;
            write_wrapped(out, r, matches!(**r, Formula::Or(..)))
        }
    }
}

fn is_prefix(f: &Formula) -> bool {
    matches!(
        f,
        Formula::Not(_) | Formula::Next(_) | Formula::Finally(_) | Formula::Globally(_)
    )
}

fn write_prefix(out: &mut impl Write, op: &str, operand: &Formula) -> fmt::Result {
    out.write_str(op)?;
    out.write_char(' ')?;
    write_unary_operand(out, operand)
}

fn write_unary_operand(out: &mut impl Write, operand: &Formula) -> fmt::Result {
    write_wrapped(out, operand, !(operand.is_literal() || is_prefix(operand)))
}

fn write_temporal(out: &mut impl Write, l: &Formula, op: &str, r: &Formula) -> fmt::Result {
    write_wrapped(out, l, !l.is_literal())?;
    out.write_str(op)?;
    write_wrapped(out, r, !r.is_literal())
}

fn write_wrapped(out: &mut impl Write, f: &Formula, parens: bool) -> fmt::Result {
    if parens {
        out.write_char('(')?;
        write_formula(out, f)?;
        out.write_char(')')
    } else {
        write_formula(out, f)
    }
}
