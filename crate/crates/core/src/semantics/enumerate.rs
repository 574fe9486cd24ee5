use serde::{Deserialize, Serialize};

use super::word::{LassoWord, Letter};

/// Which letters the bounded search draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    /// Every subset of the proposition set, including the empty letter.
    #[default]
    Powerset,
    /// Exactly one proposition per letter, treating propositions as
    /// mutually exclusive symbols.
    Singletons,
}

impl Alphabet {
    /// Letters as bitmasks over `props`, in enumeration order. Powerset
    /// letters are ordered by mask value with `props[0]` as bit 0.
    pub(crate) fn masks(self, props: usize) -> Vec<u32> {
        assert!(props <= 16, "bounded search supports at most 16 propositions");
        match self {
            Alphabet::Powerset => (0..1u32 << props).collect(),
            Alphabet::Singletons => (0..props).map(|i| 1u32 << i).collect(),
        }
    }
}

pub(crate) fn mask_to_letter(mask: u32, props: &[String]) -> Letter {
    props
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p.clone())
        .collect()
}

/// Iterator over all lasso words within the given bounds.
///
/// Order: prefix length ascending, then period length ascending, then the
/// letter sequence `prefix ++ period` lexicographically (first position most
/// significant) in alphabet order.
#[derive(Debug, Clone)]
pub struct LassoIter {
    props: Vec<String>,
    letters: Vec<u32>,
    max_prefix: usize,
    max_period: usize,
    prefix_len: usize,
    period_len: usize,
    digits: Vec<usize>,
    done: bool,
}

impl LassoIter {
    pub(crate) fn new(props: Vec<String>, alphabet: Alphabet, max_prefix: usize, max_period: usize) -> Self {
        assert!(max_period >= 1, "max_period must be at least 1");
        let letters = alphabet.masks(props.len());
        let done = letters.is_empty();
        LassoIter {
            props,
            letters,
            max_prefix,
            max_period,
            prefix_len: 0,
            period_len: 1,
            digits: vec![0; 1],
            done,
        }
    }

    fn advance(&mut self) {
        let base = self.letters.len();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                return;
            }
            *d = 0;
        }
        // Odometer wrapped: move on to the next shape.
        if self.period_len < self.max_period {
            self.period_len += 1;
        } else if self.prefix_len < self.max_prefix {
            self.prefix_len += 1;
            self.period_len = 1;
        } else {
            self.done = true;
        }
        self.digits = vec![0; self.prefix_len + self.period_len];
    }
}

impl Iterator for LassoIter {
    type Item = LassoWord;

    fn next(&mut self) -> Option<LassoWord> {
        if self.done {
            return None;
        }
        let letters: Vec<Letter> = self
            .digits
            .iter()
            .map(|&d| mask_to_letter(self.letters[d], &self.props))
            .collect();
        let (prefix, period) = letters.split_at(self.prefix_len);
        let word = LassoWord::new(prefix.to_vec(), period.to_vec()).expect("nonempty period");
        self.advance();
        Some(word)
    }
}

/// Every lasso word with `|prefix| <= max_prefix` and
/// `1 <= |period| <= max_period` over the powerset of `props`.
pub fn enumerate_lassos<S: AsRef<str>>(props: &[S], max_prefix: usize, max_period: usize) -> LassoIter {
    let mut props: Vec<String> = props.iter().map(|p| p.as_ref().to_string()).collect();
    props.sort();
    props.dedup();
    LassoIter::new(props, Alphabet::Powerset, max_prefix, max_period)
}

/// Number of words [`enumerate_lassos`] yields for an alphabet of
/// `letters` symbols.
pub fn lasso_count(letters: u64, max_prefix: usize, max_period: usize) -> u64 {
    let mut total = 0u64;
    for m in 0..=max_prefix {
        for p in 1..=max_period {
            total += letters.pow((m + p) as u32);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::word::letter;

    #[test]
    fn single_prop_pure_loops() {
        let words: Vec<_> = enumerate_lassos(&["a"], 0, 1).collect();
        assert_eq!(words.len(), 2);
        assert_eq!(words[0].to_string(), "| {}");
        assert_eq!(words[1].to_string(), "| a");
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_lassos(&["a", "b"], 1, 1).count(), 20);
        assert_eq!(enumerate_lassos::<&str>(&[], 0, 1).count(), 1);
        assert_eq!(enumerate_lassos(&["a", "b"], 2, 3).count() as u64, lasso_count(4, 2, 3));
        assert_eq!(lasso_count(4, 1, 1), 20);
    }

    #[test]
    fn order_is_prefix_then_period_then_lexicographic() {
        let words: Vec<String> = enumerate_lassos(&["a"], 1, 2).map(|w| w.to_string()).collect();
        assert_eq!(
            words,
            [
                "| {}",
                "| a",
                "| {}; {}",
                "| {}; a",
                "| a; {}",
                "| a; a",
                "{} | {}",
                "{} | a",
                "a | {}",
                "a | a",
                "{} | {}; {}",
                "{} | {}; a",
                "{} | a; {}",
                "{} | a; a",
                "a | {}; {}",
                "a | {}; a",
                "a | a; {}",
                "a | a; a",
            ]
        );
    }

    #[test]
    fn singleton_alphabet() {
        let props = vec!["a".to_string(), "b".to_string()];
        let words: Vec<_> = LassoIter::new(props, Alphabet::Singletons, 0, 1).collect();
        assert_eq!(words.len(), 2);
        assert_eq!(words[0].period(), &[letter(["a"])]);
        assert_eq!(LassoIter::new(vec![], Alphabet::Singletons, 2, 2).count(), 0);
    }
}
