use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::semantics::Bounds;
use crate::syntax::{parse, Formula, ParseError};

use super::fuzz::{analyze, Report, RunConfig};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
}

/// Parses corpus text: one formula per line, `#` starts a comment, blank
/// lines are skipped. Line numbers are 1-based.
pub fn parse_corpus(text: &str) -> Result<Vec<Formula>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f = parse(line).map_err(|source| CorpusError::Parse { line: i + 1, source })?;
        out.push(f);
    }
    Ok(out)
}

/// Runs the differential check over every formula in a corpus file.
pub fn run_corpus(path: impl AsRef<Path>, bounds: &Bounds) -> Result<Report, CorpusError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let formulas = parse_corpus(&text)?;
    Ok(analyze(
        &formulas,
        RunConfig::Corpus {
            path: path.display().to_string(),
            bounds: bounds.clone(),
        },
    ))
}
