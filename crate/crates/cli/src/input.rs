//! Turning command-line text into alphabets, antimorphisms and words.

use std::collections::BTreeSet;
use std::io::BufRead;
use std::path::Path;
use std::sync::Arc;

use pseudopal_core::antimorphism::parse_tau_pairs;
use pseudopal_core::{Alphabet, Antimorphism, Word};

use crate::CliError;

pub const MAX_LEN_VAR: &str = "PSEUDOPAL_MAX_LEN";
pub const DEFAULT_MAX_LEN: usize = pseudopal_core::fixed_points::DEFAULT_MAX_LEN;

pub fn max_len() -> Result<usize, CliError> {
    match std::env::var(MAX_LEN_VAR) {
        Err(_) => Ok(DEFAULT_MAX_LEN),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("{MAX_LEN_VAR}={s:?} is not a length"))),
    }
}

pub fn check_length(m: usize) -> Result<usize, CliError> {
    let cap = max_len()?;
    if m > cap {
        return Err(CliError::Invalid(format!(
            "requested length {m} exceeds the cap of {cap} (raise {MAX_LEN_VAR} to allow it)"
        )));
    }
    Ok(m)
}

/// A literal, or `-` for one line of standard input.
pub fn word_text(arg: &str) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut line = String::new();
    std::io::stdin()
        .lock()
        .read_line(&mut line)
        .map_err(|e| CliError::Invalid(format!("reading standard input: {e}")))?;
    Ok(line.trim().to_string())
}

/// A file path, or `-` for standard input; surrounding whitespace is dropped.
pub fn file_text(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        return word_text(arg);
    }
    std::fs::read_to_string(arg)
        .map(|s| s.split_whitespace().collect())
        .map_err(|e| CliError::Invalid(format!("reading {arg}: {e}")))
}

/// Reads `arg` as a file when such a file exists, otherwise takes it literally.
pub fn spec_text(arg: &str) -> Result<String, CliError> {
    if arg == "-" || Path::new(arg).is_file() {
        file_text(arg)
    } else {
        Ok(arg.to_string())
    }
}

/// `R`, `E`, `H` or explicit pairs such as `a:a,b:c,c:b`.
pub fn tau_pairs(tau: Option<&str>) -> Result<Vec<(char, char)>, CliError> {
    Ok(match tau.map(str::trim) {
        None | Some("R") | Some("id") => Vec::new(),
        Some("E") => vec![('a', 'b'), ('b', 'a')],
        Some("H") => vec![('a', 'a'), ('b', 'c'), ('c', 'b')],
        Some(text) => parse_tau_pairs(text)?,
    })
}

/// The given alphabet, or the sorted symbols seen in `tau` and `texts`.
pub fn alphabet(
    given: Option<&str>,
    pairs: &[(char, char)],
    texts: &[&str],
) -> Result<Arc<Alphabet>, CliError> {
    if let Some(given) = given {
        return Ok(Alphabet::parse(given)?);
    }
    let symbols: BTreeSet<char> = pairs
        .iter()
        .flat_map(|&(x, y)| [x, y])
        .chain(texts.iter().flat_map(|t| t.chars()))
        .collect();
    if symbols.is_empty() {
        return Err(CliError::Invalid(
            "cannot infer an alphabet from empty input; pass --alphabet".into(),
        ));
    }
    Ok(Arc::new(Alphabet::from_symbols(
        symbols.into_iter().collect(),
    )?))
}

/// Symbols of a directive spec without its `(...)^w` markup.
pub fn directive_symbols(spec: &str) -> String {
    let spec = spec.trim();
    let body = spec
        .strip_suffix(")^w")
        .or_else(|| spec.strip_suffix(")^ω"))
        .unwrap_or(spec);
    body.chars().filter(|&c| c != '(').collect()
}

pub fn antimorphism(
    alphabet: &Arc<Alphabet>,
    pairs: &[(char, char)],
) -> Result<Antimorphism, CliError> {
    Ok(Antimorphism::from_pairs(alphabet, pairs)?)
}

pub fn word(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word, CliError> {
    Ok(Word::parse(alphabet, text)?)
}
