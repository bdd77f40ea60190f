use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::words::Word;

/// Number of distinct factors of length `n`.
pub fn factor_complexity(w: &Word, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroFactorLength);
    }
    if n > w.len() {
        return Err(Error::FactorLengthTooLong { n, len: w.len() });
    }
    Ok(w.letters().windows(n).collect::<HashSet<_>>().len())
}

/// A prefix of length `len` is taken to show all factors of length `n` only when `n ≤ len/2`.
pub fn complexity_is_trusted(len: usize, n: usize) -> bool {
    n <= len / 2
}
