use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Largest integer power found, with an occurrence of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerReport {
    pub max_power: u32,
    /// The repeated block `u`.
    pub root: Word,
    /// 0-based start of the occurrence of `u^max_power`.
    pub position: usize,
    pub searched_length: usize,
}

impl PowerReport {
    /// Re-reads `root^max_power` at `position` in `w`.
    pub fn witness_holds(&self, w: &Word) -> bool {
        occurs_at(
            w.letters(),
            self.root.letters(),
            self.max_power,
            self.position,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerFreeReport {
    pub exponent: u32,
    pub power_free: bool,
    /// `(u, position)` with `u^exponent` occurring at `position`.
    pub witness: Option<(Word, usize)>,
}

fn occurs_at(letters: &[Letter], root: &[Letter], k: u32, position: usize) -> bool {
    let p = root.len();
    let end = position + p * k as usize;
    p > 0 && end <= letters.len() && letters[position..end].chunks(p).all(|c| c == root)
}

/// Scans period `p` and calls `on_run(start, run)` whenever a maximal stretch of
/// `w[i] = w[i+p]` grows; `start..start+run+p` then has period `p`.
#[inline]
fn scan_period(letters: &[Letter], p: usize, mut on_run: impl FnMut(usize, usize) -> bool) {
    let mut run = 0;
    for i in 0..letters.len() - p {
        if letters[i] == letters[i + p] {
            run += 1;
            if on_run(i + 1 - run, run) {
                return;
            }
        } else {
            run = 0;
        }
    }
}

/// The largest `k` such that some `u^k` (u nonempty) is a factor of `w`.
pub fn max_integer_power(w: &Word) -> Result<PowerReport> {
    let letters = w.letters();
    let n = letters.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let (mut best_k, mut best_start, mut best_p) = (1usize, 0usize, 1usize);
    for p in 1..=n / 2 {
        if (best_k + 1) * p > n {
            break;
        }
        scan_period(letters, p, |start, run| {
            let k = (run + p) / p;
            if k > best_k {
                (best_k, best_start, best_p) = (k, start, p);
            }
            false
        });
    }
    Ok(PowerReport {
        max_power: best_k as u32,
        root: Word::from_trusted(
            w.alphabet(),
            letters[best_start..best_start + best_p].to_vec(),
        ),
        position: best_start,
        searched_length: n,
    })
}

/// Whether `w` avoids every `u^k`; otherwise the first witness by period.
pub fn is_k_power_free(w: &Word, k: u32) -> Result<PowerFreeReport> {
    if k < 2 {
        return Err(Error::ExponentTooSmall(k));
    }
    let letters = w.letters();
    let n = letters.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let k_us = k as usize;
    let mut witness = None;
    for p in 1..=n / k_us {
        scan_period(letters, p, |start, run| {
            if run + p >= k_us * p {
                let root = Word::from_trusted(w.alphabet(), letters[start..start + p].to_vec());
                witness = Some((root, start));
                true
            } else {
                false
            }
        });
        if witness.is_some() {
            break;
        }
    }
    Ok(PowerFreeReport {
        exponent: k,
        power_free: witness.is_none(),
        witness,
    })
}
