//! Quadratic reference scans used to cross-check the palindromic tree.

use crate::antimorphism::Antimorphism;
use crate::words::Letter;

/// Longest V-palindromic suffix by trying every suffix from the longest down.
pub fn longest_v_pal_suffix(v: &Antimorphism, letters: &[Letter]) -> usize {
    let n = letters.len();
    (1..=n)
        .rev()
        .find(|&len| v.is_v_palindrome_slice(&letters[n - len..]))
        .unwrap_or(0)
}
