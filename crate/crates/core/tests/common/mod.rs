#![allow(dead_code)]

use proptest::prelude::*;
use pseudopal_core::selfcheck::random_antimorphism;
use pseudopal_core::{Antimorphism, Letter, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn arb_antimorphism() -> impl Strategy<Value = Antimorphism> {
    any::<u64>().prop_map(|seed| random_antimorphism(&mut ChaCha8Rng::seed_from_u64(seed)))
}

pub fn arb_word_over(v: &Antimorphism, max_len: usize) -> impl Strategy<Value = Word> {
    let alphabet = v.alphabet().clone();
    let k = alphabet.len() as u8;
    prop::collection::vec(0..k, 0..=max_len).prop_map(move |ls| {
        Word::from_letters(&alphabet, ls.into_iter().map(Letter::new).collect()).unwrap()
    })
}

/// An antimorphism together with a word over its alphabet.
pub fn arb_v_word(max_len: usize) -> impl Strategy<Value = (Antimorphism, Word)> {
    arb_antimorphism().prop_flat_map(move |v| {
        let w = arb_word_over(&v, max_len);
        (Just(v), w)
    })
}

/// All words of length `n` over `k` letters.
pub fn all_words(k: u8, n: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |a| {
                    let mut w = w.clone();
                    w.push(Letter::new(a));
                    w
                })
            })
            .collect();
    }
    out
}

/// `V(w)` straight from the definition: reverse, then map each letter through tau.
pub fn v_of(v: &Antimorphism, w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&a| v.tau_table()[a.index()]).collect()
}

pub fn is_v_pal(v: &Antimorphism, w: &[Letter]) -> bool {
    v_of(v, w) == w
}

/// An antimorphism with two words over its alphabet.
pub fn arb_v_two_words(max_len: usize) -> impl Strategy<Value = (Antimorphism, Word, Word)> {
    arb_antimorphism().prop_flat_map(move |v| {
        let (u, w) = (arb_word_over(&v, max_len), arb_word_over(&v, max_len));
        (Just(v), u, w)
    })
}
