//! Iterated pseudopalindromic closure under involutory antimorphisms.
//!
//! The crate is organised bottom-up:
//!
//! - [`words`]: alphabets, words, run-length encoding, factors.
//! - [`antimorphism`]: `V = R ∘ tau`, V-palindromes and the morphism `μ_V`.
//! - [`closure`]: longest V-palindromic suffixes (palindromic tree plus a
//!   naive oracle), `w^⊕`, `Pal_V` and streaming `IPal_V`.
//! - [`fixed_points`]: the families of fixed points of `IPal_V`.
//! - [`analysis`]: powers, balance, complexity, frequencies, periodicity.
//! - [`slope`]: continued fractions of Sturmian slopes from directive words.
//! - [`selfcheck`]: seeded randomized cross-checks, also exposed by the CLI.

pub mod analysis;
pub mod antimorphism;
pub mod closure;
mod error;
pub mod fixed_points;
pub mod selfcheck;
pub mod slope;
pub mod words;

pub use antimorphism::Antimorphism;
pub use closure::{
    ipal_v_stream, longest_v_pal_suffix, pal_v, v_closure, DirectiveSpec, PrefixStream,
};
pub use error::{Error, Result};
pub use fixed_points::{
    companion_word, fixed_point_prefix, u_sequence, verify_fixed_point, Family, FamilyKind,
};
pub use words::{Alphabet, Letter, Run, Word};
