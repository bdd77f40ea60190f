//! Analyzers for finite prefixes of infinite words.
//!
//! Statements about infinite words can only be refuted or supported on a
//! prefix; results that depend on where the prefix was cut carry
//! [`Evidence::PrefixScoped`].

mod balance;
mod complexity;
mod frequency;
mod palindromes;
mod period;
mod powers;

pub use balance::{is_balanced, BalanceReport, BalanceWitness};
pub use complexity::{complexity_is_trusted, factor_complexity};
pub use frequency::letter_frequencies;
pub use palindromes::palindromic_prefixes;
pub use period::{
    detect_ultimate_period, detect_ultimate_period_with, PeriodEvidence, UltimatePeriod,
};
pub use powers::{is_k_power_free, max_integer_power, PowerFreeReport, PowerReport};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// Holds for the input as given.
    Exact,
    /// Describes the analyzed prefix only; the infinite word may differ.
    PrefixScoped,
}

impl Evidence {
    pub fn as_str(self) -> &'static str {
        match self {
            Evidence::Exact => "exact",
            Evidence::PrefixScoped => "prefix-scoped",
        }
    }
}
