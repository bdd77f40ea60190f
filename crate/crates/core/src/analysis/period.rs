use serde::Serialize;

use super::Evidence;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// How much of the prefix a candidate `(p, q)` must explain before it is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodEvidence {
    /// Full periods required after the preperiod.
    pub min_periods: usize,
    /// Require those periods inside the first half of the prefix, not just
    /// anywhere. Without this, a high power near the end of an aperiodic
    /// prefix is reported as the eventual period.
    pub confirm_on_half: bool,
}

impl Default for PeriodEvidence {
    fn default() -> Self {
        PeriodEvidence {
            min_periods: 3,
            confirm_on_half: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UltimatePeriod {
    pub preperiod: usize,
    pub period: usize,
    pub analyzed_length: usize,
    pub evidence: Evidence,
}

/// Smallest `(p, q)`, lexicographically, with `w[i] = w[i+q]` for all `i ≥ p`
/// that passes the default evidence rule; `None` when no candidate does.
pub fn detect_ultimate_period(w: &Word) -> Result<Option<UltimatePeriod>> {
    detect_ultimate_period_with(w, PeriodEvidence::default())
}

pub fn detect_ultimate_period_with(
    w: &Word,
    rule: PeriodEvidence,
) -> Result<Option<UltimatePeriod>> {
    let n = w.len();
    if n < 4 {
        return Err(Error::WordTooShort { len: n, min: 4 });
    }
    let window = if rule.confirm_on_half { n / 2 } else { n };
    Ok(
        detect(w.letters(), window, rule.min_periods.max(1)).map(|(p, q)| UltimatePeriod {
            preperiod: p,
            period: q,
            analyzed_length: n,
            evidence: Evidence::PrefixScoped,
        }),
    )
}

fn detect(letters: &[Letter], window: usize, min_periods: usize) -> Option<(usize, usize)> {
    let n = letters.len();
    let mut best: Option<(usize, usize)> = None;
    for q in 1..=window / min_periods {
        // smallest p with period q on letters[p..]
        let p = (0..n - q)
            .rev()
            .find(|&i| letters[i] != letters[i + q])
            .map_or(0, |i| i + 1);
        if p + min_periods * q > window {
            continue;
        }
        if best.is_none_or(|b| (p, q) < b) {
            best = Some((p, q));
        }
        if p == 0 {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn w(s: &str) -> Word {
        Word::parse(&Alphabet::parse("ab").unwrap(), s).unwrap()
    }

    #[test]
    fn examples() {
        let r = detect_ultimate_period(&w(&"ab".repeat(6)))
            .unwrap()
            .unwrap();
        assert_eq!(
            (r.preperiod, r.period, r.evidence),
            (0, 2, Evidence::PrefixScoped)
        );

        let r = detect_ultimate_period(&w(&format!("b{}", "a".repeat(11))))
            .unwrap()
            .unwrap();
        assert_eq!((r.preperiod, r.period), (1, 1));

        assert_eq!(
            detect_ultimate_period(&w("aba")),
            Err(Error::WordTooShort { len: 3, min: 4 })
        );
        assert_eq!(detect_ultimate_period(&w("abaababaabaab")).unwrap(), None);
    }

    #[test]
    fn late_power_is_not_a_period_under_the_default_rule() {
        // Aperiodic start, then a cube of "ab" at the very end.
        let word = w("aabbbaababab");
        let lax = PeriodEvidence {
            min_periods: 3,
            confirm_on_half: false,
        };
        let r = detect_ultimate_period_with(&word, lax).unwrap().unwrap();
        assert_eq!((r.preperiod, r.period), (6, 2));
        assert_eq!(detect_ultimate_period(&word).unwrap(), None);
    }
}
