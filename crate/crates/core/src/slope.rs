//! Continued fraction of the slope of a Sturmian word from its binary directive.
//!
//! A directive with runs `a^{d1} b^{d2} a^{d3} …` gives the slope
//! `[0; 1+d1, d2, d3, …]`. On a finite directive the last run may still grow,
//! so its quotient is marked provisional.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{run_length_encode, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    /// `[a0; a1, …]` as far as written out explicitly.
    pub quotients: Vec<u64>,
    /// Repeated forever after `quotients`, when known.
    pub period: Option<Vec<u64>>,
    /// Whether the last entry of `quotients` may still grow.
    pub provisional_last: bool,
}

impl ContinuedFraction {
    /// Quotient `i` (0 is the integer part), expanding the period if there is one.
    pub fn quotient(&self, i: usize) -> Option<u64> {
        if let Some(&q) = self.quotients.get(i) {
            return Some(q);
        }
        let period = self.period.as_ref()?;
        Some(period[(i - self.quotients.len()) % period.len()])
    }

    pub fn is_infinite(&self) -> bool {
        self.period.is_some()
    }

    /// Number of quotients, or `None` for an infinite expansion.
    pub fn available(&self) -> Option<usize> {
        match self.period {
            Some(_) => None,
            None => Some(self.quotients.len()),
        }
    }

    /// The first `k + 1` quotients `a0..=ak`.
    pub fn terms(&self, k: usize) -> Result<Vec<u64>> {
        (0..=k)
            .map(|i| {
                self.quotient(i).ok_or(Error::IndexOutOfRange {
                    index: k,
                    available: self.quotients.len(),
                })
            })
            .collect()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |qs: &[u64]| qs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let (head, rest) = self
            .quotients
            .split_first()
            .map_or((0, &[][..]), |(h, r)| (*h, r));
        write!(f, "[{head};{}", join(rest))?;
        if let Some(p) = &self.period {
            if !rest.is_empty() {
                f.write_str(",")?;
            }
            write!(f, "({})", join(p))?;
        } else if self.provisional_last {
            f.write_str("+")?;
        }
        f.write_str("]")
    }
}

fn check_binary(w: &Word) -> Result<()> {
    match w.alphabet().len() {
        2 => Ok(()),
        k => Err(Error::NotBinary(k)),
    }
}

/// Exchanges the two letters of a binary word.
pub fn swap_letters(w: &Word) -> Result<Word> {
    check_binary(w)?;
    let letters = w
        .letters()
        .iter()
        .map(|l| Letter::new(1 - l.index() as u8))
        .collect();
    Word::from_letters(w.alphabet(), letters)
}

fn counts(letters: &[Letter]) -> impl Iterator<Item = u64> + '_ {
    run_length_encode(letters)
        .into_iter()
        .map(|r| r.count as u64)
}

fn ensure_starts_with_first_letter(w: &Word, first: Letter) -> Result<()> {
    if first.index() != 0 {
        return Err(Error::StartsWithSecondLetter(w.alphabet().symbol(first)));
    }
    Ok(())
}

/// `[0; 1+d1, d2, …, dk]` with `dk` provisional.
pub fn directive_to_cf(w: &Word) -> Result<ContinuedFraction> {
    check_binary(w)?;
    let &first = w.letters().first().ok_or(Error::EmptyWord)?;
    ensure_starts_with_first_letter(w, first)?;
    let mut quotients = vec![0];
    quotients.extend(counts(w.letters()));
    quotients[1] += 1;
    Ok(ContinuedFraction {
        quotients,
        period: None,
        provisional_last: true,
    })
}

/// The exact expansion for the directive `prefix · period^ω`.
pub fn periodic_directive_to_cf(prefix: &Word, period: &Word) -> Result<ContinuedFraction> {
    check_binary(prefix)?;
    period.ensure_alphabet(prefix.alphabet())?;
    let (u, m) = (prefix.len(), period.len());
    if m == 0 {
        return Err(Error::EmptyPeriod);
    }
    if period.letters().iter().all(|&l| l == period.letters()[0]) {
        return Err(Error::RationalSlope);
    }
    let x: Vec<Letter> = prefix
        .letters()
        .iter()
        .chain(period.letters().iter().cycle().take(3 * m))
        .copied()
        .collect();
    ensure_starts_with_first_letter(prefix, x[0])?;
    // First run boundary with both neighbours inside the periodic part; the
    // position one period later is then a boundary too, and the runs in
    // between repeat forever.
    let b = (u + 1..)
        .find(|&i| x[i] != x[i - 1])
        .expect("period has two letters");
    let mut quotients = vec![0];
    quotients.extend(counts(&x[..b]));
    quotients[1] += 1;
    Ok(ContinuedFraction {
        quotients,
        period: Some(counts(&x[b..b + m]).collect()),
        provisional_last: false,
    })
}

/// `p_k / q_k` by the standard recurrence.
pub fn cf_convergent(cf: &ContinuedFraction, k: usize) -> Result<BigRational> {
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
    for a in cf.terms(k)? {
        let a = BigInt::from(a);
        let p = &a * &p0 + &p1;
        let q = &a * &q0 + &q1;
        (p1, q1, p0, q0) = (p0, q0, p, q);
    }
    Ok(BigRational::new(p0, q0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SturmForm {
    /// `[0; 1, a0, (a1, …, ak)]` with `ak ≥ a0`.
    One,
    /// `[0; 1+a0, (a1, …, ak)]` with `ak ≥ a0 ≥ 1`.
    Two,
}

/// Which Sturm-number form the expansion has, if any.
pub fn sturm_form(cf: &ContinuedFraction) -> Result<Option<SturmForm>> {
    let period = cf.period.as_ref().ok_or(Error::NotApplicable)?;
    let m = period.len();
    let x = |i| cf.quotient(i).expect("infinite expansion");
    let purely_periodic_from = |s: usize| (s..cf.quotients.len().max(s)).all(|i| x(i) == x(i + m));
    if x(0) != 0 {
        return Ok(None);
    }
    if x(1) == 1 && purely_periodic_from(3) && x(3 + m - 1) >= x(2) {
        return Ok(Some(SturmForm::One));
    }
    if x(1) >= 2 && purely_periodic_from(2) && x(2 + m - 1) >= x(1) - 1 {
        return Ok(Some(SturmForm::Two));
    }
    Ok(None)
}

pub fn sturm_number_check(cf: &ContinuedFraction) -> Result<bool> {
    Ok(sturm_form(cf)?.is_some())
}

/// Largest partial quotient `a_i`, `i ≥ 1`. With `include_provisional` false a
/// provisional last quotient is skipped.
pub fn quotient_bound_check(cf: &ContinuedFraction, include_provisional: bool) -> Result<u64> {
    let mut head = cf.quotients.get(1..).unwrap_or(&[]);
    if cf.provisional_last && !include_provisional {
        head = &head[..head.len().saturating_sub(1)];
    }
    let tail = cf.period.as_deref().unwrap_or(&[]);
    head.iter()
        .chain(tail)
        .copied()
        .max()
        .ok_or(Error::NoQuotients)
}

/// Words with partial quotients bounded by `m` avoid `(3 + m)`-powers.
pub fn predicted_power_free_exponent(max_quotient: u64) -> u64 {
    3 + max_quotient
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn w(s: &str) -> Word {
        Word::parse(&Alphabet::parse("ab").unwrap(), s).unwrap()
    }

    #[test]
    fn finite_directive() {
        let cf = directive_to_cf(&w("aabab")).unwrap();
        assert_eq!(cf.quotients, vec![0, 3, 1, 1, 1]);
        assert!(cf.provisional_last);
        assert_eq!(cf.to_string(), "[0;3,1,1,1+]");
        assert_eq!(
            directive_to_cf(&w("ba")),
            Err(Error::StartsWithSecondLetter('b'))
        );
        assert_eq!(
            directive_to_cf(&swap_letters(&w("ba")).unwrap())
                .unwrap()
                .quotients,
            vec![0, 2, 1]
        );
        let abc = Word::parse(&Alphabet::parse("abc").unwrap(), "ab").unwrap();
        assert_eq!(directive_to_cf(&abc), Err(Error::NotBinary(3)));
    }

    #[test]
    fn periodic_directive() {
        let cf = periodic_directive_to_cf(&w(""), &w("ab")).unwrap();
        assert_eq!(
            (cf.quotients.clone(), cf.period.clone()),
            (vec![0, 2], Some(vec![1, 1]))
        );
        assert_eq!(sturm_form(&cf), Ok(Some(SturmForm::Two)));

        let cf = periodic_directive_to_cf(&w(""), &w("aba")).unwrap();
        assert_eq!(
            (cf.quotients.clone(), cf.period.clone()),
            (vec![0, 2], Some(vec![1, 2]))
        );

        // The run of b's straddles the period boundary.
        let cf = periodic_directive_to_cf(&w("a"), &w("bab")).unwrap();
        assert_eq!(
            (cf.quotients.clone(), cf.period.clone()),
            (vec![0, 2, 1], Some(vec![1, 2]))
        );

        assert_eq!(
            periodic_directive_to_cf(&w("ab"), &w("b")),
            Err(Error::RationalSlope)
        );
        assert_eq!(
            periodic_directive_to_cf(&w(""), &w("ba")),
            Err(Error::StartsWithSecondLetter('b'))
        );
    }

    #[test]
    fn convergents() {
        let cf = ContinuedFraction {
            quotients: vec![0, 2, 1, 2],
            period: None,
            provisional_last: false,
        };
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(cf_convergent(&cf, 0), Ok(r(0, 1)));
        assert_eq!(cf_convergent(&cf, 1), Ok(r(1, 2)));
        assert_eq!(cf_convergent(&cf, 2), Ok(r(1, 3)));
        assert_eq!(cf_convergent(&cf, 3), Ok(r(3, 8)));
        assert_eq!(
            cf_convergent(&cf, 4),
            Err(Error::IndexOutOfRange {
                index: 4,
                available: 4
            })
        );
    }

    #[test]
    fn sturm_forms() {
        let cf = |q: Vec<u64>, p: Vec<u64>| ContinuedFraction {
            quotients: q,
            period: Some(p),
            provisional_last: false,
        };
        assert_eq!(
            sturm_form(&cf(vec![0, 1, 1], vec![1])),
            Ok(Some(SturmForm::One))
        );
        assert_eq!(
            sturm_form(&cf(vec![0, 2], vec![1, 2])),
            Ok(Some(SturmForm::Two))
        );
        assert_eq!(
            sturm_form(&cf(vec![0, 1, 2], vec![3, 2])),
            Ok(Some(SturmForm::One))
        );
        assert_eq!(sturm_form(&cf(vec![0, 1, 2], vec![3, 1])), Ok(None));
        assert_eq!(
            sturm_form(&cf(vec![0, 3], vec![1, 2])),
            Ok(Some(SturmForm::Two))
        );
        assert_eq!(sturm_form(&cf(vec![0, 3], vec![2, 1])), Ok(None));
        // Same number, period declared with a different alignment.
        assert_eq!(
            sturm_form(&cf(vec![0, 3, 1, 2], vec![1, 2])),
            Ok(Some(SturmForm::Two))
        );
        let finite = directive_to_cf(&w("ab")).unwrap();
        assert_eq!(sturm_number_check(&finite), Err(Error::NotApplicable));
    }

    #[test]
    fn bounds() {
        let cf = directive_to_cf(&w("abaaaa")).unwrap();
        assert_eq!(quotient_bound_check(&cf, true), Ok(4));
        assert_eq!(quotient_bound_check(&cf, false), Ok(2));
        assert_eq!(predicted_power_free_exponent(2), 5);
        let tiny = directive_to_cf(&w("a")).unwrap();
        assert_eq!(quotient_bound_check(&tiny, false), Err(Error::NoQuotients));
    }
}
