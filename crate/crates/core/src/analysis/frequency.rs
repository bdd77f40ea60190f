use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Exact relative frequency of every alphabet letter (absent letters map to 0).
pub fn letter_frequencies(w: &Word) -> Result<BTreeMap<Letter, BigRational>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut counts = vec![0usize; w.alphabet().len()];
    for &l in w.letters() {
        counts[l.index()] += 1;
    }
    let n = BigInt::from(w.len());
    Ok(w.alphabet()
        .letters()
        .map(|l| {
            (
                l,
                BigRational::new(BigInt::from(counts[l.index()]), n.clone()),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;
    use num_traits::{One, Zero};

    #[test]
    fn examples() {
        let w = Word::parse(&Alphabet::parse("abc").unwrap(), "abaab").unwrap();
        let f = letter_frequencies(&w).unwrap();
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(f[&Letter::new(0)], r(3, 5));
        assert_eq!(f[&Letter::new(1)], r(2, 5));
        assert!(f[&Letter::new(2)].is_zero());
        assert!(f.values().cloned().sum::<BigRational>().is_one());
    }
}
