use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Two equal-length factors whose counts of `letter` differ by at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceWitness {
    pub heavy: Word,
    pub light: Word,
    #[serde(serialize_with = "serialize_letter_index")]
    pub letter: Letter,
    pub heavy_position: usize,
    pub light_position: usize,
}

fn serialize_letter_index<S: serde::Serializer>(l: &Letter, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u8(l.index() as u8)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub witness: Option<BalanceWitness>,
}

/// Checks every factor length and letter; stops at the shortest imbalance.
pub fn is_balanced(w: &Word) -> Result<BalanceReport> {
    let letters = w.letters();
    let n = letters.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let slice = |from: usize, len: usize| {
        Word::from_trusted(w.alphabet(), letters[from..from + len].to_vec())
    };
    for letter in w.alphabet().letters() {
        // prefix[i] = occurrences of `letter` in w[..i]
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0u32);
        for &l in letters {
            prefix.push(prefix.last().unwrap() + u32::from(l == letter));
        }
        if prefix[n] == 0 || prefix[n] as usize == n {
            continue;
        }
        for len in 1..n {
            let (mut lo, mut lo_at, mut hi, mut hi_at) = (u32::MAX, 0, 0, 0);
            for i in 0..=n - len {
                let c = prefix[i + len] - prefix[i];
                if c < lo {
                    (lo, lo_at) = (c, i);
                }
                if c > hi {
                    (hi, hi_at) = (c, i);
                }
                if hi - lo.min(hi) >= 2 {
                    return Ok(BalanceReport {
                        balanced: false,
                        witness: Some(BalanceWitness {
                            heavy: slice(hi_at, len),
                            light: slice(lo_at, len),
                            letter,
                            heavy_position: hi_at,
                            light_position: lo_at,
                        }),
                    });
                }
            }
        }
    }
    Ok(BalanceReport {
        balanced: true,
        witness: None,
    })
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
        assert!(is_balanced(&w("abaab")).unwrap().balanced);
        let r = is_balanced(&w("aabb")).unwrap();
        let wit = r.witness.unwrap();
        assert_eq!(
            (wit.heavy.to_string(), wit.light.to_string()),
            ("aa".into(), "bb".into())
        );
        assert_eq!(wit.letter, Letter::new(0));
        assert!(is_balanced(&w("aaaa")).unwrap().balanced);
        assert_eq!(is_balanced(&w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn exchange_fixed_point_prefix() {
        let r = is_balanced(&w("abbaabbaab")).unwrap();
        let wit = r.witness.unwrap();
        assert_eq!(
            (wit.heavy.to_string(), wit.light.to_string()),
            ("aa".into(), "bb".into())
        );
    }
}
