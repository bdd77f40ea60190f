//! Involutory antimorphisms `V = R ∘ τ` and the morphism `μ_V`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Reversal composed with an involutive letter permutation `tau`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antimorphism {
    alphabet: Arc<Alphabet>,
    tau: Vec<Letter>,
}

impl Antimorphism {
    /// Validates `tau` as a full involution table over `alphabet`.
    pub fn new(alphabet: &Arc<Alphabet>, tau: Vec<Letter>) -> Result<Self> {
        if tau.len() != alphabet.len() {
            return Err(Error::TauSize {
                expected: alphabet.len(),
                got: tau.len(),
            });
        }
        for &image in &tau {
            alphabet.check(image)?;
        }
        for letter in alphabet.letters() {
            let back = tau[tau[letter.index()].index()];
            if back != letter {
                return Err(Error::NotInvolution {
                    letter: alphabet.symbol(letter),
                    image: alphabet.symbol(back),
                });
            }
        }
        Ok(Antimorphism {
            alphabet: Arc::clone(alphabet),
            tau,
        })
    }

    /// Builds `tau` from `(x, tau(x))` pairs; letters not mentioned are fixed.
    pub fn from_pairs(alphabet: &Arc<Alphabet>, pairs: &[(char, char)]) -> Result<Self> {
        let mut tau: Vec<Option<Letter>> = vec![None; alphabet.len()];
        for &(from, to) in pairs {
            let from_letter = alphabet.letter(from)?;
            let to_letter = alphabet.letter(to)?;
            match tau[from_letter.index()] {
                Some(prev) if prev != to_letter => return Err(Error::TauConflict { letter: from }),
                _ => tau[from_letter.index()] = Some(to_letter),
            }
        }
        let tau = tau
            .into_iter()
            .zip(alphabet.letters())
            .map(|(image, letter)| image.unwrap_or(letter))
            .collect();
        Self::new(alphabet, tau)
    }

    /// Parses the `a:a,b:c,c:b` notation. Fixed letters may be left out.
    pub fn parse_tau(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let pairs = parse_tau_pairs(text)?;
        Self::from_pairs(alphabet, &pairs)
    }

    /// `R`: plain reversal over any alphabet.
    pub fn reversal(alphabet: &Arc<Alphabet>) -> Self {
        Antimorphism {
            alphabet: Arc::clone(alphabet),
            tau: alphabet.letters().collect(),
        }
    }

    /// `E` over `{a, b}`: tau swaps `a` and `b`.
    pub fn exchange() -> Self {
        let alphabet = Alphabet::parse("ab").expect("static alphabet");
        Self::from_pairs(&alphabet, &[('a', 'b'), ('b', 'a')]).expect("static involution")
    }

    /// `H` over `{a, b, c}`: tau fixes `a` and swaps `b` with `c`.
    pub fn hybrid() -> Self {
        let alphabet = Alphabet::parse("abc").expect("static alphabet");
        Self::from_pairs(&alphabet, &[('b', 'c'), ('c', 'b')]).expect("static involution")
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    #[inline]
    pub fn tau(&self, a: Letter) -> Letter {
        self.tau[a.index()]
    }

    pub fn tau_table(&self) -> &[Letter] {
        &self.tau
    }

    pub fn is_reversal(&self) -> bool {
        self.alphabet.letters().all(|a| self.tau(a) == a)
    }

    /// The antimorphism with identity `tau` over the same alphabet.
    pub fn underlying_reversal(&self) -> Self {
        Self::reversal(&self.alphabet)
    }

    /// Writes `V(letters)` onto `out`.
    pub(crate) fn apply_into(&self, letters: &[Letter], out: &mut Vec<Letter>) {
        out.extend(letters.iter().rev().map(|&l| self.tau(l)));
    }

    pub(crate) fn is_v_palindrome_slice(&self, letters: &[Letter]) -> bool {
        let n = letters.len();
        (0..n.div_ceil(2)).all(|i| letters[i] == self.tau(letters[n - 1 - i]))
    }

    /// `V(w)`: reversal of the letterwise tau-image.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.ensure_alphabet(&self.alphabet)?;
        let mut out = Vec::with_capacity(w.len());
        self.apply_into(w.letters(), &mut out);
        Ok(Word::from_trusted(&self.alphabet, out))
    }

    pub fn is_v_palindrome(&self, w: &Word) -> Result<bool> {
        w.ensure_alphabet(&self.alphabet)?;
        Ok(self.is_v_palindrome_slice(w.letters()))
    }

    /// `μ_V`: `a ↦ a` when tau fixes `a`, otherwise `a ↦ a·tau(a)`.
    pub fn mu(&self, w: &Word) -> Result<Word> {
        w.ensure_alphabet(&self.alphabet)?;
        let mut out = Vec::with_capacity(2 * w.len());
        for &a in w.letters() {
            out.push(a);
            let t = self.tau(a);
            if t != a {
                out.push(t);
            }
        }
        Ok(Word::from_trusted(&self.alphabet, out))
    }
}

impl fmt::Display for Antimorphism {
    /// Prints the `x:y` pairs of every letter moved by tau.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<String> = self
            .alphabet
            .letters()
            .filter(|&a| self.tau(a) != a)
            .map(|a| {
                format!(
                    "{}:{}",
                    self.alphabet.symbol(a),
                    self.alphabet.symbol(self.tau(a))
                )
            })
            .collect();
        if moved.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", moved.join(","))
        }
    }
}

pub fn parse_tau_pairs(text: &str) -> Result<Vec<(char, char)>> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|pair| {
            let mut chars = pair.chars();
            match (chars.next(), chars.next(), chars.next(), chars.next()) {
                (Some(x), Some(':'), Some(y), None) => Ok((x, y)),
                _ => Err(Error::MalformedTau(pair.to_string())),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(v: &Antimorphism, s: &str) -> Word {
        Word::parse(v.alphabet(), s).unwrap()
    }

    #[test]
    fn named_antimorphisms() {
        let ab = Alphabet::parse("ab").unwrap();
        let r = Antimorphism::from_pairs(&ab, &[]).unwrap();
        assert!(r.is_reversal());
        assert_eq!(r, Antimorphism::reversal(&ab));

        let e = Antimorphism::parse_tau(&ab, "a:b,b:a").unwrap();
        assert_eq!(e, Antimorphism::exchange());
        assert_eq!(e.to_string(), "a:b,b:a");
    }

    #[test]
    fn three_cycle_is_rejected() {
        let abc = Alphabet::parse("abc").unwrap();
        let err = Antimorphism::parse_tau(&abc, "a:b,b:c,c:a").unwrap_err();
        assert_eq!(
            err,
            Error::NotInvolution {
                letter: 'a',
                image: 'c'
            }
        );
    }

    #[test]
    fn partial_swap_is_rejected() {
        let abc = Alphabet::parse("abc").unwrap();
        assert!(matches!(
            Antimorphism::parse_tau(&abc, "b:c"),
            Err(Error::NotInvolution { letter: 'b', .. })
        ));
        assert_eq!(
            Antimorphism::parse_tau(&abc, "b:c,b:a"),
            Err(Error::TauConflict { letter: 'b' })
        );
        assert!(matches!(
            Antimorphism::parse_tau(&abc, "bc"),
            Err(Error::MalformedTau(_))
        ));
    }

    #[test]
    fn apply_examples() {
        let e = Antimorphism::exchange();
        assert_eq!(e.apply(&word(&e, "aa")).unwrap().to_string(), "bb");
        let r = Antimorphism::reversal(&Alphabet::parse("abc").unwrap());
        assert_eq!(r.apply(&word(&r, "abc")).unwrap().to_string(), "cba");
        let h = Antimorphism::hybrid();
        assert_eq!(h.apply(&word(&h, "bca")).unwrap().to_string(), "abc");
    }

    #[test]
    fn v_palindrome_examples() {
        let e = Antimorphism::exchange();
        assert!(e.is_v_palindrome(&word(&e, "ba")).unwrap());
        assert!(!e.is_v_palindrome(&word(&e, "aa")).unwrap());
        let r = Antimorphism::reversal(&Alphabet::parse("ab").unwrap());
        assert!(r.is_v_palindrome(&word(&r, "aba")).unwrap());
        assert!(r.is_v_palindrome(&word(&r, "")).unwrap());
    }

    #[test]
    fn mu_examples() {
        let e = Antimorphism::exchange();
        assert_eq!(e.mu(&word(&e, "ab")).unwrap().to_string(), "abba");
        let r = Antimorphism::reversal(&Alphabet::parse("abc").unwrap());
        assert_eq!(r.mu(&word(&r, "abc")).unwrap().to_string(), "abc");
        let h = Antimorphism::hybrid();
        assert_eq!(h.mu(&word(&h, "abc")).unwrap().to_string(), "abccb");
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let e = Antimorphism::exchange();
        let h = Antimorphism::hybrid();
        assert!(matches!(
            e.apply(&word(&h, "abc")),
            Err(Error::AlphabetMismatch { .. })
        ));
    }
}
