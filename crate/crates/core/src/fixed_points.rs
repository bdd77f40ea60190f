//! Fixed points of `IPal_V`.
//!
//! Apart from the trivial `a^ω`, a fixed point with at least two letters
//! belongs to one of three families, decided by how `tau` acts on its first
//! letters:
//!
//! | family  | tau                          | begins with | word            |
//! |---------|------------------------------|-------------|-----------------|
//! | `R`     | fixes `a` and `b`            | `a^n b`     | `s_{R,n,a,b}`   |
//! | `H`     | fixes `a`, swaps `b` and `c` | `a^n b`     | `s_{H,n,a,b,c}` |
//! | `E`     | swaps `a` and `b`            | `a b`       | `s_{E,a,b}`     |
//!
//! Prefixes are produced by a [`PrefixStream`](crate::closure::PrefixStream)
//! that reads its own output as directive, bootstrapped by the forced first
//! term `u_1` (`a^n b`, or `a` for the exchange family).

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::antimorphism::Antimorphism;
use crate::closure::{ipal_v_stream, ClosureState, DirectiveSpec};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Default ceiling on generated lengths.
pub const DEFAULT_MAX_LEN: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    #[serde(rename = "R")]
    Reversal,
    #[serde(rename = "E")]
    Exchange,
    #[serde(rename = "H")]
    Hybrid,
    #[serde(rename = "trivial")]
    Trivial,
}

impl FamilyKind {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "R" | "r" => Ok(FamilyKind::Reversal),
            "E" | "e" => Ok(FamilyKind::Exchange),
            "H" | "h" => Ok(FamilyKind::Hybrid),
            "trivial" => Ok(FamilyKind::Trivial),
            other => Err(Error::InvalidFamily(format!(
                "unknown family {other:?}, expected R, E, H or trivial"
            ))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Reversal => "R",
            FamilyKind::Exchange => "E",
            FamilyKind::Hybrid => "H",
            FamilyKind::Trivial => "trivial",
        })
    }
}

/// Describes one fixed point: its family, exponent `n` and distinguished letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    alphabet: Arc<Alphabet>,
    kind: FamilyKind,
    n: u32,
    a: Letter,
    b: Option<Letter>,
    c: Option<Letter>,
}

impl Family {
    /// `s_{R,n,a,b}`: tau fixes both letters.
    pub fn reversal(alphabet: &Arc<Alphabet>, n: u32, a: Letter, b: Letter) -> Result<Self> {
        Self::build(alphabet, FamilyKind::Reversal, n, a, Some(b), None)
    }

    /// `s_{E,a,b}`: tau swaps the two letters.
    pub fn exchange(alphabet: &Arc<Alphabet>, a: Letter, b: Letter) -> Result<Self> {
        Self::build(alphabet, FamilyKind::Exchange, 1, a, Some(b), None)
    }

    /// `s_{H,n,a,b,c}`: tau fixes `a` and swaps `b` with `c`.
    pub fn hybrid(
        alphabet: &Arc<Alphabet>,
        n: u32,
        a: Letter,
        b: Letter,
        c: Letter,
    ) -> Result<Self> {
        Self::build(alphabet, FamilyKind::Hybrid, n, a, Some(b), Some(c))
    }

    /// `a^ω`.
    pub fn trivial(alphabet: &Arc<Alphabet>, a: Letter) -> Result<Self> {
        Self::build(alphabet, FamilyKind::Trivial, 1, a, None, None)
    }

    /// Takes `a`, `b`, `c` to be the first letters of `alphabet`, in order.
    pub fn standard(kind: FamilyKind, n: u32, alphabet: &Arc<Alphabet>) -> Result<Self> {
        let needed = match kind {
            FamilyKind::Trivial => 1,
            FamilyKind::Reversal | FamilyKind::Exchange => 2,
            FamilyKind::Hybrid => 3,
        };
        if alphabet.len() < needed {
            return Err(Error::InvalidFamily(format!(
                "family {kind} needs at least {needed} letters, alphabet {alphabet:?} has {}",
                alphabet.len(),
                alphabet = alphabet.to_string()
            )));
        }
        let l = Letter::new;
        let (b, c) = match kind {
            FamilyKind::Trivial => (None, None),
            FamilyKind::Reversal | FamilyKind::Exchange => (Some(l(1)), None),
            FamilyKind::Hybrid => (Some(l(1)), Some(l(2))),
        };
        Self::build(alphabet, kind, n, l(0), b, c)
    }

    fn build(
        alphabet: &Arc<Alphabet>,
        kind: FamilyKind,
        n: u32,
        a: Letter,
        b: Option<Letter>,
        c: Option<Letter>,
    ) -> Result<Self> {
        for l in [Some(a), b, c].into_iter().flatten() {
            alphabet.check(l)?;
        }
        let distinct = match (b, c) {
            (Some(b), Some(c)) => a != b && b != c && a != c,
            (Some(b), None) => a != b,
            _ => true,
        };
        if !distinct {
            return Err(Error::InvalidFamily(
                "the letters a, b, c must be pairwise distinct".into(),
            ));
        }
        if n == 0 {
            return Err(Error::InvalidFamily("n must be at least 1".into()));
        }
        if kind == FamilyKind::Exchange && n != 1 {
            return Err(Error::ExchangeNeedsNOne(n));
        }
        Ok(Family {
            alphabet: Arc::clone(alphabet),
            kind,
            n,
            a,
            b,
            c,
        })
    }

    /// Like [`Family::standard`], but validates a requested `n` for the exchange family.
    pub fn standard_with_n(kind: FamilyKind, n: u32, alphabet: &Arc<Alphabet>) -> Result<Self> {
        if kind == FamilyKind::Exchange && n != 1 {
            return Err(Error::ExchangeNeedsNOne(n));
        }
        Self::standard(kind, n, alphabet)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn first_letter(&self) -> Letter {
        self.a
    }

    /// The antimorphism whose `IPal_V` has this word as fixed point. Letters
    /// outside `a, b, c` are fixed by its tau.
    pub fn antimorphism(&self) -> Antimorphism {
        let mut tau: Vec<Letter> = self.alphabet.letters().collect();
        match (self.kind, self.b, self.c) {
            (FamilyKind::Exchange, Some(b), _) => {
                tau[self.a.index()] = b;
                tau[b.index()] = self.a;
            }
            (FamilyKind::Hybrid, Some(b), Some(c)) => {
                tau[b.index()] = c;
                tau[c.index()] = b;
            }
            _ => {}
        }
        Antimorphism::new(&self.alphabet, tau).expect("family tau is an involution")
    }

    /// Checks that `v` acts on `a, b, c` the way this family requires.
    pub fn check_antimorphism(&self, v: &Antimorphism) -> Result<()> {
        if **v.alphabet() != *self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: v.alphabet().to_string(),
            });
        }
        let a = self.a;
        let ok = match (self.kind, self.b, self.c) {
            (FamilyKind::Reversal, Some(b), _) => v.tau(a) == a && v.tau(b) == b,
            (FamilyKind::Exchange, Some(b), _) => v.tau(a) == b,
            (FamilyKind::Hybrid, Some(b), Some(c)) => v.tau(a) == a && v.tau(b) == c,
            (FamilyKind::Trivial, ..) => v.tau(a) == a,
            _ => unreachable!("letters are set by the constructors"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamily(format!(
                "antimorphism {v} does not match family {self}"
            )))
        }
    }

    /// `u_1`: `a^n b`, or `a` for the exchange family. `None` for `a^ω`.
    pub fn seed(&self) -> Option<Word> {
        let mut letters = match self.kind {
            FamilyKind::Trivial => return None,
            FamilyKind::Exchange => vec![self.a],
            FamilyKind::Reversal | FamilyKind::Hybrid => vec![self.a; self.n as usize],
        };
        if self.kind != FamilyKind::Exchange {
            letters.push(self.b.expect("two-letter family"));
        }
        Some(Word::from_trusted(&self.alphabet, letters))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = |l: Letter| self.alphabet.symbol(l);
        match (self.kind, self.b, self.c) {
            (FamilyKind::Reversal, Some(b), _) => {
                write!(f, "R(n={},{},{})", self.n, sym(self.a), sym(b))
            }
            (FamilyKind::Exchange, Some(b), _) => write!(f, "E({},{})", sym(self.a), sym(b)),
            (FamilyKind::Hybrid, Some(b), Some(c)) => {
                write!(f, "H(n={},{},{},{})", self.n, sym(self.a), sym(b), sym(c))
            }
            _ => write!(f, "trivial({})", sym(self.a)),
        }
    }
}

/// `u_k` with `u_1` the seed and `u_k = Pal_V(u_{k-1})`.
///
/// The lengths grow roughly like a tower of exponentials, so only the first
/// handful of terms are computable; anything past `cap` letters is refused.
pub fn u_sequence_capped(family: &Family, k: usize, cap: usize) -> Result<Word> {
    let Some(mut u) = family.seed() else {
        return Err(Error::NotForFamily(
            "the trivial fixed point has no u_k sequence",
        ));
    };
    if k == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            available: 0,
        });
    }
    let v = family.antimorphism();
    for _ in 1..k {
        let mut state = ClosureState::new(&v).with_cap(cap);
        for &l in u.letters() {
            state.extend(l)?;
        }
        u = state.snapshot();
    }
    Ok(u)
}

pub fn u_sequence(family: &Family, k: usize) -> Result<Word> {
    u_sequence_capped(family, k, DEFAULT_MAX_LEN)
}

/// The length-`m` prefix of the family's fixed point.
pub fn fixed_point_prefix(family: &Family, m: usize) -> Result<Word> {
    let v = family.antimorphism();
    ipal_v_stream(&DirectiveSpec::Family(family.clone()), &v)?.request(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub is_consistent: bool,
    /// Positions compared, `min(|w|, generated length)` when consistent.
    pub checked_length: usize,
    /// 1-based position of the first disagreement.
    pub first_mismatch: Option<usize>,
}

/// Runs `IPal_V` with `w` as its own directive and compares the output with `w`.
pub fn verify_fixed_point(w: &Word, v: &Antimorphism) -> Result<FixedPointReport> {
    let mut stream = ipal_v_stream(&DirectiveSpec::Finite(w.clone()), v)?;
    let target = w.letters();
    let mut checked = 0;
    loop {
        let generated = stream.buffer();
        let upto = generated.len().min(target.len());
        if let Some(i) = (checked..upto).find(|&i| generated[i] != target[i]) {
            return Ok(FixedPointReport {
                is_consistent: false,
                checked_length: i + 1,
                first_mismatch: Some(i + 1),
            });
        }
        checked = upto;
        if checked == target.len() || !stream.step()? {
            break;
        }
    }
    Ok(FixedPointReport {
        is_consistent: true,
        checked_length: checked,
        first_mismatch: None,
    })
}

/// Length-`m` prefix of `IPal(s)` (plain reversal) for the fixed point `s`:
/// `w_E` for the exchange family, `w_{H,n}` for the hybrid one.
pub fn companion_word(family: &Family, m: usize) -> Result<Word> {
    match family.kind {
        FamilyKind::Exchange | FamilyKind::Hybrid => {}
        _ => {
            return Err(Error::NotForFamily(
                "companion words exist only for the E and H families",
            ))
        }
    }
    // Each directive letter adds at least one letter, so m of them suffice.
    let directive = fixed_point_prefix(family, m)?;
    let r = Antimorphism::reversal(&family.alphabet);
    let mut stream = ipal_v_stream(&DirectiveSpec::Finite(directive), &r)?;
    stream.request(m)
}
