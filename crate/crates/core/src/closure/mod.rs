//! V-palindromic closure, iterated closure `Pal_V`, and streaming `IPal_V`.
//!
//! Everything goes through [`ClosureState`]: an append-only buffer whose
//! longest V-palindromic suffix is maintained by a [`VPalTree`]. A closure
//! step appends `V(s)` letter by letter, so the index never needs a rebuild.

mod directive;
pub mod naive;
mod stream;
mod suffix_index;

pub use directive::DirectiveSpec;
pub use stream::{ipal_v_stream, PrefixStream};
pub use suffix_index::VPalTree;

use crate::antimorphism::Antimorphism;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Growing prefix plus the index answering longest-V-palindromic-suffix queries.
#[derive(Debug, Clone)]
pub struct ClosureState {
    v: Antimorphism,
    tree: VPalTree,
    verify: bool,
    cap: Option<usize>,
}

impl ClosureState {
    pub fn new(v: &Antimorphism) -> Self {
        ClosureState {
            v: v.clone(),
            tree: VPalTree::new(v),
            verify: false,
            cap: None,
        }
    }

    /// Cross-checks every index answer used by a closure against the naive scan.
    pub fn with_verification(mut self, verify: bool) -> Self {
        self.verify = verify;
        self
    }

    /// Refuses closure steps that would grow the buffer past `cap` letters.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = Some(cap);
        self
    }

    pub fn antimorphism(&self) -> &Antimorphism {
        &self.v
    }

    pub fn buffer(&self) -> &[Letter] {
        self.tree.text()
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    pub fn snapshot(&self) -> Word {
        Word::from_trusted(self.v.alphabet(), self.buffer().to_vec())
    }

    pub fn longest_v_pal_suffix(&self) -> Result<usize> {
        let fast = self.tree.longest_suffix_len();
        if self.verify {
            let naive = naive::longest_v_pal_suffix(&self.v, self.buffer());
            if naive != fast {
                return Err(Error::OracleDisagreement {
                    length: self.len(),
                    index: fast,
                    naive,
                });
            }
        }
        Ok(fast)
    }

    /// Appends one raw letter without closing.
    pub fn push(&mut self, a: Letter) -> Result<()> {
        self.v.alphabet().check(a)?;
        self.check_cap(self.len() + 1)?;
        self.tree.push(a);
        Ok(())
    }

    /// Replaces the buffer `s·q` (q its longest V-palindromic suffix) by `s·q·V(s)`.
    pub fn close(&mut self) -> Result<()> {
        let n = self.len();
        let s = n - self.longest_v_pal_suffix()?;
        self.check_cap(n + s)?;
        for i in (0..s).rev() {
            let image = self.v.tau(self.tree.text()[i]);
            self.tree.push(image);
        }
        Ok(())
    }

    /// One `Pal_V` step: `buffer ← (buffer·a)^⊕`.
    pub fn extend(&mut self, a: Letter) -> Result<()> {
        self.push(a)?;
        self.close()
    }

    fn check_cap(&self, len: usize) -> Result<()> {
        match self.cap {
            Some(cap) if len > cap => Err(Error::LengthCap { cap }),
            _ => Ok(()),
        }
    }
}

/// Length of the longest V-palindromic suffix of `w`.
pub fn longest_v_pal_suffix(w: &Word, v: &Antimorphism) -> Result<usize> {
    w.ensure_alphabet(v.alphabet())?;
    let mut tree = VPalTree::with_capacity(v, w.len());
    w.letters().iter().for_each(|&l| tree.push(l));
    Ok(tree.longest_suffix_len())
}

/// `w^⊕`: the shortest V-palindrome with prefix `w`.
pub fn v_closure(w: &Word, v: &Antimorphism) -> Result<Word> {
    w.ensure_alphabet(v.alphabet())?;
    let mut state = ClosureState::new(v);
    for &l in w.letters() {
        state.push(l)?;
    }
    state.close()?;
    Ok(state.snapshot())
}

/// Iterated closure: `Pal_V(ε) = ε`, `Pal_V(wa) = (Pal_V(w)·a)^⊕`.
pub fn pal_v(w: &Word, v: &Antimorphism) -> Result<Word> {
    w.ensure_alphabet(v.alphabet())?;
    let mut state = ClosureState::new(v);
    for &l in w.letters() {
        state.extend(l)?;
    }
    Ok(state.snapshot())
}
