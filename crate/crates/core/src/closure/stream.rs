use crate::antimorphism::Antimorphism;
use crate::closure::{ClosureState, DirectiveSpec};
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Debug, Clone)]
enum Source {
    Finite(Vec<Letter>),
    Periodic {
        prefix: Vec<Letter>,
        period: Vec<Letter>,
    },
    /// Reads `seed` first, then the stream's own output.
    SelfDirected {
        seed: Vec<Letter>,
    },
}

/// Lazily generated prefixes of `IPal_V(d)`.
///
/// Directive letters are consumed only until the buffer is long enough for
/// the current request; the untruncated buffer is kept for later requests.
#[derive(Debug, Clone)]
pub struct PrefixStream {
    state: ClosureState,
    source: Source,
    consumed: usize,
}

pub fn ipal_v_stream(d: &DirectiveSpec, v: &Antimorphism) -> Result<PrefixStream> {
    let alphabet = d.alphabet();
    if **alphabet != **v.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: alphabet.to_string(),
            right: v.alphabet().to_string(),
        });
    }
    let source = match d {
        DirectiveSpec::Finite(w) => Source::Finite(w.letters().to_vec()),
        DirectiveSpec::EventuallyPeriodic { prefix, period } => {
            if period.is_empty() {
                return Err(Error::EmptyPeriod);
            }
            Source::Periodic {
                prefix: prefix.letters().to_vec(),
                period: period.letters().to_vec(),
            }
        }
        DirectiveSpec::Family(family) => {
            family.check_antimorphism(v)?;
            match family.seed() {
                Some(seed) => Source::SelfDirected {
                    seed: seed.into_letters(),
                },
                // a^ω: the buffer never runs ahead of the directive.
                None => Source::Periodic {
                    prefix: Vec::new(),
                    period: vec![family.first_letter()],
                },
            }
        }
    };
    Ok(PrefixStream {
        state: ClosureState::new(v),
        source,
        consumed: 0,
    })
}

impl PrefixStream {
    pub fn with_verification(mut self, verify: bool) -> Self {
        self.state = self.state.with_verification(verify);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.state = self.state.with_cap(cap);
        self
    }

    pub fn antimorphism(&self) -> &Antimorphism {
        self.state.antimorphism()
    }

    /// Everything generated so far (possibly longer than the last request).
    pub fn buffer(&self) -> &[Letter] {
        self.state.buffer()
    }

    pub fn len(&self) -> usize {
        self.state.len()
    }

    pub fn is_empty(&self) -> bool {
        self.state.is_empty()
    }

    /// Number of directive letters consumed.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    fn next_directive_letter(&self) -> Result<Option<Letter>> {
        let k = self.consumed;
        Ok(match &self.source {
            Source::Finite(w) => w.get(k).copied(),
            Source::Periodic { prefix, period } => Some(match k.checked_sub(prefix.len()) {
                None => prefix[k],
                Some(j) => period[j % period.len()],
            }),
            Source::SelfDirected { seed } => match seed.get(k) {
                Some(&l) => Some(l),
                None => match self.buffer().get(k) {
                    Some(&l) => Some(l),
                    None => return Err(Error::DirectiveStalled { consumed: k }),
                },
            },
        })
    }

    /// Consumes one directive letter. Returns `false` once a finite directive is used up.
    pub fn step(&mut self) -> Result<bool> {
        let Some(letter) = self.next_directive_letter()? else {
            return Ok(false);
        };
        self.state.extend(letter)?;
        self.consumed += 1;
        if let Source::SelfDirected { seed } = &self.source {
            if self.consumed == seed.len() && !self.buffer().starts_with(seed) {
                let alphabet = self.antimorphism().alphabet();
                return Err(Error::InconsistentSeed {
                    seed: Word::from_trusted(alphabet, seed.clone()).to_string(),
                    closure: self.state.snapshot().to_string(),
                });
            }
        }
        Ok(true)
    }

    /// Generates until at least `m` letters exist; `false` if the directive ran out first.
    pub fn fill(&mut self, m: usize) -> Result<bool> {
        while self.len() < m {
            if !self.step()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The length-`m` prefix of `IPal_V(d)`.
    ///
    /// For a finite directive whose `Pal_V` is shorter than `m` this fails with
    /// [`Error::Exhausted`] carrying the full `Pal_V` value.
    pub fn request(&mut self, m: usize) -> Result<Word> {
        let alphabet = self.antimorphism().alphabet().clone();
        if !self.fill(m)? {
            return Err(Error::Exhausted {
                full: Box::new(self.state.snapshot()),
            });
        }
        Ok(Word::from_trusted(&alphabet, self.buffer()[..m].to_vec()))
    }

    /// Consumes the remaining directive. Only terminates for finite directives.
    pub fn finish(&mut self) -> Result<Word> {
        if !matches!(self.source, Source::Finite(_)) {
            return Err(Error::NotForFamily(
                "only a finite directive can be run to completion",
            ));
        }
        while self.step()? {}
        Ok(self.state.snapshot())
    }
}
