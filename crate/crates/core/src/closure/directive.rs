use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fixed_points::Family;
use crate::words::{Alphabet, Word};

/// Where the directive letters of `IPal_V` come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectiveSpec {
    Finite(Word),
    /// `prefix · period^ω`.
    EventuallyPeriodic {
        prefix: Word,
        period: Word,
    },
    /// The fixed point of the family directs itself.
    Family(Family),
}

impl DirectiveSpec {
    pub fn eventually_periodic(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        period.ensure_alphabet(prefix.alphabet())?;
        Ok(DirectiveSpec::EventuallyPeriodic { prefix, period })
    }

    /// Parses `abcab` (finite) or `ab(ba)^w` / `ab(ba)^ω` (eventually periodic).
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let malformed = |reason| Error::MalformedDirective {
            spec: text.to_string(),
            reason,
        };
        let text = text.trim();
        let Some(open) = text.find('(') else {
            return Ok(DirectiveSpec::Finite(Word::parse(alphabet, text)?));
        };
        let body = text
            .strip_suffix(")^w")
            .or_else(|| text.strip_suffix(")^ω"))
            .ok_or_else(|| malformed("periodic part must end with )^w"))?;
        let period = body
            .get(open + 1..)
            .ok_or_else(|| malformed("unbalanced parentheses"))?;
        if period.contains(['(', ')']) {
            return Err(malformed("only one periodic block is allowed"));
        }
        let prefix = Word::parse(alphabet, &text[..open])?;
        let period = Word::parse(alphabet, period)?;
        Self::eventually_periodic(prefix, period)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        match self {
            DirectiveSpec::Finite(w) => w.alphabet(),
            DirectiveSpec::EventuallyPeriodic { prefix, .. } => prefix.alphabet(),
            DirectiveSpec::Family(f) => f.alphabet(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, DirectiveSpec::Finite(_))
    }
}

impl fmt::Display for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectiveSpec::Finite(w) => write!(f, "{w}"),
            DirectiveSpec::EventuallyPeriodic { prefix, period } => {
                write!(f, "{prefix}({period})^w")
            }
            DirectiveSpec::Family(family) => write!(f, "fixpoint:{family}"),
        }
    }
}
