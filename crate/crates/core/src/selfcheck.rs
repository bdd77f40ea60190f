//! Seeded randomized cross-checks of the fast paths against their oracles.
//!
//! Runs in release builds too, so the CLI can confirm an installed binary.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::antimorphism::Antimorphism;
use crate::closure::{naive, pal_v, ClosureState};
use crate::error::Result;
use crate::fixed_points::{fixed_point_prefix, verify_fixed_point, Family, FamilyKind};
use crate::words::{Alphabet, Letter, Word};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfCheckConfig {
    pub seed: u64,
    /// Random letter sequences fed to the suffix index.
    pub sequences: usize,
    pub max_len: usize,
    /// Random directives for the `Pal_V = μ_V ∘ Pal` check.
    pub bridge_cases: usize,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig {
            seed: DEFAULT_SEED,
            sequences: 300,
            max_len: 200,
            bridge_cases: 300,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.cases += 1;
        if let Err(msg) = outcome {
            self.failures += 1;
            self.first_failure.get_or_insert(msg);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// A random involutive letter permutation on 1 to 5 letters.
pub fn random_antimorphism(rng: &mut impl Rng) -> Antimorphism {
    let k = rng.gen_range(1..=5usize);
    let alphabet = Alphabet::parse(&"abcde"[..k]).expect("static alphabet");
    let mut order: Vec<u8> = (0..k as u8).collect();
    order.shuffle(rng);
    let mut tau: Vec<Letter> = (0..k as u8).map(Letter::new).collect();
    for pair in order.chunks(2) {
        if let [x, y] = *pair {
            if rng.gen_bool(0.6) {
                tau[x as usize] = Letter::new(y);
                tau[y as usize] = Letter::new(x);
            }
        }
    }
    Antimorphism::new(&alphabet, tau).expect("constructed as an involution")
}

fn random_letters(rng: &mut impl Rng, alphabet_len: usize, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| Letter::new(rng.gen_range(0..alphabet_len) as u8))
        .collect()
}

/// Suffix index against the quadratic scan, on raw appends and closure steps.
pub fn oracle_equivalence(rng: &mut impl Rng, sequences: usize, max_len: usize) -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("oracle-equivalence");
    for _ in 0..sequences {
        let v = random_antimorphism(rng);
        let mut state = ClosureState::new(&v).with_cap(max_len.max(1) * 8);
        let mut outcome = Ok(());
        while state.len() < max_len {
            let a = Letter::new(rng.gen_range(0..v.alphabet().len()) as u8);
            let step = if rng.gen_bool(0.3) {
                state.extend(a)
            } else {
                state.push(a)
            };
            if step.is_err() {
                break;
            }
            let fast = state.longest_v_pal_suffix().expect("verification is off");
            let slow = naive::longest_v_pal_suffix(&v, state.buffer());
            if fast != slow {
                outcome = Err(format!(
                    "V={v}: {} -> index {fast}, naive {slow}",
                    state.snapshot()
                ));
                break;
            }
        }
        suite.record(outcome);
    }
    suite
}

/// `Pal_V(w) = μ_V(Pal(w))` on random directives.
pub fn mu_bridge(rng: &mut impl Rng, cases: usize) -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("mu-bridge");
    for _ in 0..cases {
        let v = random_antimorphism(rng);
        let len = rng.gen_range(0..=9);
        let w = Word::from_trusted(v.alphabet(), random_letters(rng, v.alphabet().len(), len));
        suite.record(check_bridge(&w, &v).unwrap_or_else(|e| Err(e.to_string())));
    }
    suite
}

fn check_bridge(w: &Word, v: &Antimorphism) -> Result<std::result::Result<(), String>> {
    let direct = pal_v(w, v)?;
    let bridged = v.mu(&pal_v(w, &v.underlying_reversal())?)?;
    Ok(if direct == bridged {
        Ok(())
    } else {
        Err(format!("V={v}, w={w}: Pal_V={direct}, mu(Pal)={bridged}"))
    })
}

/// Every family prefix is a prefix of its own `IPal_V`.
pub fn fixed_point_consistency(rng: &mut impl Rng, cases: usize) -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("fixed-point-consistency");
    for _ in 0..cases {
        let kind = *[
            FamilyKind::Reversal,
            FamilyKind::Exchange,
            FamilyKind::Hybrid,
            FamilyKind::Trivial,
        ]
        .choose(rng)
        .expect("nonempty");
        let n = if kind == FamilyKind::Exchange {
            1
        } else {
            rng.gen_range(1..=4)
        };
        let alphabet = Alphabet::parse(if kind == FamilyKind::Hybrid {
            "abc"
        } else {
            "ab"
        })
        .expect("static");
        let m = rng.gen_range(1..=2000);
        let outcome = Family::standard_with_n(kind, n, &alphabet)
            .and_then(|f| {
                let w = fixed_point_prefix(&f, m)?;
                Ok((f.clone(), verify_fixed_point(&w, &f.antimorphism())?))
            })
            .map_err(|e| e.to_string())
            .and_then(|(f, report)| match report.is_consistent {
                true => Ok(()),
                false => Err(format!(
                    "{f}, length {m}: mismatch at {:?}",
                    report.first_mismatch
                )),
            });
        suite.record(outcome);
    }
    suite
}

pub fn run_all(config: &SelfCheckConfig) -> Vec<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    vec![
        oracle_equivalence(&mut rng, config.sequences, config.max_len),
        mu_bridge(&mut rng, config.bridge_cases),
        fixed_point_consistency(&mut rng, config.bridge_cases / 10 + 1),
    ]
}
