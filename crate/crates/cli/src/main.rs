use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use pseudopal_core::analysis::{self, PeriodEvidence};
use pseudopal_core::fixed_points::FixedPointReport;
use pseudopal_core::selfcheck::{self, SelfCheckConfig};
use pseudopal_core::slope::{self, ContinuedFraction};
use pseudopal_core::{
    companion_word, fixed_point_prefix, ipal_v_stream, v_closure, verify_fixed_point, Alphabet,
    DirectiveSpec, Family, FamilyKind,
};

mod input;
mod report;

use report::{word_line, word_value, Report};

const EXIT_INVALID: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pseudopal_core::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Parser)]
#[command(
    name = "pseudopal",
    version,
    about = "Iterated pseudopalindromic closure toolkit"
)]
struct Cli {
    /// Emit a JSON report instead of plain lines.
    #[arg(long, global = true)]
    json: bool,
    /// Print words of any length in full.
    #[arg(long, global = true)]
    raw: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shortest V-palindrome with the given prefix.
    Closure(ClosureArgs),
    /// Iterated closure Pal_V of a finite directive, or a prefix of IPal_V.
    Pal(PalArgs),
    /// Prefix of a fixed point of IPal_V (or of its companion word).
    Fixpoint(FixpointArgs),
    /// Check that a word is a prefix of IPal_V of itself.
    Verify(VerifyArgs),
    /// Run a word analyzer.
    Analyze(AnalyzeArgs),
    /// Continued fraction of the slope directed by a binary word.
    Slope(SlopeArgs),
    /// Seeded randomized cross-checks.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args)]
struct VArgs {
    /// R, E, H or pairs like a:a,b:c,c:b (omitted letters are fixed).
    #[arg(long)]
    tau: Option<String>,
    /// Alphabet symbols in order; inferred from --tau and the input when omitted.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Args)]
struct ClosureArgs {
    #[command(flatten)]
    v: VArgs,
    /// The word, or - for standard input.
    #[arg(long)]
    word: String,
}

#[derive(Args)]
struct PalArgs {
    #[command(flatten)]
    v: VArgs,
    /// `abcab` or `ab(ba)^w`.
    #[arg(long)]
    directive: String,
    /// Prefix length; required for periodic directives.
    #[arg(long)]
    length: Option<usize>,
    /// Cross-check the suffix index against the naive scan at every step.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct FixpointArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyKind,
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long)]
    length: usize,
    /// Emit IPal of the fixed point instead (E and H only).
    #[arg(long)]
    companion: bool,
}

#[derive(Args)]
#[group(id = "source", required = true, args = ["word", "input"])]
struct VerifyArgs {
    #[command(flatten)]
    v: VArgs,
    #[arg(long)]
    word: Option<String>,
    /// File holding the word, or - for standard input.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Analyzer {
    Powers,
    Balance,
    Complexity,
    Freq,
    Period,
    Palprefix,
}

impl Analyzer {
    fn name(self) -> &'static str {
        match self {
            Analyzer::Powers => "powers",
            Analyzer::Balance => "balance",
            Analyzer::Complexity => "complexity",
            Analyzer::Freq => "freq",
            Analyzer::Period => "period",
            Analyzer::Palprefix => "palprefix",
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(value_enum)]
    analyzer: Analyzer,
    /// File holding the word, or - for standard input.
    #[arg(long)]
    input: String,
    #[arg(long)]
    alphabet: Option<String>,
    /// Factor length for `complexity`.
    #[arg(long)]
    n: Option<usize>,
    /// Also test k-power-freeness (`powers`).
    #[arg(long)]
    k: Option<u32>,
    /// `period`: accept evidence anywhere in the prefix, not only in its first half.
    #[arg(long)]
    lax: bool,
}

#[derive(Args)]
#[group(id = "directive_source", required = true, args = ["directive", "directive_from_fixpoint"])]
struct SlopeArgs {
    /// Binary directive spec or a file holding one.
    #[arg(long)]
    directive: Option<String>,
    /// Use the fixed point of a family as directive.
    #[arg(long, value_parser = parse_family)]
    directive_from_fixpoint: Option<FamilyKind>,
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long, default_value = "ab")]
    alphabet: String,
    /// Print quotients a0..=aK.
    #[arg(long, default_value_t = 8)]
    terms: usize,
    /// Also print the convergent p_K/q_K.
    #[arg(long)]
    convergent: Option<usize>,
    /// Count the last quotient of a finite directive even though its run may continue.
    #[arg(long)]
    include_provisional: bool,
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = selfcheck::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = SelfCheckConfig::default().sequences)]
    sequences: usize,
    #[arg(long, default_value_t = SelfCheckConfig::default().max_len)]
    max_len: usize,
    #[arg(long, default_value_t = SelfCheckConfig::default().bridge_cases)]
    cases: usize,
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    FamilyKind::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok((report, ok)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                );
            } else {
                report.lines.iter().for_each(|l| println!("{l}"));
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

/// The report plus whether the command's own check passed.
fn run(cli: &Cli) -> Result<(Report, bool), CliError> {
    let raw = cli.raw;
    Ok(match &cli.command {
        Command::Closure(args) => (closure_cmd(args, raw)?, true),
        Command::Pal(args) => (pal_cmd(args, raw)?, true),
        Command::Fixpoint(args) => (fixpoint_cmd(args, raw)?, true),
        Command::Verify(args) => {
            let (report, consistent) = verify_cmd(args)?;
            (report, consistent)
        }
        Command::Analyze(args) => (analyze_cmd(args, raw)?, true),
        Command::Slope(args) => (slope_cmd(args)?, true),
        Command::Selfcheck(args) => selfcheck_cmd(args),
    })
}

fn closure_cmd(args: &ClosureArgs, raw: bool) -> Result<Report, CliError> {
    let text = input::word_text(&args.word)?;
    let pairs = input::tau_pairs(args.v.tau.as_deref())?;
    let alphabet = input::alphabet(args.v.alphabet.as_deref(), &pairs, &[&text])?;
    let v = input::antimorphism(&alphabet, &pairs)?;
    let w = input::word(&alphabet, &text)?;
    let closed = v_closure(&w, &v)?;
    let inputs = json!({ "tau": v.to_string(), "alphabet": alphabet.to_string(), "word": word_value(&w, raw) });
    let result = json!({ "word": word_value(&closed, raw), "length": closed.len() });
    Ok(Report::new("closure", inputs, result).line(word_line(&closed, raw)))
}

fn pal_cmd(args: &PalArgs, raw: bool) -> Result<Report, CliError> {
    let spec = input::spec_text(&args.directive)?;
    let pairs = input::tau_pairs(args.v.tau.as_deref())?;
    let alphabet = input::alphabet(
        args.v.alphabet.as_deref(),
        &pairs,
        &[&input::directive_symbols(&spec)],
    )?;
    let v = input::antimorphism(&alphabet, &pairs)?;
    let d = DirectiveSpec::parse(&alphabet, &spec)?;
    let cap = input::max_len()?;
    let inputs = json!({
        "tau": v.to_string(),
        "alphabet": alphabet.to_string(),
        "directive": d.to_string(),
        "length": args.length,
        "verify": args.verify,
    });
    let (w, consumed) = match (args.length, &d) {
        (None, DirectiveSpec::Finite(_)) => {
            let mut s = ipal_v_stream(&d, &v)?
                .with_verification(args.verify)
                .with_cap(cap);
            (s.finish()?, s.consumed())
        }
        (None, _) => {
            return Err(CliError::Invalid(
                "an infinite directive needs --length".into(),
            ))
        }
        (Some(m), _) => {
            input::check_length(m)?;
            let mut s = ipal_v_stream(&d, &v)?
                .with_verification(args.verify)
                .with_cap(cap.saturating_mul(2).saturating_add(2));
            (s.request(m)?, s.consumed())
        }
    };
    let result = json!({ "word": word_value(&w, raw), "length": w.len(), "directive_letters_consumed": consumed });
    Ok(Report::new("pal", inputs, result).line(word_line(&w, raw)))
}

fn family(kind: FamilyKind, n: u32, alphabet: Option<&str>) -> Result<Family, CliError> {
    let default = if kind == FamilyKind::Hybrid {
        "abc"
    } else {
        "ab"
    };
    let alphabet = Alphabet::parse(alphabet.unwrap_or(default))?;
    Ok(Family::standard_with_n(kind, n, &alphabet)?)
}

fn fixpoint_cmd(args: &FixpointArgs, raw: bool) -> Result<Report, CliError> {
    let m = input::check_length(args.length)?;
    let f = family(args.family, args.n, args.alphabet.as_deref())?;
    let w = if args.companion {
        companion_word(&f, m)?
    } else {
        fixed_point_prefix(&f, m)?
    };
    let inputs = json!({
        "family": f.kind(),
        "n": f.n(),
        "alphabet": f.alphabet().to_string(),
        "length": m,
        "companion": args.companion,
    });
    let result = json!({
        "family": f.to_string(),
        "n": f.n(),
        "length": w.len(),
        "word": word_value(&w, raw),
        "tau": f.antimorphism().to_string(),
    });
    Ok(Report::new("fixpoint", inputs, result).line(word_line(&w, raw)))
}

fn verify_cmd(args: &VerifyArgs) -> Result<(Report, bool), CliError> {
    let text = match (&args.word, &args.input) {
        (Some(w), _) => input::word_text(w)?,
        (None, Some(path)) => input::file_text(path)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    let pairs = input::tau_pairs(args.v.tau.as_deref())?;
    let alphabet = input::alphabet(args.v.alphabet.as_deref(), &pairs, &[&text])?;
    let v = input::antimorphism(&alphabet, &pairs)?;
    let w = input::word(&alphabet, &text)?;
    let FixedPointReport {
        is_consistent,
        checked_length,
        first_mismatch,
    } = verify_fixed_point(&w, &v)?;
    let inputs =
        json!({ "tau": v.to_string(), "alphabet": alphabet.to_string(), "length": w.len() });
    let result = json!({
        "is_consistent": is_consistent,
        "checked_length": checked_length,
        "first_mismatch": first_mismatch,
    });
    let mut report = Report::new("verify", inputs, result).line(if is_consistent {
        "consistent"
    } else {
        "inconsistent"
    });
    if let Some(i) = first_mismatch {
        report = report.line(format!("first_mismatch={i}"));
    }
    Ok((report, is_consistent))
}

fn analyze_cmd(args: &AnalyzeArgs, raw: bool) -> Result<Report, CliError> {
    let text = input::file_text(&args.input)?;
    let alphabet = input::alphabet(args.alphabet.as_deref(), &[], &[&text])?;
    let w = input::word(&alphabet, &text)?;
    let n = w.len();
    let symbol = |l| alphabet.symbol(l).to_string();
    let mut inputs = json!({ "input": args.input, "alphabet": alphabet.to_string() });
    let mut witness = Value::Null;
    let mut lines = Vec::new();
    let mut prefix_scoped = false;
    let result = match args.analyzer {
        Analyzer::Powers => {
            let r = analysis::max_integer_power(&w)?;
            witness = json!({ "root": word_value(&r.root, raw), "position": r.position, "power": r.max_power });
            lines.push(format!("max_power={}", r.max_power));
            lines.push(format!(
                "root={} position={}",
                word_line(&r.root, raw),
                r.position
            ));
            let mut result =
                json!({ "max_power": r.max_power, "searched_length": r.searched_length });
            if let Some(k) = args.k {
                inputs["k"] = json!(k);
                let f = analysis::is_k_power_free(&w, k)?;
                lines.push(format!("{k}-power-free={}", f.power_free));
                result["power_free"] = json!({
                    "k": k,
                    "free": f.power_free,
                    "witness": f.witness.map(|(u, at)| json!({ "root": word_value(&u, raw), "position": at })),
                });
            }
            result
        }
        Analyzer::Balance => {
            let r = analysis::is_balanced(&w)?;
            lines.push(format!("balanced={}", r.balanced));
            if let Some(b) = &r.witness {
                lines.push(format!(
                    "heavy={} light={} letter={}",
                    b.heavy,
                    b.light,
                    symbol(b.letter)
                ));
                witness = json!({
                    "heavy": word_value(&b.heavy, raw),
                    "light": word_value(&b.light, raw),
                    "letter": symbol(b.letter),
                    "heavy_position": b.heavy_position,
                    "light_position": b.light_position,
                });
            }
            json!({ "balanced": r.balanced })
        }
        Analyzer::Complexity => {
            let k = args
                .n
                .ok_or_else(|| CliError::Invalid("complexity needs --n".into()))?;
            inputs["n"] = json!(k);
            let p = analysis::factor_complexity(&w, k)?;
            let trusted = analysis::complexity_is_trusted(n, k);
            if !trusted {
                eprintln!("note: n={k} exceeds half the input length; p(n) may undercount the infinite word");
            }
            lines.push(p.to_string());
            json!({ "n": k, "complexity": p, "trusted": trusted })
        }
        Analyzer::Freq => {
            let f = analysis::letter_frequencies(&w)?;
            let mut exact = serde_json::Map::new();
            let mut approx = serde_json::Map::new();
            for (l, q) in &f {
                lines.push(format!("{}={q}", symbol(*l)));
                exact.insert(symbol(*l), json!(q.to_string()));
                approx.insert(symbol(*l), json!(q.to_f64()));
            }
            json!({ "frequencies": exact, "approx": approx })
        }
        Analyzer::Period => {
            prefix_scoped = true;
            let rule = PeriodEvidence {
                confirm_on_half: !args.lax,
                ..PeriodEvidence::default()
            };
            inputs["lax"] = json!(args.lax);
            match analysis::detect_ultimate_period_with(&w, rule)? {
                Some(p) => {
                    lines.push(format!("preperiod={} period={}", p.preperiod, p.period));
                    json!({ "found": true, "preperiod": p.preperiod, "period": p.period })
                }
                None => {
                    lines.push("none".into());
                    json!({ "found": false })
                }
            }
        }
        Analyzer::Palprefix => {
            let lengths = analysis::palindromic_prefixes(w.letters());
            lines.push(join(&lengths));
            json!({ "lengths": lengths })
        }
    };
    let mut report = Report::new("analyze", inputs, result)
        .with("analyzer", json!(args.analyzer.name()))
        .with("input_length", json!(n))
        .with("witness", witness);
    if prefix_scoped {
        report = report.prefix_scoped(n);
    }
    report.lines = lines;
    Ok(report)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Quotients of a self-directed fixed point, growing the prefix until enough are final.
fn fixpoint_cf(f: &Family, wanted: usize) -> Result<(ContinuedFraction, usize), CliError> {
    let cap = input::max_len()?;
    let mut m = 1024.min(cap);
    loop {
        let w = fixed_point_prefix(f, m)?;
        let cf = slope::directive_to_cf(&w)?;
        if cf.quotients.len() > wanted || m == cap {
            return Ok((cf, m));
        }
        m = m.saturating_mul(4).min(cap);
    }
}

fn slope_cmd(args: &SlopeArgs) -> Result<Report, CliError> {
    let alphabet = Alphabet::parse(&args.alphabet)?;
    let wanted = args.terms.max(args.convergent.unwrap_or(0)) + 2;
    let mut inputs = json!({
        "terms": args.terms,
        "convergent": args.convergent,
        "include_provisional": args.include_provisional,
        "alphabet": alphabet.to_string(),
    });
    let (mut cf, analyzed) = match (&args.directive, args.directive_from_fixpoint) {
        (Some(spec), _) => {
            let spec = input::spec_text(spec)?;
            let d = DirectiveSpec::parse(&alphabet, &spec)?;
            inputs["directive"] = json!(d.to_string());
            match d {
                DirectiveSpec::Finite(w) => (slope::directive_to_cf(&w)?, Some(w.len())),
                DirectiveSpec::EventuallyPeriodic { prefix, period } => {
                    (slope::periodic_directive_to_cf(&prefix, &period)?, None)
                }
                DirectiveSpec::Family(_) => unreachable!("not produced by the parser"),
            }
        }
        (None, Some(kind)) => {
            let f = family(kind, args.n, Some(&args.alphabet))?;
            inputs["directive"] = json!(format!("fixpoint:{f}"));
            let (cf, m) = fixpoint_cf(&f, wanted)?;
            (cf, Some(m))
        }
        (None, None) => unreachable!("clap requires one source"),
    };
    let provisional = cf
        .provisional_last
        .then(|| *cf.quotients.last().expect("a0 is always present"));
    if cf.provisional_last && !args.include_provisional {
        cf.quotients.pop();
        cf.provisional_last = false;
    }
    let quotients = cf.terms(args.terms)?;
    let mut lines = vec![join(&quotients)];
    let mut result = json!({
        "quotients": quotients,
        "head": cf.quotients,
        "period": cf.period,
        "provisional_quotient": provisional,
        "provisional_included": args.include_provisional && provisional.is_some(),
    });
    if let Some(k) = args.convergent {
        let c = slope::cf_convergent(&cf, k)?;
        lines.push(c.to_string());
        result["convergent"] = json!({ "k": k, "value": c.to_string() });
    }
    if let Ok(max) = slope::quotient_bound_check(&cf, true) {
        result["max_quotient"] = json!(max);
        result["predicted_power_free_exponent"] = json!(slope::predicted_power_free_exponent(max));
    }
    result["sturm"] = match slope::sturm_form(&cf) {
        Ok(form) => json!({ "applicable": true, "is_sturm_number": form.is_some(), "form": form }),
        Err(_) => json!({ "applicable": false }),
    };
    let mut report = Report::new("slope", inputs, result);
    if let Some(len) = analyzed {
        report = report.prefix_scoped(len);
    }
    report.lines = lines;
    Ok(report)
}

fn selfcheck_cmd(args: &SelfcheckArgs) -> (Report, bool) {
    let config = SelfCheckConfig {
        seed: args.seed,
        sequences: args.sequences,
        max_len: args.max_len,
        bridge_cases: args.cases,
    };
    let suites = selfcheck::run_all(&config);
    let ok = suites.iter().all(|s| s.passed());
    let lines = suites
        .iter()
        .map(|s| {
            let verdict = if s.passed() { "PASS" } else { "FAIL" };
            match &s.first_failure {
                Some(why) => format!(
                    "{verdict} {} ({}/{} failed): {why}",
                    s.name, s.failures, s.cases
                ),
                None => format!("{verdict} {} ({} cases)", s.name, s.cases),
            }
        })
        .collect();
    let inputs = json!({
        "seed": args.seed,
        "sequences": args.sequences,
        "max_len": args.max_len,
        "cases": args.cases,
    });
    let mut report = Report::new(
        "selfcheck",
        inputs,
        json!({ "passed": ok, "suites": suites }),
    );
    report.lines = lines;
    (report, ok)
}
