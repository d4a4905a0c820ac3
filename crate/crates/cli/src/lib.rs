//! Command-line front end for the `vtcodes` library.
//!
//! [`run`] parses arguments and returns the exit status and output instead
//! of printing, so the binary and the tests share one code path.
//!
//! Exit status: 0 on success, 1 when a word is uncorrectable, inconsistent,
//! not a codeword, or a verification fails, 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use vtcodes::adversary::{decode_errors, decode_single_error, decode_single_error_scan};
use vtcodes::bounds::{
    aq_lower_bound, cor34_interval, cor35_interval, cor37_admissible, generate_table,
    redundancy_upper_bound, LengthMode, LinearBaseline, Provenance,
};
use vtcodes::channel::corrupt;
use vtcodes::code::{best_offset_search, format_symbols, is_codeword, syndrome_profile};
use vtcodes::erasure::decode_erasures;
use vtcodes::oracle::{distance_check, exhaustive_decode_check, partition_check, DecodeMode, VerificationReport};
use vtcodes::{CodeSpec, Error, OffsetVector, Word, DEFAULT_ENUMERATION_BUDGET};

/// Environment variable overriding the enumeration budget.
pub const BUDGET_ENV: &str = "VTCODES_ENUM_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "vtcodes", version, about = "Checksum block codes: membership, decoding, bounds and verification")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test words for membership in C_d(b).
    Check(WordCmd),
    /// Decode words: erasures ("?") or substitution errors.
    Decode(DecodeCmd),
    /// Corrupt a word with seeded erasures and substitutions.
    Corrupt(CorruptCmd),
    /// Redundancy upper bound and size lower bound for one (q, n, d).
    Bounds(BoundsCmd),
    /// Redundancy comparison table against linear-code baselines.
    Tables(TablesCmd),
    /// Length intervals where the codes beat linear codes.
    Intervals(IntervalsCmd),
    /// Find the offset b with the largest coset.
    SearchB(SearchCmd),
    /// Exhaustive verification on small parameters.
    Verify(VerifyCmd),
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Args)]
pub struct WordInput {
    /// Word as comma-separated symbols, "?" for an erasure.
    #[arg(long, conflicts_with = "input")]
    pub word: Option<String>,
    /// File with one word per line.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WordCmd {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Offset vector "b0,b1,..." (default all zero).
    #[arg(long)]
    pub b: Option<String>,
    #[command(flatten)]
    pub words: WordInput,
}

#[derive(Debug, Args)]
pub struct DecodeCmd {
    #[command(flatten)]
    pub inner: WordCmd,
    /// Use the exhaustive position/symbol scan for single errors.
    #[arg(long)]
    pub scan: bool,
}

#[derive(Debug, Args)]
pub struct CorruptCmd {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub word: String,
    #[arg(long, default_value_t = 0)]
    pub erasures: usize,
    #[arg(long, default_value_t = 0)]
    pub errors: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BoundsCmd {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub d: u64,
    /// Prime to use instead of the smallest prime >= max(n, q).
    #[arg(long)]
    pub ell: Option<u64>,
    /// Extra baseline file with records "q n d rL".
    #[arg(long)]
    pub baseline: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TablesCmd {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub d: u64,
    /// First length (default: lengths with a known baseline).
    #[arg(long, requires = "to")]
    pub from: Option<u64>,
    /// Last length, inclusive.
    #[arg(long, requires = "from")]
    pub to: Option<u64>,
    #[arg(long)]
    pub baseline: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IntervalsCmd {
    #[arg(long)]
    pub q: u64,
    /// Also list admissible lengths for this distance.
    #[arg(long)]
    pub d: Option<u64>,
    /// Allow any length, bounding ℓ by 2n instead of requiring n prime.
    #[arg(long)]
    pub doubled: bool,
}

#[derive(Debug, Args)]
pub struct SearchCmd {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    All,
    Distance,
    Partition,
    Erasure,
    SingleError,
    MultiError,
}

#[derive(Debug, Args)]
pub struct VerifyCmd {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Restrict decoder checks to one coset (default: every coset).
    #[arg(long)]
    pub b: Option<String>,
    #[arg(long, value_enum, default_value_t = Property::All)]
    pub property: Property,
    #[arg(long)]
    pub budget: Option<u64>,
}

/// Exit status with captured output.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

struct Ctx {
    format: Format,
    budget: u64,
    out: Outcome,
}

impl Ctx {
    fn line(&mut self, text: impl std::fmt::Display) {
        let _ = writeln!(self.out.stdout, "{text}");
    }

    fn record(&mut self, value: impl Serialize) {
        let text = serde_json::to_string(&value).expect("records serialize");
        self.line(text);
    }

    fn note(&mut self, text: impl std::fmt::Display) {
        let _ = writeln!(self.out.stderr, "{text}");
    }

    fn fail(&mut self) {
        self.out.status = self.out.status.max(1);
    }
}

/// Parses `args` (including the program name) and runs the command.
/// `env_budget` is the raw value of [`BUDGET_ENV`], if set.
pub fn run_args<I, T>(args: I, env_budget: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, env_budget),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(cli: Cli, env_budget: Option<&str>) -> Outcome {
    let budget = match env_budget.map(str::parse::<u64>) {
        None => DEFAULT_ENUMERATION_BUDGET,
        Some(Ok(b)) => b,
        Some(Err(_)) => return Outcome::usage(format!("{BUDGET_ENV} must be a nonnegative integer")),
    };
    let mut ctx = Ctx {
        format: cli.format,
        budget,
        out: Outcome::default(),
    };
    let result = match cli.command {
        Command::Check(c) => cmd_check(&mut ctx, c),
        Command::Decode(c) => cmd_decode(&mut ctx, c),
        Command::Corrupt(c) => cmd_corrupt(&mut ctx, c),
        Command::Bounds(c) => cmd_bounds(&mut ctx, c),
        Command::Tables(c) => cmd_tables(&mut ctx, c),
        Command::Intervals(c) => cmd_intervals(&mut ctx, c),
        Command::SearchB(c) => cmd_search(&mut ctx, c),
        Command::Verify(c) => cmd_verify(&mut ctx, c),
    };
    match result {
        Ok(()) => ctx.out,
        Err(e) => {
            let mut out = Outcome::usage(e);
            out.stdout = ctx.out.stdout;
            out
        }
    }
}

fn spec_from(args: &CodeArgs) -> Result<CodeSpec, Error> {
    CodeSpec::new(args.q, args.n, args.d)
}

fn offset_from(spec: &CodeSpec, b: Option<&str>) -> Result<OffsetVector, Error> {
    match b {
        Some(text) => OffsetVector::parse(spec, text),
        None => Ok(OffsetVector::zero(spec)),
    }
}

fn read_words(input: &WordInput) -> Result<Vec<Word>, Error> {
    match (&input.word, &input.input) {
        (Some(w), _) => Ok(vec![w.parse()?]),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::parse)
                .collect()
        }
        (None, None) => Err(Error::InvalidParameter {
            name: "word",
            reason: "one of --word or --input is required".into(),
        }),
    }
}

fn cmd_check(ctx: &mut Ctx, cmd: WordCmd) -> Result<(), Error> {
    let spec = spec_from(&cmd.code)?;
    let b = offset_from(&spec, cmd.b.as_deref())?;
    for word in read_words(&cmd.words)? {
        spec.validate_received(&word)?;
        let full = word.to_full()?;
        let member = is_codeword(&spec, &full, &b);
        if !member {
            ctx.fail();
        }
        match ctx.format {
            Format::Text => ctx.line(if member { "codeword" } else { "not a codeword" }),
            Format::Json => ctx.record(json!({
                "word": word.to_string(),
                "codeword": member,
                "profile": syndrome_profile(&spec, &full),
            })),
        }
    }
    Ok(())
}

fn cmd_decode(ctx: &mut Ctx, cmd: DecodeCmd) -> Result<(), Error> {
    let spec = spec_from(&cmd.inner.code)?;
    let b = offset_from(&spec, cmd.inner.b.as_deref())?;
    for word in read_words(&cmd.inner.words)? {
        spec.validate_received(&word)?;
        let (path, result) = if word.has_erasures() {
            ("erasure", decode_erasures(&spec, &word, &b))
        } else {
            let full = word.to_full()?;
            if spec.tau() == 1 {
                let r = if cmd.scan {
                    decode_single_error_scan(&spec, &full, &b)
                } else {
                    decode_single_error(&spec, &full, &b)
                };
                ("single-error", r)
            } else {
                ("multi-error", decode_errors(&spec, &full, &b))
            }
        };
        match result {
            Ok(decoded) => {
                let unchanged = word.to_full().map(|w| w == decoded).unwrap_or(false);
                let status = if unchanged { "unchanged" } else { "corrected" };
                match ctx.format {
                    Format::Text => {
                        ctx.line(format_symbols(&decoded));
                        ctx.note(status);
                    }
                    Format::Json => ctx.record(json!({
                        "input": word.to_string(),
                        "output": format_symbols(&decoded),
                        "status": status,
                        "path": path,
                    })),
                }
            }
            Err(e @ (Error::Uncorrectable(_) | Error::Inconsistent(_))) => {
                ctx.fail();
                let status = if matches!(e, Error::Uncorrectable(_)) {
                    "uncorrectable"
                } else {
                    "inconsistent"
                };
                match ctx.format {
                    Format::Text => {
                        ctx.line(status);
                        ctx.note(&e);
                    }
                    Format::Json => ctx.record(json!({
                        "input": word.to_string(),
                        "status": status,
                        "path": path,
                        "reason": e.to_string(),
                    })),
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn cmd_corrupt(ctx: &mut Ctx, cmd: CorruptCmd) -> Result<(), Error> {
    let word: Word = cmd.word.parse()?;
    let full = word.to_full()?;
    let out = corrupt(&full, cmd.q, cmd.erasures, cmd.errors, cmd.seed)?;
    match ctx.format {
        Format::Text => ctx.line(&out),
        Format::Json => ctx.record(json!({
            "input": word.to_string(),
            "output": out.to_string(),
            "seed": cmd.seed,
            "erasures": cmd.erasures,
            "errors": cmd.errors,
        })),
    }
    Ok(())
}

fn load_baseline(path: Option<&PathBuf>) -> Result<LinearBaseline, Error> {
    let mut baseline = LinearBaseline::bundled();
    if let Some(path) = path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        baseline.merge(LinearBaseline::parse(&text, Provenance::UserSupplied)?);
    }
    Ok(baseline)
}

fn cmd_bounds(ctx: &mut Ctx, cmd: BoundsCmd) -> Result<(), Error> {
    let red = redundancy_upper_bound(cmd.q, cmd.n, cmd.d, cmd.ell)?;
    let size = aq_lower_bound(cmd.q, cmd.n, cmd.d)?;
    let baseline = load_baseline(cmd.baseline.as_ref())?;
    let known = baseline.get(cmd.q, cmd.n, cmd.d);
    match ctx.format {
        Format::Text => ctx.line(&red),
        Format::Json => {
            let ell = match cmd.ell {
                Some(p) => p,
                None => vtcodes::modarith::smallest_prime_geq(cmd.q.max(cmd.n)),
            };
            ctx.record(json!({
                "q": cmd.q,
                "n": cmd.n,
                "d": cmd.d,
                "ell_used": ell,
                "redundancy_upper": red.to_string(),
                "size_lower_bound": size.to_string(),
                "size_lower_bound_floor": size.floor().to_string(),
                "linear_baseline": known.map(|(r, _)| r),
                "strict_improvement": known.map(|(r, _)| red.is_below(r)),
            }))
        }
    }
    Ok(())
}

fn cmd_tables(ctx: &mut Ctx, cmd: TablesCmd) -> Result<(), Error> {
    let baseline = load_baseline(cmd.baseline.as_ref())?;
    let lengths: Vec<u64> = match (cmd.from, cmd.to) {
        (Some(a), Some(b)) => (a..=b).collect(),
        _ => baseline.lengths(cmd.q, cmd.d),
    };
    if lengths.is_empty() {
        return Err(Error::InvalidParameter {
            name: "from",
            reason: format!("no baseline lengths for q={} d={}; give --from/--to", cmd.q, cmd.d),
        });
    }
    let rows = generate_table(cmd.q, cmd.d, lengths, &baseline)?;
    match ctx.format {
        Format::Text => {
            ctx.line(format!(
                "{:>4} {:>6} {:>3} {:>8} {:>6} {:>4} {:>8}  note",
                "q", "n", "d", "r_upper", "ell", "r^L", "improved"
            ));
            for r in &rows {
                let rl = r.linear_baseline.map_or("-".to_string(), |v| v.to_string());
                let imp = r.strict_improvement.map_or("-", |b| if b { "yes" } else { "no" });
                ctx.line(
                    format!(
                        "{:>4} {:>6} {:>3} {:>8} {:>6} {:>4} {:>8}  {}",
                        r.q,
                        r.n,
                        r.d,
                        r.redundancy_text(),
                        r.ell_used,
                        rl,
                        imp,
                        r.note.as_deref().unwrap_or("")
                    )
                    .trim_end(),
                );
            }
        }
        Format::Json => {
            for r in &rows {
                ctx.record(r);
            }
        }
    }
    Ok(())
}

fn cmd_intervals(ctx: &mut Ctx, cmd: IntervalsCmd) -> Result<(), Error> {
    let c34 = cor34_interval(cmd.q)?;
    let c35 = cor35_interval(cmd.q)?;
    let mode = if cmd.doubled {
        LengthMode::Doubled
    } else {
        LengthMode::Prime
    };
    let admissible = cmd.d.map(|d| cor37_admissible(cmd.q, d, mode)).transpose()?;
    let per_length = match &admissible {
        Some(a) => a
            .lengths
            .iter()
            .map(|&n| {
                let ell = match mode {
                    LengthMode::Prime => Some(n),
                    LengthMode::Doubled => None,
                };
                redundancy_upper_bound(cmd.q, n, a.d, ell).map(|r| (n, r.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    match ctx.format {
        Format::Text => {
            ctx.line(format!("d=3 defect-0 interval: {c34}"));
            ctx.line(format!("d=3 defect-1 interval: {c35}"));
            if let Some(a) = &admissible {
                ctx.line(format!(
                    "d={} admissible lengths (upper {}): {}",
                    a.d,
                    a.upper,
                    if a.lengths.is_empty() {
                        "none".to_string()
                    } else {
                        format_symbols(&a.lengths)
                    }
                ));
                for (n, r) in &per_length {
                    ctx.line(format!("  n={n} redundancy <= {r}"));
                }
            }
        }
        Format::Json => ctx.record(json!({
            "q": cmd.q,
            "defect0": { "lo": c34.lo, "hi": c34.hi, "empty": c34.is_empty() },
            "defect1": { "lo": c35.lo, "hi": c35.hi, "empty": c35.is_empty() },
            "admissible": admissible,
            "redundancy": per_length.iter().map(|(n, r)| json!({"n": n, "redundancy_upper": r})).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn cmd_search(ctx: &mut Ctx, cmd: SearchCmd) -> Result<(), Error> {
    let spec = spec_from(&cmd.code)?;
    let budget = cmd.budget.unwrap_or(ctx.budget);
    let (b, size) = best_offset_search(&spec, budget)?;
    let bound = aq_lower_bound(spec.q(), spec.n() as u64, spec.d() as u64)?;
    match ctx.format {
        Format::Text => ctx.line(format!("b={b} size={size} guaranteed={}", bound.ceil())),
        Format::Json => ctx.record(json!({
            "b": b,
            "size": size,
            "guaranteed": bound.ceil().to_string(),
            "average": bound.to_string(),
        })),
    }
    Ok(())
}

fn cmd_verify(ctx: &mut Ctx, cmd: VerifyCmd) -> Result<(), Error> {
    let spec = spec_from(&cmd.code)?;
    let budget = cmd.budget.unwrap_or(ctx.budget);
    let b = cmd.b.as_deref().map(|t| OffsetVector::parse(&spec, t)).transpose()?;
    let mut reports: Vec<VerificationReport> = Vec::new();
    let wants = |p: Property| cmd.property == Property::All || cmd.property == p;
    if wants(Property::Distance) {
        reports.push(distance_check(&spec, budget)?);
    }
    if wants(Property::Partition) {
        reports.push(partition_check(&spec, budget)?);
    }
    if wants(Property::Erasure) {
        reports.push(exhaustive_decode_check(&spec, b.as_ref(), DecodeMode::Erasure, budget)?);
    }
    let single_ok = spec.tau() == 1;
    if wants(Property::SingleError) && (single_ok || cmd.property == Property::SingleError) {
        reports.push(exhaustive_decode_check(&spec, b.as_ref(), DecodeMode::SingleError, budget)?);
    }
    if wants(Property::MultiError) && (!single_ok || cmd.property == Property::MultiError) {
        reports.push(exhaustive_decode_check(&spec, b.as_ref(), DecodeMode::MultiError, budget)?);
    }
    for r in reports {
        if !r.passed {
            ctx.fail();
        }
        match ctx.format {
            Format::Text => ctx.line(&r),
            Format::Json => ctx.record(&r),
        }
    }
    Ok(())
}
