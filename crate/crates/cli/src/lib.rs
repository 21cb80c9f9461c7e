//! Command-line front end for `grdiff-core`.
//!
//! Every verb produces a [`Report`] holding both renderings; the caller picks
//! one with `--output`. Exit codes: 0 on success whatever the verdict, 2 for
//! malformed input, 3 when an identity that must hold fails to verify.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use grdiff_core::{
    construct_exact, construct_exact_symmetric, decide_equivalent, equivalent_gaussian, ggr_set,
    limit_probe, mz_check, mz_set_check, n_times_check, peano_probe, recognize_gaussian,
    scale_partners, verify_quantum_ggr, FunctionOracle, PeanoEquivalence, ProbeConfig,
    ProbeReport, Scheme,
};

pub mod demo;
pub mod input;
pub mod render;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal failure: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<grdiff_core::Error> for CliError {
    fn from(e: grdiff_core::Error) -> Self {
        match e {
            grdiff_core::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputMode {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "grdiff",
    version,
    about = "Exact calculus of generalized Riemann differences")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,
    /// Run one command per line of FILE; `#` starts a comment.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact difference on a node set, symmetric pairs or a named family.
    Construct(ConstructArgs),
    /// Symmetrizer and skew-symmetrizer.
    Decompose {
        scheme: String,
        /// Reference order; defaults to the detected order.
        #[arg(long)]
        order: Option<usize>,
    },
    Scale {
        scheme: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    Equiv {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Gaussian recognition and Gaussian equivalence.
    Recognize {
        scheme: String,
        #[arg(long)]
        partners: bool,
    },
    MzCheck {
        scheme: String,
        #[arg(long)]
        symmetric: bool,
    },
    MzSet {
        #[arg(required = true)]
        schemes: Vec<String>,
    },
    Ggr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        reduced: bool,
    },
    Qggr {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        ell: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Chain check; entries are ORDER=cont or ORDER=SCHEME.
    Ntimes {
        #[arg(required = true)]
        entries: Vec<String>,
    },
    Probe(ProbeArgs),
    Demo {
        name: String,
    },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["pairs", "family"])]
    pub nodes: Option<String>,
    /// Positive pair nodes of a symmetric difference.
    #[arg(long, conflicts_with = "family")]
    pub pairs: Option<String>,
    /// Include the zero node (symmetric, even order).
    #[arg(long, requires = "pairs")]
    pub zero: bool,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, required_unless_present = "peano", conflicts_with = "peano")]
    pub scheme: Option<String>,
    /// Probe the tilde chain up to this order instead of one scheme.
    #[arg(long)]
    pub peano: Option<usize>,
    #[arg(long)]
    pub oracle: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub h0: Option<String>,
    #[arg(long)]
    pub ratios: Option<String>,
    #[arg(long)]
    pub jmin: Option<u32>,
    #[arg(long)]
    pub jmax: Option<u32>,
    #[arg(long)]
    pub tol: Option<f64>,
}

/// Both renderings of one command's result.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn new(json: Value, text: impl Into<String>) -> Self {
        Report {
            json,
            text: text.into(),
        }
    }

    pub fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Json => self.json.to_string(),
            OutputMode::Text => self.text.clone(),
        }
    }
}

pub(crate) fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn construct(a: &ConstructArgs) -> Result<Scheme, CliError> {
    if let Some(f) = &a.family {
        if a.order.is_some() {
            return Err(CliError::Input("--order is implied by --family".into()));
        }
        return input::scheme(f);
    }
    let n = a
        .order
        .ok_or_else(|| CliError::Input("--order is required with --nodes or --pairs".into()))?;
    match (&a.nodes, &a.pairs) {
        (Some(nodes), None) => Ok(construct_exact(&input::rationals(nodes)?, n)?),
        (None, Some(pairs)) => Ok(construct_exact_symmetric(&input::rationals(pairs)?, a.zero, n)?),
        _ => Err(CliError::Input("give one of --nodes, --pairs or --family".into())),
    }
}

fn probe_config(a: &ProbeArgs) -> Result<ProbeConfig, CliError> {
    let mut c = ProbeConfig::default();
    if let Some(h0) = &a.h0 {
        c.h0 = input::rational(h0)?;
    }
    if let Some(r) = &a.ratios {
        c.ratios = input::rationals(r)?;
    }
    if let Some(j) = a.jmin {
        c.jmin = j;
    }
    if let Some(j) = a.jmax {
        c.jmax = j;
    }
    if let Some(t) = a.tol {
        c.tol = t;
    }
    Ok(c)
}

fn probe_text(label: &str, r: &ProbeReport) -> String {
    format!("{label}: {} [{} samples, numeric evidence]", r.verdict, r.samples.len())
}

/// Executes one parsed command.
pub fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Construct(a) => {
            let s = construct(a)?;
            Ok(Report::new(to_json(&s), s.to_string()))
        }
        Command::Decompose { scheme, order } => {
            let s = input::scheme(scheme)?;
            let n = match order {
                Some(n) => *n,
                None => s.order()?,
            };
            let (plus, minus) = s.decompose(n);
            Ok(Report::new(
                json!({"order": n, "symmetrizer": to_json(&plus), "skew_symmetrizer": to_json(&minus)}),
                format!("order: {n}\nsymmetrizer: {plus}\nskew-symmetrizer: {minus}"),
            ))
        }
        Command::Scale { scheme, r } => {
            let s = input::scheme(scheme)?.scale(&input::rational(r)?)?;
            Ok(Report::new(to_json(&s), s.to_string()))
        }
        Command::Equiv { a, b } => {
            let v = decide_equivalent(&input::scheme(a)?, &input::scheme(b)?)?;
            let mut text = v.to_string();
            if v.normalized_inputs {
                text.push_str("\nnote: inputs were normalized first");
            }
            Ok(Report::new(to_json(&v), text))
        }
        Command::Recognize { scheme, partners } => {
            let s = input::scheme(scheme)?;
            let m = recognize_gaussian(&s);
            let eq = equivalent_gaussian(&s)?;
            let mut text = render::recognize_line(m.as_ref());
            text.push_str(&format!("\nequivalent-gaussian: {}", render::gaussian_equivalence(eq.as_ref())));
            let mut out = json!({"match": to_json(&m), "equivalent_gaussian": to_json(&eq)});
            if *partners {
                let list = match &m {
                    Some(m) => scale_partners(m)?,
                    None => Vec::new(),
                };
                let names: Vec<String> = list.iter().map(|p| p.describe()).collect();
                text.push_str(&format!(
                    "\npartners: {}",
                    if names.is_empty() { "none".to_string() } else { names.join(", ") }
                ));
                out["partners"] = to_json(&list);
            }
            Ok(Report::new(out, text))
        }
        Command::MzCheck { scheme, symmetric } => {
            let v = mz_check(&input::scheme(scheme)?, *symmetric)?;
            Ok(Report::new(to_json(&v), render::verdict_line("mz-check", &v)))
        }
        Command::MzSet { schemes } => {
            let mut set = Vec::new();
            for s in schemes {
                set.extend(input::schemes(s)?);
            }
            let v = mz_set_check(&set)?;
            Ok(Report::new(to_json(&v), render::verdict_line("mz-set", &v)))
        }
        Command::Ggr { n, reduced } => {
            let set = ggr_set(*n, *reduced)?;
            let text = set.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Report::new(json!({"n": n, "reduced": reduced, "set": to_json(&set)}), text))
        }
        Command::Qggr { n, ell, q } => {
            let q = input::rational(q)?;
            let w = verify_quantum_ggr(*n, *ell, &q)?;
            let list: Vec<Value> = w
                .iter()
                .map(|(k, r)| json!({"k": k, "scale": grdiff_core::format_rational(r)}))
                .collect();
            let text = w
                .iter()
                .map(|(k, r)| format!("k={k}: scale {}", render::rat(r)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report::new(
                json!({"n": n, "ell": ell, "q": grdiff_core::format_rational(&q), "witnesses": list}),
                text,
            ))
        }
        Command::Ntimes { entries } => {
            let chain = entries.iter().map(|e| input::chain_entry(e)).collect::<Result<Vec<_>, _>>()?;
            let r = n_times_check(&chain)?;
            let mut lines: Vec<String> = r
                .per_order
                .iter()
                .map(|o| format!("order {}: {}", o.order, o.verdict))
                .collect();
            lines.push(format!("all-mz: {}", r.all_mz));
            lines.push(format!("peano-equivalence: {}", render::peano(&r.peano_equivalence)));
            if let PeanoEquivalence::EstablishedByIdentity { replacements } = &r.peano_equivalence {
                for e in replacements {
                    lines.push(format!("  order {}: {} ({})", e.order, e.replacement, e.verdict));
                }
            }
            Ok(Report::new(to_json(&r), lines.join("\n")))
        }
        Command::Probe(a) => {
            let f: FunctionOracle = a.oracle.parse()?;
            let x = input::rational(&a.x)?;
            let config = probe_config(a)?;
            match (&a.scheme, a.peano) {
                (Some(s), None) => {
                    let r = limit_probe(&input::scheme(s)?, &f, &x, &config)?;
                    Ok(Report::new(to_json(&r), probe_text("probe", &r)))
                }
                (None, Some(n)) => {
                    let r = peano_probe(&f, &x, n, &config)?;
                    let text = r
                        .iter()
                        .enumerate()
                        .map(|(i, rep)| probe_text(&format!("stage {}", i + 1), rep))
                        .collect::<Vec<_>>()
                        .join("\n");
                    Ok(Report::new(to_json(&r), text))
                }
                _ => Err(CliError::Input("give exactly one of --scheme or --peano".into())),
            }
        }
        Command::Demo { name } => demo::run(name),
    }
}

fn run_batch(path: &PathBuf, mode: OutputMode) -> (Vec<Result<String, CliError>>, i32) {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return (vec![Err(CliError::Input(format!("{}: {e}", path.display())))], 2),
    };
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<Result<String, CliError>> = lines
        .par_iter()
        .map(|line| {
            let words = split_words(line)?;
            let args = std::iter::once("grdiff".to_string()).chain(words);
            let cli = Cli::try_parse_from(args).map_err(|e| CliError::Input(e.to_string()))?;
            let cmd = cli
                .command
                .ok_or_else(|| CliError::Input("batch line without a command".into()))?;
            if cli.batch.is_some() {
                return Err(CliError::Input("nested --batch".into()));
            }
            // A line without its own --output inherits the outer mode.
            let mode = if line.contains("--output") { cli.output } else { mode };
            execute(&cmd).map(|r| r.render(mode))
        })
        .collect();
    let code = results
        .iter()
        .filter_map(|r| r.as_ref().err().map(CliError::exit_code))
        .max()
        .unwrap_or(0);
    (results, code)
}

/// Shell-like word splitting with single and double quotes.
fn split_words(line: &str) -> Result<Vec<String>, CliError> {
    let mut words = Vec::new();
    let mut cur = String::new();
    let mut quote = None;
    let mut in_word = false;
    for c in line.chars() {
        match (quote, c) {
            (Some(q), c) if c == q => quote = None,
            (Some(_), c) => cur.push(c),
            (None, '\'' | '"') => {
                quote = Some(c);
                in_word = true;
            }
            (None, c) if c.is_whitespace() => {
                if in_word {
                    words.push(std::mem::take(&mut cur));
                    in_word = false;
                }
            }
            (None, c) => {
                cur.push(c);
                in_word = true;
            }
        }
    }
    if quote.is_some() {
        return Err(CliError::Input(format!("unterminated quote in {line:?}")));
    }
    if in_word {
        words.push(cur);
    }
    Ok(words)
}

/// Parses `args`, runs, writes to the given streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    if let (Some(_), Some(_)) = (&cli.batch, &cli.command) {
        let _ = writeln!(err, "error: --batch cannot be combined with a command");
        return 2;
    }
    if let Some(path) = &cli.batch {
        let (results, code) = run_batch(path, cli.output);
        for (i, r) in results.iter().enumerate() {
            match r {
                Ok(text) => {
                    let _ = writeln!(out, "{text}");
                }
                Err(e) => {
                    let _ = writeln!(err, "line {}: {e}", i + 1);
                    if cli.output == OutputMode::Json {
                        let _ = writeln!(out, "{}", json!({"error": e.to_string(), "exit": e.exit_code()}));
                    }
                }
            }
        }
        return code;
    }
    let Some(cmd) = &cli.command else {
        let _ = writeln!(err, "no command given; try --help");
        return 2;
    };
    match execute(cmd) {
        Ok(r) => {
            let _ = writeln!(out, "{}", r.render(cli.output));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_splitting() {
        assert_eq!(
            split_words(r#"equiv --a '{"terms":[]}' --b "x y""#).unwrap(),
            vec!["equiv", "--a", r#"{"terms":[]}"#, "--b", "x y"]
        );
        assert!(split_words("demo 'E1").is_err());
        assert_eq!(split_words("  ").unwrap(), Vec::<String>::new());
    }

    #[test]
    fn error_codes() {
        assert_eq!(CliError::from(grdiff_core::Error::ZeroScale).exit_code(), 2);
        assert_eq!(CliError::from(grdiff_core::Error::Internal("x".into())).exit_code(), 3);
    }
}
