//! Command-line front end: `mask`, `verify`, `latin`, `report`.
//!
//! Exit codes: 0 success or pass, 1 usage or construction error, 2 failed
//! verification. Every JSON or CSV output embeds the resolved [`RunConfig`].

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::{AmpEntry, StateDump};
use crate::latin::{
    are_orthogonal, cyclic_pair, mols_search, read_square, write_square, MolsPair, SearchOutcome,
    DEFAULT_NODE_BUDGET,
};
use crate::maskers::{
    bell_masker_with_cap, embedded_masker, encode, mols_masker, shor_masker, InputState, Masker,
    Scheme, DEFAULT_BELL_CAP,
};
use crate::verifier::{masking_check, CheckOptions, MaskingReport, DEFAULT_SEED, DEFAULT_TOL};

/// Environment variable overriding the bell-masker dimension cap.
pub const CAP_ENV: &str = "QMASK_CAP_D";

/// Coefficients within this distance of unit norm are renormalized with a notice.
pub const COEFF_RENORM_TOLERANCE: f64 = 1e-6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

pub const REPORT_HEADER: [&str; 8] = [
    "scheme",
    "d",
    "parties",
    "local_dims",
    "gram_dev",
    "basis_dev",
    "superpos_dev",
    "pass",
];

#[derive(Debug, Parser)]
#[command(name = "qmask", version, about = "Construct and certify quantum-information maskers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encode an input state and write the resulting state dump.
    Mask(MaskArgs),
    /// Certify a masker and write a masking report.
    Verify(VerifyArgs),
    /// Latin-square tools.
    Latin {
        #[command(subcommand)]
        action: LatinAction,
    },
    /// Verify a grid of (scheme, d) cells and write a CSV table.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
struct SchemeArgs {
    /// bell | shor | mols | embedded
    #[arg(long)]
    scheme: String,
    #[arg(long)]
    d: Option<usize>,
    /// Two square files `V,W` for the mols scheme.
    #[arg(long, value_delimiter = ',')]
    pair: Option<Vec<PathBuf>>,
    /// Node budget when the mols scheme has to search for a pair.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["coeffs", "basis"]))]
struct MaskArgs {
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Comma-separated `re` or `re+imJ` literals (`i` also accepted).
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Encode the basis state `|j⟩` (0-based).
    #[arg(long)]
    basis: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    scheme: SchemeArgs,
    #[command(flatten)]
    check: CheckArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include eigenvalue and trace-norm diagnostics.
    #[arg(long)]
    diagnostic: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum LatinAction {
    /// Validate two square files and test their orthogonality.
    Check { v: PathBuf, w: PathBuf },
    /// Write the cyclic orthogonal pair of odd order d.
    Cyclic {
        #[arg(long)]
        d: usize,
        /// `V,W` output files; stdout when absent.
        #[arg(long, value_delimiter = ',')]
        out: Option<Vec<PathBuf>>,
    },
    /// Backtracking search for an orthogonal pair of order d.
    Search {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, value_delimiter = ',')]
        out: Option<Vec<PathBuf>>,
    },
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// Comma-separated scheme list (may be empty).
    #[arg(long, default_value = "")]
    schemes: String,
    /// Dimensions: `2..4`, `3,5,7`, or a mix like `2..4,6`.
    #[arg(long, default_value = "")]
    d: String,
    #[command(flatten)]
    check: CheckArgs,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// CSV output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the full reports as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

/// Fully resolved invocation, serialized into every output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scheme: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schemes: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ds: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<Vec<String>>,
    /// `[re, im]` per coefficient, after renormalization.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub json: Option<String>,
}

impl RunConfig {
    fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            scheme: None,
            schemes: None,
            d: None,
            ds: None,
            pair: None,
            coeffs: None,
            basis: None,
            samples: None,
            seed: None,
            tol: None,
            budget: None,
            cap: None,
            format: None,
            out: None,
            json: None,
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let mut ctx = Ctx { stdout, stderr };
    let result = match cli.command {
        Command::Mask(a) => cmd_mask(&mut ctx, a),
        Command::Verify(a) => cmd_verify(&mut ctx, a),
        Command::Latin { action } => cmd_latin(&mut ctx, action),
        Command::Report(a) => cmd_report(&mut ctx, a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

struct Ctx<'a> {
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, out: Option<&Path>, text: &str) -> Result<()> {
        match out {
            Some(p) if p != Path::new("-") => fs::write(p, text).map_err(|e| io_err(p, e)),
            _ => self.stdout.write_all(text.as_bytes()).map_err(|e| io_err(Path::new("<stdout>"), e)),
        }
    }

    fn notice(&mut self, msg: &str) {
        let _ = writeln!(self.stderr, "notice: {msg}");
    }
}

fn io_err(p: &Path, e: std::io::Error) -> Error {
    Error::Argument(format!("{}: {e}", p.display()))
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn bell_cap() -> Result<usize> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Argument(format!("{CAP_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BELL_CAP),
    }
}

fn read_pair(paths: &[PathBuf]) -> Result<MolsPair> {
    let [v, w] = paths else {
        return Err(Error::Argument(format!(
            "--pair takes exactly two files, got {}",
            paths.len()
        )));
    };
    let load = |p: &PathBuf| -> Result<_> {
        let text = fs::read_to_string(p).map_err(|e| io_err(p, e))?;
        read_square(&text).map_err(|e| Error::Argument(format!("{}: {e}", p.display())))
    };
    MolsPair::certify(load(v)?, load(w)?)
}

/// Builds the masker for `(scheme, d)`; fills in resolved values on `cfg`.
fn build_masker(
    scheme: Scheme,
    d: Option<usize>,
    pair: Option<&[PathBuf]>,
    budget: u64,
    cfg: &mut RunConfig,
) -> Result<Masker> {
    cfg.scheme = Some(scheme.name().to_string());
    let need_d = || d.ok_or_else(|| Error::Argument(format!("--d is required for the {scheme} scheme")));
    let m = match scheme {
        Scheme::Bell => {
            let cap = bell_cap()?;
            cfg.cap = Some(cap);
            bell_masker_with_cap(need_d()?, cap)?
        }
        Scheme::Shor => {
            if let Some(d) = d.filter(|&d| d != 2) {
                return Err(Error::Argument(format!("the shor scheme masks qubits only, got d = {d}")));
            }
            shor_masker()
        }
        Scheme::Mols => {
            let pair = match pair {
                Some(paths) => {
                    cfg.pair = Some(paths.iter().map(|p| path_str(p)).collect());
                    let p = read_pair(paths)?;
                    if let Some(d) = d.filter(|&d| d != p.order()) {
                        return Err(Error::Argument(format!(
                            "--d {d} does not match the pair order {}",
                            p.order()
                        )));
                    }
                    p
                }
                None => {
                    let d = need_d()?;
                    if d % 2 == 1 {
                        cyclic_pair(d)?
                    } else {
                        cfg.budget = Some(budget);
                        let r = mols_search(d, budget);
                        let msg = r.to_string();
                        r.into_pair().ok_or(Error::UnsupportedOrder { order: d, msg })?
                    }
                }
            };
            mols_masker(&pair)?
        }
        Scheme::Embedded => embedded_masker(need_d()?)?,
    };
    cfg.d = Some(m.input_dim());
    Ok(m)
}

/// Parses comma-separated `re`, `imJ` or `re±imJ` literals; `i` works in place of `J`.
pub fn parse_coeffs(text: &str) -> Result<Vec<Complex64>> {
    text.split(',').map(|tok| parse_complex(tok.trim())).collect()
}

fn parse_complex(tok: &str) -> Result<Complex64> {
    let bad = || Error::Argument(format!("malformed coefficient {tok:?}"));
    if tok.is_empty() {
        return Err(bad());
    }
    let Some(body) = tok.strip_suffix(['J', 'j', 'i', 'I']) else {
        return tok.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        s => s,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

fn resolve_input(m: &Masker, a: &MaskArgs, cfg: &mut RunConfig, ctx: &mut Ctx) -> Result<InputState> {
    if let Some(j) = a.basis {
        cfg.basis = Some(j);
        return InputState::basis(m.input_dim(), j);
    }
    let raw = parse_coeffs(a.coeffs.as_deref().unwrap_or_default())?;
    if raw.len() != m.input_dim() {
        return Err(Error::Argument(format!(
            "{} coefficients given, the {} masker expects {}",
            raw.len(),
            m.scheme(),
            m.input_dim()
        )));
    }
    let norm = raw.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > COEFF_RENORM_TOLERANCE {
        return Err(Error::Argument(format!(
            "coefficients have norm {norm}, more than {COEFF_RENORM_TOLERANCE} from 1"
        )));
    }
    let coeffs: Vec<Complex64> = if norm != 1.0 {
        ctx.notice(&format!("renormalized input coefficients (norm was {norm})"));
        raw.iter().map(|c| c / norm).collect()
    } else {
        raw
    };
    cfg.coeffs = Some(coeffs.iter().map(|c| [c.re, c.im]).collect());
    InputState::new(coeffs)
}

#[derive(Serialize)]
struct MaskOutput<'a> {
    dims: &'a [usize],
    amps: &'a [AmpEntry],
    config: &'a RunConfig,
}

fn cmd_mask(ctx: &mut Ctx, a: MaskArgs) -> Result<i32> {
    let mut cfg = RunConfig::new("mask");
    let scheme: Scheme = a.scheme.scheme.parse()?;
    let m = build_masker(scheme, a.scheme.d, a.scheme.pair.as_deref(), a.scheme.budget, &mut cfg)?;
    let x = resolve_input(&m, &a, &mut cfg, ctx)?;
    cfg.out = a.out.as_deref().map(path_str);
    let dump = StateDump::from_state(&encode(&m, &x)?);
    let out = MaskOutput {
        dims: &dump.dims,
        amps: &dump.amps,
        config: &cfg,
    };
    let mut text = serde_json::to_string(&out).expect("dump serializes");
    text.push('\n');
    ctx.emit(a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReportOutput<'a> {
    #[serde(flatten)]
    report: &'a MaskingReport,
    config: &'a RunConfig,
}

fn cmd_verify(ctx: &mut Ctx, a: VerifyArgs) -> Result<i32> {
    let mut cfg = RunConfig::new("verify");
    let scheme: Scheme = a.scheme.scheme.parse()?;
    let m = build_masker(scheme, a.scheme.d, a.scheme.pair.as_deref(), a.scheme.budget, &mut cfg)?;
    let opts = CheckOptions {
        samples: a.check.samples,
        seed: a.check.seed,
        tol: a.check.tol,
        diagnostic: a.diagnostic,
    };
    cfg.samples = Some(opts.samples);
    cfg.seed = Some(opts.seed);
    cfg.tol = Some(opts.tol);
    cfg.format = Some(match a.format {
        Format::Json => "json".into(),
        Format::Csv => "csv".into(),
    });
    cfg.out = a.out.as_deref().map(path_str);
    let report = masking_check(&m, &opts)?;
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&ReportOutput {
                report: &report,
                config: &cfg,
            })
            .expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => report_csv(&cfg, &[ReportRow::Done(report.clone())])?,
    };
    ctx.emit(a.out.as_deref(), &text)?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_latin(ctx: &mut Ctx, action: LatinAction) -> Result<i32> {
    match action {
        LatinAction::Check { v, w } => {
            let load = |p: &PathBuf| -> Result<_> {
                let text = fs::read_to_string(p).map_err(|e| io_err(p, e))?;
                read_square(&text).map_err(|e| Error::Argument(format!("{}: {e}", p.display())))
            };
            let (v, w) = (load(&v)?, load(&w)?);
            let orthogonal = are_orthogonal(&v, &w)?;
            let text = format!(
                "order: {}\nlatin: true true\northogonal: {orthogonal}\n",
                v.order()
            );
            ctx.emit(None, &text)?;
            Ok(if orthogonal { EXIT_OK } else { EXIT_FAIL })
        }
        LatinAction::Cyclic { d, out } => {
            let pair = cyclic_pair(d)?;
            write_pair(ctx, &pair, out.as_deref())?;
            Ok(EXIT_OK)
        }
        LatinAction::Search { d, budget, out } => {
            let r = mols_search(d, budget);
            let line = format!("{r}\n");
            ctx.emit(None, &line)?;
            if let (SearchOutcome::Found(pair), Some(_)) = (&r.outcome, out.as_ref()) {
                write_pair(ctx, pair, out.as_deref())?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_pair(ctx: &mut Ctx, pair: &MolsPair, out: Option<&[PathBuf]>) -> Result<()> {
    match out {
        Some([v, w]) => {
            ctx.emit(Some(v), &write_square(pair.first()))?;
            ctx.emit(Some(w), &write_square(pair.second()))
        }
        Some(other) => Err(Error::Argument(format!(
            "--out takes exactly two files, got {}",
            other.len()
        ))),
        None => {
            let text = format!("{}\n{}", write_square(pair.first()), write_square(pair.second()));
            ctx.emit(None, &text)
        }
    }
}

/// Parses `2..4`, `3,5,7`, or mixtures; ranges are inclusive.
pub fn parse_dims(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bad = || Error::Argument(format!("malformed dimension {tok:?}"));
        if let Some((lo, hi)) = tok.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            out.extend(lo..=hi);
        } else {
            out.push(tok.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

enum ReportRow {
    Done(MaskingReport),
    Failed { scheme: String, d: usize, error: String },
}

/// Shortest round-trip decimal, same rendering as the JSON outputs.
fn num(x: f64) -> String {
    if x.is_finite() {
        serde_json::to_string(&x).expect("finite float serializes")
    } else {
        x.to_string()
    }
}

fn report_csv(cfg: &RunConfig, rows: &[ReportRow]) -> Result<String> {
    let mut buf = Vec::new();
    let config = serde_json::to_string(cfg).expect("config serializes");
    buf.extend_from_slice(format!("# config: {config}\n").as_bytes());
    {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(&mut buf);
        let csv_err = |e: csv::Error| Error::Argument(format!("csv: {e}"));
        w.write_record(REPORT_HEADER).map_err(csv_err)?;
        for row in rows {
            let rec: Vec<String> = match row {
                ReportRow::Done(r) => vec![
                    r.scheme.clone(),
                    r.d.to_string(),
                    r.parties.to_string(),
                    r.local_dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("x"),
                    num(r.gram_dev),
                    num(r.basis_dev),
                    num(r.superpos_dev),
                    r.pass.to_string(),
                ],
                ReportRow::Failed { scheme, d, .. } => vec![
                    scheme.clone(),
                    d.to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    "ERROR".into(),
                ],
            };
            w.write_record(&rec).map_err(csv_err)?;
        }
        w.flush().map_err(|e| Error::Argument(format!("csv: {e}")))?;
    }
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonRow<'a> {
    Done(&'a MaskingReport),
    Failed { scheme: &'a str, d: usize, error: &'a str },
}

#[derive(Serialize)]
struct ReportJson<'a> {
    config: &'a RunConfig,
    reports: Vec<JsonRow<'a>>,
}

fn cmd_report(ctx: &mut Ctx, a: ReportArgs) -> Result<i32> {
    let schemes: Vec<Scheme> = a
        .schemes
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    let ds = parse_dims(&a.d)?;
    let mut cfg = RunConfig::new("report");
    cfg.schemes = Some(schemes.iter().map(|s| s.name().to_string()).collect());
    cfg.ds = Some(ds.clone());
    cfg.samples = Some(a.check.samples);
    cfg.seed = Some(a.check.seed);
    cfg.tol = Some(a.check.tol);
    cfg.budget = Some(a.budget);
    cfg.cap = Some(bell_cap()?);
    cfg.format = Some("csv".into());
    cfg.out = a.out.as_deref().map(path_str);
    cfg.json = a.json.as_deref().map(path_str);
    let opts = CheckOptions {
        samples: a.check.samples,
        seed: a.check.seed,
        tol: a.check.tol,
        diagnostic: false,
    };

    let mut rows = Vec::new();
    for &scheme in &schemes {
        let cell_ds: Vec<usize> = if ds.is_empty() && scheme == Scheme::Shor {
            vec![2]
        } else {
            ds.clone()
        };
        for d in cell_ds {
            let mut scratch = RunConfig::new("report");
            let row = build_masker(scheme, Some(d), None, a.budget, &mut scratch)
                .and_then(|m| masking_check(&m, &opts));
            rows.push(match row {
                Ok(r) => ReportRow::Done(r),
                Err(e) => ReportRow::Failed {
                    scheme: scheme.name().to_string(),
                    d,
                    error: e.to_string(),
                },
            });
        }
    }

    for row in &rows {
        if let ReportRow::Failed { scheme, d, error } = row {
            ctx.notice(&format!("{scheme} d={d}: {error}"));
        }
    }
    ctx.emit(a.out.as_deref(), &report_csv(&cfg, &rows)?)?;
    if let Some(path) = a.json.as_deref() {
        let doc = ReportJson {
            config: &cfg,
            reports: rows
                .iter()
                .map(|r| match r {
                    ReportRow::Done(r) => JsonRow::Done(r),
                    ReportRow::Failed { scheme, d, error } => JsonRow::Failed {
                        scheme,
                        d: *d,
                        error,
                    },
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
        text.push('\n');
        ctx.emit(Some(path), &text)?;
    }
    let all_pass = rows.iter().all(|r| matches!(r, ReportRow::Done(r) if r.pass));
    Ok(if all_pass { EXIT_OK } else { EXIT_FAIL })
}
