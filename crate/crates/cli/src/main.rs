mod input;
mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use foldkit::coloring::{chi_with, is_complete, is_proper, psi_with, Coloring};
use foldkit::fold::{fold_to_k_with, sigma_with, verify_trace, FoldTrace};
use foldkit::io::emit_graph6;
use foldkit::special::{is_threshold, psi_threshold, CreationSequence, ObstructionKind};
use foldkit::verify::{run_suite, Suite, SuiteConfig, SCHEMA};
use foldkit::{Error, Graph};

use report::{
    Certificates, ColoringCheckReport, ComputeReport, FoldReport, Obstruction, ThresholdReport,
    TraceCertificate, TraceCheckReport,
};

const EXIT_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_RANGE: u8 = 4;

#[derive(Parser)]
#[command(name = "foldkit", version, about = "Exact graph folding invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute chi, psi and sigma with certificates.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated subset of chi,psi,sigma.
        #[arg(long, default_value = "chi,psi,sigma")]
        what: String,
        /// Also write chi.coloring, psi.coloring and sigma.trace here.
        #[arg(long)]
        certificate_dir: Option<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Fold a connected graph onto K_k and emit the trace.
    Fold {
        #[command(flatten)]
        input: GraphInput,
        /// Target clique size.
        #[arg(long)]
        to: usize,
        /// Write the trace here; without it the trace goes to stdout.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        /// interpolation, reduction-lemma, threshold, marcu, join, fold-chi or chi-step
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Replay a fold trace file and check every step.
    CheckTrace {
        file: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Check a colouring certificate against a graph.
    CheckColoring {
        certificate: PathBuf,
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        format: Format,
    },
    /// Recognize a threshold graph, or realize a creation sequence.
    Threshold {
        #[command(flatten)]
        input: GraphInput,
        /// Creation sequence over i/u, e.g. `iiuiu`.
        #[arg(long, conflicts_with_all = ["family", "file"])]
        sequence: Option<String>,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Args)]
struct GraphInput {
    /// graph6 or edge-list file; stdin when omitted.
    file: Option<PathBuf>,
    /// Named family such as `cycle:9` or `wheel:9`.
    #[arg(long)]
    family: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, CliError> {
        input::load_graph(self.family.as_deref(), self.file.as_deref())
    }
}

#[derive(Args)]
struct Format {
    /// JSON output (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain text output.
    #[arg(long)]
    text: bool,
}

impl Format {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.text {
            println!("{}", text());
        } else {
            println!(
                "{}",
                serde_json::to_string(value).expect("report serializes")
            );
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_FAILED,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Graph6 { .. }
            | Error::Text { .. }
            | Error::Family(_)
            | Error::Argument(_)
            | Error::Trace(_) => EXIT_PARSE,
            Error::OutOfRange { .. } => EXIT_RANGE,
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Quantity {
    Chi,
    Psi,
    Sigma,
}

fn parse_what(s: &str) -> Result<Vec<Quantity>, CliError> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let q = match part {
            "chi" => Quantity::Chi,
            "psi" => Quantity::Psi,
            "sigma" => Quantity::Sigma,
            other => {
                return Err(CliError::usage(format!(
                    "unknown quantity `{other}` in --what"
                )))
            }
        };
        if !out.contains(&q) {
            out.push(q);
        }
    }
    if out.is_empty() {
        return Err(CliError::usage("--what is empty"));
    }
    Ok(out)
}

fn compute(
    input: &GraphInput,
    what: &str,
    certificate_dir: Option<&PathBuf>,
    format: &Format,
) -> Result<u8, CliError> {
    let what = parse_what(what)?;
    let g = input.load()?;
    let limits = input::limits_from_env()?;
    let mut r = ComputeReport {
        schema: SCHEMA.into(),
        n: g.n(),
        chi: None,
        psi: None,
        sigma: None,
        certificates: Certificates::default(),
    };
    let mut files: Vec<(&str, String)> = Vec::new();
    for q in &what {
        match q {
            Quantity::Chi => {
                let c = chi_with(&g, &limits)?;
                r.chi = Some(c.value);
                r.certificates.chi = Some(c.certificate.colors().to_vec());
                files.push(("chi.coloring", c.certificate.to_text()));
            }
            Quantity::Psi => {
                let p = psi_with(&g, &limits)?;
                r.psi = Some(p.value);
                r.certificates.psi = Some(p.certificate.colors().to_vec());
                files.push(("psi.coloring", p.certificate.to_text()));
            }
            Quantity::Sigma => {
                let s = sigma_with(&g, &limits)?;
                r.sigma = Some(s.sigma);
                r.certificates.sigma = Some(TraceCertificate::new(&s.witness, Some(s.method)));
                files.push(("sigma.trace", s.witness.to_text()));
            }
        }
    }
    if let Some(dir) = certificate_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::io(format!("creating {}: {e}", dir.display())))?;
        for (name, text) in &files {
            input::write_file(&dir.join(name), text)?;
        }
    }
    format.emit(&r, || {
        let mut lines = vec![format!("n {}", r.n)];
        let values = [("chi", r.chi), ("psi", r.psi), ("sigma", r.sigma)];
        lines.extend(
            values
                .iter()
                .filter_map(|(k, v)| v.map(|v| format!("{k} {v}"))),
        );
        lines.join("\n")
    });
    Ok(0)
}

fn fold(
    input: &GraphInput,
    k: usize,
    trace: Option<&PathBuf>,
    format: &Format,
) -> Result<u8, CliError> {
    let g = input.load()?;
    let limits = input::limits_from_env()?;
    let t = fold_to_k_with(&g, k, &limits)?;
    let Some(path) = trace else {
        print!("{}", t.to_text());
        return Ok(0);
    };
    input::write_file(path, &t.to_text())?;
    let r = FoldReport {
        schema: SCHEMA.into(),
        k,
        target_size: t.target.n(),
        steps: t.len(),
        trace_file: Some(path.display().to_string()),
    };
    format.emit(&r, || {
        format!(
            "folded onto K{} in {} steps, trace written to {}",
            r.target_size,
            r.steps,
            path.display()
        )
    });
    Ok(0)
}

fn verify(suite: Suite, max_n: Option<usize>, seed: u64, format: &Format) -> Result<u8, CliError> {
    let config = SuiteConfig {
        max_n,
        seed,
        limits: input::limits_from_env()?,
        ..SuiteConfig::default()
    };
    let r = run_suite(suite, &config)?;
    format.emit(&r, || {
        let mut lines = vec![format!(
            "{} max_n={} instances={} failures={} ({:.3}s)",
            r.suite,
            r.max_n,
            r.instances,
            r.failures.len(),
            r.wall_time_secs
        )];
        lines.extend(
            r.failures
                .iter()
                .map(|f| format!("FAIL {} expected {} got {}", f.graph6, f.expected, f.got)),
        );
        lines.join("\n")
    });
    Ok(if r.passed() { 0 } else { EXIT_FAILED })
}

fn check_trace(file: &Path, format: &Format) -> Result<u8, CliError> {
    let t = FoldTrace::from_text(&input::read_file(file)?)?;
    let verdict = verify_trace(&t);
    let r = TraceCheckReport {
        schema: SCHEMA.into(),
        valid: verdict.valid,
        steps: t.len(),
        target_size: t.target.n(),
        failure: verdict.failure.map(|f| f.to_string()),
    };
    format.emit(&r, || match &r.failure {
        None => format!(
            "valid trace, {} steps onto {} vertices",
            r.steps, r.target_size
        ),
        Some(f) => format!("invalid trace: {f}"),
    });
    Ok(if r.valid { 0 } else { EXIT_FAILED })
}

fn check_coloring(cert: &Path, input: &GraphInput, format: &Format) -> Result<u8, CliError> {
    let c = Coloring::from_text(&input::read_file(cert)?)?;
    let g = input.load()?;
    let r = ColoringCheckReport {
        schema: SCHEMA.into(),
        colors: c.num_colors(),
        proper: is_proper(&g, &c)?,
        complete: is_complete(&g, &c)?,
    };
    format.emit(&r, || {
        format!(
            "{} colours, proper {}, complete {}",
            r.colors, r.proper, r.complete
        )
    });
    Ok(if r.proper { 0 } else { EXIT_FAILED })
}

fn threshold(input: &GraphInput, sequence: Option<&str>, format: &Format) -> Result<u8, CliError> {
    let r = match sequence {
        Some(s) => {
            let seq: CreationSequence = s.parse()?;
            ThresholdReport {
                schema: SCHEMA.into(),
                graph6: emit_graph6(&seq.realize()),
                threshold: true,
                sequence: Some(seq.to_string()),
                psi: Some(psi_threshold(&seq)),
                obstruction: None,
            }
        }
        None => {
            let g = input.load()?;
            let mut r = ThresholdReport {
                schema: SCHEMA.into(),
                graph6: emit_graph6(&g),
                threshold: false,
                sequence: None,
                psi: None,
                obstruction: None,
            };
            match is_threshold(&g) {
                Ok(cert) => {
                    r.threshold = true;
                    r.psi = Some(psi_threshold(&cert.sequence));
                    r.sequence = Some(cert.sequence.to_string());
                }
                Err(o) => {
                    let kind = match o.kind {
                        ObstructionKind::P4 => "P4",
                        ObstructionKind::C4 => "C4",
                        ObstructionKind::TwoK2 => "2K2",
                    };
                    r.obstruction = Some(Obstruction {
                        kind: kind.into(),
                        vertices: o.vertices,
                    });
                }
            }
            r
        }
    };
    format.emit(&r, || match (&r.sequence, &r.obstruction) {
        (Some(seq), _) => format!("threshold {seq} psi {}", r.psi.unwrap_or(0)),
        (None, Some(o)) => format!("not threshold: induced {} on {:?}", o.kind, o.vertices),
        (None, None) => "not threshold".into(),
    });
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Compute {
            input,
            what,
            certificate_dir,
            format,
        } => compute(&input, &what, certificate_dir.as_ref(), &format),
        Command::Fold {
            input,
            to,
            trace,
            format,
        } => fold(&input, to, trace.as_ref(), &format),
        Command::Verify {
            suite,
            max_n,
            seed,
            format,
        } => verify(suite, max_n, seed, &format),
        Command::CheckTrace { file, format } => check_trace(&file, &format),
        Command::CheckColoring {
            certificate,
            input,
            format,
        } => check_coloring(&certificate, &input, &format),
        Command::Threshold {
            input,
            sequence,
            format,
        } => threshold(&input, sequence.as_deref(), &format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("foldkit: {e}");
            ExitCode::from(e.code)
        }
    }
}
