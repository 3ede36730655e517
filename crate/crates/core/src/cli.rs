//! Command-line front end. `run` is the whole program minus process exit,
//! so tests can drive it with in-memory writers.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::linalg::char_poly;
use crate::mapping_class::{spectral_report, word_matrix, SpectralReport, TwistWord};
use crate::surface_model::{check_consistency, farthest_graph, label_sequence, GenusParameter};
use crate::surface_topology::{band_surface, topology_report, TopologyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twistcone",
    version,
    about = "Twist matrices and golden-ratio blocks on the surfaces Σ_{2k,k}"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit the graph G_{2k,k}.
    Graph {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum)]
        format: GraphFormat,
    },
    /// Euler characteristic, boundary count and genus of Σ_{2k,k}.
    Topology {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Evaluate a word such as "r t1 r r" (leftmost letter outermost).
    Word {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Full check of Φ_k for one k.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Check every odd k in a range.
    Scan {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
        format: ScanFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanFormat {
    Csv,
    Json,
}

/// One line of a scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub k: u32,
    pub genus: usize,
    pub boundary: usize,
    pub identity_verified: bool,
    pub dilatation: f64,
    pub runtime_ms: u64,
    #[serde(skip)]
    pub failures: Vec<String>,
}

impl ScanRow {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Everything checked for a single k.
pub struct Verification {
    pub spectral: Result<SpectralReport, Error>,
    pub topology: TopologyReport,
    pub graph_consistent: bool,
}

impl Verification {
    pub fn run(p: GenusParameter) -> Self {
        let topology = topology_report(&band_surface(p, &label_sequence(p)))
            .expect("family band lists are well formed");
        Verification {
            spectral: spectral_report(p),
            topology,
            graph_consistent: check_consistency(p),
        }
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = match &self.spectral {
            Ok(r) => r.failures(),
            Err(e) => vec![e.to_string()],
        };
        let k = self.topology.k.map_or(0, |p| p.k());
        if self.topology.boundary_components != k {
            out.push(format!(
                "boundary components {} != {k}",
                self.topology.boundary_components
            ));
        }
        if self.topology.genus != k + 2 || self.topology.orientable {
            out.push(format!("genus {} != {}", self.topology.genus, k + 2));
        }
        if !self.graph_consistent {
            out.push("intersection graph differs from G_{2k,k}".into());
        }
        out
    }
}

pub fn scan_row(p: GenusParameter) -> ScanRow {
    let start = Instant::now();
    let v = Verification::run(p);
    let failures = v.failures();
    let (identity_verified, dilatation) = match &v.spectral {
        Ok(r) => (r.identity_verified, r.dilatation),
        Err(_) => (false, f64::NAN),
    };
    ScanRow {
        k: p.k() as u32,
        genus: v.topology.genus,
        boundary: v.topology.boundary_components,
        identity_verified,
        dilatation,
        runtime_ms: start.elapsed().as_millis() as u64,
        failures,
    }
}

/// Rows for every odd `k` in `from..=to`, evaluated in parallel and returned
/// in increasing `k`.
pub fn scan(from: i64, to: i64) -> Vec<ScanRow> {
    let params: Vec<GenusParameter> = GenusParameter::range(from, to).collect();
    params.into_par_iter().map(scan_row).collect()
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("k,genus,boundary,identity_verified,dilatation,runtime_ms\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.k, r.genus, r.boundary, r.identity_verified, r.dilatation, r.runtime_ms
        ));
    }
    out
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    let io = |e: std::io::Error| Usage(format!("write failed: {e}"));
    match command {
        Command::Graph { k, format } => {
            let p = GenusParameter::new(k)?;
            let g = farthest_graph(p);
            match format {
                GraphFormat::Dot => {
                    write!(out, "{}", g.to_dot(&format!("G_{}_{}", p.curves(), p.k())))
                }
                GraphFormat::Json => writeln!(out, "{}", g.to_json(p)),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Topology { k } => {
            let p = GenusParameter::new(k)?;
            let report = topology_report(&band_surface(p, &label_sequence(p)))?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&report).expect("plain data")
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Word { k, word } => {
            let p = GenusParameter::new(k)?;
            let w: TwistWord = word.parse()?;
            let m = word_matrix(p, &w)?;
            let payload = serde_json::json!({
                "k": p,
                "word": w.to_string(),
                "matrix": m,
                "char_poly": char_poly(&m),
            });
            writeln!(out, "{payload}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { k } => {
            let p = GenusParameter::new(k)?;
            let v = Verification::run(p);
            let failures = v.failures();
            let payload = serde_json::json!({
                "k": p,
                "spectral": v.spectral.as_ref().ok().map(SpectralReport::to_json),
                "topology": v.topology,
                "graph_consistent": v.graph_consistent,
                "passed": failures.is_empty(),
                "failures": failures,
            });
            writeln!(out, "{payload}").map_err(io)?;
            if failures.is_empty() {
                Ok(EXIT_OK)
            } else {
                for f in &failures {
                    let _ = writeln!(err, "k = {p}: {f}");
                }
                Ok(EXIT_FAILURE)
            }
        }
        Command::Scan { from, to, format } => {
            GenusParameter::new(from)?;
            GenusParameter::new(to)?;
            if from > to {
                return Err(Usage(format!("--from {from} exceeds --to {to}")));
            }
            let rows = scan(from, to);
            match format {
                ScanFormat::Csv => write!(out, "{}", scan_csv(&rows)),
                ScanFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string(&rows).expect("plain data"))
                }
            }
            .map_err(io)?;
            let failing: Vec<&ScanRow> = rows.iter().filter(|r| !r.passed()).collect();
            if failing.is_empty() {
                Ok(EXIT_OK)
            } else {
                for r in failing {
                    let _ = writeln!(err, "k = {}: {}", r.k, r.failures.join("; "));
                }
                Ok(EXIT_FAILURE)
            }
        }
    }
}
