use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use eisring::codes::{LinearCode, Metric, DEFAULT_SPAN_BOUND};
use eisring::constellation::{
    check_against_reference, compare_table, reference_pairs, REFERENCE_TABLE,
};
use eisring::export;
use eisring::partition::recursive_partition;
use eisring::verify::{run_suite, SUITES};
use eisring::{Constellation, EisError, Eisenstein, Gaussian, Kind, Modulus};

/// Exact Eisenstein-integer residue rings, constellations and partitions.
#[derive(Parser)]
#[command(name = "eisring", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Divide with remainder and lift the remainder back to the grid.
    Divmod {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Eisenstein,
        #[arg(long, allow_hyphen_values = true)]
        modulus: Eisenstein,
    },
    /// Grid representatives and their reduced points.
    ResidueTable {
        #[arg(long, allow_hyphen_values = true)]
        modulus: Eisenstein,
        #[arg(long, default_value = "text")]
        out: OutputSpec,
    },
    /// Average energies of equal-size Gaussian and Eisenstein constellations.
    EnergyTable {
        /// Use the 23 built-in pairs (the default when no file is given).
        #[arg(long, conflicts_with = "pairs")]
        builtin: bool,
        /// File of `ga,gb,ea,eb` lines.
        #[arg(long)]
        pairs: Option<PathBuf>,
        /// Compare against the reference values and fail on any mismatch.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value = "text")]
        out: OutputSpec,
    },
    /// Additive-subgroup partition chain.
    Partition {
        #[arg(long, allow_hyphen_values = true)]
        modulus: Eisenstein,
        /// Comma-separated factors; empty for the root only.
        #[arg(long, default_value = "")]
        factors: String,
        #[arg(long, default_value = "text")]
        out: OutputSpec,
    },
    /// Reduced residue system as a point set.
    Constellation {
        #[arg(long, value_enum, default_value = "eisenstein")]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        modulus: String,
        #[arg(long, default_value = "csv")]
        out: OutputSpec,
    },
    /// Run a self-check suite.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Materialize the span of generator vectors over a residue ring.
    Span {
        #[arg(long, allow_hyphen_values = true)]
        modulus: Eisenstein,
        #[arg(long)]
        length: usize,
        /// A generator as `a,b;a,b;…`, repeatable.
        #[arg(long = "gen", allow_hyphen_values = true)]
        generators: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SPAN_BOUND)]
        bound: usize,
        #[arg(long, default_value = "text")]
        out: OutputSpec,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Eisenstein,
    Gaussian,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

/// `FORMAT` or `FORMAT:PATH`.
#[derive(Clone, Debug)]
struct OutputSpec {
    format: Format,
    path: Option<PathBuf>,
}

impl FromStr for OutputSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (fmt, path) = match s.split_once(':') {
            Some((f, p)) if !p.is_empty() => (f, Some(PathBuf::from(p))),
            Some((f, _)) => (f, None),
            None => (s, None),
        };
        let format = match fmt {
            "text" => Format::Text,
            "csv" => Format::Csv,
            "json" => Format::Json,
            "svg" => Format::Svg,
            other => return Err(format!("unknown format {other:?} (text, csv, json, svg)")),
        };
        Ok(OutputSpec { format, path })
    }
}

enum Failure {
    Usage(String),
    Domain(EisError),
    Verification(String),
    Io(String),
}

impl From<EisError> for Failure {
    fn from(e: EisError) -> Self {
        Failure::Domain(e)
    }
}

fn emit(out: &OutputSpec, body: &str) -> Result<(), Failure> {
    match &out.path {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(p) => fs::write(p, body).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
    }
}

fn json_text(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn no_svg(out: &OutputSpec) -> Result<(), Failure> {
    if out.format == Format::Svg {
        return Err(Failure::Usage(
            "svg output is only available for constellation and partition".into(),
        ));
    }
    Ok(())
}

fn parse_factors(s: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<u64>()
                .map_err(|_| Failure::Usage(format!("bad factor {x:?}")))
        })
        .collect()
}

fn parse_pairs_file(path: &PathBuf) -> Result<Vec<(Gaussian, Eisenstein)>, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: Result<Vec<i64>, _> = line.split(',').map(|x| x.trim().parse::<i64>()).collect();
        match v.as_deref() {
            Ok([ga, gb, ea, eb]) => out.push((Gaussian::new(*ga, *gb), Eisenstein::new(*ea, *eb))),
            _ => {
                return Err(Failure::Usage(format!(
                    "line {}: expected ga,gb,ea,eb",
                    i + 1
                )))
            }
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Divmod { alpha, modulus } => {
            let m = Modulus::new(modulus)?;
            let (q, r) = alpha.divmod(modulus)?;
            let lift = m.pi_lift(r);
            println!(
                "q={},{} r={},{} lift={},{}",
                q.a, q.b, r.a, r.b, lift.a, lift.b
            );
            Ok(())
        }
        Command::ResidueTable { modulus, out } => {
            no_svg(&out)?;
            let rs = Modulus::new(modulus)?.residue_system();
            let body = match out.format {
                Format::Csv => export::residue_table_csv(&rs),
                Format::Json => json_text(export::residue_table_json(&rs)),
                _ => export::residue_table_text(&rs),
            };
            emit(&out, &body)
        }
        Command::EnergyTable {
            builtin: _,
            pairs,
            check,
            out,
        } => {
            no_svg(&out)?;
            let list = match &pairs {
                Some(p) => parse_pairs_file(p)?,
                None => reference_pairs(),
            };
            let rows = compare_table(&list)?;
            let body = match out.format {
                Format::Csv => export::energy_table_csv(&rows),
                Format::Json => json_text(export::energy_table_json(&rows)),
                _ => export::energy_table_text(&rows),
            };
            emit(&out, &body)?;
            if check {
                let bad = check_against_reference(&rows, &REFERENCE_TABLE);
                if !bad.is_empty() {
                    let lines: Vec<String> = bad
                        .iter()
                        .map(|m| {
                            format!(
                                "size {} ({}, {}) {}: expected {}, computed {}",
                                m.size, m.gaussian, m.eisenstein, m.column, m.expected, m.computed
                            )
                        })
                        .collect();
                    return Err(Failure::Verification(lines.join("\n")));
                }
                eprintln!("all cells within 0.005 of the reference");
            }
            Ok(())
        }
        Command::Partition {
            modulus,
            factors,
            out,
        } => {
            let factors = parse_factors(&factors)?;
            let m = Modulus::new(modulus)?;
            let root = recursive_partition(&m, &factors)?;
            let body = match out.format {
                Format::Json => json_text(export::partition_json(&m, &factors, &root)),
                Format::Svg => export::partition_svg(&m, &factors, &root),
                Format::Csv => {
                    let mut s = String::from("label,a,b\n");
                    for leaf in root.level(root.depth()) {
                        let label: Vec<String> = leaf.label.iter().map(|i| i.to_string()).collect();
                        for p in &leaf.points {
                            s.push_str(&format!("{},{},{}\n", label.join("."), p.a, p.b));
                        }
                    }
                    s
                }
                Format::Text => export::partition_text(&root),
            };
            emit(&out, &body)
        }
        Command::Constellation { kind, modulus, out } => {
            let (a, b) = parse_pair(&modulus)?;
            let kind = match kind {
                KindArg::Eisenstein => Kind::Eisenstein,
                KindArg::Gaussian => Kind::Gaussian,
            };
            let c = Constellation::build(kind, a, b)?;
            let body = match out.format {
                Format::Svg => export::constellation_svg(&c),
                Format::Json => json_text(export::constellation_json(&c)),
                Format::Csv => export::constellation_csv(&c),
                Format::Text => {
                    let r = c.energy_report()?;
                    format!(
                        "{} points\nE = {:.4}\nE2 = {:.4}\nweight = {:.4}\nclass-min weight = {:.4}\n",
                        r.size,
                        r.e.value(),
                        r.e2.value(),
                        r.weight.value(),
                        r.class_min_weight.value()
                    )
                }
            };
            emit(&out, &body)
        }
        Command::Verify {
            suite,
            samples,
            seed,
        } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(Failure::Usage(format!(
                    "unknown suite {suite:?}; one of {}",
                    SUITES.join(", ")
                )));
            };
            let mut failed = Vec::new();
            for name in names {
                let r = run_suite(name, samples, seed);
                println!("{r}");
                if !r.passed() {
                    failed.push(name);
                }
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "failed suites: {}",
                    failed.join(", ")
                )))
            }
        }
        Command::Span {
            modulus,
            length,
            generators,
            bound,
            out,
        } => {
            if matches!(out.format, Format::Svg) {
                no_svg(&out)?;
            }
            let gens = generators
                .iter()
                .map(|g| {
                    g.split(';')
                        .map(|c| {
                            c.parse::<Eisenstein>()
                                .map_err(|e| Failure::Usage(e.to_string()))
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let code = LinearCode::span(Modulus::new(modulus)?, length, gens, bound)?;
            let body = match out.format {
                Format::Csv => export::codewords_csv(&code),
                Format::Json => {
                    json_text(serde_json::json!({ "schema": export::SCHEMA, "code": code }))
                }
                _ => {
                    let d = |m| {
                        code.min_distance(m)
                            .map_or("-".to_string(), |v| v.to_string())
                    };
                    format!(
                        "{} codewords\nmin squared Euclidean distance {}\nmin hexagonal distance {}\n",
                        code.len(),
                        d(Metric::SqEuclid),
                        d(Metric::Hex)
                    )
                }
            };
            emit(&out, &body)
        }
    }
}

fn parse_pair(s: &str) -> Result<(i64, i64), Failure> {
    let e: Eisenstein = s
        .parse()
        .map_err(|e: eisring::eisenstein::ParsePairError| Failure::Usage(e.to_string()))?;
    Ok((e.a, e.b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
