//! Command-line front end: every pipeline stage behind a subcommand with
//! stable machine-readable output. Results go to stdout, diagnostics to
//! stderr; exit status 0 on success, 1 on domain errors, 2 on usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use akfock::afun::{a_sequence, a_value};
use akfock::basicsets::{basic_set_a, basic_set_b, basic_set_d, basic_set_json, TypeDLabel};
use akfock::combinat::{enumerate_multipartitions, is_flotw};
use akfock::crystal::{generate_crystal, kleshchev_multipartitions};
use akfock::llt::{a_vector, canonical_basis, decomposition_matrix, verify_cbs};
use akfock::{ChargeParams, Multipartition, OrderKind};

#[derive(Parser)]
#[command(
    name = "akfock",
    version,
    about = "Crystal graphs, canonical bases, decomposition matrices and canonical basic sets \
             for Ariki-Koike algebras at roots of unity, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Order of the root of unity (e >= 2).
    #[arg(long)]
    e: u32,
    /// Number of components; inferred from --charges or --type if omitted.
    #[arg(long)]
    d: Option<u32>,
    /// Comma-separated charges v_0,...,v_{d-1}, weakly increasing in [0, e).
    #[arg(long)]
    charges: Option<String>,
    /// Weyl-type preset: A (d=1, charge 0), B (even e: charges 1,e/2),
    /// D (even e: charges 0,e/2).
    #[arg(long = "type", value_name = "A|B|D")]
    weyl_type: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List all d-partitions of rank n.
    Enumerate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Generate the crystal graph up to rank n.
    Crystal {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_name = "am|flotw")]
        order: String,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// List the FLOTW d-partitions of rank n.
    Flotw {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// List the Kleshchev d-partitions of rank n.
    Kleshchev {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// The a-sequence of residues of a FLOTW multipartition.
    Aseq {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        mp: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// The a-value of a multipartition (shifted; comparable within a rank).
    Avalue {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        mp: String,
        /// Optional rank check; must equal the rank of --mp.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// The monomial vector A(lambda) of a FLOTW multipartition.
    Avector {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        mp: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// The canonical basis columns of rank n.
    Canbasis {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_name = "am|flotw")]
        order: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// The decomposition matrix at q = 1 (or with polynomial entries).
    Decmat {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_name = "am|flotw")]
        order: String,
        #[arg(long, default_value = "tsv")]
        format: String,
        /// Emit polynomial entries before evaluation (requires json format).
        #[arg(long)]
        with_q: bool,
    },
    /// Run the canonical-basic-set checks and report per-check results.
    VerifyCbs {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// The canonical basic set for a Weyl type.
    Basicset {
        #[arg(long = "type", value_name = "A|B|D")]
        weyl_type: String,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

enum CliError {
    Domain(String),
    Usage(String),
}

impl From<akfock::Error> for CliError {
    fn from(err: akfock::Error) -> Self {
        CliError::Domain(err.to_string())
    }
}

fn domain<T: std::fmt::Display>(msg: T) -> CliError {
    CliError::Domain(msg.to_string())
}

fn usage<T: std::fmt::Display>(msg: T) -> CliError {
    CliError::Usage(msg.to_string())
}

impl ParamArgs {
    fn resolve(&self) -> Result<ChargeParams, CliError> {
        let charges: Vec<u32> = match (&self.charges, &self.weyl_type) {
            (Some(_), Some(_)) => {
                return Err(usage("pass either --charges or --type, not both"));
            }
            (Some(text), None) => {
                let mut out = Vec::new();
                for tok in text.split(',') {
                    out.push(
                        tok.trim()
                            .parse::<u32>()
                            .map_err(|_| domain(format!("bad charge {tok:?}")))?,
                    );
                }
                out
            }
            (None, Some(kind)) => match kind.as_str() {
                "A" => vec![0],
                "B" if self.e.is_multiple_of(2) => vec![1, self.e / 2],
                "D" if self.e.is_multiple_of(2) => vec![0, self.e / 2],
                "B" | "D" => {
                    return Err(domain(format!(
                        "--type {kind} expands to a single charge datum only for even e; \
                         odd e is not a single Fock-space parameter choice (use basicset)"
                    )));
                }
                other => return Err(usage(format!("unknown type {other:?}"))),
            },
            (None, None) => return Err(usage("one of --charges or --type is required")),
        };
        if let Some(d) = self.d {
            if d as usize != charges.len() {
                return Err(domain(format!(
                    "--d {d} does not match {} charges",
                    charges.len()
                )));
            }
        }
        ChargeParams::new(self.e, charges).map_err(CliError::from)
    }
}

fn parse_order(text: &str) -> Result<OrderKind, CliError> {
    match text {
        "am" => Ok(OrderKind::Am),
        "flotw" => Ok(OrderKind::Flotw),
        other => Err(usage(format!("unknown order {other:?} (expected am or flotw)"))),
    }
}

fn parse_mp(text: &str, params: &ChargeParams) -> Result<Multipartition, CliError> {
    let mp: Multipartition = text.parse().map_err(CliError::from)?;
    if mp.d() != params.d() {
        return Err(domain(format!(
            "multipartition has {} components but the parameters have d = {}",
            mp.d(),
            params.d()
        )));
    }
    Ok(mp)
}

fn list_output(items: &[Multipartition], format: &str) -> Result<String, CliError> {
    match format {
        "text" => Ok(items
            .iter()
            .map(Multipartition::to_string)
            .collect::<Vec<_>>()
            .join("\n")),
        "json" => {
            let body: Vec<String> = items.iter().map(|m| format!("\"{m}\"")).collect();
            Ok(format!("[{}]", body.join(",")))
        }
        other => Err(usage(format!("unsupported format {other:?} for a list"))),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Enumerate { params, n, format } => {
            let pr = params.resolve()?;
            list_output(&enumerate_multipartitions(pr.d(), n), &format)
        }
        Command::Flotw { params, n, format } => {
            let pr = params.resolve()?;
            let items: Vec<Multipartition> = enumerate_multipartitions(pr.d(), n)
                .into_iter()
                .filter(|m| is_flotw(m, &pr))
                .collect();
            list_output(&items, &format)
        }
        Command::Kleshchev { params, n, format } => {
            let pr = params.resolve()?;
            list_output(&kleshchev_multipartitions(&pr, n), &format)
        }
        Command::Crystal { params, n, order, format } => {
            let pr = params.resolve()?;
            let order = parse_order(&order)?;
            let graph = generate_crystal(order, &pr, n);
            match format.as_str() {
                "dot" => Ok(graph.to_dot().trim_end().to_string()),
                "json" => {
                    let vertices: Vec<String> = graph
                        .layers()
                        .iter()
                        .enumerate()
                        .flat_map(|(rank, layer)| {
                            layer
                                .iter()
                                .map(move |m| format!("{{\"mp\":\"{m}\",\"rank\":{rank}}}"))
                        })
                        .collect();
                    let edges: Vec<String> = graph
                        .edges()
                        .iter()
                        .map(|edge| {
                            format!(
                                "{{\"source\":\"{}\",\"residue\":{},\"target\":\"{}\"}}",
                                edge.source, edge.residue, edge.target
                            )
                        })
                        .collect();
                    Ok(format!(
                        "{{\"vertices\":[{}],\"edges\":[{}]}}",
                        vertices.join(","),
                        edges.join(",")
                    ))
                }
                other => Err(usage(format!("unsupported crystal format {other:?}"))),
            }
        }
        Command::Aseq { params, mp, format } => {
            let pr = params.resolve()?;
            let lambda = parse_mp(&mp, &pr)?;
            let seq = a_sequence(&lambda, &pr)?;
            match format.as_str() {
                "text" => Ok(seq.to_string()),
                "json" => {
                    let flat: Vec<String> =
                        seq.flatten().iter().map(u32::to_string).collect();
                    let runs: Vec<String> = seq
                        .runs()
                        .iter()
                        .map(|(residue, mult)| format!("[{residue},{mult}]"))
                        .collect();
                    Ok(format!(
                        "{{\"mp\":\"{lambda}\",\"a_sequence\":[{}],\"runs\":[{}]}}",
                        flat.join(","),
                        runs.join(",")
                    ))
                }
                other => Err(usage(format!("unsupported aseq format {other:?}"))),
            }
        }
        Command::Avalue { params, mp, n, format } => {
            let pr = params.resolve()?;
            let lambda = parse_mp(&mp, &pr)?;
            let rank = n.unwrap_or_else(|| lambda.rank());
            let value = a_value(&lambda, &pr, rank)?;
            match format.as_str() {
                "text" => Ok(value.to_string()),
                "json" => Ok(format!("{{\"mp\":\"{lambda}\",\"a_value\":\"{value}\"}}")),
                other => Err(usage(format!("unsupported avalue format {other:?}"))),
            }
        }
        Command::Avector { params, mp, format } => {
            let pr = params.resolve()?;
            let lambda = parse_mp(&mp, &pr)?;
            let vector = a_vector(&lambda, &pr)?;
            match format.as_str() {
                "json" => Ok(vector.to_json()),
                "text" => Ok(vector
                    .terms()
                    .map(|(m, c)| format!("{m}\t{c}"))
                    .collect::<Vec<_>>()
                    .join("\n")),
                other => Err(usage(format!("unsupported avector format {other:?}"))),
            }
        }
        Command::Canbasis { params, n, order, format } => {
            let pr = params.resolve()?;
            let order = parse_order(&order)?;
            let columns = canonical_basis(&pr, n, order)?;
            match format.as_str() {
                "json" => {
                    let body: Vec<String> = columns
                        .iter()
                        .map(|col| {
                            format!(
                                "{{\"label\":\"{}\",\"vector\":{}}}",
                                col.label,
                                col.vector.to_json()
                            )
                        })
                        .collect();
                    Ok(format!("[{}]", body.join(",")))
                }
                "text" => {
                    let mut out = Vec::new();
                    for col in &columns {
                        out.push(format!("G({})", col.label));
                        for (m, c) in col.vector.terms() {
                            out.push(format!("    {m}\t{c}"));
                        }
                    }
                    Ok(out.join("\n"))
                }
                other => Err(usage(format!("unsupported canbasis format {other:?}"))),
            }
        }
        Command::Decmat { params, n, order, format, with_q } => {
            let pr = params.resolve()?;
            let order = parse_order(&order)?;
            if with_q && format != "json" {
                return Err(usage("--with-q requires --format json"));
            }
            match format.as_str() {
                "tsv" => Ok(decomposition_matrix(&pr, n, order)?
                    .to_tsv()
                    .trim_end()
                    .to_string()),
                "json" if with_q => {
                    let columns = canonical_basis(&pr, n, order)?;
                    let rows: Vec<String> = enumerate_multipartitions(pr.d(), n)
                        .iter()
                        .map(|m| format!("\"{m}\""))
                        .collect();
                    let body: Vec<String> = columns
                        .iter()
                        .map(|col| {
                            format!(
                                "{{\"label\":\"{}\",\"entries\":{}}}",
                                col.label,
                                col.vector.to_json()
                            )
                        })
                        .collect();
                    Ok(format!(
                        "{{\"rows\":[{}],\"columns\":[{}]}}",
                        rows.join(","),
                        body.join(",")
                    ))
                }
                "json" => {
                    let matrix = decomposition_matrix(&pr, n, order)?;
                    let rows: Vec<String> = matrix
                        .row_labels()
                        .iter()
                        .map(|m| format!("\"{m}\""))
                        .collect();
                    let cols: Vec<String> = matrix
                        .column_labels()
                        .iter()
                        .map(|m| format!("\"{m}\""))
                        .collect();
                    let entries: Vec<String> = (0..matrix.row_labels().len())
                        .map(|r| {
                            let row: Vec<String> = (0..matrix.column_labels().len())
                                .map(|c| matrix.entry(r, c).to_string())
                                .collect();
                            format!("[{}]", row.join(","))
                        })
                        .collect();
                    Ok(format!(
                        "{{\"rows\":[{}],\"columns\":[{}],\"entries\":[{}]}}",
                        rows.join(","),
                        cols.join(","),
                        entries.join(",")
                    ))
                }
                other => Err(usage(format!("unsupported decmat format {other:?}"))),
            }
        }
        Command::VerifyCbs { params, n, format } => {
            let pr = params.resolve()?;
            let report = verify_cbs(&pr, n)?;
            match format.as_str() {
                "text" => Ok(report.to_string().trim_end().to_string()),
                "json" => Ok(report.to_json()),
                other => Err(usage(format!("unsupported verify-cbs format {other:?}"))),
            }
        }
        Command::Basicset { weyl_type, e, n, format } => {
            if e < 2 {
                return Err(domain("e must be >= 2"));
            }
            let kind = match weyl_type.as_str() {
                "A" => 'A',
                "B" => 'B',
                "D" => 'D',
                other => return Err(usage(format!("unknown type {other:?}"))),
            };
            match format.as_str() {
                "json" => Ok(basic_set_json(kind, e, n)),
                "text" => {
                    let lines: Vec<String> = match kind {
                        'A' => basic_set_a(e, n).iter().map(|p| p.to_string()).collect(),
                        'B' => basic_set_b(e, n).iter().map(|b| b.to_string()).collect(),
                        _ => basic_set_d(e, n).iter().map(TypeDLabel::to_string).collect(),
                    };
                    Ok(lines.join("\n"))
                }
                other => Err(usage(format!("unsupported basicset format {other:?}"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
