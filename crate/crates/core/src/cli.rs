//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when an identity or bound check fails, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::abacus::{normalized_display, to_bead_sequence, two_quotient, AbacusDisplay};
use crate::asymptotics::{
    check_combinatorial_lower, check_erdos_upper, check_maroti_lower, format_significant, ratio_table, ratio_table_csv,
    BoundReport, BoundVerdict, EstimateKind, ExactTables,
};
use crate::enumeration::{bijection_decomposition, table, CountKind};
use crate::error::AbacusError;
use crate::partition::{parse_partition, Partition};
use crate::series::{
    compare, gauss_sides, q_ratio_sides, q_theta_sides, quotient_identity_sides, tree_product_sides, IdentityReport,
    TruncatedSeries, Verdict,
};
use crate::tree::{tree_decode, tree_encode, QuotientTree};

pub const MAX_N_ENV: &str = "ABACUS_MAX_N";
pub const DEFAULT_MAX_N: usize = 5000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "abacus", version, about = "Integer partitions on the two-runner abacus")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    Gauss,
    Quotient,
    TreeProduct,
    QIdentities,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Show a partition's rim sequence, abacus display and conjugate.
    Show {
        partition: String,
        #[arg(long)]
        abacus: bool,
        #[arg(long)]
        rim: bool,
        #[arg(long)]
        conjugate: bool,
    },
    /// Print the 2-core and 2-quotient.
    CoreQuotient { partition: String },
    /// Encode a partition as a quotient tree, or decode a JSON tree.
    Tree {
        partition: Option<String>,
        #[arg(long, value_name = "JSON")]
        decode: Option<String>,
    },
    /// Exact value of p, t, s or q at n, or a table on 0..=N.
    Count {
        kind: String,
        n: Option<usize>,
        #[arg(long, value_name = "N")]
        table: Option<usize>,
    },
    /// Verify a generating-function identity coefficient by coefficient.
    Verify {
        #[arg(value_enum)]
        identity: IdentityName,
        #[arg(long)]
        order: usize,
        /// Add 1 to the left-hand coefficient at this index first.
        #[arg(long, value_name = "INDEX")]
        perturb: Option<usize>,
    },
    /// Check the upper and lower bounds on p(n) for 1 ≤ n ≤ max-n.
    Bounds {
        #[arg(long)]
        max_n: usize,
    },
    /// Compare exact counts with their asymptotic formulas.
    Asymptotics {
        kind: String,
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct CliConfig {
    pub max_n: usize,
}

impl CliConfig {
    /// Reads `ABACUS_MAX_N`, falling back to the default when unset or invalid.
    pub fn from_env() -> Self {
        let max_n = std::env::var(MAX_N_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_N);
        Self { max_n }
    }
}

impl Default for CliConfig {
    fn default() -> Self {
        Self { max_n: DEFAULT_MAX_N }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<AbacusError> for CliError {
    fn from(e: AbacusError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// `Ok(true)` on success, `Ok(false)` when a check failed.
type CmdResult = Result<bool, CliError>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_config(args, &CliConfig::from_env(), out, err)
}

pub fn run_with_config<I, T>(args: I, config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, config, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "run `abacus --help` for usage");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn dispatch(cli: &Cli, config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Show { partition, abacus, rim, conjugate } => {
            let lam = parse_partition(partition)?;
            let all = !(*abacus || *rim || *conjugate);
            show(&lam, all || *rim, all || *abacus, all || *conjugate, fmt, out)
        }
        Command::CoreQuotient { partition } => core_quotient(&parse_partition(partition)?, fmt, out),
        Command::Tree { partition, decode } => match (partition, decode) {
            (None, Some(json)) => decode_tree(json, fmt, out),
            (Some(p), None) => encode_tree(&parse_partition(p)?, fmt, out),
            _ => Err(CliError::Usage("give either a partition or --decode <json>".into())),
        },
        Command::Count { kind, n, table } => count(kind.parse()?, *n, *table, config, fmt, out),
        Command::Verify { identity, order, perturb } => verify(*identity, *order, *perturb, config, fmt, out),
        Command::Bounds { max_n } => bounds(*max_n, config, fmt, out),
        Command::Asymptotics { kind, points } => asymptotics(kind.parse()?, points, config, fmt, out),
    }
}

fn check_cap(n: usize, config: &CliConfig) -> Result<(), CliError> {
    if n > config.max_n {
        Err(CliError::Usage(format!("{n} exceeds the table cap {} (set {MAX_N_ENV} to raise it)", config.max_n)))
    } else {
        Ok(())
    }
}

fn display_rows(d: &AbacusDisplay) -> Vec<String> {
    d.rows().iter().map(|r| format!("{}{}", r[0].symbol(), r[1].symbol())).collect()
}

fn write_pairs(pairs: &[(&str, String)], fmt: Format, out: &mut dyn Write) -> io::Result<()> {
    match fmt {
        Format::Text => pairs.iter().try_for_each(|(k, v)| writeln!(out, "{k}: {v}")),
        Format::Csv => {
            writeln!(out, "field,value")?;
            pairs.iter().try_for_each(|(k, v)| writeln!(out, "{k},\"{v}\""))
        }
        Format::Json => unreachable!("JSON output is built per command"),
    }
}

fn show(lam: &Partition, rim: bool, abacus: bool, conjugate: bool, fmt: Format, out: &mut dyn Write) -> CmdResult {
    let seq = to_bead_sequence(lam);
    let display = normalized_display(lam);
    match fmt {
        Format::Json => {
            let mut obj = json!({ "partition": lam, "size": lam.size() });
            if rim {
                obj["sequence"] = json!(seq.to_string());
            }
            if abacus {
                obj["abacus"] = json!(display_rows(&display));
            }
            if conjugate {
                obj["conjugate"] = json!(lam.conjugate());
            }
            writeln!(out, "{obj}")?;
        }
        Format::Text => {
            writeln!(out, "partition: {lam}")?;
            writeln!(out, "size: {}", lam.size())?;
            if rim {
                writeln!(out, "sequence: {seq}")?;
            }
            if abacus {
                writeln!(out, "abacus:")?;
                if !display.rows().is_empty() {
                    writeln!(out, "{display}")?;
                }
            }
            if conjugate {
                writeln!(out, "conjugate: {}", lam.conjugate())?;
            }
        }
        Format::Csv => {
            let mut pairs = vec![("partition", lam.to_string()), ("size", lam.size().to_string())];
            if rim {
                pairs.push(("sequence", seq.to_string()));
            }
            if abacus {
                pairs.push(("abacus", display_rows(&display).join("/")));
            }
            if conjugate {
                pairs.push(("conjugate", lam.conjugate().to_string()));
            }
            write_pairs(&pairs, fmt, out)?;
        }
    }
    Ok(true)
}

fn core_quotient(lam: &Partition, fmt: Format, out: &mut dyn Write) -> CmdResult {
    let cq = two_quotient(lam);
    match fmt {
        Format::Json => {
            let obj = json!({
                "partition": lam,
                "core": cq.core(),
                "core_index": cq.core_index,
                "mu": cq.mu,
                "nu": cq.nu,
            });
            writeln!(out, "{obj}")?;
        }
        _ => {
            let pairs = [
                ("partition", lam.to_string()),
                ("core", cq.core().to_string()),
                ("core_index", cq.core_index.to_string()),
                ("mu", cq.mu.to_string()),
                ("nu", cq.nu.to_string()),
            ];
            write_pairs(&pairs, fmt, out)?;
        }
    }
    Ok(true)
}

fn encode_tree(lam: &Partition, fmt: Format, out: &mut dyn Write) -> CmdResult {
    let tree = tree_encode(lam);
    match fmt {
        Format::Json => writeln!(out, "{}", tree.to_json())?,
        Format::Text => writeln!(out, "{tree}")?,
        Format::Csv => write_pairs(&[("partition", lam.to_string()), ("tree", tree.to_string())], fmt, out)?,
    }
    Ok(true)
}

fn decode_tree(text: &str, fmt: Format, out: &mut dyn Write) -> CmdResult {
    let tree = QuotientTree::from_json(text)?;
    let lam = tree_decode(&tree)?;
    match fmt {
        Format::Json => writeln!(out, "{}", json!({ "partition": lam }))?,
        Format::Text => writeln!(out, "{lam}")?,
        Format::Csv => write_pairs(&[("partition", lam.to_string())], fmt, out)?,
    }
    Ok(true)
}

fn count(
    kind: CountKind,
    n: Option<usize>,
    table_max: Option<usize>,
    config: &CliConfig,
    fmt: Format,
    out: &mut dyn Write,
) -> CmdResult {
    match (n, table_max) {
        (Some(n), None) => {
            check_cap(n, config)?;
            let values = table(kind, n);
            let value = values.get(n)?;
            match fmt {
                Format::Text => writeln!(out, "{value}")?,
                Format::Csv => writeln!(out, "n,value\n{n},{value}")?,
                Format::Json => {
                    let mut obj = json!({ "kind": kind.to_string(), "n": n, "value": value.to_string() });
                    if kind == CountKind::P {
                        let terms: Vec<_> = bijection_decomposition(n).into_iter().map(|(_, k)| k).collect();
                        obj["pair_count_indices"] = json!(terms);
                    }
                    writeln!(out, "{obj}")?;
                }
            }
        }
        (None, Some(max)) => {
            check_cap(max, config)?;
            let values = table(kind, max);
            match fmt {
                Format::Text => {
                    for (i, v) in values.values().iter().enumerate() {
                        writeln!(out, "{i} {v}")?;
                    }
                }
                Format::Csv => write!(out, "{}", values.to_csv())?,
                Format::Json => writeln!(out, "{}", values.to_json())?,
            }
        }
        _ => return Err(CliError::Usage("give exactly one of <n> or --table N".into())),
    }
    Ok(true)
}

fn identity_sides(identity: IdentityName, order: usize) -> Vec<(&'static str, (TruncatedSeries, TruncatedSeries))> {
    match identity {
        IdentityName::Gauss => vec![("gauss", gauss_sides(order))],
        IdentityName::Quotient => vec![("quotient", quotient_identity_sides(order))],
        IdentityName::TreeProduct => vec![("tree-product", tree_product_sides(order))],
        IdentityName::QIdentities => vec![("q-ratio", q_ratio_sides(order)), ("q-theta", q_theta_sides(order))],
    }
}

fn verify(
    identity: IdentityName,
    order: usize,
    perturb: Option<usize>,
    config: &CliConfig,
    fmt: Format,
    out: &mut dyn Write,
) -> CmdResult {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    check_cap(order, config)?;
    if let Some(i) = perturb.filter(|&i| i > order) {
        return Err(CliError::Usage(format!("perturbation index {i} exceeds order {order}")));
    }
    let reports: Vec<IdentityReport> = identity_sides(identity, order)
        .into_iter()
        .map(|(name, (mut lhs, rhs))| {
            if let Some(i) = perturb {
                lhs.set_coeff(i, lhs.coeff(i) + 1);
            }
            IdentityReport { identity: name, order, verdict: compare(&lhs, &rhs) }
        })
        .collect();
    let several = reports.len() > 1;
    match fmt {
        Format::Text => {
            for r in &reports {
                if several {
                    write!(out, "{}: ", r.identity)?;
                }
                writeln!(out, "{r}")?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(&reports).expect("reports serialize"))?,
        Format::Csv => {
            writeln!(out, "identity,order,status,index,lhs,rhs")?;
            for r in &reports {
                match &r.verdict {
                    Verdict::Equal => writeln!(out, "{},{},equal,,,", r.identity, r.order)?,
                    Verdict::Mismatch { index, lhs, rhs } => {
                        writeln!(out, "{},{},mismatch,{index},{lhs},{rhs}", r.identity, r.order)?
                    }
                }
            }
        }
    }
    Ok(reports.iter().all(IdentityReport::is_equal))
}

fn bounds(max_n: usize, config: &CliConfig, fmt: Format, out: &mut dyn Write) -> CmdResult {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    check_cap(max_n, config)?;
    let p = table(CountKind::P, max_n);
    let mut reports: Vec<BoundReport> = vec![check_erdos_upper(&p, max_n)?, check_maroti_lower(&p, max_n)?];
    reports.extend(check_combinatorial_lower(&p, max_n)?);
    match fmt {
        Format::Text => reports.iter().try_for_each(|r| writeln!(out, "{r}"))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&reports).expect("reports serialize"))?,
        Format::Csv => {
            writeln!(out, "bound,n_lo,n_hi,status,first_violation,min_slack,max_slack")?;
            for r in &reports {
                let (status, first) = match r.verdict {
                    BoundVerdict::Holds => ("holds", String::new()),
                    BoundVerdict::Violated { first_n } => ("violated", first_n.to_string()),
                };
                writeln!(
                    out,
                    "\"{}\",{},{},{status},{first},{},{}",
                    r.bound_name,
                    r.n_lo,
                    r.n_hi,
                    format_significant(r.min_slack, 10),
                    format_significant(r.max_slack, 10)
                )?;
            }
        }
    }
    Ok(reports.iter().all(BoundReport::holds))
}

fn asymptotics(
    kind: EstimateKind,
    points: &[usize],
    config: &CliConfig,
    fmt: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let top = points.iter().copied().max().unwrap_or(0);
    check_cap(top, config)?;
    let tables = ExactTables::build(top);
    let rows = ratio_table(kind, points, &tables)?;
    match fmt {
        Format::Csv => write!(out, "{}", ratio_table_csv(&rows))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rows).expect("rows serialize"))?,
        Format::Text => {
            for row in &rows {
                writeln!(
                    out,
                    "n = {:>6}  ratio = {}  estimate = {:.9e}  exact = {}",
                    row.n,
                    format_significant(row.ratio, 10),
                    row.estimate,
                    row.exact
                )?;
            }
        }
    }
    Ok(true)
}
