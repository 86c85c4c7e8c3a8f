mod document;
mod verify;

use std::process::ExitCode;

use charvar_core::torelli::{torelli_action_table, torelli_table_equivariant_even_with, torelli_table_odd};
use charvar_core::{Error, GenusParams, GradedDims, SpaceId, SpaceValue, Tamper};
use clap::{Parser, Subcommand};

use document::{
    render, table1_document, table1_latex, to_json, ExactMarker, Format, OutputDocument,
    RowDocument, TableFormat, Truncation,
};

/// Largest genus accepted unless `--genus-cap` says otherwise; only bounds
/// output size.
const DEFAULT_GENUS_CAP: i64 = 64;

#[derive(Parser)]
#[command(name = "charvar", version, about = "Betti numbers of SL(2,C) character varieties and Higgs moduli of a surface")]
struct Cli {
    /// Reject genera above this value.
    #[arg(long, global = true, default_value_t = DEFAULT_GENUS_CAP)]
    genus_cap: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers of one space.
    Betti {
        #[arg(long)]
        space: String,
        #[arg(long)]
        genus: i64,
        /// Symmetric-product size for SymProd and PrymCover.
        #[arg(long)]
        n: Option<usize>,
        /// Highest degree to print; required for equivariant series.
        #[arg(long)]
        truncate: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, hide = true)]
        corrupt_formula: bool,
    },
    /// Check every identity for 2 ≤ g ≤ genus-max.
    Verify {
        #[arg(long)]
        genus_max: i64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, hide = true)]
        corrupt_formula: bool,
    },
    /// Torelli decomposition of equivariant cohomology (even) or the Prym
    /// column of the odd-degree moduli space.
    TorelliTable {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        odd: bool,
        /// Highest degree of the even table (default 4g, at least 6g-6).
        #[arg(long)]
        truncate: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The static table of Torelli actions.
    Table1 {
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Formula(Error),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Verification => ExitCode::from(1),
            Failure::Formula(e) => {
                eprintln!("error[{}]: {e}", e.kind());
                ExitCode::from(3)
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGenus(_) => Failure::Usage(e.to_string()),
            other => Failure::Formula(other),
        }
    }
}

fn tamper(corrupt: bool) -> Tamper {
    if corrupt {
        Tamper::DropQuarter
    } else {
        Tamper::None
    }
}

fn genus(g: i64, cap: i64) -> Result<GenusParams, Failure> {
    if g > cap {
        return Err(Failure::Usage(format!("genus {g} exceeds the cap {cap} (see --genus-cap)")));
    }
    Ok(GenusParams::new(g)?)
}

fn betti(
    space: &str,
    p: GenusParams,
    n: Option<usize>,
    truncate: Option<usize>,
    format: Format,
    tamper: Tamper,
) -> Result<String, Failure> {
    let id = SpaceId::parse(space, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let (truncation, dims) = match id.compute_with(p, tamper)? {
        SpaceValue::Polynomial(poly) => match truncate {
            None => (Truncation::Exact(ExactMarker::Exact), GradedDims::exact(&poly)),
            Some(order) => (Truncation::Order(order), GradedDims::from_polynomial(&poly, order)),
        },
        SpaceValue::Series(f) => {
            let order = truncate.ok_or_else(|| {
                Failure::Usage(format!("{id} is an infinite series; pass --truncate <N>"))
            })?;
            let dims = f
                .series(order)
                .map_err(|source| Failure::Formula(Error::Formula { term: "series expansion", source }))?;
            (Truncation::Order(order), dims)
        }
        SpaceValue::Unavailable => {
            return Err(Failure::Usage(format!(
                "Betti numbers of {id} are not available; use `torelli-table --odd`"
            )))
        }
    };
    let doc = OutputDocument {
        space: id.label(),
        genus: p.genus(),
        truncation,
        betti: OutputDocument::betti_strings(&dims),
        decomposition: None,
        provenance: id.provenance(),
    };
    Ok(render(&doc, format))
}

fn torelli_table(p: GenusParams, odd: bool, truncate: Option<usize>, format: Format) -> Result<String, Failure> {
    let doc = if odd {
        let rows = torelli_table_odd(p);
        OutputDocument {
            space: SpaceId::PslOdd.label(),
            genus: p.genus(),
            truncation: Truncation::Order(p.top_degree()),
            betti: Vec::new(),
            decomposition: Some(rows.iter().map(RowDocument::from).collect()),
            provenance: SpaceId::PslOdd.provenance(),
        }
    } else {
        let order = truncate.unwrap_or_else(|| (4 * p.genus() as usize).max(p.top_degree()));
        let rows = torelli_table_equivariant_even_with(p, order, Tamper::None)?;
        let mut provenance = SpaceId::X0Eq.provenance();
        provenance.push((
            "Prym summands".into(),
            "(2^{2g}-1) C(2g-2,q) in degree 6g-6-q for q in {2,4,...,2g-4}".into(),
        ));
        OutputDocument {
            space: SpaceId::X0Eq.label(),
            genus: p.genus(),
            truncation: Truncation::Order(order),
            betti: rows
                .iter()
                .map(|r| r.total.as_ref().map(ToString::to_string).unwrap_or_default())
                .collect(),
            decomposition: Some(rows.iter().map(RowDocument::from).collect()),
            provenance,
        }
    };
    Ok(render(&doc, format))
}

fn run_verify(genus_max: i64, cap: i64, jobs: Option<usize>, tamper: Tamper) -> Result<String, Failure> {
    if genus_max < 2 {
        return Err(Failure::Usage(format!("--genus-max must be at least 2, got {genus_max}")));
    }
    let top = genus(genus_max, cap)?;
    let genera: Vec<GenusParams> = (2..=top.genus() as i64)
        .map(GenusParams::new)
        .collect::<Result<_, _>>()?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let outcomes: Vec<verify::CheckOutcome> = pool.install(|| {
        use rayon::prelude::*;
        genera
            .par_iter()
            .map(|&p| verify::verify_genus(p, tamper))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });

    let mut out = String::new();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        out += &format!("{status} g={} {}", o.genus, o.check);
        if let Some(detail) = &o.detail {
            out += &format!(": {detail}");
        }
        out.push('\n');
    }
    let failures: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
    out += &format!(
        "{} checks, {} failed\n",
        outcomes.len(),
        failures.len()
    );
    if failures.is_empty() {
        Ok(out)
    } else {
        out += &serde_json::to_string(&serde_json::json!({ "failures": failures }))
            .expect("failures serialize");
        out.push('\n');
        print!("{out}");
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cap = cli.genus_cap;
    match cli.command {
        Command::Betti {
            space,
            genus: g,
            n,
            truncate,
            format,
            corrupt_formula,
        } => betti(&space, genus(g, cap)?, n, truncate, format, tamper(corrupt_formula)),
        Command::Verify {
            genus_max,
            jobs,
            corrupt_formula,
        } => run_verify(genus_max, cap, jobs, tamper(corrupt_formula)),
        Command::TorelliTable {
            genus: g,
            odd,
            truncate,
            format,
        } => torelli_table(genus(g, cap)?, odd, truncate, format),
        Command::Table1 { format } => Ok(match format {
            TableFormat::Json => to_json(&table1_document(torelli_action_table())),
            TableFormat::Latex => table1_latex(torelli_action_table()),
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => failure.report(),
    }
}
