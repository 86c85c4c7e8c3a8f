//! Serialized output: Betti tables, decomposition tables and the static
//! Torelli-action table, as JSON, CSV or LaTeX.

use charvar_core::torelli::Table1Row;
use charvar_core::{GradedDims, TorelliRow};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExactMarker {
    #[serde(rename = "exact")]
    Exact,
}

/// Either a truncation order or the marker `"exact"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Truncation {
    Order(usize),
    Exact(ExactMarker),
}

impl std::fmt::Display for Truncation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Truncation::Order(n) => write!(f, "{n}"),
            Truncation::Exact(_) => f.write_str("exact"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDocument {
    pub degree: usize,
    pub total: Option<String>,
    pub invariant: Option<String>,
    pub prym: String,
    pub torelli_trivial: bool,
    pub prym_torelli_trivial: bool,
}

impl From<&TorelliRow> for RowDocument {
    fn from(r: &TorelliRow) -> Self {
        RowDocument {
            degree: r.degree,
            total: r.total.as_ref().map(ToString::to_string),
            invariant: r.invariant.as_ref().map(ToString::to_string),
            prym: r.prym.to_string(),
            torelli_trivial: r.torelli_trivial,
            prym_torelli_trivial: r.prym_torelli_trivial,
        }
    }
}

/// Betti numbers are decimal strings so that arbitrary precision survives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub space: String,
    pub genus: u32,
    pub truncation: Truncation,
    pub betti: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<RowDocument>>,
    pub provenance: Vec<(String, String)>,
}

impl OutputDocument {
    pub fn betti_strings(dims: &GradedDims) -> Vec<String> {
        dims.dims().iter().map(ToString::to_string).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Json,
    Latex,
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => to_csv(doc),
        Format::Latex => to_latex(doc),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn csv_line(fields: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn to_csv(doc: &OutputDocument) -> String {
    let mut out = String::new();
    out += &format!("# space,{}", csv_line(&[&doc.space]));
    out += &format!("# genus,{}\n", doc.genus);
    out += &format!("# truncation,{}\n", doc.truncation);
    for (quantity, source) in &doc.provenance {
        out += &format!("# provenance,{}", csv_line(&[quantity, source]));
    }
    match &doc.decomposition {
        Some(rows) => {
            out += &csv_line(&[
                "degree",
                "total",
                "invariant",
                "prym",
                "torelli_trivial",
                "prym_torelli_trivial",
            ]);
            for r in rows {
                let degree = r.degree.to_string();
                out += &csv_line(&[
                    &degree,
                    r.total.as_deref().unwrap_or(""),
                    r.invariant.as_deref().unwrap_or(""),
                    &r.prym,
                    bool_str(r.torelli_trivial),
                    bool_str(r.prym_torelli_trivial),
                ]);
            }
        }
        None => {
            out += "degree,betti\n";
            for (i, b) in doc.betti.iter().enumerate() {
                out += &format!("{i},{b}\n");
            }
        }
    }
    out
}

fn bool_str(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', r"\textbackslash{}")
        .replace('_', r"\_")
        .replace('^', r"\^{}")
        .replace('&', r"\&")
        .replace('%', r"\%")
        .replace('#', r"\#")
}

fn to_latex(doc: &OutputDocument) -> String {
    let mut out = format!(
        "% space: {}, genus: {}, truncation: {}\n",
        doc.space, doc.genus, doc.truncation
    );
    for (quantity, source) in &doc.provenance {
        out += &format!("% {quantity}: {source}\n");
    }
    match &doc.decomposition {
        Some(rows) => {
            out += "\\begin{tabular}{|| c | c | c | c | c | c ||}\n\\hline\\hline\n";
            out += "$p$ & $b_p$ & $\\Gamma_2$-invariant & Prym & ${\\mathcal I}(M)$ trivial? & ${\\mathcal P}{\\mathcal I}(M)$ trivial? \\\\\n\\hline\\hline\n";
            for r in rows {
                out += &format!(
                    "{} & {} & {} & {} & {} & {} \\\\\n",
                    r.degree,
                    r.total.as_deref().unwrap_or("--"),
                    r.invariant.as_deref().unwrap_or("--"),
                    r.prym,
                    yes_no(r.torelli_trivial),
                    yes_no(r.prym_torelli_trivial)
                );
            }
        }
        None => {
            out += "\\begin{tabular}{|| c | c ||}\n\\hline\\hline\n";
            out += "$p$ & $b_p$ \\\\\n\\hline\\hline\n";
            for (i, b) in doc.betti.iter().enumerate() {
                out += &format!("{i} & {b} \\\\\n");
            }
        }
    }
    out += "\\hline\\hline\n\\end{tabular}\n";
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Entry {
    pub group: String,
    pub trivial: String,
    pub reference: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Document {
    pub caption: String,
    pub rows: Vec<Table1Entry>,
}

const TABLE1_CAPTION: &str =
    "Action of the Torelli group on cohomology of representation varieties (g > 3)";

pub fn table1_document(rows: &[Table1Row]) -> Table1Document {
    Table1Document {
        caption: TABLE1_CAPTION.into(),
        rows: rows
            .iter()
            .map(|r| Table1Entry {
                group: r.label.into(),
                trivial: yes_no(r.trivial).into(),
                reference: r.reference.into(),
            })
            .collect(),
    }
}

pub fn table1_latex(rows: &[Table1Row]) -> String {
    let mut out = String::from("\\begin{tabular}{|| c | c | c ||}\n\\hline\\hline\n");
    out += "Cohomology group & ${\\mathcal I}(M)$ acts trivially? & Reference \\\\\n\\hline\\hline\n";
    for (i, r) in rows.iter().enumerate() {
        out += &format!(
            "{} & {} & {} \\\\\n",
            r.latex,
            yes_no(r.trivial),
            latex_escape(r.reference)
        );
        out += if i % 2 == 1 { "\\hline\\hline\n" } else { "\\hline\n" };
    }
    out += "\\end{tabular}\n";
    out += &format!("% {TABLE1_CAPTION}\n");
    out
}
