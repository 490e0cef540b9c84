//! Regeneration of the published tables, diffing against embedded expected
//! data, and output emitters.
//!
//! Reproducers and emitters are trait objects looked up by name, so the CLI
//! selects them from its arguments.

mod emit;
mod reproducers;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use emit::{CsvEmitter, EmitterRegistry, JsonEmitter, MarkdownEmitter, OutputEmitter};
pub use reproducers::{
    complex_name, contact_growth, growth_label, ContactTable, ExceptionalTable, ClassicalDimTable,
    AnTable, CnTableReproducer, GrowthTable,
};

use crate::prolong::DEFAULT_MAX_DEGREE;

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("unknown table id {0:?}")]
    UnknownTable(String),
    #[error("unknown output format {0:?}")]
    UnknownFormat(String),
    #[error("embedded data for table {id} is malformed: {msg}")]
    Data { id: String, msg: String },
    #[error("computation failed: {0}")]
    Compute(String),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

/// A table cell; bold marks the entries a table highlights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    pub text: String,
    pub bold: bool,
}

impl Cell {
    pub fn plain(text: impl Into<String>) -> Self {
        Cell {
            text: text.into(),
            bold: false,
        }
    }

    pub fn bold(text: impl Into<String>, bold: bool) -> Self {
        Cell {
            text: text.into(),
            bold,
        }
    }

    /// Reads `**x**` as a bold `x`.
    pub fn parse(s: &str) -> Self {
        match s.strip_prefix("**").and_then(|t| t.strip_suffix("**")) {
            Some(inner) if !inner.is_empty() => Cell::bold(inner, true),
            _ => Cell::plain(s),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bold {
            write!(f, "**{}**", self.text)
        } else {
            f.write_str(&self.text)
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Ok(Cell::parse(&s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub id: String,
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TableDoc {
    pub fn new(id: &str, title: &str, headers: &[&str]) -> Self {
        TableDoc {
            id: id.to_string(),
            title: title.to_string(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    pub fn push_plain<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|s| Cell::plain(s)).collect());
    }

    pub fn from_json_str(id: &str, s: &str) -> Result<Self, TableError> {
        serde_json::from_str(s).map_err(|e| TableError::Data {
            id: id.to_string(),
            msg: e.to_string(),
        })
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("table serializes")
    }
}

/// Callback for progress lines on long runs.
pub type Progress = Arc<dyn Fn(&str) + Send + Sync>;

#[derive(Clone)]
pub struct ReproduceOptions {
    /// Include the heaviest prolongations (centre dimension 7 and 8).
    pub long: bool,
    pub max_degree: i32,
    /// Rank bound for the classical-family tables.
    pub rank_max: usize,
    /// Bound on `n` for the `A_n` search.
    pub n_max: usize,
    pub progress: Option<Progress>,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            long: false,
            max_degree: DEFAULT_MAX_DEGREE,
            rank_max: 12,
            n_max: 50,
            progress: None,
        }
    }
}

impl fmt::Debug for ReproduceOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReproduceOptions")
            .field("long", &self.long)
            .field("max_degree", &self.max_degree)
            .field("rank_max", &self.rank_max)
            .field("n_max", &self.n_max)
            .finish()
    }
}

impl ReproduceOptions {
    pub(crate) fn report(&self, line: &str) {
        if let Some(p) = &self.progress {
            p(line);
        }
    }
}

/// A freshly computed table plus the keys of expected rows it did not
/// compute on purpose.
#[derive(Debug, Clone)]
pub struct Generated {
    pub doc: TableDoc,
    pub skipped: Vec<String>,
}

impl From<TableDoc> for Generated {
    fn from(doc: TableDoc) -> Self {
        Generated {
            doc,
            skipped: Vec::new(),
        }
    }
}

pub trait TableReproducer: Send + Sync {
    fn id(&self) -> &'static str;

    fn expected(&self, opts: &ReproduceOptions) -> Result<TableDoc, TableError>;

    fn generate(&self, opts: &ReproduceOptions) -> Result<Generated, TableError>;

    /// Keys used to pair computed and expected rows.
    fn keys(&self, doc: &TableDoc) -> Vec<String> {
        doc.rows
            .iter()
            .map(|r| r.first().map(|c| c.text.clone()).unwrap_or_default())
            .collect()
    }

    /// Computed rows the source leaves out on purpose.
    fn elided(&self, _key: &str) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diff {
    Cell {
        key: String,
        column: String,
        expected: String,
        computed: String,
    },
    MissingRow {
        key: String,
    },
    ExtraRow {
        key: String,
    },
    Headers {
        expected: Vec<String>,
        computed: Vec<String>,
    },
}

impl fmt::Display for Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diff::Cell {
                key,
                column,
                expected,
                computed,
            } => write!(f, "row {key}, column {column}: expected {expected:?}, computed {computed:?}"),
            Diff::MissingRow { key } => write!(f, "row {key}: expected but not computed"),
            Diff::ExtraRow { key } => write!(f, "row {key}: computed but not expected"),
            Diff::Headers { expected, computed } => {
                write!(f, "headers differ: expected {expected:?}, computed {computed:?}")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Reproduction {
    pub computed: TableDoc,
    pub expected: TableDoc,
    pub diffs: Vec<Diff>,
    pub skipped: Vec<String>,
    /// Computed rows absent from the source by design.
    pub elided: Vec<String>,
}

impl Reproduction {
    pub fn is_match(&self) -> bool {
        self.diffs.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let status = if self.is_match() { "match" } else { "MISMATCH" };
        out.push_str(&format!(
            "table {}: {} ({} computed rows, {} expected rows)\n",
            self.computed.id,
            status,
            self.computed.rows.len(),
            self.expected.rows.len()
        ));
        for d in &self.diffs {
            out.push_str(&format!("  {d}\n"));
        }
        if !self.skipped.is_empty() {
            out.push_str(&format!("  not computed (needs --long): {}\n", self.skipped.join(", ")));
        }
        if !self.elided.is_empty() {
            out.push_str(&format!(
                "  computed rows not shown in the source: {}\n",
                self.elided.join(", ")
            ));
        }
        out
    }
}

pub fn diff_tables(
    rep: &dyn TableReproducer,
    computed: &TableDoc,
    expected: &TableDoc,
    skipped: &[String],
) -> (Vec<Diff>, Vec<String>) {
    let mut diffs = Vec::new();
    let mut elided = Vec::new();
    if computed.headers != expected.headers {
        diffs.push(Diff::Headers {
            expected: expected.headers.clone(),
            computed: computed.headers.clone(),
        });
    }
    let ck = rep.keys(computed);
    let ek = rep.keys(expected);
    let by_key: HashMap<&str, &Vec<Cell>> =
        ck.iter().map(String::as_str).zip(&computed.rows).collect();
    for (key, erow) in ek.iter().zip(&expected.rows) {
        let Some(crow) = by_key.get(key.as_str()) else {
            if !skipped.contains(key) {
                diffs.push(Diff::MissingRow { key: key.clone() });
            }
            continue;
        };
        for (c, header) in expected.headers.iter().enumerate() {
            let e = erow.get(c).cloned().unwrap_or_else(|| Cell::plain(""));
            let v = crow.get(c).cloned().unwrap_or_else(|| Cell::plain(""));
            if e != v {
                diffs.push(Diff::Cell {
                    key: key.clone(),
                    column: header.clone(),
                    expected: e.to_string(),
                    computed: v.to_string(),
                });
            }
        }
    }
    for key in &ck {
        if !ek.contains(key) {
            if rep.elided(key) {
                elided.push(key.clone());
            } else {
                diffs.push(Diff::ExtraRow { key: key.clone() });
            }
        }
    }
    (diffs, elided)
}

pub struct ReproducerRegistry {
    entries: BTreeMap<&'static str, Box<dyn TableReproducer>>,
}

impl Default for ReproducerRegistry {
    fn default() -> Self {
        let mut r = ReproducerRegistry {
            entries: BTreeMap::new(),
        };
        r.register(Box::new(ClassicalDimTable));
        r.register(Box::new(ContactTable));
        r.register(Box::new(AnTable));
        r.register(Box::new(CnTableReproducer));
        r.register(Box::new(ExceptionalTable));
        r.register(Box::new(GrowthTable::table8()));
        r.register(Box::new(GrowthTable::table9()));
        r
    }
}

impl ReproducerRegistry {
    pub fn register(&mut self, rep: Box<dyn TableReproducer>) {
        self.entries.insert(rep.id(), rep);
    }

    pub fn get(&self, id: &str) -> Option<&dyn TableReproducer> {
        self.entries.get(id).map(|b| b.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn reproduce(&self, id: &str, opts: &ReproduceOptions) -> Result<Reproduction, TableError> {
        let rep = self
            .get(id)
            .ok_or_else(|| TableError::UnknownTable(id.to_string()))?;
        let expected = rep.expected(opts)?;
        let Generated { doc, skipped } = rep.generate(opts)?;
        let (diffs, elided) = diff_tables(rep, &doc, &expected, &skipped);
        Ok(Reproduction {
            computed: doc,
            expected,
            diffs,
            skipped,
            elided,
        })
    }
}
