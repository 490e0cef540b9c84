use std::collections::BTreeMap;

use super::{TableDoc, TableError};

pub trait OutputEmitter: Send + Sync {
    fn name(&self) -> &'static str;
    fn emit(&self, doc: &TableDoc) -> Result<String, TableError>;
}

pub struct JsonEmitter;

impl OutputEmitter for JsonEmitter {
    fn name(&self) -> &'static str {
        "json"
    }

    fn emit(&self, doc: &TableDoc) -> Result<String, TableError> {
        let mut s = serde_json::to_string_pretty(&doc.to_json()).expect("json value prints");
        s.push('\n');
        Ok(s)
    }
}

/// Header row then data rows; notes are dropped.
pub struct CsvEmitter;

impl OutputEmitter for CsvEmitter {
    fn name(&self) -> &'static str {
        "csv"
    }

    fn emit(&self, doc: &TableDoc) -> Result<String, TableError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&doc.headers)?;
        for row in &doc.rows {
            w.write_record(row.iter().map(|c| c.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| TableError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
    }
}

pub struct MarkdownEmitter;

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

impl OutputEmitter for MarkdownEmitter {
    fn name(&self) -> &'static str {
        "md"
    }

    fn emit(&self, doc: &TableDoc) -> Result<String, TableError> {
        let mut out = if doc.id.starts_with(|c: char| c.is_ascii_digit()) {
            format!("### Table {}: {}\n\n", doc.id, doc.title)
        } else {
            format!("### {}\n\n", doc.title)
        };
        let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
        out.push_str(&line(doc.headers.iter().map(|h| md_escape(h)).collect()));
        out.push_str(&line(doc.headers.iter().map(|_| "---".to_string()).collect()));
        for row in &doc.rows {
            out.push_str(&line(row.iter().map(|c| md_escape(&c.to_string())).collect()));
        }
        for n in &doc.notes {
            out.push_str(&format!("\n{n}\n"));
        }
        Ok(out)
    }
}

pub struct EmitterRegistry {
    entries: BTreeMap<&'static str, Box<dyn OutputEmitter>>,
}

impl Default for EmitterRegistry {
    fn default() -> Self {
        let mut r = EmitterRegistry {
            entries: BTreeMap::new(),
        };
        r.register(Box::new(JsonEmitter));
        r.register(Box::new(CsvEmitter));
        r.register(Box::new(MarkdownEmitter));
        r
    }
}

impl EmitterRegistry {
    pub fn register(&mut self, e: Box<dyn OutputEmitter>) {
        self.entries.insert(e.name(), e);
    }

    pub fn get(&self, name: &str) -> Result<&dyn OutputEmitter, TableError> {
        self.entries
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| TableError::UnknownFormat(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::Cell;

    fn doc() -> TableDoc {
        let mut d = TableDoc::new("x", "Sample", &["a", "b"]);
        d.push(vec![Cell::plain("Σ{1,6}"), Cell::bold("8", true)]);
        d
    }

    #[test]
    fn formats() {
        let r = EmitterRegistry::default();
        assert_eq!(r.names(), vec!["csv", "json", "md"]);
        let csv = r.get("csv").unwrap().emit(&doc()).unwrap();
        assert_eq!(csv, "a,b\n\"Σ{1,6}\",**8**\n");
        let md = r.get("md").unwrap().emit(&doc()).unwrap();
        assert!(md.contains("| Σ{1,6} | **8** |"));
        let json = r.get("json").unwrap().emit(&doc()).unwrap();
        let back: TableDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc());
        assert!(r.get("xml").is_err());
    }
}
