//! Structured text reports: one record per line, fixed field order, so
//! identical runs produce byte-identical output modulo the trailing timing
//! fields.

use std::fmt;

/// One report record: a tag followed by `key=value` fields in insertion
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    tag: &'static str,
    fields: Vec<(&'static str, String)>,
}

impl Record {
    pub fn new(tag: &'static str) -> Self {
        Record {
            tag,
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: &'static str, value: impl fmt::Display) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn tag(&self) -> &str {
        self.tag
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        for (key, value) in &self.fields {
            write!(f, " {key}={value}")?;
        }
        Ok(())
    }
}

/// A full report: an ordered list of records.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            out.push_str(&record.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
