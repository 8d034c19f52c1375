//! Record streams emitted by the command-line driver.

use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub key: String,
    pub value: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(
        &mut self,
        kind: impl Into<String>,
        key: impl Into<String>,
        value: impl Into<String>,
    ) {
        self.records.push(Record {
            kind: kind.into(),
            key: key.into(),
            value: value.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Records whose kind is `kind`, as `(key, value)` pairs.
    pub fn find<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = (&'a str, &'a str)> + 'a {
        self.records
            .iter()
            .filter(move |r| r.kind == kind)
            .map(|r| (r.key.as_str(), r.value.as_str()))
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Machine => self.machine(),
            Format::Human => self.human(),
        }
    }

    /// One record per line, tab-separated. Tabs and newlines inside fields
    /// are replaced by spaces.
    pub fn machine(&self) -> String {
        let clean = |s: &str| s.replace(['\t', '\n'], " ");
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(
                out,
                "{}\t{}\t{}",
                clean(&r.kind),
                clean(&r.key),
                clean(&r.value)
            );
        }
        out
    }

    /// Columns padded to the widest entry, counted in characters.
    pub fn human(&self) -> String {
        let width = |f: fn(&Record) -> &str| {
            self.records
                .iter()
                .map(|r| f(r).chars().count())
                .max()
                .unwrap_or(0)
        };
        let wk = width(|r| &r.kind);
        let wkey = width(|r| &r.key);
        let mut out = String::new();
        for r in &self.records {
            let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
            let line = format!("{}  {}  {}", pad(&r.kind, wk), pad(&r.key, wkey), r.value);
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_and_human_forms() {
        let mut r = Report::new();
        r.push("stab", "impl_right", "a,1");
        r.push("stab", "mult_stab", "∅");
        assert_eq!(r.machine(), "stab\timpl_right\ta,1\nstab\tmult_stab\t∅\n");
        assert_eq!(r.human(), "stab  impl_right  a,1\nstab  mult_stab   ∅\n");
        assert_eq!(Report::new().machine(), "");
        assert_eq!(r.find("stab").count(), 2);
    }
}
