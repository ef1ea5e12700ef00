//! Reports: provenance, data rows and verdict records, rendered as an
//! aligned table, CSV or JSON lines.

use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use epiword::analysis::{CheckOutcome, Verdict};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::Result;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Jsonl,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub check: String,
    pub parameters: String,
    pub depth: usize,
    pub verdict: String,
    pub counterexample: Option<String>,
    pub truncated: bool,
}

impl VerdictRecord {
    pub fn new(check: impl Into<String>, parameters: impl Into<String>, depth: usize, pass: bool) -> Self {
        VerdictRecord {
            check: check.into(),
            parameters: parameters.into(),
            depth,
            verdict: if pass { "PASS" } else { "FAIL" }.to_string(),
            counterexample: None,
            truncated: false,
        }
    }

    pub fn with_counterexample(mut self, c: impl Into<String>) -> Self {
        self.counterexample = Some(c.into());
        self
    }

    pub fn from_outcome(parameters: impl Into<String>, out: &CheckOutcome) -> Self {
        let mut r = VerdictRecord::new(out.check, parameters, out.depth, out.verdict.is_pass());
        if let Verdict::Fail(c) = &out.verdict {
            r.counterexample = Some(format!("{} at {}: {}", c.factor, c.position, c.reason));
        }
        r.truncated = out.truncated();
        r
    }

    pub fn passed(&self) -> bool {
        self.verdict == "PASS"
    }
}

/// Rows always start with the prefix depth they were computed at.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub experiment: String,
    pub provenance: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub verdicts: Vec<VerdictRecord>,
}

impl Report {
    pub fn new(experiment: impl Into<String>, columns: &[&str]) -> Self {
        let mut all = vec!["depth".to_string()];
        all.extend(columns.iter().map(|c| c.to_string()));
        Report {
            experiment: experiment.into(),
            provenance: vec![("version".to_string(), env!("CARGO_PKG_VERSION").to_string())],
            columns: all,
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.provenance.push((key.into(), value.to_string()));
        self
    }

    pub fn row<I, S>(&mut self, depth: usize, values: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let mut row = vec![depth.to_string()];
        row.extend(values.into_iter().map(|v| v.to_string()));
        assert_eq!(row.len(), self.columns.len(), "row width differs from the header");
        self.rows.push(row);
    }

    pub fn verdict(&mut self, record: VerdictRecord) {
        self.verdicts.push(record);
    }

    /// All verdicts passed (vacuously true without verdicts).
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(VerdictRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerdictRecord> {
        self.verdicts.iter().filter(|v| !v.passed())
    }

    /// Appends another report's rows and verdicts (columns must match).
    pub fn absorb(&mut self, other: Report) {
        assert_eq!(self.columns, other.columns, "cannot merge reports with different columns");
        self.rows.extend(other.rows);
        self.verdicts.extend(other.verdicts);
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Table => Ok(self.render_table()),
            Format::Csv => self.render_csv(),
            Format::Jsonl => self.render_jsonl(),
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let text = self.render(format)?;
        match out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }

    fn verdict_cells(v: &VerdictRecord) -> Vec<String> {
        vec![
            v.check.clone(),
            v.parameters.clone(),
            v.depth.to_string(),
            v.verdict.clone(),
            v.counterexample.clone().unwrap_or_default(),
            v.truncated.to_string(),
        ]
    }

    const VERDICT_COLUMNS: [&'static str; 6] =
        ["check", "parameters", "depth", "verdict", "counterexample", "truncated"];

    fn render_table(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# experiment: {}", self.experiment).unwrap();
        for (k, v) in &self.provenance {
            writeln!(s, "# {k}: {v}").unwrap();
        }
        if !self.rows.is_empty() {
            s.push('\n');
            table(&mut s, &self.columns, &self.rows);
        }
        if !self.verdicts.is_empty() {
            s.push('\n');
            let header: Vec<String> = Self::VERDICT_COLUMNS.iter().map(|c| c.to_string()).collect();
            let rows: Vec<Vec<String>> = self.verdicts.iter().map(Self::verdict_cells).collect();
            table(&mut s, &header, &rows);
        }
        s
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let mut out = w.into_inner().map_err(|e| e.into_error())?;
        if !self.verdicts.is_empty() {
            out.push(b'\n');
            let mut w = csv::Writer::from_writer(out);
            for v in &self.verdicts {
                w.serialize(v)?;
            }
            out = w.into_inner().map_err(|e| e.into_error())?;
        }
        Ok(String::from_utf8(out).expect("csv output is UTF-8"))
    }

    fn render_jsonl(&self) -> Result<String> {
        let mut s = String::new();
        let provenance: Map<String, Value> =
            self.provenance.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let head = json!({"record": "provenance", "experiment": self.experiment, "config": provenance});
        writeln!(s, "{}", serde_json::to_string(&head)?).unwrap();
        for row in &self.rows {
            let mut obj = Map::new();
            obj.insert("record".into(), "row".into());
            obj.insert("experiment".into(), self.experiment.clone().into());
            for (c, v) in self.columns.iter().zip(row) {
                let value = v.parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::String(v.clone()));
                obj.insert(c.clone(), value);
            }
            writeln!(s, "{}", serde_json::to_string(&obj)?).unwrap();
        }
        for v in &self.verdicts {
            let mut obj = serde_json::to_value(v)?;
            obj["record"] = "verdict".into();
            obj["experiment"] = self.experiment.clone().into();
            writeln!(s, "{}", serde_json::to_string(&obj)?).unwrap();
        }
        Ok(s)
    }
}

fn table(s: &mut String, header: &[String], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |s: &mut String, cells: &[String]| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        writeln!(s, "{}", parts.join("  ").trim_end()).unwrap();
    };
    line(s, header);
    for row in rows {
        line(s, row);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", &["n", "value"]);
        r.param("seed", 7);
        r.row(100, [1, 2]);
        r.row(200, [3, 40]);
        r.verdict(VerdictRecord::new("zero", "n<=3", 200, false).with_counterexample("0110"));
        r
    }

    #[test]
    fn table_layout() {
        let t = sample().render(Format::Table).unwrap();
        assert!(t.starts_with("# experiment: demo\n# version: "));
        assert!(t.contains("depth  n  value\n100    1  2\n200    3  40\n"));
        assert!(t.contains("FAIL"));
        assert!(!sample().passed());
    }

    #[test]
    fn csv_and_jsonl() {
        let c = sample().render(Format::Csv).unwrap();
        assert!(c.starts_with("depth,n,value\n100,1,2\n"));
        assert!(c.contains("check,parameters,depth,verdict,counterexample,truncated\nzero,n<=3,200,FAIL,0110,false"));
        let j = sample().render(Format::Jsonl).unwrap();
        let lines: Vec<Value> = j.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1]["depth"], 100);
        assert_eq!(lines[3]["verdict"], "FAIL");
    }
}
