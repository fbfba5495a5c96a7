//! Rendering of results as text tables or one JSON document.
//!
//! Reports are sorted by check name so that output is canonical.

use std::fmt::Write as _;
use std::io::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

use qsets::monad::potential::PotentialSubset;
use qsets::presheaf::PresheafCategory;
use qsets::qcat::QCategory;
use qsets::quantale::LawvereValue;
use qsets::{Elem, FiniteQuantale, LawReport, Quantaloid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

pub struct Output {
    format: Format,
    text: String,
    sections: serde_json::Map<String, Value>,
    reports: Vec<LawReport>,
}

impl Output {
    pub fn new(format: Format) -> Self {
        Output {
            format,
            text: String::new(),
            sections: serde_json::Map::new(),
            reports: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(LawReport::passed)
    }

    pub fn report(&mut self, report: LawReport) {
        let report = report.sorted();
        if self.format == Format::Table {
            let _ = write!(self.text, "{report}");
        }
        self.reports.push(report);
    }

    pub fn dstar(&mut self, k: &Quantaloid) {
        let objects: Vec<&str> = k.objects().map(|p| k.object_name(p)).collect();
        let mut homs = Vec::new();
        for p in k.objects() {
            for q in k.objects() {
                let elems: Vec<&str> = k.hom(p, q).iter().map(|&e| k.show(e)).collect();
                if self.format == Format::Table {
                    let _ = writeln!(
                        self.text,
                        "hom({}, {}) = {{{}}}",
                        k.object_name(p),
                        k.object_name(q),
                        elems.join(", ")
                    );
                }
                homs.push(
                    json!({ "from": k.object_name(p), "to": k.object_name(q), "elements": elems }),
                );
            }
        }
        if self.format == Format::Table {
            self.text = format!("objects: {}\n{}", objects.join(", "), self.text);
        }
        self.sections.insert("objects".into(), json!(objects));
        self.sections.insert("homs".into(), json!(homs));
    }

    pub fn presheaves(&mut self, x: &QCategory, px: &PresheafCategory, hom: bool) {
        let k = x.quantaloid();
        let rendered: Vec<String> = px
            .elems()
            .iter()
            .map(|mu| mu.render(k, x.labels()))
            .collect();
        if self.format == Format::Table {
            let _ = writeln!(self.text, "{} presheaves", rendered.len());
            for (i, r) in rendered.iter().enumerate() {
                let _ = writeln!(self.text, "  p{i}  {r}");
            }
        }
        self.sections.insert("presheaves".into(), json!(rendered));
        if hom {
            let c = px.category();
            let matrix: Vec<Vec<&str>> = (0..c.len())
                .map(|i| (0..c.len()).map(|j| c.show(c.alpha(i, j))).collect())
                .collect();
            if self.format == Format::Table {
                let _ = writeln!(self.text, "hom matrix (row p_i, column p_j):");
                for (i, row) in matrix.iter().enumerate() {
                    let _ = writeln!(self.text, "  p{i}  {}", row.join(" "));
                }
            }
            self.sections.insert("hom".into(), json!(matrix));
        }
    }

    pub fn potential_subsets(
        &mut self,
        q: &FiniteQuantale,
        labels: &[String],
        subsets: &[PotentialSubset<Elem>],
    ) {
        let rendered: Vec<String> = subsets.iter().map(|s| s.render(q, labels)).collect();
        if self.format == Format::Table {
            let _ = writeln!(self.text, "{} potential subsets", rendered.len());
            for r in &rendered {
                let _ = writeln!(self.text, "  {r}");
            }
        }
        self.sections
            .insert("potential_subsets".into(), json!(rendered));
    }

    pub fn intervals(&mut self, labels: &[String], alpha: &[Vec<LawvereValue>]) {
        if self.format == Format::Table {
            let _ = writeln!(
                self.text,
                "{} intervals: {}",
                labels.len(),
                labels.join(" ")
            );
        }
        let rows: Vec<Vec<String>> = alpha
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        self.sections.insert("intervals".into(), json!(labels));
        self.sections.insert("alpha".into(), json!(rows));
    }

    /// Writes everything to stdout. A closed pipe is not an error.
    pub fn emit(self) {
        let passed = self.passed();
        let text = match self.format {
            Format::Table => format!(
                "{}{}\n",
                self.text,
                if passed { "ALL PASS" } else { "FAILED" }
            ),
            Format::Json => {
                let mut doc = self.sections;
                doc.insert("status".into(), json!(if passed { "pass" } else { "fail" }));
                doc.insert("reports".into(), json!(self.reports));
                let body =
                    serde_json::to_string_pretty(&Value::Object(doc)).expect("reports serialize");
                body + "\n"
            }
        };
        let _ = std::io::stdout().lock().write_all(text.as_bytes());
    }
}
