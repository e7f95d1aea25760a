//! Machine- and human-readable reports.

use std::fmt::Write;

use cohomotopy_core::abelian::FinAbGroup;
use cohomotopy_core::classify::CohomotopyReport;
use cohomotopy_core::manifold::ManifoldData;
use serde::{Deserialize, Serialize};

use crate::document::{ElementDoc, GroupDoc};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeDoc {
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi2Doc {
    pub alpha: ElementDoc,
    pub fiber: GroupDoc,
    pub twisted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub parity: String,
    pub spin: bool,
    #[serde(rename = "type")]
    pub type_tag: TypeDoc,
    pub pi1: GroupDoc,
    pub pi3: GroupDoc,
    pub pi4: GroupDoc,
    pub pi2: Vec<Pi2Doc>,
    pub bound: u32,
}

impl ReportDocument {
    pub fn new(x: &ManifoldData, r: &CohomotopyReport) -> Self {
        ReportDocument {
            parity: r.parity.to_string(),
            spin: r.spin,
            type_tag: TypeDoc {
                tag: r.type_tag.name().to_string(),
                radius: r.type_tag.radius(),
            },
            pi1: GroupDoc::from_group(&r.pi1),
            pi3: GroupDoc::from_group(&r.pi3),
            pi4: GroupDoc::from_group(&r.pi4),
            pi2: r
                .pi2
                .iter()
                .map(|row| Pi2Doc {
                    alpha: ElementDoc::from_element(&x.h2, &row.alpha),
                    fiber: GroupDoc::from_group(&row.fiber),
                    twisted: row.twisted,
                })
                .collect(),
            bound: r.bound,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn coords(x: &ElementDoc) -> String {
    let parts: Vec<String> = x.torsion.iter().chain(&x.free).map(|n| n.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn render_text(x: &ManifoldData, r: &CohomotopyReport) -> String {
    let mut out = String::new();
    let g = |g: &FinAbGroup| g.to_string();
    writeln!(out, "H_1 = {}, H_2 = {}, b_3 = {}", g(&x.h1), g(&x.h2), x.h3_rank).unwrap();
    writeln!(out, "parity: {}", r.parity).unwrap();
    writeln!(out, "spin: {}", if r.spin { "yes" } else { "no" }).unwrap();
    writeln!(out, "type: {}", r.type_tag).unwrap();
    writeln!(out, "pi^1 = {}", g(&r.pi1)).unwrap();
    writeln!(out, "pi^3 = {}", g(&r.pi3)).unwrap();
    writeln!(out, "pi^4 = {}", g(&r.pi4)).unwrap();
    writeln!(out, "pi^n = 0 for n >= 5").unwrap();
    writeln!(
        out,
        "pi^2 fibers over self-intersection zero classes (free coordinates in [-{b}, {b}]):",
        b = r.bound
    )
    .unwrap();

    let rows: Vec<(String, String, &str)> = r
        .pi2
        .iter()
        .map(|row| {
            let a = coords(&ElementDoc::from_element(&x.h2, &row.alpha));
            (a, g(&row.fiber), if row.twisted { "yes" } else { "no" })
        })
        .collect();
    let wa = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0).max(5);
    let wf = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0).max(5);
    writeln!(out, "  {:<wa$}  {:<wf$}  twisted", "alpha", "fiber").unwrap();
    for (a, f, t) in &rows {
        writeln!(out, "  {a:<wa$}  {f:<wf$}  {t}").unwrap();
    }
    out
}
