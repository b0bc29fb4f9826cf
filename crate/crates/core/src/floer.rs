//! Bigraded Floer ranks of planar singular diagrams, and the chain-level
//! generator table for everything else.
//!
//! On an all-singular diagram every state has Maslov grading equal to twice
//! its Alexander grading, so all generators in one Alexander grading share
//! a Maslov grading and the differential has nowhere to go. The homology is
//! then the generator table itself.

use std::fmt::Write as _;

use serde_json::json;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::faces::compute_faces;
use crate::laurent::HalfLaurent;
use crate::states::{enumerate_states, generator_table, half, BigradedTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub ranks: BigradedTable,
    /// Every state satisfied `M = 2S`.
    pub planar_certificate: bool,
}

impl HomologyTable {
    /// `Σ (-1)^d rank T^s`
    pub fn euler(&self) -> HalfLaurent {
        self.ranks.euler()
    }

    pub fn to_json(&self) -> serde_json::Value {
        table_json(true, &self.ranks)
    }
}

/// Generator counts of the state complex. Only an upper bound for homology
/// ranks unless the diagram is planar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTable {
    pub table: BigradedTable,
    pub planar: bool,
}

impl ChainTable {
    /// True when the numbers are chain-level only.
    pub fn disclaimer(&self) -> bool {
        !self.planar
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = table_json(self.planar, &self.table);
        v["chain_level_only"] = json!(self.disclaimer());
        v
    }
}

fn table_json(planar: bool, t: &BigradedTable) -> serde_json::Value {
    json!({
        "planar": planar,
        "ranks": t.to_json(),
        "euler": t.euler().to_json(),
    })
}

pub fn hfb_planar(d: &Diagram) -> Result<HomologyTable> {
    if !d.is_planar_singular() {
        return Err(Error::NotPlanarSingular);
    }
    let f = compute_faces(d)?;
    let states = enumerate_states(d, &f);
    if states.iter().any(|s| s.maslov != s.twice_s) {
        return Err(Error::CertificateViolation);
    }
    Ok(HomologyTable {
        ranks: BigradedTable::from_states(&states),
        planar_certificate: true,
    })
}

pub fn chain_table(d: &Diagram) -> Result<ChainTable> {
    Ok(ChainTable {
        table: generator_table(d)?,
        planar: d.is_planar_singular(),
    })
}

/// Grid with one row per Maslov grading (descending) and one column per
/// Alexander grading, tab-separated; empty cells are `.`.
pub fn render_matrix(t: &BigradedTable) -> String {
    let mut rows: Vec<i64> = t.entries().map(|((m, _), _)| m).collect();
    let mut cols: Vec<i64> = t.entries().map(|((_, k), _)| k).collect();
    rows.sort_unstable();
    rows.dedup();
    rows.reverse();
    cols.sort_unstable();
    cols.dedup();
    let mut out = String::from("d\\s");
    for &k in &cols {
        write!(out, "\t{}", half(k)).unwrap();
    }
    out.push('\n');
    for &m in &rows {
        write!(out, "{m}").unwrap();
        for &k in &cols {
            match t.get(m, k) {
                0 => out.push_str("\t."),
                n => write!(out, "\t{n}").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}
