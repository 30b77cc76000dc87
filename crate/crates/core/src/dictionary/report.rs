use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigUint;

use super::SequenceRecord;
use crate::error::{Error, Result};
use crate::support::Support;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn join_terms(terms: &[BigUint]) -> String {
    terms
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn piece_list(s: Support) -> String {
    s.pieces()
        .map(|p| {
            p.corners()
                .iter()
                .map(|d| char::from(b'0' + d))
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn names(v: &[Support], bold: bool) -> String {
    v.iter()
        .map(|s| {
            if bold {
                format!("**{s}**")
            } else {
                s.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn write_body(out: &mut String, r: &SequenceRecord) {
    writeln!(out, "Seq= {}", join_terms(&r.terms)).unwrap();
    for v in &r.variants {
        writeln!(out, "Var= {} ({})", join_terms(&v.terms), v.normalization).unwrap();
    }
    if !r.oeis_hits.is_empty() {
        let hits: Vec<String> = r
            .oeis_hits
            .iter()
            .map(|h| format!("{} ({}, offset {})", h.a_number, h.normalization, h.offset))
            .collect();
        writeln!(out, "OEIS: {}", hits.join("; ")).unwrap();
    }
}

fn text(records: &[SequenceRecord]) -> String {
    let mut out = String::new();
    for r in records {
        write!(out, "{}  {{{}}}", r.canonical, piece_list(r.canonical)).unwrap();
        if !r.see_also.is_empty() {
            write!(out, "  See also {}", names(&r.see_also, false)).unwrap();
        }
        out.push('\n');
        write_body(&mut out, r);
        out.push('\n');
    }
    out
}

fn markdown(records: &[SequenceRecord]) -> String {
    let mut out = String::new();
    for r in records {
        writeln!(out, "**{}** `{{{}}}`", r.canonical, piece_list(r.canonical)).unwrap();
        if !r.see_also.is_empty() {
            writeln!(out, "See also {}", names(&r.see_also, true)).unwrap();
        }
        out.push('\n');
        let mut body = String::new();
        write_body(&mut body, r);
        for line in body.lines() {
            writeln!(out, "{line}  ").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Renders records; the output depends only on the records.
pub fn emit_report(records: &[SequenceRecord], format: ReportFormat) -> Result<String> {
    Ok(match format {
        ReportFormat::Text => text(records),
        ReportFormat::Markdown => markdown(records),
        ReportFormat::Json => serde_json::to_string_pretty(records)? + "\n",
    })
}

pub fn parse_json_report(doc: &str) -> Result<Vec<SequenceRecord>> {
    Ok(serde_json::from_str(doc)?)
}
