//! Report shapes and serialization for `count`.
//!
//! JSON (schema_version 1) is the default; CSV is a flat projection with
//! one term or class per row; text is a short human-readable dump. Big
//! integers always travel as decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use refacto_core::coeffs::ExpPoly;
use refacto_core::perm::Partition;

use crate::Format;

#[derive(Serialize)]
pub struct CountReport {
    pub schema_version: u32,
    pub command: String,
    pub query: QueryDesc,
    pub results: Vec<EngineResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

#[derive(Serialize)]
pub struct QueryDesc {
    pub group: String,
    pub k: usize,
    pub classify: String,
    pub transitivity: String,
    pub target: String,
}

#[derive(Serialize)]
pub struct EngineResult {
    pub engine: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Vec<Term>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassCount>>,
}

#[derive(Serialize, PartialEq, Eq)]
pub struct Term {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Serialize, PartialEq, Eq)]
pub struct ClassCount {
    /// One label per factor: a weight-0 cycle type like "3 1" or a weight
    /// distribution like "2 0 1".
    pub factors: Vec<String>,
    pub count: String,
}

pub fn poly_terms(poly: &ExpPoly) -> Vec<Term> {
    poly.terms()
        .map(|(exps, c)| Term {
            exponents: exps.to_vec(),
            coefficient: if c.is_integer() {
                c.to_integer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            },
        })
        .collect()
}

pub fn weight0_classes(counts: &BTreeMap<Vec<Partition>, BigInt>) -> Vec<ClassCount> {
    counts
        .iter()
        .map(|(types, count)| ClassCount {
            factors: types
                .iter()
                .map(|t| {
                    t.parts()
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect(),
            count: count.to_string(),
        })
        .collect()
}

pub fn weight_dist_classes(counts: &BTreeMap<Vec<Vec<u32>>, BigInt>) -> Vec<ClassCount> {
    counts
        .iter()
        .map(|(dists, count)| ClassCount {
            factors: dists
                .iter()
                .map(|d| {
                    d.iter()
                        .map(|r| r.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect(),
            count: count.to_string(),
        })
        .collect()
}

pub fn write_count_report(report: &CountReport, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report).unwrap());
        }
        Format::Csv => {
            println!("engine,key,value");
            for r in &report.results {
                if let Some(terms) = &r.polynomial {
                    for t in terms {
                        let key = t
                            .exponents
                            .iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(" ");
                        println!("{},{},{}", r.engine, key, t.coefficient);
                    }
                }
                if let Some(classes) = &r.classes {
                    for c in classes {
                        println!("{},{},{}", r.engine, c.factors.join(";"), c.count);
                    }
                }
            }
            if let Some(v) = &report.verdict {
                println!("verdict,,{v}");
            }
        }
        Format::Text => {
            println!(
                "{} k={} classify={} transitivity={} target={}",
                report.query.group,
                report.query.k,
                report.query.classify,
                report.query.transitivity,
                report.query.target
            );
            for r in &report.results {
                println!("[{}]", r.engine);
                if let Some(terms) = &r.polynomial {
                    for t in terms {
                        println!("  {:?} -> {}", t.exponents, t.coefficient);
                    }
                }
                if let Some(classes) = &r.classes {
                    for c in classes {
                        println!("  {:?} -> {}", c.factors, c.count);
                    }
                }
            }
            if let Some(v) = &report.verdict {
                println!("verdict: {v}");
            }
        }
    }
}
