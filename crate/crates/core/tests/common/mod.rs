//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use maxai::{CaseTag, SymFn};

pub struct Table {
    pub case: CaseTag,
    pub p0: Option<usize>,
    pub weight: u64,
    pub complement_weight: u64,
    pub rows: Vec<SymFn>,
}

/// The four reference n = 14 tables.
pub fn n14_tables() -> Vec<Table> {
    let mut out: Vec<Table> = Vec::new();
    for line in include_str!("../data/n14_tables.txt").lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() == 4 {
            let case = match fields[0] {
                "item1" => CaseTag::Item1,
                "item2" => CaseTag::Item2,
                "item3" => CaseTag::Item3,
                other => panic!("unknown case {other}"),
            };
            out.push(Table {
                case,
                p0: fields[1].parse().ok(),
                weight: fields[2].parse().unwrap(),
                complement_weight: fields[3].parse().unwrap(),
                rows: Vec::new(),
            });
        } else {
            out.last_mut().unwrap().rows.push(line.parse().unwrap());
        }
    }
    out
}
