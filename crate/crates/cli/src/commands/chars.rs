//! `char table|kostka`: restriction-chain character tables of symmetric
//! groups and Kostka unitriangularity.

use bozec_klr::symgrp::{
    compositions, partitions, strip_chain_count, unitriangularity_matrix, Composition,
};
use serde_json::Value;

use crate::report::{CliError, Report};

pub struct TableArgs {
    pub n: u32,
}

pub fn table(args: &TableArgs) -> Result<Report, CliError> {
    let mut report = Report::new("char table");
    report.config("n", args.n);
    let parts = partitions(args.n);
    let comps = compositions(args.n);

    let mut rows = Vec::new();
    let mut reorder_ok = true;
    let mut top_row_ok = true;
    for lambda in &parts {
        let mut row = Vec::new();
        for b in &comps {
            let count = strip_chain_count(lambda, b)?;
            let sorted = strip_chain_count(lambda, &Composition::from(&b.sorted()))?;
            if count != sorted {
                reorder_ok = false;
            }
            if lambda.len() <= 1 && count != 1 {
                top_row_ok = false;
            }
            row.push(Value::from(count));
        }
        rows.push(Value::Array(row));
    }
    report.check("reordering-invariant", reorder_ok);
    report.check("single-row-counts-one", top_row_ok);

    report.value("partitions", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    report.value("compositions", comps.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    report.value("table", rows);
    Ok(report)
}

pub struct KostkaArgs {
    pub n: u32,
}

pub fn kostka(args: &KostkaArgs) -> Result<Report, CliError> {
    let mut report = Report::new("char kostka");
    report.config("n", args.n);
    let (parts, matrix) = unitriangularity_matrix(args.n);

    let diag_ones = (0..parts.len()).all(|i| matrix[i][i] == 1);
    report.check("diagonal-ones", diag_ones);
    let lower = (0..parts.len()).all(|i| (i + 1..parts.len()).all(|j| matrix[i][j] == 0));
    report.check("lower-triangular", lower);
    let dominance_ok = parts.iter().enumerate().all(|(content, mu)| {
        parts.iter().enumerate().all(|(shape, lambda)| {
            // A nonzero Kostka number needs every top segment of the shape
            // to dominate the matching segment of the content.
            matrix[content][shape] == 0 || dominates(lambda.parts(), mu.parts())
        })
    });
    report.check("support-respects-dominance", dominance_ok);

    report.value("partitions", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    report.value(
        "kostka",
        matrix
            .iter()
            .map(|row| Value::Array(row.iter().map(|&e| Value::from(e)).collect()))
            .collect::<Vec<_>>(),
    );
    Ok(report)
}

fn dominates(lambda: &[u32], mu: &[u32]) -> bool {
    let rows = lambda.len().max(mu.len());
    let mut acc_l = 0u32;
    let mut acc_m = 0u32;
    for k in 0..rows {
        acc_l += lambda.get(k).copied().unwrap_or(0);
        acc_m += mu.get(k).copied().unwrap_or(0);
        if acc_l < acc_m {
            return false;
        }
    }
    true
}
