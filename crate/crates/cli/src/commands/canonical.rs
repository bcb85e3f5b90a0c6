//! `canonical one-vertex`: transition matrices between the projective and
//! irreducible bases at a single isotropic vertex.

use bozec_klr::symgrp::{transition_one_vertex, unitriangularity_matrix, TransitionDirection};
use serde_json::Value;

use crate::report::{CliError, Report};

pub struct OneVertexArgs {
    pub n: u32,
}

pub fn one_vertex(args: &OneVertexArgs) -> Result<Report, CliError> {
    let mut report = Report::new("canonical one-vertex");
    report.config("n", args.n);

    let (parts, forward) = transition_one_vertex(args.n, TransitionDirection::ProjectiveToIrreducible);
    let (_, inverse) = transition_one_vertex(args.n, TransitionDirection::IrreducibleToProjective);
    let (_, kostka) = unitriangularity_matrix(args.n);

    let matches_kostka = forward
        .iter()
        .zip(&kostka)
        .all(|(frow, krow)| frow.iter().zip(krow).all(|(&f, &k)| f == k as i64));
    report.check("transition-equals-kostka", matches_kostka);

    let m = parts.len();
    let unitriangular = (0..m).all(|i| {
        forward[i][i] == 1
            && inverse[i][i] == 1
            && (i + 1..m).all(|j| forward[i][j] == 0 && inverse[i][j] == 0)
    });
    report.check("both-directions-unitriangular", unitriangular);

    let product_identity = (0..m).all(|i| {
        (0..m).all(|j| {
            let entry: i64 = (0..m).map(|k| forward[i][k] * inverse[k][j]).sum();
            entry == i64::from(i == j)
        })
    });
    report.check("product-is-identity", product_identity);

    let as_rows = |matrix: &[Vec<i64>]| -> Vec<Value> {
        matrix
            .iter()
            .map(|row| Value::Array(row.iter().map(|&e| Value::from(e)).collect()))
            .collect()
    };
    report.value("partitions", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    report.value("projective-to-irreducible", as_rows(&forward));
    report.value("irreducible-to-projective", as_rows(&inverse));

    Ok(report)
}
