//! `datum validate`: loads a datum config and re-verifies the structural
//! invariants it promises.

use bozec_klr::cartan::IndexType;
use bozec_klr::uminus::Algebra;
use serde_json::json;

use crate::report::{CliError, Report};

use super::Ctx;

pub fn validate(ctx: &Ctx) -> Result<Report, CliError> {
    let (datum, overrides) = ctx.load_datum()?;
    let mut report = Report::new("datum validate");
    ctx.record(&mut report);

    let n = datum.len();
    let symmetrizable = datum
        .indices()
        .all(|i| datum.indices().all(|j| datum.r(i) * datum.a(i, j) == datum.r(j) * datum.a(j, i)));
    report.check("symmetrizable", symmetrizable);

    let diagonal_ok = datum.indices().all(|i| {
        let aii = datum.a(i, i);
        match datum.index_type(i) {
            IndexType::Real => aii == 2,
            IndexType::Isotropic => aii == 0,
            IndexType::NonIsotropic => aii < 0 && aii % 2 == 0,
        }
    });
    report.check("diagonal-classified", diagonal_ok);

    let off_diagonal_ok = datum
        .indices()
        .all(|i| datum.indices().all(|j| i == j || datum.a(i, j) <= 0));
    report.check("off-diagonal-nonpositive", off_diagonal_ok);

    let symmetrizer_positive = datum.indices().all(|i| datum.r(i) >= 1);
    report.check("symmetrizer-positive", symmetrizer_positive);

    match Algebra::new(datum.clone(), ctx.norms, overrides) {
        Ok(_) => report.check("norm-overrides-admissible", true),
        Err(err) => report.check_with("norm-overrides-admissible", false, err.to_string()),
    }

    let type_name = |t: IndexType| match t {
        IndexType::Real => "real",
        IndexType::Isotropic => "isotropic",
        IndexType::NonIsotropic => "non-isotropic",
    };
    let indices: Vec<_> = datum
        .indices()
        .map(|i| {
            json!({
                "name": datum.name(i),
                "type": type_name(datum.index_type(i)),
                "r": datum.r(i),
                "row": (0..n).map(|j| datum.a(i, j)).collect::<Vec<_>>(),
            })
        })
        .collect();
    report.value("indices", indices);

    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if datum.oriented_forward(i, j) {
                edges.push(format!("{} -> {}", datum.name(i), datum.name(j)));
            } else {
                edges.push(format!("{} -> {}", datum.name(j), datum.name(i)));
            }
        }
    }
    report.value("orientation", edges);

    Ok(report)
}
