//! `cyclo verify|dims`: the Jordan-quiver cyclotomic suite (Gauss identity,
//! alpha coefficients, commutators) and the quotient dimension oracle.

use bozec_klr::cyclotomic::{
    alpha, alpha_by_recursion, commutator_check, cyclotomic_quotient_dims, gauss_identity_check,
    JordanConfig,
};

use crate::report::{CliError, Report};

pub struct VerifyArgs {
    pub a: u32,
    pub r: i64,
    pub pmax: u32,
    pub levels: u32,
}

pub fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let config = JordanConfig::new(args.r, args.a)?;
    let mut report = Report::new("cyclo verify");
    report.config("a", args.a);
    report.config("r", args.r);
    report.config("pmax", args.pmax);
    report.config("levels", args.levels);

    for p in 1..=args.pmax {
        report.check(format!("gauss[p={p}]"), gauss_identity_check(p, args.a));
    }
    for p in 1..=args.pmax {
        let closed = alpha(p, &config);
        let recursive = alpha_by_recursion(p, &config);
        report.check(format!("alpha-closed-form[p={p}]"), closed == recursive);
        report.value(&format!("alpha[p={p}]"), closed.to_string());
    }
    let lt_max = args.pmax.min(3);
    for l in 1..=lt_max {
        for t in 1..=lt_max {
            for n in 1..=args.levels {
                report.check(
                    format!("commutator[l={l},t={t},n={n}]"),
                    commutator_check(l, t, n, &config),
                );
            }
        }
    }

    Ok(report)
}

pub struct DimsArgs {
    pub n: u32,
    pub a: u32,
    pub r: i64,
    pub degree: usize,
}

pub fn dims(args: &DimsArgs) -> Result<Report, CliError> {
    let config = JordanConfig::new(args.r, args.a)?;
    let mut report = Report::new("cyclo dims");
    report.config("n", args.n);
    report.config("a", args.a);
    report.config("r", args.r);
    report.config("degree", args.degree as u64);

    let dims = cyclotomic_quotient_dims(args.n as usize, &config, args.degree)?;
    report.check("quotient-matches-prediction", dims.ok());
    report.value("oracle", dims.oracle.to_string());
    report.value("predicted", dims.predicted.to_string());

    Ok(report)
}
