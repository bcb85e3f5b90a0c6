//! `klr dim|verify|pairing`: graded dimensions, the local relation suite,
//! and the Khovanov-Lauda pairing of projective classes.

use std::collections::BTreeMap;

use bozec_klr::cartan::{Datum, SequenceClass, StrandLabel};
use bozec_klr::klr::{
    center_graded_dim, graded_dim, kl_pairing, verify_all_relations, verify_local_relations,
    PairingValue, RelationReport,
};
use serde_json::Value;

use crate::parse::{parse_sequence, parse_shape};
use crate::report::{CliError, Report};

use super::Ctx;

pub struct DimArgs {
    pub nu: Option<String>,
    pub source: Option<String>,
    pub target: Option<String>,
}

pub struct VerifyArgs {
    pub nu: Option<String>,
    pub strands: usize,
    pub max_mult: u32,
    pub degree: i64,
}

pub struct PairingArgs {
    pub left: String,
    pub right: String,
    pub degree: usize,
}

fn seq_name(datum: &Datum, seq: &[StrandLabel]) -> String {
    let parts: Vec<String> = seq.iter().map(|l| l.display(datum).to_string()).collect();
    parts.join(",")
}

fn sorted_key(seq: &[StrandLabel]) -> Vec<StrandLabel> {
    let mut key = seq.to_vec();
    key.sort();
    key
}

pub fn dim(ctx: &Ctx, args: &DimArgs) -> Result<Report, CliError> {
    let (datum, _) = ctx.load_datum()?;
    let mut report = Report::new("klr dim");
    ctx.record(&mut report);

    match (&args.source, &args.nu) {
        (Some(source), _) => {
            let src = parse_sequence(&datum, ctx.alphabet, source)?;
            let tgt = match &args.target {
                Some(target) => parse_sequence(&datum, ctx.alphabet, target)?,
                None => src.clone(),
            };
            report.config("source", seq_name(&datum, &src));
            report.config("target", seq_name(&datum, &tgt));
            if let Some(nu) = &args.nu {
                let class = SequenceClass::new(parse_sequence(&datum, ctx.alphabet, nu)?)?;
                report.config("nu", seq_name(&datum, class.labels()));
                if sorted_key(&src) != class.labels() {
                    return Err(CliError::flag("--source does not lie in the block --nu"));
                }
            }
            let forward = graded_dim(&datum, &src, &tgt)?;
            let backward = graded_dim(&datum, &tgt, &src)?;
            report.check("dim-transpose-symmetric", forward == backward);
            report.value("dim", forward.to_string());
        }
        (None, Some(nu)) => {
            let class = SequenceClass::new(parse_sequence(&datum, ctx.alphabet, nu)?)?;
            report.config("nu", seq_name(&datum, class.labels()));
            let seqs = class.sequences();
            let mut rows = Vec::new();
            let mut symmetric = true;
            for a in &seqs {
                let mut row = Vec::new();
                for b in &seqs {
                    let d = graded_dim(&datum, a, b)?;
                    if d != graded_dim(&datum, b, a)? {
                        symmetric = false;
                    }
                    row.push(Value::from(d.to_string()));
                }
                rows.push(Value::Array(row));
            }
            report.check("dim-matrix-symmetric", symmetric);
            let names: Vec<String> = seqs.iter().map(|s| seq_name(&datum, s)).collect();
            report.value("sequences", names);
            report.value("dims", rows);
            report.value("center", center_graded_dim(&datum, &class).to_string());
        }
        (None, None) => return Err(CliError::flag("pass --source (with --target) or --nu")),
    }

    Ok(report)
}

/// Folds the per-check relation report into one line per (sequence,
/// relation family), listing failures individually.
fn summarize(datum_report: &RelationReport, report: &mut Report) {
    let mut groups: BTreeMap<(String, String), (usize, bool)> = BTreeMap::new();
    for check in &datum_report.checks {
        let entry = groups
            .entry((check.sequence.clone(), check.relation.clone()))
            .or_insert((0, true));
        entry.0 += 1;
        entry.1 &= check.ok;
    }
    for ((sequence, relation), (count, ok)) in &groups {
        report.check_with(
            format!("{relation}[{sequence}]"),
            *ok,
            format!("{count} positions"),
        );
    }
    for failure in datum_report.failures() {
        report.check_with(
            format!("failure[{},{},k={}]", failure.sequence, failure.relation, failure.position),
            false,
            format!("{} monomials", failure.monomials),
        );
    }
}

pub fn verify(ctx: &Ctx, args: &VerifyArgs) -> Result<Report, CliError> {
    let (datum, _) = ctx.load_datum()?;
    let mut report = Report::new("klr verify");
    ctx.record(&mut report);
    report.config("degree", args.degree);

    let relation_report = match &args.nu {
        Some(nu) => {
            let class = SequenceClass::new(parse_sequence(&datum, ctx.alphabet, nu)?)?;
            report.config("nu", seq_name(&datum, class.labels()));
            verify_local_relations(&datum, &class, args.degree)?
        }
        None => {
            report.config("strands", args.strands as u64);
            report.config("max_mult", args.max_mult);
            verify_all_relations(&datum, ctx.alphabet, args.strands, args.max_mult, args.degree)?
        }
    };
    summarize(&relation_report, &mut report);
    report.value("checks-run", relation_report.checks.len() as u64);

    Ok(report)
}

pub fn pairing(ctx: &Ctx, args: &PairingArgs) -> Result<Report, CliError> {
    let (datum, _) = ctx.load_datum()?;
    let mut report = Report::new("klr pairing");
    ctx.record(&mut report);
    report.config("left", args.left.as_str());
    report.config("right", args.right.as_str());
    report.config("degree", args.degree as u64);

    let left = parse_shape(&datum, ctx.alphabet, &args.left)?;
    let right = parse_shape(&datum, ctx.alphabet, &args.right)?;
    let forward = kl_pairing(&datum, &left, &right, args.degree)?;
    let backward = kl_pairing(&datum, &right, &left, args.degree)?;
    report.check("pairing-symmetric", forward == backward);
    let rendered = match &forward {
        PairingValue::Exact(value) => format!("{value}"),
        PairingValue::Series(series) => format!("{series}"),
    };
    report.value("pairing", rendered);
    report.value(
        "exact",
        matches!(forward, PairingValue::Exact(_)),
    );

    Ok(report)
}
