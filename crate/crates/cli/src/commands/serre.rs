//! `serre check`: quantum Serre elements lie in the radical of the form.

use bozec_klr::cartan::Datum;
use bozec_klr::uminus::{serre_element, Algebra, GenIndex};

use crate::parse::parse_gen;
use crate::report::{CliError, Report};

use super::Ctx;

pub struct SerreArgs {
    pub i: Option<String>,
    pub j: Option<String>,
    pub bound: u32,
}

/// All (i, (j, l)) with i real, j != i, and both l and -l a_ij within the
/// bound (the latter caps the word length, the former the sweep when
/// a_ij = 0).
fn sweep(datum: &Datum, bound: u32) -> Vec<(usize, GenIndex)> {
    let mut out = Vec::new();
    for i in datum.indices().filter(|&i| datum.is_real(i)) {
        for j in datum.indices().filter(|&j| j != i) {
            let max_mult = if datum.is_real(j) { 1 } else { bound };
            for l in 1..=max_mult {
                if i64::from(l) * -datum.a(i, j) <= i64::from(bound) {
                    out.push((i, GenIndex { index: j, mult: l }));
                }
            }
        }
    }
    out
}

pub fn check(ctx: &Ctx, args: &SerreArgs) -> Result<Report, CliError> {
    let (datum, overrides) = ctx.load_datum()?;
    let algebra = Algebra::new(datum.clone(), ctx.norms, overrides)?;
    let mut report = Report::new("serre check");
    ctx.record(&mut report);
    report.config("bound", args.bound);

    let pairs = match (&args.i, &args.j) {
        (Some(i), Some(j)) => {
            report.config("i", i.as_str());
            report.config("j", j.as_str());
            vec![(datum.index_of(i)?, parse_gen(&datum, j)?)]
        }
        (None, None) => sweep(&datum, args.bound),
        _ => return Err(CliError::flag("pass both --i and --j, or neither for a sweep")),
    };
    if pairs.is_empty() {
        return Err(CliError::flag("no Serre pairs in range: the datum has no real index"));
    }

    for (i, j) in pairs {
        let element = serre_element(&datum, i, j)?;
        let in_radical = algebra.is_radical(&element)?;
        let jname = if j.mult == 1 {
            datum.name(j.index).to_owned()
        } else {
            format!("{}:{}", datum.name(j.index), j.mult)
        };
        report.check_with(
            format!("serre-radical[{},{jname}]", datum.name(i)),
            in_radical,
            format!("{} terms", element.num_terms()),
        );
    }

    Ok(report)
}
