//! `primitive`: primitive generators b_{i,l} of a non-isotropic index,
//! with exact primitivity, bar-invariance, and cross-partition
//! orthogonality checks.

use bozec_klr::symgrp::compositions;
use bozec_klr::uminus::{Algebra, TensorElement, UElement};

use crate::report::{CliError, Report};

use super::Ctx;

pub struct PrimitiveArgs {
    pub index: String,
    pub lmax: u32,
}

pub fn run(ctx: &Ctx, args: &PrimitiveArgs) -> Result<Report, CliError> {
    let (datum, overrides) = ctx.load_datum()?;
    let algebra = Algebra::new(datum.clone(), ctx.norms, overrides)?;
    let mut report = Report::new("primitive");
    ctx.record(&mut report);
    report.config("index", args.index.as_str());
    report.config("lmax", args.lmax);

    let index = datum.index_of(&args.index)?;
    let name = datum.name(index).to_owned();

    for l in 1..=args.lmax {
        let b = algebra.primitive_generator(index, l)?;

        let defect = algebra
            .coproduct(&b)
            .sub(&TensorElement::outer(&b, &UElement::one()))
            .sub(&TensorElement::outer(&UElement::one(), &b));
        report.check(format!("primitive[{name}:{l}]"), defect.is_zero());

        let bar_invariant = b.terms().all(|(_, c)| c.bar() == *c);
        report.check(format!("bar-invariant[{name}:{l}]"), bar_invariant);

        report.value(&format!("b[{name}:{l}]"), b.display(&datum).to_string());
    }

    // Products over compositions with different sorted shapes are orthogonal.
    for n in 2..=args.lmax {
        let comps = compositions(n);
        let products: Vec<(String, UElement)> = comps
            .iter()
            .map(|c| {
                let p = algebra.primitive_product(index, c.parts())?;
                Ok((c.to_string(), p))
            })
            .collect::<Result<_, CliError>>()?;
        let mut ok = true;
        let mut pairs = 0usize;
        for (ci, (_, pi)) in comps.iter().zip(&products) {
            for (cj, (_, pj)) in comps.iter().zip(&products) {
                if ci.sorted() == cj.sorted() {
                    continue;
                }
                pairs += 1;
                if !algebra.form(pi, pj).is_zero() {
                    ok = false;
                }
            }
        }
        report.check_with(
            format!("partition-orthogonal[{name},n={n}]"),
            ok,
            format!("{pairs} composition pairs"),
        );
    }

    Ok(report)
}
