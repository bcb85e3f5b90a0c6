//! `form gram`: Gram matrices of the bilinear form on weight spaces, with
//! symmetry, split-recursion, and coproduct-adjunction checks.

use bozec_klr::cartan::Datum;
use bozec_klr::uminus::{weights_up_to_height, Algebra, FreeWord, UElement, Weight};
use serde_json::Value;

use crate::parse::parse_weight;
use crate::report::{CliError, Report};

use super::{Ctx, Sampler};

pub struct GramArgs {
    pub weight: Option<String>,
    pub height: Option<u32>,
    pub samples: u32,
}

fn weight_name(datum: &Datum, weight: &Weight) -> String {
    let parts: Vec<String> = weight
        .entries()
        .map(|(i, c)| {
            if c == 1 {
                datum.name(i).to_owned()
            } else {
                format!("{}:{c}", datum.name(i))
            }
        })
        .collect();
    parts.join(",")
}

pub fn gram(ctx: &Ctx, args: &GramArgs) -> Result<Report, CliError> {
    let (datum, overrides) = ctx.load_datum()?;
    let algebra = Algebra::new(datum.clone(), ctx.norms, overrides)?;
    let mut report = Report::new("form gram");
    ctx.record(&mut report);

    let weights: Vec<Weight> = match (&args.weight, args.height) {
        (Some(w), None) => vec![parse_weight(&datum, w)?],
        (None, Some(h)) => weights_up_to_height(&datum, h)
            .into_iter()
            .filter(|w| !w.is_zero())
            .collect(),
        _ => return Err(CliError::flag("pass exactly one of --weight or --height")),
    };
    if let Some(w) = &args.weight {
        report.config("weight", w.as_str());
    }
    if let Some(h) = args.height {
        report.config("height", h);
    }
    report.config("samples", args.samples);

    let mut spaces = Vec::new();
    for weight in &weights {
        let name = weight_name(&datum, weight);
        let words = algebra.weight_space_words(weight);
        let gram = algebra.gram_matrix(&words);

        let symmetric = (0..words.len())
            .all(|i| (0..words.len()).all(|j| gram[i][j] == gram[j][i]));
        report.check(format!("gram-symmetric[{name}]"), symmetric);

        let splits_agree = words.iter().all(|x| {
            words
                .iter()
                .all(|y| algebra.form_words(x, y) == algebra.form_words_left_split(x, y))
        });
        report.check(format!("split-recursions-agree[{name}]"), splits_agree);

        let rows: Vec<Value> = gram
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| Value::from(e.to_string())).collect()))
            .collect();
        let word_names: Vec<String> =
            words.iter().map(|w| w.display(&datum).to_string()).collect();
        report.value(&format!("words[{name}]"), word_names);
        report.value(&format!("gram[{name}]"), rows);
        spaces.push((weight.clone(), words));
    }

    // Seeded spot check of the defining adjunction {x, yz} = (rho(x), y (x) z)
    // at arbitrary split points; the Gram computation above only ever splits
    // off single letters.
    let candidates: Vec<&(Weight, Vec<FreeWord>)> =
        spaces.iter().filter(|(w, words)| w.height() >= 2 && !words.is_empty()).collect();
    if !candidates.is_empty() {
        let mut sampler = Sampler::new(ctx.seed);
        let mut adjunction_ok = true;
        for _ in 0..args.samples {
            let (_, words) = candidates[sampler.below(candidates.len())];
            let x = &words[sampler.below(words.len())];
            let u = &words[sampler.below(words.len())];
            let cut = 1 + sampler.below(u.len() - 1);
            let y = FreeWord::from_letters(u.letters()[..cut].to_vec());
            let z = FreeWord::from_letters(u.letters()[cut..].to_vec());
            let direct = algebra.form_words(x, u);
            let split = algebra.tensor_form(&algebra.coproduct(&UElement::from_word(x.clone())), &y, &z);
            if direct != split {
                adjunction_ok = false;
            }
        }
        report.check_with(
            "coproduct-adjunction-samples",
            adjunction_ok,
            format!("{} sampled splits", args.samples),
        );
    }

    Ok(report)
}
