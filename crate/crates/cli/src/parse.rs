//! Parsers for the small flag languages: strand sequences, generator
//! letters, weights, and pairing shapes.
//!
//! Grammar, matching the display conventions of the library:
//!   letter  := NAME | NAME ":" MULT          e.g. "a", "c:2"
//!   seq     := letter ("," letter)*          e.g. "a,b,c:2"
//!   weight  := NAME ":" COUNT ("," ...)*     e.g. "a:2,b:1"
//!   shape   := seq                           plain sequence of strands
//!            | NAME "^(" N ")"               divided power of a real index
//!            | NAME "[" N ("," N)* "]"       averaged isotropic blocks

use bozec_klr::cartan::{AlphabetMode, Datum, StrandLabel};
use bozec_klr::klr::PairingShape;
use bozec_klr::uminus::{GenIndex, Weight};

use crate::report::CliError;

fn split_mult(s: &str) -> Result<(&str, u32), CliError> {
    match s.rsplit_once(':') {
        Some((name, mult)) => {
            let mult: u32 = mult
                .parse()
                .map_err(|_| CliError::flag(format!("bad multiplicity in letter {s:?}")))?;
            Ok((name, mult))
        }
        None => Ok((s, 1)),
    }
}

pub fn parse_label(datum: &Datum, mode: AlphabetMode, s: &str) -> Result<StrandLabel, CliError> {
    let (name, mult) = split_mult(s.trim())?;
    let index = datum.index_of(name)?;
    Ok(StrandLabel::new(datum, index, mult, mode)?)
}

pub fn parse_sequence(
    datum: &Datum,
    mode: AlphabetMode,
    s: &str,
) -> Result<Vec<StrandLabel>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|part| parse_label(datum, mode, part)).collect()
}

pub fn parse_gen(datum: &Datum, s: &str) -> Result<GenIndex, CliError> {
    let (name, mult) = split_mult(s.trim())?;
    let index = datum.index_of(name)?;
    Ok(GenIndex::new(datum, index, mult)?)
}

pub fn parse_weight(datum: &Datum, s: &str) -> Result<Weight, CliError> {
    let mut weight = Weight::zero();
    for part in s.split(',') {
        let (name, count) = split_mult(part.trim())?;
        let index = datum.index_of(name)?;
        if count == 0 {
            return Err(CliError::flag(format!("weight entry {part:?} must be positive")));
        }
        weight = weight.add(&Weight::single(index, count));
    }
    Ok(weight)
}

pub fn parse_shape(datum: &Datum, mode: AlphabetMode, s: &str) -> Result<PairingShape, CliError> {
    let s = s.trim();
    if let Some((name, rest)) = s.split_once("^(") {
        let n = rest
            .strip_suffix(')')
            .and_then(|n| n.parse::<u32>().ok())
            .ok_or_else(|| CliError::flag(format!("bad divided-power shape {s:?}")))?;
        let index = datum.index_of(name.trim())?;
        return Ok(PairingShape::DividedReal { index, n });
    }
    if let Some((name, rest)) = s.split_once('[') {
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| CliError::flag(format!("bad averaged shape {s:?}")))?;
        let blocks: Vec<u32> = inner
            .split(',')
            .map(|n| n.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::flag(format!("bad block sizes in shape {s:?}")))?;
        let index = datum.index_of(name.trim())?;
        return Ok(PairingShape::AveragedIso { index, blocks });
    }
    Ok(PairingShape::Plain(parse_sequence(datum, mode, s)?))
}
