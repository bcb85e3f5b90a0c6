//! One module per subcommand family; each returns a [`Report`] or a
//! [`CliError`].

pub mod canonical;
pub mod chars;
pub mod cyclo;
pub mod datum;
pub mod form;
pub mod klr;
pub mod primitive;
pub mod serre;

use std::path::PathBuf;

use bozec_klr::cartan::{load_config, AlphabetMode, Datum, NormOverrides};
use bozec_klr::uminus::NormMode;

use crate::report::{CliError, Report};

/// Options shared by every subcommand: the datum source, mode flags, and
/// the seed for sampled spot checks.
pub struct Ctx {
    pub datum_path: Option<PathBuf>,
    pub alphabet: AlphabetMode,
    pub norms: NormMode,
    pub seed: u64,
}

impl Ctx {
    pub fn load_datum(&self) -> Result<(Datum, NormOverrides), CliError> {
        let path = self.datum_path.as_ref().ok_or_else(|| {
            CliError::new("config.missing_datum", "this subcommand needs --datum FILE")
        })?;
        Ok(load_config(path)?)
    }

    /// Echoes the shared options into the report's config block.
    pub fn record(&self, report: &mut Report) {
        if let Some(path) = &self.datum_path {
            report.config("datum", path.display().to_string());
        }
        report.config(
            "alphabet",
            match self.alphabet {
                AlphabetMode::Full => "full",
                AlphabetMode::Appendix => "appendix",
            },
        );
        report.config(
            "norms",
            match self.norms {
                NormMode::Primitive => "primitive",
                NormMode::Geometric => "geometric",
            },
        );
        report.config("seed", self.seed);
    }
}

/// Deterministic 64-bit mixer for seeded spot checks (splitmix64).
pub struct Sampler {
    state: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { state: seed }
    }

    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough pick in `0..n` for small `n`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next() % n as u64) as usize
    }
}
