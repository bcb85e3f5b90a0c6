//! Command-line front end for the bozec-klr library.
//!
//! Every subcommand runs a computation or verification suite and emits a
//! report (JSON schema 1, or plain text with `--format text`) listing each
//! asserted identity with its status. Exit codes: 0 when every check
//! passes, 1 when an identity fails, 2 on configuration errors; machine
//! consumers can rely on the `error.code` field in JSON mode.

mod commands;
mod parse;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use bozec_klr::cartan::AlphabetMode;
use bozec_klr::uminus::NormMode;
use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{canonical, chars, cyclo, datum, form, klr, primitive, serre, Ctx};
use report::{emit, CliError, Format, Report};

#[derive(Parser)]
#[command(
    name = "bozec-klr",
    version,
    about = "Exact computations and identity checks for quantum Borcherds-Bozec algebras, \
             their KLR categorification, and the Jordan-quiver cyclotomic module"
)]
struct Cli {
    #[command(flatten)]
    run: RunOptions,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunOptions {
    /// Borcherds-Cartan datum configuration file (JSON).
    #[arg(long, global = true, value_name = "FILE")]
    datum: Option<PathBuf>,

    /// Strand alphabet: `full` carries multiplicities on non-isotropic
    /// indices, `appendix` is the plain index alphabet.
    #[arg(long, global = true, value_enum, default_value_t = AlphabetOpt::Full)]
    alphabet: AlphabetOpt,

    /// Generator norms of the bilinear form on non-isotropic indices.
    #[arg(long, global = true, value_enum, default_value_t = NormOpt::Geometric)]
    norms: NormOpt,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = FormatOpt::Json)]
    format: FormatOpt,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Seed for sampled spot checks; the default makes runs reproducible.
    #[arg(long, global = true, default_value_t = 1729)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetOpt {
    Full,
    Appendix,
}

impl From<AlphabetOpt> for AlphabetMode {
    fn from(opt: AlphabetOpt) -> AlphabetMode {
        match opt {
            AlphabetOpt::Full => AlphabetMode::Full,
            AlphabetOpt::Appendix => AlphabetMode::Appendix,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NormOpt {
    Primitive,
    Geometric,
}

impl From<NormOpt> for NormMode {
    fn from(opt: NormOpt) -> NormMode {
        match opt {
            NormOpt::Primitive => NormMode::Primitive,
            NormOpt::Geometric => NormMode::Geometric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatOpt {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Datum configuration utilities.
    Datum {
        #[command(subcommand)]
        command: DatumCommand,
    },
    /// Bilinear form on the free algebra.
    Form {
        #[command(subcommand)]
        command: FormCommand,
    },
    /// Primitive generators b_{i,l} of a non-isotropic index.
    Primitive(PrimitiveCli),
    /// Quantum Serre relations.
    Serre {
        #[command(subcommand)]
        command: SerreCommand,
    },
    /// KLR algebra computations in the polynomial representation.
    Klr {
        #[command(subcommand)]
        command: KlrCommand,
    },
    /// Symmetric-group character data.
    Char {
        #[command(subcommand)]
        command: CharCommand,
    },
    /// Jordan-quiver cyclotomic module checks.
    Cyclo {
        #[command(subcommand)]
        command: CycloCommand,
    },
    /// Canonical-basis transition matrices.
    Canonical {
        #[command(subcommand)]
        command: CanonicalCommand,
    },
}

#[derive(Subcommand)]
enum DatumCommand {
    /// Load a datum config and re-verify its structural invariants.
    Validate,
}

#[derive(Subcommand)]
enum FormCommand {
    /// Gram matrix of the bilinear form on weight spaces.
    Gram {
        /// Weight as name:count pairs, e.g. "a:2,b".
        #[arg(long)]
        weight: Option<String>,
        /// Sweep all nonzero weights up to this height instead.
        #[arg(long)]
        height: Option<u32>,
        /// Number of seeded coproduct-adjunction samples.
        #[arg(long, default_value_t = 5)]
        samples: u32,
    },
}

#[derive(Args)]
struct PrimitiveCli {
    /// Non-isotropic index name.
    #[arg(long)]
    index: String,
    /// Largest multiplicity to construct.
    #[arg(long, default_value_t = 3)]
    lmax: u32,
}

#[derive(Subcommand)]
enum SerreCommand {
    /// Verify that Serre elements lie in the radical of the form.
    Check {
        /// Real outer index; omit together with --j to sweep all pairs.
        #[arg(long)]
        i: Option<String>,
        /// Inner letter, e.g. "b" or "c:2".
        #[arg(long)]
        j: Option<String>,
        /// Cap on -l*a_ij, and on l itself for orthogonal pairs.
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
}

#[derive(Subcommand)]
enum KlrCommand {
    /// Graded dimension of 1_target R(nu) 1_source, or of a whole block.
    Dim {
        /// Block as a sequence, e.g. "a,b,c:2"; alone it reports the
        /// full dimension matrix of the block.
        #[arg(long)]
        nu: Option<String>,
        /// Source sequence.
        #[arg(long)]
        source: Option<String>,
        /// Target sequence; defaults to the source.
        #[arg(long)]
        target: Option<String>,
    },
    /// Run the local relation suite in the polynomial representation.
    Verify {
        /// Restrict to the block of this sequence; omit to sweep.
        #[arg(long)]
        nu: Option<String>,
        /// Strand-count bound for the sweep.
        #[arg(long, default_value_t = 3)]
        strands: usize,
        /// Multiplicity bound for non-isotropic strands in full mode.
        #[arg(long, default_value_t = 2)]
        max_mult: u32,
        /// Monomial degree bound.
        #[arg(long, default_value_t = 8)]
        degree: i64,
    },
    /// Khovanov-Lauda pairing of two projective classes.
    Pairing {
        /// Left shape: a sequence "a,b,c:2", a divided power "i^(3)",
        /// or averaged isotropic blocks "b[2,1]".
        #[arg(long)]
        left: String,
        /// Right shape, same grammar.
        #[arg(long)]
        right: String,
        /// Series truncation order for averaged shapes.
        #[arg(long, default_value_t = 20)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum CharCommand {
    /// Restriction-chain character table of S_n.
    Table {
        #[arg(long)]
        n: u32,
    },
    /// Kostka matrix with unitriangularity checks.
    Kostka {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum CycloCommand {
    /// Gauss identity, alpha closed form, and commutator checks.
    Verify {
        /// Cyclotomic level exponent a (the ideal is generated by x_1^a).
        #[arg(long)]
        a: u32,
        /// Symmetrizer entry of the isotropic vertex.
        #[arg(long, default_value_t = 1)]
        r: i64,
        /// Largest coefficient order p.
        #[arg(long, default_value_t = 4)]
        pmax: u32,
        /// Largest module level for commutator checks.
        #[arg(long, default_value_t = 3)]
        levels: u32,
    },
    /// Smash-product quotient dimensions against the closed form.
    Dims {
        /// Number of variables.
        #[arg(long)]
        n: u32,
        /// Cyclotomic level exponent a.
        #[arg(long)]
        a: u32,
        /// Symmetrizer entry of the isotropic vertex.
        #[arg(long, default_value_t = 1)]
        r: i64,
        /// Series truncation order.
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum CanonicalCommand {
    /// Projective-to-irreducible transition at one isotropic vertex.
    OneVertex {
        #[arg(long)]
        n: u32,
    },
}

fn dispatch(ctx: &Ctx, command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Datum { command: DatumCommand::Validate } => datum::validate(ctx),
        Command::Form { command: FormCommand::Gram { weight, height, samples } } => form::gram(
            ctx,
            &form::GramArgs { weight: weight.clone(), height: *height, samples: *samples },
        ),
        Command::Primitive(args) => primitive::run(
            ctx,
            &primitive::PrimitiveArgs { index: args.index.clone(), lmax: args.lmax },
        ),
        Command::Serre { command: SerreCommand::Check { i, j, bound } } => serre::check(
            ctx,
            &serre::SerreArgs { i: i.clone(), j: j.clone(), bound: *bound },
        ),
        Command::Klr { command } => match command {
            KlrCommand::Dim { nu, source, target } => klr::dim(
                ctx,
                &klr::DimArgs { nu: nu.clone(), source: source.clone(), target: target.clone() },
            ),
            KlrCommand::Verify { nu, strands, max_mult, degree } => klr::verify(
                ctx,
                &klr::VerifyArgs {
                    nu: nu.clone(),
                    strands: *strands,
                    max_mult: *max_mult,
                    degree: *degree,
                },
            ),
            KlrCommand::Pairing { left, right, degree } => klr::pairing(
                ctx,
                &klr::PairingArgs { left: left.clone(), right: right.clone(), degree: *degree },
            ),
        },
        Command::Char { command } => match command {
            CharCommand::Table { n } => chars::table(&chars::TableArgs { n: *n }),
            CharCommand::Kostka { n } => chars::kostka(&chars::KostkaArgs { n: *n }),
        },
        Command::Cyclo { command } => match command {
            CycloCommand::Verify { a, r, pmax, levels } => cyclo::verify(&cyclo::VerifyArgs {
                a: *a,
                r: *r,
                pmax: *pmax,
                levels: *levels,
            }),
            CycloCommand::Dims { n, a, r, degree } => cyclo::dims(&cyclo::DimsArgs {
                n: *n,
                a: *a,
                r: *r,
                degree: *degree,
            }),
        },
        Command::Canonical { command: CanonicalCommand::OneVertex { n } } => {
            canonical::one_vertex(&canonical::OneVertexArgs { n: *n })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.run.format {
        FormatOpt::Json => Format::Json,
        FormatOpt::Text => Format::Text,
    };
    let ctx = Ctx {
        datum_path: cli.run.datum.clone(),
        alphabet: cli.run.alphabet.into(),
        norms: cli.run.norms.into(),
        seed: cli.run.seed,
    };
    match dispatch(&ctx, &cli.command) {
        Ok(report) => {
            let rendered = report.render(format);
            if let Err(err) = emit(&rendered, cli.run.out.as_deref()) {
                let io_error = CliError::new("config.io", err.to_string());
                eprint!("{}", io_error.render(format));
                return ExitCode::from(2);
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error) => {
            let rendered = error.render(format);
            if let Some(path) = cli.run.out.as_deref() {
                let _ = emit(&rendered, Some(path));
            }
            eprint!("{rendered}");
            ExitCode::from(2)
        }
    }
}
