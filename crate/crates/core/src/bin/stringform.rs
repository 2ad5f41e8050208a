use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use stringform::canonical::{canonical_three_form, integral_h};
use stringform::frame::LieAlgebraFrame;
use stringform::metric::{Chirality, InvariantMetric};
use stringform::region::{classify_eigenvalues, family_ricci_eigenvalues};
use stringform::scalar::{parse_exact, Exact, Scalar};
use stringform::string_class::StringClass;
use stringform::sweep::{sweep, write_records, SweepSpec};
use stringform::torsion::torsion_check;
use stringform::{Error, Result};

/// Tolerance for the randomized torsion checks.
const TORSION_TOL: f64 = 1e-10;

#[derive(Parser, Debug)]
#[command(
    name = "stringform",
    version,
    about = "Invariant geometry and string-class 3-forms on S^3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ricci eigenvalues of g_{α1,α2} and its Ricci-positivity region.
    Ricci {
        #[arg(long)]
        alpha1: String,
        #[arg(long)]
        alpha2: String,
        /// Exact rational arithmetic (parameters like 3/4 or 0.25).
        #[arg(long)]
        exact: bool,
    },
    /// Integral of the canonical 3-form of a string class.
    Cs {
        /// L, R or dD4, optionally with +k or -k.
        #[arg(long = "class")]
        class: StringClass,
        #[arg(long)]
        alpha1: String,
        #[arg(long)]
        alpha2: String,
        #[arg(long, default_value = "left")]
        chirality: Chirality,
        #[arg(long)]
        exact: bool,
    },
    /// e-invariant of a string class, in Q/Z.
    Einv {
        #[arg(long = "class")]
        class: StringClass,
    },
    /// Sweep a grid described by a JSON spec file.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the region, contour and Berger-line data files.
    Figures {
        #[arg(long)]
        outdir: PathBuf,
    },
    /// Randomized checks of the torsion Ricci formula and its maximality.
    TorsionCheck {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Structure constants as JSON; su(2) when omitted.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Ricci {
            alpha1,
            alpha2,
            exact,
        } => {
            if exact {
                print_ricci::<Exact>(&mut out, &parse_exact(&alpha1)?, &parse_exact(&alpha2)?)?;
            } else {
                print_ricci::<f64>(&mut out, &parse_float(&alpha1)?, &parse_float(&alpha2)?)?;
            }
        }
        Command::Cs {
            class,
            alpha1,
            alpha2,
            chirality,
            exact,
        } => {
            let value = if exact {
                let g = InvariantMetric::family(
                    parse_exact(&alpha1)?,
                    parse_exact(&alpha2)?,
                    chirality,
                )?;
                integral_h(&class, &g)?.to_string()
            } else {
                let g = InvariantMetric::family(
                    parse_float(&alpha1)?,
                    parse_float(&alpha2)?,
                    chirality,
                )?;
                integral_h(&class, &g)?.to_string()
            };
            let g =
                InvariantMetric::family(parse_float(&alpha1)?, parse_float(&alpha2)?, chirality)?;
            let form = canonical_three_form(&class, &g)?;
            writeln!(out, "class {class}")?;
            writeln!(out, "chirality {chirality}")?;
            writeln!(out, "integral_H {value}")?;
            writeln!(out, "H_e123 {}", form.component(&[0, 1, 2]))?;
        }
        Command::Einv { class } => {
            writeln!(out, "{}", class.e_invariant()?)?;
        }
        Command::Sweep { spec, out: path } => {
            let text = std::fs::read_to_string(&spec)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", spec.display())))?;
            let spec = SweepSpec::from_json(&text)?;
            let records = sweep(&spec)?;
            match path {
                Some(p) => {
                    let mut w = BufWriter::new(File::create(&p)?);
                    write_records(&mut w, &records, &spec.classes, spec.format)?;
                    w.flush()?;
                }
                None => write_records(&mut out, &records, &spec.classes, spec.format)?,
            }
        }
        Command::Figures { outdir } => {
            for path in stringform::sweep::emit_figures(&outdir)? {
                writeln!(out, "{}", path.display())?;
            }
        }
        Command::TorsionCheck {
            trials,
            seed,
            algebra,
        } => {
            let frame = match algebra {
                Some(p) => LieAlgebraFrame::<f64>::from_json(&std::fs::read_to_string(p)?)?,
                None => LieAlgebraFrame::su2(),
            };
            let structure = frame.check_structure();
            if !structure.passed {
                return Err(Error::NotLieAlgebra(
                    structure.jacobi.max(structure.antisymmetry),
                ));
            }
            if trials == 0 {
                return Err(Error::InvalidSpec("trials must be positive".into()));
            }
            let report = torsion_check(&frame, trials, seed)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            if !report.passed(TORSION_TOL) {
                eprintln!("torsion check failed");
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_float(text: &str) -> Result<f64> {
    Ok(parse_exact(text)?.to_f64())
}

fn print_ricci<S: Scalar>(out: &mut impl Write, a1: &S, a2: &S) -> Result<()> {
    let ev = family_ricci_eigenvalues(a1, a2)?;
    writeln!(out, "ric {} {} {}", ev[0], ev[1], ev[2])?;
    writeln!(out, "region {}", classify_eigenvalues(&ev))?;
    Ok(())
}
