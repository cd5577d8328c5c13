//! Command-line front end for the `toric-orbifold` crate.
//!
//! Exit status: 0 on success, 1 when the polytope fails validation (or
//! `check` finds a failing property), 2 on any parse or usage error.

pub mod check;
pub mod class;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use toric_orbifold::nh_restriction::restrict;
use toric_orbifold::{chen_ruan::cr_multiply, LabeledPolytope, ToricOrbifold};

use input::LoadError;
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    /// Pretty-printed JSON with stable field names and canonical orderings.
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "toric-orbifold",
    version,
    about = "Chen-Ruan cohomology of labeled polytopes"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Largest polynomial degree for `sr` and for the injectivity test in `check`.
    #[arg(long, default_value_t = 3, global = true)]
    degree_bound: u32,
    /// Make `check` also require unit elementary divisors (injectivity over Z).
    #[arg(long, global = true)]
    strict_z: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the file describes a simple polytope with free cokernel.
    Validate { file: PathBuf },
    /// Vertices with the facets through them.
    Vertices { file: PathBuf },
    /// Minimal non-faces of the face complex and the edges.
    Complex { file: PathBuf },
    /// Twisted sectors: coordinates, support, fixed face, degree shift, ideal.
    Sectors { file: PathBuf },
    /// Stanley-Reisner presentation of the equivariant cohomology.
    Sr { file: PathBuf },
    /// Orbifold products of the sector units.
    ProductTable { file: PathBuf },
    /// Orbifold product of two classes such as `x1*x2@0 + 3@1`.
    Multiply {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Restriction of a class to the fixed vertices.
    Restrict {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// Property suite on seeded random classes plus the injectivity rank test.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

impl Command {
    fn file(&self) -> &PathBuf {
        match self {
            Command::Validate { file }
            | Command::Vertices { file }
            | Command::Complex { file }
            | Command::Sectors { file }
            | Command::Sr { file }
            | Command::ProductTable { file }
            | Command::Multiply { file, .. }
            | Command::Restrict { file, .. }
            | Command::Check { file, .. } => file,
        }
    }
}

struct Output<'a> {
    format: Format,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, pretty: impl FnOnce(&T) -> String) {
        let text = match self.format {
            Format::Pretty => pretty(value),
            Format::Machine => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        };
        let _ = self.out.write_all(text.as_bytes());
    }

    fn fail(&mut self, kind: &str, message: &str, code: i32) -> i32 {
        if self.format == Format::Machine {
            #[derive(Serialize)]
            struct Wrapper {
                error: ErrorRecord,
            }
            let w = Wrapper {
                error: ErrorRecord {
                    kind: kind.into(),
                    message: message.into(),
                },
            };
            let _ = writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(&w).expect("serializable")
            );
        }
        let _ = writeln!(self.err, "error: {message}");
        code
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return if e.exit_code() == 0 {
                EXIT_OK
            } else {
                EXIT_PARSE
            };
        }
    };
    let mut o = Output {
        format: cli.format,
        out,
        err,
    };

    let path = cli.command.file();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return o.fail(
                "IoError",
                &format!("IoError: {}: {e}", path.display()),
                EXIT_PARSE,
            )
        }
    };
    let polytope: LabeledPolytope = match input::parse_polytope(&text) {
        Ok(p) => p,
        Err(e @ LoadError::Parse(_)) => {
            return o.fail(
                "ParseError",
                &format!("{}: {e}", path.display()),
                EXIT_PARSE,
            )
        }
        Err(LoadError::Polytope(e)) => return o.fail(e.name(), &e.to_string(), EXIT_INVALID),
    };

    if let Command::Validate { .. } = cli.command {
        let r = ValidateReport::new(&polytope);
        let code = if r.valid { EXIT_OK } else { EXIT_INVALID };
        o.emit(&r, ValidateReport::pretty);
        return code;
    }

    let orb = match ToricOrbifold::new(polytope) {
        Ok(orb) => orb,
        Err(e) => return o.fail(e.name(), &e.to_string(), EXIT_INVALID),
    };

    match cli.command {
        Command::Validate { .. } => unreachable!("handled above"),
        Command::Vertices { .. } => o.emit(&VerticesReport::new(&orb), VerticesReport::pretty),
        Command::Complex { .. } => o.emit(&ComplexReport::new(&orb), ComplexReport::pretty),
        Command::Sectors { .. } => o.emit(&SectorsReport::new(&orb), SectorsReport::pretty),
        Command::Sr { .. } => o.emit(&SrReport::new(&orb, cli.degree_bound), SrReport::pretty),
        Command::ProductTable { .. } => {
            o.emit(&ProductTableReport::new(&orb), ProductTableReport::pretty)
        }
        Command::Multiply { left, right, .. } => {
            let (a, b) = match (
                class::parse_class(&left, &orb),
                class::parse_class(&right, &orb),
            ) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) => {
                    return o.fail("ParseError", &format!("left class: {e}"), EXIT_PARSE)
                }
                (_, Err(e)) => {
                    return o.fail("ParseError", &format!("right class: {e}"), EXIT_PARSE)
                }
            };
            let product = cr_multiply(&orb, &a, &b).expect("parsed classes are well-formed");
            let r = MultiplyReport {
                left: ClassRecord::new(&orb, &a),
                right: ClassRecord::new(&orb, &b),
                product: ClassRecord::new(&orb, &product),
            };
            o.emit(&r, MultiplyReport::pretty);
        }
        Command::Restrict { class, .. } => {
            let c = match class::parse_class(&class, &orb) {
                Ok(c) => c,
                Err(e) => return o.fail("ParseError", &e.to_string(), EXIT_PARSE),
            };
            let r = restrict(&orb, &c).expect("parsed classes are well-formed");
            o.emit(&RestrictReport::new(&orb, &c, &r), RestrictReport::pretty);
        }
        Command::Check { seed, samples, .. } => {
            let r = check::run_checks(&orb, seed, samples, cli.degree_bound, cli.strict_z);
            let code = if r.passed { EXIT_OK } else { EXIT_INVALID };
            o.emit(&r, check::CheckReport::pretty);
            return code;
        }
    }
    EXIT_OK
}
