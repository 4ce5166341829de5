use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use leibkit::algebra::{format_combination, LeibnizAlgebra};
use leibkit::catalog::{self, CyclicSpec};
use leibkit::derivation::{derivation_basis, inner_witnesses};
use leibkit::holomorph::{build_holomorph, decomposition_check};
use leibkit::io::{emit_algebra_string, parse_algebra, parse_linear_combination};
use leibkit::radical::{SuiteConfig, Supplied};
use leibkit::report::{analyze, AnalyzeOptions};
use leibkit::{FieldSpec, LeibError, Matrix, Subspace};

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "leibkit", version, about = "Structure of finite-dimensional left Leibniz algebras")]
struct Cli {
    /// Skip the left Leibniz identity check when reading algebra files.
    #[arg(long, global = true)]
    no_validate: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the left Leibniz identity.
    Validate { file: PathBuf },
    /// Full structural report.
    Analyze {
        file: PathBuf,
        /// Omit the holomorph decomposition.
        #[arg(long)]
        skip_hol: bool,
        /// Exit with status 3 when any verdict is undecided.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Spanning vector of a radical candidate (repeatable).
        #[arg(long = "radical", value_name = "EXPR")]
        radical: Vec<String>,
        /// Spanning vector of a nilradical candidate (repeatable).
        #[arg(long = "nilradical", value_name = "EXPR")]
        nilradical: Vec<String>,
    },
    /// Canonical basis of Der(A) with inner witnesses.
    Derivations {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write hol(A) as an algebra file.
    Holomorph {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Ideal and characteristic tests for the span and closure of generators.
    CheckIdeal {
        file: PathBuf,
        #[arg(short = 'g', long = "generator", value_name = "EXPR", required = true)]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct a named family.
    Make {
        #[command(subcommand)]
        family: Family,
    },
    /// List catalog entries, optionally writing each as a file.
    Catalog {
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Rewrite an algebra in a seeded random basis.
    BasisChange {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Cyclic algebra with [x, x^n] = k2 x^2 + ... + kn x^n.
    Cyclic {
        #[arg(short = 'n')]
        n: usize,
        /// Comma-separated k2..kn; defaults to all zero.
        #[arg(short = 'k', value_delimiter = ',', allow_hyphen_values = true)]
        k: Vec<String>,
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: FieldSpec,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Truncated current algebra L ⊗ F[x]/(x^p) over F_p.
    Current {
        #[arg(long, value_enum)]
        base: Base,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Hemisemidirect product S ⊕ M.
    Hemi {
        #[arg(long, value_enum)]
        base: Base,
        #[arg(long, value_enum)]
        module: ModuleKind,
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: FieldSpec,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Base {
    Sl2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModuleKind {
    Natural,
    Adjoint,
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    if text == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = text
        .strip_prefix("Fp:")
        .or_else(|| text.strip_prefix('F'))
        .ok_or_else(|| format!("expected Q or Fp:<p>, got {text:?}"))?;
    let p: u64 = p.parse().map_err(|_| format!("invalid prime {p:?}"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn load(path: &Path, validate: bool) -> leibkit::Result<LeibnizAlgebra> {
    parse_algebra(path, validate)
}

fn write_or_return(text: String, out: Option<&Path>, note: String) -> leibkit::Result<String> {
    match out {
        Some(p) => {
            std::fs::write(p, text)?;
            Ok(note)
        }
        None => Ok(text),
    }
}

fn span_of(a: &LeibnizAlgebra, exprs: &[String]) -> leibkit::Result<Subspace> {
    let vs = exprs
        .iter()
        .map(|e| parse_linear_combination(a, e))
        .collect::<leibkit::Result<Vec<_>>>()?;
    Subspace::span(a.field(), a.dim(), vs)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().map(|r| r.iter().map(|s| s.canonical()).collect()).collect()
}

fn run(cli: Cli) -> leibkit::Result<Outcome> {
    let validate = !cli.no_validate;
    match cli.command {
        Command::Validate { file } => {
            let a = load(&file, true)?;
            Ok(Outcome::ok(format!(
                "valid: {}-dimensional left Leibniz algebra over {}\n",
                a.dim(),
                a.field()
            )))
        }
        Command::Analyze {
            file,
            skip_hol,
            strict,
            format,
            radical,
            nilradical,
        } => {
            let a = load(&file, validate)?;
            let supplied = Supplied {
                radical: (!radical.is_empty()).then(|| span_of(&a, &radical)).transpose()?,
                nilradical: (!nilradical.is_empty()).then(|| span_of(&a, &nilradical)).transpose()?,
            };
            let opts = AnalyzeOptions {
                skip_hol,
                supplied,
                config: SuiteConfig::from_env()?,
            };
            let report = analyze(&a, &opts)?;
            let stdout = match format {
                Format::Text => report.to_text(),
                Format::Machine => report.to_machine(),
            };
            let code = if strict && report.has_undecided() { EXIT_UNDECIDED } else { 0 };
            Ok(Outcome { stdout, code })
        }
        Command::Derivations { file, format } => {
            let a = load(&file, validate)?;
            let der = derivation_basis(&a);
            let witnesses = inner_witnesses(&a, &der);
            let stdout = match format {
                Format::Machine => {
                    let items: Vec<serde_json::Value> = witnesses
                        .iter()
                        .map(|w| {
                            serde_json::json!({
                                "matrix": matrix_rows(&w.delta),
                                "inner_witness": w.witness.as_ref().map(|x| format_combination(a.names(), x)),
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({ "der_dim": der.dim(), "basis": items });
                    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = format!("der_dim {}\n", der.dim());
                    for (i, w) in witnesses.iter().enumerate() {
                        let _ = writeln!(s, "D{}:", i + 1);
                        for (j, name) in a.names().iter().enumerate() {
                            let img = format_combination(a.names(), &w.delta.column(j));
                            let _ = writeln!(s, "  {name} -> {img}");
                        }
                        match &w.witness {
                            Some(x) => {
                                let _ = writeln!(s, "  inner, witness {}", format_combination(a.names(), x));
                            }
                            None => s.push_str("  outer\n"),
                        }
                    }
                    s
                }
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Holomorph { file, out } => {
            let a = load(&file, validate)?;
            let h = build_holomorph(&a)?;
            let dec = decomposition_check(&h)?;
            let note = format!(
                "hol dim {} (A {} + Der {}); sums_to_hol {}; Z_meet_I_trivial {}; A_meet_ZI_equals_leib {}\n",
                h.algebra.dim(),
                a.dim(),
                h.der.dim(),
                dec.sums_to_hol,
                dec.z_meet_i_trivial,
                dec.a_meet_zi_equals_leib
            );
            Ok(Outcome::ok(write_or_return(emit_algebra_string(&h.algebra), out.as_deref(), note)?))
        }
        Command::CheckIdeal {
            file,
            generators,
            format,
        } => {
            let a = load(&file, validate)?;
            let span = span_of(&a, &generators)?;
            let der = derivation_basis(&a);
            let is_ideal = a.is_ideal(&span)?;
            let closure = a.ideal_closure(&span)?.into_space();
            let is_characteristic = der.is_characteristic_ideal(&a, &closure)?;
            let series = a.subspace_series(&closure)?;
            let char_closure = der.characteristic_closure(&a, &closure)?;
            let stdout = match format {
                Format::Machine => {
                    let doc = serde_json::json!({
                        "span_dim": span.dim(),
                        "closure_dim": closure.dim(),
                        "is_ideal": is_ideal,
                        "is_characteristic": is_characteristic,
                        "solvable": series.is_solvable(),
                        "nilpotent": series.is_nilpotent(),
                        "characteristic_closure_dim": char_closure.dim(),
                    });
                    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
                    s.push('\n');
                    s
                }
                Format::Text => format!(
                    "span_dim {}\nclosure_dim {}\nis_ideal {}\nis_characteristic {}\nsolvable {}\nnilpotent {}\ncharacteristic_closure_dim {}\n",
                    span.dim(),
                    closure.dim(),
                    is_ideal,
                    is_characteristic,
                    series.is_solvable(),
                    series.is_nilpotent(),
                    char_closure.dim()
                ),
            };
            let code = if is_ideal && is_characteristic { 0 } else { EXIT_FALSE };
            Ok(Outcome { stdout, code })
        }
        Command::Make { family } => make(family),
        Command::Catalog { emit } => {
            let mut s = String::new();
            for e in catalog::catalog() {
                let _ = writeln!(s, "{:<20} dim {:<3} {}", e.name, e.algebra.dim(), e.algebra.field());
                if let Some(dir) = &emit {
                    std::fs::create_dir_all(dir)?;
                    std::fs::write(dir.join(format!("{}.json", e.name)), emit_algebra_string(&e.algebra))?;
                }
            }
            Ok(Outcome::ok(s))
        }
        Command::BasisChange { file, seed, out } => {
            let a = load(&file, validate)?;
            let (b, _) = catalog::random_basis_change(&a, seed)?;
            let note = format!("wrote {}-dimensional algebra in basis of seed {seed}\n", b.dim());
            Ok(Outcome::ok(write_or_return(emit_algebra_string(&b), out.as_deref(), note)?))
        }
    }
}

fn make(family: Family) -> leibkit::Result<Outcome> {
    let (a, out) = match family {
        Family::Cyclic { n, k, field, out } => {
            let coeffs = if k.is_empty() {
                vec![field.zero(); n.saturating_sub(1)]
            } else {
                k.iter().map(|t| field.parse_scalar(t)).collect::<leibkit::Result<Vec<_>>>()?
            };
            (catalog::make_cyclic(&CyclicSpec::new(n, coeffs)?)?, out)
        }
        Family::Current { base: Base::Sl2, p, out } => (catalog::current_sl2(p)?.algebra, out),
        Family::Hemi {
            base: Base::Sl2,
            module,
            field,
            out,
        } => {
            let s = catalog::sl2(field);
            let action = match module {
                ModuleKind::Natural => catalog::sl2_natural_module(field),
                ModuleKind::Adjoint => catalog::adjoint_module(&s),
            };
            (catalog::make_hemisemidirect(&s, &action)?, out)
        }
    };
    let note = format!("wrote {}-dimensional algebra over {}\n", a.dim(), a.field());
    Ok(Outcome::ok(write_or_return(emit_algebra_string(&a), out.as_deref(), note)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let LeibError::IdentityViolation { .. } = e {
                eprintln!("hint: pass --no-validate to inspect the table anyway");
            }
            ExitCode::from(EXIT_INPUT)
        }
    }
}
