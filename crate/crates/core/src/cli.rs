//! The `sdyb` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::braid::{parse_braid, Colorer};
use crate::cohomology::{chain_map_defect, cup_product, CochainComplex, ComplexKind, Subcomplex, GUITAR_CONVENTION};
use crate::error::Error as DomainError;
use crate::io::{self, IoError, Structure, StructureFile};
use crate::magma::{
    axiom_report, make_alexander_quandle, make_conjugation_quandle, make_laver_table, make_trivial_quandle,
    symmetric_group, Element, OpTable,
};
use crate::solution::{
    check_birack, entwining_check, guitar_inverse, guitar_map, make_flip, sigma_from_monoid, sigma_from_shelf,
    structure_rack, SigmaTable,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] DomainError),
    #[error("{0}")]
    Io(#[from] IoError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Clap(#[from] clap::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(DomainError::Braid(_)) => 2,
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Clap(e) => e.exit_code() as u8,
            CliError::Io(_) => 3,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "sdyb", version, about = "Self-distributive structures, Yang-Baxter solutions and their invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the axioms satisfied by a magma or sigma file.
    Check { file: PathBuf },
    /// Generate a structure from a standard family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Structure rack of a birack.
    StructureRack {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the guitar map or verify the entwining relation.
    Guitar {
        file: PathBuf,
        /// Comma-separated tuple, e.g. 1,1,1.
        #[arg(long, conflicts_with = "verify_entwine")]
        tuple: Option<String>,
        #[arg(long, requires = "tuple")]
        inverse: bool,
        #[arg(long, value_name = "N")]
        verify_entwine: Option<usize>,
    },
    /// Coloring action of a braid, or the closure coloring count.
    Color {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        closure: bool,
    },
    /// Cocycle weights of a colored braid, or the closure weight polynomial.
    Weight {
        file: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        closure: bool,
    },
    /// Cohomology group, optionally with a cocycle basis.
    Cohomology {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Quandle (rack), biquandle (birack) or degree-2 braided biquandle subcomplex.
        #[arg(long)]
        quandle_sub: bool,
        #[arg(long)]
        deg: usize,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        basis: bool,
    },
    /// Verify that J* intertwines the braided and birack differentials.
    IsoCheck {
        file: PathBuf,
        #[arg(long)]
        deg: usize,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Braided cup product of two cochains.
    Cup {
        file: PathBuf,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, clap::Args)]
struct Out {
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// a◁b = a on m elements.
    Trivial {
        m: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Conjugation quandle of the symmetric group on k letters.
    ConjSym {
        k: usize,
        #[command(flatten)]
        out: Out,
    },
    /// a◁b = ta + (1−t)b mod m.
    Alexander {
        m: usize,
        #[arg(allow_hyphen_values = true)]
        t: i64,
        #[command(flatten)]
        out: Out,
    },
    /// Laver table A_k in the right self-distributive convention.
    Laver {
        k: u32,
        #[command(flatten)]
        out: Out,
    },
    /// σ(a,b) = (b,a).
    Flip {
        m: usize,
        #[command(flatten)]
        out: Out,
    },
    /// σ(a,b) = (b, a◁b) from a magma file.
    SigmaSd {
        magma: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// σ(a,b) = (a∗b, unit) from a magma file.
    SigmaAss {
        magma: PathBuf,
        unit: Element,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Rack,
    Braided,
    Birack,
}

fn tuple_text(t: &[Element]) -> String {
    let cells: Vec<String> = t.iter().map(Element::to_string).collect();
    format!("({})", cells.join(","))
}

fn load_magma(path: &Path) -> CliResult<OpTable> {
    match io::load_structure(path)?.structure {
        Structure::Magma(op) => Ok(op),
        Structure::Sigma(_) => Err(usage(format!("{} holds a sigma table; a magma file is required", path.display()))),
    }
}

fn load_sigma(path: &Path) -> CliResult<SigmaTable> {
    match io::load_structure(path)?.structure {
        Structure::Sigma(s) => Ok(s),
        Structure::Magma(_) => {
            Err(usage(format!("{} holds a magma table; a sigma file is required (see `gen sigma-sd`)", path.display())))
        }
    }
}

fn emit_structure(out: &mut dyn Write, file: StructureFile, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => {
            io::save_structure(p, &file)?;
            writeln_out(
                out,
                format!("wrote {} ({}, size {})", p.display(), file.structure.kind(), file.structure.size()),
            )
        }
        None => write_out(out, io::structure_to_string(&file)),
    }
}

fn write_out(out: &mut dyn Write, text: String) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io(IoError::Io { path: PathBuf::from("<stdout>"), source }))
}

fn writeln_out(out: &mut dyn Write, mut text: String) -> CliResult<()> {
    text.push('\n');
    write_out(out, text)
}

fn parse_tuple(text: &str, size: usize) -> CliResult<Vec<Element>> {
    let t = text
        .split(',')
        .map(|tok| tok.trim().parse::<Element>().map_err(|_| usage(format!("--tuple: {tok:?} is not an element"))))
        .collect::<CliResult<Vec<_>>>()?;
    if let Some(&x) = t.iter().find(|&&x| x >= size) {
        return Err(usage(format!("--tuple: element {x} is outside 0..{size}")));
    }
    Ok(t)
}

fn generate(family: Family, out: &mut dyn Write) -> CliResult<()> {
    let (file, path): (StructureFile, Option<PathBuf>) = match family {
        Family::Trivial { m, out } => {
            (StructureFile::from(make_trivial_quandle(m)?).with_family("trivial", json!({ "m": m })), out.output)
        }
        Family::ConjSym { k, out } => (
            StructureFile::from(make_conjugation_quandle(&symmetric_group(k)?)?)
                .with_family("conj-sym", json!({ "k": k })),
            out.output,
        ),
        Family::Alexander { m, t, out } => (
            StructureFile::from(make_alexander_quandle(m, t)?).with_family("alexander", json!({ "m": m, "t": t })),
            out.output,
        ),
        Family::Laver { k, out } => {
            (StructureFile::from(make_laver_table(k)?).with_family("laver", json!({ "k": k })), out.output)
        }
        Family::Flip { m, out } => {
            (StructureFile::from(make_flip(m)?).with_family("flip", json!({ "m": m })), out.output)
        }
        Family::SigmaSd { magma, out } => {
            (StructureFile::from(sigma_from_shelf(&load_magma(&magma)?)).with_family("sigma-sd", json!({})), out.output)
        }
        Family::SigmaAss { magma, unit, out } => {
            let op = load_magma(&magma)?;
            if unit >= op.size() {
                return Err(usage(format!("unit {unit} is outside 0..{}", op.size())));
            }
            (
                StructureFile::from(sigma_from_monoid(&op, unit)?).with_family("sigma-ass", json!({ "unit": unit })),
                out.output,
            )
        }
    };
    emit_structure(out, file, path.as_deref())
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Check { file } => {
            let text = match io::load_structure(&file)?.structure {
                Structure::Magma(op) => axiom_report(&op).to_string(),
                Structure::Sigma(s) => check_birack(&s).to_string(),
            };
            write_out(out, text)
        }
        Command::Gen { family } => generate(family, out),
        Command::StructureRack { file, output } => {
            let rack = structure_rack(&load_sigma(&file)?)?;
            emit_structure(out, StructureFile::from(rack), output.as_deref())
        }
        Command::Guitar { file, tuple, inverse, verify_entwine } => {
            let sigma = load_sigma(&file)?;
            match (tuple, verify_entwine) {
                (Some(t), None) => {
                    let t = parse_tuple(&t, sigma.size())?;
                    if inverse {
                        let pre = guitar_inverse(&sigma, &t)?;
                        writeln_out(out, format!("J^-1{} = {}", tuple_text(&t), tuple_text(&pre)))
                    } else {
                        writeln_out(out, format!("J{} = {}", tuple_text(&t), tuple_text(&guitar_map(&sigma, &t))))
                    }
                }
                (None, Some(n)) => {
                    let check = entwining_check(&sigma, n)?;
                    let text = match check.witness {
                        None => format!("entwining J σ_i = σ'_i J on S^{n}: holds"),
                        Some(w) => format!(
                            "entwining J σ_i = σ'_i J on S^{n}: fails at {} for i = {}: J σ_i gives {}, σ'_i J gives {}",
                            tuple_text(&w.tuple),
                            w.generator,
                            tuple_text(&w.lhs),
                            tuple_text(&w.rhs)
                        ),
                    };
                    writeln_out(out, text)
                }
                _ => Err(usage("guitar needs exactly one of --tuple or --verify-entwine")),
            }
        }
        Command::Color { file, braid, strands, closure } => {
            let sigma = load_sigma(&file)?;
            let beta = parse_braid(&braid, strands)?;
            let colorer = Colorer::new(&sigma);
            if closure {
                return writeln_out(out, colorer.coloring_count_closure(&beta)?.to_string());
            }
            let mut text = String::new();
            for input in crate::tuples(sigma.size(), strands) {
                let output = colorer.act(&beta, &input)?;
                text.push_str(&format!("{} -> {}\n", tuple_text(&input), tuple_text(&output)));
            }
            write_out(out, text)
        }
        Command::Weight { file, cocycle, braid, strands, closure } => {
            let sigma = load_sigma(&file)?;
            let phi = io::load_cochain(&cocycle)?;
            let beta = parse_braid(&braid, strands)?;
            let colorer = Colorer::new(&sigma);
            if closure {
                let inv = colorer.weight_polynomial_closure(&phi, &beta)?;
                let coeffs: Vec<String> = inv.weight_polynomial.iter().map(u64::to_string).collect();
                return writeln_out(
                    out,
                    format!("colorings: {}\npolynomial: {}", inv.coloring_count, coeffs.join(",")),
                );
            }
            let mut text = String::new();
            for row in colorer.weight_table(&phi, &beta)? {
                text.push_str(&format!(
                    "{} -> {} weight {}\n",
                    tuple_text(&row.input),
                    tuple_text(&row.output),
                    row.weight
                ));
            }
            write_out(out, text)
        }
        Command::Cohomology { file, kind, quandle_sub, deg, modulus, basis } => {
            let structure = io::load_structure(&file)?.structure;
            let (kind, sub) = match (kind, structure) {
                (KindArg::Rack, Structure::Magma(op)) => {
                    (ComplexKind::Rack(op), if quandle_sub { Subcomplex::QuandleDegenerate } else { Subcomplex::Full })
                }
                (KindArg::Braided, Structure::Sigma(s)) => (
                    ComplexKind::Braided(s),
                    if quandle_sub { Subcomplex::BraidedBiquandleDeg2 } else { Subcomplex::Full },
                ),
                (KindArg::Birack, Structure::Sigma(s)) => {
                    (ComplexKind::Birack(s), if quandle_sub { Subcomplex::QuandleDegenerate } else { Subcomplex::Full })
                }
                (KindArg::Rack, Structure::Sigma(_)) => {
                    return Err(usage("--kind rack needs a magma file; use --kind braided or birack for sigma files"))
                }
                (_, Structure::Magma(_)) => {
                    return Err(usage("--kind braided/birack needs a sigma file; convert with `gen sigma-sd`"))
                }
            };
            if modulus == 1 {
                return Err(usage("--mod must be 0 (integers) or at least 2"));
            }
            if basis && modulus == 0 {
                return Err(usage("--basis needs --mod n with n >= 2"));
            }
            let cx = CochainComplex::new(kind, sub)?;
            let h = cx.cohomology(deg, modulus)?;
            let coeff = if modulus == 0 { "Z".to_string() } else { format!("Z/{modulus}") };
            let mut text = format!("H^{deg}({coeff}) = {h}\n");
            if basis {
                let cocycles = cx.cocycle_basis(deg, modulus)?;
                text.push_str(&format!("cocycle generators: {}\n", cocycles.len()));
                for c in cocycles {
                    let vals: Vec<String> = c.values().iter().map(i64::to_string).collect();
                    text.push_str(&format!("[{}]\n", vals.join(",")));
                }
            }
            write_out(out, text)
        }
        Command::IsoCheck { file, deg, modulus } => {
            let sigma = load_sigma(&file)?;
            if modulus == 1 {
                return Err(usage("--mod must be 0 (integers) or at least 2"));
            }
            let br = CochainComplex::full(ComplexKind::Braided(sigma.clone()))?;
            let bir = CochainComplex::full(ComplexKind::Birack(sigma.clone()))?;
            let mut text = format!("convention: (J*f)(a) = {GUITAR_CONVENTION}\n");
            let mut defect = None;
            for k in 0..=deg {
                if let Some(d) = chain_map_defect(&sigma, k, GUITAR_CONVENTION)? {
                    defect = Some((k, d));
                    break;
                }
            }
            match defect {
                None => text.push_str(&format!("chain map in degrees 0..{deg}: yes\n")),
                Some((k, (row, col))) => text.push_str(&format!(
                    "chain map in degrees 0..{deg}: no (degree {k}, coefficient of f{} in the value at {})\n",
                    tuple_text(&col),
                    tuple_text(&row)
                )),
            }
            for k in 1..=deg {
                let (a, b) = (br.cohomology(k, modulus)?, bir.cohomology(k, modulus)?);
                let verdict = if a == b { "agree" } else { "differ" };
                text.push_str(&format!("H^{k}: braided {a}, birack {b}: {verdict}\n"));
            }
            write_out(out, text)
        }
        Command::Cup { file, left, right, output } => {
            let sigma = load_sigma(&file)?;
            let f = io::load_cochain(&left)?;
            let g = io::load_cochain(&right)?;
            let fg = cup_product(&sigma, &f, &g)?;
            match output {
                Some(p) => {
                    io::save_cochain(&p, &fg)?;
                    writeln_out(
                        out,
                        format!("wrote {} (degree {}, modulus {})", p.display(), fg.degree(), fg.modulus()),
                    )
                }
                None => write_out(out, io::cochain_to_string(&fg)),
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> CliResult<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    execute(cli, out)
}

pub fn main() -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    match run(std::env::args_os(), &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Clap(e)) => {
            let _ = e.print();
            ExitCode::from(e.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
