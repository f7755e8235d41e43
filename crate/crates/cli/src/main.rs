//! `derring`: verify derivations of group algebras, compute derivation
//! spaces and structural catalogs, and report the codes they generate.
//!
//! Exit status: 0 on success, 1 when a check fails (not a derivation,
//! catalog mismatch, skew identity violated), 2 on bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use derring::codes::{EnumOptions, DEFAULT_MAX_MESSAGES};
use derring::derfile::{load_derivation_file, parse_group};
use derring::derivations::{
    derivation_space, inner_derivation, skew_quotient_is_associative, SkewElement,
};
use derring::structure::{
    abelian_der_basis, center_basis, centralizer_basis, dihedral_center_basis,
    dihedral_centralizer_basis, dihedral_der_basis, dihedral_inner_basis, BasisCatalog,
    CatalogItem, Reflection,
};
use derring::{Derivation, Error, Family, FieldSpec, GroupAlgebra, LinearCode, MatrixGF};

const MAX_ENUM_ENV: &str = "DERRING_MAX_ENUM";

#[derive(Parser)]
#[command(name = "derring", version, about = "Derivations of finite group algebras and their codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a derivation file defines a derivation; print relator residuals if not.
    Verify { file: PathBuf },
    /// Solve for a basis of the derivation space of KG.
    Derspace {
        /// Group descriptor: C:n, A:n1,n2,..., D:2n
        group: String,
        /// Field literal: GF(2), GF(9), GF(2^2)[1,1,1]
        field: String,
        /// Compare against the closed-form catalog when one applies.
        #[arg(long)]
        check: bool,
    },
    /// Print a closed-form basis.
    Catalog {
        #[command(subcommand)]
        kind: CatalogKind,
    },
    /// Report the code spanned by the image of a derivation.
    Code {
        file: PathBuf,
        /// Write the matrix here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the block A of the reduced form [I | A] instead of the generator.
        #[arg(long)]
        split: bool,
        /// Worker threads for the minimum-distance enumeration.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Largest message space to enumerate; overrides DERRING_MAX_ENUM.
        #[arg(long)]
        max_enum: Option<u128>,
    },
    /// Check x̄a - ax̄ = d(a) in KG[x; d]/(x^2 - 1) and whether that quotient is associative.
    SkewCheck { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogKind {
    /// Class sums, or the explicit list for a dihedral group in characteristic 2.
    Center { group: String, field: String },
    /// Orbit sums under conjugation by an element, e.g. `y` or `x*y`.
    Centralizer { group: String, field: String, element: String },
    /// The basis g∂_i of an abelian group algebra.
    Abelian { group: String, field: String },
    /// Derivation basis of K D_{2n}, characteristic 2.
    Dihedral { n: usize, field: String },
    /// Inner derivation basis of K D_{2n}, characteristic 2.
    Inner { n: usize, field: String },
}

/// A failed command: message and exit status.
struct Failure(String, u8);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("error: {e}"), 2)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { file } => verify(&file),
        Command::Derspace { group, field, check } => derspace(&group, &field, check),
        Command::Catalog { kind } => catalog(kind),
        Command::Code { file, out, split, threads, max_enum } => {
            code(&file, out.as_deref(), split, threads, max_enum)
        }
        Command::SkewCheck { file } => skew_check(&file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg, status)) => {
            eprintln!("{msg}");
            ExitCode::from(status)
        }
    }
}

fn algebra(group: &str, field: &str) -> Result<GroupAlgebra, Error> {
    Ok(GroupAlgebra::new(parse_group(group)?, field.parse::<FieldSpec>()?))
}

fn verify(file: &Path) -> CmdResult {
    let f = load_derivation_file(file)?;
    let residuals = f.map.relator_residuals();
    let name = format!("{} over {}", f.algebra.group().family(), f.algebra.field());
    if residuals.is_empty() {
        println!("derivation of {name}: all relators vanish");
        return Ok(());
    }
    println!("not a derivation of {name}");
    for r in &residuals {
        println!("  f*({}) = {}", r.word, r.residual);
    }
    Err(Failure(format!("{} relator(s) with nonzero residual", residuals.len()), 1))
}

fn rank<T: CatalogItem>(items: &[T]) -> usize {
    match items.first() {
        None => 0,
        Some(first) => {
            let rows: Vec<Vec<u16>> = items.iter().map(|i| i.coordinates()).collect();
            MatrixGF::from_raw_rows(first.algebra().field(), rows[0].len(), &rows)
                .map(|m| m.rank())
                .unwrap_or(0)
        }
    }
}

fn same_span<T: CatalogItem + Clone>(a: &[T], b: &[T]) -> bool {
    let both: Vec<T> = a.iter().chain(b).cloned().collect();
    let r = rank(a);
    r == rank(b) && rank(&both) == r
}

fn derspace(group: &str, field: &str, check: bool) -> CmdResult {
    let alg = algebra(group, field)?;
    let basis = derivation_space(&alg);
    for (i, d) in basis.iter().enumerate() {
        println!("[{}] {d}", i + 1);
    }
    println!("dim = {}", basis.len());
    let inner: Vec<Derivation> =
        (0..alg.dim()).map(|g| inner_derivation(&alg.basis(g))).collect();
    let inner_dim = rank(&inner);
    println!("inner dim = {inner_dim}{}", if inner_dim == basis.len() { " (all inner)" } else { "" });
    if !check {
        return Ok(());
    }
    let catalog = match alg.group().family() {
        Family::Dihedral(n) if alg.field().characteristic() == 2 => dihedral_der_basis(*n, alg.field())?,
        Family::Cyclic(_) | Family::Abelian(_) => abelian_der_basis(&alg)?,
        _ => {
            println!("check: no closed-form catalog for this group and field");
            return Ok(());
        }
    };
    // the dihedral catalog builds its own copy of the algebra; compare coordinates
    let coords = |ds: &[Derivation]| -> Vec<Vec<u16>> { ds.iter().map(|d| d.vector()).collect() };
    let mut stacked = coords(&basis);
    stacked.extend(coords(&catalog.elements));
    let joint = if stacked.is_empty() {
        0
    } else {
        MatrixGF::from_raw_rows(alg.field(), stacked[0].len(), &stacked)?.rank()
    };
    let agrees = catalog.rank() == basis.len() && joint == basis.len();
    println!("check: {} -> {}", catalog.summary(), if agrees { "agrees" } else { "MISMATCH" });
    if agrees {
        Ok(())
    } else {
        Err(Failure("catalog and solver disagree".into(), 1))
    }
}

fn print_catalog<T: CatalogItem + std::fmt::Display>(cat: &BasisCatalog<T>) -> CmdResult {
    println!("{cat}");
    if cat.is_consistent() {
        Ok(())
    } else {
        Err(Failure(format!("catalog rank {} does not match its size", cat.rank()), 1))
    }
}

fn dihedral_n(alg: &GroupAlgebra) -> Option<usize> {
    match alg.group().family() {
        Family::Dihedral(n) if alg.field().characteristic() == 2 && *n >= 3 => Some(*n),
        _ => None,
    }
}

fn catalog(kind: CatalogKind) -> CmdResult {
    match kind {
        CatalogKind::Center { group, field } => {
            let alg = algebra(&group, &field)?;
            match dihedral_n(&alg) {
                Some(n) => {
                    let cat = dihedral_center_basis(n, alg.field())?;
                    let generic = center_basis(&alg);
                    print_catalog(&cat)?;
                    if !same_span(&cat.elements, &generic.elements) {
                        return Err(Failure("listed center differs from class sums".into(), 1));
                    }
                    Ok(())
                }
                None => print_catalog(&center_basis(&alg)),
            }
        }
        CatalogKind::Centralizer { group, field, element } => {
            let alg = algebra(&group, &field)?;
            let h = alg.group().element_by_name(&element)?;
            let orbit = centralizer_basis(&alg, h);
            // x^i y sits at index n + i
            let listed = dihedral_n(&alg).and_then(|n| {
                if h == n {
                    Some(Reflection::Y)
                } else if h == n + 1 {
                    Some(Reflection::XY)
                } else {
                    None
                }
            });
            match (dihedral_n(&alg), listed) {
                (Some(n), Some(which)) => {
                    let cat = dihedral_centralizer_basis(n, alg.field(), which)?;
                    print_catalog(&cat)?;
                    if !same_span(&cat.elements, &orbit.elements) {
                        return Err(Failure("listed centralizer differs from orbit sums".into(), 1));
                    }
                    Ok(())
                }
                _ => print_catalog(&orbit),
            }
        }
        CatalogKind::Abelian { group, field } => print_catalog(&abelian_der_basis(&algebra(&group, &field)?)?),
        CatalogKind::Dihedral { n, field } => print_catalog(&dihedral_der_basis(n, &field.parse()?)?),
        CatalogKind::Inner { n, field } => print_catalog(&dihedral_inner_basis(n, &field.parse()?)?),
    }
}

fn enum_bound(flag: Option<u128>) -> Result<u128, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(MAX_ENUM_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure(format!("error: {MAX_ENUM_ENV}={v:?} is not a number"), 2)),
        Err(_) => Ok(DEFAULT_MAX_MESSAGES),
    }
}

fn code(file: &Path, out: Option<&Path>, split: bool, threads: usize, max_enum: Option<u128>) -> CmdResult {
    let f = load_derivation_file(file)?;
    let d = Derivation::validated(f.map)?;
    let code = LinearCode::from_derivation(&d)?;
    let opts = EnumOptions { max_messages: enum_bound(max_enum)?, threads: threads.max(1) };
    println!("{}", code.report(&opts)?);
    let matrix = if split { code.systematic_part()? } else { code.generator().clone() };
    let text = matrix.to_text();
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure(format!("error: cannot write {}: {e}", path.display()), 2))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn skew_check(file: &Path) -> CmdResult {
    let f = load_derivation_file(file)?;
    let d = Derivation::validated(f.map)?;
    let alg = d.algebra().clone();
    // both sides are K-linear in a, so the group basis suffices
    let mut restricts = true;
    for g in 0..alg.dim() {
        let a = alg.basis(g);
        let lhs = SkewElement::base(&a).inner_by_x_bar(&d)?;
        if lhs != SkewElement::base(&d.derive(&a)?) {
            println!("x̄a - ax̄ != d(a) at a = {}", alg.group().name(g));
            restricts = false;
        }
    }
    println!("inner derivation by x̄ restricts to d on KG: {restricts}");
    let assoc = skew_quotient_is_associative(&d)?;
    println!("x^2 - 1 generates a two-sided ideal (quotient associative): {assoc}");
    if !assoc {
        let two = alg.field().from_int(2);
        for g in 0..alg.dim() {
            let dg = d.derive_element(g)?;
            let ddg = d.derive(&dg)?;
            if !ddg.is_zero() || !dg.scale(&two)?.is_zero() {
                println!("  witness: g = {}, d(g) = {dg}, d(d(g)) = {ddg}", alg.group().name(g));
                break;
            }
        }
    }
    if restricts {
        Ok(())
    } else {
        Err(Failure("skew identity violated".into(), 1))
    }
}
