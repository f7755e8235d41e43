//! Reproduction checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{algebra, field, settings};
use derring::codes::{EnumOptions, DEFAULT_MAX_MESSAGES};
use derring::derivations::{
    derivation_space, inner_witness, skew_quotient_is_associative, SkewElement,
};
use derring::structure::{
    abelian_der_basis, center_basis, centralizer_basis, dihedral_center_basis,
    dihedral_centralizer_basis, dihedral_der_basis, dihedral_inner_basis, CatalogItem, Reflection,
};
use derring::{Derivation, GeneratorImageMap, GroupAlgebra, LinearCode, MatrixGF};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLAY_IMAGE: &str = "1+x+x^3+x^4+x^5+x^7+x^9+x^12";
const QR48_IMAGE: &str = "1+x^24+x^27+x^31+x^32+x^33+x^37+x^40+x^41+x^43+x^44+x^47";

/// The published 12 x 24 generator of the Golay image code.
const GOLAY_GENERATOR: &str = "\
110111010100100000000000
001101110101001000000000
000011011101010010000000
000000110111010100100000
000000001101110101001000
000000000011011101010010
100000000000110111010100
001000000000001101110101
010010000000000011011101
010100100000000000110111
110101001000000000001101
011101010010000000000011";

/// The published right-hand block `A` of `[I_24 | A]` for the length-48 code.
const QR48_A_BLOCK: &str = "\
100100011100010011011001
011001101100100011100010
010000101011100111010100
100010000111011011100001
000100001010111001110101
010001001101010101011010
011000101110001101111111
100000001111000110001111
111011111011010011100100
110101110011000001011000
001110111110110100111001
001101011100110000010110
011010000011001110101100
100111001011011111011100
000110100000110011101011
001001110010110111110111
111100011000111100000001
111111101100011101000110
010110101010101100100010
101011100111010100001000
100001110110111000010001
001010111001110101000010
010001110001001101100110
100110110010001110001001";

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bits(m: &MatrixGF) -> String {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(|v| char::from(b'0' + *v as u8)).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

fn derivation(alg: &GroupAlgebra, image: &str) -> Result<Derivation, String> {
    let map = GeneratorImageMap::from_strings(alg, &[("x", image)]).map_err(|e| e.to_string())?;
    let mut d = Derivation::new(map);
    ensure(d.is_derivation(), || "is_derivation returned false".into())?;
    Ok(d)
}

fn single_thread() -> EnumOptions {
    EnumOptions { max_messages: DEFAULT_MAX_MESSAGES, threads: 1 }
}

fn golay() -> Outcome {
    let alg = algebra("C:24", "GF(2)");
    let d = derivation(&alg, GOLAY_IMAGE)?;
    let code = LinearCode::from_derivation(&d).map_err(|e| e.to_string())?;
    let opts = single_thread();
    let dist = code.min_distance(&opts).map_err(|e| e.to_string())?;
    ensure((code.n(), code.k(), dist) == (24, 12, 8), || {
        format!("got n={} k={} d={dist}", code.n(), code.k())
    })?;
    ensure(code.is_self_dual(), || "not self-dual".into())?;
    ensure(code.is_doubly_even(&opts).map_err(|e| e.to_string())?, || "not doubly even".into())?;
    ensure(bits(code.generator()) == GOLAY_GENERATOR, || {
        format!("generator differs:\n{}", bits(code.generator()))
    })?;
    let oracle = code.min_distance_information_sets(2024).map_err(|e| e.to_string())?;
    ensure(oracle.distance == 8, || format!("information-set oracle gave {}", oracle.distance))?;
    Ok("[24,12,8], self-dual, doubly even, generator matches".into())
}

fn qr48() -> Outcome {
    let alg = algebra("C:48", "GF(2)");
    let d = derivation(&alg, QR48_IMAGE)?;
    let code = LinearCode::from_derivation(&d).map_err(|e| e.to_string())?;
    let opts = single_thread();
    let dist = code.min_distance(&opts).map_err(|e| e.to_string())?;
    ensure((code.n(), code.k(), dist) == (48, 24, 12), || {
        format!("got n={} k={} d={dist}", code.n(), code.k())
    })?;
    ensure(code.is_self_dual(), || "not self-dual".into())?;
    ensure(code.is_doubly_even(&opts).map_err(|e| e.to_string())?, || "not doubly even".into())?;
    let a = code.systematic_part().map_err(|e| e.to_string())?;
    ensure(bits(&a) == QR48_A_BLOCK, || format!("A block differs:\n{}", bits(&a)))?;
    Ok("[48,24,12], self-dual, doubly even, [I|A] matches".into())
}

fn rank_of<T: CatalogItem>(items: &[T]) -> usize {
    if items.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<u16>> = items.iter().map(|d| d.coordinates()).collect();
    MatrixGF::from_raw_rows(items[0].algebra().field(), rows[0].len(), &rows).unwrap().rank()
}

fn span_equal<A: CatalogItem, B: CatalogItem>(a: &[A], b: &[B]) -> bool {
    let (ra, rb) = (rank_of(a), rank_of(b));
    if a.is_empty() || b.is_empty() {
        return ra == rb;
    }
    let rows: Vec<Vec<u16>> =
        a.iter().map(|x| x.coordinates()).chain(b.iter().map(|x| x.coordinates())).collect();
    let joint = MatrixGF::from_raw_rows(a[0].algebra().field(), rows[0].len(), &rows).unwrap().rank();
    ra == rb && joint == ra
}

fn dihedral_dimensions() -> Outcome {
    let f2 = field("GF(2)");
    let mut dims = Vec::new();
    for n in 3..=8 {
        let alg = algebra(&format!("D:{}", 2 * n), "GF(2)");
        let space = derivation_space(&alg);
        let expected = if n % 2 == 0 { 2 * n + 4 } else { (3 * n + 1) / 2 };
        let cat = dihedral_der_basis(n, &f2).map_err(|e| e.to_string())?;
        ensure(space.len() == expected, || format!("n={n}: solver dim {} != {expected}", space.len()))?;
        ensure(cat.rank() == expected && cat.len() == expected, || {
            format!("n={n}: catalog rank {} != {expected}", cat.rank())
        })?;
        ensure(span_equal(&cat.elements, &space), || format!("n={n}: spans differ"))?;
        dims.push(expected.to_string());
    }
    Ok(format!("dims for n=3..8: {}", dims.join(",")))
}

fn inner_dimensions() -> Outcome {
    let f2 = field("GF(2)");
    let mut dims = Vec::new();
    for n in 3..=8 {
        let inner = dihedral_inner_basis(n, &f2).map_err(|e| e.to_string())?;
        let expected = 3 * ((n - 1) / 2);
        ensure(inner.rank() == expected, || format!("n={n}: rank {} != {expected}", inner.rank()))?;
        let space = derivation_space(inner.elements[0].algebra());
        let mut both: Vec<Derivation> = space.clone();
        both.extend(inner.elements.iter().cloned());
        ensure(rank_of(&both) == space.len(), || format!("n={n}: inner not inside Der"))?;
        ensure(expected < space.len(), || format!("n={n}: containment not strict"))?;
        dims.push(format!("{expected}<{}", space.len()));
    }
    Ok(format!("inner<Der for n=3..8: {}", dims.join(",")))
}

fn f3_d8() -> Outcome {
    let alg = algebra("D:8", "GF(3)");
    let basis = derivation_space(&alg);
    ensure(basis.len() == 3, || format!("dimension {}", basis.len()))?;
    let f = alg.field();
    let mut total = 0;
    let mut nonzero = 0;
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                let map = basis[0]
                    .map()
                    .scale(&a)
                    .and_then(|m| m.add(&basis[1].map().scale(&b)?))
                    .and_then(|m| m.add(&basis[2].map().scale(&c)?))
                    .map_err(|e| e.to_string())?;
                let d = Derivation::validated(map).map_err(|e| e.to_string())?;
                total += 1;
                if !d.is_zero() {
                    nonzero += 1;
                }
                let w = inner_witness(&d).map_err(|e| e.to_string())?;
                let w = w.ok_or_else(|| format!("no inner witness for {d}"))?;
                let check = derring::derivations::inner_derivation(&w);
                ensure(check == d, || format!("witness {w} does not reproduce {d}"))?;
            }
        }
    }
    ensure((total, nonzero) == (27, 26), || format!("{total} derivations, {nonzero} nonzero"))?;
    Ok("27 derivations, 26 nonzero, all inner".into())
}

fn abelian() -> Outcome {
    for (desc, expected) in [("A:2,4", 16), ("C:24", 24)] {
        let alg = algebra(desc, "GF(2)");
        let cat = abelian_der_basis(&alg).map_err(|e| e.to_string())?;
        let space = derivation_space(&alg);
        ensure(cat.rank() == expected && space.len() == expected, || {
            format!("{desc}: catalog rank {}, solver dim {}", cat.rank(), space.len())
        })?;
        ensure(span_equal(&cat.elements, &space), || format!("{desc}: spans differ"))?;
    }
    let c4 = algebra("C:4", "GF(3)");
    ensure(derivation_space(&c4).is_empty(), || "F3 C4 has nonzero derivations".into())?;
    ensure(abelian_der_basis(&c4).map_err(|e| e.to_string())?.is_empty(), || {
        "F3 C4 catalog not empty".into()
    })?;
    Ok("F2(C2xC4)=16, F2C24=24, F3C4={0}".into())
}

fn centers() -> Outcome {
    let f2 = field("GF(2)");
    for n in 3..=8 {
        let cat = dihedral_center_basis(n, &f2).map_err(|e| e.to_string())?;
        let expected = if n % 2 == 0 { n / 2 + 3 } else { (n + 3) / 2 };
        ensure(cat.rank() == expected && cat.len() == expected, || {
            format!("n={n}: center rank {}", cat.rank())
        })?;
        let alg = cat.elements[0].algebra().clone();
        ensure(span_equal(&cat.elements, &center_basis(&alg).elements), || {
            format!("n={n}: center spans differ")
        })?;
        for (which, h) in [(Reflection::Y, n), (Reflection::XY, n + 1)] {
            let listed = dihedral_centralizer_basis(n, &f2, which).map_err(|e| e.to_string())?;
            let orbit = centralizer_basis(&alg, h);
            ensure(listed.is_consistent(), || format!("n={n} {which:?}: list not independent"))?;
            ensure(span_equal(&listed.elements, &orbit.elements), || {
                format!("n={n} {which:?}: centralizer spans differ")
            })?;
        }
    }
    Ok("center and C(y), C(xy) lists agree for n=3..8".into())
}

fn properties() -> Outcome {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let settings = settings();
    ensure(settings.len() >= 5, || "too few settings".into())?;
    let err = |e: derring::Error| e.to_string();
    for trial in 0..1000 {
        let s = &settings[trial % settings.len()];
        let d = common::random_derivation(s, &mut rng);
        let a = common::random_element(&s.algebra, &mut rng);
        let b = common::random_element(&s.algebra, &mut rng);
        let ab = a.mul(&b).map_err(err)?;
        let leibniz = d.derive(&a).map_err(err)?.mul(&b).map_err(err)?.add(&a.mul(&d.derive(&b).map_err(err)?).map_err(err)?).map_err(err)?;
        ensure(d.derive(&ab).map_err(err)? == leibniz, || format!("{}: Leibniz fails", s.name))?;
        let sum = d.derive(&a.add(&b).map_err(err)?).map_err(err)?;
        ensure(sum == d.derive(&a).map_err(err)?.add(&d.derive(&b).map_err(err)?).map_err(err)?, || {
            format!("{}: additivity fails", s.name)
        })?;
        let skew = SkewElement::base(&a).inner_by_x_bar(&d).map_err(err)?;
        ensure(skew == SkewElement::base(&d.derive(&a).map_err(err)?), || {
            format!("{}: x̄a - ax̄ != d(a)", s.name)
        })?;
        // word independence: canonical word vs the same word with a relator appended
        let g = rng.gen_range(0..s.algebra.dim());
        let group = s.algebra.group();
        let w = group.canonical_word(g);
        let t = &group.presentation().relators()[rng.gen_range(0..group.presentation().relators().len())];
        let longer = w.concat(t);
        ensure(d.map().fstar_word(&longer) == d.derive_element(g).map_err(err)?, || {
            format!("{}: d(g) depends on the word", s.name)
        })?;
    }
    let with_square_zero = settings
        .iter()
        .flat_map(|s| s.basis.iter())
        .filter(|d| skew_quotient_is_associative(d).unwrap_or(false))
        .count();
    Ok(format!(
        "1000 random triples over {} settings; full suite in tests/properties.rs ({with_square_zero} basis derivations admit an associative quotient)",
        settings.len()
    ))
}

fn brute_force() -> Outcome {
    let mut report = Vec::new();
    for (desc, dim) in [("C:4", 4usize), ("D:6", 5)] {
        let alg = algebra(desc, "GF(2)");
        let n = alg.dim();
        let gens = alg.group().presentation().generators().len();
        let unknowns = n * gens;
        let mut count = 0u64;
        for mask in 0u64..(1 << unknowns) {
            let v: Vec<u16> = (0..unknowns).map(|i| (mask >> i & 1) as u16).collect();
            let map = GeneratorImageMap::from_vector(&alg, &v).map_err(|e| e.to_string())?;
            if Derivation::new(map).is_derivation() {
                count += 1;
            }
        }
        let space = derivation_space(&alg).len();
        ensure(space == dim && count == 1 << space, || {
            format!("{desc}: {count} maps pass, solver dimension {space}")
        })?;
        report.push(format!("{desc}: {count} = 2^{space}"));
    }
    Ok(report.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("Golay [24,12,8] reproduction", golay, Duration::from_secs(1)),
        ("QR48 [48,24,12] reproduction", qr48, Duration::from_secs(120)),
        ("dihedral derivation dimensions", dihedral_dimensions, Duration::from_secs(10)),
        ("dihedral inner dimensions", inner_dimensions, Duration::from_secs(60)),
        ("F3 D8 all inner", f3_d8, Duration::from_secs(5)),
        ("abelian catalogs", abelian, Duration::from_secs(60)),
        ("centers and centralizers", centers, Duration::from_secs(60)),
        ("property identities", properties, Duration::from_secs(120)),
        ("brute-force derivation count", brute_force, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
