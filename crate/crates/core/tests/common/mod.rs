#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use derring::derivations::derivation_space;
use derring::{Derivation, FieldSpec, FiniteGroup, GeneratorImageMap, GroupAlgebra, GroupRingElement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn field(literal: &str) -> FieldSpec {
    literal.parse().unwrap()
}

pub fn algebra(descriptor: &str, field_literal: &str) -> GroupAlgebra {
    let group = derring::derfile::parse_group(descriptor).unwrap();
    GroupAlgebra::new(group, field(field_literal))
}

/// An algebra together with a basis of its derivation space.
pub struct Setting {
    pub name: &'static str,
    pub algebra: GroupAlgebra,
    pub basis: Vec<Derivation>,
}

/// Group/field combinations with a nonzero derivation space.
pub fn settings() -> &'static [Setting] {
    static CELL: OnceLock<Vec<Setting>> = OnceLock::new();
    CELL.get_or_init(|| {
        let q8 = std::fs::read_to_string(data_dir().join("q8.cayley")).unwrap();
        let q8 = FiniteGroup::from_cayley_text(&q8).unwrap();
        let mut out: Vec<(&'static str, GroupAlgebra)> = vec![
            ("F2 D8", algebra("D:8", "GF(2)")),
            ("F2 D6", algebra("D:6", "GF(2)")),
            ("F3 D6", algebra("D:6", "GF(3)")),
            ("F4 D8", algebra("D:8", "GF(4)")),
            ("F2 C2xC4", algebra("A:2,4", "GF(2)")),
            ("F3 C9", algebra("C:9", "GF(3)")),
            ("F3 D8", algebra("D:8", "GF(3)")),
        ];
        out.push(("F2 Q8", GroupAlgebra::new(q8, field("GF(2)"))));
        out.into_iter()
            .map(|(name, algebra)| {
                let basis = derivation_space(&algebra);
                Setting { name, algebra, basis }
            })
            .collect()
    })
}

pub fn random_element(alg: &GroupAlgebra, rng: &mut ChaCha8Rng) -> GroupRingElement {
    let q = alg.field().order() as u16;
    alg.from_raw((0..alg.dim()).map(|_| rng.gen_range(0..q)).collect())
}

/// A random K-combination of the basis.
pub fn random_derivation(s: &Setting, rng: &mut ChaCha8Rng) -> Derivation {
    let mut acc = GeneratorImageMap::zero(&s.algebra);
    let f = s.algebra.field();
    for d in &s.basis {
        let k = f.raw(rng.gen_range(0..f.order() as u16));
        acc = acc.add(&d.map().scale(&k).unwrap()).unwrap();
    }
    Derivation::validated(acc).unwrap()
}

/// A map `S -> KG` with random images, usually not a derivation.
pub fn random_map(alg: &GroupAlgebra, rng: &mut ChaCha8Rng) -> GeneratorImageMap {
    let gens = alg.group().presentation().generators().len();
    let images = (0..gens).map(|_| random_element(alg, rng)).collect();
    GeneratorImageMap::new(alg, images).unwrap()
}
