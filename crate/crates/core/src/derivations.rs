//! Derivations of KG built from generator images.
//!
//! For `G = <S | T>` and a map `f: S -> KG`, the word extension `f*` is
//!
//! ```text
//! f*(s)    = f(s)
//! f*(s^-1) = -s^-1 f(s) s^-1
//! f*(w_1 ... w_k) = Σ_i (w_1 ... w_{i-1}) f*(w_i) (w_{i+1} ... w_k)
//! ```
//!
//! with the outer products evaluated in G. It satisfies
//! `f*(uv) = f*(u) v + u f*(v)` and is invariant under free reduction.
//! `f` extends to a derivation of KG iff `f*(t) = 0` for every relator `t`,
//! and then the extension is unique: `d(g) = f*(w)` for any word `w`
//! representing `g`, extended K-linearly.
//!
//! Because `f*(t)` is K-linear in the images, the derivation space is the
//! nullspace of one `|T||G| x |S||G|` matrix whose entries are `±1`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::groupring::{GroupAlgebra, GroupRingElement};
use crate::groups::{FreeWord, Letter};
use crate::linalg::MatrixGF;

/// The values `f(s)` for each generator `s`, in presentation order.
#[derive(Clone, PartialEq)]
pub struct GeneratorImageMap {
    algebra: GroupAlgebra,
    images: Vec<GroupRingElement>,
}

/// A relator whose `f*` value is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct RelatorResidual {
    pub relator: usize,
    pub word: String,
    pub residual: GroupRingElement,
}

/// Adds `c · (left · h · right)` for every term `c h` of `src` into `acc`.
fn accumulate_two_sided(
    algebra: &GroupAlgebra,
    acc: &mut [u16],
    left: usize,
    src: &[u16],
    right: usize,
    negate: bool,
) {
    let group = algebra.group();
    let field = algebra.field();
    for (h, &c) in src.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let target = group.mul(group.mul(left, h), right);
        let c = if negate { field.neg_raw(c) } else { c };
        acc[target] = field.add_raw(acc[target], c);
    }
}

impl GeneratorImageMap {
    pub fn new(algebra: &GroupAlgebra, images: Vec<GroupRingElement>) -> Result<Self> {
        let n_gens = algebra.group().presentation().generators().len();
        if images.len() != n_gens {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {n_gens} generators",
                images.len()
            )));
        }
        if images.iter().any(|e| !e.algebra().same_as(algebra)) {
            return Err(Error::ContextMismatch);
        }
        Ok(GeneratorImageMap { algebra: algebra.clone(), images })
    }

    pub fn zero(algebra: &GroupAlgebra) -> Self {
        let n = algebra.group().presentation().generators().len();
        GeneratorImageMap { algebra: algebra.clone(), images: vec![algebra.zero(); n] }
    }

    /// Parses one image string per generator, e.g. `[("x", "1 + x^3")]`.
    /// Generators left out map to zero.
    pub fn from_strings(algebra: &GroupAlgebra, images: &[(&str, &str)]) -> Result<Self> {
        let pres = algebra.group().presentation();
        let mut map = Self::zero(algebra);
        for (name, value) in images {
            let i = pres
                .generator_index(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            map.images[i] = algebra.parse(value)?;
        }
        Ok(map)
    }

    /// Inverse of [`GeneratorImageMap::to_vector`].
    pub fn from_vector(algebra: &GroupAlgebra, v: &[u16]) -> Result<Self> {
        let n = algebra.dim();
        let gens = algebra.group().presentation().generators().len();
        if v.len() != n * gens {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {gens} generators over {n} elements",
                v.len()
            )));
        }
        let images = v.chunks(n.max(1)).take(gens).map(|c| algebra.from_raw(c.to_vec())).collect();
        Ok(GeneratorImageMap { algebra: algebra.clone(), images })
    }

    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn image(&self, generator: usize) -> &GroupRingElement {
        &self.images[generator]
    }

    pub fn images(&self) -> &[GroupRingElement] {
        &self.images
    }

    /// Concatenated coefficients, generator-major.
    pub fn to_vector(&self) -> Vec<u16> {
        self.images.iter().flat_map(|e| e.raw().iter().copied()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(GroupRingElement::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.algebra.same_as(&other.algebra) {
            return Err(Error::ContextMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(GeneratorImageMap { algebra: self.algebra.clone(), images })
    }

    pub fn scale(&self, k: &FieldElement) -> Result<Self> {
        let images = self.images.iter().map(|a| a.scale(k)).collect::<Result<_>>()?;
        Ok(GeneratorImageMap { algebra: self.algebra.clone(), images })
    }

    /// `f*` of a single letter.
    pub fn fstar_letter(&self, letter: Letter) -> GroupRingElement {
        let image = &self.images[letter.generator];
        if !letter.inverted {
            return image.clone();
        }
        let group = self.algebra.group();
        let s_inv = group.inverse(group.generator(letter.generator));
        let mut acc = vec![0u16; self.algebra.dim()];
        accumulate_two_sided(&self.algebra, &mut acc, s_inv, image.raw(), s_inv, true);
        self.algebra.from_raw(acc)
    }

    /// `f*(w) = Σ_i φ(w_1..w_{i-1}) f*(w_i) φ(w_{i+1}..w_k)`.
    pub fn fstar_word(&self, w: &FreeWord) -> GroupRingElement {
        let group = self.algebra.group();
        let letters = w.letters();
        let k = letters.len();
        let mut suffix = vec![group.identity(); k + 1];
        for i in (0..k).rev() {
            suffix[i] = group.mul(group.eval_letter(letters[i]), suffix[i + 1]);
        }
        let mut acc = vec![0u16; self.algebra.dim()];
        let mut prefix = group.identity();
        for (i, &l) in letters.iter().enumerate() {
            let image = &self.images[l.generator];
            if l.inverted {
                // prefix · (-s^-1 f(s) s^-1) · suffix
                let s_inv = group.eval_letter(l);
                let left = group.mul(prefix, s_inv);
                let right = group.mul(s_inv, suffix[i + 1]);
                accumulate_two_sided(&self.algebra, &mut acc, left, image.raw(), right, true);
            } else {
                accumulate_two_sided(&self.algebra, &mut acc, prefix, image.raw(), suffix[i + 1], false);
            }
            prefix = group.mul(prefix, group.eval_letter(l));
        }
        self.algebra.from_raw(acc)
    }

    /// Relators with a nonzero `f*` value; empty iff `f` extends to a derivation.
    pub fn relator_residuals(&self) -> Vec<RelatorResidual> {
        let pres = self.algebra.group().presentation();
        pres.relators()
            .iter()
            .enumerate()
            .filter_map(|(i, t)| {
                let residual = self.fstar_word(t);
                (!residual.is_zero()).then(|| RelatorResidual {
                    relator: i,
                    word: pres.format_word(t),
                    residual,
                })
            })
            .collect()
    }

    pub fn extends_to_derivation(&self) -> bool {
        let pres = self.algebra.group().presentation();
        pres.relators().iter().all(|t| self.fstar_word(t).is_zero())
    }
}

impl std::fmt::Debug for GeneratorImageMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens = self.algebra.group().presentation().generators();
        let mut m = f.debug_map();
        for (name, img) in gens.iter().zip(&self.images) {
            m.entry(name, &img.to_string());
        }
        m.finish()
    }
}

/// A generator-image map together with its validation status.
///
/// `validated` is only ever set by [`Derivation::is_derivation`]; the
/// element images `d(g)` are computed on first use and cached.
#[derive(Clone)]
pub struct Derivation {
    map: GeneratorImageMap,
    validated: bool,
    element_images: OnceLock<Vec<Vec<u16>>>,
}

impl Derivation {
    /// Wraps a map without validating it.
    pub fn new(map: GeneratorImageMap) -> Self {
        Derivation { map, validated: false, element_images: OnceLock::new() }
    }

    /// Validates `map`, failing with the names of relators whose residual is nonzero.
    pub fn validated(map: GeneratorImageMap) -> Result<Self> {
        let mut d = Self::new(map);
        if d.is_derivation() {
            Ok(d)
        } else {
            let bad = d.map.relator_residuals().into_iter().map(|r| r.word).collect();
            Err(Error::NotADerivation(bad))
        }
    }

    pub fn zero(algebra: &GroupAlgebra) -> Self {
        Self::validated(GeneratorImageMap::zero(algebra)).expect("zero map is a derivation")
    }

    /// Checks `f*(t) = 0` for every relator and records the outcome.
    pub fn is_derivation(&mut self) -> bool {
        self.validated = self.map.extends_to_derivation();
        self.validated
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn residuals(&self) -> Vec<RelatorResidual> {
        self.map.relator_residuals()
    }

    pub fn map(&self) -> &GeneratorImageMap {
        &self.map
    }

    pub fn algebra(&self) -> &GroupAlgebra {
        &self.map.algebra
    }

    /// Value on the i-th generator.
    pub fn image(&self, generator: usize) -> &GroupRingElement {
        self.map.image(generator)
    }

    pub fn vector(&self) -> Vec<u16> {
        self.map.to_vector()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    fn element_table(&self) -> &[Vec<u16>] {
        self.element_images.get_or_init(|| {
            let group = self.map.algebra.group();
            (0..group.order())
                .map(|g| self.map.fstar_word(group.canonical_word(g)).into_raw())
                .collect()
        })
    }

    fn require_validated(&self) -> Result<()> {
        if self.validated {
            Ok(())
        } else {
            Err(Error::NotValidated)
        }
    }

    /// `d(g)` for a group element, via `f*` of its canonical word.
    pub fn derive_element(&self, g: usize) -> Result<GroupRingElement> {
        self.require_validated()?;
        Ok(self.map.algebra.from_raw(self.element_table()[g].clone()))
    }

    /// `d(α) = Σ a_g d(g)`.
    pub fn derive(&self, alpha: &GroupRingElement) -> Result<GroupRingElement> {
        self.require_validated()?;
        if !alpha.algebra().same_as(&self.map.algebra) {
            return Err(Error::ContextMismatch);
        }
        let field = self.map.algebra.field();
        let table = self.element_table();
        let mut acc = vec![0u16; self.map.algebra.dim()];
        for (g, &a) in alpha.raw().iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &v) in acc.iter_mut().zip(&table[g]) {
                if v != 0 {
                    *slot = field.add_raw(*slot, field.mul_raw(a, v));
                }
            }
        }
        Ok(self.map.algebra.from_raw(acc))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut d = Self::new(self.map.add(&other.map)?);
        d.is_derivation();
        Ok(d)
    }

    /// `k · d`, i.e. `a ↦ k d(a)`.
    pub fn scale(&self, k: &FieldElement) -> Result<Self> {
        let mut d = Self::new(self.map.scale(k)?);
        d.is_derivation();
        Ok(d)
    }
}

impl PartialEq for Derivation {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl std::fmt::Debug for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Derivation{:?}", self.map)
    }
}

impl std::fmt::Display for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens = self.algebra().group().presentation().generators();
        for (i, name) in gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name} -> {}", self.image(i))?;
        }
        Ok(())
    }
}

/// The relator constraint matrix: rows indexed by (relator, group element),
/// columns by (generator, group element). A map is a derivation iff its
/// vector lies in the kernel.
///
/// Each occurrence of a letter in a relator contributes the monomial map
/// `v ↦ ±L v R` with `L`, `R` group elements, so every column gets signed
/// unit entries only.
pub fn relator_constraint_matrix(algebra: &GroupAlgebra) -> MatrixGF {
    let group = algebra.group();
    let field = algebra.field();
    let pres = group.presentation();
    let n = group.order();
    let minus_one = field.neg_raw(1);
    let mut m = MatrixGF::zeros(field, pres.relators().len() * n, pres.generators().len() * n);
    for (t_idx, t) in pres.relators().iter().enumerate() {
        let letters = t.letters();
        let k = letters.len();
        let mut suffix = vec![group.identity(); k + 1];
        for i in (0..k).rev() {
            suffix[i] = group.mul(group.eval_letter(letters[i]), suffix[i + 1]);
        }
        let mut prefix = group.identity();
        for (i, &l) in letters.iter().enumerate() {
            let (left, right, sign) = if l.inverted {
                let s_inv = group.eval_letter(l);
                (group.mul(prefix, s_inv), group.mul(s_inv, suffix[i + 1]), minus_one)
            } else {
                (prefix, suffix[i + 1], 1)
            };
            for g in 0..n {
                let target = group.mul(group.mul(left, g), right);
                m.accumulate(t_idx * n + target, l.generator * n + g, sign);
            }
            prefix = group.mul(prefix, group.eval_letter(l));
        }
    }
    m
}

/// A basis of Der(KG) over K, one validated derivation per nullspace vector
/// of [`relator_constraint_matrix`].
pub fn derivation_space(algebra: &GroupAlgebra) -> Vec<Derivation> {
    let kernel = relator_constraint_matrix(algebra).nullspace();
    (0..kernel.rows())
        .map(|r| {
            let map = GeneratorImageMap::from_vector(algebra, kernel.row(r))
                .expect("kernel vectors have the unknowns' length");
            let mut d = Derivation::new(map);
            assert!(d.is_derivation(), "kernel vector fails the relator check");
            d
        })
        .collect()
}

/// The inner derivation `d_b(a) = [a, b] = ab - ba`.
pub fn inner_derivation(b: &GroupRingElement) -> Derivation {
    let algebra = b.algebra();
    let group = algebra.group();
    let images = (0..group.presentation().generators().len())
        .map(|i| {
            algebra
                .basis(group.generator(i))
                .lie_bracket(b)
                .expect("same algebra")
        })
        .collect();
    let mut d = Derivation::new(GeneratorImageMap { algebra: algebra.clone(), images });
    d.is_derivation();
    d
}

/// Matrix of `b ↦ ([s, b])_{s ∈ S}`: rows (generator, element), columns element.
pub fn inner_map_matrix(algebra: &GroupAlgebra) -> MatrixGF {
    let group = algebra.group();
    let field = algebra.field();
    let n = group.order();
    let gens = group.presentation().generators().len();
    let minus_one = field.neg_raw(1);
    let mut m = MatrixGF::zeros(field, gens * n, n);
    for s_idx in 0..gens {
        let s = group.generator(s_idx);
        for h in 0..n {
            m.accumulate(s_idx * n + group.mul(s, h), h, 1);
            m.accumulate(s_idx * n + group.mul(h, s), h, minus_one);
        }
    }
    m
}

/// Some `b` with `d = d_b`, if one exists. Agreement on generators suffices
/// since a derivation is determined by its generator images.
pub fn inner_witness(d: &Derivation) -> Result<Option<GroupRingElement>> {
    d.require_validated()?;
    let algebra = d.algebra();
    let m = inner_map_matrix(algebra);
    Ok(m.solve_raw(&d.vector())?.map(|b| algebra.from_raw(b)))
}

/// `a_0 + a_1 x̄` in `A_d = KG[x; d] / (x^2 - 1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct SkewElement {
    pub a0: GroupRingElement,
    pub a1: GroupRingElement,
}

impl SkewElement {
    pub fn new(a0: GroupRingElement, a1: GroupRingElement) -> Result<Self> {
        if !a0.algebra().same_as(a1.algebra()) {
            return Err(Error::ContextMismatch);
        }
        Ok(SkewElement { a0, a1 })
    }

    /// `a` as `a + 0 x̄`.
    pub fn base(a: &GroupRingElement) -> Self {
        SkewElement { a0: a.clone(), a1: a.algebra().zero() }
    }

    pub fn x_bar(algebra: &GroupAlgebra) -> Self {
        SkewElement { a0: algebra.zero(), a1: algebra.one() }
    }

    pub fn one(algebra: &GroupAlgebra) -> Self {
        SkewElement { a0: algebra.one(), a1: algebra.zero() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(SkewElement { a0: self.a0.add(&other.a0)?, a1: self.a1.add(&other.a1)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(SkewElement { a0: self.a0.sub(&other.a0)?, a1: self.a1.sub(&other.a1)? })
    }

    /// Product using `x̄ b = b x̄ + d(b)` and `x̄^2 = 1`:
    ///
    /// ```text
    /// (a0 + a1 x̄)(b0 + b1 x̄) = (a0 b0 + a1 d(b0) + a1 b1) + (a0 b1 + a1 b0 + a1 d(b1)) x̄
    /// ```
    ///
    /// The quotient is an associative algebra only when `2d = 0` and
    /// `d∘d = 0`; see [`skew_quotient_is_associative`].
    pub fn mul(&self, other: &Self, d: &Derivation) -> Result<Self> {
        let alg = d.algebra();
        for e in [&self.a0, &self.a1, &other.a0, &other.a1] {
            if !e.algebra().same_as(alg) {
                return Err(Error::ContextMismatch);
            }
        }
        let (a0, a1, b0, b1) = (&self.a0, &self.a1, &other.a0, &other.a1);
        let c0 = a0.mul(b0)?.add(&a1.mul(&d.derive(b0)?)?)?.add(&a1.mul(b1)?)?;
        let c1 = a0.mul(b1)?.add(&a1.mul(b0)?)?.add(&a1.mul(&d.derive(b1)?)?)?;
        Ok(SkewElement { a0: c0, a1: c1 })
    }

    /// Commutator with `x̄`: `x̄ a - a x̄`.
    pub fn inner_by_x_bar(&self, d: &Derivation) -> Result<Self> {
        let x = SkewElement::x_bar(d.algebra());
        x.mul(self, d)?.sub(&self.mul(&x, d)?)
    }
}

/// `(x^2 - 1)` is a two-sided ideal of `KG[x; d]` iff `2 d(a) = 0` and
/// `d(d(a)) = 0` for all `a`, since `(x^2 - 1) a = a (x^2 - 1) + 2 d(a) x + d^2(a)`.
/// Checked on the group basis.
pub fn skew_quotient_is_associative(d: &Derivation) -> Result<bool> {
    let alg = d.algebra();
    for g in 0..alg.dim() {
        let dg = d.derive_element(g)?;
        let two = alg.field().from_int(2);
        if !dg.scale(&two)?.is_zero() || !d.derive(&dg)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
