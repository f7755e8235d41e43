//! Closed-form bases: centers, centralizers, and derivation bases for
//! abelian and dihedral group algebras.
//!
//! The dihedral lists follow the classification over fields of
//! characteristic 2. Each catalog can be compared against the generic
//! computations in [`crate::derivations`] via [`BasisCatalog::matrix`].

use std::fmt;

use crate::derivations::{inner_derivation, Derivation, GeneratorImageMap};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::groupring::{GroupAlgebra, GroupRingElement};
use crate::groups::{Family, FiniteGroup};
use crate::linalg::MatrixGF;

/// Anything with a coefficient vector over the algebra's field.
pub trait CatalogItem {
    fn algebra(&self) -> &GroupAlgebra;
    fn coordinates(&self) -> Vec<u16>;
}

impl CatalogItem for GroupRingElement {
    fn algebra(&self) -> &GroupAlgebra {
        GroupRingElement::algebra(self)
    }
    fn coordinates(&self) -> Vec<u16> {
        self.raw().to_vec()
    }
}

impl CatalogItem for Derivation {
    fn algebra(&self) -> &GroupAlgebra {
        Derivation::algebra(self)
    }
    fn coordinates(&self) -> Vec<u16> {
        self.vector()
    }
}

/// A labeled list of basis elements with the dimension its formula predicts.
#[derive(Clone, Debug)]
pub struct BasisCatalog<T> {
    pub label: String,
    /// Human-readable dimension formula, e.g. `"2n+4 = 12"`.
    pub formula: String,
    pub elements: Vec<T>,
    pub claimed_dimension: usize,
}

impl<T: CatalogItem> BasisCatalog<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// One row per element. `None` for an empty catalog.
    pub fn matrix(&self) -> Option<MatrixGF> {
        let first = self.elements.first()?;
        let rows: Vec<Vec<u16>> = self.elements.iter().map(CatalogItem::coordinates).collect();
        let width = rows[0].len();
        Some(
            MatrixGF::from_raw_rows(first.algebra().field(), width, &rows)
                .expect("catalog rows share one algebra"),
        )
    }

    pub fn rank(&self) -> usize {
        self.matrix().map_or(0, |m| m.rank())
    }

    /// Elements independent and as many as claimed.
    pub fn is_consistent(&self) -> bool {
        self.len() == self.claimed_dimension && self.rank() == self.len()
    }

    /// `label: dim=K (formula: ...)`
    pub fn summary(&self) -> String {
        format!("{}: dim={} (formula: {})", self.label, self.len(), self.formula)
    }
}

impl<T: fmt::Display> fmt::Display for BasisCatalog<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            writeln!(f, "[{}] {}", i + 1, e)?;
        }
        write!(f, "{}: dim={} (formula: {})", self.label, self.elements.len(), self.formula)
    }
}

fn sum_of(algebra: &GroupAlgebra, elements: &[usize]) -> GroupRingElement {
    let mut coeffs = vec![0u16; algebra.dim()];
    let field = algebra.field();
    for &g in elements {
        coeffs[g] = field.add_raw(coeffs[g], 1);
    }
    algebra.from_raw(coeffs)
}

/// Conjugacy class sums, in the group's class order.
pub fn center_basis(algebra: &GroupAlgebra) -> BasisCatalog<GroupRingElement> {
    let classes = algebra.group().conjugacy_classes();
    let elements: Vec<_> = classes.iter().map(|c| sum_of(algebra, c)).collect();
    BasisCatalog {
        label: "center".into(),
        formula: format!("number of conjugacy classes = {}", elements.len()),
        claimed_dimension: elements.len(),
        elements,
    }
}

/// Sums over the orbits of `g ↦ h^-1 g h`, ordered by smallest member.
/// These span the centralizer of `h` in KG.
pub fn centralizer_basis(algebra: &GroupAlgebra, h: usize) -> BasisCatalog<GroupRingElement> {
    let group = algebra.group();
    let mut seen = vec![false; group.order()];
    let mut elements = Vec::new();
    for g in 0..group.order() {
        if seen[g] {
            continue;
        }
        let mut orbit = vec![g];
        seen[g] = true;
        let mut cur = group.conjugate(g, h);
        while cur != g {
            seen[cur] = true;
            orbit.push(cur);
            cur = group.conjugate(cur, h);
        }
        elements.push(sum_of(algebra, &orbit));
    }
    BasisCatalog {
        label: format!("centralizer of {}", group.name(h)),
        formula: format!("number of orbits = {}", elements.len()),
        claimed_dimension: elements.len(),
        elements,
    }
}

/// Index helpers for `D_{2n}` with elements `x^i` at `i` and `x^i y` at `n + i`.
struct Dihedral {
    algebra: GroupAlgebra,
    n: usize,
}

impl Dihedral {
    fn new(n: usize, field: &FieldSpec) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParameters(format!("dihedral catalogs need n >= 3, got {n}")));
        }
        if field.characteristic() != 2 {
            return Err(Error::BadParameters(format!(
                "dihedral catalogs need characteristic 2, got {}",
                field.characteristic()
            )));
        }
        let algebra = GroupAlgebra::new(FiniteGroup::dihedral(n)?, field.clone());
        Ok(Dihedral { algebra, n })
    }

    fn rot(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    fn refl(&self, i: i64) -> usize {
        self.n + self.rot(i)
    }

    fn sum(&self, elements: &[usize]) -> GroupRingElement {
        sum_of(&self.algebra, elements)
    }

    /// `x^i + x^-i`
    fn pair(&self, i: i64) -> GroupRingElement {
        self.sum(&[self.rot(i), self.rot(-i)])
    }

    /// `(x^i + x^-i) y`
    fn pair_y(&self, i: i64) -> GroupRingElement {
        self.sum(&[self.refl(i), self.refl(-i)])
    }

    /// `x (x^i + x^-i) y`
    fn x_pair_y(&self, i: i64) -> GroupRingElement {
        self.sum(&[self.refl(1 + i), self.refl(1 - i)])
    }

    fn derivation(&self, fx: GroupRingElement, fy: GroupRingElement) -> Derivation {
        let map = GeneratorImageMap::new(&self.algebra, vec![fx, fy]).expect("two generators");
        Derivation::validated(map).expect("catalog entry is a derivation")
    }

    fn zero(&self) -> GroupRingElement {
        self.algebra.zero()
    }
}

/// The explicit center list of `K D_{2n}`, characteristic 2.
pub fn dihedral_center_basis(n: usize, field: &FieldSpec) -> Result<BasisCatalog<GroupRingElement>> {
    let d = Dihedral::new(n, field)?;
    let ni = n as i64;
    let mut elements = vec![d.algebra.one()];
    let (formula, claimed) = if n.is_multiple_of(2) {
        elements.push(d.sum(&[d.rot(ni / 2)]));
        elements.extend((1..ni / 2).map(|i| d.pair(i)));
        let even: Vec<usize> = (0..ni).step_by(2).map(|i| d.refl(i)).collect();
        let odd: Vec<usize> = (1..ni).step_by(2).map(|i| d.refl(i)).collect();
        elements.push(d.sum(&even));
        elements.push(d.sum(&odd));
        (format!("n/2+3 = {}", n / 2 + 3), n / 2 + 3)
    } else {
        elements.extend((1..=(ni - 1) / 2).map(|i| d.pair(i)));
        let all: Vec<usize> = (0..ni).map(|i| d.refl(i)).collect();
        elements.push(d.sum(&all));
        (format!("(n+3)/2 = {}", (n + 3) / 2), (n + 3) / 2)
    };
    Ok(BasisCatalog {
        label: format!("center of D:{}", 2 * n),
        formula,
        elements,
        claimed_dimension: claimed,
    })
}

/// Which reflection's centralizer to list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reflection {
    Y,
    XY,
}

fn centralizer_list(d: &Dihedral, which: Reflection) -> Vec<GroupRingElement> {
    let ni = d.n as i64;
    let shift = match which {
        Reflection::Y => 0,
        Reflection::XY => 1,
    };
    let refl_pair = |i| match which {
        Reflection::Y => d.pair_y(i),
        Reflection::XY => d.x_pair_y(i),
    };
    let mut out = vec![d.algebra.one()];
    if d.n.is_multiple_of(2) {
        out.push(d.sum(&[d.rot(ni / 2)]));
        out.push(d.sum(&[d.refl(shift)]));
        out.push(d.sum(&[d.refl(ni / 2 + shift)]));
        for i in 1..ni / 2 {
            out.push(d.pair(i));
            out.push(refl_pair(i));
        }
    } else {
        out.push(d.sum(&[d.refl(shift)]));
        for i in 1..=(ni - 1) / 2 {
            out.push(d.pair(i));
            out.push(refl_pair(i));
        }
    }
    out
}

/// The explicit centralizer list for `y` or `xy` in `K D_{2n}`, characteristic 2.
pub fn dihedral_centralizer_basis(
    n: usize,
    field: &FieldSpec,
    which: Reflection,
) -> Result<BasisCatalog<GroupRingElement>> {
    let d = Dihedral::new(n, field)?;
    let elements = centralizer_list(&d, which);
    let (formula, claimed) =
        if n.is_multiple_of(2) { (format!("n+2 = {}", n + 2), n + 2) } else { (format!("n+1 = {}", n + 1), n + 1) };
    let name = match which {
        Reflection::Y => "y",
        Reflection::XY => "x*y",
    };
    Ok(BasisCatalog {
        label: format!("centralizer of {name} in D:{}", 2 * n),
        formula,
        elements,
        claimed_dimension: claimed,
    })
}

/// Derivation basis of KG for abelian `G = C_{n_1} x ... x C_{n_k}`.
///
/// For each factor with `p | n_i`, write `n_i = p^a m` with `p ∤ m`. Then
/// `u = x_i^m` generates the Sylow p-part of that factor and `∂_i` is the
/// derivation with `∂_i(u) = 1` vanishing on the p'-part and on the other
/// factors. From `∂_i(x_i^m) = m x_i^(m-1) ∂_i(x_i)` this gives
/// `∂_i(x_i) = m^-1 x_i^(1-m)`. The catalog lists `g ∂_i` for every `g`.
pub fn abelian_der_basis(algebra: &GroupAlgebra) -> Result<BasisCatalog<Derivation>> {
    let group = algebra.group();
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let orders = match group.family() {
        Family::Cyclic(n) => vec![*n],
        Family::Abelian(orders) => orders.clone(),
        other => {
            return Err(Error::UnsupportedGroup(format!(
                "abelian catalog needs a cyclic or product descriptor, got {other}"
            )))
        }
    };
    let field = algebra.field();
    let p = field.characteristic() as usize;
    let mut partials = Vec::new();
    for (i, &ni) in orders.iter().enumerate() {
        if ni % p != 0 {
            continue;
        }
        let mut m = ni;
        while m % p == 0 {
            m /= p;
        }
        let m_inv = field.from_int((m % p) as i64).inv()?;
        let xi = group.generator(i);
        let target = group.pow(xi, 1 - m as i64);
        let mut images = vec![algebra.zero(); orders.len()];
        images[i] = algebra.basis(target).scale(&m_inv)?;
        partials.push(images);
    }
    let mut elements = Vec::new();
    for g in 0..group.order() {
        for images in &partials {
            let shifted = images.iter().map(|e| e.left_mul_group(g)).collect();
            let map = GeneratorImageMap::new(algebra, shifted)?;
            elements.push(Derivation::validated(map)?);
        }
    }
    let claimed = group.order() * partials.len();
    Ok(BasisCatalog {
        label: format!("derivations of {}", group.family()),
        formula: format!("|G|*(Sylow-{p} rank) = {}*{} = {claimed}", group.order(), partials.len()),
        elements,
        claimed_dimension: claimed,
    })
}

/// Derivation basis of `K D_{2n}`, characteristic 2, as pairs `(f(x), f(y))`.
///
/// Even n: `(λy, 0)` for `λ` in the centralizer list of `xy`, then
/// `(xωy, ω)` for `ω` in the centralizer list of `y`.
///
/// Odd n: `((1+x)y, 1)`, then `((x^i+x^-i)y, 0)`, `(x(x^i+x^-i)y, x^i+x^-i)`,
/// `(0, y)` and `(0, (x^i+x^-i)y)` for `i = 1..(n-1)/2`.
pub fn dihedral_der_basis(n: usize, field: &FieldSpec) -> Result<BasisCatalog<Derivation>> {
    let d = Dihedral::new(n, field)?;
    let y = d.algebra.basis(d.refl(0));
    let x = d.algebra.basis(d.rot(1));
    let mut elements = Vec::new();
    let (formula, claimed) = if n.is_multiple_of(2) {
        for lambda in centralizer_list(&d, Reflection::XY) {
            elements.push(d.derivation(lambda.mul(&y)?, d.zero()));
        }
        for omega in centralizer_list(&d, Reflection::Y) {
            elements.push(d.derivation(x.mul(&omega)?.mul(&y)?, omega));
        }
        (format!("2n+4 = {}", 2 * n + 4), 2 * n + 4)
    } else {
        let half = (n as i64 - 1) / 2;
        let one_plus_x = d.algebra.one().add(&x)?;
        elements.push(d.derivation(one_plus_x.mul(&y)?, d.algebra.one()));
        elements.extend((1..=half).map(|i| d.derivation(d.pair_y(i), d.zero())));
        elements.extend((1..=half).map(|i| d.derivation(d.x_pair_y(i), d.pair(i))));
        elements.push(d.derivation(d.zero(), y.clone()));
        elements.extend((1..=half).map(|i| d.derivation(d.zero(), d.pair_y(i))));
        (format!("(3n+1)/2 = {}", (3 * n).div_ceil(2)), (3 * n).div_ceil(2))
    };
    Ok(BasisCatalog {
        label: format!("derivations of D:{}", 2 * n),
        formula,
        elements,
        claimed_dimension: claimed,
    })
}

/// Inner derivations `d_b` for `b` in `{x^1..x^c} ∪ {x^i y : 0 <= i < 2c}`,
/// `c = floor((n-1)/2)`, characteristic 2.
pub fn dihedral_inner_basis(n: usize, field: &FieldSpec) -> Result<BasisCatalog<Derivation>> {
    let d = Dihedral::new(n, field)?;
    let c = (n as i64 - 1) / 2;
    let bs: Vec<usize> =
        (1..=c).map(|i| d.rot(i)).chain((0..2 * c).map(|i| d.refl(i))).collect();
    let elements = bs.iter().map(|&b| inner_derivation(&d.algebra.basis(b))).collect();
    let claimed = 3 * c as usize;
    Ok(BasisCatalog {
        label: format!("inner derivations of D:{}", 2 * n),
        formula: format!("3*floor((n-1)/2) = {claimed}"),
        elements,
        claimed_dimension: claimed,
    })
}
