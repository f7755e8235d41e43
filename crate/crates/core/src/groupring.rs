//! The group algebra KG: K-linear combinations of group elements with the
//! convolution product `(Σ a_g g)(Σ b_h h) = Σ a_g b_h gh`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::groups::FiniteGroup;
use crate::text::{self, TermFactor};

/// Shared context of a group algebra: the group and the coefficient field.
#[derive(Clone)]
pub struct GroupAlgebra {
    inner: Arc<AlgebraInner>,
}

struct AlgebraInner {
    group: FiniteGroup,
    field: FieldSpec,
}

impl GroupAlgebra {
    pub fn new(group: FiniteGroup, field: FieldSpec) -> Self {
        GroupAlgebra { inner: Arc::new(AlgebraInner { group, field }) }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.inner.group
    }

    pub fn field(&self) -> &FieldSpec {
        &self.inner.field
    }

    /// |G|, the K-dimension of KG.
    pub fn dim(&self) -> usize {
        self.inner.group.order()
    }

    pub fn zero(&self) -> GroupRingElement {
        GroupRingElement { algebra: self.clone(), coeffs: vec![0; self.dim()] }
    }

    pub fn one(&self) -> GroupRingElement {
        self.basis(self.group().identity())
    }

    /// The group element `g` viewed in KG.
    pub fn basis(&self, g: usize) -> GroupRingElement {
        let mut e = self.zero();
        e.coeffs[g] = 1;
        e
    }

    /// Scalar `k` times the identity.
    pub fn scalar(&self, k: &FieldElement) -> Result<GroupRingElement> {
        if k.field() != self.field() {
            return Err(Error::SpecMismatch);
        }
        let mut e = self.zero();
        e.coeffs[self.group().identity()] = k.value();
        Ok(e)
    }

    pub fn from_coeffs(&self, coeffs: &[FieldElement]) -> Result<GroupRingElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                self.dim()
            )));
        }
        if coeffs.iter().any(|c| c.field() != self.field()) {
            return Err(Error::SpecMismatch);
        }
        Ok(self.from_raw(coeffs.iter().map(FieldElement::value).collect()))
    }

    /// Wraps encoded coefficients; panics on a length or range mismatch.
    pub fn from_raw(&self, coeffs: Vec<u16>) -> GroupRingElement {
        assert_eq!(coeffs.len(), self.dim(), "coefficient vector length");
        let q = self.field().order();
        assert!(coeffs.iter().all(|&c| (c as usize) < q), "coefficient out of range");
        GroupRingElement { algebra: self.clone(), coeffs }
    }

    /// Parses a sum such as `1 + x + x^3*y`, `2*x - y`, or `[z+1]*x^2`.
    /// Each term is a product of integers, bracketed field elements and words
    /// in the generators; words are evaluated in the group.
    pub fn parse(&self, s: &str) -> Result<GroupRingElement> {
        let field = self.field();
        let group = self.group();
        let mut out = self.zero();
        for term in text::parse_sum(s)? {
            let mut coeff = field.one();
            let mut element = group.identity();
            for factor in &term.factors {
                match factor {
                    TermFactor::Int(n) => coeff = coeff.mul(&field.from_int(*n))?,
                    TermFactor::Field(t) => coeff = coeff.mul(&field.parse_element(t)?)?,
                    TermFactor::Word(w) => {
                        let word = group.presentation().resolve(w)?;
                        element = group.mul(element, group.eval_word(&word));
                    }
                }
            }
            if term.negative {
                coeff = coeff.neg();
            }
            out.coeffs[element] = field.add_raw(out.coeffs[element], coeff.value());
        }
        Ok(out)
    }

    /// Two contexts agree when they share the same group table and field.
    pub fn same_as(&self, other: &GroupAlgebra) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field && self.inner.group == other.inner.group)
    }
}

impl PartialEq for GroupAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl fmt::Debug for GroupAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.group().family())
    }
}

/// `Σ a_g g` stored densely in the group's canonical element order.
#[derive(Clone)]
pub struct GroupRingElement {
    algebra: GroupAlgebra,
    coeffs: Vec<u16>,
}

impl GroupRingElement {
    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    /// Coefficient `a_g`.
    pub fn coeff(&self, g: usize) -> FieldElement {
        self.algebra.field().raw(self.coeffs[g])
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        (0..self.coeffs.len()).map(|g| self.coeff(g)).collect()
    }

    /// Encoded coefficients, see [`FieldElement::value`].
    pub fn raw(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn into_raw(self) -> Vec<u16> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| self.coeffs[g] != 0).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.algebra.same_as(&other.algebra) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn field(&self) -> &FieldSpec {
        self.algebra.field()
    }

    fn with(&self, coeffs: Vec<u16>) -> Self {
        GroupRingElement { algebra: self.algebra.clone(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        Ok(self.with(self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add_raw(a, b)).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        Ok(self.with(self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub_raw(a, b)).collect()))
    }

    pub fn neg(&self) -> Self {
        let f = self.field();
        self.with(self.coeffs.iter().map(|&a| f.neg_raw(a)).collect())
    }

    pub fn scale(&self, k: &FieldElement) -> Result<Self> {
        if k.field() != self.field() {
            return Err(Error::SpecMismatch);
        }
        let f = self.field();
        Ok(self.with(self.coeffs.iter().map(|&a| f.mul_raw(k.value(), a)).collect()))
    }

    /// Convolution product through the Cayley table.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        let group = self.algebra.group();
        let mut out = vec![0u16; self.coeffs.len()];
        let rhs: Vec<(usize, u16)> =
            other.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(h, &c)| (h, c)).collect();
        for (g, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(h, b) in &rhs {
                let gh = group.mul(g, h);
                out[gh] = f.add_raw(out[gh], f.mul_raw(a, b));
            }
        }
        Ok(self.with(out))
    }

    /// `g · self` for a group element `g`.
    pub fn left_mul_group(&self, g: usize) -> Self {
        let group = self.algebra.group();
        let mut out = vec![0u16; self.coeffs.len()];
        for (h, &c) in self.coeffs.iter().enumerate() {
            out[group.mul(g, h)] = c;
        }
        self.with(out)
    }

    /// `self · g` for a group element `g`.
    pub fn right_mul_group(&self, g: usize) -> Self {
        let group = self.algebra.group();
        let mut out = vec![0u16; self.coeffs.len()];
        for (h, &c) in self.coeffs.iter().enumerate() {
            out[group.mul(h, g)] = c;
        }
        self.with(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(self.algebra.one(), |acc, _| &acc * self)
    }

    /// Σ a_g, the augmentation map KG → K.
    pub fn augmentation(&self) -> FieldElement {
        let f = self.field();
        f.raw(self.coeffs.iter().fold(0, |acc, &c| f.add_raw(acc, c)))
    }

    /// `[self, other] = self·other − other·self`.
    pub fn lie_bracket(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Whether the part of `self` supported on `subgroup` has augmentation
    /// zero, i.e. lies in Δ(H) ⊂ KH.
    pub fn in_augmentation_ideal_of_subgroup(&self, subgroup: &[usize]) -> Result<bool> {
        if !self.algebra.group().is_subgroup(subgroup) {
            return Err(Error::NotASubgroup(subgroup.to_vec()));
        }
        let f = self.field();
        let sum = subgroup.iter().fold(0, |acc, &h| f.add_raw(acc, self.coeffs[h]));
        Ok(sum == 0)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.lie_bracket(other)?.is_zero())
    }
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.algebra.same_as(&other.algebra)
    }
}

impl Eq for GroupRingElement {}

/// Sparse sum in canonical order, e.g. `1 + x + 2*x^3*y`; extension-field
/// coefficients are bracketed: `[z+1]*x`.
impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        let group = self.algebra.group();
        let mut first = true;
        for (g, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if field.degree() == 1 {
                field.format_raw(c)
            } else {
                format!("[{}]", field.format_raw(c))
            };
            if g == group.identity() {
                f.write_str(&coeff)?;
            } else if c == 1 {
                f.write_str(group.name(g))?;
            } else {
                write!(f, "{coeff}*{}", group.name(g))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Operator forms panic on a context mismatch; use the named methods to get a `Result`.

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::add(self, rhs).expect("group algebra mismatch")
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::sub(self, rhs).expect("group algebra mismatch")
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::mul(self, rhs).expect("group algebra mismatch")
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(group: FiniteGroup, p: u32) -> GroupAlgebra {
        GroupAlgebra::new(group, FieldSpec::prime(p).unwrap())
    }

    #[test]
    fn additive_examples() {
        let a = algebra(FiniteGroup::cyclic(4).unwrap(), 2);
        let s = &a.parse("1 + x").unwrap() + &a.parse("x + x^2").unwrap();
        assert_eq!(s, a.parse("1 + x^2").unwrap());
        let alpha = a.parse("1 + x^3").unwrap();
        assert!(alpha.scale(&a.field().zero()).unwrap().is_zero());

        let b = algebra(FiniteGroup::cyclic(2).unwrap(), 3);
        let two = b.field().from_int(2);
        assert_eq!(b.parse("1 + x").unwrap().scale(&two).unwrap(), b.parse("2 + 2*x").unwrap());
    }

    #[test]
    fn multiplicative_examples() {
        let a = algebra(FiniteGroup::cyclic(2).unwrap(), 2);
        let u = a.parse("1 + x").unwrap();
        assert!((&u * &u).is_zero());

        let d6 = algebra(FiniteGroup::dihedral(3).unwrap(), 2);
        let y = d6.parse("y").unwrap();
        let x = d6.parse("x").unwrap();
        assert_eq!(&y * &x, d6.parse("x^2*y").unwrap());

        let d8 = algebra(FiniteGroup::dihedral(4).unwrap(), 2);
        assert_eq!(&d8.parse("x^2").unwrap() * &d8.parse("x*y").unwrap(), d8.parse("x^3*y").unwrap());
    }

    #[test]
    fn augmentation_examples() {
        let c24 = algebra(FiniteGroup::cyclic(24).unwrap(), 2);
        assert!(c24.parse("1 + x + x^3").unwrap().augmentation().is_one());
        let golay = c24.parse("1+x+x^3+x^4+x^5+x^7+x^9+x^12").unwrap();
        assert!(golay.augmentation().is_zero());
        assert!(c24.zero().augmentation().is_zero());
    }

    #[test]
    fn lie_bracket_examples() {
        let c5 = algebra(FiniteGroup::cyclic(5).unwrap(), 2);
        let (x, x2) = (c5.parse("x").unwrap(), c5.parse("x^2").unwrap());
        assert!(x.lie_bracket(&x2).unwrap().is_zero());
        assert!(x.lie_bracket(&c5.one()).unwrap().is_zero());

        let d6 = algebra(FiniteGroup::dihedral(3).unwrap(), 2);
        let b = d6.parse("y").unwrap().lie_bracket(&d6.parse("x").unwrap()).unwrap();
        assert_eq!(b, d6.parse("x*y + x^2*y").unwrap());
    }

    #[test]
    fn augmentation_ideal_membership() {
        let d6 = algebra(FiniteGroup::dihedral(3).unwrap(), 2);
        let x_sub = d6.group().subgroup_generated(&[1]);
        assert!(d6.parse("1 + x").unwrap().in_augmentation_ideal_of_subgroup(&x_sub).unwrap());
        assert!(!d6.one().in_augmentation_ideal_of_subgroup(&x_sub).unwrap());
        assert!(matches!(
            d6.one().in_augmentation_ideal_of_subgroup(&[0, 1]),
            Err(Error::NotASubgroup(_))
        ));
        let d10 = algebra(FiniteGroup::dihedral(5).unwrap(), 2);
        let x_sub = d10.group().subgroup_generated(&[1]);
        assert!(d10.parse("x + x^2").unwrap().in_augmentation_ideal_of_subgroup(&x_sub).unwrap());
    }

    #[test]
    fn context_mismatch() {
        let a = algebra(FiniteGroup::cyclic(4).unwrap(), 2);
        let b = algebra(FiniteGroup::cyclic(4).unwrap(), 3);
        let c = algebra(FiniteGroup::cyclic(5).unwrap(), 2);
        assert_eq!(a.one().add(&b.one()).unwrap_err(), Error::ContextMismatch);
        assert_eq!(a.one().mul(&c.one()).unwrap_err(), Error::ContextMismatch);
        // Same group and field built twice is the same context.
        let a2 = algebra(FiniteGroup::cyclic(4).unwrap(), 2);
        assert!(a.one().add(&a2.one()).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let d8 = algebra(FiniteGroup::dihedral(4).unwrap(), 3);
        let e = d8.parse("2 + x - x^3*y + y*x").unwrap();
        // y*x = x^3*y cancels the middle term
        assert_eq!(e.to_string(), "2 + x");
        assert_eq!(d8.parse(&e.to_string()).unwrap(), e);
        assert_eq!(d8.zero().to_string(), "0");

        let gf4 = FieldSpec::new(2, 2, None).unwrap();
        let a = GroupAlgebra::new(FiniteGroup::dihedral(3).unwrap(), gf4);
        let e = a.parse("[z+1]*x + [z] + y").unwrap();
        assert_eq!(e.to_string(), "[z] + [z+1]*x + y");
        assert_eq!(a.parse(&e.to_string()).unwrap(), e);
        assert!(a.parse("w").is_err());
    }
}
