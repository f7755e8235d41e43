//! Exact arithmetic in small finite fields GF(p^m).
//!
//! Elements use the polynomial basis `1, z, ..., z^(m-1)` over GF(p) and are
//! encoded as integers `c_0 + c_1 p + ... + c_(m-1) p^(m-1)`. Every field in
//! scope has at most [`MAX_ORDER`] elements, so addition, multiplication,
//! negation and inversion are precomputed into lookup tables when the
//! [`FieldSpec`] is built.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_ORDER: usize = 512;

/// A finite field GF(p^m) together with its defining modulus.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Tables>,
}

struct Tables {
    p: u32,
    m: u32,
    /// Monic modulus, low-to-high, `m + 1` coefficients.
    modulus: Vec<u32>,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients encode `index` in base p.
fn monic_from_index(mut index: usize, deg: u32, p: u32) -> Vec<u32> {
    let mut poly = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        poly.push((index % p as usize) as u32);
        index /= p as usize;
    }
    poly.push(1);
    poly
}

/// Irreducibility by trial division against every monic factor of degree <= m/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() as u32 - 1;
    for d in 1..=m / 2 {
        let count = (p as usize).pow(d);
        for idx in 0..count {
            let f = monic_from_index(idx, d, p);
            if poly_rem(modulus, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl FieldSpec {
    /// Builds GF(p^m). Without an explicit modulus the first monic irreducible
    /// polynomial of degree m (ordered by its lower coefficients read as a
    /// base-p integer) is used; for GF(4) this is `z^2 + z + 1`, for GF(8)
    /// `z^3 + z + 1`.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::UnsupportedSize { p, m });
        }
        let order = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if order > MAX_ORDER as u128 {
            return Err(Error::UnsupportedSize { p, m });
        }
        let modulus = match modulus {
            Some(coeffs) => {
                if coeffs.len() != m as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        m + 1,
                        coeffs.len()
                    )));
                }
                if coeffs.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus("coefficient out of range".into()));
                }
                if coeffs[m as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !is_irreducible(coeffs, p) {
                    return Err(Error::ReducibleModulus(format_poly(coeffs)));
                }
                coeffs.to_vec()
            }
            None if m == 1 => vec![0, 1],
            None => (0..(p as usize).pow(m))
                .map(|i| monic_from_index(i, m, p))
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial exists in every degree"),
        };
        Ok(Self::with_tables(p, m, modulus))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    fn with_tables(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        let q = (p as usize).pow(m);
        let decode = |mut v: usize| -> Vec<u32> {
            (0..m)
                .map(|_| {
                    let c = (v % p as usize) as u32;
                    v /= p as usize;
                    c
                })
                .collect()
        };
        let encode = |c: &[u32]| -> u16 {
            c.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize) as u16
        };
        let digits: Vec<Vec<u32>> = (0..q).map(decode).collect();

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = encode(&s);

                let mut prod = vec![0u32; 2 * m as usize - 1];
                for (i, &x) in digits[a].iter().enumerate() {
                    for (j, &y) in digits[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if m == 1 { prod } else { poly_rem(&prod, &modulus, p) };
                r.resize(m as usize, 0);
                mul[a * q + b] = encode(&r);
            }
        }
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16;
            if a != 0 {
                inv[a] = (0..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16;
            }
        }
        FieldSpec {
            inner: Arc::new(Tables { p, m, modulus, order: q, add, mul, neg, inv }),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn is_binary(&self) -> bool {
        self.inner.order == 2
    }

    pub fn zero(&self) -> FieldElement {
        self.raw(0)
    }

    pub fn one(&self) -> FieldElement {
        self.raw(1)
    }

    /// The residue class of `z`. Prime fields have no `z`; `1` is returned.
    pub fn generator(&self) -> FieldElement {
        if self.inner.m == 1 {
            self.one()
        } else {
            self.raw(self.inner.p as u16)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.inner.p as i64;
        self.raw(n.rem_euclid(p) as u16)
    }

    /// Element from polynomial-basis coefficients (low to high, at most m of them).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.m as usize {
            return Err(Error::InvalidModulus(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.inner.m
            )));
        }
        let p = self.inner.p;
        if coeffs.iter().any(|&c| c >= p) {
            return Err(Error::parse("field coefficient out of range"));
        }
        let v = coeffs.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize);
        Ok(self.raw(v as u16))
    }

    /// Wraps an encoded value. Panics if out of range.
    pub fn raw(&self, value: u16) -> FieldElement {
        assert!((value as usize) < self.inner.order, "field value out of range");
        FieldElement { field: self.clone(), value }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.order as u16).map(move |v| self.raw(v))
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u16, b: u16) -> u16 {
        self.inner.add[a as usize * self.inner.order + b as usize]
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u16, b: u16) -> u16 {
        self.add_raw(a, self.inner.neg[b as usize])
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u16, b: u16) -> u16 {
        self.inner.mul[a as usize * self.inner.order + b as usize]
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u16) -> u16 {
        self.inner.neg[a as usize]
    }

    /// Inverse of a nonzero encoded value.
    #[inline]
    pub(crate) fn inv_raw(&self, a: u16) -> u16 {
        debug_assert!(a != 0);
        self.inner.inv[a as usize]
    }

    pub(crate) fn digits(&self, mut value: u16) -> Vec<u32> {
        let p = self.inner.p as u16;
        (0..self.inner.m)
            .map(|_| {
                let c = value % p;
                value /= p;
                c as u32
            })
            .collect()
    }

    /// Formats an encoded value: a decimal residue for prime fields, a
    /// polynomial in `z` otherwise.
    pub(crate) fn format_raw(&self, value: u16) -> String {
        if self.inner.m == 1 {
            value.to_string()
        } else {
            format_poly(&self.digits(value))
        }
    }

    /// Parses an element written as an integer or a polynomial in `z`,
    /// e.g. `"2"`, `"z^2+z+1"`, `"2*z + 1"`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("empty field element"));
        }
        let mut acc = 0u16;
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if negative || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (mono, tail) = rest.split_at(end);
            rest = tail;
            let mut term = self.parse_monomial(mono)?;
            if negative {
                term = self.neg_raw(term);
            }
            acc = self.add_raw(acc, term);
        }
        Ok(self.raw(acc))
    }

    fn parse_monomial(&self, mono: &str) -> Result<u16> {
        let bad = || Error::parse(format!("bad field monomial {mono:?}"));
        if mono.is_empty() {
            return Err(bad());
        }
        let (coeff, power) = match mono.find('z') {
            None => (mono, None),
            Some(i) => {
                let coeff = mono[..i].trim_end_matches('*');
                let after = &mono[i + 1..];
                let power = if after.is_empty() {
                    1
                } else {
                    after
                        .strip_prefix('^')
                        .and_then(|e| e.parse::<u32>().ok())
                        .ok_or_else(bad)?
                };
                (coeff, Some(power))
            }
        };
        let c = if coeff.is_empty() {
            1
        } else {
            coeff.parse::<i64>().map_err(|_| bad())?
        };
        let c = self.from_int(c).value;
        let Some(power) = power else { return Ok(c) };
        let mut z = self.generator().value;
        if self.inner.m == 1 {
            return Err(Error::parse("`z` is not defined in a prime field"));
        }
        let mut acc = 1u16;
        let mut e = power;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, z);
            }
            z = self.mul_raw(z, z);
            e >>= 1;
        }
        Ok(self.mul_raw(c, acc))
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Literal form: `GF(p)` or `GF(p^m)[c0,c1,...,cm]`.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.inner;
        if t.m == 1 {
            write!(f, "GF({})", t.p)
        } else {
            let coeffs: Vec<String> = t.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, "GF({}^{})[{}]", t.p, t.m, coeffs.join(","))
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `GF(p)`, `GF(q)` for a prime power q, `GF(p^m)`, and either
    /// of the latter followed by `[c0,...,cm]` giving the modulus low-to-high.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(format!("bad field literal {s:?}"));
        let body = s.strip_prefix("GF(").ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let (size, rest) = (&body[..close], body[close + 1..].trim());
        let (p, m) = match size.split_once('^') {
            Some((p, m)) => (
                p.trim().parse::<u32>().map_err(|_| bad())?,
                m.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => {
                let q = size.trim().parse::<u32>().map_err(|_| bad())?;
                prime_power(q).ok_or(Error::NonPrimeCharacteristic(q))?
            }
        };
        let modulus = if rest.is_empty() {
            None
        } else {
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let coeffs = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Some(coeffs)
        };
        FieldSpec::new(p, m, modulus.as_deref())
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// An element of a [`FieldSpec`]. Equality is by field and encoded value.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    value: u16,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Integer encoding `c_0 + c_1 p + ...`.
    pub fn value(&self) -> u16 {
        self.value
    }

    /// Polynomial-basis coefficients, low to high, m entries.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.raw(self.field.add_raw(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.raw(self.field.sub_raw(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.raw(self.field.mul_raw(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.field.raw(self.field.neg_raw(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.raw(self.field.inv_raw(self.value)))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let f = &self.field;
        let (mut base, mut acc) = (self.value, 1u16);
        while e > 0 {
            if e & 1 == 1 {
                acc = f.mul_raw(acc, base);
            }
            base = f.mul_raw(base, base);
            e >>= 1;
        }
        f.raw(acc)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_raw(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldSpec {
        FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn prime_fields() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.order(), 2);
        assert!(f2.one().add(&f2.one()).unwrap().is_zero());

        let f3 = FieldSpec::prime(3).unwrap();
        let two = f3.from_int(2);
        assert_eq!(two.mul(&two).unwrap(), f3.one());
        assert_eq!(f3.from_int(-1), two);
    }

    #[test]
    fn gf4_generator_squares_to_z_plus_one() {
        let f = gf4();
        let z = f.generator();
        assert_eq!(z.mul(&z).unwrap().coeffs(), vec![1, 1]);
        assert_eq!(z.to_string(), "z");
        assert_eq!(z.mul(&z).unwrap().to_string(), "z+1");
    }

    #[test]
    fn default_moduli() {
        assert_eq!(FieldSpec::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        for (p, m) in [(2, 9), (3, 5), (5, 3), (7, 3), (23, 1), (509, 1)] {
            let f = FieldSpec::new(p, m, None).unwrap();
            assert!(is_irreducible(f.modulus(), p));
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1, None).unwrap_err(), Error::NonPrimeCharacteristic(4));
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(matches!(FieldSpec::new(2, 10, None), Err(Error::UnsupportedSize { .. })));
        assert!(matches!(FieldSpec::new(2, 2, Some(&[1, 1])), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn mismatch_and_division_by_zero() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f2.one().add(&f3.one()).unwrap_err(), Error::SpecMismatch);
        assert_eq!(f3.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn literals_round_trip() {
        for lit in ["GF(2)", "GF(3)", "GF(2^2)[1,1,1]", "GF(3^2)[2,2,1]"] {
            let f: FieldSpec = lit.parse().unwrap();
            assert_eq!(f.to_string(), lit);
        }
        let f: FieldSpec = "GF(8)".parse().unwrap();
        assert_eq!((f.characteristic(), f.degree()), (2, 3));
        assert_eq!("GF(2^2)".parse::<FieldSpec>().unwrap(), gf4());
        assert!("GF(6)".parse::<FieldSpec>().is_err());
        assert!("F(2)".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn element_text() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        for e in f.elements() {
            assert_eq!(f.parse_element(&e.to_string()).unwrap(), e);
        }
        assert_eq!(f.parse_element("-1").unwrap(), f.from_int(2));
        assert!(FieldSpec::prime(5).unwrap().parse_element("z").is_err());
    }

    fn all_small_fields() -> Vec<FieldSpec> {
        [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4)]
            .iter()
            .map(|&(p, m)| FieldSpec::new(p, m, None).unwrap())
            .collect()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in all_small_fields() {
            let els: Vec<_> = f.elements().collect();
            for a in &els {
                for b in &els {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &els {
                        let ab_c = a.mul(b).unwrap().mul(c).unwrap();
                        assert_eq!(ab_c, a.mul(&b.mul(c).unwrap()).unwrap());
                        let lhs = a.mul(&b.add(c).unwrap()).unwrap();
                        let rhs = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
                }
                let p_times_a = (0..f.characteristic()).fold(f.zero(), |acc, _| acc.add(a).unwrap());
                assert!(p_times_a.is_zero());
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        for f in all_small_fields() {
            let q = f.order() as u64;
            for a in f.elements().filter(|a| !a.is_zero()) {
                assert!(a.pow(q - 1).is_one());
            }
        }
    }
}
