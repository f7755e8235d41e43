//! Linear codes spanned by the image of a derivation.
//!
//! Parameters are verified by exhaustive enumeration of the message space
//! (Gray code over GF(2), a base-p odometer over the GF(p)-basis otherwise),
//! split across threads by fixing the leading message digits. A second,
//! independent minimum-distance routine uses disjoint information sets.

use std::fmt;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::derivations::Derivation;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::MatrixGF;

/// Default cap on the number of enumerated messages.
pub const DEFAULT_MAX_MESSAGES: u128 = 1 << 30;

/// Limits and parallelism for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub max_messages: u128,
    pub threads: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
        EnumOptions { max_messages: DEFAULT_MAX_MESSAGES, threads }
    }
}

/// A linear code given by a full-rank generator matrix.
#[derive(Clone)]
pub struct LinearCode {
    generator: MatrixGF,
    distribution: OnceLock<Vec<u64>>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[n={}, k={}] over {}", self.n(), self.k(), self.field())
    }
}

/// Keeps the rows of `rows` that are independent of the rows kept before them.
fn first_independent_rows(field: &FieldSpec, cols: usize, rows: &[Vec<u16>]) -> Vec<Vec<u16>> {
    // echelon rows (normalized, pivot first) used only for reduction
    let mut echelon: Vec<(usize, Vec<u16>)> = Vec::new();
    let mut kept = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for (pivot, e) in &echelon {
            let c = v[*pivot];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(e) {
                    if y != 0 {
                        *x = field.sub_raw(*x, field.mul_raw(c, y));
                    }
                }
            }
        }
        if let Some(pivot) = (0..cols).find(|&j| v[j] != 0) {
            let inv = field.inv_raw(v[pivot]);
            v.iter_mut().for_each(|x| *x = field.mul_raw(inv, *x));
            echelon.push((pivot, v));
            kept.push(row.clone());
        }
    }
    kept
}

impl LinearCode {
    /// The row space of `m`, generated by its first-occurrence independent rows.
    pub fn from_rows(m: &MatrixGF) -> LinearCode {
        let kept = first_independent_rows(m.field(), m.cols(), &m.row_vecs());
        let generator =
            MatrixGF::from_raw_rows(m.field(), m.cols(), &kept).expect("rows have the matrix width");
        LinearCode { generator, distribution: OnceLock::new() }
    }

    /// Image of KG under `d`: the span of `d(g)` over the group, column `j`
    /// being the coefficient of the j-th group element.
    pub fn from_derivation(d: &Derivation) -> Result<LinearCode> {
        let alg = d.algebra();
        let rows = (0..alg.dim())
            .map(|g| d.derive_element(g).map(|e| e.into_raw()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows(&MatrixGF::from_raw_rows(alg.field(), alg.dim(), &rows)?))
    }

    pub fn field(&self) -> &FieldSpec {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    pub fn message_count(&self) -> u128 {
        (self.field().order() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX)
    }

    fn check_enumerable(&self, opts: &EnumOptions) -> Result<()> {
        let messages = self.message_count();
        if messages > opts.max_messages {
            return Err(Error::TooLarge { messages, bound: opts.max_messages });
        }
        Ok(())
    }

    /// `A_w` = number of codewords of weight `w`, for `w = 0..=n`.
    pub fn weight_distribution(&self, opts: &EnumOptions) -> Result<Vec<u64>> {
        if let Some(d) = self.distribution.get() {
            return Ok(d.clone());
        }
        self.check_enumerable(opts)?;
        let dist = if self.field().order() == 2 {
            binary_distribution(&self.generator, opts.threads)
        } else {
            odometer_distribution(&self.generator, opts.threads)
        };
        Ok(self.distribution.get_or_init(|| dist).clone())
    }

    /// Smallest nonzero codeword weight, by exhaustive enumeration.
    pub fn min_distance(&self, opts: &EnumOptions) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::BadParameters("the zero code has no minimum distance".into()));
        }
        let dist = self.weight_distribution(opts)?;
        Ok((1..dist.len()).find(|&w| dist[w] > 0).expect("a nonzero code has a nonzero word"))
    }

    /// `G G^T = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.generator.mul(&self.generator.transpose()).expect("shapes agree").is_zero()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n() && self.is_self_orthogonal()
    }

    /// Every codeword weight divisible by 4.
    ///
    /// Over GF(2) this is decided from the generator rows: with
    /// `wt(a+b) = wt(a) + wt(b) - 2|a∩b|`, the code is doubly even iff every
    /// row has weight divisible by 4 and every two rows meet evenly.
    /// Other fields fall back to enumeration.
    pub fn is_doubly_even(&self, opts: &EnumOptions) -> Result<bool> {
        if self.field().order() != 2 {
            let dist = self.weight_distribution(opts)?;
            return Ok(dist.iter().enumerate().all(|(w, &a)| a == 0 || w % 4 == 0));
        }
        let rows = self.generator.row_vecs();
        let weight = |r: &Vec<u16>| r.iter().filter(|&&v| v != 0).count();
        if rows.iter().any(|r| weight(r) % 4 != 0) {
            return Ok(false);
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let overlap = rows[i].iter().zip(&rows[j]).filter(|(a, b)| **a != 0 && **b != 0).count();
                if overlap % 2 != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Moves column `j` to position `σ(j)`.
    pub fn permute_columns(&self, sigma: &Permutation) -> Result<LinearCode> {
        if sigma.len() != self.n() {
            return Err(Error::BadPermutation(format!(
                "permutation of {} points applied to length {}",
                sigma.len(),
                self.n()
            )));
        }
        let mut g = MatrixGF::zeros(self.field(), self.k(), self.n());
        for r in 0..self.k() {
            for c in 0..self.n() {
                g.set_raw(r, sigma.image(c), self.generator.get_raw(r, c));
            }
        }
        Ok(LinearCode { generator: g, distribution: self.distribution.clone() })
    }

    /// The reduced form `[I_k | A]`, returning `A`. Fails if the first `k`
    /// columns are not an information set.
    pub fn systematic_part(&self) -> Result<MatrixGF> {
        let (r, pivots) = self.generator.rref();
        if pivots != (0..self.k()).collect::<Vec<_>>() {
            return Err(Error::BadParameters(
                "the leading columns are not an information set".into(),
            ));
        }
        let rest: Vec<usize> = (self.k()..self.n()).collect();
        Ok(r.select_rows(&(0..self.k()).collect::<Vec<_>>()).select_cols(&rest))
    }

    /// `n=.. k=.. d=.. self_dual=.. doubly_even=..`
    pub fn report(&self, opts: &EnumOptions) -> Result<String> {
        let d = if self.k() == 0 { "-".to_string() } else { self.min_distance(opts)?.to_string() };
        Ok(format!(
            "n={} k={} d={} self_dual={} doubly_even={}",
            self.n(),
            self.k(),
            d,
            self.is_self_dual(),
            self.is_doubly_even(opts)?
        ))
    }

    /// Minimum distance from disjoint information sets found in a seeded
    /// random column order.
    ///
    /// Relative to each information set, a codeword with at most `w`
    /// nonzero message coordinates is enumerated at level `w`. Any codeword
    /// missed after level `w` has weight at least `w + 1` on every one of
    /// the `m` disjoint sets, so `m (w + 1)` bounds the distance from below;
    /// the search stops once that meets the lightest word seen.
    pub fn min_distance_information_sets(&self, seed: u64) -> Result<InformationSetBound> {
        let k = self.k();
        if k == 0 {
            return Err(Error::BadParameters("the zero code has no minimum distance".into()));
        }
        let field = self.field().clone();
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

        let mut systematic = Vec::new();
        let mut remaining = order;
        loop {
            let (_, pivots) = self.generator.select_cols(&remaining).rref();
            if pivots.len() < k {
                break;
            }
            let info: Vec<usize> = pivots.iter().map(|&p| remaining[p]).collect();
            let mut cols = info.clone();
            cols.extend(remaining.iter().filter(|c| !info.contains(c)));
            let missing: Vec<usize> = (0..self.n()).filter(|c| !cols.contains(c)).collect();
            cols.extend(missing);
            let (r, _) = self.generator.select_cols(&cols).rref();
            let mut gamma = MatrixGF::zeros(&field, k, self.n());
            for i in 0..k {
                for (j, &c) in cols.iter().enumerate() {
                    gamma.set_raw(i, c, r.get_raw(i, j));
                }
            }
            systematic.push(gamma.row_vecs());
            remaining.retain(|c| !info.contains(c));
        }
        let sets = systematic.len();
        let mut upper = usize::MAX;
        for w in 1..=k {
            for rows in &systematic {
                visit_combinations(&field, rows, w, &mut |cw| {
                    let wt = cw.iter().filter(|&&v| v != 0).count();
                    upper = upper.min(wt);
                });
            }
            let lower = sets * (w + 1);
            if lower >= upper || w == k {
                return Ok(InformationSetBound { distance: upper, lower_bound: lower.min(upper), information_sets: sets, level: w });
            }
        }
        unreachable!("level k enumerates every codeword")
    }
}

/// Result of [`LinearCode::min_distance_information_sets`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InformationSetBound {
    pub distance: usize,
    pub lower_bound: usize,
    pub information_sets: usize,
    /// Largest number of nonzero message coordinates enumerated.
    pub level: usize,
}

/// Calls `visit` on every combination of exactly `w` rows with nonzero
/// coefficients, the first coefficient fixed to 1 (scaling keeps weight).
fn visit_combinations(field: &FieldSpec, rows: &[Vec<u16>], w: usize, visit: &mut dyn FnMut(&[u16])) {
    let n = rows.first().map_or(0, Vec::len);
    let nonzero: Vec<u16> = (1..field.order() as u16).collect();
    fn go(
        field: &FieldSpec,
        rows: &[Vec<u16>],
        start: usize,
        left: usize,
        first: bool,
        acc: &[u16],
        nonzero: &[u16],
        visit: &mut dyn FnMut(&[u16]),
    ) {
        if left == 0 {
            visit(acc);
            return;
        }
        for i in start..=rows.len() - left {
            let coeffs: &[u16] = if first { &[1] } else { nonzero };
            for &c in coeffs {
                let next: Vec<u16> = acc
                    .iter()
                    .zip(&rows[i])
                    .map(|(&a, &r)| field.add_raw(a, field.mul_raw(c, r)))
                    .collect();
                go(field, rows, i + 1, left - 1, false, &next, nonzero, visit);
            }
        }
    }
    if w <= rows.len() {
        go(field, rows, 0, w, true, &vec![0; n], &nonzero, visit);
    }
}

/// Splits `digits` message digits into a fixed prefix of `t` leading digits
/// and returns `t`, aiming for a few chunks per thread.
fn prefix_digits(radix: usize, digits: usize, threads: usize) -> usize {
    let target = threads.max(1) * 4;
    let mut t = 0;
    let mut chunks = 1usize;
    while t < digits && chunks < target && threads > 1 {
        chunks = chunks.saturating_mul(radix);
        t += 1;
    }
    t
}

fn run_chunks(chunks: usize, threads: usize, len: usize, work: &(dyn Fn(usize, &mut [u64]) + Sync)) -> Vec<u64> {
    let threads = threads.clamp(1, chunks.max(1));
    let mut total = vec![0u64; len];
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                s.spawn(move || {
                    let mut hist = vec![0u64; len];
                    for c in (t..chunks).step_by(threads) {
                        work(c, &mut hist);
                    }
                    hist
                })
            })
            .collect();
        for h in handles {
            for (a, b) in total.iter_mut().zip(h.join().expect("worker panicked")) {
                *a += b;
            }
        }
    });
    total
}

fn binary_distribution(g: &MatrixGF, threads: usize) -> Vec<u64> {
    let n = g.cols();
    let k = g.rows();
    let words = n.div_ceil(64).max(1);
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|r| {
            let mut bits = vec![0u64; words];
            for c in 0..n {
                if g.get_raw(r, c) != 0 {
                    bits[c / 64] |= 1 << (c % 64);
                }
            }
            bits
        })
        .collect();
    let t = prefix_digits(2, k, threads);
    let low = k - t;
    let work = |chunk: usize, hist: &mut [u64]| {
        let mut cw = vec![0u64; words];
        for b in 0..t {
            if chunk >> b & 1 == 1 {
                cw.iter_mut().zip(&rows[low + b]).for_each(|(a, r)| *a ^= r);
            }
        }
        let weight = |cw: &[u64]| cw.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        hist[weight(&cw)] += 1;
        for i in 1u64..(1u64 << low) {
            let r = &rows[i.trailing_zeros() as usize];
            cw.iter_mut().zip(r).for_each(|(a, r)| *a ^= r);
            hist[weight(&cw)] += 1;
        }
    };
    run_chunks(1 << t, threads, n + 1, &work)
}

fn odometer_distribution(g: &MatrixGF, threads: usize) -> Vec<u64> {
    let field = g.field().clone();
    let n = g.cols();
    let p = field.characteristic() as usize;
    // GF(p)-basis z^j * row_i of the code
    let mut basis: Vec<Vec<u16>> = Vec::new();
    let z = field.generator().value();
    for r in 0..g.rows() {
        let mut v = g.row(r).to_vec();
        for _ in 0..field.degree() {
            basis.push(v.clone());
            v.iter_mut().for_each(|x| *x = field.mul_raw(z, *x));
        }
    }
    let digits = basis.len();
    let t = prefix_digits(p, digits, threads);
    let low = digits - t;
    let chunks = p.pow(t as u32);
    let work = |chunk: usize, hist: &mut [u64]| {
        let mut cw = vec![0u16; n];
        let mut c = chunk;
        for b in 0..t {
            for _ in 0..c % p {
                cw.iter_mut().zip(&basis[low + b]).for_each(|(a, &r)| *a = field.add_raw(*a, r));
            }
            c /= p;
        }
        let mut weight = cw.iter().filter(|&&v| v != 0).count();
        hist[weight] += 1;
        let mut odometer = vec![0usize; low];
        'outer: loop {
            let mut pos = 0;
            loop {
                if pos == low {
                    break 'outer;
                }
                for (a, &r) in cw.iter_mut().zip(&basis[pos]) {
                    if r != 0 {
                        let before = *a != 0;
                        *a = field.add_raw(*a, r);
                        match (before, *a != 0) {
                            (false, true) => weight += 1,
                            (true, false) => weight -= 1,
                            _ => {}
                        }
                    }
                }
                odometer[pos] += 1;
                if odometer[pos] == p {
                    odometer[pos] = 0;
                    pos += 1;
                } else {
                    break;
                }
            }
            hist[weight] += 1;
        }
    };
    run_chunks(chunks, threads, n + 1, &work)
}

/// A permutation of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::BadPermutation(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-indexed cycle notation such as `(6,19,12)(7,23)` on `n` points.
    /// Points may be separated by commas or spaces; `()` or an empty string is
    /// the identity.
    pub fn from_cycles(s: &str, n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let bad = |msg: String| Error::BadPermutation(msg);
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| bad(format!("expected '(' at {rest:?}")))?;
            let close = inner.find(')').ok_or_else(|| bad("unclosed cycle".into()))?;
            let points = inner[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let v: usize = t.parse().map_err(|_| bad(format!("bad point {t:?}")))?;
                    if v == 0 || v > n {
                        return Err(bad(format!("point {v} outside 1..={n}")));
                    }
                    if std::mem::replace(&mut seen[v - 1], true) {
                        return Err(bad(format!("point {v} repeated")));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for (i, &a) in points.iter().enumerate() {
                images[a] = points[(i + 1) % points.len()];
            }
            rest = inner[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::GeneratorImageMap;
    use crate::groupring::GroupAlgebra;
    use crate::groups::FiniteGroup;
    use proptest::prelude::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn code(field: &FieldSpec, rows: &[&[u16]]) -> LinearCode {
        let rows: Vec<Vec<u16>> = rows.iter().map(|r| r.to_vec()).collect();
        LinearCode::from_rows(&MatrixGF::from_raw_rows(field, rows[0].len(), &rows).unwrap())
    }

    fn opts() -> EnumOptions {
        EnumOptions { max_messages: DEFAULT_MAX_MESSAGES, threads: 3 }
    }

    fn golay() -> LinearCode {
        let alg = GroupAlgebra::new(FiniteGroup::cyclic(24).unwrap(), f2());
        let map = GeneratorImageMap::from_strings(&alg, &[("x", "1+x+x^3+x^4+x^5+x^7+x^9+x^12")]).unwrap();
        LinearCode::from_derivation(&Derivation::validated(map).unwrap()).unwrap()
    }

    #[test]
    fn golay_parameters() {
        let c = golay();
        assert_eq!((c.n(), c.k()), (24, 12));
        assert_eq!(c.min_distance(&opts()).unwrap(), 8);
        assert!(c.is_self_dual());
        assert!(c.is_doubly_even(&opts()).unwrap());
        let dist = c.weight_distribution(&opts()).unwrap();
        assert_eq!((dist[0], dist[8], dist[12], dist[16], dist[24]), (1, 759, 2576, 759, 1));
        assert_eq!(c.report(&opts()).unwrap(), "n=24 k=12 d=8 self_dual=true doubly_even=true");
        let is = c.min_distance_information_sets(7).unwrap();
        assert_eq!(is.distance, 8);
        assert!(is.information_sets >= 2);
    }

    #[test]
    fn small_codes() {
        let rep = code(&f2(), &[&[1, 1, 1, 1, 1]]);
        assert_eq!(rep.min_distance(&opts()).unwrap(), 5);
        let c = code(&f2(), &[&[1, 1]]);
        assert!(c.is_self_dual());
        assert!(!c.is_doubly_even(&opts()).unwrap());
        let dup = code(&f2(), &[&[1, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]);
        assert_eq!(dup.k(), 2);
        assert_eq!(dup.generator().row_vecs(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        let zero = code(&f2(), &[&[0, 0, 0]]);
        assert_eq!(zero.k(), 0);
        assert!(matches!(zero.min_distance(&opts()), Err(Error::BadParameters(_))));
    }

    #[test]
    fn doubly_even_rows_with_odd_overlap() {
        // rows of weight 4 meeting in one point: their sum has weight 6
        let c = code(&f2(), &[&[1, 1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 1, 1]]);
        assert!(!c.is_doubly_even(&opts()).unwrap());
        assert!(c.weight_distribution(&opts()).unwrap()[6] == 1);
    }

    #[test]
    fn nonbinary_enumeration() {
        let f3 = FieldSpec::prime(3).unwrap();
        // ternary Hamming-like [4,2,3] tetracode
        let c = code(&f3, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        assert_eq!(c.min_distance(&opts()).unwrap(), 3);
        assert_eq!(c.weight_distribution(&opts()).unwrap(), vec![1, 0, 0, 8, 0]);
        assert!(c.is_self_dual());
        assert_eq!(c.min_distance_information_sets(1).unwrap().distance, 3);

        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let c = code(&f4, &[&[1, 1, 1]]);
        assert_eq!(c.weight_distribution(&opts()).unwrap(), vec![1, 0, 0, 3]);
    }

    #[test]
    fn enumeration_bound() {
        let c = golay();
        let tight = EnumOptions { max_messages: 1000, threads: 1 };
        assert_eq!(c.min_distance(&tight).unwrap_err(), Error::TooLarge { messages: 4096, bound: 1000 });
    }

    #[test]
    fn permutations() {
        let c = golay();
        let id = Permutation::from_cycles("", 24).unwrap();
        assert_eq!(c.permute_columns(&id).unwrap().generator(), c.generator());
        let sigma =
            Permutation::from_cycles("(6,19,12,10,11,22,8,21,15,16,18,9,24,13,20)(7,23,17,14)", 24).unwrap();
        assert_eq!(sigma.image(5), 18);
        assert_eq!(sigma.image(19), 5);
        let fresh = LinearCode::from_rows(c.permute_columns(&sigma).unwrap().generator());
        assert_eq!(fresh.min_distance(&opts()).unwrap(), 8);
        for bad in ["(1,2)(2,3)", "(0,1)", "(1,25)", "(1,2", "1,2"] {
            assert!(matches!(Permutation::from_cycles(bad, 24), Err(Error::BadPermutation(_))), "{bad}");
        }
        assert!(c.permute_columns(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn systematic_split() {
        let c = code(&f2(), &[&[1, 1, 0, 1], &[0, 1, 1, 1]]);
        let a = c.systematic_part().unwrap();
        assert_eq!(a.row_vecs(), vec![vec![1, 0], vec![1, 1]]);
        let c = code(&f2(), &[&[0, 1, 1]]);
        assert!(c.systematic_part().is_err());
    }

    proptest! {
        #[test]
        fn gray_and_information_sets_agree(bits in proptest::collection::vec(0u16..2, 5 * 11)) {
            let rows: Vec<Vec<u16>> = bits.chunks(11).map(|r| r.to_vec()).collect();
            let c = LinearCode::from_rows(&MatrixGF::from_raw_rows(&f2(), 11, &rows).unwrap());
            prop_assume!(c.k() > 0);
            let single = EnumOptions { max_messages: DEFAULT_MAX_MESSAGES, threads: 1 };
            let d = c.min_distance(&single).unwrap();
            prop_assert_eq!(d, c.min_distance_information_sets(3).unwrap().distance);
            // brute force over message vectors
            let g = c.generator();
            let mut best = usize::MAX;
            for m in 1u32..(1 << c.k()) {
                let wt = (0..11).filter(|&j| (0..c.k()).fold(0, |acc, i| acc ^ ((m >> i & 1) as u16 & g.get_raw(i, j))) != 0).count();
                best = best.min(wt);
            }
            prop_assert_eq!(d, best);
        }

        #[test]
        fn permutation_keeps_distribution(seed in any::<u64>()) {
            let c = golay();
            let mut images: Vec<usize> = (0..24).collect();
            images.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let sigma = Permutation::from_images(images).unwrap();
            let moved = LinearCode::from_rows(c.permute_columns(&sigma).unwrap().generator());
            prop_assert_eq!(moved.weight_distribution(&opts()).unwrap(), c.weight_distribution(&opts()).unwrap());
        }
    }
}
