//! Exact dense matrices over GF(q).
//!
//! Row reduction pivots on the first nonzero entry at or below the current
//! row, scanning columns left to right, so the reduced row echelon form and
//! the nullspace basis derived from it are reproducible. Over GF(2) the
//! elimination runs on rows packed into `u64` words; the result is identical
//! to the generic path.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl MatrixGF {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        MatrixGF { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from encoded rows. `cols` is needed when `rows` is empty.
    pub fn from_raw_rows(field: &FieldSpec, cols: usize, rows: &[Vec<u16>]) -> Result<Self> {
        let q = field.order();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if row.iter().any(|&v| v as usize >= q) {
                return Err(Error::Parse(format!("row {i} has an entry outside {field}")));
            }
            data.extend_from_slice(row);
        }
        Ok(MatrixGF { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn from_rows(field: &FieldSpec, cols: usize, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let mut raw = Vec::with_capacity(rows.len());
        for row in rows {
            if row.iter().any(|e| e.field() != field) {
                return Err(Error::SpecMismatch);
            }
            raw.push(row.iter().map(FieldElement::value).collect());
        }
        Self::from_raw_rows(field, cols, &raw)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.raw(self.data[r * self.cols + c])
    }

    #[inline]
    pub fn get_raw(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set_raw(&mut self, r: usize, c: usize, v: u16) {
        debug_assert!((v as usize) < self.field.order());
        self.data[r * self.cols + c] = v;
    }

    /// Adds `v` to entry (r, c).
    pub(crate) fn accumulate(&mut self, r: usize, c: usize, v: u16) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add_raw(self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u16>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get_raw(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get_raw(k, j);
                    if b != 0 {
                        out.accumulate(i, j, f.mul_raw(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u16]) -> Result<Vec<u16>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add_raw(acc, f.mul_raw(a, b)))
            })
            .collect())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        MatrixGF { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get_raw(r, c);
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "stacking {} columns on {}",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixGF { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (MatrixGF, Vec<usize>) {
        if self.field.is_binary() {
            self.rref_binary()
        } else {
            self.rref_generic()
        }
    }

    pub(crate) fn rref_generic(&self) -> (MatrixGF, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get_raw(i, c) != 0) else { continue };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv_raw(m.get_raw(r, c));
            for j in c..cols {
                let v = m.get_raw(r, j);
                m.set_raw(r, j, f.mul_raw(inv, v));
            }
            for i in 0..m.rows {
                let factor = m.get_raw(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = m.get_raw(r, j);
                    if v != 0 {
                        let cur = m.get_raw(i, j);
                        m.set_raw(i, j, f.sub_raw(cur, f.mul_raw(factor, v)));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn rref_binary(&self) -> (MatrixGF, Vec<usize>) {
        let mut packed = BitRows::pack(self);
        let pivots = packed.rref();
        (packed.unpack(&self.field), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}` as the rows of a matrix,
    /// one per free column in increasing order.
    pub fn nullspace(&self) -> MatrixGF {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = MatrixGF::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set_raw(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set_raw(k, pc, f.neg_raw(r.get_raw(i, fc)));
            }
        }
        basis
    }

    /// One solution of `M x = b` (free variables set to zero), or `None`.
    pub fn solve_raw(&self, b: &[u16]) -> Result<Option<Vec<u16>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = MatrixGF::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.data[r * (self.cols + 1)..r * (self.cols + 1) + self.cols]
                .copy_from_slice(self.row(r));
            aug.data[r * (self.cols + 1) + self.cols] = b[r];
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u16; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get_raw(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        if b.iter().any(|e| e.field() != &self.field) {
            return Err(Error::SpecMismatch);
        }
        let raw: Vec<u16> = b.iter().map(FieldElement::value).collect();
        Ok(self
            .solve_raw(&raw)?
            .map(|x| x.into_iter().map(|v| self.field.raw(v)).collect()))
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_space_basis(&self) -> MatrixGF {
        let (r, pivots) = self.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        r.select_rows(&keep)
    }

    pub fn row_space_equal(&self, other: &Self) -> Result<bool> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} columns vs {}",
                self.cols, other.cols
            )));
        }
        Ok(self.row_space_basis() == other.row_space_basis())
    }

    /// Whether the row space of `self` lies inside that of `other`.
    pub fn row_space_within(&self, other: &Self) -> Result<bool> {
        let stacked = other.vstack(self)?;
        Ok(stacked.rank() == other.rank())
    }

    /// One row per line, entries separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&v| self.field.format_raw(v)).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(field: &FieldSpec, s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let row = line
                .split_whitespace()
                .map(|t| field.parse_element(t).map(|e| e.value()))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_raw_rows(field, cols, &rows)
    }
}

impl fmt::Display for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} over {}\n{}", self.rows, self.cols, self.field, self.to_text())
    }
}

/// GF(2) rows packed 64 columns per word.
pub(crate) struct BitRows {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    pub(crate) fn pack(m: &MatrixGF) -> Self {
        let words = m.cols.div_ceil(64).max(1);
        let mut data = vec![0u64; m.rows * words];
        for r in 0..m.rows {
            for c in 0..m.cols {
                if m.get_raw(r, c) != 0 {
                    data[r * words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        BitRows { rows: m.rows, cols: m.cols, words, data }
    }

    pub(crate) fn unpack(&self, field: &FieldSpec) -> MatrixGF {
        let mut m = MatrixGF::zeros(field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.bit(r, c) {
                    m.set_raw(r, c, 1);
                }
            }
        }
        m
    }

    #[inline]
    fn bit(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn rref(&mut self) -> Vec<usize> {
        let w = self.words;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.bit(i, c)) else { continue };
            if p != r {
                for j in 0..w {
                    self.data.swap(p * w + j, r * w + j);
                }
            }
            let pivot_row: Vec<u64> = self.data[r * w..(r + 1) * w].to_vec();
            for i in 0..self.rows {
                if i != r && self.bit(i, c) {
                    for (dst, src) in self.data[i * w..(i + 1) * w].iter_mut().zip(&pivot_row) {
                        *dst ^= src;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}
