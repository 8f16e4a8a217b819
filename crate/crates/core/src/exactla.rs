//! Dense linear algebra over ℚ.
//!
//! Everything here is exact. Elimination always pivots on the first nonzero
//! entry in column order, so echelon forms (and every basis derived from them)
//! are reproducible across runs, platforms and the parallel/sequential switch.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::par;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"`. Decimal and exponent notation are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    Rational::from_str(trimmed).map_err(|e| Error::Parse(format!("bad rational {text:?}: {e}")))
}

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// A small random rational, numerator in `-4..=4` and denominator in `1..=3`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::shape(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(RationalMatrix { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::shape(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    t.set(c, r, x.clone());
                }
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let nz: Vec<(usize, &Rational)> = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        Ok(par::map_range(self.rows, |r| {
            let row = self.row(r);
            nz.iter().fold(Rational::zero(), |acc, &(c, x)| {
                if row[c].is_zero() {
                    acc
                } else {
                    acc + &row[c] * x
                }
            })
        }))
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let cols = rhs.cols;
        let rows: Vec<Vec<Rational>> = par::map_range(self.rows, |r| {
            let mut out = vec![Rational::zero(); cols];
            for (k, a) in self.row(r).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out.iter_mut().zip(rhs.row(k)) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
            out
        });
        Self::from_rows(cols, rows)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.cols {
            return Err(Error::shape(format!(
                "cannot stack {} columns on {}",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            let pivot_row: Vec<(usize, Rational)> = (c..cols)
                .filter(|&j| !self.get(r, j).is_zero())
                .map(|j| (j, self.get(r, j) * &inv))
                .collect();
            for (j, x) in &pivot_row {
                self.set(r, *j, x.clone());
            }
            let eliminate = |i: usize, row: &mut [Rational]| {
                if i == r || row[c].is_zero() {
                    return;
                }
                let factor = row[c].clone();
                for (j, x) in &pivot_row {
                    row[*j] -= &factor * x;
                }
            };
            if rows >= 64 {
                par::for_each_chunk_mut(&mut self.data, cols, eliminate);
            } else {
                self.data.chunks_mut(cols).enumerate().for_each(|(i, row)| eliminate(i, row));
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// A subspace of `ℚ^ambient_dim`, stored as the nonzero rows of a reduced row
/// echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The span of arbitrary vectors, normalized to reduced echelon form.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let m = RationalMatrix::from_rows(ambient_dim, vectors)?;
        let (reduced, pivots) = m.rref();
        let vectors = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
            pivots,
        })
    }

    /// Assembles a basis from vectors that already form the rows of a reduced
    /// echelon form, e.g. the union of echelon bases with disjoint supports.
    pub(crate) fn from_echelon_rows(ambient_dim: usize, mut vectors: Vec<Vec<Rational>>) -> Self {
        vectors.sort_by_key(|v| leading_index(v));
        let pivots = vectors
            .iter()
            .map(|v| leading_index(v).expect("echelon rows are nonzero"))
            .collect();
        SubspaceBasis {
            ambient_dim,
            vectors,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<Rational>> {
        self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The basis vectors as the rows of a matrix.
    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.ambient_dim, self.vectors.clone()).expect("consistent lengths")
    }

    /// Coordinates of `v` in this basis, or `None` when `v` lies outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        is_zero_vector(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Subtracts the pivot components of `v`, leaving its class modulo this
    /// subspace with zeros in every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (&p, b) in self.pivots.iter().zip(&self.vectors) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o -= &c * x;
                }
            }
        }
        out
    }
}

fn leading_index(v: &[Rational]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Basis of `{x : Mx = 0}`.
pub fn kernel_basis(m: &RationalMatrix) -> SubspaceBasis {
    let (reduced, pivots) = m.rref();
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                let x = reduced.get(r, f);
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect();
    SubspaceBasis::span(cols, vectors).expect("kernel vectors have ambient length")
}

/// Basis of the column space of `M`.
pub fn image_basis(m: &RationalMatrix) -> SubspaceBasis {
    let (reduced, pivots) = m.transpose().rref();
    let vectors = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
    SubspaceBasis {
        ambient_dim: m.rows(),
        vectors,
        pivots,
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

/// Vectors completing `b` to a basis of `z`, normalized against `b`.
///
/// Fails with [`Error::NotASubspace`] unless `b ⊆ z`.
pub fn quotient_representatives(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(Error::shape(format!(
            "ambient dimensions {} and {} differ",
            z.ambient_dim(),
            b.ambient_dim()
        )));
    }
    if let Some(i) = b.vectors().iter().position(|v| !z.contains(v)) {
        return Err(Error::NotASubspace(format!(
            "basis vector {i} of the smaller space is not in the larger one"
        )));
    }
    let reduced: Vec<Vec<Rational>> = z.vectors().iter().map(|v| b.reduce(v)).collect();
    let reps = SubspaceBasis::span(z.ambient_dim(), reduced)?;
    if reps.dim() != z.dim() - b.dim() {
        return Err(Error::Internal(format!(
            "quotient of dimension {} by {} produced {} representatives",
            z.dim(),
            b.dim(),
            reps.dim()
        )));
    }
    Ok(reps)
}

/// One solution of `Mx = b`, or `None` when the system is inconsistent.
pub fn solve(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows() {
        return Err(Error::shape(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            m.rows()
        )));
    }
    let cols = m.cols();
    let mut augmented = RationalMatrix::zeros(m.rows(), cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..cols {
            let x = m.get(r, c);
            if !x.is_zero() {
                augmented.set(r, c, x.clone());
            }
        }
        augmented.set(r, cols, rhs.clone());
    }
    let (reduced, pivots) = augmented.rref();
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = reduced.get(r, cols).clone();
    }
    Ok(Some(x))
}
