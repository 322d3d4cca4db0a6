//! Exact dense linear algebra over the rationals.
//!
//! All computations use arbitrary-precision rational arithmetic; no rounding
//! ever occurs. The elimination strategy is plain rational Gaussian
//! elimination with the leftmost-nonzero-pivot convention, which fixes a
//! deterministic normal form for kernels: every kernel basis vector carries
//! a 1 in its own free column and 0 in the free columns of the others.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator; zero is 0/1.
pub type Rat = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics if `den == 0`.
pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Dense matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let v = out.at(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    pub fn commutator(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Reduced row echelon form together with the pivot columns.
    /// Pivots are chosen leftmost-first and, within a column, the first
    /// not-yet-used row with a nonzero entry.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(hit) = (pr..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if hit != pr {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, hit * m.cols + j);
                }
            }
            let inv = m.at(pr, col).recip();
            for j in col..m.cols {
                let v = m.at(pr, j) * &inv;
                m.set(pr, j, v);
            }
            for r in 0..m.rows {
                if r == pr || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j) - &factor * m.at(pr, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (m, pivots)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}` in echelon normal form:
    /// one vector per free column, carrying 1 in that column and 0 in all
    /// other free columns. Ordered by free column index.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        self.kernel_basis_with_free_cols().0
    }

    /// Kernel basis together with the free column of each basis vector.
    pub fn kernel_basis_with_free_cols(&self) -> (Vec<Vec<Rat>>, Vec<usize>) {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        let mut free_cols = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, free).clone();
            }
            basis.push(v);
            free_cols.push(free);
        }
        (basis, free_cols)
    }

    /// Solves `M x = b` exactly, returning one solution if any exists.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent system
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.at(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Incrementally maintained reduced row echelon space. Used wherever only a
/// rank or a span-membership test is needed, so large constraint systems
/// never have to be materialized in full.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    cols: usize,
    // rows sorted by pivot column; each row is normalized to pivot 1 and
    // reduced against all the others
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows, returning the residual.
    pub fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (vj, rj) in v.iter_mut().zip(row) {
                if !rj.is_zero() {
                    *vj -= &factor * rj;
                }
            }
        }
        v
    }

    /// Inserts a vector; returns true when it was independent of the span.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // back-reduce existing rows against the new one
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (rj, vj) in row.iter_mut().zip(&v) {
                if !vj.is_zero() {
                    *rj -= &factor * vj;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// True when `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: Vec<Rat>) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }
}
