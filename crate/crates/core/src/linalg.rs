//! Dense exact matrices: row reduction, kernels, linear solving.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// Builds a `len x cols.len()` matrix whose columns are the given vectors.
    pub fn from_cols(len: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), len, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &F) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend(self.row(i).iter().cloned());
        }
        Mat { rows: idx.len(), cols: self.cols, data }
    }

    /// Reduced row echelon form together with the strictly increasing pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
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
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv().expect("nonzero pivot");
            for j in c..cols {
                let v = self.data[r * cols + j].clone();
                if !v.is_zero() {
                    self.data[r * cols + j] = v * inv.clone();
                }
            }
            let pivot_row: Vec<F> = self.data[r * cols..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        let d = f.clone() * pivot_row[j].clone();
                        self.data[i * cols + j] -= d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the right null space.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (jj, &f) in free.iter().enumerate() {
            k[(f, jj)] = F::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                k[(pc, jj)] = -r[(pi, f)].clone();
            }
        }
        k
    }

    /// Rows form a basis of the left null space `{y : y A = 0}`.
    pub fn left_kernel_basis(&self) -> Self {
        self.transpose().kernel_basis().transpose()
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>> {
        if self.rows != b.rows {
            return Err(Error::Shape(format!(
                "solve: {} equations but right-hand side has {} rows",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (pi, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(pc, j)] = r[(pi, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn solve_vec(&self, b: &[F]) -> Option<Vec<F>> {
        let bm = Self::from_cols(b.len(), &[b.to_vec()]);
        self.solve(&bm).ok().flatten().map(|x| x.col(0))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Self::identity(n)).ok()??;
        if self.rank() == n {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Indices of a maximal set of independent columns, chosen greedily from the left.
    pub fn independent_cols(&self) -> Vec<usize> {
        self.rref().1
    }

    /// A basis (as columns) of the column space, made of original columns.
    pub fn column_space(&self) -> Self {
        self.select_cols(&self.independent_cols())
    }

    /// Extends the column space of `self` to all of `F^rows` by standard basis
    /// vectors; returns just the added vectors as columns.
    pub fn complement_basis(&self) -> Self {
        let n = self.rows;
        let full = self.hstack(&Self::identity(n));
        let piv = full.independent_cols();
        let extra: Vec<usize> = piv.into_iter().filter(|&p| p >= self.cols).collect();
        full.select_cols(&extra)
    }

    /// Columns spanning the intersection of the column spaces of `self` and `other`.
    pub fn intersect_cols(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let a = self.column_space();
        let b = other.column_space();
        let k = a.hstack(&b.scale(&-F::one())).kernel_basis();
        let coeff = k.block(0, 0, a.cols, k.cols);
        (&a * &coeff).column_space()
    }

    /// Characteristic polynomial `det(xI - A)` as coefficients, lowest degree first.
    pub fn charpoly(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        // Reduce to upper Hessenberg form by similarity transforms.
        for c in 0..n.saturating_sub(2) {
            let Some(p) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
                continue;
            };
            if p != c + 1 {
                for j in 0..n {
                    h.data.swap(p * n + j, (c + 1) * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + p, i * n + c + 1);
                }
            }
            let piv_inv = h[(c + 1, c)].inv().unwrap();
            for i in c + 2..n {
                let f = h[(i, c)].clone() * piv_inv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let d = f.clone() * h[(c + 1, j)].clone();
                    h[(i, j)] -= d;
                }
                for r in 0..n {
                    let d = f.clone() * h[(r, i)].clone();
                    h[(r, c + 1)] += d;
                }
            }
        }
        // Recurrence over leading principal submatrices of the Hessenberg form.
        let mut polys: Vec<Vec<F>> = vec![vec![F::one()]];
        for k in 1..=n {
            let mut pk = vec![F::zero(); k + 1];
            let prev = &polys[k - 1];
            for (d, c) in prev.iter().enumerate() {
                pk[d + 1] += c.clone();
                pk[d] -= h[(k - 1, k - 1)].clone() * c.clone();
            }
            let mut prod = F::one();
            for i in (1..k).rev() {
                prod *= h[(i, i - 1)].clone();
                if prod.is_zero() {
                    break;
                }
                let coef = prod.clone() * h[(i - 1, k - 1)].clone();
                for (d, c) in polys[i - 1].iter().enumerate() {
                    pk[d] -= coef.clone() * c.clone();
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }
}

impl<F> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Mat<F> {
    type Output = Mat<F>;
    fn mul(self, rhs: &Mat<F>) -> Mat<F> {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl<F: Field> Add for &Mat<F> {
    type Output = Mat<F>;
    fn add(self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!(self.shape(), rhs.shape(), "matrix shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<F: Field> Sub for &Mat<F> {
    type Output = Mat<F>;
    fn sub(self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!(self.shape(), rhs.shape(), "matrix shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<F: Field> Neg for &Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_repr()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Summary of [`random_consistency`].
#[derive(Clone, Debug)]
pub struct LinalgCheck {
    pub matrices: usize,
    pub failures: Vec<String>,
}

impl LinalgCheck {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks rank-nullity, kernels, left kernels, rref idempotence and solving
/// on `count` seeded random matrices of low rank.
pub fn random_consistency<F: Field>(count: usize, max_dim: usize, seed: u64) -> LinalgCheck {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for k in 0..count {
        let (m, n) = (rng.gen_range(1..=max_dim), rng.gen_range(1..=max_dim));
        let r = rng.gen_range(0..=m.min(n));
        let b = Mat::new(m, r, (0..m * r).map(|_| F::random(&mut rng)).collect());
        let c = Mat::new(r, n, (0..r * n).map(|_| F::random(&mut rng)).collect());
        let a = if r == 0 { Mat::zeros(m, n) } else { &b * &c };
        let rank = a.rank();
        let ker = a.kernel_basis();
        let left = a.left_kernel_basis();
        let mut fail = |what: &str| failures.push(format!("matrix {k} ({m}x{n}): {what}"));
        if rank + ker.cols() != n {
            fail("rank + nullity != columns");
        }
        if ker.cols() > 0 && (!(&a * &ker).is_zero() || ker.rank() != ker.cols()) {
            fail("kernel basis");
        }
        if rank + left.rows() != m || (left.rows() > 0 && !(&left * &a).is_zero()) {
            fail("left kernel basis");
        }
        if rank != a.transpose().rank() || rank > r {
            fail("row rank != column rank");
        }
        let (rr, _) = a.rref();
        if rr.rref().0 != rr {
            fail("rref not idempotent");
        }
        let x = Mat::new(n, 1, (0..n).map(|_| F::random(&mut rng)).collect());
        let y = &a * &x;
        match a.solve(&y) {
            Ok(Some(z)) if &a * &z == y => {}
            _ => fail("solve"),
        }
    }
    LinalgCheck { matrices: count, failures }
}
