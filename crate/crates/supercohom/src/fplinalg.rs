//! Arithmetic in the prime field F_p and exact linear algebra over it.
//!
//! Vectors are either dense (`Vec<u32>` of residues) or sparse
//! (`SparseVec`, sorted `(index, value)` pairs with nonzero values).
//! Matrices are stored column-wise when sparse and row-major when dense;
//! [`MatrixFp`] picks one of the two from the fill ratio.

use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("subspace B is not contained in span(Z): vector {0} of B lies outside")]
    NotContained(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// The prime field F_p for an odd prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        if p == 2 {
            return Err(LinalgError::CharacteristicTwo);
        }
        if !is_prime(p) || p > (1 << 31) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(self, a: u32) -> Result<u32, LinalgError> {
        let a = a % self.p;
        if a == 0 {
            return Err(LinalgError::ZeroInverse);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// The residue representing 1/2.
    #[inline]
    pub fn half(self) -> u32 {
        self.p.div_ceil(2)
    }

    /// `+1` or `-1` as a residue.
    #[inline]
    pub fn sign(self, negative: bool) -> u32 {
        if negative {
            self.p - 1
        } else {
            1
        }
    }

    /// Binomial coefficient reduced mod p (Lucas' theorem).
    pub fn binom(self, mut n: u64, mut k: u64) -> u32 {
        if k > n {
            return 0;
        }
        let p = self.p as u64;
        let mut acc = 1u32;
        while n > 0 || k > 0 {
            let (ni, ki) = (n % p, k % p);
            if ki > ni {
                return 0;
            }
            acc = self.mul(acc, self.small_binom(ni, ki));
            n /= p;
            k /= p;
        }
        acc
    }

    fn small_binom(self, n: u64, k: u64) -> u32 {
        let mut num = 1u32;
        let mut den = 1u32;
        for i in 0..k {
            num = self.mul(num, ((n - i) % self.p as u64) as u32);
            den = self.mul(den, ((i + 1) % self.p as u64) as u32);
        }
        self.mul(num, self.inv(den).expect("k < p"))
    }

    /// Symmetric representative in (-p/2, p/2], handy for display.
    pub fn centered(self, a: u32) -> i64 {
        let a = a as i64;
        if a > self.p as i64 / 2 {
            a - self.p as i64
        } else {
            a
        }
    }
}

/// Free-standing form of [`PrimeField::inv`].
pub fn field_inverse(a: u32, f: PrimeField) -> Result<u32, LinalgError> {
    f.inv(a)
}

/// Sparse vector: strictly increasing indices, nonzero residues.
pub type SparseVec = Vec<(usize, u32)>;

/// `a + c*b` for sparse vectors.
pub fn sparse_axpy(f: PrimeField, a: &[(usize, u32)], c: u32, b: &[(usize, u32)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f.mul(c, b[j].1);
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.add(a[i].1, f.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Collect unsorted `(index, value)` pairs into a normalized sparse vector.
pub fn sparse_from_pairs(f: PrimeField, mut pairs: Vec<(usize, u32)>) -> SparseVec {
    pairs.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(pairs.len());
    for (i, v) in pairs {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = f.add(last.1, v),
            _ => out.push((i, v % f.p())),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

pub fn sparse_scale(f: PrimeField, v: &[(usize, u32)], c: u32) -> SparseVec {
    if c == 0 {
        return Vec::new();
    }
    v.iter().map(|&(i, x)| (i, f.mul(x, c))).collect()
}

pub fn dense_to_sparse(v: &[u32]) -> SparseVec {
    v.iter().enumerate().filter(|e| *e.1 != 0).map(|(i, &x)| (i, x)).collect()
}

pub fn sparse_to_dense(v: &[(usize, u32)], len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for &(i, x) in v {
        out[i] = x;
    }
    out
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(f: PrimeField, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, f.reduce(x));
            }
        }
        Ok(m)
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for &(i, x) in c {
                m.set(i, j, x);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, f: PrimeField, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % f.p() as u64)
                    as u32
            })
            .collect()
    }

    pub fn mul(&self, f: PrimeField, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, f: PrimeField, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        DenseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: PrimeField, c: u32) -> DenseMatrix {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        DenseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Reduced row echelon form; pivots chosen as the first nonzero entry
    /// scanning columns left to right.
    pub fn rref(&self, f: PrimeField) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }
}

/// Result of [`DenseMatrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: DenseMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel basis: one vector per free column, free variable set to 1.
    pub fn kernel(&self, f: PrimeField) -> Vec<Vec<u32>> {
        let cols = self.matrix.cols();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; cols];
            for &c in &self.pivots {
                v[c] = true;
            }
            v
        };
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; cols];
                v[free] = 1;
                for (r, &pc) in self.pivots.iter().enumerate() {
                    v[pc] = f.neg(self.matrix.get(r, free));
                }
                v
            })
            .collect()
    }
}

/// Column-major sparse matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<SparseVec>) -> Self {
        SparseMatrix { rows, columns }
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.columns.len()
    }
    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }
    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }
    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_columns(self.rows, &self.columns)
    }
}

/// Tunables for the linear algebra layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinalgConfig {
    /// Matrices with fill ratio at or below this value are stored sparse.
    pub sparse_fill_threshold: f64,
}

impl Default for LinalgConfig {
    fn default() -> Self {
        LinalgConfig { sparse_fill_threshold: 0.25 }
    }
}

/// A matrix over F_p in whichever representation suits its fill ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixFp {
    Dense(DenseMatrix),
    Sparse(SparseMatrix),
}

impl MatrixFp {
    pub fn from_dense(m: DenseMatrix, cfg: &LinalgConfig) -> Self {
        let cells = (m.rows() * m.cols()).max(1);
        if (m.nonzeros() as f64) / (cells as f64) <= cfg.sparse_fill_threshold {
            let cols = (0..m.cols()).map(|j| dense_to_sparse(&m.column(j))).collect();
            MatrixFp::Sparse(SparseMatrix::new(m.rows(), cols))
        } else {
            MatrixFp::Dense(m)
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>, cfg: &LinalgConfig) -> Self {
        let cells = (rows * columns.len()).max(1);
        let nnz: usize = columns.iter().map(|c| c.len()).sum();
        if (nnz as f64) / (cells as f64) <= cfg.sparse_fill_threshold {
            MatrixFp::Sparse(SparseMatrix::new(rows, columns))
        } else {
            MatrixFp::Dense(DenseMatrix::from_columns(rows, &columns))
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            MatrixFp::Dense(m) => m.rows(),
            MatrixFp::Sparse(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            MatrixFp::Dense(m) => m.cols(),
            MatrixFp::Sparse(m) => m.cols(),
        }
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self, MatrixFp::Sparse(_))
    }

    pub fn to_dense(&self) -> DenseMatrix {
        match self {
            MatrixFp::Dense(m) => m.clone(),
            MatrixFp::Sparse(m) => m.to_dense(),
        }
    }

    pub fn mul_vec(&self, f: PrimeField, v: &[u32]) -> Vec<u32> {
        match self {
            MatrixFp::Dense(m) => m.mul_vec(f, v),
            MatrixFp::Sparse(m) => {
                let mut out = vec![0u32; m.rows()];
                for (j, col) in m.columns().iter().enumerate() {
                    if v[j] == 0 {
                        continue;
                    }
                    for &(i, x) in col {
                        out[i] = f.add(out[i], f.mul(x, v[j]));
                    }
                }
                out
            }
        }
    }
}

/// Rank, kernel basis and image basis of a matrix.
#[derive(Debug, Clone)]
pub struct RankKernelImage {
    pub rank: usize,
    pub kernel: Vec<Vec<u32>>,
    pub image: Vec<Vec<u32>>,
}

pub fn rank_kernel_image(m: &MatrixFp, f: PrimeField) -> RankKernelImage {
    match m {
        MatrixFp::Dense(d) => {
            let rr = d.rref(f);
            let image = rr.pivots.iter().map(|&c| d.column(c)).collect();
            RankKernelImage { rank: rr.rank(), kernel: rr.kernel(f), image }
        }
        MatrixFp::Sparse(s) => {
            let mut ech = Echelon::with_tracking(f);
            let mut kernel = Vec::new();
            let mut image = Vec::new();
            for (j, col) in s.columns().iter().enumerate() {
                match ech.insert_tracked(col.clone(), j) {
                    Insert::Independent => image.push(sparse_to_dense(col, s.rows())),
                    Insert::Dependent(combo) => kernel.push(sparse_to_dense(&combo, s.cols())),
                }
            }
            RankKernelImage { rank: image.len(), kernel, image }
        }
    }
}

/// Rank only; avoids building the kernel.
pub fn rank(m: &MatrixFp, f: PrimeField) -> usize {
    match m {
        MatrixFp::Dense(d) => d.rref(f).rank(),
        MatrixFp::Sparse(s) => rank_of_columns(f, s.columns().iter().cloned()),
    }
}

/// Rank of the span of a stream of sparse columns.
pub fn rank_of_columns(f: PrimeField, cols: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new(f);
    cols.into_iter().filter(|c| ech.insert(c.clone())).count()
}

/// Solve `M x = b`. Among all solutions the one with every free variable
/// equal to zero (with respect to the reduced row echelon form) is returned.
pub fn solve_linear(m: &MatrixFp, b: &[u32], f: PrimeField) -> Result<Option<Vec<u32>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    let d = m.to_dense();
    let cols = d.cols();
    let mut aug = DenseMatrix::zero(d.rows(), cols + 1);
    for i in 0..d.rows() {
        for j in 0..cols {
            aug.set(i, j, d.get(i, j));
        }
        aug.set(i, cols, b[i] % f.p());
    }
    let rr = aug.rref(f);
    if rr.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![0u32; cols];
    for (r, &c) in rr.pivots.iter().enumerate() {
        x[c] = rr.matrix.get(r, cols);
    }
    Ok(Some(x))
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insert {
    Independent,
    /// The vector was dependent; the payload expresses a kernel relation
    /// among inserted labels (including the new one with coefficient 1).
    Dependent(SparseVec),
}

/// Incrementally built echelon basis of sparse vectors.
///
/// Each stored vector is normalized so that its leading (smallest) index
/// carries coefficient 1, and leading indices are pairwise distinct. With
/// tracking enabled, every stored vector remembers which combination of
/// inserted labels produced it.
#[derive(Debug, Clone)]
pub struct Echelon {
    f: PrimeField,
    pivot_of: HashMap<usize, usize>,
    vectors: Vec<SparseVec>,
    combos: Option<Vec<SparseVec>>,
}

impl Echelon {
    pub fn new(f: PrimeField) -> Self {
        Echelon { f, pivot_of: HashMap::new(), vectors: Vec::new(), combos: None }
    }

    pub fn with_tracking(f: PrimeField) -> Self {
        Echelon { combos: Some(Vec::new()), ..Self::new(f) }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn is_pivot(&self, index: usize) -> bool {
        self.pivot_of.contains_key(&index)
    }

    /// Reduce until the leading index is not a pivot; returns the remainder.
    pub fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some(&(lead, c)) = v.first() {
            match self.pivot_of.get(&lead) {
                Some(&k) => v = sparse_axpy(self.f, &v, self.f.neg(c), &self.vectors[k]),
                None => break,
            }
        }
        v
    }

    /// Fully reduce: eliminate every pivot index from `v`.
    pub fn reduce_full(&self, v: SparseVec) -> SparseVec {
        self.reduce_full_tracked(v, None).0
    }

    fn reduce_full_tracked(&self, mut v: SparseVec, mut combo: Option<SparseVec>) -> (SparseVec, Option<SparseVec>) {
        let mut pos = 0;
        while pos < v.len() {
            let (idx, c) = v[pos];
            if let Some(&k) = self.pivot_of.get(&idx) {
                let factor = self.f.neg(c);
                v = sparse_axpy(self.f, &v, factor, &self.vectors[k]);
                if let (Some(cb), Some(all)) = (combo.as_mut(), self.combos.as_ref()) {
                    *cb = sparse_axpy(self.f, cb, factor, &all[k]);
                }
            } else {
                pos += 1;
            }
        }
        (v, combo)
    }

    pub fn contains(&self, v: &[(usize, u32)]) -> bool {
        self.reduce_leading(v.to_vec()).is_empty()
    }

    /// Insert `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce_leading(v);
        self.push_reduced(r, None)
    }

    /// Insert with a label; requires tracking.
    pub fn insert_tracked(&mut self, v: SparseVec, label: usize) -> Insert {
        assert!(self.combos.is_some(), "tracking disabled");
        let (r, combo) = self.reduce_leading_tracked(v, vec![(label, 1)]);
        if r.is_empty() {
            Insert::Dependent(combo)
        } else {
            self.push_reduced(r, Some(combo));
            Insert::Independent
        }
    }

    fn reduce_leading_tracked(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        let all = self.combos.as_ref().expect("tracking");
        while let Some(&(lead, c)) = v.first() {
            match self.pivot_of.get(&lead) {
                Some(&k) => {
                    let factor = self.f.neg(c);
                    v = sparse_axpy(self.f, &v, factor, &self.vectors[k]);
                    combo = sparse_axpy(self.f, &combo, factor, &all[k]);
                }
                None => break,
            }
        }
        (v, combo)
    }

    /// Express `v` as a combination of inserted labels, if it lies in the span.
    pub fn express(&self, v: SparseVec) -> Option<SparseVec> {
        assert!(self.combos.is_some(), "tracking disabled");
        let (r, combo) = self.reduce_full_tracked(v, Some(Vec::new()));
        if r.is_empty() {
            combo.map(|c| sparse_scale(self.f, &c, self.f.neg(1)))
        } else {
            None
        }
    }

    fn push_reduced(&mut self, r: SparseVec, combo: Option<SparseVec>) -> bool {
        let Some(&(lead, c)) = r.first() else {
            return false;
        };
        let inv = self.f.inv(c).expect("nonzero lead");
        let r = sparse_scale(self.f, &r, inv);
        if let Some(all) = self.combos.as_mut() {
            all.push(sparse_scale(self.f, &combo.unwrap_or_default(), inv));
        }
        self.pivot_of.insert(lead, self.vectors.len());
        self.vectors.push(r);
        true
    }
}

/// A subquotient Z/B with explicit coset representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubquotientBasis {
    pub ambient_dim: usize,
    pub z: Vec<Vec<u32>>,
    pub b: Vec<Vec<u32>>,
    pub representatives: Vec<Vec<u32>>,
}

impl SubquotientBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// Coset representatives of span(Z)/span(B), chosen greedily from Z in
/// input order.
pub fn subquotient(ambient_dim: usize, z: &[Vec<u32>], b: &[Vec<u32>], f: PrimeField) -> Result<SubquotientBasis, LinalgError> {
    for v in z.iter().chain(b) {
        if v.len() != ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
    }
    let mut zspan = Echelon::new(f);
    for v in z {
        zspan.insert(dense_to_sparse(v));
    }
    for (k, v) in b.iter().enumerate() {
        if !zspan.contains(&dense_to_sparse(v)) {
            return Err(LinalgError::NotContained(k));
        }
    }
    let mut acc = Echelon::new(f);
    for v in b {
        acc.insert(dense_to_sparse(v));
    }
    let representatives = z.iter().filter(|v| acc.insert(dense_to_sparse(v))).cloned().collect();
    Ok(SubquotientBasis { ambient_dim, z: z.to_vec(), b: b.to_vec(), representatives })
}
