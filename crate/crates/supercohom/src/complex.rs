//! Finite complexes with explicit bases, their ranks, Betti numbers and
//! cohomology representatives.
//!
//! A complex may be materialized ([`BasedComplex`]) or implicit: anything
//! implementing [`Complex`] can produce the image of one basis vector on
//! demand. Basis vectors carry a block key; the differential never mixes
//! blocks, so ranks are computed block by block.

use crate::fplinalg::{sparse_axpy, Echelon, Insert, PrimeField, SparseVec};
use crate::grading::Parity;
use crate::parallel::par_map;
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// d: C^n -> C^{n+1}
    Cochain,
    /// d: C_n -> C_{n-1}
    Chain,
}

pub trait Complex: Sync {
    fn field(&self) -> PrimeField;
    fn direction(&self) -> Direction;
    /// Degrees 0..=max_degree have a basis.
    fn max_degree(&self) -> usize;
    fn dim(&self, n: usize) -> usize;
    /// Image of basis vector `j` of degree `n` under the differential.
    fn column(&self, n: usize, j: usize) -> SparseVec;
    /// Differential-invariant block label of basis vector `j` in degree `n`.
    fn block(&self, _n: usize, _j: usize) -> u64 {
        0
    }
}

/// A complex whose basis vectors carry filtration levels; the
/// differential never lowers the level of a cochain.
pub trait Filtered: Complex {
    fn level(&self, n: usize, j: usize) -> i64;
    /// Parity of basis vector `j` of degree `n`.
    fn parity(&self, _n: usize, _j: usize) -> Parity {
        Parity::Even
    }
}

/// Stable hash of a weight vector together with a parity bit.
pub fn block_key(weights: &[i64], parity_bit: u8) -> u64 {
    let mut h = DefaultHasher::new();
    weights.hash(&mut h);
    parity_bit.hash(&mut h);
    h.finish()
}

/// Indices of degree `n` grouped by block, in a deterministic order.
pub fn blocks_of<C: Complex + ?Sized>(c: &C, n: usize) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for j in 0..c.dim(n) {
        groups.entry(c.block(n, j)).or_default().push(j);
    }
    groups.into_values().collect()
}

/// Rank of the differential leaving degree `n`.
pub fn differential_rank<C: Complex + ?Sized>(c: &C, n: usize) -> usize {
    if n > c.max_degree() || (c.direction() == Direction::Chain && n == 0) {
        return 0;
    }
    let f = c.field();
    let blocks = blocks_of(c, n);
    par_map(&blocks, |idx| {
        let mut e = Echelon::new(f);
        for &j in idx {
            e.insert(c.column(n, j));
        }
        e.rank()
    })
    .into_iter()
    .sum()
}

/// Cohomology (or homology) dimensions in degrees `0..=top`.
///
/// For a cochain complex `top` may equal `max_degree`; for a chain complex
/// the differential out of `top + 1` must be available, so `top < max_degree`.
pub fn betti_numbers<C: Complex + ?Sized>(c: &C, top: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=top + 1).map(|n| if n <= c.max_degree() { differential_rank(c, n) } else { 0 }).collect();
    (0..=top)
        .map(|n| match c.direction() {
            Direction::Cochain => c.dim(n) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 },
            Direction::Chain => c.dim(n) - ranks[n] - ranks[n + 1],
        })
        .collect()
}

/// Cohomology dimensions split by parity, `[even, odd]`, in degrees `0..=top`.
///
/// Requires a parity-preserving differential whose blocks are parity-pure.
pub fn betti_by_parity<C: Filtered + ?Sized>(c: &C, top: usize) -> Vec<[usize; 2]> {
    assert_eq!(c.direction(), Direction::Cochain, "betti_by_parity expects a cochain complex");
    let f = c.field();
    let rank_split = |n: usize| -> [usize; 2] {
        if n > c.max_degree() {
            return [0, 0];
        }
        let blocks = blocks_of(c, n);
        let ranks = par_map(&blocks, |idx| {
            let mut e = Echelon::new(f);
            for &j in idx {
                e.insert(c.column(n, j));
            }
            (c.parity(n, idx[0]).bit() as usize, e.rank())
        });
        let mut out = [0, 0];
        for (b, r) in ranks {
            out[b] += r;
        }
        out
    };
    let ranks: Vec<[usize; 2]> = (0..=top).map(rank_split).collect();
    (0..=top.min(c.max_degree()))
        .map(|n| {
            let mut dims = [0usize; 2];
            for j in 0..c.dim(n) {
                dims[c.parity(n, j).bit() as usize] += 1;
            }
            std::array::from_fn(|b| dims[b] - ranks[n][b] - if n > 0 { ranks[n - 1][b] } else { 0 })
        })
        .collect()
}

/// True when the composite of two consecutive differentials out of `n` vanishes.
pub fn square_is_zero<C: Complex + ?Sized>(c: &C, n: usize) -> bool {
    let f = c.field();
    let next = match c.direction() {
        Direction::Cochain => n + 1,
        Direction::Chain => match n.checked_sub(1) {
            Some(m) => m,
            None => return true,
        },
    };
    if next > c.max_degree() || (c.direction() == Direction::Chain && next == 0) {
        return true;
    }
    let results = par_map(&(0..c.dim(n)).collect::<Vec<_>>(), |&j| {
        let mut acc = SparseVec::new();
        for (i, coef) in c.column(n, j) {
            acc = sparse_axpy(f, &acc, coef, &c.column(next, i));
        }
        acc.is_empty()
    });
    results.into_iter().all(|b| b)
}

/// A complex stored column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedComplex {
    pub field: PrimeField,
    pub direction: Direction,
    /// `columns[n][j]`: image of basis vector j of degree n.
    pub columns: Vec<Vec<SparseVec>>,
    /// `blocks[n][j]`; empty inner vectors mean a single block.
    pub blocks: Vec<Vec<u64>>,
}

impl BasedComplex {
    pub fn new(field: PrimeField, direction: Direction, columns: Vec<Vec<SparseVec>>) -> Self {
        let blocks = vec![Vec::new(); columns.len()];
        BasedComplex { field, direction, columns, blocks }
    }

    /// Materialize any complex in degrees 0..=max_degree.
    pub fn materialize<C: Complex + ?Sized>(c: &C) -> Self {
        let columns = (0..=c.max_degree()).map(|n| par_map(&(0..c.dim(n)).collect::<Vec<_>>(), |&j| c.column(n, j))).collect();
        let blocks = (0..=c.max_degree()).map(|n| (0..c.dim(n)).map(|j| c.block(n, j)).collect()).collect();
        BasedComplex { field: c.field(), direction: c.direction(), columns, blocks }
    }
}

impl Complex for BasedComplex {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn direction(&self) -> Direction {
        self.direction
    }
    fn max_degree(&self) -> usize {
        self.columns.len().saturating_sub(1)
    }
    fn dim(&self, n: usize) -> usize {
        self.columns.get(n).map_or(0, |c| c.len())
    }
    fn column(&self, n: usize, j: usize) -> SparseVec {
        self.columns[n][j].clone()
    }
    fn block(&self, n: usize, j: usize) -> u64 {
        self.blocks.get(n).and_then(|b| b.get(j)).copied().unwrap_or(0)
    }
}

/// Explicit cohomology of one degree of a cochain complex.
#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    pub degree: usize,
    /// Cocycles whose classes form a basis of H^n.
    pub representatives: Vec<SparseVec>,
    reducer: Echelon,
    boundary_labels: usize,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of a cocycle `v` in the representative
    /// basis, or `None` when `v` is not in Z^n.
    pub fn coordinates(&self, v: &[(usize, u32)]) -> Option<Vec<u32>> {
        let combo = self.reducer.express(v.to_vec())?;
        let mut out = vec![0u32; self.dim()];
        for (label, c) in combo {
            if label >= self.boundary_labels {
                out[label - self.boundary_labels] = c;
            }
        }
        Some(out)
    }

    pub fn is_coboundary(&self, v: &[(usize, u32)]) -> bool {
        matches!(self.coordinates(v), Some(c) if c.iter().all(|&x| x == 0))
    }
}

/// Cocycles Z^n as explicit vectors, block by block.
pub fn cocycles<C: Complex + ?Sized>(c: &C, n: usize) -> Vec<SparseVec> {
    let f = c.field();
    let blocks = blocks_of(c, n);
    par_map(&blocks, |idx| {
        let mut e = Echelon::with_tracking(f);
        let mut kernel = Vec::new();
        for (label, &j) in idx.iter().enumerate() {
            if let Insert::Dependent(rel) = e.insert_tracked(c.column(n, j), label) {
                let mut v: SparseVec = rel.into_iter().map(|(l, coef)| (idx[l], coef)).collect();
                v.sort_unstable();
                kernel.push(v);
            }
        }
        kernel
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Cohomology of a cochain complex in degree `n`, with representatives.
pub fn cohomology_basis<C: Complex + ?Sized>(c: &C, n: usize) -> CohomologyBasis {
    assert_eq!(c.direction(), Direction::Cochain, "cohomology_basis expects a cochain complex");
    let f = c.field();
    let boundaries: Vec<SparseVec> = if n == 0 { Vec::new() } else { (0..c.dim(n - 1)).map(|j| c.column(n - 1, j)).collect() };
    let mut reducer = Echelon::with_tracking(f);
    let mut label = 0;
    for b in boundaries {
        if reducer.insert_tracked(b, label) == Insert::Independent {
            label += 1;
        }
    }
    // Labels of dependent boundary vectors are never used: relabel densely.
    let boundary_labels = label;
    let mut representatives = Vec::new();
    for z in cocycles(c, n) {
        if reducer.insert_tracked(z.clone(), boundary_labels + representatives.len()) == Insert::Independent {
            representatives.push(z);
        }
    }
    CohomologyBasis { degree: n, representatives, reducer, boundary_labels }
}
