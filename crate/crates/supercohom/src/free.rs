//! Complexes of free modules over an enveloping algebra, given by the
//! differential of each free generator, and the two k-linear complexes
//! derived from them: V ⊗ (generators) and Hom(generators, M).

use crate::complex::{block_key, BasedComplex, Complex, Direction, Filtered};
use crate::env::{EnvAlgebra, EnvElement, PbwMonomial, RestrictedEnvelope};
use crate::fplinalg::{sparse_axpy, sparse_from_pairs, DenseMatrix, PrimeField, SparseVec};
use crate::grading::{Parity, Sign};
use crate::liesuper::{SupermoduleSpec, WeightGrading};
use crate::parallel::par_map_range;
use std::collections::HashMap;

/// One term `c · u ⊗ g` of a differential: target generator index, PBW
/// coefficient monomial and scalar.
pub type FreeTerm = (usize, PbwMonomial, u32);

/// Free generators of one degree with their differentials.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FreeDegree {
    pub parity: Vec<Parity>,
    pub weight: Vec<Vec<i64>>,
    /// Filtration level of each generator.
    pub level: Vec<usize>,
    pub diff: Vec<Vec<FreeTerm>>,
}

impl FreeDegree {
    pub fn len(&self) -> usize {
        self.parity.len()
    }
    pub fn is_empty(&self) -> bool {
        self.parity.is_empty()
    }
}

/// A chain complex of free left modules in degrees `0..degrees.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeComplex {
    pub field: PrimeField,
    /// Number of even basis elements of L (fixes PBW parities).
    pub s: usize,
    pub degrees: Vec<FreeDegree>,
}

impl FreeComplex {
    pub fn max_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// d(g) as a combination of coefficient-generator pairs.
    pub fn differential(&self, n: usize, g: usize) -> &[FreeTerm] {
        &self.degrees[n].diff[g]
    }

    /// Check d∘d = 0 on every generator using the given algebra for
    /// coefficient products. Returns the first failing (degree, generator).
    pub fn check_square_zero(&self, env: &EnvAlgebra) -> Result<(), (usize, usize)> {
        let f = self.field;
        for n in 2..self.degrees.len() {
            let bad = par_map_range(self.degrees[n].len(), |g| {
                let mut acc: HashMap<usize, EnvElement> = HashMap::new();
                for (t, u, c) in self.differential(n, g) {
                    let ue = EnvElement::from_monomial(u.clone()).scaled(f, *c);
                    for (t2, u2, c2) in self.differential(n - 1, *t) {
                        let prod = env.mul_monomial(&ue, u2).scaled(f, *c2);
                        acc.entry(*t2).or_default().add_scaled(f, &prod, 1);
                    }
                }
                acc.values().any(|e| !e.is_zero())
            });
            if let Some(g) = bad.iter().position(|&b| b) {
                return Err((n, g));
            }
        }
        Ok(())
    }

    /// The k-linear chain complex V ⊗ (generators).
    pub fn over_v<'a>(&'a self, v: &'a RestrictedEnvelope, weights: &WeightGrading) -> TensorOverV<'a> {
        TensorOverV::new(self, v, weights)
    }

    /// The cochain complex Hom(free, M) with ∂f = (-1)^n f∘d.
    pub fn hom(&self, module: &SupermoduleSpec, weights: &WeightGrading) -> HomComplex {
        HomComplex::new(self, module, weights)
    }
}

/// V ⊗_k span(generators) with d(v ⊗ g) = Σ c (v u) ⊗ g'.
#[derive(Debug)]
pub struct TensorOverV<'a> {
    free: &'a FreeComplex,
    v: &'a RestrictedEnvelope,
    resolved: Vec<Vec<Vec<(usize, usize, u32)>>>,
    v_weight: Vec<Vec<i64>>,
}

impl<'a> TensorOverV<'a> {
    fn new(free: &'a FreeComplex, v: &'a RestrictedEnvelope, weights: &WeightGrading) -> Self {
        let resolved = free
            .degrees
            .iter()
            .map(|d| {
                d.diff
                    .iter()
                    .map(|terms| {
                        terms
                            .iter()
                            .map(|(t, u, c)| (*t, v.index_of(u).expect("coefficient is a V-normal monomial"), *c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let v_weight = v.basis().iter().map(|m| weights.of_pbw(m)).collect();
        TensorOverV { free, v, resolved, v_weight }
    }

    /// Index of v_i ⊗ g in degree n.
    pub fn index(&self, g: usize, vi: usize) -> usize {
        g * self.v.dim() + vi
    }
}

impl Complex for TensorOverV<'_> {
    fn field(&self) -> PrimeField {
        self.free.field
    }
    fn direction(&self) -> Direction {
        Direction::Chain
    }
    fn max_degree(&self) -> usize {
        self.free.max_degree()
    }
    fn dim(&self, n: usize) -> usize {
        self.free.degrees.get(n).map_or(0, |d| d.len() * self.v.dim())
    }
    fn column(&self, n: usize, j: usize) -> SparseVec {
        let f = self.free.field;
        let dv = self.v.dim();
        let (g, vi) = (j / dv, j % dv);
        let mut pairs = Vec::new();
        for &(t, ui, c) in &self.resolved[n][g] {
            for &(k, c2) in self.v.mul_basis(vi, ui) {
                pairs.push((t * dv + k, f.mul(c, c2)));
            }
        }
        sparse_from_pairs(f, pairs)
    }
    fn block(&self, n: usize, j: usize) -> u64 {
        let dv = self.v.dim();
        let (g, vi) = (j / dv, j % dv);
        let d = &self.free.degrees[n];
        let w: Vec<i64> = d.weight[g].iter().zip(&self.v_weight[vi]).map(|(a, b)| a + b).collect();
        block_key(&w, (d.parity[g] + self.v.parity(vi)).bit())
    }
}

/// Hom(free, M) materialized, with filtration levels inherited from the
/// generators. Basis vector `g * dim M + l` sends generator g to m_l.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomComplex {
    pub complex: BasedComplex,
    pub levels: Vec<Vec<i64>>,
    pub parity: Vec<Vec<Parity>>,
    pub module_dim: usize,
}

impl HomComplex {
    fn new(free: &FreeComplex, module: &SupermoduleSpec, weights: &WeightGrading) -> Self {
        let f = free.field;
        let dm = module.dim();
        let top = free.max_degree();
        let mut rho_cache: HashMap<PbwMonomial, DenseMatrix> = HashMap::new();
        for d in &free.degrees {
            for terms in &d.diff {
                for (_, u, _) in terms {
                    rho_cache.entry(u.clone()).or_insert_with(|| module.act_monomial(f, u));
                }
            }
        }
        let mut columns: Vec<Vec<SparseVec>> = Vec::with_capacity(top + 1);
        let mut blocks = Vec::with_capacity(top + 1);
        let mut levels = Vec::with_capacity(top + 1);
        let mut parity = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let d = &free.degrees[n];
            let mut cols: Vec<Vec<(usize, u32)>> = vec![Vec::new(); d.len() * dm];
            if n < top {
                let sign_n = Sign::from_exponent(n as i64);
                for (g2, terms) in free.degrees[n + 1].diff.iter().enumerate() {
                    for (g, u, c) in terms {
                        let rho = &rho_cache[u];
                        let u_par = u.parity(free.s);
                        for l in 0..dm {
                            let f_par = d.parity[*g] + module.parity[l];
                            let sign = sign_n * Sign::koszul(u_par, f_par);
                            let coef = f.mul(*c, sign.to_fp(f));
                            for l2 in 0..dm {
                                let r = rho.get(l2, l);
                                if r != 0 {
                                    cols[g * dm + l].push((g2 * dm + l2, f.mul(coef, r)));
                                }
                            }
                        }
                    }
                }
            }
            columns.push(cols.into_iter().map(|c| sparse_from_pairs(f, c)).collect());
            let mut bl = Vec::with_capacity(d.len() * dm);
            let mut lv = Vec::with_capacity(d.len() * dm);
            let mut pr = Vec::with_capacity(d.len() * dm);
            for g in 0..d.len() {
                for l in 0..dm {
                    let w: Vec<i64> = weights.module.get(l).map_or_else(
                        || d.weight[g].iter().map(|x| -x).collect(),
                        |wm| wm.iter().zip(&d.weight[g]).map(|(a, b)| a - b).collect(),
                    );
                    let par = d.parity[g] + module.parity[l];
                    bl.push(block_key(&w, par.bit()));
                    lv.push(d.level[g] as i64);
                    pr.push(par);
                }
            }
            blocks.push(bl);
            levels.push(lv);
            parity.push(pr);
        }
        HomComplex { complex: BasedComplex { field: f, direction: Direction::Cochain, columns, blocks }, levels, parity, module_dim: dm }
    }

    /// The top degree only has a basis; its outgoing differential is unknown.
    pub fn reliable_degrees(&self) -> usize {
        self.complex.max_degree().saturating_sub(1)
    }

    /// Apply the differential to an arbitrary cochain of degree n.
    pub fn apply(&self, n: usize, v: &[(usize, u32)]) -> SparseVec {
        let f = self.complex.field;
        let mut acc = SparseVec::new();
        for &(j, c) in v {
            acc = sparse_axpy(f, &acc, c, &self.complex.columns[n][j]);
        }
        acc
    }
}

impl Complex for HomComplex {
    fn field(&self) -> PrimeField {
        self.complex.field
    }
    fn direction(&self) -> Direction {
        Direction::Cochain
    }
    fn max_degree(&self) -> usize {
        self.complex.max_degree()
    }
    fn dim(&self, n: usize) -> usize {
        self.complex.dim(n)
    }
    fn column(&self, n: usize, j: usize) -> SparseVec {
        self.complex.columns[n][j].clone()
    }
    fn block(&self, n: usize, j: usize) -> u64 {
        self.complex.block(n, j)
    }
}

impl Filtered for HomComplex {
    fn level(&self, n: usize, j: usize) -> i64 {
        self.levels[n][j]
    }
    fn parity(&self, n: usize, j: usize) -> Parity {
        self.parity[n][j]
    }
}

/// Homology dimensions of V ⊗ (generators) in degrees 0..=top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionReport {
    pub homology: Vec<usize>,
}

impl ResolutionReport {
    /// H_0 = k and H_n = 0 for 1 ≤ n ≤ top.
    pub fn is_resolution(&self) -> bool {
        self.homology.first() == Some(&1) && self.homology.iter().skip(1).all(|&h| h == 0)
    }
}

/// Homology of the k-linear complex V ⊗ free in degrees below the top one.
pub fn verify_resolution(free: &FreeComplex, v: &RestrictedEnvelope, weights: &WeightGrading) -> ResolutionReport {
    let t = free.over_v(v, weights);
    let top = free.max_degree().saturating_sub(1);
    ResolutionReport { homology: crate::complex::betti_numbers(&t, top) }
}
