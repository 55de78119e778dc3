//! Bar and cobar complexes of V(L): chains a_0[a_1|…|a_n] on the PBW basis,
//! the contracting homotopy, a diagonal approximation, and the normalized
//! cobar complex M ⊗ (V*)^{⊗n} with its monomial-length filtration, cup
//! product and the β-operation.

use crate::complex::{block_key, Complex, Direction, Filtered};
use crate::env::{DualBialgebra, RestrictedEnvelope};
use crate::fplinalg::{sparse_axpy, sparse_from_pairs, DenseMatrix, PrimeField, SparseVec};
use crate::grading::{LinComb, Parity, Sign};
use crate::liesuper::{SupermoduleSpec, WeightGrading};
use crate::may::{BarTuple, MuMap};
use thiserror::Error;

/// Default cap on the number of cobar basis elements in one degree.
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BarError {
    #[error("degree {degree} needs {needed} basis elements, above the budget of {budget}")]
    BudgetExceeded { degree: usize, needed: u128, budget: usize },
    #[error("β is only defined on even cochains")]
    ParityError,
    #[error("expected a cochain of degree {expected}, got degree {found}")]
    Degree { expected: usize, found: usize },
}

/// A chain a_0[a_1|…|a_n] of B_n(V) stored as the index list (a_0, …, a_n).
pub type BarChain = LinComb<Vec<usize>>;

/// d(a_0[a_1|…|a_n]) = Σ_{i<n} (-1)^i (…|a_i a_{i+1}|…) + (-1)^n a_0[a_1|…|a_{n-1}] ε(a_n).
pub fn bar_differential(v: &RestrictedEnvelope, c: &BarChain) -> BarChain {
    let f = v.field();
    let mut out = BarChain::new();
    for (key, coef) in c.iter() {
        let n = key.len() - 1;
        for i in 0..n {
            let sign = Sign::from_exponent(i as i64).to_fp(f);
            for &(k, c2) in v.mul_basis(key[i], key[i + 1]) {
                let mut t = Vec::with_capacity(n);
                t.extend_from_slice(&key[..i]);
                t.push(k);
                t.extend_from_slice(&key[i + 2..]);
                out.add_term(f, t, f.mul(coef, f.mul(sign, c2)));
            }
        }
        if n > 0 && key[n] == 0 {
            let sign = Sign::from_exponent(n as i64).to_fp(f);
            out.add_term(f, key[..n].to_vec(), f.mul(coef, sign));
        }
    }
    out
}

/// s(a_0[a_1|…|a_n]) = 1[a_0|a_1|…|a_n].
pub fn contracting_homotopy(f: PrimeField, c: &BarChain) -> BarChain {
    let mut out = BarChain::new();
    for (key, coef) in c.iter() {
        let mut t = Vec::with_capacity(key.len() + 1);
        t.push(0);
        t.extend_from_slice(key);
        out.add_term(f, t, coef);
    }
    out
}

/// Σ_{i<j} ā_i ā_j over a sequence of parities.
fn pair_count(parities: impl IntoIterator<Item = Parity>) -> u64 {
    let mut odd_so_far = 0u64;
    let mut total = 0u64;
    for p in parities {
        if p.is_odd() {
            total += odd_so_far;
            odd_so_far += 1;
        }
    }
    total
}

/// How signs are attached to the diagonal approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalSigns {
    /// Koszul signs from reordering a_1'⊗a_1''⊗a_2'⊗… and from the diagonal action.
    Koszul,
    /// No signs at all.
    Plain,
}

/// D(a_0[a_1|…|a_n]) = Δ(a_0) · Σ_i [a_1'|…|a_i'] ⊗ a_1''⋯a_i''[a_{i+1}|…|a_n].
pub fn diagonal_approximation(v: &RestrictedEnvelope, c: &BarChain, signs: DiagonalSigns) -> LinComb<(Vec<usize>, Vec<usize>)> {
    let f = v.field();
    let mut out = LinComb::new();
    for (key, coef) in c.iter() {
        let a0 = key[0];
        let bars = &key[1..];
        for i in 0..=bars.len() {
            // Expand Δ(a_1)…Δ(a_i) as (left factors, right factors, coefficient).
            let mut states: Vec<(Vec<usize>, Vec<usize>, u32)> = vec![(Vec::new(), Vec::new(), 1)];
            for &a in &bars[..i] {
                let mut next = Vec::new();
                for (l, r, c0) in &states {
                    for &(u, w, c1) in v.coproduct(a) {
                        let mut l2 = l.clone();
                        let mut r2 = r.clone();
                        l2.push(u);
                        r2.push(w);
                        next.push((l2, r2, f.mul(*c0, c1)));
                    }
                }
                states = next;
            }
            for (lefts, rights, c0) in states {
                let mut sign = Sign::Plus;
                if signs == DiagonalSigns::Koszul {
                    // move a_j'' past a_k' for j < k
                    let mut e = 0u64;
                    for j in 0..rights.len() {
                        for k in j + 1..lefts.len() {
                            if v.parity(rights[j]).is_odd() && v.parity(lefts[k]).is_odd() {
                                e += 1;
                            }
                        }
                    }
                    sign = Sign::from_exponent(e as i64);
                }
                // coefficient a_1''⋯a_i'' as a V-vector
                let mut prod: SparseVec = vec![(0, 1)];
                for &w in &rights {
                    prod = v.mul_vec(&prod, &[(w, 1)]);
                }
                let left_parity = lefts.iter().fold(Parity::Even, |acc, &u| acc + v.parity(u));
                for &(a1, a2, c2) in v.coproduct(a0) {
                    // (a0' ⊗ a0'') · (x ⊗ y) = (-1)^{ā0''·x̄} a0'x ⊗ a0''y
                    let s0 = if signs == DiagonalSigns::Koszul { Sign::koszul(v.parity(a2), left_parity) } else { Sign::Plus };
                    let right_coef = v.mul_vec(&[(a2, 1)], &prod);
                    let total = f.mul(coef, f.mul(c0, f.mul(c2, (sign * s0).to_fp(f))));
                    for &(r0, c3) in &right_coef {
                        let mut lk = vec![a1];
                        lk.extend_from_slice(&lefts);
                        let mut rk = vec![r0];
                        rk.extend_from_slice(&bars[i..]);
                        out.add_term(f, (lk, rk), f.mul(total, c3));
                    }
                }
            }
        }
    }
    out
}

/// (d⊗1 + 1⊗d) applied to an element of B ⊗ B, with the sign (-1)^{deg u}
/// on the second term.
pub fn tensor_differential(v: &RestrictedEnvelope, x: &LinComb<(Vec<usize>, Vec<usize>)>) -> LinComb<(Vec<usize>, Vec<usize>)> {
    let f = v.field();
    let mut out = LinComb::new();
    for ((a, b), c) in x.iter() {
        for (da, c2) in bar_differential(v, &BarChain::single(a.clone(), 1)).iter() {
            out.add_term(f, (da.clone(), b.clone()), f.mul(c, c2));
        }
        let sign = Sign::from_exponent(a.len() as i64 - 1).to_fp(f);
        for (db, c2) in bar_differential(v, &BarChain::single(b.clone(), 1)).iter() {
            out.add_term(f, (a.clone(), db.clone()), f.mul(c, f.mul(sign, c2)));
        }
    }
    out
}

/// Normalized cobar complex C^n(V,M) = M ⊗ (V̄*)^{⊗n}, basis m_k ⊗ ξ_{t_1} ⊗ … ⊗ ξ_{t_n}
/// with t_i running over the non-unit PBW basis elements.
#[derive(Debug, Clone)]
pub struct CobarComplex {
    dual: DualBialgebra,
    field: PrimeField,
    max_degree: usize,
    module_parity: Vec<Parity>,
    module_weight: Vec<Vec<i64>>,
    /// ρ(a) for every basis element a of V.
    rho: Vec<DenseMatrix>,
    v_weight: Vec<Vec<i64>>,
    v_parity: Vec<Parity>,
    v_level: Vec<usize>,
    /// Level-preserving part only (the E_0 differential).
    graded: bool,
}

impl CobarComplex {
    /// Refuses degrees whose basis would exceed `budget` elements.
    pub fn new(v: &RestrictedEnvelope, module: &SupermoduleSpec, weights: &WeightGrading, max_degree: usize, budget: usize) -> Result<Self, BarError> {
        let f = v.field();
        let dm = module.dim() as u128;
        let dv = v.dim() as u128 - 1;
        for n in 0..=max_degree {
            let needed = dm * dv.pow(n as u32);
            if needed > budget as u128 {
                return Err(BarError::BudgetExceeded { degree: n, needed, budget });
            }
        }
        let rho = v.basis().iter().map(|m| module.act_monomial(f, m)).collect();
        let module_weight = (0..module.dim()).map(|l| weights.module.get(l).cloned().unwrap_or_else(|| weights.zero())).collect();
        Ok(CobarComplex {
            dual: DualBialgebra::new(v),
            field: f,
            max_degree,
            module_parity: module.parity.clone(),
            module_weight,
            rho,
            v_weight: v.basis().iter().map(|m| weights.of_pbw(m)).collect(),
            v_parity: (0..v.dim()).map(|i| v.parity(i)).collect(),
            v_level: (0..v.dim()).map(|i| v.length(i)).collect(),
            graded: false,
        })
    }

    /// The associated graded complex: only terms that keep the level.
    pub fn associated_graded(&self) -> Self {
        CobarComplex { graded: true, ..self.clone() }
    }

    pub fn dual(&self) -> &DualBialgebra {
        &self.dual
    }

    pub fn module_dim(&self) -> usize {
        self.module_parity.len()
    }

    fn radix(&self) -> usize {
        self.dual.dim() - 1
    }

    /// Index of m_k ⊗ ξ_T.
    pub fn index_of(&self, k: usize, tuple: &[usize]) -> usize {
        let r = self.radix();
        let mut idx = 0usize;
        for &t in tuple {
            idx = idx * r + (t - 1);
        }
        idx * self.module_dim() + k
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn decode(&self, n: usize, j: usize) -> (usize, BarTuple) {
        let r = self.radix();
        let dm = self.module_dim();
        let (k, mut idx) = (j % dm, j / dm);
        let mut tuple = vec![0usize; n];
        for slot in tuple.iter_mut().rev() {
            *slot = idx % r + 1;
            idx /= r;
        }
        (k, tuple)
    }

    /// Parity of m_k ⊗ ξ_T.
    pub fn basis_parity(&self, n: usize, j: usize) -> Parity {
        let (k, t) = self.decode(n, j);
        t.iter().fold(self.module_parity[k], |acc, &i| acc + self.v_parity[i])
    }

    /// Largest i with the cochain in F^i (None for zero).
    pub fn filtration_level(&self, n: usize, c: &[(usize, u32)]) -> Option<usize> {
        c.iter().map(|&(j, _)| self.level(n, j) as usize).min()
    }

    /// Cup product of trivial-coefficient cochains, f ⊙ g evaluated with
    /// the sign (-1)^{m·deg g + ḡ(ā_1+…+ā_m)}. On tensor coordinates this is
    /// concatenation times (-1)^{mn}.
    pub fn cup(&self, m: usize, fv: &[(usize, u32)], n: usize, gv: &[(usize, u32)]) -> SparseVec {
        let f = self.field;
        let sign = Sign::from_exponent((m * n) as i64).to_fp(f);
        let shift = self.radix().pow(n as u32);
        let mut pairs = Vec::with_capacity(fv.len() * gv.len());
        for &(a, ca) in fv {
            for &(b, cb) in gv {
                pairs.push((a * shift + b, f.mul(sign, f.mul(ca, cb))));
            }
        }
        sparse_from_pairs(f, pairs)
    }

    /// Apply ∂ to an arbitrary cochain of degree n.
    pub fn apply(&self, n: usize, v: &[(usize, u32)]) -> SparseVec {
        let mut acc = SparseVec::new();
        for &(j, c) in v {
            acc = sparse_axpy(self.field, &acc, c, &self.column(n, j));
        }
        acc
    }

    /// Value of the cochain ξ_T on the bar element [a_1|…|a_n] of the same tuple:
    /// (-1)^{Σ_{i<j} ā_i ā_j}; zero for any other tuple.
    pub fn pairing_sign(&self, tuple: &[usize]) -> u32 {
        Sign::from_exponent(pair_count(tuple.iter().map(|&t| self.v_parity[t])) as i64).to_fp(self.field)
    }

    /// Evaluate a trivial-coefficient cochain on a normalized bar chain.
    pub fn evaluate(&self, n: usize, c: &[(usize, u32)], chain: &LinComb<BarTuple>) -> u32 {
        let f = self.field;
        let mut val = 0;
        let cmap: std::collections::HashMap<usize, u32> = c.iter().copied().collect();
        for (t, coef) in chain.iter() {
            if t.len() != n {
                continue;
            }
            if let Some(&x) = cmap.get(&self.index_of(0, t)) {
                val = f.add(val, f.mul(x, f.mul(coef, self.pairing_sign(t))));
            }
        }
        val
    }
}

impl Complex for CobarComplex {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn direction(&self) -> Direction {
        Direction::Cochain
    }
    fn max_degree(&self) -> usize {
        self.max_degree
    }
    fn dim(&self, n: usize) -> usize {
        if n > self.max_degree {
            return 0;
        }
        self.module_dim() * self.radix().pow(n as u32)
    }

    /// ∂(m ⊗ ξ_T) = (-1)^n [Δ_M(m) ⊗ ξ_T + Σ_i (-1)^i m ⊗ ξ_{t_1} ⊗ … ⊗ Δ̄ξ_{t_i} ⊗ … ⊗ ξ_{t_n}].
    fn column(&self, n: usize, j: usize) -> SparseVec {
        let f = self.field;
        let (k, tuple) = self.decode(n, j);
        let outer = Sign::from_exponent(n as i64);
        let mut pairs = Vec::new();
        if !self.graded {
            for a in 1..self.dual.dim() {
                let s = outer * Sign::koszul(self.module_parity[k], self.v_parity[a]);
                for l in 0..self.module_dim() {
                    let r = self.rho[a].get(l, k);
                    if r != 0 {
                        let mut t = Vec::with_capacity(n + 1);
                        t.push(a);
                        t.extend_from_slice(&tuple);
                        pairs.push((self.index_of(l, &t), f.mul(r, s.to_fp(f))));
                    }
                }
            }
        }
        for i in 0..n {
            let s = outer * Sign::from_exponent(i as i64 + 1);
            for &(u, w, c) in self.dual.reduced_coproduct(tuple[i]) {
                if self.graded && self.v_level[u] + self.v_level[w] != self.v_level[tuple[i]] {
                    continue;
                }
                let mut t = Vec::with_capacity(n + 1);
                t.extend_from_slice(&tuple[..i]);
                t.push(u);
                t.push(w);
                t.extend_from_slice(&tuple[i + 1..]);
                pairs.push((self.index_of(k, &t), f.mul(c, s.to_fp(f))));
            }
        }
        sparse_from_pairs(f, pairs)
    }

    fn block(&self, n: usize, j: usize) -> u64 {
        let (k, tuple) = self.decode(n, j);
        let mut w = self.module_weight[k].clone();
        for &t in &tuple {
            WeightGrading::add_into(&mut w, &self.v_weight[t], -1);
        }
        block_key(&w, self.basis_parity(n, j).bit())
    }
}

impl Filtered for CobarComplex {
    fn level(&self, n: usize, j: usize) -> i64 {
        let (_, tuple) = self.decode(n, j);
        tuple.iter().map(|&t| self.v_level[t] as i64).sum()
    }
    fn parity(&self, n: usize, j: usize) -> Parity {
        self.basis_parity(n, j)
    }
}

/// c(p,i) = binom(p,i)/p reduced mod p.
pub fn beta_coefficient(f: PrimeField, i: u32) -> u32 {
    let p = f.p() as u64;
    let mut num: u128 = 1;
    for k in 0..i as u64 {
        num = num * (p - k) as u128 / (k + 1) as u128;
    }
    f.reduce(((num / p as u128) % p as u128) as i64)
}

/// β(f) = Σ_{i=1}^{p-1} c(p,i) f^i ⊗ f^{p-i} for an even 1-cochain f (trivial coefficients).
pub fn beta_map(c: &CobarComplex, fv: &[(usize, u32)]) -> Result<SparseVec, BarError> {
    let f = c.field;
    let d = &c.dual;
    if fv.iter().any(|&(j, _)| d.parity(j + 1).is_odd()) {
        return Err(BarError::ParityError);
    }
    let as_dual: SparseVec = fv.iter().map(|&(j, x)| (j + 1, x)).collect();
    let p = f.p();
    let powers: Vec<SparseVec> = (0..p).map(|i| d.power(&as_dual, i)).collect();
    let to_cochain = |v: &SparseVec| -> SparseVec { v.iter().filter(|&&(i, _)| i != 0).map(|&(i, x)| (i - 1, x)).collect() };
    let mut out = SparseVec::new();
    for i in 1..p {
        let coef = beta_coefficient(f, i);
        let a = to_cochain(&powers[i as usize]);
        let b = to_cochain(&powers[(p - i) as usize]);
        // plain tensor: index a*(dimV-1) + b
        let r = c.radix();
        let mut pairs = Vec::new();
        for &(x, cx) in &a {
            for &(y, cy) in &b {
                pairs.push((x * r + y, f.mul(coef, f.mul(cx, cy))));
            }
        }
        out = sparse_axpy(f, &out, 1, &sparse_from_pairs(f, pairs));
    }
    Ok(out)
}

/// Product f_1 · f_2 of two 1-cochains inside V* (trivial coefficients).
pub fn dual_product(c: &CobarComplex, a: &[(usize, u32)], b: &[(usize, u32)]) -> SparseVec {
    let lift = |v: &[(usize, u32)]| -> SparseVec { v.iter().map(|&(j, x)| (j + 1, x)).collect() };
    c.dual.mul(&lift(a), &lift(b)).into_iter().filter(|&(i, _)| i != 0).map(|(i, x)| (i - 1, x)).collect()
}

/// Σ_{i=1}^{p-1} c(p,i) f_1^i f_2^{p-i} in V*, the 1-cochain whose coboundary
/// corrects the additivity of β.
pub fn beta_correction(c: &CobarComplex, f1: &[(usize, u32)], f2: &[(usize, u32)]) -> SparseVec {
    let f = c.field;
    let p = f.p();
    let d = &c.dual;
    let lift = |v: &[(usize, u32)]| -> SparseVec { v.iter().map(|&(j, x)| (j + 1, x)).collect() };
    let (a, b) = (lift(f1), lift(f2));
    let mut out = SparseVec::new();
    for i in 1..p {
        let term = d.mul(&d.power(&a, i), &d.power(&b, p - i));
        out = sparse_axpy(f, &out, beta_coefficient(f, i), &term);
    }
    out.into_iter().filter(|&(i, _)| i != 0).map(|(i, x)| (i - 1, x)).collect()
}

/// The cochain ξ_{y}^{⊗p} scaled so that it takes the value 1 on [y|…|y].
pub fn bar_f_cocycle(c: &CobarComplex, v: &RestrictedEnvelope, j: usize) -> SparseVec {
    let p = c.field.p() as usize;
    let y = v.generator_index(v.spec().s() + j);
    let tuple = vec![y; p];
    vec![(c.index_of(0, &tuple), c.pairing_sign(&tuple))]
}

/// μ*: C^n(V,k) → Hom_V(X_n,k), (μ*φ)(g) = φ(μ(g)). Returns one row per
/// generator of X_n: the cobar coordinates it pairs with.
#[derive(Debug, Clone)]
pub struct MuPullback {
    /// `rows[n][g]`: (cobar index, coefficient) with (μ*ξ)(g) = Σ coefficient·ξ-coordinate.
    pub rows: Vec<Vec<SparseVec>>,
}

pub fn mu_pullback(c: &CobarComplex, mu: &MuMap) -> MuPullback {
    let f = c.field;
    let rows = mu
        .values
        .iter()
        .map(|row| {
            row.iter()
                .map(|val| {
                    let pairs = val.iter().map(|(t, coef)| (c.index_of(0, t), f.mul(coef, c.pairing_sign(t)))).collect();
                    sparse_from_pairs(f, pairs)
                })
                .collect()
        })
        .collect();
    MuPullback { rows }
}

impl MuPullback {
    /// Image of a cobar cochain of degree n as a Hom_V(X_n,k) cochain.
    pub fn apply(&self, n: usize, v: &[(usize, u32)], f: PrimeField) -> SparseVec {
        let map: std::collections::HashMap<usize, u32> = v.iter().copied().collect();
        let mut out = Vec::new();
        for (g, row) in self.rows[n].iter().enumerate() {
            let mut val = 0;
            for &(j, c) in row {
                if let Some(&x) = map.get(&j) {
                    val = f.add(val, f.mul(c, x));
                }
            }
            if val != 0 {
                out.push((g, val));
            }
        }
        out
    }
}
