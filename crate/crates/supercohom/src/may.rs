//! The restricted resolution X(L) = W(L) ⊗ Γ'(L₀̄): twisting cochains,
//! the twisted differential d_t, the cocycles f_i, g_j and the comparison
//! map μ into the normalized bar complex of V(L).

use crate::env::{EnvAlgebra, EnvElement, PbwMonomial, RestrictedEnvelope};
use crate::fplinalg::{sparse_axpy, solve_linear, LinalgConfig, MatrixFp, SparseVec};
use crate::free::{FreeComplex, FreeDegree, FreeTerm, HomComplex};
use crate::grading::{cga_basis, cga_multiply, compositions, subsets, CgaMonomial, LinComb, Sign};
use crate::koszul::{cga_weight, koszul_differential, right_action, YElement};
use crate::liesuper::{LieSuperAlgebraSpec, SupermoduleSpec, WeightGrading};
use crate::parallel::par_map;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MayError {
    #[error("no twisting cochain value for γ' exponents {exponents:?} in degree {degree}")]
    NoSolution { degree: usize, exponents: Vec<u32> },
    #[error("cochain {name} is not a cocycle")]
    NotCocycle { name: String },
    #[error("degree bound {bound} too small for {what}")]
    OutOfRange { bound: usize, what: String },
}

fn gamma_prime_monomial(s: usize, t: usize, c: &[u32]) -> CgaMonomial {
    let mut m = CgaMonomial::one(s, t);
    m.gamma_prime = c.to_vec();
    m
}

/// Product in the smash product Y(L₀̄) = U(L₀̄) # Λ(L₀̄), coefficients in U(L₀̄).
pub fn y0_multiply(l0: &LieSuperAlgebraSpec, u: &EnvAlgebra, a: &YElement, b: &YElement) -> YElement {
    let f = l0.field();
    let n = l0.dim();
    let mut out = YElement::new();
    for ((u1, z1), c1) in a.iter() {
        for ((u2, z2), c2) in b.iter() {
            // z1 · u2 = Σ w z, computed letter by letter: Z g = g Z + Z.g
            let mut state: LinComb<(PbwMonomial, CgaMonomial)> = LinComb::single((PbwMonomial::one(n), z1.clone()), 1);
            for g in u2.letters() {
                let mut next = LinComb::new();
                for ((w, z), c) in state.iter() {
                    for (wg, c2) in u.mul_monomial_generator(w, g).iter() {
                        next.add_term(f, (wg.clone(), z.clone()), f.mul(c, c2));
                    }
                    for (zg, c2) in right_action(l0, z, g).iter() {
                        next.add_term(f, (w.clone(), zg.clone()), f.mul(c, c2));
                    }
                }
                state = next;
            }
            let u1e = EnvElement::from_monomial(u1.clone());
            for ((w, z), c) in state.iter() {
                let Some((k, zz)) = cga_multiply(f, z, z2).expect("shape") else { continue };
                let coef = f.mul(f.mul(c1, c2), f.mul(c, k));
                for (uw, c3) in u.mul_monomial(&u1e, w).iter() {
                    out.add_term(f, (uw.clone(), zz.clone()), f.mul(coef, c3));
                }
            }
        }
    }
    out
}

/// Apply the Koszul differential of Y(L₀̄) to an element (left U-linear).
pub fn y0_differential(l0: &LieSuperAlgebraSpec, u: &EnvAlgebra, a: &YElement) -> YElement {
    let f = l0.field();
    let mut out = YElement::new();
    for ((w, z), c) in a.iter() {
        let we = EnvElement::from_monomial(w.clone());
        for ((v, z2), c2) in koszul_differential(l0, z).iter() {
            for (wv, c3) in u.mul_monomial(&we, v).iter() {
                out.add_term(f, (wv.clone(), z2.clone()), f.mul(c, f.mul(c2, c3)));
            }
        }
    }
    out
}

/// π: Y(L₀̄) → W(L₀̄), reducing coefficients into V(L₀̄).
pub fn project_to_w(v0: &EnvAlgebra, a: &YElement) -> YElement {
    let f = v0.field();
    let mut out = YElement::new();
    for ((w, z), c) in a.iter() {
        for (wr, c2) in v0.pbw_normalize(&w.letters(), c).iter() {
            out.add_term(f, (wr.clone(), z.clone()), c2);
        }
    }
    out
}

/// Largest filtration degree len(u) + deg z among the terms.
pub fn filtration_degree(a: &YElement) -> usize {
    a.iter().map(|((u, z), _)| u.len() + z.deg()).max().unwrap_or(0)
}

/// The family t_{2n}: Γ'_{2n}(L₀̄) → Y_{2n-1}(L₀̄), indexed by n and by the
/// exponent tuple of γ'_{c_1}(x_1)⋯γ'_{c_s}(x_s).
#[derive(Debug, Clone)]
pub struct TwistingCochain {
    pub l0: LieSuperAlgebraSpec,
    /// `maps[n]` for n ≥ 1 (entry 0 is empty).
    pub maps: Vec<BTreeMap<Vec<u32>, YElement>>,
    /// Filtration degree of each image.
    pub certificates: Vec<BTreeMap<Vec<u32>, usize>>,
}

impl TwistingCochain {
    pub fn max_n(&self) -> usize {
        self.maps.len().saturating_sub(1)
    }

    pub fn value(&self, c: &[u32]) -> Option<&YElement> {
        let n: u32 = c.iter().sum();
        self.maps.get(n as usize)?.get(c)
    }

    /// r_n(b) = Σ_{j=1}^{n-1} Σ_{Δb} t_{2j}(b') t_{2(n-j)}(b'').
    pub fn convolution(&self, u: &EnvAlgebra, c: &[u32]) -> YElement {
        let f = self.l0.field();
        let mut out = YElement::new();
        for (left, right) in gamma_prime_splits(c) {
            let nl: u32 = left.iter().sum();
            let nr: u32 = right.iter().sum();
            if nl == 0 || nr == 0 {
                continue;
            }
            let (Some(a), Some(b)) = (self.value(&left), self.value(&right)) else { continue };
            let prod = y0_multiply(&self.l0, u, a, b);
            out.add_scaled(f, &prod, 1);
        }
        out
    }

    /// Text dump: one line per basis element of Γ' with its image.
    pub fn dump(&self) -> String {
        let names: Vec<String> = self.l0.basis().even.clone();
        let mut out = String::new();
        for (n, map) in self.maps.iter().enumerate().skip(1) {
            for (c, img) in map {
                let b = gamma_prime_monomial(self.l0.s(), 0, c).display(self.l0.basis());
                let terms: Vec<String> = img
                    .iter()
                    .map(|((u, z), coef)| format!("{}*{}[{}]", self.l0.field().centered(coef), u.display(&names), z.display(self.l0.basis())))
                    .collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                let _ = writeln!(out, "t{} {} = {}", 2 * n, b, rhs);
            }
        }
        out
    }
}

/// All ways to split γ' exponents c = c' + c'' (coproduct of Γ', coefficient 1).
pub fn gamma_prime_splits(c: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &ci in c {
        let mut next = Vec::with_capacity(out.len() * (ci as usize + 1));
        for (l, r) in &out {
            for a in 0..=ci {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.push(a);
                r2.push(ci - a);
                next.push((l2, r2));
            }
        }
        out = next;
    }
    out
}

/// t_2(γ'_1(x_i)) = x_i^{p-1}⟨x_i⟩ - ⟨x_i^{[p]}⟩.
pub fn t2_formula(l0: &LieSuperAlgebraSpec, i: usize) -> YElement {
    let f = l0.field();
    let s = l0.s();
    let mut out = YElement::new();
    let mut u = PbwMonomial::one(s);
    u.exps[i] = f.p() - 1;
    out.add_term(f, (u, CgaMonomial::ext_gen(s, 0, i)), 1);
    for (k, &c) in l0.restriction(i).iter().enumerate() {
        out.add_term(f, (PbwMonomial::one(s), CgaMonomial::ext_gen(s, 0, k)), f.neg(c));
    }
    out
}

/// Solve for t_{2n} with 2n ≤ max_degree + 1.
pub fn solve_twisting_cochain(l: &LieSuperAlgebraSpec, max_degree: usize) -> Result<TwistingCochain, MayError> {
    let l0 = l.even_part();
    let f = l0.field();
    let p = f.p() as usize;
    let s = l0.s();
    let u = EnvAlgebra::universal(l0.clone());
    let top_n = max_degree.div_ceil(2);
    let mut tc = TwistingCochain { l0: l0.clone(), maps: vec![BTreeMap::new()], certificates: vec![BTreeMap::new()] };
    for n in 1..=top_n {
        let mut map = BTreeMap::new();
        let mut cert = BTreeMap::new();
        let exps = compositions(n as u32, s);
        if n == 1 {
            for c in exps {
                let i = c.iter().position(|&x| x == 1).expect("one unit exponent");
                let v = t2_formula(&l0, i);
                cert.insert(c.clone(), filtration_degree(&v));
                map.insert(c, v);
            }
        } else {
            // Unknowns u⟨S⟩ with len(u) ≤ np - 2n and |S| = 2n - 1.
            let max_len = n * p - 2 * n;
            let monomials: Vec<PbwMonomial> = pbw_up_to(s, max_len);
            let sets = subsets(s, 2 * n - 1);
            let mut unknowns = Vec::new();
            for m in &monomials {
                for set in &sets {
                    let mut z = CgaMonomial::one(s, 0);
                    z.ext = set.clone();
                    unknowns.push((m.clone(), z));
                }
            }
            let images: Vec<YElement> = par_map(&unknowns, |k| {
                let el = YElement::single(k.clone(), 1);
                y0_differential(&l0, &u, &el)
            });
            for c in exps {
                let r = tc.convolution(&u, &c);
                if r.is_zero() {
                    cert.insert(c.clone(), 0);
                    map.insert(c, YElement::new());
                    continue;
                }
                let mut rows: HashMap<(PbwMonomial, CgaMonomial), usize> = HashMap::new();
                let mut row_of = |k: &(PbwMonomial, CgaMonomial)| {
                    let next = rows.len();
                    *rows.entry(k.clone()).or_insert(next)
                };
                let cols: Vec<SparseVec> = images
                    .iter()
                    .map(|img| {
                        let pairs = img.iter().map(|(k, c)| (row_of(k), c)).collect();
                        crate::fplinalg::sparse_from_pairs(f, pairs)
                    })
                    .collect();
                let rhs_pairs: Vec<(usize, u32)> = r.iter().map(|(k, c)| (row_of(k), c)).collect();
                let nrows = rows.len();
                let mut rhs = vec![0u32; nrows];
                for (i, c) in rhs_pairs {
                    rhs[i] = c;
                }
                let m = MatrixFp::from_columns(nrows, cols, &LinalgConfig::default());
                let sol = solve_linear(&m, &rhs, f)
                    .expect("dimensions agree")
                    .ok_or(MayError::NoSolution { degree: 2 * n, exponents: c.clone() })?;
                let mut v = YElement::new();
                for (j, &x) in sol.iter().enumerate() {
                    if x != 0 {
                        v.add_term(f, unknowns[j].clone(), x);
                    }
                }
                cert.insert(c.clone(), filtration_degree(&v));
                map.insert(c, v);
            }
        }
        tc.maps.push(map);
        tc.certificates.push(cert);
    }
    Ok(tc)
}

/// PBW monomials in `s` even variables of length ≤ max_len (U-side, no cap).
fn pbw_up_to(s: usize, max_len: usize) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for exps in compositions(len as u32, s) {
            out.push(PbwMonomial { exps });
        }
    }
    out
}

/// Check π(d(t(b)) - r_n(b)) = 0 for every basis element b in range.
/// Returns the failing exponent tuples.
pub fn twisting_identity_failures(tc: &TwistingCochain) -> Vec<Vec<u32>> {
    let u = EnvAlgebra::universal(tc.l0.clone());
    let v0 = EnvAlgebra::restricted(tc.l0.clone());
    let f = tc.l0.field();
    let mut bad = Vec::new();
    for map in tc.maps.iter().skip(1) {
        for (c, img) in map {
            let mut diff = y0_differential(&tc.l0, &u, img);
            diff.add_scaled(f, &tc.convolution(&u, c), f.neg(1));
            if !project_to_w(&v0, &diff).is_zero() {
                bad.push(c.clone());
            }
        }
    }
    bad
}

/// X(L) in degrees 0..=max_degree with d_t on the standard monomials.
#[derive(Debug, Clone)]
pub struct MayComplex {
    pub spec: LieSuperAlgebraSpec,
    pub basis: Vec<Vec<CgaMonomial>>,
    pub index: Vec<HashMap<CgaMonomial, usize>>,
    pub free: FreeComplex,
}

/// Filtration level m + n·p of z ⊗ b with z ∈ Ȳ_m, b ∈ Γ'_{2n}.
pub fn x_level(m: &CgaMonomial, p: u32) -> usize {
    m.ext.len() + m.gamma_total() as usize + (p as u64 * m.gamma_prime_total()) as usize
}

/// Lift an L₀̄-shaped element of Y(L₀̄) (already projected to W(L₀̄)) to L-shaped keys.
fn widen(l: &LieSuperAlgebraSpec, a: &YElement) -> YElement {
    let f = l.field();
    let (s, t) = (l.s(), l.t());
    let mut out = YElement::new();
    for ((u, z), c) in a.iter() {
        let mut ue = u.exps.clone();
        ue.resize(s + t, 0);
        let mut zz = CgaMonomial::one(s, t);
        zz.ext = z.ext.clone();
        out.add_term(f, (PbwMonomial { exps: ue }, zz), c);
    }
    out
}

/// (1 ⊗ z) · y in W(L) for z ∈ Ȳ(L) and y ∈ W(L₀̄) (already widened).
fn w_times_y0(l: &LieSuperAlgebraSpec, venv: &EnvAlgebra, z: &CgaMonomial, y: &YElement) -> YElement {
    let f = l.field();
    let n = l.dim();
    let mut out = YElement::new();
    for ((u, sz), c) in y.iter() {
        let mut state: LinComb<(PbwMonomial, CgaMonomial)> = LinComb::single((PbwMonomial::one(n), z.clone()), 1);
        for g in u.letters() {
            let mut next = LinComb::new();
            for ((w, zz), c1) in state.iter() {
                for (wg, c2) in venv.mul_monomial_generator(w, g).iter() {
                    next.add_term(f, (wg.clone(), zz.clone()), f.mul(c1, c2));
                }
                for (zg, c2) in right_action(l, zz, g).iter() {
                    next.add_term(f, (w.clone(), zg.clone()), f.mul(c1, c2));
                }
            }
            state = next;
        }
        for ((w, zz), c1) in state.iter() {
            if let Some((k, prod)) = cga_multiply(f, zz, sz).expect("shape") {
                out.add_term(f, (w.clone(), prod), f.mul(c, f.mul(c1, k)));
            }
        }
    }
    out
}

pub fn build_x_complex(l: &LieSuperAlgebraSpec, tc: &TwistingCochain, max_degree: usize, weights: &WeightGrading) -> Result<MayComplex, MayError> {
    if 2 * tc.max_n() + 1 < max_degree {
        return Err(MayError::OutOfRange { bound: max_degree, what: "twisting cochain".into() });
    }
    let f = l.field();
    let p = f.p();
    let (s, t) = (l.s(), l.t());
    let venv = EnvAlgebra::restricted(l.clone());
    let v0 = EnvAlgebra::restricted(tc.l0.clone());
    // π(t(b')) for every b' in range, widened to L-shaped keys.
    let mut projected: HashMap<Vec<u32>, YElement> = HashMap::new();
    for map in tc.maps.iter().skip(1) {
        for (c, img) in map {
            projected.insert(c.clone(), widen(l, &project_to_w(&v0, img)));
        }
    }
    let basis: Vec<Vec<CgaMonomial>> = (0..=max_degree).map(|n| cga_basis(s, t, n, true)).collect();
    let index: Vec<HashMap<CgaMonomial, usize>> =
        basis.iter().map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    let cap_cache: std::sync::RwLock<HashMap<(CgaMonomial, Vec<u32>), YElement>> = Default::default();
    let mut degrees = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let diff: Vec<Vec<FreeTerm>> = par_map(&basis[n], |m| {
            if n == 0 {
                return Vec::new();
            }
            let mut total = koszul_differential(l, m);
            let (z, _) = m.split_prime();
            let zsign = Sign::from_exponent(z.deg() as i64).to_fp(f);
            for (left, right) in gamma_prime_splits(&m.gamma_prime) {
                if left.iter().all(|&x| x == 0) {
                    continue;
                }
                let key = (z.clone(), left.clone());
                let cached = cap_cache.read().expect("lock").get(&key).cloned();
                let cap = match cached {
                    Some(c) => c,
                    None => {
                        let y = projected.get(&left).cloned().unwrap_or_default();
                        let c = w_times_y0(l, &venv, &z, &y);
                        cap_cache.write().expect("lock").insert(key, c.clone());
                        c
                    }
                };
                let b2 = gamma_prime_monomial(s, t, &right);
                for ((w, zz), c) in cap.iter() {
                    let Some((k, prod)) = cga_multiply(f, zz, &b2).expect("shape") else { continue };
                    total.add_term(f, (w.clone(), prod), f.mul(zsign, f.mul(c, k)));
                }
            }
            total.into_terms().map(|((u, zz), c)| (index[n - 1][&zz], u, c)).collect()
        });
        degrees.push(FreeDegree {
            parity: basis[n].iter().map(|m| m.parity()).collect(),
            weight: basis[n].iter().map(|m| cga_weight(weights, s, p, m)).collect(),
            level: basis[n].iter().map(|m| x_level(m, p)).collect(),
            diff,
        });
    }
    Ok(MayComplex { spec: l.clone(), basis, index, free: FreeComplex { field: f, s, degrees } })
}

/// Build t and X(L) together.
pub fn may_complex(l: &LieSuperAlgebraSpec, max_degree: usize, weights: &WeightGrading) -> Result<(TwistingCochain, MayComplex), MayError> {
    let tc = solve_twisting_cochain(l, max_degree)?;
    let x = build_x_complex(l, &tc, max_degree, weights)?;
    Ok((tc, x))
}

impl MayComplex {
    pub fn max_degree(&self) -> usize {
        self.basis.len() - 1
    }

    /// First term of d_t that raises the filtration level, if any.
    pub fn filtration_violation(&self) -> Option<(usize, usize)> {
        for (n, d) in self.free.degrees.iter().enumerate().skip(1) {
            for (g, terms) in d.diff.iter().enumerate() {
                if terms.iter().any(|(tg, u, _)| u.len() + self.free.degrees[n - 1].level[*tg] > d.level[g]) {
                    return Some((n, g));
                }
            }
        }
        None
    }

    /// The associated graded differential: terms that keep the level.
    pub fn associated_graded(&self) -> FreeComplex {
        let mut out = self.free.clone();
        for n in 1..out.degrees.len() {
            let lower: Vec<usize> = self.free.degrees[n - 1].level.clone();
            let d = &mut out.degrees[n];
            for (g, terms) in d.diff.iter_mut().enumerate() {
                let lv = self.free.degrees[n].level[g];
                terms.retain(|(tg, u, _)| u.len() + lower[*tg] == lv);
            }
        }
        out
    }

    /// Index of γ_p(y_i) in degree p.
    pub fn f_index(&self, i: usize) -> Option<usize> {
        let (s, t) = (self.spec.s(), self.spec.t());
        let p = self.spec.field().p() as usize;
        self.index.get(p)?.get(&CgaMonomial::gamma_gen(s, t, i, p as u32)).copied()
    }

    /// Index of γ'_1(x_j) in degree 2.
    pub fn g_index(&self, j: usize) -> Option<usize> {
        let (s, t) = (self.spec.s(), self.spec.t());
        self.index.get(2)?.get(&CgaMonomial::gamma_prime_gen(s, t, j, 1)).copied()
    }
}

/// The cochains f_i ∈ Hom_V(X_p,k) and g_j ∈ Hom_V(X_2,k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCocycles {
    pub f: Vec<SparseVec>,
    pub g: Vec<SparseVec>,
}

/// The dual functionals f_i, g_j in Hom_V(X,k) (trivial coefficients), each
/// verified to be a cocycle.
pub fn special_cocycles(x: &MayComplex, hom: &HomComplex) -> Result<SpecialCocycles, MayError> {
    let p = x.spec.field().p() as usize;
    let mut out = SpecialCocycles { f: Vec::new(), g: Vec::new() };
    if hom.reliable_degrees() >= p {
        for i in 0..x.spec.t() {
            let idx = x.f_index(i).expect("γ_p(y_i) in range");
            let v = vec![(idx, 1)];
            if !hom.apply(p, &v).is_empty() {
                return Err(MayError::NotCocycle { name: format!("f_{}", i + 1) });
            }
            out.f.push(v);
        }
    }
    if hom.reliable_degrees() >= 2 {
        for j in 0..x.spec.s() {
            let idx = x.g_index(j).expect("γ'_1(x_j) in range");
            let v = vec![(idx, 1)];
            if !hom.apply(2, &v).is_empty() {
                return Err(MayError::NotCocycle { name: format!("g_{}", j + 1) });
            }
            out.g.push(v);
        }
    }
    Ok(out)
}

/// Normalized bar chains: tuples of non-unit V-basis indices.
pub type BarTuple = Vec<usize>;

/// μ: X̄_n → B̄_n(V), μ'_n = s ∘ μ'_{n-1} ∘ d_t, with values on every
/// standard monomial up to the top degree of X.
#[derive(Debug, Clone)]
pub struct MuMap {
    pub values: Vec<Vec<LinComb<BarTuple>>>,
}

pub fn mu_chain_map(x: &MayComplex, v: &RestrictedEnvelope) -> MuMap {
    let f = x.spec.field();
    let mut values: Vec<Vec<LinComb<BarTuple>>> = vec![vec![LinComb::single(Vec::new(), 1)]];
    for n in 1..=x.max_degree() {
        let prev = &values[n - 1];
        let row: Vec<LinComb<BarTuple>> = x.free.degrees[n]
            .diff
            .iter()
            .map(|terms| {
                let mut out = LinComb::new();
                for (tg, u, c) in terms {
                    if u.is_one() {
                        continue;
                    }
                    let vi = v.index_of(u).expect("V-normal coefficient");
                    for (tuple, c2) in prev[*tg].iter() {
                        let mut tt = Vec::with_capacity(tuple.len() + 1);
                        tt.push(vi);
                        tt.extend_from_slice(tuple);
                        out.add_term(f, tt, f.mul(*c, c2));
                    }
                }
                out
            })
            .collect();
        values.push(row);
    }
    MuMap { values }
}

/// Normalized bar differential of 1[a_1|…|a_n] as (coefficient index, tuple) pairs.
pub fn normalized_bar_boundary(v: &RestrictedEnvelope, tuple: &[usize]) -> LinComb<(usize, BarTuple)> {
    let f = v.field();
    let n = tuple.len();
    let mut out = LinComb::new();
    if n == 0 {
        return out;
    }
    out.add_term(f, (tuple[0], tuple[1..].to_vec()), 1);
    for i in 1..n {
        let sign = Sign::from_exponent(i as i64).to_fp(f);
        for &(k, c) in v.mul_basis(tuple[i - 1], tuple[i]) {
            if k == 0 {
                continue;
            }
            let mut tt = tuple[..i - 1].to_vec();
            tt.push(k);
            tt.extend_from_slice(&tuple[i + 1..]);
            out.add_term(f, (0, tt), f.mul(sign, c));
        }
    }
    out
}

impl MuMap {
    /// Check d_B ∘ μ_n = μ_{n-1} ∘ d_t on every generator; returns the
    /// first failing (degree, generator).
    pub fn check_chain_map(&self, x: &MayComplex, v: &RestrictedEnvelope) -> Result<(), (usize, usize)> {
        let f = x.spec.field();
        for n in 1..self.values.len() {
            for (g, terms) in x.free.degrees[n].diff.iter().enumerate() {
                let mut lhs: LinComb<(usize, BarTuple)> = LinComb::new();
                for (tuple, c) in self.values[n][g].iter() {
                    lhs.add_scaled(f, &normalized_bar_boundary(v, tuple), c);
                }
                let mut rhs: LinComb<(usize, BarTuple)> = LinComb::new();
                for (tg, u, c) in terms {
                    let vi = v.index_of(u).expect("normal");
                    for (tuple, c2) in self.values[n - 1][*tg].iter() {
                        rhs.add_term(f, (vi, tuple.clone()), f.mul(*c, c2));
                    }
                }
                if lhs != rhs {
                    return Err((n, g));
                }
            }
        }
        Ok(())
    }

    /// First generator whose image has bar level above its X level.
    pub fn filtration_violation(&self, x: &MayComplex, v: &RestrictedEnvelope) -> Option<(usize, usize)> {
        for (n, row) in self.values.iter().enumerate() {
            for (g, val) in row.iter().enumerate() {
                let lv = x.free.degrees[n].level[g];
                if val.iter().any(|(t, _)| t.iter().map(|&i| v.length(i)).sum::<usize>() > lv) {
                    return Some((n, g));
                }
            }
        }
        None
    }
}

/// Composite used by the comparison: apply d_t to a V-combination of
/// generators and return the result as a dense map generator → V vector.
pub fn apply_dt(x: &MayComplex, v: &RestrictedEnvelope, n: usize, g: usize) -> BTreeMap<usize, SparseVec> {
    let f = x.spec.field();
    let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (tg, u, c) in &x.free.degrees[n].diff[g] {
        let vi = v.index_of(u).expect("normal");
        let e = out.entry(*tg).or_default();
        *e = sparse_axpy(f, e, *c, &[(vi, 1)]);
    }
    out
}

/// Convenience: the D-complex Hom_V(X(L), M) with its filtration.
pub fn d_complex(x: &MayComplex, module: &SupermoduleSpec, weights: &WeightGrading) -> HomComplex {
    x.free.hom(module, weights)
}

/// Number of basis elements of X̄_n.
pub fn x_dims(x: &MayComplex) -> Vec<usize> {
    x.basis.iter().map(|b| b.len()).collect()
}
