//! PBW normal forms in U(L) and V(L), the Hopf structure maps, and the
//! finite dual superbialgebra V(L)*.

use crate::fplinalg::{sparse_axpy, sparse_from_pairs, PrimeField, SparseVec};
use crate::grading::{LinComb, Parity};
use crate::liesuper::LieSuperAlgebraSpec;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnvError {
    #[error("elements live in different enveloping algebras")]
    AmbientMismatch,
    #[error("monomial is not in normal form for V(L)")]
    NotRestrictedNormal,
}

/// x_1^{n_1} ... x_s^{n_s} y_{j_1} ... y_{j_k}, stored as one exponent per
/// basis element (odd exponents are 0 or 1).
///
/// Ordered first by length, then lexicographically by exponents, so the
/// unit comes first and bases are sorted by filtration level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    pub exps: Vec<u32>,
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        PbwMonomial { exps: vec![0; n] }
    }

    pub fn generator(i: usize, n: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    /// Monomial length (the filtration degree).
    pub fn len(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Same as [`is_one`](Self::is_one): the empty word.
    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    /// Letters in PBW order, with repetition.
    pub fn letters(&self) -> Vec<usize> {
        self.exps.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect()
    }

    /// Parity, given the number `s` of even basis elements.
    pub fn parity(&self, s: usize) -> Parity {
        Parity::from_count(self.exps[s..].iter().map(|&e| e as u64).sum())
    }

    fn last_letter(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        parts.join("*")
    }
}

/// An F_p-combination of PBW monomials, always in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnvElement {
    terms: LinComb<PbwMonomial>,
}

impl EnvElement {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn one(n: usize) -> Self {
        Self::from_monomial(PbwMonomial::one(n))
    }
    pub fn generator(i: usize, n: usize) -> Self {
        Self::from_monomial(PbwMonomial::generator(i, n))
    }
    pub fn from_monomial(m: PbwMonomial) -> Self {
        EnvElement { terms: LinComb::single(m, 1) }
    }
    /// Σ c_k e_k from a dense coefficient vector on the basis of L.
    pub fn from_dense(f: PrimeField, v: &[u32]) -> Self {
        let n = v.len();
        let mut e = Self::zero();
        for (k, &c) in v.iter().enumerate() {
            e.add_term(f, PbwMonomial::generator(k, n), c);
        }
        e
    }
    pub fn add_term(&mut self, f: PrimeField, m: PbwMonomial, c: u32) {
        self.terms.add_term(f, m, c);
    }
    pub fn add_scaled(&mut self, f: PrimeField, other: &EnvElement, c: u32) {
        self.terms.add_scaled(f, &other.terms, c);
    }
    pub fn scaled(&self, f: PrimeField, c: u32) -> Self {
        EnvElement { terms: self.terms.scaled(f, c) }
    }
    pub fn coeff(&self, m: &PbwMonomial) -> u32 {
        self.terms.coeff(m)
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn iter(&self) -> impl Iterator<Item = (&PbwMonomial, u32)> {
        self.terms.iter()
    }
    /// Largest monomial length appearing (0 for the zero element).
    pub fn max_length(&self) -> usize {
        self.iter().map(|(m, _)| m.len()).max().unwrap_or(0)
    }
    /// The counit: coefficient of the unit monomial.
    pub fn counit(&self) -> u32 {
        self.iter().find(|(m, _)| m.is_one()).map_or(0, |(_, c)| c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// U(L), infinite-dimensional; only ever used in bounded length.
    Universal,
    /// V(L) = U(L)/(x^p - x^[p]).
    Restricted,
}

/// Multiplication in U(L) or V(L) by rewriting to PBW normal form.
///
/// Right multiplication of a normal monomial by a generator is memoized.
#[derive(Debug)]
pub struct EnvAlgebra {
    spec: LieSuperAlgebraSpec,
    ambient: Ambient,
    cache: RwLock<HashMap<(PbwMonomial, usize), EnvElement>>,
}

impl Clone for EnvAlgebra {
    fn clone(&self) -> Self {
        EnvAlgebra { spec: self.spec.clone(), ambient: self.ambient, cache: RwLock::new(HashMap::new()) }
    }
}

impl EnvAlgebra {
    pub fn new(spec: LieSuperAlgebraSpec, ambient: Ambient) -> Self {
        EnvAlgebra { spec, ambient, cache: RwLock::new(HashMap::new()) }
    }
    pub fn universal(spec: LieSuperAlgebraSpec) -> Self {
        Self::new(spec, Ambient::Universal)
    }
    pub fn restricted(spec: LieSuperAlgebraSpec) -> Self {
        Self::new(spec, Ambient::Restricted)
    }
    pub fn spec(&self) -> &LieSuperAlgebraSpec {
        &self.spec
    }
    pub fn ambient(&self) -> Ambient {
        self.ambient
    }
    pub fn field(&self) -> PrimeField {
        self.spec.field()
    }
    fn n(&self) -> usize {
        self.spec.dim()
    }

    /// m · e_g for a normal monomial m.
    pub fn mul_monomial_generator(&self, m: &PbwMonomial, g: usize) -> EnvElement {
        if let Some(hit) = self.cache.read().expect("cache lock").get(&(m.clone(), g)) {
            return hit.clone();
        }
        let value = self.compute_mul_generator(m, g);
        self.cache.write().expect("cache lock").insert((m.clone(), g), value.clone());
        value
    }

    fn compute_mul_generator(&self, m: &PbwMonomial, g: usize) -> EnvElement {
        let f = self.field();
        let s = self.spec.s();
        let n = self.n();
        let Some(last) = m.last_letter() else {
            return EnvElement::generator(g, n);
        };
        if g > last {
            let mut out = m.clone();
            out.exps[g] = 1;
            return EnvElement::from_monomial(out);
        }
        let mut prefix = m.clone();
        prefix.exps[last] -= 1;
        if g == last {
            if g < s {
                let mut out = m.clone();
                out.exps[g] += 1;
                if self.ambient == Ambient::Restricted && out.exps[g] == f.p() {
                    out.exps[g] = 0;
                    return self.mul_by_vector(&out, self.spec.restriction(g));
                }
                return EnvElement::from_monomial(out);
            }
            // y·y = ½[y,y]
            let half: Vec<u32> = self.spec.bracket(g, g).iter().map(|&c| f.mul(c, f.half())).collect();
            return self.mul_by_vector(&prefix, &half);
        }
        // m = prefix·ℓ with ℓ > g: ℓ g = ±g ℓ + [ℓ,g]
        let sign = crate::grading::Sign::koszul(self.spec.parity(last), self.spec.parity(g));
        let mut out = EnvElement::zero();
        let pg = self.mul_monomial_generator(&prefix, g);
        for (t, c) in pg.iter() {
            out.add_scaled(f, &self.mul_monomial_generator(t, last), f.mul(c, sign.to_fp(f)));
        }
        out.add_scaled(f, &self.mul_by_vector(&prefix, self.spec.bracket(last, g)), 1);
        out
    }

    /// m · (Σ v_k e_k).
    fn mul_by_vector(&self, m: &PbwMonomial, v: &[u32]) -> EnvElement {
        let f = self.field();
        let mut out = EnvElement::zero();
        for (k, &c) in v.iter().enumerate() {
            if c != 0 {
                out.add_scaled(f, &self.mul_monomial_generator(m, k), c);
            }
        }
        out
    }

    /// a · e_g.
    pub fn mul_generator(&self, a: &EnvElement, g: usize) -> EnvElement {
        let f = self.field();
        let mut out = EnvElement::zero();
        for (m, c) in a.iter() {
            out.add_scaled(f, &self.mul_monomial_generator(m, g), c);
        }
        out
    }

    /// a · w for a normal monomial w (letters applied left to right).
    pub fn mul_monomial(&self, a: &EnvElement, w: &PbwMonomial) -> EnvElement {
        w.letters().into_iter().fold(a.clone(), |acc, g| self.mul_generator(&acc, g))
    }

    pub fn multiply(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        let f = self.field();
        let mut out = EnvElement::zero();
        for (w, c) in b.iter() {
            out.add_scaled(f, &self.mul_monomial(a, w), c);
        }
        out
    }

    /// Normal form of the product of a word of generators, times `coeff`.
    pub fn pbw_normalize(&self, word: &[usize], coeff: u32) -> EnvElement {
        let start = EnvElement::one(self.n()).scaled(self.field(), coeff);
        word.iter().fold(start, |acc, &g| self.mul_generator(&acc, g))
    }

    /// x_i^p - x_i^[p] as an element of U(L).
    pub fn p_central_element(&self, i: usize) -> EnvElement {
        let f = self.field();
        let n = self.n();
        let mut m = PbwMonomial::one(n);
        m.exps[i] = f.p();
        let mut z = EnvElement::from_monomial(m);
        for (k, &c) in self.spec.restriction(i).iter().enumerate() {
            if c != 0 {
                z.add_term(f, PbwMonomial::generator(k, n), f.neg(c));
            }
        }
        z
    }

    /// Δ(m) as a combination of monomial pairs; generators are primitive.
    pub fn coproduct_monomial(&self, m: &PbwMonomial) -> LinComb<(PbwMonomial, PbwMonomial)> {
        coproduct_monomial(self.field(), self.spec.s(), m)
    }

    pub fn coproduct(&self, a: &EnvElement) -> LinComb<(PbwMonomial, PbwMonomial)> {
        let f = self.field();
        let mut out = LinComb::new();
        for (m, c) in a.iter() {
            out.add_scaled(f, &self.coproduct_monomial(m), c);
        }
        out
    }

    /// The antipode, a super anti-automorphism with S(e) = -e on generators.
    pub fn antipode(&self, a: &EnvElement) -> EnvElement {
        let f = self.field();
        let mut out = EnvElement::zero();
        for (m, c) in a.iter() {
            out.add_scaled(f, &self.antipode_monomial(m), c);
        }
        out
    }

    fn antipode_monomial(&self, m: &PbwMonomial) -> EnvElement {
        let f = self.field();
        let s = self.spec.s();
        let n = self.n();
        let Some(g) = m.last_letter() else {
            return EnvElement::one(n);
        };
        let mut prefix = m.clone();
        prefix.exps[g] -= 1;
        // S(m'g) = (-1)^{m' g} S(g) S(m')
        let sign = crate::grading::Sign::koszul(prefix.parity(s), self.spec.parity(g));
        let rest = self.antipode_monomial(&prefix);
        let prod = self.multiply(&EnvElement::generator(g, n), &rest);
        prod.scaled(f, f.neg(sign.to_fp(f)))
    }

    /// All normal monomials of V(L), sorted by length then exponents.
    pub fn restricted_basis(&self) -> Vec<PbwMonomial> {
        restricted_basis(self.field().p(), self.spec.s(), self.spec.t())
    }
}

/// Coproduct of a PBW monomial: each letter goes left or right; an odd
/// letter placed left passes every odd letter already placed right.
pub fn coproduct_monomial(f: PrimeField, s: usize, m: &PbwMonomial) -> LinComb<(PbwMonomial, PbwMonomial)> {
    let n = m.exps.len();
    let mut out = LinComb::new();
    let ranges: Vec<u32> = m.exps.clone();
    let mut left = vec![0u32; n];
    loop {
        let right: Vec<u32> = ranges.iter().zip(&left).map(|(a, b)| a - b).collect();
        let mut c = 1u32;
        let mut odd_right_before = 0u32;
        for k in 0..n {
            c = f.mul(c, f.binom(ranges[k] as u64, left[k] as u64));
            if k >= s {
                if left[k] == 1 && odd_right_before % 2 == 1 {
                    c = f.neg(c);
                }
                odd_right_before += right[k];
            }
        }
        if c != 0 {
            out.add_term(f, (PbwMonomial { exps: left.clone() }, PbwMonomial { exps: right }), c);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if left[k] < ranges[k] {
                left[k] += 1;
                break;
            }
            left[k] = 0;
            k += 1;
        }
    }
}

pub fn restricted_basis(p: u32, s: usize, t: usize) -> Vec<PbwMonomial> {
    let mut out = vec![PbwMonomial::one(s + t)];
    for k in 0..s + t {
        let cap = if k < s { p - 1 } else { 1 };
        let mut next = Vec::with_capacity(out.len() * (cap as usize + 1));
        for m in &out {
            for e in 0..=cap {
                let mut m2 = m.clone();
                m2.exps[k] = e;
                next.push(m2);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// V(L) as a finite-dimensional algebra with a fixed ordered basis and
/// precomputed structure tensors.
#[derive(Debug, Clone)]
pub struct RestrictedEnvelope {
    env: EnvAlgebra,
    basis: Vec<PbwMonomial>,
    index: HashMap<PbwMonomial, usize>,
    mul: Vec<Vec<SparseVec>>,
    coproduct: Vec<Vec<(usize, usize, u32)>>,
    parity: Vec<Parity>,
}

impl RestrictedEnvelope {
    pub fn new(spec: &LieSuperAlgebraSpec) -> Self {
        let env = EnvAlgebra::restricted(spec.clone());
        let basis = env.restricted_basis();
        let index: HashMap<PbwMonomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = spec.dim();
        let f = spec.field();
        // Build products row by row: basis_a · basis_b = (basis_a · letters of b).
        let mul: Vec<Vec<SparseVec>> = crate::parallel::par_map(&basis, |a| {
            let ea = EnvElement::from_monomial(a.clone());
            basis
                .iter()
                .map(|b| {
                    let prod = env.mul_monomial(&ea, b);
                    sparse_from_pairs(f, prod.iter().map(|(m, c)| (index[m], c)).collect())
                })
                .collect()
        });
        let coproduct = basis
            .iter()
            .map(|m| {
                coproduct_monomial(f, spec.s(), m)
                    .iter()
                    .map(|((u, w), c)| (index[u], index[w], c))
                    .collect()
            })
            .collect();
        let parity = basis.iter().map(|m| m.parity(spec.s())).collect();
        let _ = n;
        RestrictedEnvelope { env, basis, index, mul, coproduct, parity }
    }

    pub fn spec(&self) -> &LieSuperAlgebraSpec {
        self.env.spec()
    }
    pub fn env(&self) -> &EnvAlgebra {
        &self.env
    }
    pub fn field(&self) -> PrimeField {
        self.env.field()
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[PbwMonomial] {
        &self.basis
    }
    pub fn index_of(&self, m: &PbwMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }
    /// Monomial length of basis element i.
    pub fn length(&self, i: usize) -> usize {
        self.basis[i].len()
    }
    /// Index of the basis element e_g of L inside V.
    pub fn generator_index(&self, g: usize) -> usize {
        self.index[&PbwMonomial::generator(g, self.spec().dim())]
    }
    /// basis_a · basis_b.
    pub fn mul_basis(&self, a: usize, b: usize) -> &SparseVec {
        &self.mul[a][b]
    }
    pub fn mul_vec(&self, x: &[(usize, u32)], y: &[(usize, u32)]) -> SparseVec {
        let f = self.field();
        let mut out = SparseVec::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                out = sparse_axpy(f, &out, f.mul(ca, cb), &self.mul[a][b]);
            }
        }
        out
    }
    /// Δ(basis_m) as triples (left index, right index, coefficient).
    pub fn coproduct(&self, m: usize) -> &[(usize, usize, u32)] {
        &self.coproduct[m]
    }
    pub fn to_vec(&self, e: &EnvElement) -> Result<SparseVec, EnvError> {
        let pairs = e
            .iter()
            .map(|(m, c)| self.index.get(m).map(|&i| (i, c)).ok_or(EnvError::NotRestrictedNormal))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(sparse_from_pairs(self.field(), pairs))
    }
    pub fn from_vec(&self, v: &[(usize, u32)]) -> EnvElement {
        let f = self.field();
        let mut e = EnvElement::zero();
        for &(i, c) in v {
            e.add_term(f, self.basis[i].clone(), c);
        }
        e
    }
}

/// V(L)* with basis ξ_m dual to the PBW basis of V(L).
#[derive(Debug, Clone)]
pub struct DualBialgebra {
    field: PrimeField,
    parity: Vec<Parity>,
    levels: Vec<usize>,
    product: Vec<Vec<SparseVec>>,
    reduced_coproduct: Vec<Vec<(usize, usize, u32)>>,
}

impl DualBialgebra {
    pub fn new(v: &RestrictedEnvelope) -> Self {
        let f = v.field();
        let d = v.dim();
        let parity: Vec<Parity> = (0..d).map(|i| v.parity(i)).collect();
        // (ξ_a ξ_b)(m) = Σ_{Δm} c (-1)^{b·a} [m1 = a][m2 = b]
        let mut pairs: Vec<Vec<Vec<(usize, u32)>>> = vec![vec![Vec::new(); d]; d];
        for m in 0..d {
            for &(a, b, c) in v.coproduct(m) {
                let sign = crate::grading::Sign::koszul(parity[a], parity[b]);
                pairs[a][b].push((m, f.mul(c, sign.to_fp(f))));
            }
        }
        let product = pairs.into_iter().map(|row| row.into_iter().map(|p| sparse_from_pairs(f, p)).collect()).collect();
        // Δ̄ξ_m = Σ_{u,w ≠ 1} coef_m(uw)(-1)^{w·u} ξ_u ⊗ ξ_w
        let mut reduced_coproduct = vec![Vec::new(); d];
        for u in 1..d {
            for w in 1..d {
                let sign = crate::grading::Sign::koszul(parity[w], parity[u]);
                for &(m, c) in v.mul_basis(u, w) {
                    reduced_coproduct[m].push((u, w, f.mul(c, sign.to_fp(f))));
                }
            }
        }
        let levels = (0..d).map(|i| v.length(i)).collect();
        DualBialgebra { field: f, parity, levels, product, reduced_coproduct }
    }

    pub fn dim(&self) -> usize {
        self.levels.len()
    }
    pub fn field(&self) -> PrimeField {
        self.field
    }
    /// Index of the counit ε = ξ_1, the unit of V*.
    pub fn unit(&self) -> usize {
        0
    }
    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }
    /// ξ_m lies in I_ε^n exactly for n ≤ len(m).
    pub fn level(&self, i: usize) -> usize {
        self.levels[i]
    }
    pub fn mul_basis(&self, a: usize, b: usize) -> &SparseVec {
        &self.product[a][b]
    }
    pub fn mul(&self, x: &[(usize, u32)], y: &[(usize, u32)]) -> SparseVec {
        let f = self.field;
        let mut out = SparseVec::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                out = sparse_axpy(f, &out, f.mul(ca, cb), &self.product[a][b]);
            }
        }
        out
    }
    pub fn power(&self, x: &[(usize, u32)], k: u32) -> SparseVec {
        let mut acc = vec![(self.unit(), 1)];
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }
    /// The reduced coproduct, with both tensor factors in I_ε.
    pub fn reduced_coproduct(&self, m: usize) -> &[(usize, usize, u32)] {
        &self.reduced_coproduct[m]
    }
    /// Smallest level among the terms of x (the largest n with x ∈ I_ε^n).
    pub fn filtration_level(&self, x: &[(usize, u32)]) -> Option<usize> {
        x.iter().map(|&(i, _)| self.levels[i]).min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn borel(p: u32) -> LieSuperAlgebraSpec {
        let f = PrimeField::new(p).unwrap();
        let mut l = LieSuperAlgebraSpec::new(f, &["h", "e"], &[]).unwrap();
        l.set_bracket_named("h", "e", &[("e", 1)]).unwrap();
        l.set_restriction_named("h", &[("h", 1)]).unwrap();
        l
    }

    #[test]
    fn rewrite_examples() {
        let l = borel(5);
        let u = EnvAlgebra::universal(l.clone());
        // e·h = h·e - e
        let eh = u.pbw_normalize(&[1, 0], 1);
        let mut expect = EnvElement::zero();
        expect.add_term(l.field(), PbwMonomial { exps: vec![1, 1] }, 1);
        expect.add_term(l.field(), PbwMonomial { exps: vec![0, 1] }, 4);
        assert_eq!(eh, expect);

        let f = PrimeField::new(3).unwrap();
        let mut h = LieSuperAlgebraSpec::new(f, &["x"], &["y"]).unwrap();
        h.set_bracket_named("y", "y", &[("x", 1)]).unwrap();
        let u = EnvAlgebra::universal(h);
        let mut expect = EnvElement::zero();
        expect.add_term(f, PbwMonomial::generator(0, 2), f.half());
        assert_eq!(u.pbw_normalize(&[1, 1], 1), expect);
    }

    #[test]
    fn restricted_power() {
        let f = PrimeField::new(3).unwrap();
        let mut l = LieSuperAlgebraSpec::abelian(f, 1, 0);
        l.set_restriction(0, &[(0, 1)]).unwrap();
        let v = EnvAlgebra::restricted(l);
        assert_eq!(v.pbw_normalize(&[0, 0, 0], 1), EnvElement::generator(0, 1));
    }

    #[test]
    fn coproduct_of_square() {
        let f = PrimeField::new(5).unwrap();
        let cop = coproduct_monomial(f, 1, &PbwMonomial { exps: vec![2] });
        assert_eq!(cop.len(), 3);
        assert_eq!(cop.coeff(&(PbwMonomial { exps: vec![1] }, PbwMonomial { exps: vec![1] })), 2);
    }

    #[test]
    fn dimension_and_dual() {
        let f = PrimeField::new(3).unwrap();
        let l = LieSuperAlgebraSpec::abelian(f, 1, 0);
        let v = RestrictedEnvelope::new(&l);
        assert_eq!(v.dim(), 3);
        let d = DualBialgebra::new(&v);
        // ξ_1 ξ_1 = 2 ξ_2 in k[x]/x^3
        assert_eq!(d.mul_basis(1, 1), &vec![(2, 2)]);
        assert_eq!(d.mul_basis(0, 0), &vec![(0, 1)]);
        assert_eq!(RestrictedEnvelope::new(&borel(5)).dim(), 25);
    }
}
