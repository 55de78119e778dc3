//! Sign calculus for (Z x Z/2)-graded objects, formal linear combinations,
//! and the monomial algebra Λ(L₀̄) ⊗ Γ(L₁̄) ⊗ Γ'(L₀̄).

use crate::fplinalg::PrimeField;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_count((self.bit() + rhs.bit()) as u64)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_odd() { "1" } else { "0" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_exponent(e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
    /// The sign (-1)^(a*b) for two parities.
    pub fn koszul(a: Parity, b: Parity) -> Sign {
        if a.is_odd() && b.is_odd() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
    pub fn to_fp(self, f: PrimeField) -> u32 {
        f.sign(self == Sign::Minus)
    }
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// External degree together with internal parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub deg: i64,
    pub parity: Parity,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { deg: 0, parity: Parity::Even };
    pub fn new(deg: i64, parity: Parity) -> Self {
        Bidegree { deg, parity }
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree { deg: self.deg + rhs.deg, parity: self.parity + rhs.parity }
    }
}

/// Sign of the graded twist `a ⊗ b ↦ ± b ⊗ a`.
pub fn twist_sign(a: Bidegree, b: Bidegree) -> Sign {
    Sign::from_exponent(a.deg * b.deg) * Sign::koszul(a.parity, b.parity)
}

/// Sign picked up when a map of bidegree `g` moves past a vector of bidegree `v`.
pub fn map_tensor_sign(g: Bidegree, v: Bidegree) -> Sign {
    twist_sign(g, v)
}

/// A formal F_p-linear combination of keys. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, u32>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: u32) -> Self {
        let mut l = Self::new();
        if c != 0 {
            l.terms.insert(k, c);
        }
        l
    }

    pub fn add_term(&mut self, f: PrimeField, k: K, c: u32) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = f.add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, f: PrimeField, other: &LinComb<K>, c: u32) {
        if c == 0 {
            return;
        }
        for (k, &v) in &other.terms {
            self.add_term(f, k.clone(), f.mul(v, c));
        }
    }

    pub fn scaled(&self, f: PrimeField, c: u32) -> Self {
        let mut out = Self::new();
        out.add_scaled(f, self, c);
        out
    }

    pub fn coeff(&self, k: &K) -> u32 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u32)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, u32)> {
        self.terms.into_iter()
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: PrimeField, g: impl Fn(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, v) in self.iter() {
            out.add_term(f, g(k), v);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, u32)> for LinComb<K> {
    /// Collect without reduction; callers must pass residues and distinct keys.
    fn from_iter<I: IntoIterator<Item = (K, u32)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (k, v) in iter {
            if v != 0 {
                terms.insert(k, v);
            }
        }
        LinComb { terms }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("monomials live over different bases: ({0},{1}) vs ({2},{3})")]
    BasisMismatch(usize, usize, usize, usize),
}

/// Ordered names of an even-then-odd basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperBasis {
    pub even: Vec<String>,
    pub odd: Vec<String>,
}

impl SuperBasis {
    pub fn s(&self) -> usize {
        self.even.len()
    }
    pub fn t(&self) -> usize {
        self.odd.len()
    }
    pub fn dim(&self) -> usize {
        self.s() + self.t()
    }
    pub fn name(&self, i: usize) -> &str {
        if i < self.s() {
            &self.even[i]
        } else {
            &self.odd[i - self.s()]
        }
    }
    pub fn parity(&self, i: usize) -> Parity {
        if i < self.s() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.even.iter().chain(&self.odd).position(|n| n == name)
    }
}

/// A standard monomial ⟨x_{i_1}⋯x_{i_b}⟩ γ_{a_1}(y_1)⋯γ_{a_t}(y_t) γ'_{c_1}(x_1)⋯γ'_{c_s}(x_s).
///
/// `ext` holds the strictly increasing exterior indices (into the even
/// basis), `gamma` has length t, `gamma_prime` has length s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CgaMonomial {
    pub ext: Vec<u8>,
    pub gamma: Vec<u32>,
    pub gamma_prime: Vec<u32>,
}

impl CgaMonomial {
    pub fn one(s: usize, t: usize) -> Self {
        CgaMonomial { ext: Vec::new(), gamma: vec![0; t], gamma_prime: vec![0; s] }
    }

    pub fn ext_gen(s: usize, t: usize, i: usize) -> Self {
        let mut m = Self::one(s, t);
        m.ext.push(i as u8);
        m
    }

    pub fn gamma_gen(s: usize, t: usize, j: usize, r: u32) -> Self {
        let mut m = Self::one(s, t);
        m.gamma[j] = r;
        m
    }

    pub fn gamma_prime_gen(s: usize, t: usize, i: usize, r: u32) -> Self {
        let mut m = Self::one(s, t);
        m.gamma_prime[i] = r;
        m
    }

    pub fn s(&self) -> usize {
        self.gamma_prime.len()
    }
    pub fn t(&self) -> usize {
        self.gamma.len()
    }

    pub fn gamma_total(&self) -> u64 {
        self.gamma.iter().map(|&a| a as u64).sum()
    }

    pub fn gamma_prime_total(&self) -> u64 {
        self.gamma_prime.iter().map(|&a| a as u64).sum()
    }

    pub fn bidegree(&self) -> Bidegree {
        let g = self.gamma_total();
        Bidegree {
            deg: (self.ext.len() as u64 + g + 2 * self.gamma_prime_total()) as i64,
            parity: Parity::from_count(g),
        }
    }

    pub fn deg(&self) -> usize {
        self.bidegree().deg as usize
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.gamma_total())
    }

    pub fn has_prime_part(&self) -> bool {
        self.gamma_prime.iter().any(|&c| c > 0)
    }

    /// The Ȳ part (prime part zeroed) and the Γ' part (everything else zeroed).
    pub fn split_prime(&self) -> (CgaMonomial, CgaMonomial) {
        let mut y = self.clone();
        y.gamma_prime.iter_mut().for_each(|c| *c = 0);
        let mut g = CgaMonomial::one(self.s(), self.t());
        g.gamma_prime = self.gamma_prime.clone();
        (y, g)
    }

    pub fn display(&self, basis: &SuperBasis) -> String {
        let mut parts = Vec::new();
        if !self.ext.is_empty() {
            let names: Vec<&str> = self.ext.iter().map(|&i| basis.even[i as usize].as_str()).collect();
            parts.push(format!("<{}>", names.join(" ")));
        }
        for (j, &a) in self.gamma.iter().enumerate() {
            if a > 0 {
                parts.push(format!("g{}({})", a, basis.odd[j]));
            }
        }
        for (i, &c) in self.gamma_prime.iter().enumerate() {
            if c > 0 {
                parts.push(format!("g'{}({})", c, basis.even[i]));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

fn check_shape(a: &CgaMonomial, b: &CgaMonomial) -> Result<(), GradingError> {
    if a.s() != b.s() || a.t() != b.t() {
        return Err(GradingError::BasisMismatch(a.s(), a.t(), b.s(), b.t()));
    }
    Ok(())
}

/// Sign of the permutation sorting the concatenation of two strictly
/// increasing index lists, or `None` if they share an index.
fn merge_sign(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, Sign)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, Sign::from_exponent(inversions as i64)))
}

/// Product of two standard monomials: a scalar times one monomial, or zero.
pub fn cga_multiply(f: PrimeField, m1: &CgaMonomial, m2: &CgaMonomial) -> Result<Option<(u32, CgaMonomial)>, GradingError> {
    check_shape(m1, m2)?;
    let Some((ext, merge)) = merge_sign(&m1.ext, &m2.ext) else {
        return Ok(None);
    };
    // Moving the Γ part of m1 past the exterior part of m2.
    let pass = Sign::from_exponent((m1.gamma_total() * m2.ext.len() as u64) as i64);
    let mut coeff = (merge * pass).to_fp(f);
    let mut gamma = Vec::with_capacity(m1.t());
    for (&a, &b) in m1.gamma.iter().zip(&m2.gamma) {
        coeff = f.mul(coeff, f.binom((a + b) as u64, a as u64));
        gamma.push(a + b);
    }
    let mut gamma_prime = Vec::with_capacity(m1.s());
    for (&a, &b) in m1.gamma_prime.iter().zip(&m2.gamma_prime) {
        coeff = f.mul(coeff, f.binom((a + b) as u64, a as u64));
        gamma_prime.push(a + b);
    }
    if coeff == 0 {
        return Ok(None);
    }
    Ok(Some((coeff, CgaMonomial { ext, gamma, gamma_prime })))
}

/// Multiply two linear combinations of monomials.
pub fn cga_multiply_comb(f: PrimeField, a: &LinComb<CgaMonomial>, b: &LinComb<CgaMonomial>) -> LinComb<CgaMonomial> {
    let mut out = LinComb::new();
    for (m1, c1) in a.iter() {
        for (m2, c2) in b.iter() {
            if let Some((c, m)) = cga_multiply(f, m1, m2).expect("shapes agree") {
                out.add_term(f, m, f.mul(c, f.mul(c1, c2)));
            }
        }
    }
    out
}

pub type CgaTensor = LinComb<(CgaMonomial, CgaMonomial)>;

/// Product in A ⊗ A with (a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd, signs taken over
/// the full bidegree.
pub fn tensor_multiply(f: PrimeField, x: &CgaTensor, y: &CgaTensor) -> CgaTensor {
    let mut out = LinComb::new();
    for ((a, b), c1) in x.iter() {
        for ((c, d), c2) in y.iter() {
            let sign = twist_sign(b.bidegree(), c.bidegree());
            let Some((k1, ac)) = cga_multiply(f, a, c).expect("shape") else { continue };
            let Some((k2, bd)) = cga_multiply(f, b, d).expect("shape") else { continue };
            let coeff = f.mul(f.mul(c1, c2), f.mul(f.mul(k1, k2), sign.to_fp(f)));
            out.add_term(f, (ac, bd), coeff);
        }
    }
    out
}

/// Coproduct of a standard monomial: the exterior generators are primitive
/// and γ_r ↦ Σ γ_i ⊗ γ_{r-i} (also for γ').
pub fn cga_coproduct(f: PrimeField, m: &CgaMonomial) -> CgaTensor {
    let (s, t) = (m.s(), m.t());
    let one = CgaMonomial::one(s, t);
    let mut acc: CgaTensor = LinComb::single((one.clone(), one.clone()), 1);
    for &i in &m.ext {
        let g = CgaMonomial::ext_gen(s, t, i as usize);
        let mut d = LinComb::new();
        d.add_term(f, (g.clone(), one.clone()), 1);
        d.add_term(f, (one.clone(), g), 1);
        acc = tensor_multiply(f, &acc, &d);
    }
    for (j, &a) in m.gamma.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mut d = LinComb::new();
        for i in 0..=a {
            d.add_term(f, (CgaMonomial::gamma_gen(s, t, j, i), CgaMonomial::gamma_gen(s, t, j, a - i)), 1);
        }
        acc = tensor_multiply(f, &acc, &d);
    }
    for (j, &c) in m.gamma_prime.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut d = LinComb::new();
        for i in 0..=c {
            d.add_term(f, (CgaMonomial::gamma_prime_gen(s, t, j, i), CgaMonomial::gamma_prime_gen(s, t, j, c - i)), 1);
        }
        acc = tensor_multiply(f, &acc, &d);
    }
    acc
}

/// Compositions of `total` into `parts` nonnegative pieces, in lex order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out.sort();
    out
}

/// Strictly increasing subsets of 0..n of size k, lex order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u8);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Standard monomials of external degree `n`, sorted in the monomial order.
/// With `with_prime` the Γ' factor is included (degree 2 per unit).
pub fn cga_basis(s: usize, t: usize, n: usize, with_prime: bool) -> Vec<CgaMonomial> {
    let mut out = Vec::new();
    let max_c = if with_prime { n / 2 } else { 0 };
    for c in 0..=max_c {
        for b in 0..=s.min(n - 2 * c) {
            let a = n - 2 * c - b;
            if t == 0 && a > 0 {
                continue;
            }
            for ext in subsets(s, b) {
                for gamma in compositions(a as u32, t) {
                    for gamma_prime in compositions(c as u32, s) {
                        out.push(CgaMonomial { ext: ext.clone(), gamma: gamma.clone(), gamma_prime });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Binomial coefficient over the integers.
pub fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// dim Λ_s^n(k^{s|t}) = Σ_{a+b=n} C(s,a) C(t+b-1,b).
pub fn lambda_s_dim(s: usize, t: usize, n: usize) -> u64 {
    (0..=n.min(s))
        .map(|a| {
            let b = (n - a) as u64;
            let sym = if t == 0 { u64::from(b == 0) } else { binom_u64(t as u64 + b - 1, b) };
            binom_u64(s as u64, a as u64) * sym
        })
        .sum()
}
