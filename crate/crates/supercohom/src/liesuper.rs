//! Restricted Lie superalgebras given by structure constants, and their
//! finite-dimensional supermodules.

use crate::env::{EnvAlgebra, EnvElement, PbwMonomial};
use crate::fplinalg::{DenseMatrix, PrimeField};
use crate::grading::{Parity, Sign, SuperBasis};
use num_rational::Rational64;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("unknown basis element '{0}'")]
    UnknownName(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("restriction is only defined on even basis elements (index {0})")]
    RestrictionOnOdd(usize),
    #[error("duplicate basis name '{0}'")]
    DuplicateName(String),
}

/// Structure constants of a finite-dimensional restricted Lie superalgebra.
///
/// Basis indices `0..s` are even, `s..s+t` are odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieSuperAlgebraSpec {
    field: PrimeField,
    basis: SuperBasis,
    bracket: Vec<Vec<u32>>,
    restriction: Vec<Vec<u32>>,
}

impl LieSuperAlgebraSpec {
    pub fn new(field: PrimeField, even: &[&str], odd: &[&str]) -> Result<Self, LieError> {
        let basis = SuperBasis {
            even: even.iter().map(|s| s.to_string()).collect(),
            odd: odd.iter().map(|s| s.to_string()).collect(),
        };
        for (i, n) in basis.even.iter().chain(&basis.odd).enumerate() {
            if basis.index_of(n) != Some(i) {
                return Err(LieError::DuplicateName(n.clone()));
            }
        }
        let n = basis.dim();
        Ok(LieSuperAlgebraSpec {
            field,
            bracket: vec![vec![0; n]; n * n],
            restriction: vec![vec![0; n]; basis.s()],
            basis,
        })
    }

    /// The abelian algebra with `s` even and `t` odd basis vectors and zero restriction.
    pub fn abelian(field: PrimeField, s: usize, t: usize) -> Self {
        let even: Vec<String> = (1..=s).map(|i| format!("x{i}")).collect();
        let odd: Vec<String> = (1..=t).map(|i| format!("y{i}")).collect();
        let e: Vec<&str> = even.iter().map(|s| s.as_str()).collect();
        let o: Vec<&str> = odd.iter().map(|s| s.as_str()).collect();
        Self::new(field, &e, &o).expect("distinct generated names")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn basis(&self) -> &SuperBasis {
        &self.basis
    }
    pub fn s(&self) -> usize {
        self.basis.s()
    }
    pub fn t(&self) -> usize {
        self.basis.t()
    }
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }
    pub fn index(&self, name: &str) -> Result<usize, LieError> {
        self.basis.index_of(name).ok_or_else(|| LieError::UnknownName(name.to_string()))
    }

    /// [e_i, e_j] as a dense coefficient vector.
    pub fn bracket(&self, i: usize, j: usize) -> &[u32] {
        &self.bracket[i * self.dim() + j]
    }

    /// x_i^{[p]} as a dense coefficient vector (i even).
    pub fn restriction(&self, i: usize) -> &[u32] {
        &self.restriction[i]
    }

    fn vector(&self, coeffs: &[(usize, i64)]) -> Result<Vec<u32>, LieError> {
        let mut v = vec![0u32; self.dim()];
        for &(k, c) in coeffs {
            if k >= self.dim() {
                return Err(LieError::IndexOutOfRange(k));
            }
            v[k] = self.field.add(v[k], self.field.reduce(c));
        }
        Ok(v)
    }

    /// Set [e_i,e_j] and fill [e_j,e_i] by super skew-symmetry.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: &[(usize, i64)]) -> Result<(), LieError> {
        let v = self.vector(coeffs)?;
        let f = self.field;
        let sign = Sign::koszul(self.parity(i), self.parity(j));
        // [e_j, e_i] = -(-1)^{ij} [e_i, e_j]
        let factor = f.neg(sign.to_fp(f));
        let w: Vec<u32> = v.iter().map(|&c| f.mul(c, factor)).collect();
        let n = self.dim();
        self.bracket[i * n + j] = v;
        self.bracket[j * n + i] = w;
        Ok(())
    }

    /// Overwrite a single table entry without touching its mirror.
    pub fn set_bracket_raw(&mut self, i: usize, j: usize, coeffs: &[(usize, i64)]) -> Result<(), LieError> {
        let v = self.vector(coeffs)?;
        let n = self.dim();
        self.bracket[i * n + j] = v;
        Ok(())
    }

    pub fn set_restriction(&mut self, i: usize, coeffs: &[(usize, i64)]) -> Result<(), LieError> {
        if i >= self.s() {
            return Err(LieError::RestrictionOnOdd(i));
        }
        self.restriction[i] = self.vector(coeffs)?;
        Ok(())
    }

    /// Set by names: `[a,b] = Σ c·e`.
    pub fn set_bracket_named(&mut self, a: &str, b: &str, coeffs: &[(&str, i64)]) -> Result<(), LieError> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        let cs = coeffs.iter().map(|&(n, c)| Ok((self.index(n)?, c))).collect::<Result<Vec<_>, LieError>>()?;
        self.set_bracket(i, j, &cs)
    }

    pub fn set_restriction_named(&mut self, a: &str, coeffs: &[(&str, i64)]) -> Result<(), LieError> {
        let i = self.index(a)?;
        let cs = coeffs.iter().map(|&(n, c)| Ok((self.index(n)?, c))).collect::<Result<Vec<_>, LieError>>()?;
        self.set_restriction(i, &cs)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| v.iter().all(|&c| c == 0))
    }

    pub fn has_trivial_restriction(&self) -> bool {
        self.restriction.iter().all(|v| v.iter().all(|&c| c == 0))
    }

    /// Bilinear extension of the bracket to arbitrary elements.
    pub fn extend_bracket(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![0u32; n];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, &v) in self.bracket(i, j).iter().enumerate() {
                    if v != 0 {
                        out[k] = f.add(out[k], f.mul(c, v));
                    }
                }
            }
        }
        out
    }

    /// The even part L₀̄ as an algebra in its own right.
    pub fn even_part(&self) -> LieSuperAlgebraSpec {
        let s = self.s();
        let even: Vec<&str> = self.basis.even.iter().map(|n| n.as_str()).collect();
        let mut l0 = LieSuperAlgebraSpec::new(self.field, &even, &[]).expect("names distinct");
        for i in 0..s {
            for j in 0..s {
                l0.bracket[i * s + j] = self.bracket(i, j)[..s].to_vec();
            }
            l0.restriction[i] = self.restriction[i][..s].to_vec();
        }
        l0
    }

    /// Same superspace with zero bracket and zero restriction.
    pub fn abelianized(&self) -> LieSuperAlgebraSpec {
        let e: Vec<&str> = self.basis.even.iter().map(|s| s.as_str()).collect();
        let o: Vec<&str> = self.basis.odd.iter().map(|s| s.as_str()).collect();
        LieSuperAlgebraSpec::new(self.field, &e, &o).expect("names distinct")
    }

    fn unit(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Integer weight vectors making every structure constant homogeneous.
    ///
    /// Returns one weight vector (of length `rank`) per basis element of L
    /// and per basis element of the optional module.
    pub fn weight_grading(&self, module: Option<&SupermoduleSpec>) -> WeightGrading {
        let n = self.dim();
        let m = module.map_or(0, |m| m.dim());
        let unknowns = n + m;
        let mut rows: Vec<Vec<Rational64>> = Vec::new();
        let eq = |terms: &[(usize, i64)]| {
            let mut r = vec![Rational64::from_integer(0); unknowns];
            for &(k, c) in terms {
                r[k] += Rational64::from_integer(c);
            }
            r
        };
        for i in 0..n {
            for j in 0..n {
                for (k, &c) in self.bracket(i, j).iter().enumerate() {
                    if c != 0 {
                        rows.push(eq(&[(k, 1), (i, -1), (j, -1)]));
                    }
                }
            }
        }
        let p = self.field.p() as i64;
        for i in 0..self.s() {
            for (k, &c) in self.restriction(i).iter().enumerate() {
                if c != 0 {
                    rows.push(eq(&[(k, 1), (i, -p)]));
                }
            }
        }
        if let Some(md) = module {
            for a in 0..n {
                let rho = &md.action[a];
                for l in 0..m {
                    for k in 0..m {
                        if rho.get(l, k) != 0 {
                            rows.push(eq(&[(n + l, 1), (a, -1), (n + k, -1)]));
                        }
                    }
                }
            }
        }
        let kernel = rational_kernel(&rows, unknowns);
        let rank = kernel.len();
        let per = |idx: usize| -> Vec<i64> { kernel.iter().map(|v| v[idx]).collect() };
        WeightGrading { rank, algebra: (0..n).map(per).collect(), module: (n..n + m).map(per).collect() }
    }
}

/// Integer kernel basis of a rational system, one vector per free variable.
fn rational_kernel(rows: &[Vec<Rational64>], unknowns: usize) -> Vec<Vec<i64>> {
    let zero = Rational64::from_integer(0);
    let mut m: Vec<Vec<Rational64>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != zero) else { continue };
        m.swap(r, pr);
        let inv = Rational64::from_integer(1) / m[r][c];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != zero {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut out = Vec::new();
    for free in (0..unknowns).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero; unknowns];
        v[free] = Rational64::from_integer(1);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free];
        }
        let lcm = v.iter().fold(1i64, |acc, x| num_integer_lcm(acc, *x.denom()));
        out.push(v.iter().map(|x| (x * Rational64::from_integer(lcm)).to_integer()).collect());
    }
    out
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    (a / gcd(a, b) * b).abs()
}

/// Per-basis-element integer weights; see [`LieSuperAlgebraSpec::weight_grading`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightGrading {
    pub rank: usize,
    pub algebra: Vec<Vec<i64>>,
    pub module: Vec<Vec<i64>>,
}

impl WeightGrading {
    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank]
    }
    pub fn add_into(acc: &mut [i64], w: &[i64], times: i64) {
        for (a, b) in acc.iter_mut().zip(w) {
            *a += b * times;
        }
    }
    /// Weight of a PBW monomial.
    pub fn of_pbw(&self, m: &PbwMonomial) -> Vec<i64> {
        let mut w = self.zero();
        for (i, &e) in m.exps.iter().enumerate() {
            if e > 0 {
                Self::add_into(&mut w, &self.algebra[i], e as i64);
            }
        }
        w
    }
}

/// A finite-dimensional supermodule: parities of a basis of M and one
/// action matrix per basis element of L (column k is the image of m_k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupermoduleSpec {
    pub name: String,
    pub parity: Vec<Parity>,
    pub action: Vec<DenseMatrix>,
}

impl SupermoduleSpec {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn trivial(l: &LieSuperAlgebraSpec) -> Self {
        SupermoduleSpec { name: "k".into(), parity: vec![Parity::Even], action: vec![DenseMatrix::zero(1, 1); l.dim()] }
    }

    pub fn adjoint(l: &LieSuperAlgebraSpec) -> Self {
        let n = l.dim();
        let action = (0..n)
            .map(|a| {
                let mut m = DenseMatrix::zero(n, n);
                for k in 0..n {
                    for (lidx, &c) in l.bracket(a, k).iter().enumerate() {
                        m.set(lidx, k, c);
                    }
                }
                m
            })
            .collect();
        SupermoduleSpec { name: "adjoint".into(), parity: (0..n).map(|i| l.parity(i)).collect(), action }
    }

    /// Action of a PBW monomial of U(L) or V(L) (product of generator matrices).
    pub fn act_monomial(&self, f: PrimeField, m: &PbwMonomial) -> DenseMatrix {
        let mut acc = DenseMatrix::identity(self.dim());
        // u = g_1 g_2 ... g_r acts as rho(g_1) ... rho(g_r)
        for g in m.letters().into_iter().rev() {
            acc = self.action[g].mul(f, &acc);
        }
        acc
    }

    pub fn act_element(&self, f: PrimeField, u: &EnvElement) -> DenseMatrix {
        let mut acc = DenseMatrix::zero(self.dim(), self.dim());
        for (m, c) in u.iter() {
            acc = acc.add(f, &self.act_monomial(f, m).scale(f, c));
        }
        acc
    }
}

/// One violated identity together with the basis indices witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SkewSymmetry { i: usize, j: usize },
    Parity { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, k: usize },
    RestrictionNotEven { i: usize },
    NotCentral { i: usize, j: usize },
    PbwAssociativity { monomial: usize, g: usize, h: usize },
    ModuleShape { a: usize },
    ModuleParity { a: usize },
    ModuleBracket { a: usize, b: usize },
    ModuleRestriction { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SkewSymmetry { i, j } => write!(f, "super skew-symmetry fails for basis pair ({i},{j})"),
            Violation::Parity { i, j, k } => write!(f, "parity rule fails: [e{i},e{j}] has a component on e{k} of the wrong parity"),
            Violation::Jacobi { i, j, k } => write!(f, "super Jacobi identity fails on basis triple ({i},{j},{k})"),
            Violation::RestrictionNotEven { i } => write!(f, "restriction of e{i} leaves the even part"),
            Violation::NotCentral { i, j } => write!(f, "x{i}^p - x{i}^[p] does not commute with e{j} in U(L)"),
            Violation::PbwAssociativity { monomial, g, h } => {
                write!(f, "restricted PBW multiplication not associative at (monomial {monomial}, e{g}, e{h})")
            }
            Violation::ModuleShape { a } => write!(f, "action matrix of e{a} has the wrong shape"),
            Violation::ModuleParity { a } => write!(f, "action of e{a} does not respect parity"),
            Violation::ModuleBracket { a, b } => write!(f, "rho([e{a},e{b}]) differs from the supercommutator"),
            Violation::ModuleRestriction { i } => write!(f, "rho(x{i})^p differs from rho(x{i}^[p])"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check skew-symmetry, parity, Jacobi, evenness of the restriction,
/// centrality of x^p - x^[p] in U(L) and the restricted PBW structure.
pub fn validate_algebra(spec: &LieSuperAlgebraSpec) -> ValidationReport {
    let f = spec.field();
    let n = spec.dim();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let sign = Sign::koszul(spec.parity(i), spec.parity(j));
            let expected: Vec<u32> = spec.bracket(j, i).iter().map(|&c| f.neg(f.mul(c, sign.to_fp(f)))).collect();
            if spec.bracket(i, j) != expected.as_slice() && i <= j {
                violations.push(Violation::SkewSymmetry { i, j });
            }
            for (k, &c) in spec.bracket(i, j).iter().enumerate() {
                if c != 0 && spec.parity(k) != spec.parity(i) + spec.parity(j) {
                    violations.push(Violation::Parity { i, j, k });
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (spec.unit(i), spec.unit(j), spec.unit(k));
                let (pa, pb, pc) = (spec.parity(i), spec.parity(j), spec.parity(k));
                let t1 = spec.extend_bracket(&a, &spec.extend_bracket(&b, &c));
                let t2 = spec.extend_bracket(&b, &spec.extend_bracket(&c, &a));
                let t3 = spec.extend_bracket(&c, &spec.extend_bracket(&a, &b));
                let (s1, s2, s3) = (Sign::koszul(pa, pc), Sign::koszul(pb, pa), Sign::koszul(pc, pb));
                let ok = (0..n).all(|e| {
                    let v = f.add(f.add(f.mul(t1[e], s1.to_fp(f)), f.mul(t2[e], s2.to_fp(f))), f.mul(t3[e], s3.to_fp(f)));
                    v == 0
                });
                if !ok {
                    violations.push(Violation::Jacobi { i, j, k });
                }
            }
        }
    }
    for i in 0..spec.s() {
        if spec.restriction(i)[spec.s()..].iter().any(|&c| c != 0) {
            violations.push(Violation::RestrictionNotEven { i });
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    let u = EnvAlgebra::universal(spec.clone());
    for i in 0..spec.s() {
        let z = u.p_central_element(i);
        for j in 0..n {
            let g = EnvElement::generator(j, n);
            let lhs = u.multiply(&z, &g);
            let rhs = u.multiply(&g, &z);
            if lhs != rhs {
                violations.push(Violation::NotCentral { i, j });
            }
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    let v = EnvAlgebra::restricted(spec.clone());
    let basis = v.restricted_basis();
    'outer: for (mi, m) in basis.iter().enumerate() {
        let me = EnvElement::from_monomial(m.clone());
        for g in 0..n {
            let ge = EnvElement::generator(g, n);
            let mg = v.multiply(&me, &ge);
            for h in 0..n {
                let he = EnvElement::generator(h, n);
                let left = v.multiply(&mg, &he);
                let right = v.multiply(&me, &v.multiply(&ge, &he));
                if left != right {
                    violations.push(Violation::PbwAssociativity { monomial: mi, g, h });
                    break 'outer;
                }
            }
        }
    }
    ValidationReport { violations }
}

/// Check parity compatibility, the bracket relation and, when `restricted`,
/// the p-th power relation for the action matrices.
pub fn validate_supermodule(m: &SupermoduleSpec, l: &LieSuperAlgebraSpec, restricted: bool) -> ValidationReport {
    let f = l.field();
    let n = l.dim();
    let d = m.dim();
    let mut violations = Vec::new();
    if m.action.len() != n {
        violations.push(Violation::ModuleShape { a: m.action.len().min(n) });
        return ValidationReport { violations };
    }
    for (a, rho) in m.action.iter().enumerate() {
        if rho.rows() != d || rho.cols() != d {
            violations.push(Violation::ModuleShape { a });
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    for (a, rho) in m.action.iter().enumerate() {
        let pa = l.parity(a);
        let bad = (0..d).any(|r| (0..d).any(|c| rho.get(r, c) != 0 && m.parity[r] != m.parity[c] + pa));
        if bad {
            violations.push(Violation::ModuleParity { a });
        }
    }
    let combo = |v: &[u32]| -> DenseMatrix {
        let mut acc = DenseMatrix::zero(d, d);
        for (k, &c) in v.iter().enumerate() {
            if c != 0 {
                acc = acc.add(f, &m.action[k].scale(f, c));
            }
        }
        acc
    };
    for a in 0..n {
        for b in 0..n {
            let lhs = combo(l.bracket(a, b));
            let sign = Sign::koszul(l.parity(a), l.parity(b));
            let ab = m.action[a].mul(f, &m.action[b]);
            let ba = m.action[b].mul(f, &m.action[a]).scale(f, f.neg(sign.to_fp(f)));
            if lhs != ab.add(f, &ba) {
                violations.push(Violation::ModuleBracket { a, b });
            }
        }
    }
    if restricted {
        for i in 0..l.s() {
            let mut pow = DenseMatrix::identity(d);
            for _ in 0..f.p() {
                pow = pow.mul(f, &m.action[i]);
            }
            if pow != combo(l.restriction(i)) {
                violations.push(Violation::ModuleRestriction { i });
            }
        }
    }
    ValidationReport { violations }
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
    fn abelian_is_valid() {
        let f = PrimeField::new(3).unwrap();
        assert!(validate_algebra(&LieSuperAlgebraSpec::abelian(f, 2, 1)).is_valid());
    }

    #[test]
    fn borel_is_valid_and_ad_h_iterates() {
        let l = borel(5);
        assert!(validate_algebra(&l).is_valid());
        // ad_h^5(e) = e = [h^[5], e]
        let mut v = vec![0, 1];
        let h = vec![1, 0];
        for _ in 0..5 {
            v = l.extend_bracket(&h, &v);
        }
        assert_eq!(v, vec![0, 1]);
    }

    #[test]
    fn odd_square_onto_odd_is_a_parity_violation() {
        let f = PrimeField::new(3).unwrap();
        let mut l = LieSuperAlgebraSpec::new(f, &[], &["y"]).unwrap();
        l.set_bracket_named("y", "y", &[("y", 1)]).unwrap();
        let rep = validate_algebra(&l);
        assert!(rep.violations.iter().any(|v| matches!(v, Violation::Parity { .. })));
    }

    #[test]
    fn extend_bracket_examples() {
        let l = borel(5);
        assert_eq!(l.extend_bracket(&[0, 0], &[1, 1]), vec![0, 0]);
        assert_eq!(l.extend_bracket(&[0, 1], &[1, 0]), vec![0, 4]);
        let f = PrimeField::new(3).unwrap();
        let mut h = LieSuperAlgebraSpec::new(f, &["x"], &["y"]).unwrap();
        h.set_bracket_named("y", "y", &[("x", 1)]).unwrap();
        assert_eq!(h.extend_bracket(&[0, 1], &[0, 1]), vec![1, 0]);
    }

    #[test]
    fn modules() {
        let l = borel(5);
        assert!(validate_supermodule(&SupermoduleSpec::trivial(&l), &l, true).is_valid());
        assert!(validate_supermodule(&SupermoduleSpec::adjoint(&l), &l, true).is_valid());
        let f = PrimeField::new(3).unwrap();
        let k0 = LieSuperAlgebraSpec::abelian(f, 1, 0);
        let mut m = SupermoduleSpec::trivial(&k0);
        m.action[0] = DenseMatrix::identity(1);
        assert!(validate_supermodule(&m, &k0, false).is_valid());
        assert!(!validate_supermodule(&m, &k0, true).is_valid());
    }

    #[test]
    fn weights() {
        let l = borel(3);
        let w = l.weight_grading(None);
        assert_eq!(w.rank, 1);
        assert_eq!(w.algebra[0], vec![0]);
        assert_ne!(w.algebra[1], vec![0]);
        let f = PrimeField::new(3).unwrap();
        assert_eq!(LieSuperAlgebraSpec::abelian(f, 1, 2).weight_grading(None).rank, 3);
    }
}
