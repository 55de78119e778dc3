//! The Koszul resolution Y(L) = U(L) ⊗ Λ(L₀̄) ⊗ Γ(L₁̄), its reduction W(L)
//! over V(L), Lie superalgebra cochains and their cup product.

use crate::complex::{cohomology_basis, CohomologyBasis};
use crate::env::{Ambient, PbwMonomial};
use crate::fplinalg::{sparse_from_pairs, PrimeField, SparseVec};
use crate::free::{FreeComplex, FreeDegree, HomComplex};
use crate::grading::{cga_basis, cga_coproduct, cga_multiply, CgaMonomial, LinComb, Parity, Sign};
use crate::liesuper::{LieSuperAlgebraSpec, SupermoduleSpec, WeightGrading};
use std::collections::HashMap;

/// Elements u ⊗ z of Y(L) (or W(L)): PBW coefficient and standard monomial.
pub type YElement = LinComb<(PbwMonomial, CgaMonomial)>;

/// s: L → Ȳ_1(L) applied to a dense vector.
pub fn s_map(l: &LieSuperAlgebraSpec, v: &[u32]) -> LinComb<CgaMonomial> {
    let f = l.field();
    let (s, t) = (l.s(), l.t());
    let mut out = LinComb::new();
    for (k, &c) in v.iter().enumerate() {
        let m = if k < s { CgaMonomial::ext_gen(s, t, k) } else { CgaMonomial::gamma_gen(s, t, k - s, 1) };
        out.add_term(f, m, c);
    }
    out
}

fn mul_into(f: PrimeField, out: &mut LinComb<CgaMonomial>, a: &CgaMonomial, b: &CgaMonomial, c: u32) {
    if let Some((k, m)) = cga_multiply(f, a, b).expect("same shape") {
        out.add_term(f, m, f.mul(k, c));
    }
}

fn product3(f: PrimeField, a: &CgaMonomial, mid: &LinComb<CgaMonomial>, b: &CgaMonomial) -> LinComb<CgaMonomial> {
    let mut left = LinComb::new();
    for (m, c) in mid.iter() {
        mul_into(f, &mut left, a, m, c);
    }
    let mut out = LinComb::new();
    for (m, c) in left.iter() {
        mul_into(f, &mut out, m, b, c);
    }
    out
}

fn without_ext(m: &CgaMonomial, drop: &[usize]) -> CgaMonomial {
    let mut out = m.clone();
    out.ext = m.ext.iter().enumerate().filter(|(k, _)| !drop.contains(k)).map(|(_, &i)| i).collect();
    out
}

fn lower_gamma(m: &CgaMonomial, j: usize, by: u32) -> Option<CgaMonomial> {
    if m.gamma[j] < by {
        return None;
    }
    let mut out = m.clone();
    out.gamma[j] -= by;
    Some(out)
}

/// The Koszul differential of u = 1 times a standard monomial (any Γ'
/// part is carried along untouched). Coefficients are 1 or generators.
pub fn koszul_differential(l: &LieSuperAlgebraSpec, m: &CgaMonomial) -> YElement {
    let f = l.field();
    let (s, t) = (l.s(), l.t());
    let n = s + t;
    let unit = PbwMonomial::one(n);
    let b = m.ext.len();
    let mut out = YElement::new();
    let sgn = |e: usize| Sign::from_exponent(e as i64).to_fp(f);

    for j in 0..b {
        let x = m.ext[j] as usize;
        out.add_term(f, (PbwMonomial::generator(x, n), without_ext(m, &[j])), sgn(j));
    }
    for yl in 0..t {
        if let Some(rest) = lower_gamma(m, yl, 1) {
            out.add_term(f, (PbwMonomial::generator(s + yl, n), rest), sgn(b));
        }
    }
    let mut pure = LinComb::new();
    for j in 0..b {
        for k in j + 1..b {
            let br = l.bracket(m.ext[j] as usize, m.ext[k] as usize);
            let rest = without_ext(m, &[j, k]);
            for (z, c) in s_map(l, br).iter() {
                mul_into(f, &mut pure, z, &rest, f.mul(c, sgn(j + k)));
            }
        }
    }
    for j in 0..b {
        let rest0 = without_ext(m, &[j]);
        for yl in 0..t {
            let Some(rest) = lower_gamma(&rest0, yl, 1) else { continue };
            let br = l.bracket(m.ext[j] as usize, s + yl);
            for (z, c) in s_map(l, br).iter() {
                mul_into(f, &mut pure, &rest, z, f.mul(c, sgn(j + 1)));
            }
        }
    }
    for j in 0..t {
        for k in j + 1..t {
            let Some(rest) = lower_gamma(m, j, 1).and_then(|r| lower_gamma(&r, k, 1)) else { continue };
            for (z, c) in s_map(l, l.bracket(s + j, s + k)).iter() {
                mul_into(f, &mut pure, z, &rest, f.neg(c));
            }
        }
        if let Some(rest) = lower_gamma(m, j, 2) {
            for (z, c) in s_map(l, l.bracket(s + j, s + j)).iter() {
                mul_into(f, &mut pure, z, &rest, f.neg(f.mul(c, f.half())));
            }
        }
    }
    for (z, c) in pure.into_terms() {
        out.add_term(f, (unit.clone(), z), c);
    }
    out
}

/// Right action of the basis element e_g of L on a standard monomial of
/// Ȳ(L) (Γ' factors, if any, are left alone): a right superderivation with
/// ⟨x⟩.u = s([x,u]) and γ_r(y).u = γ_{r-1}(y) s([y,u]).
pub fn right_action(l: &LieSuperAlgebraSpec, z: &CgaMonomial, g: usize) -> LinComb<CgaMonomial> {
    let f = l.field();
    let (s, t) = (l.s(), l.t());
    let u_par = l.parity(g);
    let mut out = LinComb::new();
    let gamma_part = {
        let mut m = z.clone();
        m.ext.clear();
        m
    };
    for k in 0..z.ext.len() {
        let mut prefix = CgaMonomial::one(s, t);
        prefix.ext = z.ext[..k].to_vec();
        let mut suffix = gamma_part.clone();
        suffix.ext = z.ext[k + 1..].to_vec();
        // parity of everything right of factor k
        let sign = Sign::koszul(u_par, suffix.parity()).to_fp(f);
        let mid = s_map(l, l.bracket(z.ext[k] as usize, g));
        out.add_scaled(f, &product3(f, &prefix, &mid, &suffix), sign);
    }
    for j in 0..t {
        let a = z.gamma[j];
        if a == 0 {
            continue;
        }
        let mut prefix = z.clone();
        prefix.gamma_prime.iter_mut().for_each(|c| *c = 0);
        for jj in j..t {
            prefix.gamma[jj] = 0;
        }
        let mut suffix = CgaMonomial::one(s, t);
        suffix.gamma_prime = z.gamma_prime.clone();
        for jj in j + 1..t {
            suffix.gamma[jj] = z.gamma[jj];
        }
        let sign = Sign::koszul(u_par, suffix.parity()).to_fp(f);
        let lowered = CgaMonomial::gamma_gen(s, t, j, a - 1);
        let br = s_map(l, l.bracket(s + j, g));
        let mut mid = LinComb::new();
        for (w, c) in br.iter() {
            mul_into(f, &mut mid, &lowered, w, c);
        }
        out.add_scaled(f, &product3(f, &prefix, &mid, &suffix), sign);
    }
    out
}

/// Weight of a standard monomial (γ'_c(x) counts c·p copies of x).
pub fn cga_weight(w: &WeightGrading, s: usize, p: u32, m: &CgaMonomial) -> Vec<i64> {
    let mut acc = w.zero();
    for &i in &m.ext {
        WeightGrading::add_into(&mut acc, &w.algebra[i as usize], 1);
    }
    for (j, &a) in m.gamma.iter().enumerate() {
        WeightGrading::add_into(&mut acc, &w.algebra[s + j], a as i64);
    }
    for (i, &c) in m.gamma_prime.iter().enumerate() {
        WeightGrading::add_into(&mut acc, &w.algebra[i], c as i64 * p as i64);
    }
    acc
}

/// Y(L) (ambient U) or W(L) (ambient V) in degrees 0..=max_degree.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    pub spec: LieSuperAlgebraSpec,
    pub ambient: Ambient,
    pub basis: Vec<Vec<CgaMonomial>>,
    pub index: Vec<HashMap<CgaMonomial, usize>>,
    pub free: FreeComplex,
}

impl KoszulComplex {
    pub fn max_degree(&self) -> usize {
        self.basis.len() - 1
    }
}

pub fn build_y_complex(l: &LieSuperAlgebraSpec, max_degree: usize, ambient: Ambient, weights: &WeightGrading) -> KoszulComplex {
    let f = l.field();
    let (s, t) = (l.s(), l.t());
    let basis: Vec<Vec<CgaMonomial>> = (0..=max_degree).map(|n| cga_basis(s, t, n, false)).collect();
    let index: Vec<HashMap<CgaMonomial, usize>> =
        basis.iter().map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    let degrees = (0..=max_degree)
        .map(|n| {
            let diff = basis[n]
                .iter()
                .map(|m| {
                    if n == 0 {
                        return Vec::new();
                    }
                    koszul_differential(l, m).into_terms().map(|((u, z), c)| (index[n - 1][&z], u, c)).collect()
                })
                .collect();
            FreeDegree {
                parity: basis[n].iter().map(|m| m.parity()).collect(),
                weight: basis[n].iter().map(|m| cga_weight(weights, s, f.p(), m)).collect(),
                level: vec![0; basis[n].len()],
                diff,
            }
        })
        .collect();
    KoszulComplex { spec: l.clone(), ambient, basis, index, free: FreeComplex { field: f, s, degrees } }
}

/// C^•(L,M) in degrees 0..=max_degree together with the complex it came from.
pub fn lie_cochain_complex(l: &LieSuperAlgebraSpec, module: &SupermoduleSpec, max_degree: usize) -> (KoszulComplex, HomComplex) {
    let weights = l.weight_grading(Some(module));
    let y = build_y_complex(l, max_degree + 1, Ambient::Universal, &weights);
    let hom = y.free.hom(module, &weights);
    (y, hom)
}

/// H^n(L,M) for n ≤ N, with explicit cocycle representatives.
#[derive(Debug, Clone)]
pub struct LieCohomology {
    pub betti: Vec<usize>,
    pub bases: Vec<CohomologyBasis>,
}

pub fn lie_cohomology(l: &LieSuperAlgebraSpec, module: &SupermoduleSpec, max_degree: usize) -> LieCohomology {
    let (_, hom) = lie_cochain_complex(l, module, max_degree);
    let bases: Vec<CohomologyBasis> = (0..=max_degree).map(|n| cohomology_basis(&hom, n)).collect();
    LieCohomology { betti: bases.iter().map(|b| b.dim()).collect(), bases }
}

/// Cup product of trivial-coefficient cochains f ∈ C^a, g ∈ C^b, via the
/// coproduct of Ȳ(L).
pub fn cup_product_lie(y: &KoszulComplex, a: usize, fv: &[(usize, u32)], b: usize, gv: &[(usize, u32)]) -> SparseVec {
    let field = y.spec.field();
    let fmap: HashMap<usize, u32> = fv.iter().copied().collect();
    let gmap: HashMap<usize, u32> = gv.iter().copied().collect();
    let mut out = Vec::new();
    for (zi, z) in y.basis[a + b].iter().enumerate() {
        let mut val = 0u32;
        for ((z1, z2), c) in cga_coproduct(field, z).iter() {
            if z1.deg() != a {
                continue;
            }
            let (Some(&fz), Some(&gz)) = (fmap.get(&y.index[a][z1]), gmap.get(&y.index[b][z2])) else { continue };
            // g has the parity of z2 on this term; total sign (-1)^{b·a + ḡ z̄1}
            let sign = Sign::from_exponent((a * b) as i64) * Sign::koszul(z2.parity(), z1.parity());
            val = field.add(val, field.mul(field.mul(c, sign.to_fp(field)), field.mul(fz, gz)));
        }
        if val != 0 {
            out.push((zi, val));
        }
    }
    sparse_from_pairs(field, out)
}

/// Parity of the dual basis cochain of basis monomial `j` in degree `n`.
pub fn cochain_parity(y: &KoszulComplex, n: usize, j: usize) -> Parity {
    y.basis[n][j].parity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::env::EnvAlgebra;

    #[test]
    fn differential_examples() {
        let f = PrimeField::new(5).unwrap();
        let mut l = LieSuperAlgebraSpec::new(f, &["x1", "x2"], &[]).unwrap();
        l.set_bracket(0, 1, &[(1, 1)]).unwrap();
        let m = CgaMonomial { ext: vec![0, 1], gamma: vec![], gamma_prime: vec![0, 0] };
        let d = koszul_differential(&l, &m);
        let e = |i| CgaMonomial::ext_gen(2, 0, i);
        assert_eq!(d.coeff(&(PbwMonomial::generator(0, 2), e(1))), 1);
        assert_eq!(d.coeff(&(PbwMonomial::generator(1, 2), e(0))), 4);
        assert_eq!(d.coeff(&(PbwMonomial::one(2), e(1))), 4);
        assert_eq!(d.len(), 3);

        let k1 = LieSuperAlgebraSpec::abelian(f, 0, 1);
        let d = koszul_differential(&k1, &CgaMonomial::gamma_gen(0, 1, 0, 2));
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff(&(PbwMonomial::generator(0, 1), CgaMonomial::gamma_gen(0, 1, 0, 1))), 1);
    }

    #[test]
    fn square_zero_heisenberg() {
        let f = PrimeField::new(3).unwrap();
        let mut l = LieSuperAlgebraSpec::new(f, &["x"], &["y"]).unwrap();
        l.set_bracket_named("y", "y", &[("x", 1)]).unwrap();
        let w = l.weight_grading(None);
        let y = build_y_complex(&l, 5, Ambient::Universal, &w);
        assert_eq!(y.free.check_square_zero(&EnvAlgebra::universal(l)), Ok(()));
    }

    #[test]
    fn abelian_lie_cohomology() {
        let f = PrimeField::new(3).unwrap();
        let l = LieSuperAlgebraSpec::abelian(f, 1, 1);
        let h = lie_cohomology(&l, &SupermoduleSpec::trivial(&l), 4);
        assert_eq!(h.betti, vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn borel_first_cohomology() {
        let f = PrimeField::new(5).unwrap();
        let mut l = LieSuperAlgebraSpec::new(f, &["h", "e"], &[]).unwrap();
        l.set_bracket_named("h", "e", &[("e", 1)]).unwrap();
        let h = lie_cohomology(&l, &SupermoduleSpec::trivial(&l), 2);
        assert_eq!(&h.betti[..2], &[1, 1]);
    }
}
