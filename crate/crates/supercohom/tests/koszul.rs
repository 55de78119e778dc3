mod common;

use proptest::prelude::*;
use supercohom::complex::{betti_numbers, Complex};
use supercohom::env::{Ambient, EnvAlgebra, EnvElement, PbwMonomial, RestrictedEnvelope};
use supercohom::fplinalg::{rank_of_columns, sparse_axpy, SparseVec};
use supercohom::free::verify_resolution;
use supercohom::grading::{cga_basis, cga_coproduct, CgaMonomial, LinComb, Sign};
use supercohom::koszul::{build_y_complex, cup_product_lie, koszul_differential, lie_cochain_complex, lie_cohomology, KoszulComplex, YElement};
use supercohom::liesuper::{validate_algebra, LieSuperAlgebraSpec, SupermoduleSpec};
use supercohom::may::may_complex;

use common::*;

/// A central extension of the superspace k^{s|t} by an even c: the bracket
/// lands in k·c, and x_i^[p] = λ_i c, c^[p] = μ c. Always a restricted Lie superalgebra.
fn central_extension(p: u32, s: usize, t: usize, omega: &[u32], lambda: &[u32], mu: u32) -> LieSuperAlgebraSpec {
    let mut even: Vec<String> = (0..s).map(|i| format!("x{i}")).collect();
    even.push("c".into());
    let odd: Vec<String> = (0..t).map(|j| format!("y{j}")).collect();
    let even: Vec<&str> = even.iter().map(String::as_str).collect();
    let odd: Vec<&str> = odd.iter().map(String::as_str).collect();
    let mut l = LieSuperAlgebraSpec::new(field(p), &even, &odd).unwrap();
    let c = s;
    let mut w = omega.iter().copied();
    for i in 0..s {
        for j in i + 1..s {
            l.set_bracket(i, j, &[(c, w.next().unwrap() as i64)]).unwrap();
        }
    }
    for i in 0..t {
        for j in i..t {
            l.set_bracket(s + 1 + i, s + 1 + j, &[(c, w.next().unwrap() as i64)]).unwrap();
        }
    }
    for i in 0..s {
        l.set_restriction(i, &[(c, lambda[i] as i64)]).unwrap();
    }
    l.set_restriction(c, &[(c, mu as i64)]).unwrap();
    l
}

fn random_algebra() -> impl Strategy<Value = LieSuperAlgebraSpec> {
    (prop::sample::select(vec![3u32, 5]), 0usize..=2, 0usize..=2)
        .prop_filter("dim <= 4", |(_, s, t)| s + t <= 3)
        .prop_flat_map(|(p, s, t)| {
            (Just(p), Just(s), Just(t), prop::collection::vec(0..p, 6), prop::collection::vec(0..p, s), 0..p)
        })
        .prop_map(|(p, s, t, omega, lambda, mu)| central_extension(p, s, t, &omega, &lambda, mu))
}

fn cochain(n: usize, raw: &[u32], p: u32) -> SparseVec {
    raw.iter().take(n).enumerate().filter(|(_, &x)| x % p != 0).map(|(i, &x)| (i, x % p)).collect()
}

/// ∂¹ξ_k(m) read off from the bracket table: the coefficient of e_k in the
/// bracket of the two letters of m, halved for γ_2(y).
fn bracket_transpose(l: &LieSuperAlgebraSpec, m: &CgaMonomial, k: usize) -> u32 {
    let f = l.field();
    let s = l.s();
    let mut letters: Vec<usize> = m.ext.iter().map(|&i| i as usize).collect();
    for (j, &a) in m.gamma.iter().enumerate() {
        letters.extend(std::iter::repeat_n(s + j, a as usize));
    }
    let c = l.bracket(letters[0], letters[1])[k];
    if letters[0] == letters[1] {
        f.mul(c, f.half())
    } else {
        c
    }
}

/// (k, j): the dual of the k-th basis vector of L is cochain j in degree 1.
fn generator_indices(y: &KoszulComplex) -> Vec<(usize, usize)> {
    let (s, t) = (y.spec.s(), y.spec.t());
    (0..s + t)
        .map(|k| {
            let m = if k < s { CgaMonomial::ext_gen(s, t, k) } else { CgaMonomial::gamma_gen(s, t, k - s, 1) };
            (k, y.index[1][&m])
        })
        .collect()
}

fn check_cochain_algebra(l: &LieSuperAlgebraSpec, raw: &[Vec<u32>]) -> Result<(), TestCaseError> {
    let f = l.field();
    let p = f.p() as usize;
    let top = 3.max(p);
    let (y, hom): (KoszulComplex, _) = lie_cochain_complex(l, &SupermoduleSpec::trivial(l), top);
    // ∂ is the transpose of the bracket in degree 1
    for (k, j1) in generator_indices(&y) {
        let d = hom.apply(1, &[(j1, 1)]);
        for (j, m) in y.basis[2].iter().enumerate() {
            let got = d.iter().find(|&&(i, _)| i == j).map_or(0, |&(_, c)| c);
            prop_assert_eq!(got, bracket_transpose(l, m, k), "∂ξ_{} on {:?}", k, m);
        }
    }
    // Leibniz rule
    for a in 0..=2usize {
        for b in 0..=(3 - a) {
            let fa = cochain(y.basis[a].len(), &raw[0], f.p());
            let gb = cochain(y.basis[b].len(), &raw[1], f.p());
            let lhs = hom.apply(a + b, &cup_product_lie(&y, a, &fa, b, &gb));
            let t1 = cup_product_lie(&y, a + 1, &hom.apply(a, &fa), b, &gb);
            let t2 = cup_product_lie(&y, a, &fa, b + 1, &hom.apply(b, &gb));
            let rhs = sparse_axpy(f, &t1, Sign::from_exponent(a as i64).to_fp(f), &t2);
            prop_assert_eq!(lhs, rhs, "a={} b={}", a, b);
        }
    }
    // degree-1 cochains generate freely
    let mut layer: Vec<SparseVec> = vec![vec![(0, 1)]];
    for n in 1..=3 {
        layer = layer.iter().flat_map(|g| (0..l.dim()).map(|k| cup_product_lie(&y, n - 1, g, 1, &[(k, 1)])).collect::<Vec<_>>()).collect();
        prop_assert_eq!(rank_of_columns(f, layer.iter().cloned()), y.basis[n].len());
    }
    // p-th powers of odd 1-cochains are cocycles
    if l.t() > 0 {
        let mut odd: SparseVec = generator_indices(&y)
            .into_iter()
            .filter(|&(k, _)| k >= l.s() && !raw[2][k].is_multiple_of(f.p()))
            .map(|(k, j)| (j, raw[2][k] % f.p()))
            .collect();
        odd.sort_unstable();
        let mut power = vec![(0usize, 1u32)];
        for n in 0..p {
            power = cup_product_lie(&y, n, &power, 1, &odd);
        }
        prop_assert!(hom.apply(p, &power).is_empty());
    }
    Ok(())
}

type YTensor = LinComb<((PbwMonomial, CgaMonomial), (PbwMonomial, CgaMonomial))>;

fn d_of(u_alg: &EnvAlgebra, l: &LieSuperAlgebraSpec, x: &YElement) -> YElement {
    let f = l.field();
    let mut out = YElement::new();
    for ((u, z), c) in x.iter() {
        for ((u2, z2), c2) in koszul_differential(l, z).iter() {
            let prod = u_alg.multiply(&EnvElement::from_monomial(u.clone()), &EnvElement::from_monomial(u2.clone()));
            for (m, c3) in prod.iter() {
                out.add_term(f, (m.clone(), z2.clone()), f.mul(f.mul(c, c2), c3));
            }
        }
    }
    out
}

fn delta(u_alg: &EnvAlgebra, l: &LieSuperAlgebraSpec, x: &YElement) -> YTensor {
    let f = l.field();
    let mut out = YTensor::new();
    for ((u, z), c) in x.iter() {
        for ((u1, u2), cu) in u_alg.coproduct_monomial(u).iter() {
            for ((z1, z2), cz) in cga_coproduct(f, z).iter() {
                let sign = Sign::koszul(u2.parity(l.s()), z1.parity()).to_fp(f);
                out.add_term(f, ((u1.clone(), z1.clone()), (u2.clone(), z2.clone())), f.mul(f.mul(c, sign), f.mul(cu, cz)));
            }
        }
    }
    out
}

/// Δ∘d = (d⊗1 + 1⊗d)∘Δ on ⟨x_i⟩ and γ_r(y_j), r ≤ 4.
fn coderivation_failures(l: &LieSuperAlgebraSpec) -> Vec<String> {
    let f = l.field();
    let (s, t) = (l.s(), l.t());
    let u_alg = EnvAlgebra::universal(l.clone());
    let one = PbwMonomial::one(l.dim());
    let mut gens: Vec<CgaMonomial> = (0..s).map(|i| CgaMonomial::ext_gen(s, t, i)).collect();
    for j in 0..t {
        gens.extend((1..=4).map(|r| CgaMonomial::gamma_gen(s, t, j, r)));
    }
    let mut bad = Vec::new();
    for z in gens {
        let x = YElement::single((one.clone(), z.clone()), 1);
        let lhs = delta(&u_alg, l, &d_of(&u_alg, l, &x));
        let mut rhs = YTensor::new();
        for ((a, b), c) in delta(&u_alg, l, &x).iter() {
            let left = YElement::single(a.clone(), 1);
            let right = YElement::single(b.clone(), 1);
            for (da, c2) in d_of(&u_alg, l, &left).iter() {
                rhs.add_term(f, (da.clone(), b.clone()), f.mul(c, c2));
            }
            let sign = Sign::from_exponent(a.1.deg() as i64).to_fp(f);
            for (db, c2) in d_of(&u_alg, l, &right).iter() {
                rhs.add_term(f, (a.clone(), db.clone()), f.mul(f.mul(c, c2), sign));
            }
        }
        if lhs != rhs {
            bad.push(format!("{z:?}"));
        }
    }
    bad
}

#[test]
fn shipped_examples_have_square_zero_and_coderivation() {
    for p in [3, 5] {
        for (name, l) in all(p) {
            let w = l.weight_grading(None);
            let y = build_y_complex(&l, 2 * p as usize, Ambient::Universal, &w);
            assert!(y.free.check_square_zero(&EnvAlgebra::universal(l.clone())).is_ok(), "{name} p={p}");
            assert!(coderivation_failures(&l).is_empty(), "{name} p={p}: {:?}", coderivation_failures(&l));
        }
    }
}

#[test]
fn shipped_cochain_algebras() {
    for p in [3, 5] {
        for (name, l) in all(p) {
            let raw = vec![vec![1, 2, 0, 1, 1, 2, 1, 0, 2, 1, 1, 1, 2, 0, 1, 2, 1, 1, 0, 2]; 3];
            check_cochain_algebra(&l, &raw).unwrap_or_else(|e| panic!("{name} p={p}: {e}"));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_central_extensions(l in random_algebra(), raw in prop::collection::vec(prop::collection::vec(0u32..5, 40), 3)) {
        prop_assert!(validate_algebra(&l).is_valid(), "{:?}", validate_algebra(&l).violations);
        let w = l.weight_grading(None);
        let y = build_y_complex(&l, 5, Ambient::Universal, &w);
        prop_assert!(y.free.check_square_zero(&EnvAlgebra::universal(l.clone())).is_ok());
        prop_assert!(coderivation_failures(&l).is_empty());
        check_cochain_algebra(&l, &raw)?;
    }
}

#[test]
fn y_dimensions() {
    let w = |l: &LieSuperAlgebraSpec| l.weight_grading(None);
    let k1 = k1(3);
    let y = build_y_complex(&k1, 6, Ambient::Universal, &w(&k1));
    assert!(y.basis.iter().all(|b| b.len() == 1));
    let ab = abelian(3, 1, 1);
    let y = build_y_complex(&ab, 6, Ambient::Universal, &w(&ab));
    assert!(y.basis[1..].iter().all(|b| b.len() == 2));
    assert_eq!(cga_basis(1, 1, 4, false).len(), 2);
}

#[test]
fn resolutions_and_a_non_resolution() {
    let l = k0(3, false);
    let w = l.weight_grading(None);
    let v = RestrictedEnvelope::new(&l);
    let (_, x) = may_complex(&l, 4, &w).unwrap();
    assert_eq!(verify_resolution(&x.free, &v, &w).homology, vec![1, 0, 0, 0]);

    let k1 = k1(3);
    let w1 = k1.weight_grading(None);
    let y = build_y_complex(&k1, 4, Ambient::Restricted, &w1);
    let r = verify_resolution(&y.free, &RestrictedEnvelope::new(&k1), &w1);
    assert!(r.is_resolution(), "{:?}", r.homology);

    // Without the Γ' part, W(k0bar) = V ⊗ Λ(x) has W_2 = 0 and
    // H_1 = ker(x·) on k[x]/(x^p), spanned by x^{p-1}.
    let wk = build_y_complex(&l, 4, Ambient::Restricted, &w);
    assert!(wk.basis[2].is_empty());
    let r = verify_resolution(&wk.free, &v, &w);
    assert_eq!(r.homology, vec![1, 1, 0, 0]);
    assert!(!r.is_resolution());
}

#[test]
fn lie_cohomology_examples() {
    let binom = |n: u64, k: u64| -> u64 { if k > n { 0 } else { (0..k).fold(1, |a, i| a * (n - i) / (i + 1)) } };
    for p in [3, 5] {
        for (s, t) in [(1usize, 0usize), (0, 1), (1, 1), (2, 1), (1, 2)] {
            let l = abelian(p, s, t);
            let h = lie_cohomology(&l, &SupermoduleSpec::trivial(&l), 6);
            for (n, &d) in h.betti.iter().enumerate() {
                let want: u64 = (0..=n as u64).map(|a| binom(s as u64, a) * if t == 0 { u64::from(a == n as u64) } else { binom(t as u64 + n as u64 - a - 1, n as u64 - a) }).sum();
                assert_eq!(d as u64, want, "({s}|{t}) p={p} n={n}");
            }
        }
        let l = k1(p);
        assert_eq!(lie_cohomology(&l, &SupermoduleSpec::trivial(&l), 6).betti, vec![1; 7]);
    }
    // Borel p=5: ∂¹ is the transpose of the bracket, so only h* survives in degree 1
    let b = borel(5);
    let h = lie_cohomology(&b, &SupermoduleSpec::trivial(&b), 2);
    assert_eq!(&h.betti[..2], &[1, 1]);
    let (_, hom) = lie_cochain_complex(&b, &SupermoduleSpec::trivial(&b), 2);
    let (y, _) = lie_cochain_complex(&b, &SupermoduleSpec::trivial(&b), 2);
    let g = generator_indices(&y);
    assert!(hom.apply(1, &[(g[0].1, 1)]).is_empty());
    assert!(!hom.apply(1, &[(g[1].1, 1)]).is_empty());
    assert_eq!(betti_numbers(&hom, 2), h.betti);
    assert_eq!(hom.dim(1), 2);
}

#[test]
fn cup_product_examples() {
    let l = abelian(3, 2, 1);
    let (y, _) = lie_cochain_complex(&l, &SupermoduleSpec::trivial(&l), 3);
    let g = generator_indices(&y);
    let x12 = cup_product_lie(&y, 1, &[(g[0].1, 1)], 1, &[(g[1].1, 1)]);
    assert_eq!(x12.len(), 1);
    let idx = y.index[2][&CgaMonomial { ext: vec![0, 1], gamma: vec![0], gamma_prime: vec![0, 0] }];
    assert_eq!(x12[0].0, idx);
    assert!(x12[0].1 == 1 || x12[0].1 == 2);
    let yy = cup_product_lie(&y, 1, &[(g[2].1, 1)], 1, &[(g[2].1, 1)]);
    let g2 = y.index[2][&CgaMonomial::gamma_gen(2, 1, 0, 2)];
    assert!(yy.iter().any(|&(i, c)| i == g2 && c != 0));
    let h = vec![(0, 2), (2, 1)];
    assert_eq!(cup_product_lie(&y, 0, &[(0, 1)], 1, &h), h);
}
