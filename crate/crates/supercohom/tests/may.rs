mod common;

use supercohom::env::{EnvAlgebra, PbwMonomial, RestrictedEnvelope};
use supercohom::fplinalg::{rank_of_columns, SparseVec};
use supercohom::free::{verify_resolution, FreeComplex, FreeTerm};
use supercohom::grading::{CgaMonomial, LinComb};
use supercohom::liesuper::{LieSuperAlgebraSpec, SupermoduleSpec};
use supercohom::may::{
    build_x_complex, d_complex, may_complex, mu_chain_map, solve_twisting_cochain, special_cocycles, twisting_identity_failures, x_dims, y0_differential,
    MayComplex,
};

use common::*;

fn x_of(l: &LieSuperAlgebraSpec, n: usize) -> MayComplex {
    may_complex(l, n, &l.weight_grading(None)).unwrap().1
}

fn sorted_terms(c: &FreeComplex) -> Vec<Vec<Vec<FreeTerm>>> {
    c.degrees
        .iter()
        .map(|d| {
            d.diff
                .iter()
                .map(|t| {
                    let mut t = t.clone();
                    t.sort();
                    t
                })
                .collect()
        })
        .collect()
}

#[test]
fn every_example_gives_a_filtered_resolution() {
    for (p, n) in [(3, 4), (5, 3)] {
        for (name, l) in small(p, 250) {
            let w = l.weight_grading(None);
            let (tc, x) = may_complex(&l, n, &w).unwrap();
            let v = RestrictedEnvelope::new(&l);
            assert!(twisting_identity_failures(&tc).is_empty(), "{name} p={p}");
            assert_eq!(x.free.check_square_zero(v.env()), Ok(()), "{name} p={p}");
            assert_eq!(x.filtration_violation(), None, "{name} p={p}");
            let r = verify_resolution(&x.free, &v, &w);
            assert!(r.is_resolution(), "{name} p={p}: {:?}", r.homology);
            let mu = mu_chain_map(&x, &v);
            assert_eq!(mu.check_chain_map(&x, &v), Ok(()), "{name} p={p}");
            assert_eq!(mu.filtration_violation(&x, &v), None, "{name} p={p}");
        }
    }
}

#[test]
fn associated_graded_is_the_abelian_complex() {
    for p in [3, 5] {
        for (name, l) in small(p, 250) {
            let n = if p == 3 { 5 } else { 3 };
            let gr = x_of(&l, n).associated_graded();
            let ab = x_of(&abelian(p, l.s(), l.t()), n);
            assert_eq!(sorted_terms(&gr), sorted_terms(&ab.free), "{name} p={p}");
        }
    }
}

#[test]
fn twisting_cochain_examples() {
    for p in [3, 5] {
        let tc = solve_twisting_cochain(&abelian(p, 2, 0), 7).unwrap();
        assert!(tc.maps[2..].iter().all(|m| m.values().all(|v| v.is_zero())));
    }

    // Borel p=3: d∘t_4 = t_2∪t_2 exactly, not just after projecting to W
    let tc = solve_twisting_cochain(&borel(3), 5).unwrap();
    let u = EnvAlgebra::universal(tc.l0.clone());
    assert!(twisting_identity_failures(&tc).is_empty());
    for (c, v) in &tc.maps[2] {
        assert_eq!(y0_differential(&tc.l0, &u, v), tc.convolution(&u, c), "t_4({c:?})");
        assert!(tc.certificates[2][c] < 2 * 3, "t_4({c:?}) leaves F_5");
    }
    assert_eq!(tc.dump().lines().filter(|l| l.starts_with("t4 ")).count(), 3);
}

#[test]
fn x_of_k0_and_its_differential() {
    for p in [3, 5] {
        let l = k0(p, false);
        let x = x_of(&l, 6);
        assert_eq!(x_dims(&x), vec![1; 7]);
        // d_t(⟨x⟩) = x
        assert_eq!(x.free.degrees[1].diff[0], vec![(0, PbwMonomial::generator(0, 1), 1)]);
        // d_t(γ'_1(x)) = x^{p-1}⟨x⟩
        let g = x.g_index(0).unwrap();
        assert_eq!(x.free.degrees[2].diff[g], vec![(0, PbwMonomial { exps: vec![p - 1] }, 1)]);
    }
}

#[test]
fn cap_term_on_an_odd_letter() {
    // abelian (1|1): d_t(γ_1(y)γ'_1(x)) contains ±x^{p-1} ⟨x⟩γ_1(y)
    for p in [3, 5] {
        let l = abelian(p, 1, 1);
        let x = x_of(&l, 3);
        let mut src = CgaMonomial::gamma_gen(1, 1, 0, 1);
        src.gamma_prime = vec![1];
        let tgt = CgaMonomial { ext: vec![0], gamma: vec![1], gamma_prime: vec![0] };
        let (si, ti) = (x.index[3][&src], x.index[2][&tgt]);
        let hits: Vec<u32> = x.free.degrees[3].diff[si]
            .iter()
            .filter(|(g, u, _)| *g == ti && *u == PbwMonomial { exps: vec![p - 1, 0] })
            .map(|t| t.2)
            .collect();
        assert!(hits == vec![1] || hits == vec![p - 1], "{hits:?}");
    }
}

fn in_span(p: u32, span: &[SparseVec], v: &SparseVec) -> bool {
    let f = field(p);
    let r = rank_of_columns(f, span.iter().cloned());
    r == rank_of_columns(f, span.iter().cloned().chain([v.clone()]))
}

#[test]
fn special_cocycles_evaluate_and_are_nontrivial_when_abelian() {
    for p in [3, 5] {
        for (name, l) in small(p, 250) {
            let w = l.weight_grading(None);
            let x = x_of(&l, p as usize + 1);
            let hom = d_complex(&x, &SupermoduleSpec::trivial(&l), &w);
            let sc = special_cocycles(&x, &hom).unwrap();
            for (i, f) in sc.f.iter().enumerate() {
                assert_eq!(f, &vec![(x.f_index(i).unwrap(), 1)], "{name}");
                assert!(hom.apply(p as usize, f).is_empty());
            }
            for (j, g) in sc.g.iter().enumerate() {
                assert_eq!(g, &vec![(x.g_index(j).unwrap(), 1)], "{name}");
                assert!(hom.apply(2, g).is_empty());
            }
        }
        for (s, t) in [(1, 1), (2, 1), (1, 2)] {
            let l = abelian(p, s, t);
            let x = x_of(&l, p as usize + 1);
            let hom = d_complex(&x, &SupermoduleSpec::trivial(&l), &l.weight_grading(None));
            let sc = special_cocycles(&x, &hom).unwrap();
            let boundaries = |n: usize| -> Vec<SparseVec> { (0..x.basis[n].len()).map(|k| hom.apply(n, &[(k, 1)])).collect() };
            for f in &sc.f {
                assert!(!in_span(p, &boundaries(p as usize - 1), f));
            }
            for g in &sc.g {
                assert!(!in_span(p, &boundaries(1), g));
            }
        }
    }
}

#[test]
fn mu_on_generators_and_divided_powers() {
    for p in [3, 5] {
        for (name, l) in small(p, 250) {
            let (s, t) = (l.s(), l.t());
            let top = (p as usize + 1).min(if p == 3 { 4 } else { 3 });
            let x = x_of(&l, top);
            let v = RestrictedEnvelope::new(&l);
            let mu = mu_chain_map(&x, &v);
            for i in 0..s {
                let g = x.index[1][&CgaMonomial::ext_gen(s, t, i)];
                assert_eq!(mu.values[1][g], LinComb::single(vec![v.generator_index(i)], 1), "{name}");
            }
            for j in 0..t {
                let y = v.generator_index(s + j);
                for n in 1..=top {
                    let power = vec![y; n];
                    for (k, m) in x.basis[n].iter().enumerate() {
                        let c = mu.values[n][k].coeff(&power);
                        if *m == CgaMonomial::gamma_gen(s, t, j, n as u32) {
                            assert_eq!(c, 1, "{name}: μ(γ_{n}(y_{j}))");
                        } else {
                            assert_eq!(c, 0, "{name}: [y_{j}]^{n} in μ({m:?})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn building_beyond_the_twisting_range_is_refused() {
    let l = k0(3, false);
    let tc = solve_twisting_cochain(&l, 3).unwrap();
    assert!(build_x_complex(&l, &tc, 6, &l.weight_grading(None)).is_err());
}
