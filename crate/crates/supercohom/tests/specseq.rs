mod common;

use proptest::prelude::*;
use supercohom::bar::{CobarComplex, DEFAULT_BUDGET};
use supercohom::complex::{betti_numbers, BasedComplex, Complex, Direction, Filtered};
use supercohom::env::RestrictedEnvelope;
use supercohom::fplinalg::{PrimeField, SparseVec};
use supercohom::grading::{binom_u64, lambda_s_dim};
use supercohom::koszul::lie_cohomology;
use supercohom::liesuper::{LieSuperAlgebraSpec, SupermoduleSpec};
use supercohom::may::{d_complex, may_complex};
use supercohom::specseq::{
    build_pages, convergence_check, e1_closed_form, page_dimensions, permanent_cycle_check, reindex, verify_pages, AssociatedGraded,
    PermanentVerdict, Reindex,
};

use common::*;

/// A based cochain complex with a level on every basis vector.
struct Levelled {
    c: BasedComplex,
    levels: Vec<Vec<i64>>,
}

impl Complex for Levelled {
    fn field(&self) -> PrimeField {
        self.c.field()
    }
    fn direction(&self) -> Direction {
        Direction::Cochain
    }
    fn max_degree(&self) -> usize {
        self.c.max_degree()
    }
    fn dim(&self, n: usize) -> usize {
        self.c.dim(n)
    }
    fn column(&self, n: usize, j: usize) -> SparseVec {
        self.c.column(n, j)
    }
}

impl Filtered for Levelled {
    fn level(&self, n: usize, j: usize) -> i64 {
        self.levels[n][j]
    }
}

/// Building blocks of a filtered complex up to filtered isomorphism: a
/// lone vector, or a ∂-pair whose target sits `gap` levels above its source.
#[derive(Debug, Clone)]
enum Piece {
    Single { deg: usize, level: i64 },
    Pair { deg: usize, level: i64, gap: i64 },
}

const TOP: usize = 3;

fn piece() -> impl Strategy<Value = Piece> {
    prop_oneof![
        (0..=TOP, 0i64..4).prop_map(|(deg, level)| Piece::Single { deg, level }),
        (0..=TOP, 0i64..3, 0i64..4).prop_map(|(deg, level, gap)| Piece::Pair { deg, level, gap }),
    ]
}

type Dense = Vec<Vec<u32>>;

fn matmul(f: PrimeField, a: &Dense, b: &Dense) -> Dense {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..r).map(|i| (0..c).map(|j| (0..k).fold(0, |acc, t| f.add(acc, f.mul(a[i][t], b[t][j])))).collect()).collect()
}

fn identity(n: usize) -> Dense {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

/// Assemble the direct sum of `pieces`, then scramble each degree by a
/// random filtration-preserving unitriangular change of basis.
fn assemble(p: u32, pieces: &[Piece], noise: &[u32]) -> Levelled {
    let f = PrimeField::new(p).unwrap();
    let mut levels: Vec<Vec<i64>> = vec![Vec::new(); TOP + 2];
    let mut edges = Vec::new();
    for pc in pieces {
        match *pc {
            Piece::Single { deg, level } => levels[deg].push(level),
            Piece::Pair { deg, level, gap } => {
                levels[deg].push(level);
                levels[deg + 1].push(level + gap);
                edges.push((deg, levels[deg].len() - 1, levels[deg + 1].len() - 1));
            }
        }
    }
    let mut noise = noise.iter().cycle();
    let mut t: Vec<Dense> = Vec::new();
    let mut t_inv: Vec<Dense> = Vec::new();
    for lv in &levels {
        let d = lv.len();
        let mut nil = vec![vec![0u32; d]; d];
        for k in 0..d {
            for j in 0..d {
                if (lv[k], k) > (lv[j], j) {
                    nil[k][j] = noise.next().unwrap() % p;
                }
            }
        }
        let m = (0..d).map(|k| (0..d).map(|j| f.add(u32::from(k == j), nil[k][j])).collect()).collect();
        // (1 + N)^{-1} = Σ (-N)^m, N nilpotent
        let neg: Dense = nil.iter().map(|r| r.iter().map(|&x| f.neg(x)).collect()).collect();
        let mut inv = identity(d);
        let mut term = identity(d);
        for _ in 0..d {
            term = matmul(f, &term, &neg);
            inv = inv.iter().zip(&term).map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()).collect();
        }
        t.push(m);
        t_inv.push(inv);
    }
    let mut columns = Vec::new();
    for n in 0..levels.len() {
        let rows = levels.get(n + 1).map_or(0, Vec::len);
        let mut d = vec![vec![0u32; levels[n].len()]; rows];
        for &(deg, src, tgt) in &edges {
            if deg == n {
                d[tgt][src] = 1;
            }
        }
        let conj = if rows == 0 { d } else { matmul(f, &matmul(f, &t_inv[n + 1], &d), &t[n]) };
        columns.push(
            (0..levels[n].len())
                .map(|j| (0..rows).filter(|&r| conj[r][j] != 0).map(|r| (r, conj[r][j])).collect())
                .collect(),
        );
    }
    Levelled { c: BasedComplex::new(f, Direction::Cochain, columns), levels }
}

fn oracle_dim(pieces: &[Piece], r: i64, i: i64, j: i64) -> usize {
    let n = i + j;
    pieces
        .iter()
        .filter(|pc| match **pc {
            Piece::Single { deg, level } => deg as i64 == n && level == i,
            Piece::Pair { deg, level, gap } => {
                r <= gap && ((deg as i64 == n && level == i) || (deg as i64 + 1 == n && level + gap == i))
            }
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pages_match_the_decomposition(
        p in prop::sample::select(vec![3u32, 5]),
        pieces in prop::collection::vec(piece(), 0..8),
        noise in prop::collection::vec(0u32..5, 1..40),
    ) {
        let c = assemble(p, &pieces, &noise);
        // levels stay below 6, so every length-7 differential vanishes
        let r_max = 7;
        let dims = page_dimensions(&c, TOP, r_max);
        let pages = build_pages(&c, TOP, r_max);
        for r in 0..=r_max {
            for i in 0..8i64 {
                for n in 0..=TOP as i64 {
                    let want = oracle_dim(&pieces, r as i64, i, n - i);
                    prop_assert_eq!(dims.dim(r, i, n - i), want, "r={} ({},{})", r, i, n - i);
                    prop_assert_eq!(pages[r].dim(i, n - i), want);
                }
            }
        }
        verify_pages(&c, &pages, TOP).unwrap();
        let betti = betti_numbers(&c, TOP);
        for row in convergence_check(&dims, &betti) {
            prop_assert!(row.certified);
            prop_assert_eq!(row.e_infinity, row.target);
        }
    }
}

#[test]
fn trivial_filtration_and_zero_differential() {
    let flat = [Piece::Pair { deg: 0, level: 0, gap: 0 }, Piece::Single { deg: 1, level: 0 }, Piece::Pair { deg: 1, level: 0, gap: 0 }];
    let c = assemble(3, &flat, &[1, 2]);
    let dims = page_dimensions(&c, TOP, 3);
    let betti = betti_numbers(&c, TOP);
    for n in 0..=TOP {
        assert_eq!(dims.total(1, n), betti[n]);
    }
    assert_eq!(dims.pages[1], dims.pages[2]);
    assert_eq!(dims.pages[1], dims.pages[3]);

    let still = [Piece::Single { deg: 0, level: 2 }, Piece::Single { deg: 1, level: 0 }, Piece::Single { deg: 1, level: 3 }];
    let c = assemble(5, &still, &[4]);
    let dims = page_dimensions(&c, TOP, 3);
    assert!(dims.pages.iter().all(|pg| *pg == dims.pages[0]));
    assert_eq!(dims.dim(0, 3, -2), 1);
}

#[test]
fn e1_closed_form_examples() {
    for p in [3u32, 5, 7] {
        for (s, t) in [(1usize, 0usize), (0, 1), (2, 1), (1, 2), (3, 2)] {
            assert_eq!(e1_closed_form(s, t, p, 1, 0), (s + t) as u64);
            assert_eq!(e1_closed_form(s, t, p, p as i64, 2 - p as i64), s as u64);
            assert_eq!(e1_closed_form(s, t, p, 0, 1), 0);
            // brute force over (a, b)
            for i in 0..12i64 {
                for j in -10..8i64 {
                    let mut want = 0;
                    for b in 0..=12i64 {
                        let a = i - p as i64 * b;
                        if a >= 0 && a + 2 * b == i + j {
                            want += lambda_s_dim(s, t, a as usize) * multichoose(s as u64, b as u64);
                        }
                    }
                    assert_eq!(e1_closed_form(s, t, p, i, j), want, "({s}|{t}) p={p} ({i},{j})");
                }
            }
        }
    }
}

/// dim S^b of an s-dimensional space.
fn multichoose(s: u64, b: u64) -> u64 {
    if b == 0 {
        1
    } else {
        binom_u64((s + b).saturating_sub(1), b)
    }
}

fn cobar_with(l: &LieSuperAlgebraSpec, m: &SupermoduleSpec, n: usize) -> CobarComplex {
    let v = RestrictedEnvelope::new(l);
    CobarComplex::new(&v, m, &l.weight_grading(Some(m)), n, DEFAULT_BUDGET).unwrap()
}

#[test]
fn abelian_e1_is_permanent() {
    let l = abelian(3, 1, 1);
    let c = cobar_with(&l, &SupermoduleSpec::trivial(&l), 5);
    let dims = page_dimensions(&c, 4, 1);
    let betti = betti_numbers(&c, 4);
    for n in 0..=4 {
        assert_eq!(dims.total(1, n), n + 1);
        assert_eq!(dims.total(1, n), betti[n]);
    }
    let pages = build_pages(&c, 3, 4);
    verify_pages(&c, &pages, 3).unwrap();
    for entry in pages[1].entries.values() {
        for z in &entry.representatives {
            let v = permanent_cycle_check(&c, &pages, entry.n, z).unwrap();
            assert!(matches!(v, PermanentVerdict::Permanent { survives: true, .. }), "{v:?}");
        }
    }
}

#[test]
fn page_products_of_representatives() {
    for l in [abelian(3, 1, 1), heisenberg(3)] {
        let c = cobar_with(&l, &SupermoduleSpec::trivial(&l), 3);
        let f = c.field();
        let pages = build_pages(&c, 3, 1);
        let page = &pages[1];
        for ((i1, j1), a) in &page.entries {
            for ((i2, j2), b) in &page.entries {
                if a.n + b.n > 3 {
                    continue;
                }
                let tgt = page.entries.get(&(i1 + i2, j1 + j2));
                for za in &a.representatives {
                    for zb in &b.representatives {
                        let prod = c.cup(a.n, za, b.n, zb);
                        let lv = supercohom::specseq::cochain_level(&c, a.n + b.n, &prod);
                        assert!(lv.is_none_or(|lv| lv >= i1 + i2));
                        // the product is a gr-cocycle at the summed filtration degree
                        let d = c.apply(a.n + b.n, &prod);
                        assert!(supercohom::specseq::cochain_level(&c, a.n + b.n + 1, &d).is_none_or(|lv| lv > i1 + i2));
                        if let Some(t) = tgt {
                            assert!(t.coordinates(f, &prod).is_some());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn d_sequence_has_zero_e0_differential() {
    for p in [3, 5] {
        for (name, l) in small(p, 250) {
            let w = l.weight_grading(None);
            let (_, x) = may_complex(&l, 4, &w).unwrap();
            let hom = d_complex(&x, &SupermoduleSpec::trivial(&l), &w);
            let gr = AssociatedGraded(&hom);
            for n in 0..4 {
                assert!((0..gr.dim(n)).all(|j| gr.column(n, j).is_empty()), "{name} p={p} degree {n}");
            }
            let dims = page_dimensions(&hom, 3, 1);
            assert_eq!(dims.pages[0], dims.pages[1], "{name} p={p}");
        }
    }
}

#[test]
fn reindexing_schemes() {
    for p in [3u32, 5] {
        let top = 3;
        for (name, l) in small(p, if p == 3 { 18 } else { 25 }) {
            let (s, t) = (l.s(), l.t());
            let c = cobar_with(&l, &SupermoduleSpec::trivial(&l), top + 1);
            let dims = page_dimensions(&c, top, 1);
            let jan = reindex(&dims, p, Reindex::Jantzen);
            // new E_0 = old E_1: Λ_s^{j-i}(L*) ⊗ S^i(L₀̄*)
            for (&(i, j), d) in &jan[0] {
                let want = lambda_s_dim(s, t, (j - i) as usize) * multichoose(s as u64, i as u64);
                assert_eq!((d[0] + d[1]) as u64, want, "{name} p={p} ({i},{j})");
            }
            for i in 0..=2i64 {
                for a in 0..=2i64 {
                    if (p as i64 - 1) * i + (i + a) - (p as i64 - 2) * i <= top as i64 && i + a <= top as i64 {
                        let want = lambda_s_dim(s, t, a as usize) * multichoose(s as u64, i as u64);
                        let got = jan[0].get(&(i, i + a)).map_or(0, |d| d[0] + d[1]) as u64;
                        assert_eq!(got, want, "{name} p={p} ({i},{})", i + a);
                    }
                }
            }
            for page in reindex(&dims, p, Reindex::FriedlanderParshall) {
                assert!(page.keys().all(|&(i, _)| i % 2 == 0), "{name}");
            }
            assert_eq!(reindex(&dims, p, Reindex::MayOriginal), dims.pages);
        }
    }
    // abelian: Jantzen E_1^{i,j} = H^{j-i}(L) ⊗ S^i(L₀̄*)
    for (s, t) in [(1, 1), (2, 1), (1, 0)] {
        let l = abelian(3, s, t);
        let c = cobar_with(&l, &SupermoduleSpec::trivial(&l), 4);
        let dims = page_dimensions(&c, 3, 2);
        let jan = reindex(&dims, 3, Reindex::Jantzen);
        let h = lie_cohomology(&l, &SupermoduleSpec::trivial(&l), 3).betti;
        for (&(i, j), d) in &jan[1] {
            let want = h[(j - i) as usize] as u64 * multichoose(s as u64, i as u64);
            assert_eq!((d[0] + d[1]) as u64, want, "({s}|{t}) ({i},{j})");
        }
        // E_1^{i,i} has total degree 2i, so only i ≤ 1 lies within degree 3
        for i in 0..=1 {
            assert_eq!(jan[1].get(&(i, i)).map_or(0, |d| d[0] + d[1]) as u64, multichoose(s as u64, i as u64));
        }
    }
}

#[test]
fn convergence_examples() {
    let cases: Vec<(&str, LieSuperAlgebraSpec, bool, usize)> =
        vec![("abelian-1-1", abelian(3, 1, 1), false, 4), ("k0bar-toral", k0(3, true), false, 4), ("borel adjoint", borel(3), true, 3)];
    for (name, l, adjoint, top) in cases {
        let m = if adjoint { SupermoduleSpec::adjoint(&l) } else { SupermoduleSpec::trivial(&l) };
        let c = cobar_with(&l, &m, top + 1);
        // widest possible span between neighbouring degrees, plus one
        let width = (top + 1) * (2 * l.s() + l.t()) + 1;
        let dims = page_dimensions(&c, top, width);
        let betti = betti_numbers(&c, top);
        for row in convergence_check(&dims, &betti) {
            assert!(row.certified, "{name} n={}", row.n);
            assert_eq!(row.e_infinity, row.target, "{name} n={}", row.n);
        }
    }
}
