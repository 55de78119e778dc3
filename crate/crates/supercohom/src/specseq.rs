//! Spectral sequences of finite filtered cochain complexes.
//!
//! The filtration is decreasing: F^i C^n is spanned by the basis vectors of
//! level ≥ i, and the differential never lowers a level. Page entries are
//! indexed by (i, j) with i the filtration degree and i + j the total
//! degree, and d_r maps (i, j) to (i + r, j − r + 1).

use crate::complex::{blocks_of, cohomology_basis, Complex, Direction, Filtered};
use crate::fplinalg::{sparse_axpy, DenseMatrix, Echelon, Insert, PrimeField, SparseVec};
use crate::grading::{binom_u64, lambda_s_dim, Parity};
use crate::parallel::par_map;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::{Hash, Hasher};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecSeqError {
    #[error("representative is not in the page {r} entry at ({i}, {j})")]
    NotInPage { r: usize, i: i64, j: i64 },
    #[error("page {r} differential does not square to zero at ({i}, {j})")]
    SquareNonzero { r: usize, i: i64, j: i64 },
    #[error("page {r} at ({i}, {j}) has dimension {found}, homology of page {prev} gives {expected}")]
    PageMismatch { r: usize, prev: usize, i: i64, j: i64, expected: usize, found: usize },
}

/// The associated graded complex: the level-preserving part of the
/// differential, with blocks refined by level.
#[derive(Debug)]
pub struct AssociatedGraded<'a, C: ?Sized>(pub &'a C);

impl<C: Filtered + ?Sized> Complex for AssociatedGraded<'_, C> {
    fn field(&self) -> PrimeField {
        self.0.field()
    }
    fn direction(&self) -> Direction {
        self.0.direction()
    }
    fn max_degree(&self) -> usize {
        self.0.max_degree()
    }
    fn dim(&self, n: usize) -> usize {
        self.0.dim(n)
    }
    fn column(&self, n: usize, j: usize) -> SparseVec {
        let lv = self.0.level(n, j);
        self.0.column(n, j).into_iter().filter(|&(r, _)| self.0.level(n + 1, r) == lv).collect()
    }
    fn block(&self, n: usize, j: usize) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.block(n, j).hash(&mut h);
        self.0.level(n, j).hash(&mut h);
        h.finish()
    }
}

impl<C: Filtered + ?Sized> Filtered for AssociatedGraded<'_, C> {
    fn level(&self, n: usize, j: usize) -> i64 {
        self.0.level(n, j)
    }
    fn parity(&self, n: usize, j: usize) -> Parity {
        self.0.parity(n, j)
    }
}

/// Dimensions of the pages E_0..E_{r_max}, split by parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageDims {
    pub r_max: usize,
    pub top: usize,
    /// `pages[r][(i, j)] = [even, odd]`, nonzero entries only.
    pub pages: Vec<BTreeMap<(i64, i64), [usize; 2]>>,
    /// For each total degree n ≤ top, the page index from which the
    /// entries of total degree n no longer change.
    pub stable_from: Vec<usize>,
}

impl PageDims {
    pub fn dim(&self, r: usize, i: i64, j: i64) -> usize {
        self.pages.get(r).and_then(|p| p.get(&(i, j))).map_or(0, |d| d[0] + d[1])
    }

    /// Σ_{i+j=n} dim E_r^{i,j}.
    pub fn total(&self, r: usize, n: usize) -> usize {
        self.pages[r].iter().filter(|((i, j), _)| i + j == n as i64).map(|(_, d)| d[0] + d[1]).sum()
    }

    /// The last computed page, which equals E_∞ in total degree n when
    /// `stable_from[n] ≤ r_max`.
    pub fn infinity_total(&self, n: usize) -> usize {
        self.total(self.r_max, n)
    }

    /// Total degrees whose E_∞ is certified by the computed pages.
    pub fn certified(&self, n: usize) -> bool {
        self.stable_from.get(n).is_some_and(|&s| s <= self.r_max)
    }
}

/// Persistence pairs (column level, row level, parity) of the differential
/// leaving degree n.
fn persistence_pairs<C: Filtered + ?Sized>(c: &C, n: usize) -> Vec<(i64, i64, Parity)> {
    if n > c.max_degree() {
        return Vec::new();
    }
    let blocks = blocks_of(c, n);
    par_map(&blocks, |idx| {
        let f = c.field();
        let mut cols: Vec<usize> = idx.clone();
        cols.sort_by_key(|&j| (std::cmp::Reverse(c.level(n, j)), j));
        let mut e = Echelon::new(f);
        let mut out = Vec::new();
        let mut row_level: HashMap<u64, i64> = HashMap::new();
        for j in cols {
            let col: SparseVec = c
                .column(n, j)
                .into_iter()
                .map(|(r, v)| {
                    let lv = c.level(n + 1, r);
                    let key = ((lv as u64) << 40) | r as u64;
                    row_level.insert(key, lv);
                    (key as usize, v)
                })
                .collect::<BTreeMap<_, _>>()
                .into_iter()
                .collect();
            if e.insert(col) {
                let lead = e.vectors().last().expect("inserted")[0].0 as u64;
                out.push((c.level(n, j), row_level[&lead], c.parity(n, j)));
            }
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Page dimensions from one reduction per degree (no representatives).
pub fn page_dimensions<C: Filtered + ?Sized>(c: &C, top: usize, r_max: usize) -> PageDims {
    assert_eq!(c.direction(), Direction::Cochain);
    let pairs: Vec<Vec<(i64, i64, Parity)>> = (0..=top).map(|n| persistence_pairs(c, n)).collect();
    // gr counts per degree: level -> [even, odd]
    let gr: Vec<BTreeMap<i64, [usize; 2]>> = (0..=top + 1)
        .map(|n| {
            let mut m: BTreeMap<i64, [usize; 2]> = BTreeMap::new();
            for j in 0..c.dim(n) {
                m.entry(c.level(n, j)).or_default()[c.parity(n, j).bit() as usize] += 1;
            }
            m
        })
        .collect();
    let count = |n: usize, a: i64, q: i64, par: usize| -> usize {
        pairs[n].iter().filter(|&&(cl, rl, p)| cl >= a && rl < q && p.bit() as usize == par).count()
    };
    let mut pages = Vec::with_capacity(r_max + 1);
    for r in 0..=r_max {
        let ri = r as i64;
        let mut page = BTreeMap::new();
        for n in 0..=top {
            for (&i, g) in &gr[n] {
                let mut d = [0usize; 2];
                for par in 0..2 {
                    let mut v = g[par] as i64;
                    if r > 0 {
                        v -= count(n, i, i + ri, par) as i64;
                        v += count(n, i + 1, i + ri, par) as i64;
                        if n > 0 {
                            v += count(n - 1, i - ri + 1, i, par) as i64;
                            v -= count(n - 1, i - ri + 1, i + 1, par) as i64;
                        }
                    }
                    d[par] = v as usize;
                }
                if d[0] + d[1] > 0 {
                    page.insert((i, n as i64 - i), d);
                }
            }
        }
        pages.push(page);
    }
    let stable_from = (0..=top)
        .map(|n| {
            let lo = gr[n].keys().next().copied().unwrap_or(0);
            let hi_next = gr[n + 1].keys().last().copied().unwrap_or(lo);
            let hi = gr[n].keys().last().copied().unwrap_or(0);
            let lo_prev = if n > 0 { gr[n - 1].keys().next().copied().unwrap_or(0) } else { hi };
            // no differential of length r can start or end in degree n once r exceeds both spans
            (hi_next - lo).max(hi - lo_prev).max(0) as usize + 1
        })
        .collect();
    PageDims { r_max, top, pages, stable_from }
}

/// F^i C^n ∩ ∂^{-1}(F^q C^{n+1}) as explicit vectors: elements of level ≥ i
/// whose coboundary has no component of level < q.
fn filtered_kernel<C: Filtered + ?Sized>(c: &C, n: usize, i: i64, q: i64) -> Vec<SparseVec> {
    let f = c.field();
    let idx: Vec<usize> = (0..c.dim(n)).filter(|&j| c.level(n, j) >= i).collect();
    let mut e = Echelon::with_tracking(f);
    let mut out = Vec::new();
    for (label, &j) in idx.iter().enumerate() {
        let col: SparseVec = c.column(n, j).into_iter().filter(|&(r, _)| c.level(n + 1, r) < q).collect();
        if let Insert::Dependent(rel) = e.insert_tracked(col, label) {
            let mut v: SparseVec = rel.into_iter().map(|(l, x)| (idx[l], x)).collect();
            v.sort_unstable();
            out.push(v);
        }
    }
    out
}

fn apply<C: Complex + ?Sized>(c: &C, n: usize, v: &[(usize, u32)]) -> SparseVec {
    let f = c.field();
    let mut acc = SparseVec::new();
    for &(j, x) in v {
        acc = sparse_axpy(f, &acc, x, &c.column(n, j));
    }
    acc
}

/// Lowest level among the terms of a cochain.
pub fn cochain_level<C: Filtered + ?Sized>(c: &C, n: usize, v: &[(usize, u32)]) -> Option<i64> {
    v.iter().map(|&(j, _)| c.level(n, j)).min()
}

/// One entry E_r^{i,j} with representatives in C^{i+j}.
#[derive(Debug, Clone)]
pub struct PageEntry {
    pub i: i64,
    pub n: usize,
    /// Lifts of a basis of the entry.
    pub representatives: Vec<SparseVec>,
    pub parities: Vec<Parity>,
    reducer: Echelon,
    /// Denominator spanning vectors: those with a preimage come from ∂.
    preimages: Vec<Option<SparseVec>>,
}

/// Coordinates of a vector of Z_r^i in an entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCoordinates {
    pub class: Vec<u32>,
    /// w ∈ F^{i+1} (sum of boundary preimages) with v − class·reps − ∂w ∈ Z_{r-1}^{i+1}.
    pub correction: SparseVec,
}

impl PageEntry {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn coordinates(&self, f: PrimeField, v: &[(usize, u32)]) -> Option<EntryCoordinates> {
        let combo = self.reducer.express(v.to_vec())?;
        let d = self.preimages.len();
        let mut class = vec![0u32; self.dim()];
        let mut correction = SparseVec::new();
        for (label, x) in combo {
            if label >= d {
                class[label - d] = x;
            } else if let Some(w) = &self.preimages[label] {
                correction = sparse_axpy(f, &correction, x, w);
            }
        }
        Some(EntryCoordinates { class, correction })
    }
}

/// One page with all its entries in total degrees ≤ top.
#[derive(Debug, Clone)]
pub struct SpectralSequencePage {
    pub r: usize,
    /// Highest total degree with entries.
    pub top: usize,
    pub entries: BTreeMap<(i64, i64), PageEntry>,
}

impl SpectralSequencePage {
    pub fn dim(&self, i: i64, j: i64) -> usize {
        self.entries.get(&(i, j)).map_or(0, |e| e.dim())
    }

    /// Matrix of d_r from (i, j) to (i + r, j − r + 1); columns are the
    /// source representatives. `None` if the target lies beyond the range.
    pub fn differential<C: Filtered + ?Sized>(&self, c: &C, i: i64, j: i64) -> Option<DenseMatrix> {
        let f = c.field();
        let src = self.entries.get(&(i, j))?;
        let r = self.r as i64;
        let n = src.n;
        if n + 1 > self.top {
            return None;
        }
        let tgt = self.entries.get(&(i + r, j - r + 1));
        let rows = tgt.map_or(0, |t| t.dim());
        let mut m = DenseMatrix::zero(rows, src.dim());
        for (col, z) in src.representatives.iter().enumerate() {
            let dz = apply(c, n, z);
            if let Some(t) = tgt {
                let co = t.coordinates(f, &dz).expect("coboundary lies in the target Z_r");
                for (row, &x) in co.class.iter().enumerate() {
                    m.set(row, col, x);
                }
            }
        }
        Some(m)
    }
}

/// Pages E_0..E_{r_max} with representatives, for total degrees ≤ top.
/// Meant for complexes of moderate size; use [`page_dimensions`] otherwise.
pub fn build_pages<C: Filtered + ?Sized>(c: &C, top: usize, r_max: usize) -> Vec<SpectralSequencePage> {
    let f = c.field();
    let levels: Vec<BTreeSet<i64>> = (0..=top + 1).map(|n| (0..c.dim(n)).map(|j| c.level(n, j)).collect()).collect();
    (0..=r_max)
        .map(|r| {
            let ri = r as i64;
            let keys: Vec<(usize, i64)> = (0..=top).flat_map(|n| levels[n].iter().map(move |&i| (n, i))).collect();
            let built = par_map(&keys, |&(n, i)| {
                let z = filtered_kernel(c, n, i, if r == 0 { i64::MIN } else { i + ri });
                let z_lower = filtered_kernel(c, n, i + 1, if r == 0 { i64::MIN } else { i + ri });
                // B_{r-1}^i = F^i ∩ ∂(F^{i-r+1} C^{n-1})
                let mut boundaries = Vec::new();
                if n > 0 && r > 0 {
                    for w in filtered_kernel(c, n - 1, i - ri + 1, i) {
                        boundaries.push((apply(c, n - 1, &w), w));
                    }
                }
                let mut reducer = Echelon::with_tracking(f);
                let mut preimages = Vec::new();
                for v in z_lower {
                    if reducer.insert_tracked(v, preimages.len()) == Insert::Independent {
                        preimages.push(None);
                    }
                }
                for (b, w) in boundaries {
                    if reducer.insert_tracked(b, preimages.len()) == Insert::Independent {
                        preimages.push(Some(w));
                    }
                }
                let d = preimages.len();
                let mut reps = Vec::new();
                for v in z {
                    if reducer.insert_tracked(v.clone(), d + reps.len()) == Insert::Independent {
                        reps.push(v);
                    }
                }
                let parities = reps.iter().map(|v: &SparseVec| c.parity(n, v[0].0)).collect();
                PageEntry { i, n, representatives: reps, parities, reducer, preimages }
            });
            let entries = built.into_iter().filter(|e| e.dim() > 0).map(|e| ((e.i, e.n as i64 - e.i), e)).collect();
            SpectralSequencePage { r, top, entries }
        })
        .collect()
}

/// Check d_r ∘ d_r = 0 and E_{r+1} = H(E_r, d_r) dimensionally on every entry
/// whose neighbours are in range.
pub fn verify_pages<C: Filtered + ?Sized>(c: &C, pages: &[SpectralSequencePage], top: usize) -> Result<(), SpecSeqError> {
    let f = c.field();
    for w in pages.windows(2) {
        let (page, next) = (&w[0], &w[1]);
        let r = page.r as i64;
        let all: BTreeSet<(i64, i64)> = page.entries.keys().chain(next.entries.keys()).copied().collect();
        for &(i, j) in &all {
            let n = i + j;
            if n + 1 > top as i64 {
                continue;
            }
            let out = page.differential(c, i, j);
            if let (Some(d1), Some(d2)) = (&out, page.differential(c, i + r, j - r + 1)) {
                if d2.rows() > 0 && d1.cols() > 0 && d2.cols() > 0 && !d2.mul(f, d1).is_zero() {
                    return Err(SpecSeqError::SquareNonzero { r: page.r, i, j });
                }
            }
            let rank = |m: Option<DenseMatrix>| m.map_or(0, |m| m.rref(f).rank());
            let rank_out = rank(out);
            let rank_in = if n >= 1 { rank(page.differential(c, i - r, j + r - 1)) } else { 0 };
            let expected = page.dim(i, j) - rank_out - rank_in;
            if expected != next.dim(i, j) {
                return Err(SpecSeqError::PageMismatch { r: next.r, prev: page.r, i, j, expected, found: next.dim(i, j) });
            }
        }
    }
    Ok(())
}

/// Outcome of tracking one class through the pages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermanentVerdict {
    /// d_r vanishes on the class for every r ≤ `through`; `survives` tells
    /// whether the class is still nonzero on the last page.
    Permanent { through: usize, survives: bool },
    /// d_r is nonzero on the class.
    Supports { r: usize },
}

/// Track the class of `z` ∈ C^n (sitting at filtration level of z) through
/// pages 1..=r_max of `pages`.
pub fn permanent_cycle_check<C: Filtered + ?Sized>(c: &C, pages: &[SpectralSequencePage], n: usize, z: &[(usize, u32)]) -> Result<PermanentVerdict, SpecSeqError> {
    let f = c.field();
    let Some(i) = cochain_level(c, n, z) else {
        return Ok(PermanentVerdict::Permanent { through: pages.len().saturating_sub(1), survives: false });
    };
    let j = n as i64 - i;
    let mut z = z.to_vec();
    let r_max = pages.len() - 1;
    for page in pages.iter().skip(1) {
        let r = page.r as i64;
        let co = match page.entries.get(&(i, j)).and_then(|e| e.coordinates(f, &z)) {
            Some(co) => co,
            None => {
                // zero entry: the class is zero iff z reduces into the denominator
                return Ok(PermanentVerdict::Permanent { through: page.r, survives: false });
            }
        };
        if co.class.iter().all(|&x| x == 0) {
            return Ok(PermanentVerdict::Permanent { through: r_max, survives: false });
        }
        let dz = apply(c, n, &z);
        if cochain_level(c, n + 1, &dz).is_none_or(|lv| lv > i + r) {
            continue;
        }
        let tgt = page.entries.get(&(i + r, j - r + 1)).ok_or(SpecSeqError::NotInPage { r: page.r, i: i + r, j: j - r + 1 })?;
        let tco = tgt.coordinates(f, &dz).ok_or(SpecSeqError::NotInPage { r: page.r, i: i + r, j: j - r + 1 })?;
        if tco.class.iter().any(|&x| x != 0) {
            return Ok(PermanentVerdict::Supports { r: page.r });
        }
        z = sparse_axpy(f, &z, f.neg(1), &tco.correction);
    }
    let survives = pages
        .last()
        .and_then(|p| p.entries.get(&(i, j)))
        .and_then(|e| e.coordinates(f, &z))
        .is_some_and(|co| co.class.iter().any(|&x| x != 0));
    Ok(PermanentVerdict::Permanent { through: r_max, survives })
}

/// dim E_1^{i,j}(k) = Σ_{a+pb=i, a+2b=i+j} dim Λ_s^a(L*) · dim S^b(L₀̄*).
pub fn e1_closed_form(s: usize, t: usize, p: u32, i: i64, j: i64) -> u64 {
    let n = i + j;
    let p = p as i64;
    let mut total = 0u64;
    // a + p b = i, a + 2 b = n  =>  (p - 2) b = i - n
    if i < 0 || n < 0 || (i - n) % (p - 2) != 0 {
        return 0;
    }
    let b = (i - n) / (p - 2);
    let a = n - 2 * b;
    if b >= 0 && a >= 0 {
        total += lambda_s_dim(s, t, a as usize) * binom_u64((s as u64 + b as u64).saturating_sub(1), b as u64);
    }
    total
}

/// The part of a cochain of exact level `lv`.
pub fn level_part<C: Filtered + ?Sized>(c: &C, n: usize, v: &[(usize, u32)], lv: i64) -> SparseVec {
    v.iter().copied().filter(|&(j, _)| c.level(n, j) == lv).collect()
}

/// Per-bidegree report of the map E_1 → D_1 induced by a filtered chain map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonEntry {
    pub i: i64,
    pub j: i64,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
}

impl ComparisonEntry {
    pub fn bijective(&self) -> bool {
        self.dim_source == self.dim_target && self.rank == self.dim_source
    }
}

/// Induced map on E_1 for a filtration-preserving cochain map
/// `phi(n, v)` from `e` to `d`, in total degrees ≤ top.
pub fn compare_e1<E, D, F>(e: &E, d: &D, top: usize, phi: F) -> Vec<ComparisonEntry>
where
    E: Filtered + ?Sized,
    D: Filtered + ?Sized,
    F: Fn(usize, &[(usize, u32)]) -> SparseVec + Sync,
{
    let f = e.field();
    let ge = AssociatedGraded(e);
    let gd = AssociatedGraded(d);
    let mut out = Vec::new();
    for n in 0..=top {
        let he = cohomology_basis(&ge, n);
        let hd = cohomology_basis(&gd, n);
        let mut by_level_e: BTreeMap<i64, Vec<&SparseVec>> = BTreeMap::new();
        for z in &he.representatives {
            by_level_e.entry(e.level(n, z[0].0)).or_default().push(z);
        }
        let mut by_level_d: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (k, z) in hd.representatives.iter().enumerate() {
            by_level_d.entry(d.level(n, z[0].0)).or_default().push(k);
        }
        let levels: BTreeSet<i64> = by_level_e.keys().chain(by_level_d.keys()).copied().collect();
        for lv in levels {
            let src = by_level_e.get(&lv).cloned().unwrap_or_default();
            let tgt = by_level_d.get(&lv).cloned().unwrap_or_default();
            let mut m = DenseMatrix::zero(tgt.len(), src.len());
            for (col, z) in src.iter().enumerate() {
                let img = level_part(d, n, &phi(n, z), lv);
                let co = hd.coordinates(&img).expect("image of a gr-cocycle is a gr-cocycle");
                for (row, &k) in tgt.iter().enumerate() {
                    m.set(row, col, co[k]);
                }
                debug_assert!(co.iter().enumerate().all(|(k, &x)| x == 0 || tgt.contains(&k)));
            }
            let rank = if src.is_empty() || tgt.is_empty() { 0 } else { m.rref(f).rank() };
            out.push(ComparisonEntry { i: lv, j: n as i64 - lv, dim_source: src.len(), dim_target: tgt.len(), rank });
        }
    }
    out
}

/// Relabelings of the pages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reindex {
    MayOriginal,
    /// new E_r^{i,j} = old E_{(p-2)r+1}^{(p-1)i+j, -(p-2)i}
    ///
    /// Total degree is preserved. A printed variant of this relabeling has
    /// superscript i+j in place of (p-1)i+j, which does not preserve it.
    Jantzen,
    /// new E_{2r}^{2i,j} = new E_{2r+1}^{2i,j} = Jantzen E_r^{i,i+j}; odd columns vanish.
    FriedlanderParshall,
}

impl std::str::FromStr for Reindex {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "may-original" | "none" => Ok(Reindex::MayOriginal),
            "jantzen" => Ok(Reindex::Jantzen),
            "friedlander-parshall" => Ok(Reindex::FriedlanderParshall),
            other => Err(format!("unknown reindexing scheme '{other}'")),
        }
    }
}

/// Relabel the pages of `dims`; pages whose source page was not computed are omitted.
pub fn reindex(dims: &PageDims, p: u32, scheme: Reindex) -> Vec<BTreeMap<(i64, i64), [usize; 2]>> {
    let q = p as i64 - 2;
    let jantzen = |r: usize| -> Option<BTreeMap<(i64, i64), [usize; 2]>> {
        let old = dims.pages.get((q as usize) * r + 1)?;
        let mut out = BTreeMap::new();
        for (&(oi, oj), &d) in old {
            if oj > 0 || (-oj) % q != 0 {
                continue;
            }
            let i = -oj / q;
            let j = oi - (p as i64 - 1) * i;
            out.insert((i, j), d);
        }
        Some(out)
    };
    match scheme {
        Reindex::MayOriginal => dims.pages.clone(),
        Reindex::Jantzen => (0..).map_while(jantzen).collect(),
        Reindex::FriedlanderParshall => {
            let mut out = Vec::new();
            for r in 0.. {
                let Some(page) = jantzen(r) else { break };
                let relabeled: BTreeMap<_, _> = page.into_iter().map(|((i, j), d)| ((2 * i, j - i), d)).collect();
                out.push(relabeled.clone());
                out.push(relabeled);
            }
            out
        }
    }
}

/// Σ_{i+j=n} dim E_∞^{i,j} against the target Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub e_infinity: usize,
    pub target: usize,
    pub certified: bool,
}

pub fn convergence_check(dims: &PageDims, betti: &[usize]) -> Vec<ConvergenceRow> {
    (0..=dims.top.min(betti.len().saturating_sub(1)))
        .map(|n| ConvergenceRow { n, e_infinity: dims.infinity_total(n), target: betti[n], certified: dims.certified(n) })
        .collect()
}
