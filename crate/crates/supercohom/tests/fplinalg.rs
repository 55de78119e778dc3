use proptest::prelude::*;
use supercohom::fplinalg::{
    field_inverse, rank, rank_kernel_image, solve_linear, subquotient, DenseMatrix, LinalgConfig, MatrixFp, PrimeField, SparseMatrix,
};

fn f(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn dense(p: u32, rows: &[Vec<i64>]) -> MatrixFp {
    MatrixFp::Dense(DenseMatrix::from_rows(f(p), rows).unwrap())
}

fn as_sparse(m: &DenseMatrix) -> MatrixFp {
    MatrixFp::from_dense(m.clone(), &LinalgConfig { sparse_fill_threshold: 1.0 })
}

/// Rank by exhaustive enumeration of the row space (tiny matrices only).
fn brute_rank(p: u32, rows: &[Vec<u32>]) -> usize {
    let fld = f(p);
    let cols = rows.first().map_or(0, Vec::len);
    let mut seen = std::collections::HashSet::new();
    let mut coeffs = vec![0u32; rows.len()];
    loop {
        let mut v = vec![0u32; cols];
        for (r, &c) in rows.iter().zip(&coeffs) {
            for (x, &y) in v.iter_mut().zip(r) {
                *x = fld.add(*x, fld.mul(c, y));
            }
        }
        seen.insert(v);
        let mut k = 0;
        while k < coeffs.len() && coeffs[k] == p - 1 {
            coeffs[k] = 0;
            k += 1;
        }
        if k == coeffs.len() {
            break;
        }
        coeffs[k] += 1;
    }
    // |row space| = p^rank
    (seen.len() as f64).log(p as f64).round() as usize
}

#[test]
fn inverses() {
    assert_eq!(field_inverse(1, f(5)).unwrap(), 1);
    assert_eq!(field_inverse(2, f(5)).unwrap(), 3);
    assert_eq!(field_inverse(2, f(3)).unwrap(), 2);
    assert!(field_inverse(0, f(3)).is_err());
    for p in [3, 5, 7, 11] {
        for a in 1..p {
            assert_eq!(f(p).mul(a, field_inverse(a, f(p)).unwrap()), 1);
        }
    }
}

#[test]
fn rank_kernel_image_examples() {
    let zero = MatrixFp::Dense(DenseMatrix::zero(3, 3));
    let r = rank_kernel_image(&zero, f(5));
    assert_eq!((r.rank, r.kernel.len()), (0, 3));
    let id = MatrixFp::Dense(DenseMatrix::identity(4));
    let r = rank_kernel_image(&id, f(3));
    assert_eq!((r.rank, r.kernel.len()), (4, 0));
    let m = dense(5, &[vec![1, 2, 0], vec![2, 4, 0]]);
    assert_eq!(rank(&m, f(5)), 1);
    assert_eq!(brute_rank(5, &[vec![1, 2, 0], vec![2, 4, 0]]), 1);
}

#[test]
fn solve_linear_examples() {
    let id = MatrixFp::Dense(DenseMatrix::identity(3));
    assert_eq!(solve_linear(&id, &[1, 2, 0], f(3)).unwrap(), Some(vec![1, 2, 0]));
    let zero = MatrixFp::Dense(DenseMatrix::zero(2, 2));
    assert_eq!(solve_linear(&zero, &[1, 0], f(3)).unwrap(), None);
    let m = dense(3, &[vec![1, 1], vec![0, 0]]);
    assert_eq!(solve_linear(&m, &[2, 0], f(3)).unwrap(), Some(vec![2, 0]));
    assert!(solve_linear(&m, &[2], f(3)).is_err());
}

#[test]
fn subquotient_examples() {
    let e1 = vec![1, 0];
    let e2 = vec![0, 1];
    assert_eq!(subquotient(2, &[e1.clone(), e2.clone()], &[], f(3)).unwrap().dim(), 2);
    assert_eq!(subquotient(2, &[e1.clone(), e2.clone()], &[e1.clone(), e2.clone()], f(3)).unwrap().dim(), 0);
    let q = subquotient(2, &[e1.clone(), vec![1, 1]], std::slice::from_ref(&e1), f(3)).unwrap();
    assert_eq!(q.dim(), 1);
    // the representative reduces to a nonzero multiple of e2 modulo e1
    assert_ne!(q.representatives[0][1], 0);
}

fn matrix_strategy() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    (prop::sample::select(vec![3u32, 5]), 1usize..=8, 1usize..=8).prop_flat_map(|(p, r, c)| {
        // bias towards zeros so that rank deficiency is common
        let entry = prop_oneof![3 => Just(0u32), 2 => 1..p];
        (Just(p), prop::collection::vec(prop::collection::vec(entry, c), r))
    })
}

fn to_dense(p: u32, rows: &[Vec<u32>]) -> DenseMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    DenseMatrix::from_rows(f(p), &rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_is_representation_and_order_independent((p, rows) in matrix_strategy(), seed in any::<u64>()) {
        let fld = f(p);
        let d = to_dense(p, &rows);
        let r = rank(&MatrixFp::Dense(d.clone()), fld);
        prop_assert_eq!(rank(&as_sparse(&d), fld), r);
        prop_assert_eq!(rank(&MatrixFp::Dense(d.transpose()), fld), r);
        let mut shuffled = rows.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            shuffled.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        prop_assert_eq!(rank(&MatrixFp::Dense(to_dense(p, &shuffled)), fld), r);
        if rows.len() <= 4 && (p == 3 || rows.len() <= 3) {
            prop_assert_eq!(brute_rank(p, &rows), r);
        }
    }

    #[test]
    fn kernels_and_images((p, rows) in matrix_strategy()) {
        let fld = f(p);
        let d = to_dense(p, &rows);
        for m in [MatrixFp::Dense(d.clone()), as_sparse(&d)] {
            let rki = rank_kernel_image(&m, fld);
            prop_assert_eq!(rki.rank + rki.kernel.len(), d.cols());
            prop_assert_eq!(rki.image.len(), rki.rank);
            for v in &rki.kernel {
                prop_assert!(d.mul_vec(fld, v).iter().all(|&x| x == 0));
            }
            let cols: Vec<Vec<i64>> = rki.kernel.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
            if !cols.is_empty() {
                let k = DenseMatrix::from_rows(fld, &cols).unwrap();
                prop_assert_eq!(rank(&MatrixFp::Dense(k), fld), rki.kernel.len());
            }
        }
    }

    #[test]
    fn solve_finds_a_solution_when_one_exists((p, rows) in matrix_strategy(), x0 in prop::collection::vec(0u32..5, 8)) {
        let fld = f(p);
        let d = to_dense(p, &rows);
        let x0: Vec<u32> = x0[..d.cols()].iter().map(|&x| x % p).collect();
        let b = d.mul_vec(fld, &x0);
        let x = solve_linear(&MatrixFp::Dense(d.clone()), &b, fld).unwrap().expect("consistent system");
        prop_assert_eq!(d.mul_vec(fld, &x), b);
    }

    #[test]
    fn subquotient_representatives_complement_b((p, rows) in matrix_strategy(), picks in prop::collection::vec(any::<bool>(), 8)) {
        let fld = f(p);
        let z: Vec<Vec<u32>> = rows.clone();
        let n = z[0].len();
        let b: Vec<Vec<u32>> = z.iter().zip(&picks).filter(|(_, &k)| k).map(|(v, _)| v.clone()).collect();
        let q = subquotient(n, &z, &b, fld).unwrap();
        let span_rank = |vs: &[Vec<u32>]| if vs.is_empty() { 0 } else { rank(&MatrixFp::Dense(to_dense(p, vs)), fld) };
        let rb = span_rank(&b);
        let rz = span_rank(&z);
        prop_assert_eq!(q.dim(), rz - rb);
        let joined: Vec<Vec<u32>> = b.iter().chain(&q.representatives).cloned().collect();
        prop_assert_eq!(span_rank(&joined), rb + q.dim());
        let with_z: Vec<Vec<u32>> = z.iter().chain(&q.representatives).cloned().collect();
        prop_assert_eq!(span_rank(&with_z), rz);
    }
}

#[test]
fn sparse_matrix_round_trip() {
    let m = SparseMatrix::new(3, vec![vec![(0, 1)], vec![], vec![(1, 2), (2, 1)]]);
    let d = m.to_dense();
    assert_eq!(d.get(1, 2), 2);
    assert_eq!(rank(&MatrixFp::Sparse(m), f(3)), 2);
}
