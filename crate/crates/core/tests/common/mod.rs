//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use polya_core::shapes::{Partition, SkewShape};
use proptest::prelude::*;

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn sk(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(p(outer), p(inner)).unwrap()
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Partitions with at most `rows` rows and parts at most `cols`.
pub fn partition(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, 0..=rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Skew shapes `λ/μ` with `λ` inside the `rows × cols` box.
pub fn skew_shape(rows: usize, cols: usize) -> impl Strategy<Value = SkewShape> {
    partition(rows, cols).prop_flat_map(|outer| {
        let subs = outer.subpartitions();
        (Just(outer), 0..subs.len()).prop_map(move |(o, k)| SkewShape::new(o, subs[k].clone()).unwrap())
    })
}

/// Every skew shape `λ/μ` with `|λ| ≤ max`.
pub fn all_skew_shapes(max: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 0..=max {
        for outer in Partition::all_of_size(n) {
            for inner in outer.subpartitions() {
                out.push(SkewShape::new(outer.clone(), inner).unwrap());
            }
        }
    }
    out
}

/// Fillings of a skew diagram, row by row, with a predicate deciding
/// whether `v` may sit at `(row, col)` given the cells already placed.
fn fill(
    shape: &SkewShape,
    letters: usize,
    allowed: &dyn Fn(usize, Option<usize>, Option<usize>) -> bool,
    weight: &dyn Fn(usize) -> BigInt,
) -> BigInt {
    let boxes = shape.boxes();
    let rows = shape.outer().len();
    let width = shape.outer().get(0);
    let mut grid = vec![vec![None::<usize>; width]; rows];
    fn rec(
        k: usize,
        boxes: &[(usize, usize)],
        grid: &mut Vec<Vec<Option<usize>>>,
        letters: usize,
        allowed: &dyn Fn(usize, Option<usize>, Option<usize>) -> bool,
        weight: &dyn Fn(usize) -> BigInt,
        acc: BigInt,
        total: &mut BigInt,
    ) {
        if k == boxes.len() {
            *total += acc;
            return;
        }
        let (r, c) = boxes[k];
        let left = if c > 0 { grid[r][c - 1] } else { None };
        let above = if r > 0 { grid[r - 1][c] } else { None };
        for v in 0..letters {
            if allowed(v, left, above) {
                grid[r][c] = Some(v);
                rec(k + 1, boxes, grid, letters, allowed, weight, &acc * weight(v), total);
                grid[r][c] = None;
            }
        }
    }
    let mut total = BigInt::zero();
    rec(0, &boxes, &mut grid, letters, allowed, weight, BigInt::one(), &mut total);
    total
}

/// `s_{λ/μ}(x_1, ..., x_m)` as a sum over semistandard tableaux.
pub fn ssyt_eval(shape: &SkewShape, xs: &[i64]) -> BigInt {
    let allowed = |v: usize, left: Option<usize>, above: Option<usize>| {
        left.is_none_or(|l| l <= v) && above.is_none_or(|a| a < v)
    };
    fill(shape, xs.len(), &allowed, &|v| BigInt::from(xs[v]))
}

/// Number of semistandard tableaux with entries in `1..=m`.
pub fn ssyt_count(shape: &SkewShape, m: usize) -> BigInt {
    ssyt_eval(shape, &vec![1; m])
}

/// Number of `(even|odd)` super tableaux: even letters weak along rows and
/// strict down columns, odd letters the other way round, evens first.
pub fn super_count(shape: &SkewShape, even: usize, odd: usize) -> BigInt {
    let allowed = move |v: usize, left: Option<usize>, above: Option<usize>| {
        let is_odd = v >= even;
        let row_ok = left.is_none_or(|l| if is_odd { l < v } else { l <= v });
        let col_ok = above.is_none_or(|a| if is_odd { a <= v } else { a < v });
        row_ok && col_ok
    };
    fill(shape, even + odd, &allowed, &|_| BigInt::one())
}

/// Coefficients of `[n]_q! = Π_{k ≤ n} (1 + q + ... + q^{k-1})`.
pub fn q_factorial(n: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    for k in 1..=n {
        let mut next = vec![0u64; out.len() + k - 1];
        for (i, c) in out.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        out = next;
    }
    out
}

/// Determinant by the signed permutation sum.
pub fn leibniz_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    loop {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for (i, &j) in perm.iter().enumerate() {
            term *= &m[i][j];
        }
        total += term;
        // next permutation in lex order
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    total
}
