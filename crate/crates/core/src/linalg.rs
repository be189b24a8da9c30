//! Exact determinants and rational linear algebra.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::symfunc::SchurClass;

/// A commutative ring whose elements carry enough context to build `0` and `1`.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for SchurClass {
    fn zero_like(&self) -> Self {
        SchurClass::zero(self.factor_count())
    }
    fn one_like(&self) -> Self {
        SchurClass::one(self.factor_count())
    }
    fn vanishes(&self) -> bool {
        SchurClass::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("classes in one matrix share a factor count")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("classes in one matrix share a factor count")
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("classes in one matrix share a factor count")
    }
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact.
pub fn bareiss_det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Laplace expansion along rows, memoized over the set of used columns.
///
/// Works over any commutative ring; `r` must be small (the memo has `2^r`
/// slots). `zero` fixes the ring context when the matrix is empty.
pub fn laplace_det<R: Ring>(matrix: &[Vec<R>], zero: &R) -> R {
    let n = matrix.len();
    assert!(n < 31, "laplace expansion is exponential in the order");
    let mut memo: BTreeMap<u32, R> = BTreeMap::new();
    laplace_rec(matrix, 0, 0, zero, &mut memo)
}

fn laplace_rec<R: Ring>(m: &[Vec<R>], row: usize, used: u32, zero: &R, memo: &mut BTreeMap<u32, R>) -> R {
    let n = m.len();
    if row == n {
        return zero.one_like();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = zero.zero_like();
    let mut position = 0;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.vanishes() {
            let minor = laplace_rec(m, row + 1, used | (1 << col), zero, memo);
            if !minor.vanishes() {
                let term = entry.mul(&minor);
                acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(a: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of the right null space of an integer matrix with `cols` columns.
pub fn nullspace(matrix: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scales a nonzero rational vector to a primitive integer vector whose
/// first nonzero entry is positive.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let flip = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter().map(|x| if flip { -(x / &g) } else { x / &g }).collect()
}
