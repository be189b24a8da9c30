//! Quadric hypersurface rings `A = S(V)/(q)`.
//!
//! Only `m = dim V` matters: every quantity here is independent of the rank
//! of `q`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use spin::Mutex;

use crate::sequences::{GradedSequence, Leaf, Level, Value};
use crate::series::MultiSeries;
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::{dim_gl, dim_gl_skew, dim_super_skew, lr_coefficient};
use crate::{Error, Result};

/// Largest total degree accepted by [`multigraded_hs_check`].
pub const MAX_TRUNC: usize = 12;

/// The quadric ring for a given `dim V`, with its sequence and Koszul dual.
#[derive(Clone, Debug)]
pub struct QuadricContext {
    m: usize,
    sequence: GradedSequence,
    dual: GradedSequence,
}

impl QuadricContext {
    pub fn new(m: usize) -> Result<Self> {
        Ok(Self {
            m,
            sequence: GradedSequence::quadric(m)?,
            dual: GradedSequence::leaf(Leaf::QuadricDual { m }, Level::Dim)?,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sequence(&self) -> &GradedSequence {
        &self.sequence
    }

    pub fn dual(&self) -> &GradedSequence {
        &self.dual
    }
}

/// Algorithm for [`quadric_schur_dim`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Jacobi–Trudi determinant over the graded dimensions.
    Jt,
    /// `Σ dim S_{α/μ}(C^{m-1})` over `α` with `λ/α` a vertical strip.
    VerticalStrip,
    /// `dim S_{λ/μ}(C^{m-1|1})`.
    Super,
}

/// All `α` with `μ ⊆ α ⊆ λ` and `λ/α` a vertical strip.
fn vertical_strip_removals(s: &SkewShape) -> Vec<Partition> {
    let rows = s.outer().len();
    let (outer, inner) = (s.outer().padded(rows), s.inner().padded(rows));
    let mut out = Vec::new();
    fn rec(i: usize, outer: &[usize], inner: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::new(cur.clone()).expect("checked row by row"));
            return;
        }
        for v in [outer[i], outer[i].wrapping_sub(1)] {
            if v == usize::MAX || v < inner[i] || (i > 0 && v > cur[i - 1]) {
                continue;
            }
            cur.push(v);
            rec(i + 1, outer, inner, cur, out);
            cur.pop();
        }
    }
    rec(0, &outer, &inner, &mut Vec::new(), &mut out);
    out
}

/// `dim S^A_{λ/μ}` for the quadric ring, by the chosen algorithm.
pub fn quadric_schur_dim(ctx: &QuadricContext, s: &SkewShape, method: Method) -> BigInt {
    let m = ctx.m;
    match method {
        Method::Jt => match ctx.sequence.schur(s).expect("dimension level has no order bound") {
            Value::Int(v) => v,
            Value::Class(_) => unreachable!("the context sequence is dimension valued"),
        },
        Method::VerticalStrip => vertical_strip_removals(s)
            .into_iter()
            .map(|alpha| {
                let skew = SkewShape::new(alpha, s.inner().clone()).expect("α contains μ");
                dim_gl_skew(&skew, m - 1)
            })
            .sum(),
        Method::Super => dim_super_skew(s, m - 1, 1),
    }
}

/// Multiplicities of irreducible `O(V)`-representations in `S^A_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalDecomposition {
    /// `(μ, multiplicity)`, sorted by size and then lexicographically.
    pub terms: Vec<(Partition, u64)>,
}

fn check_stable(lambda: &Partition, m: usize) -> Result<()> {
    if 2 * lambda.len() > m {
        return Err(Error::StableRange { length: lambda.len(), m });
    }
    Ok(())
}

/// `mult(μ) = Σ_ν c^λ_{μ,(2ν)^T}`, valid in the stable range `2ℓ(λ) ≤ m`.
pub fn orthogonal_stable_decomposition(ctx: &QuadricContext, lambda: &Partition) -> Result<OrthogonalDecomposition> {
    check_stable(lambda, ctx.m)?;
    let mut mult: BTreeMap<Partition, u64> = BTreeMap::new();
    let n = lambda.size();
    for half in 0..=n / 2 {
        for nu in Partition::all_of_size(half) {
            let doubled = Partition::new(nu.parts().iter().map(|x| 2 * x).collect())?.transpose();
            if !lambda.contains(&doubled) {
                continue;
            }
            for mu in Partition::bounded(n - 2 * half, lambda.len(), lambda.get(0)) {
                let c = lr_coefficient(lambda, &mu, &doubled);
                if c > 0 {
                    *mult.entry(mu).or_default() += c;
                }
            }
        }
    }
    let mut terms: Vec<(Partition, u64)> = mult.into_iter().collect();
    terms.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| a.0.cmp(&b.0)));
    Ok(OrthogonalDecomposition { terms })
}

static CHI_CACHE: Mutex<BTreeMap<(Partition, usize), BigInt>> = Mutex::new(BTreeMap::new());

/// Dimension of the irreducible `O(m)`-representation `χ_O(μ)`, from
/// `s_μ = Σ_{α,ν} c^μ_{α,2ν} χ_O(α)`. Requires `2ℓ(μ) ≤ m`.
pub fn chi_o_dim(mu: &Partition, m: usize) -> Result<BigInt> {
    check_stable(mu, m)?;
    let key = (mu.clone(), m);
    if let Some(v) = CHI_CACHE.lock().get(&key) {
        return Ok(v.clone());
    }
    let mut v = dim_gl(mu, m);
    let n = mu.size();
    for half in 1..=n / 2 {
        for nu in Partition::all_of_size(half) {
            let doubled = Partition::new(nu.parts().iter().map(|x| 2 * x).collect())?;
            if !mu.contains(&doubled) {
                continue;
            }
            for alpha in Partition::bounded(n - 2 * half, mu.len(), mu.get(0)) {
                let c = lr_coefficient(mu, &alpha, &doubled);
                if c > 0 {
                    v -= BigInt::from(c) * chi_o_dim(&alpha, m)?;
                }
            }
        }
    }
    Ok(CHI_CACHE.lock().entry(key).or_insert(v).clone())
}

/// `Σ mult(μ) · chi_o_dim(μ)` for the stable-range decomposition of `λ`.
pub fn decomposition_dimension(ctx: &QuadricContext, decomposition: &OrthogonalDecomposition) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (mu, mult) in &decomposition.terms {
        total += BigInt::from(*mult) * chi_o_dim(mu, ctx.m)?;
    }
    Ok(total)
}

fn unit_vector(n: usize, entries: &[(usize, u32)]) -> Vec<u32> {
    let mut e = vec![0; n];
    for &(i, k) in entries {
        e[i] += k;
    }
    e
}

/// The displayed rational expression for the multigraded Hilbert series of
/// the quotient in `n` variables, with `1/(1 - [V]x)` read as `Σ dim S^d V x^d`.
pub fn multigraded_hs(m: usize, n: usize, trunc: usize) -> MultiSeries {
    let minus = -BigInt::one();
    let mut num = MultiSeries::one(n, trunc);
    let mut den = MultiSeries::one(n, trunc);
    let last = n - 1;
    for i in 0..last {
        for j in i..last {
            num = num.mul(&MultiSeries::one_plus(n, trunc, minus.clone(), unit_vector(n, &[(i, 1), (j, 1)])));
            if i < j {
                den = den.mul(&MultiSeries::one_plus(n, trunc, minus.clone(), unit_vector(n, &[(i, 1), (j, 1)])));
            }
        }
        let mixed = MultiSeries::one_plus(n, trunc, minus.clone(), unit_vector(n, &[(i, 1), (last, 1)]));
        num = num.mul(&mixed);
        den = den.mul(&mixed);
    }
    num = num.mul(&MultiSeries::one_plus(n, trunc, minus, unit_vector(n, &[(last, 2)])));
    let mut hs = num.mul(&den.inverse());
    for i in 0..n {
        hs = hs.mul(&MultiSeries::symmetric_power_series(n, trunc, i, m));
    }
    hs
}

fn exponent_vectors(n: usize, max_total: usize) -> Vec<Vec<u32>> {
    fn rec(i: usize, n: usize, rest: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=rest {
            cur.push(k as u32);
            rec(i + 1, n, rest - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, max_total, &mut Vec::new(), &mut out);
    out
}

/// Checks that the `n`-variable series factors as the `(n-1)`-variable series
/// times the one-variable series, and that the coefficient of `x^μ` is
/// `Π dim A_{μ_i}`, through total degree `trunc`.
pub fn multigraded_hs_check(m: usize, n: usize, trunc: usize) -> Result<bool> {
    if trunc > MAX_TRUNC {
        return Err(Error::TruncationTooLarge { trunc, max: MAX_TRUNC });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one variable".into()));
    }
    let ctx = QuadricContext::new(m)?;
    let hs = multigraded_hs(m, n, trunc);
    if n > 1 {
        let head = multigraded_hs(m, n - 1, trunc).embed(n, 0);
        let tail = multigraded_hs(m, 1, trunc).embed(n, n - 1);
        if hs != head.mul(&tail) {
            return Ok(false);
        }
    }
    Ok(exponent_vectors(n, trunc).into_iter().all(|mu| {
        let expected: BigInt = mu.iter().map(|&k| ctx.sequence.dim(k as i64)).product();
        hs.coeff(&mu) == expected
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn all_methods(ctx: &QuadricContext, s: &SkewShape) -> [BigInt; 3] {
        [Method::Jt, Method::VerticalStrip, Method::Super].map(|k| quadric_schur_dim(ctx, s, k))
    }

    #[test]
    fn column_shapes() {
        let ctx = QuadricContext::new(3).unwrap();
        for d in 2..7 {
            let s = SkewShape::straight(Partition::column(d));
            assert_eq!(all_methods(&ctx, &s), [4, 4, 4].map(BigInt::from));
        }
        let ctx = QuadricContext::new(2).unwrap();
        assert_eq!(all_methods(&ctx, &SkewShape::straight(p(&[1, 1]))), [2, 2, 2].map(BigInt::from));
    }

    #[test]
    fn rows_are_graded_pieces() {
        for m in 1..5 {
            let ctx = QuadricContext::new(m).unwrap();
            for d in 0..7 {
                let s = SkewShape::straight(Partition::row(d));
                for v in all_methods(&ctx, &s) {
                    assert_eq!(v, ctx.sequence().dim(d as i64));
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let ctx = QuadricContext::new(4).unwrap();
        let d = orthogonal_stable_decomposition(&ctx, &p(&[1, 1])).unwrap();
        assert_eq!(d.terms, vec![(p(&[]), 1), (p(&[1, 1]), 1)]);
        assert_eq!(decomposition_dimension(&ctx, &d).unwrap(), BigInt::from(7));
        let d = orthogonal_stable_decomposition(&ctx, &p(&[2])).unwrap();
        assert_eq!(d.terms, vec![(p(&[2]), 1)]);
        assert!(matches!(
            orthogonal_stable_decomposition(&QuadricContext::new(3).unwrap(), &p(&[1, 1])),
            Err(Error::StableRange { .. })
        ));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_o_dim(&p(&[]), 3).unwrap(), BigInt::one());
        assert_eq!(chi_o_dim(&p(&[1]), 5).unwrap(), BigInt::from(5));
        assert_eq!(chi_o_dim(&p(&[1, 1]), 4).unwrap(), BigInt::from(6));
        assert_eq!(chi_o_dim(&p(&[2]), 4).unwrap(), BigInt::from(9));
        assert!(chi_o_dim(&p(&[1, 1]), 3).is_err());
    }

    #[test]
    fn multigraded_examples() {
        assert!(multigraded_hs_check(3, 2, 6).unwrap());
        assert!(multigraded_hs_check(3, 1, 6).unwrap());
        assert!(multigraded_hs_check(2, 3, 5).unwrap());
        assert!(multigraded_hs_check(2, 3, 13).is_err());
    }
}
