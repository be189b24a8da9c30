//! Exact univariate rational Hilbert series and truncated multivariate series.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow, Signed, Zero};

/// Dense polynomial helpers; coefficient `i` multiplies `t^i`.
pub mod poly {
    use super::*;

    pub fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn degree(p: &[BigInt]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        trim(out)
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    /// `(1 - a t)^k`.
    pub fn linear_power(a: &BigInt, k: u32) -> Vec<BigInt> {
        (0..=k)
            .map(|i| {
                let c = binomial(BigInt::from(k), BigInt::from(i));
                let term = c * Pow::pow(a, i);
                if i % 2 == 1 {
                    -term
                } else {
                    term
                }
            })
            .collect()
    }

    /// Power-series coefficients of `p / q` up to `t^n` inclusive.
    /// `q` must have constant term `±1`.
    pub fn series_div(p: &[BigInt], q: &[BigInt], n: usize) -> Vec<BigInt> {
        let q0 = &q[0];
        assert!(q0.abs().is_one(), "series division needs a unit constant term");
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut c = p.get(k).cloned().unwrap_or_default();
            for j in 1..q.len().min(k + 1) {
                c -= &q[j] * &out[k - j];
            }
            out.push(c * q0);
        }
        out
    }

    /// Exact quotient `p / q` when `q` divides `p`; `q` must have constant term `±1`.
    pub fn exact_div(p: &[BigInt], q: &[BigInt]) -> Option<Vec<BigInt>> {
        let (Some(dp), Some(dq)) = (degree(p), degree(q)) else {
            return degree(p).is_none().then(Vec::new);
        };
        if dp < dq {
            return None;
        }
        let quotient = series_div(p, q, dp - dq);
        (mul(&quotient, q) == trim(p.to_vec())).then(|| trim(quotient))
    }

    /// Evaluate at an integer.
    pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
        p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// `N(t) / Π (1 - a t)^k` with integer roots `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Vec<BigInt>,
    denominator: BTreeMap<BigInt, u32>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<BigInt>, denominator: BTreeMap<BigInt, u32>) -> Self {
        let denominator = denominator.into_iter().filter(|(_, k)| *k > 0).collect();
        Self { numerator: poly::trim(numerator), denominator }
    }

    pub fn polynomial(numerator: Vec<BigInt>) -> Self {
        Self::new(numerator, BTreeMap::new())
    }

    /// `N(t) / (1 - t)^k`.
    pub fn over_one_minus_t(numerator: Vec<BigInt>, k: u32) -> Self {
        Self::new(numerator, BTreeMap::from([(BigInt::one(), k)]))
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator_factors(&self) -> &BTreeMap<BigInt, u32> {
        &self.denominator
    }

    pub fn denominator(&self) -> Vec<BigInt> {
        self.denominator
            .iter()
            .fold(vec![BigInt::one()], |acc, (a, k)| poly::mul(&acc, &poly::linear_power(a, *k)))
    }

    fn denominator_degree(&self) -> usize {
        self.denominator.values().map(|&k| k as usize).sum()
    }

    /// Coefficients of `t^0..=t^n`.
    pub fn coefficients(&self, n: usize) -> Vec<BigInt> {
        poly::series_div(&self.numerator, &self.denominator(), n)
    }

    /// The polynomial this series equals, if it is one.
    pub fn as_polynomial(&self) -> Option<Vec<BigInt>> {
        poly::exact_div(&self.numerator, &self.denominator())
    }

    /// `deg N - deg D`, clamped at zero: beyond this index the coefficients
    /// follow the quasi-polynomial pattern dictated by the roots.
    fn excess(&self) -> usize {
        poly::degree(&self.numerator).map_or(0, |d| d.saturating_sub(self.denominator_degree()))
    }

    /// Rebuilds the numerator over `denominator` from coefficients, given a
    /// bound past which `denominator * series` vanishes.
    fn with_denominator(denominator: BTreeMap<BigInt, u32>, bound: usize, coeff: impl Fn(usize) -> BigInt) -> Self {
        let shell = Self::new(Vec::new(), denominator);
        let q = shell.denominator();
        let s: Vec<BigInt> = (0..=bound).map(coeff).collect();
        let mut num = poly::mul(&q, &s);
        num.truncate(bound + 1);
        Self::new(num, shell.denominator)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.denominator.clone();
        for (a, k) in &other.denominator {
            *den.entry(a.clone()).or_default() += k;
        }
        Self::new(poly::mul(&self.numerator, &other.numerator), den)
    }

    /// The series `Σ c_{di} t^i`.
    pub fn veronese(&self, d: usize) -> Self {
        assert!(d >= 1);
        let mut den: BTreeMap<BigInt, u32> = BTreeMap::new();
        for (a, &k) in &self.denominator {
            let e = den.entry(Pow::pow(a, d)).or_default();
            *e = (*e).max(k);
        }
        let deg_q: usize = den.values().map(|&k| k as usize).sum();
        let bound = deg_q + self.excess();
        let c = self.coefficients(d * bound);
        Self::with_denominator(den, bound, |i| c[d * i].clone())
    }

    /// The Hadamard (coefficientwise) product.
    pub fn hadamard(&self, other: &Self) -> Self {
        let mut den: BTreeMap<BigInt, u32> = BTreeMap::new();
        for (a, &k) in &self.denominator {
            for (b, &l) in &other.denominator {
                let e = den.entry(a * b).or_default();
                *e = (*e).max(k + l - 1);
            }
        }
        let deg_q: usize = den.values().map(|&k| k as usize).sum();
        let bound = deg_q + self.excess().max(other.excess());
        let (x, y) = (self.coefficients(bound), other.coefficients(bound));
        Self::with_denominator(den, bound, |i| &x[i] * &y[i])
    }
}

/// A power series in `n` variables truncated at total degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    vars: usize,
    trunc: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiSeries {
    pub fn constant(vars: usize, trunc: usize, c: BigInt) -> Self {
        let mut s = Self { vars, trunc, terms: BTreeMap::new() };
        s.add_term(vec![0; vars], c);
        s
    }

    pub fn one(vars: usize, trunc: usize) -> Self {
        Self::constant(vars, trunc, BigInt::one())
    }

    /// `1 + c · Π x^exps`.
    pub fn one_plus(vars: usize, trunc: usize, c: BigInt, exps: Vec<u32>) -> Self {
        let mut s = Self::one(vars, trunc);
        s.add_term(exps, c);
        s
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.vars);
        if exps.iter().map(|&e| e as usize).sum::<usize>() > self.trunc || c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.vars, self.trunc), (other.vars, other.trunc));
        let mut out = Self { vars: self.vars, trunc: self.trunc, terms: BTreeMap::new() };
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let k: Vec<u32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(k, va * vb);
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `1`.
    pub fn inverse(&self) -> Self {
        assert!(self.coeff(&vec![0; self.vars]).is_one(), "inverse needs constant term 1");
        // 1/(1 - u) = Σ u^k with u of order ≥ 1
        let mut u = self.clone();
        u.terms.remove(&vec![0; self.vars]);
        let u = u.scale(&BigInt::from(-1));
        let mut out = Self::one(self.vars, self.trunc);
        let mut power = Self::one(self.vars, self.trunc);
        for _ in 0..self.trunc {
            power = power.mul(&u);
            out = out.add(&power);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self { vars: self.vars, trunc: self.trunc, terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// `(1 - x_i)^{-m}` as a truncated series.
    pub fn symmetric_power_series(vars: usize, trunc: usize, i: usize, m: usize) -> Self {
        let mut out = Self { vars, trunc, terms: BTreeMap::new() };
        for d in 0..=trunc {
            let mut e = vec![0; vars];
            e[i] = d as u32;
            out.add_term(e, dim_sym(m, d));
        }
        out
    }

    /// Embeds a series in the first `self.vars` of `vars` variables.
    pub fn embed(&self, vars: usize, offset: usize) -> Self {
        let mut out = Self { vars, trunc: self.trunc, terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            let mut e = vec![0; vars];
            e[offset..offset + k.len()].copy_from_slice(k);
            out.add_term(e, v.clone());
        }
        out
    }
}

/// `dim S^d(C^m)`.
pub(crate) fn dim_sym(m: usize, d: usize) -> BigInt {
    if m == 0 {
        return if d == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial(BigInt::from(m + d - 1), BigInt::from(d))
}
