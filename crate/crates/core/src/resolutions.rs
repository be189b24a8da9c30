//! Pure free resolutions at the level of Betti tables.
//!
//! Builders for polynomial rings (EFW complexes), quadric hypersurface rings
//! and rational normal curves, an exact Hilbert-series validator, and the
//! Herzog–Kühl type linear system for the Betti numbers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{nullspace, primitive_integer_vector};
use crate::quadric::{quadric_schur_dim, Method, QuadricContext};
use crate::sequences::{veronese_shape, GradedSequence, Value};
use crate::series::{poly, RationalSeries};
use crate::shapes::{attach_dot, Composition, Partition, SkewShape};
use crate::symfunc::dim_gl;
use crate::{Error, Result};

/// Degree shifts `e` and the twists `d_i = e_1 + ... + e_i`, `d_0 = 0`.
/// Shifts past the end of `e` are 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    shifts: Composition,
}

impl DegreeSequence {
    pub fn new(shifts: Composition) -> Self {
        Self { shifts }
    }

    pub fn shifts(&self) -> &Composition {
        &self.shifts
    }

    /// `e_i` for `i ≥ 1`.
    pub fn shift(&self, i: usize) -> usize {
        self.shifts.get_or_one(i - 1)
    }

    /// `d_i`.
    pub fn twist(&self, i: usize) -> i64 {
        (1..=i).map(|k| self.shift(k) as i64).sum()
    }
}

/// Schur functor attached to a row of a Betti table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    Partition(Partition),
    Skew(SkewShape),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => write!(f, "{p}"),
            Label::Skew(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiRow {
    pub index: usize,
    pub twist: i64,
    pub rank: BigInt,
    pub label: Option<Label>,
}

/// From homological index `start` on, the twist grows by one per step and
/// the rank at `start + j` is `rank · ratio^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tail {
    pub start: usize,
    pub rank: BigInt,
    pub ratio: BigInt,
}

impl Tail {
    pub fn rank_at(&self, index: usize) -> BigInt {
        &self.rank * num_traits::Pow::pow(&self.ratio, index - self.start)
    }
}

/// A Betti table of a pure resolution, possibly with a linear tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub rows: Vec<BettiRow>,
    pub tail: Option<Tail>,
}

impl BettiTable {
    /// Checks twist monotonicity, rank positivity and tail consistency.
    pub fn validate(&self) -> Result<()> {
        for w in self.rows.windows(2) {
            if w[0].index >= w[1].index || w[0].twist >= w[1].twist {
                return Err(Error::InvalidParameter(format!(
                    "rows {} and {} are not strictly increasing",
                    w[0].index, w[1].index
                )));
            }
        }
        if let Some(r) = self.rows.iter().find(|r| !r.rank.is_positive()) {
            return Err(Error::InvalidParameter(format!("row {} has rank {}", r.index, r.rank)));
        }
        if let Some(t) = &self.tail {
            let Some(first) = self.rows.iter().find(|r| r.index == t.start) else {
                return Err(Error::InvalidParameter(format!("tail start {} has no row", t.start)));
            };
            for r in self.rows.iter().filter(|r| r.index >= t.start) {
                let twist = first.twist + (r.index - t.start) as i64;
                if r.rank != t.rank_at(r.index) || r.twist != twist {
                    return Err(Error::InvalidParameter(format!("row {} breaks the linear tail", r.index)));
                }
            }
        }
        Ok(())
    }

    pub fn ranks(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.rank.clone()).collect()
    }

    pub fn twists(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.twist).collect()
    }
}

/// The partitions `λ^{(0)}, ..., λ^{(count-1)}` of the EFW border strip.
///
/// With `n = len(e)`, `λ^{(0)}_j = e_{j+1} + ... + e_n - (n - j)` and
/// `λ^{(i)}` adds `e_i` boxes to row `i` of `λ^{(i-1)}`.
pub fn efw_partitions(e: &Composition, count: usize) -> Result<Vec<Partition>> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be positive".into()));
    }
    let n = e.len();
    let seq = DegreeSequence::new(e.clone());
    let mut rows: Vec<usize> = (1..n).map(|j| (j + 1..=n).map(|k| seq.shift(k)).sum::<usize>() - (n - j)).collect();
    let mut out = vec![Partition::new(rows.clone())?];
    for i in 1..count {
        if rows.len() < i {
            rows.resize(i, 0);
        }
        rows[i - 1] += seq.shift(i);
        out.push(Partition::new(rows.clone())?);
    }
    Ok(out)
}

/// Betti table of the EFW complex over a polynomial ring in `e_dim`
/// variables: rank `dim S_{λ^{(i)}}(C^{e_dim})` at twist `d_i`, zero rows
/// dropped.
pub fn efw_betti(e: &Composition, e_dim: usize, count: usize) -> Result<BettiTable> {
    if e_dim == 0 {
        return Err(Error::InvalidParameter("E_dim must be positive".into()));
    }
    let seq = DegreeSequence::new(e.clone());
    let rows = efw_partitions(e, count)?
        .into_iter()
        .enumerate()
        .map(|(i, l)| BettiRow { index: i, twist: seq.twist(i), rank: dim_gl(&l, e_dim), label: Some(Label::Partition(l)) })
        .filter(|r| !r.rank.is_zero())
        .collect();
    Ok(BettiTable { rows, tail: None })
}

fn int_of(v: Value) -> BigInt {
    match v {
        Value::Int(x) => x,
        Value::Class(_) => unreachable!("dimension-level sequence"),
    }
}

/// Ranks `dim S^A_{(λ^{(m-1)}, 1^j)}` for `j = 0..=horizon`, when `e_m = 1`.
pub fn quadric_tail_ranks(m: usize, e: &Composition, horizon: usize) -> Result<Vec<BigInt>> {
    let ctx = QuadricContext::new(m)?;
    let last = efw_partitions(e, m)?.pop().expect("count is positive");
    (0..=horizon)
        .map(|j| Ok(quadric_schur_dim(&ctx, &SkewShape::straight(last.extended(1, j)?), Method::Jt)))
        .collect()
}

/// The pure resolution over the quadric ring with `dim V = m` and degree
/// shifts `e` (`len(e) = m`).
///
/// When `e_m > 1` the table is finite with rows `0..m`. When `e_m = 1` it has
/// a linear tail of constant rank from index `m - 1` on; `tail_terms` further
/// rows are written out explicitly.
pub fn quadric_pure_resolution(m: usize, e: &Composition, tail_terms: usize) -> Result<BettiTable> {
    if e.len() != m {
        return Err(Error::LengthMismatch { expected: m, found: e.len() });
    }
    let ctx = QuadricContext::new(m)?;
    let seq = DegreeSequence::new(e.clone());
    let infinite = seq.shift(m) == 1;
    let count = if infinite { m + tail_terms } else { m };
    let rows: Vec<BettiRow> = efw_partitions(e, count)?
        .into_iter()
        .enumerate()
        .map(|(i, l)| BettiRow {
            index: i,
            twist: seq.twist(i),
            rank: quadric_schur_dim(&ctx, &SkewShape::straight(l.clone()), Method::Jt),
            label: Some(Label::Partition(l)),
        })
        .collect();
    let tail = infinite.then(|| Tail { start: m - 1, rank: rows[m - 1].rank.clone(), ratio: BigInt::one() });
    let table = BettiTable { rows, tail };
    assert!(table.validate().is_ok(), "quadric resolutions have positive ranks and a constant tail");
    Ok(table)
}

/// Result of [`validate_purity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityReport {
    /// `Σ (-1)^i β_i t^{d_i} · HS_A(t)` is a polynomial.
    pub polynomial: bool,
    /// All listed coefficients are nonnegative.
    pub nonnegative: bool,
    /// The polynomial, or the series through `t^horizon` if not polynomial.
    pub coefficients: Vec<BigInt>,
    /// Total dimension of the resolved module when it has finite length.
    pub dimension: Option<BigInt>,
}

/// Computes `HS_M = Σ (-1)^i β_i t^{d_i} · HS_A(t)` exactly, summing a
/// linear tail in closed form as `(-1)^s r t^{d_s} / (1 + q t)`.
pub fn validate_purity(table: &BettiTable, a: &GradedSequence, horizon: usize) -> Result<PurityReport> {
    table.validate()?;
    let needed = table.rows.iter().map(|r| r.twist.max(0) as usize + 1).max().unwrap_or(1);
    if horizon < needed {
        return Err(Error::HorizonTooSmall { horizon, needed });
    }
    if table.rows.iter().any(|r| r.twist < 0) {
        return Err(Error::InvalidParameter("twists must be nonnegative".into()));
    }
    let head_end = table.tail.as_ref().map_or(usize::MAX, |t| t.start);
    let mut head = Vec::new();
    for r in table.rows.iter().filter(|r| r.index < head_end) {
        let mut mono = vec![BigInt::zero(); r.twist as usize + 1];
        mono[r.twist as usize] = if r.index % 2 == 0 { r.rank.clone() } else { -r.rank.clone() };
        head = poly::add(&head, &mono);
    }
    let hs_a = a.hilbert_series();
    let mut den = hs_a.denominator_factors().clone();
    let numerator = match &table.tail {
        None => head,
        Some(t) => {
            let twist = table.rows.iter().find(|r| r.index == t.start).expect("validated").twist as usize;
            let mut mono = vec![BigInt::zero(); twist + 1];
            mono[twist] = if t.start % 2 == 0 { t.rank.clone() } else { -t.rank.clone() };
            *den.entry(-t.ratio.clone()).or_default() += 1;
            poly::add(&poly::mul(&head, &[BigInt::one(), t.ratio.clone()]), &mono)
        }
    };
    let hs_m = RationalSeries::new(poly::mul(&numerator, hs_a.numerator()), den);
    Ok(match hs_m.as_polynomial() {
        Some(p) => PurityReport {
            polynomial: true,
            nonnegative: p.iter().all(|c| !c.is_negative()),
            dimension: Some(p.iter().sum()),
            coefficients: p,
        },
        None => {
            let c = hs_m.coefficients(horizon);
            PurityReport { polynomial: false, nonnegative: c.iter().all(|x| !x.is_negative()), coefficients: c, dimension: None }
        }
    })
}

/// The two distinguished Betti vectors for a degree sequence of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkSolution {
    /// `f = Σ_{i<n} (-1)^i β_i (t^{d_i} + t^{d_i+1})`: classical
    /// Herzog–Kühl in `n - 1` variables.
    pub finite: Vec<BigInt>,
    /// The last term replaced by `(-1)^{n-1} β_{n-1} t^{d_{n-1}}`: a linear
    /// tail of constant rank `β_{n-1}`.
    pub infinite: Vec<BigInt>,
}

/// Taylor coefficients of `p` at `t = 1` of orders `0..count`, by repeated
/// synthetic division by `t - 1`.
fn taylor_at_one(p: &[BigInt], count: usize) -> Vec<BigInt> {
    let mut p = p.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        // quotient and remainder of p / (t - 1), high to low
        let mut q = vec![BigInt::zero(); p.len().saturating_sub(1)];
        let mut carry = BigInt::zero();
        for k in (0..p.len()).rev() {
            carry += &p[k];
            if k > 0 {
                q[k - 1] = carry.clone();
            }
        }
        out.push(carry);
        p = q;
    }
    out
}

fn hk_branch(d: &[i64], infinite: bool) -> Result<Vec<BigInt>> {
    let n = d.len();
    let columns: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let k = d[i] as usize;
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let mut p = vec![BigInt::zero(); k + 2];
            p[k] = sign.clone();
            if !(infinite && i == n - 1) {
                p[k + 1] = sign;
            }
            taylor_at_one(&p, n - 1)
        })
        .collect();
    let matrix: Vec<Vec<BigInt>> = (0..n - 1).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let basis = nullspace(&matrix, n);
    if basis.len() != 1 {
        return Err(Error::Singular);
    }
    Ok(primitive_integer_vector(&basis[0]))
}

/// Solves `f(1) = f'(1) = ... = f^{(n-2)}(1) = 0` for both branches.
pub fn hk_solve(d: &[i64]) -> Result<HkSolution> {
    if d.first() != Some(&0) || d.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(format!("{d:?} must start at 0 and strictly increase")));
    }
    Ok(HkSolution { finite: hk_branch(d, false)?, infinite: hk_branch(d, true)? })
}

/// Pure resolution over the coordinate ring of the degree `d` rational normal
/// curve, `dim V = 2`, with shifts `e = (e_1, e_2, e_3)`.
///
/// Ranks are `dim S^A_{λ^{(i)}}` for `A = S^{(d)}`. Finite when `e_3 > 1`,
/// otherwise with a linear tail from index 2 on, labelled `D · (d^i)`, whose
/// ranks grow by the factor `d - 1` (the tail vanishes for `d = 1`).
pub fn rnc_pure_resolution(d: usize, e: &Composition, tail_terms: usize) -> Result<BettiTable> {
    if e.len() != 3 {
        return Err(Error::LengthMismatch { expected: 3, found: e.len() });
    }
    if d == 0 {
        return Err(Error::InvalidParameter("the Veronese degree must be positive".into()));
    }
    let a = GradedSequence::polynomial(2)?.veronese(d)?;
    let seq = DegreeSequence::new(e.clone());
    let infinite = seq.shift(3) == 1 && d > 1;
    let count = if infinite { 3 + tail_terms.max(1) } else { 3 + usize::from(seq.shift(3) == 1) };
    let (e1, e2) = (e.parts()[0], e.parts()[1]);
    let big_d = SkewShape::new(Partition::new(vec![d * e1 + d * e2 - 1, d * e2])?, Partition::row(d - 1))?;
    let mut rows = Vec::with_capacity(count);
    for (i, l) in efw_partitions(e, count)?.into_iter().enumerate() {
        let shape = SkewShape::straight(l.clone());
        let rank = int_of(a.schur(&shape)?);
        let label = if !infinite {
            Label::Skew(veronese_shape(&shape, d, l.len())?)
        } else {
            match i {
                0 => Label::Partition(Partition::row(d * (e2 - 1))),
                1 => Label::Partition(Partition::row(d * (e1 + e2 - 1))),
                2 => Label::Skew(big_d.clone()),
                _ => Label::Skew(attach_dot(&big_d, &Composition::new(vec![d; i - 2])?)?),
            }
        };
        if !rank.is_zero() {
            rows.push(BettiRow { index: i, twist: seq.twist(i), rank, label: Some(label) });
        }
    }
    let tail = infinite.then(|| Tail { start: 2, rank: rows[2].rank.clone(), ratio: BigInt::from(d - 1) });
    rows.truncate(3 + if infinite { tail_terms } else { 0 });
    let table = BettiTable { rows, tail };
    assert!(table.validate().is_ok(), "rational normal curve resolutions have positive ranks and a constant tail");
    Ok(table)
}
