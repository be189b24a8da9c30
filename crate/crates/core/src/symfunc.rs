//! The character ring of `GL × ... × GL` in the Schur basis.
//!
//! A [`SchurClass`] is a finite integer combination of `k`-tuples of
//! partitions; the product is the componentwise Littlewood–Richardson
//! product. Littlewood–Richardson coefficients are computed by enumerating
//! lattice-word fillings and memoized in a process-wide write-once table.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use spin::Mutex;

use crate::shapes::{Partition, SkewShape};
use crate::{Error, Result};

type LrKey = (Partition, Partition, Partition);
type ProductKey = (Partition, Partition);

static LR_CACHE: Mutex<BTreeMap<LrKey, u64>> = Mutex::new(BTreeMap::new());
static PRODUCT_CACHE: Mutex<BTreeMap<ProductKey, Vec<(Partition, u64)>>> = Mutex::new(BTreeMap::new());

/// The Littlewood–Richardson coefficient `c^λ_{μν}`.
///
/// Counts semistandard fillings of `λ/μ` with content `ν` whose reverse
/// reading word (rows top to bottom, each row right to left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = LR_CACHE.lock().get(&key) {
        return c;
    }
    let c = count_lr_fillings(lambda, mu, nu);
    // concurrent fills compute the same value, so the last write is harmless
    LR_CACHE.lock().insert(key, c);
    c
}

fn count_lr_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    struct Filler<'a> {
        lambda: &'a Partition,
        mu: &'a Partition,
        nu: &'a [usize],
        cells: Vec<(usize, usize)>,
        table: Vec<Vec<usize>>,
        counts: Vec<usize>,
    }

    impl Filler<'_> {
        fn run(&mut self, k: usize) -> u64 {
            if k == self.cells.len() {
                return 1;
            }
            let (r, c) = self.cells[k];
            let mut hi = self.nu.len();
            if c + 1 < self.lambda.get(r) {
                hi = hi.min(self.table[r][c + 1]);
            }
            let mut lo = 1;
            if r > 0 && c >= self.mu.get(r - 1) {
                lo = self.table[r - 1][c] + 1;
            }
            let mut total = 0;
            for v in lo..=hi {
                if self.counts[v - 1] == self.nu[v - 1] {
                    continue;
                }
                if v > 1 && self.counts[v - 2] <= self.counts[v - 1] {
                    continue;
                }
                self.counts[v - 1] += 1;
                self.table[r][c] = v;
                total += self.run(k + 1);
                self.counts[v - 1] -= 1;
            }
            self.table[r][c] = 0;
            total
        }
    }

    let mut cells = Vec::with_capacity(lambda.size() - mu.size());
    for r in 0..lambda.len() {
        for c in (mu.get(r)..lambda.get(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filler = Filler {
        lambda,
        mu,
        nu: nu.parts(),
        cells,
        table: (0..lambda.len()).map(|r| vec![0; lambda.get(r)]).collect(),
        counts: vec![0; nu.len()],
    };
    filler.run(0)
}

/// Partitions `λ ⊇ μ` of size `|μ| + |ν|` that can carry a nonzero `c^λ_{μν}`.
fn product_candidates(mu: &Partition, nu: &Partition) -> Vec<Partition> {
    fn rec(
        i: usize,
        rows: usize,
        rest: usize,
        cap: usize,
        mu: &Partition,
        nu: &Partition,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let lo = mu.get(i).max(nu.get(i));
        let hi = cap.min(mu.get(i) + nu.get(0));
        if lo > hi {
            return;
        }
        for v in lo..=hi {
            let extra = v - mu.get(i);
            if extra > rest {
                break;
            }
            cur.push(v);
            rec(i + 1, rows, rest - extra, v, mu, nu, cur, out);
            cur.pop();
        }
    }
    let rows = mu.len() + nu.len();
    let mut out = Vec::new();
    rec(0, rows, nu.size(), usize::MAX, mu, nu, &mut Vec::new(), &mut out);
    out
}

/// The expansion `s_μ · s_ν = Σ_λ c^λ_{μν} s_λ`, sorted by `λ`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Vec<(Partition, u64)> {
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (a.clone(), b.clone());
    if let Some(v) = PRODUCT_CACHE.lock().get(&key) {
        return v.clone();
    }
    let mut out: Vec<(Partition, u64)> = product_candidates(a, b)
        .into_iter()
        .filter_map(|l| {
            let c = lr_coefficient(&l, a, b);
            (c > 0).then_some((l, c))
        })
        .collect();
    out.sort();
    PRODUCT_CACHE.lock().insert(key, out.clone());
    out
}

/// A finite integer combination of `k`-tuples of partitions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SchurClass {
    factors: usize,
    terms: BTreeMap<Vec<Partition>, BigInt>,
}

impl SchurClass {
    pub fn zero(factors: usize) -> Self {
        Self { factors, terms: BTreeMap::new() }
    }

    pub fn one(factors: usize) -> Self {
        Self::monomial(vec![Partition::empty(); factors], BigInt::one())
    }

    /// `coeff · s_{λ¹} ⊗ ... ⊗ s_{λᵏ}`.
    pub fn monomial(parts: Vec<Partition>, coeff: BigInt) -> Self {
        let mut c = Self::zero(parts.len());
        c.add_term(parts, coeff);
        c
    }

    /// The single-factor class `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        Self::monomial(vec![lambda], BigInt::one())
    }

    pub fn factor_count(&self) -> usize {
        self.factors
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a basis tuple (zero if absent).
    pub fn coeff(&self, parts: &[Partition]) -> BigInt {
        self.terms.get(parts).cloned().unwrap_or_default()
    }

    /// `true` if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Smallest basis tuple carrying a negative coefficient.
    pub fn first_negative(&self) -> Option<(&Vec<Partition>, &BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    pub fn add_term(&mut self, parts: Vec<Partition>, coeff: BigInt) {
        assert_eq!(parts.len(), self.factors, "factor count of a term");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(parts);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_factors(&self, other: &SchurClass) -> Result<()> {
        if self.factors != other.factors {
            return Err(Error::FactorCountMismatch { left: self.factors, right: other.factors });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SchurClass) -> Result<SchurClass> {
        self.check_factors(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SchurClass) -> Result<SchurClass> {
        self.check_factors(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SchurClass {
        SchurClass {
            factors: self.factors,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }

    pub fn scale(&self, by: &BigInt) -> SchurClass {
        let mut out = SchurClass::zero(self.factors);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * by);
        }
        out
    }

    /// Product in the character ring (componentwise Littlewood–Richardson).
    pub fn multiply(&self, other: &SchurClass) -> Result<SchurClass> {
        self.check_factors(other)?;
        let mut out = SchurClass::zero(self.factors);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let coeff = va * vb;
                // expand factor by factor
                let mut partial: Vec<(Vec<Partition>, u64)> = vec![(Vec::with_capacity(self.factors), 1)];
                for (a, b) in ka.iter().zip(kb) {
                    let prod = lr_product(a, b);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (tuple, c) in &partial {
                        for (l, d) in &prod {
                            let mut t = tuple.clone();
                            t.push(l.clone());
                            next.push((t, c * d));
                        }
                    }
                    partial = next;
                }
                for (tuple, c) in partial {
                    out.add_term(tuple, &coeff * BigInt::from(c));
                }
            }
        }
        Ok(out)
    }

    /// The external product `a ⊠ b`, a class on `k_a + k_b` factors.
    pub fn outer(&self, other: &SchurClass) -> SchurClass {
        let mut out = SchurClass::zero(self.factors + other.factors);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut t = ka.clone();
                t.extend(kb.iter().cloned());
                out.add_term(t, va * vb);
            }
        }
        out
    }

    /// Evaluates the class through a per-factor map `(factor, λ) ↦ integer`.
    /// With a ring homomorphism per factor (e.g. a dimension) this is a ring
    /// homomorphism of classes.
    pub fn evaluate(&self, mut eval: impl FnMut(usize, &Partition) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (k, v) in &self.terms {
            let mut term = v.clone();
            for (i, p) in k.iter().enumerate() {
                term *= eval(i, p);
            }
            total += term;
        }
        total
    }
}

impl fmt::Display for SchurClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            let negative = v.is_negative();
            if i > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let mag = v.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (j, p) in k.iter().enumerate() {
                if j > 0 {
                    f.write_str("⊗")?;
                }
                write!(f, "s{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurClass[{}]({self})", self.factors)
    }
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν` as a single-factor class.
pub fn skew_to_straight(s: &SkewShape) -> SchurClass {
    let mut out = SchurClass::zero(1);
    let (lambda, mu) = (s.outer(), s.inner());
    if mu.is_empty() {
        return SchurClass::schur(lambda.clone());
    }
    let n = s.size();
    for nu in Partition::bounded(n, lambda.len(), lambda.get(0)) {
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.add_term(vec![nu], BigInt::from(c));
        }
    }
    out
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=m`,
/// by the hook-content formula.
pub fn dim_gl(lambda: &Partition, m: usize) -> BigInt {
    if lambda.len() > m {
        return BigInt::zero();
    }
    let conj = lambda.transpose();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..lambda.len() {
        for j in 0..lambda.get(i) {
            num *= BigInt::from(m + j - i);
            let hook = (lambda.get(i) - j) + (conj.get(j) - i) - 1;
            den *= BigInt::from(hook);
        }
    }
    num / den
}

/// Number of semistandard tableaux of the skew shape with entries in `1..=m`.
pub fn dim_gl_skew(s: &SkewShape, m: usize) -> BigInt {
    skew_to_straight(s).evaluate(|_, p| dim_gl(p, m))
}

/// All `α` with `from ⊆ α ⊆ bound` such that `α/from` is a horizontal
/// (`vertical == false`) or vertical strip.
pub(crate) fn strips(from: &[usize], bound: &[usize], vertical: bool) -> Vec<Vec<usize>> {
    fn rec(
        i: usize,
        from: &[usize],
        bound: &[usize],
        vertical: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == from.len() {
            out.push(cur.clone());
            return;
        }
        let mut hi = bound[i];
        if i > 0 {
            hi = hi.min(cur[i - 1]);
            if !vertical {
                hi = hi.min(from[i - 1]);
            }
        }
        if vertical {
            hi = hi.min(from[i] + 1);
        }
        for v in from[i]..=hi {
            cur.push(v);
            rec(i + 1, from, bound, vertical, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, from, bound, vertical, &mut Vec::new(), &mut out);
    out
}

/// Number of `(r|s)` hook tableaux of the skew shape: `r` even letters
/// (rows weak, columns strict) followed by `s` odd letters (rows strict,
/// columns weak).
///
/// Counted letter by letter: the boxes holding letters `≤ k` form a chain of
/// shapes where each even letter adds a horizontal strip and each odd letter a
/// vertical strip.
pub fn dim_super_skew(shape: &SkewShape, even: usize, odd: usize) -> BigInt {
    let rows = shape.outer().len();
    let bound = shape.outer().padded(rows);
    let mut layer: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    layer.insert(shape.inner().padded(rows), BigInt::one());
    for letter in 0..even + odd {
        let vertical = letter >= even;
        let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (alpha, count) in &layer {
            for beta in strips(alpha, &bound, vertical) {
                *next.entry(beta).or_default() += count;
            }
        }
        layer = next;
    }
    layer.remove(&bound).unwrap_or_default()
}

/// Dimension of `S_λ(C^{r|s})`; zero exactly when `λ_{r+1} > s`.
pub fn dim_super(lambda: &Partition, even: usize, odd: usize) -> BigInt {
    dim_super_skew(&SkewShape::straight(lambda.clone()), even, odd)
}
