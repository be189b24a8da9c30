//! Graded sequences `([A_0], [A_1], ...)`, their Jacobi–Trudi minors and
//! total-positivity scans.
//!
//! A sequence is valued either in the integers (graded dimensions) or in the
//! stable character ring ([`SchurClass`]). Entries of the lower-triangular
//! Toeplitz matrix are `T_{ij} = [A_{i-j}]`, and the Jacobi–Trudi minor of a
//! skew shape is
//!
//! ```text
//! s^A_{λ/μ} = det([A_{λ_i - μ_j - i + j}])_{i,j ≤ r}
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow, Signed, Zero};
use spin::Mutex;

use crate::linalg::{bareiss_det, laplace_det, Ring};
use crate::series::{dim_sym, RationalSeries};
use crate::shapes::{Composition, Partition, SkewShape};
use crate::symfunc::{dim_gl, dim_super, SchurClass};
use crate::{Error, Result};

/// Largest determinant expanded over classes.
pub const MAX_CLASS_ORDER: usize = 8;

/// Whether a sequence carries dimensions or classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Dim,
    Class,
}

/// How one tensor factor of a class is turned into a dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// `S_λ(C^m)`.
    Gl(usize),
    /// `S_λ(C^{r|s})`.
    Super(usize, usize),
}

impl Factor {
    pub fn dim(&self, lambda: &Partition) -> BigInt {
        match *self {
            Factor::Gl(m) => dim_gl(lambda, m),
            Factor::Super(r, s) => dim_super(lambda, r, s),
        }
    }
}

/// An entry of a sequence or of one of its minors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Int(BigInt),
    Class(SchurClass),
}

impl Value {
    /// `true` if the integer is negative or some Schur coefficient is.
    pub fn has_negative(&self) -> bool {
        match self {
            Value::Int(v) => v.is_negative(),
            Value::Class(c) => !c.is_nonnegative(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.vanishes()
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Value::Int(v) => Some(v),
            Value::Class(_) => None,
        }
    }

    pub fn as_class(&self) -> Option<&SchurClass> {
        match self {
            Value::Class(c) => Some(c),
            Value::Int(_) => None,
        }
    }

    /// The dimension, evaluating classes factor by factor.
    pub fn dimension(&self, factors: &[Factor]) -> BigInt {
        match self {
            Value::Int(v) => v.clone(),
            Value::Class(c) => c.evaluate(|i, p| factors[i].dim(p)),
        }
    }
}

impl Ring for Value {
    fn zero_like(&self) -> Self {
        match self {
            Value::Int(_) => Value::Int(BigInt::zero()),
            Value::Class(c) => Value::Class(c.zero_like()),
        }
    }
    fn one_like(&self) -> Self {
        match self {
            Value::Int(_) => Value::Int(BigInt::one()),
            Value::Class(c) => Value::Class(c.one_like()),
        }
    }
    fn vanishes(&self) -> bool {
        match self {
            Value::Int(v) => v.is_zero(),
            Value::Class(c) => c.is_zero(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Class(a), Value::Class(b)) => Value::Class(Ring::add(a, b)),
            _ => panic!("mixed integer and class values"),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a - b),
            (Value::Class(a), Value::Class(b)) => Value::Class(Ring::sub(a, b)),
            _ => panic!("mixed integer and class values"),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Class(a), Value::Class(b)) => Value::Class(Ring::mul(a, b)),
            _ => panic!("mixed integer and class values"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Class(c) => write!(f, "{c}"),
        }
    }
}

/// The basic graded rings and sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Leaf {
    /// `S(V)`, `dim V = m`.
    Polynomial { m: usize },
    /// `S(C^{r|s})`: `r` even and `s` odd variables.
    Super { r: usize, s: usize },
    /// `S(V)/(q)` for a nonzero quadratic form.
    Quadric { m: usize },
    /// The Koszul dual of the quadric ring, `Λ^d V ⊕ Λ^{d-2} V ⊕ ...`.
    QuadricDual { m: usize },
    /// `T(V)`, `A_d = V^{⊗d}`.
    TensorAlgebra { m: usize },
    /// `S^d U ⊕ S^{d-2} U ⊕ ...`, `dim U = u`.
    Heisenberg { u: usize },
    /// `(d+1)^2`, dimension only.
    Squares,
    /// An explicit finite list, zero past its end; dimension only.
    Explicit(Vec<BigInt>),
}

#[derive(Debug)]
enum Kind {
    Leaf(Leaf),
    Veronese { d: usize, base: GradedSequence },
    Tensor(GradedSequence, GradedSequence),
    Segre(GradedSequence, GradedSequence),
}

type MinorKey = (Partition, Partition, usize);

struct Inner {
    kind: Kind,
    level: Level,
    factors: Vec<Factor>,
    terms: Mutex<BTreeMap<usize, Value>>,
    minors: Mutex<BTreeMap<MinorKey, Value>>,
}

impl fmt::Debug for Inner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedSequence").field("kind", &self.kind).field("level", &self.level).finish()
    }
}

/// A graded sequence with `A_0` the unit and `A_d = 0` for `d < 0`.
///
/// Cloning is cheap; clones share the term and minor caches.
#[derive(Clone, Debug)]
pub struct GradedSequence(Arc<Inner>);

fn leaf_factors(leaf: &Leaf) -> Option<Vec<Factor>> {
    Some(vec![match *leaf {
        Leaf::Polynomial { m } | Leaf::Quadric { m } | Leaf::QuadricDual { m } | Leaf::TensorAlgebra { m } => {
            Factor::Gl(m)
        }
        Leaf::Heisenberg { u } => Factor::Gl(u),
        Leaf::Super { r, s } => Factor::Super(r, s),
        Leaf::Squares | Leaf::Explicit(_) => return None,
    }])
}

impl GradedSequence {
    fn build(kind: Kind, level: Level, factors: Vec<Factor>) -> Self {
        Self(Arc::new(Inner {
            kind,
            level,
            factors,
            terms: Mutex::new(BTreeMap::new()),
            minors: Mutex::new(BTreeMap::new()),
        }))
    }

    /// A basic sequence at the requested level.
    pub fn leaf(leaf: Leaf, level: Level) -> Result<Self> {
        match &leaf {
            Leaf::Polynomial { m } | Leaf::Quadric { m } | Leaf::QuadricDual { m } | Leaf::TensorAlgebra { m } => {
                if *m == 0 {
                    return Err(Error::InvalidParameter("the vector space dimension must be positive".into()));
                }
            }
            Leaf::Heisenberg { u } => {
                if *u == 0 {
                    return Err(Error::InvalidParameter("dim U must be positive".into()));
                }
            }
            Leaf::Super { r, s } => {
                if r + s == 0 {
                    return Err(Error::InvalidParameter("a super space needs r + s > 0".into()));
                }
            }
            Leaf::Explicit(v) => {
                if v.first().is_none_or(|x| !x.is_one()) {
                    return Err(Error::InvalidParameter("an explicit sequence must start with 1".into()));
                }
            }
            Leaf::Squares => {}
        }
        let factors = leaf_factors(&leaf);
        if level == Level::Class && factors.is_none() {
            return Err(Error::KindMismatch("this sequence has no class-valued form".into()));
        }
        let factors = if level == Level::Class { factors.unwrap_or_default() } else { Vec::new() };
        Ok(Self::build(Kind::Leaf(leaf), level, factors))
    }

    /// Dimension-valued polynomial ring in `m` variables.
    pub fn polynomial(m: usize) -> Result<Self> {
        Self::leaf(Leaf::Polynomial { m }, Level::Dim)
    }

    /// Dimension-valued quadric hypersurface ring with `dim V = m`.
    pub fn quadric(m: usize) -> Result<Self> {
        Self::leaf(Leaf::Quadric { m }, Level::Dim)
    }

    /// An explicit dimension sequence.
    pub fn explicit(values: &[i64]) -> Result<Self> {
        Self::leaf(Leaf::Explicit(values.iter().map(|&v| BigInt::from(v)).collect()), Level::Dim)
    }

    /// The `d`-th Veronese `(A_(d))_i = A_{di}`.
    pub fn veronese(&self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("the Veronese degree must be positive".into()));
        }
        Ok(Self::build(Kind::Veronese { d, base: self.clone() }, self.level(), self.0.factors.clone()))
    }

    /// `(A ⊗ B)_n = Σ_i A_i ⊗ B_{n-i}`; class sequences must be over the same group.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.level() != other.level() {
            return Err(Error::KindMismatch("cannot mix dimension and class sequences".into()));
        }
        if self.0.factors != other.0.factors {
            return Err(Error::KindMismatch("tensor factors must act through the same group".into()));
        }
        Ok(Self::build(Kind::Tensor(self.clone(), other.clone()), self.level(), self.0.factors.clone()))
    }

    /// The Segre (Hadamard) product `C_d = A_d ⊗ B_d` over the product group.
    pub fn segre(&self, other: &Self) -> Result<Self> {
        if self.level() != other.level() {
            return Err(Error::KindMismatch("cannot mix dimension and class sequences".into()));
        }
        let mut factors = self.0.factors.clone();
        factors.extend(other.0.factors.iter().copied());
        Ok(Self::build(Kind::Segre(self.clone(), other.clone()), self.level(), factors))
    }

    /// The same sequence at another level.
    pub fn at_level(&self, level: Level) -> Result<Self> {
        if level == self.level() {
            return Ok(self.clone());
        }
        match &self.0.kind {
            Kind::Leaf(l) => Self::leaf(l.clone(), level),
            Kind::Veronese { d, base } => base.at_level(level)?.veronese(*d),
            Kind::Tensor(a, b) => a.at_level(level)?.tensor(&b.at_level(level)?),
            Kind::Segre(a, b) => a.at_level(level)?.segre(&b.at_level(level)?),
        }
    }

    pub fn level(&self) -> Level {
        self.0.level
    }

    /// Per-factor dimension data of a class sequence (empty at dimension level).
    pub fn factors(&self) -> &[Factor] {
        &self.0.factors
    }

    /// `true` if both handles share one sequence object (and its caches).
    pub fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn zero(&self) -> Value {
        match self.level() {
            Level::Dim => Value::Int(BigInt::zero()),
            Level::Class => Value::Class(SchurClass::zero(self.0.factors.len())),
        }
    }

    pub fn one(&self) -> Value {
        match self.level() {
            Level::Dim => Value::Int(BigInt::one()),
            Level::Class => Value::Class(SchurClass::one(self.0.factors.len())),
        }
    }

    /// `[A_d]`, zero for negative `d`.
    pub fn term(&self, d: i64) -> Value {
        if d < 0 {
            return self.zero();
        }
        let d = d as usize;
        if let Some(v) = self.0.terms.lock().get(&d) {
            return v.clone();
        }
        let v = match self.level() {
            Level::Dim => Value::Int(self.compute_dim(d)),
            Level::Class => Value::Class(self.compute_class(d)),
        };
        self.0.terms.lock().entry(d).or_insert(v).clone()
    }

    /// `dim A_d` at either level.
    pub fn dim(&self, d: i64) -> BigInt {
        self.term(d).dimension(&self.0.factors)
    }

    fn compute_dim(&self, d: usize) -> BigInt {
        let di = d as i64;
        match &self.0.kind {
            Kind::Leaf(leaf) => match leaf {
                Leaf::Polynomial { m } => dim_sym(*m, d),
                Leaf::Super { r, s } => (0..=d.min(*s))
                    .map(|k| binomial(BigInt::from(*s), BigInt::from(k)) * dim_sym(*r, d - k))
                    .sum(),
                Leaf::Quadric { m } => dim_sym(*m, d) - if d >= 2 { dim_sym(*m, d - 2) } else { BigInt::zero() },
                Leaf::QuadricDual { m } => (0..=d / 2)
                    .filter(|k| d - 2 * k <= *m)
                    .map(|k| binomial(BigInt::from(*m), BigInt::from(d - 2 * k)))
                    .sum(),
                Leaf::TensorAlgebra { m } => Pow::pow(BigInt::from(*m), d),
                Leaf::Heisenberg { u } => (0..=d / 2).map(|k| dim_sym(*u, d - 2 * k)).sum(),
                Leaf::Squares => BigInt::from((d + 1) * (d + 1)),
                Leaf::Explicit(v) => v.get(d).cloned().unwrap_or_default(),
            },
            Kind::Veronese { d: k, base } => base.dim((k * d) as i64),
            Kind::Tensor(a, b) => (0..=di).map(|i| a.dim(i) * b.dim(di - i)).sum(),
            Kind::Segre(a, b) => a.dim(di) * b.dim(di),
        }
    }

    fn compute_class(&self, d: usize) -> SchurClass {
        let di = d as i64;
        let class_of = |v: Value| match v {
            Value::Class(c) => c,
            Value::Int(_) => unreachable!("class sequences only hold classes"),
        };
        match &self.0.kind {
            Kind::Leaf(leaf) => {
                let mut out = SchurClass::zero(1);
                match leaf {
                    Leaf::Polynomial { .. } | Leaf::Super { .. } => out.add_term(vec![Partition::row(d)], BigInt::one()),
                    Leaf::Quadric { .. } => {
                        out.add_term(vec![Partition::row(d)], BigInt::one());
                        if d >= 2 {
                            out.add_term(vec![Partition::row(d - 2)], -BigInt::one());
                        }
                    }
                    Leaf::QuadricDual { .. } => {
                        for k in 0..=d / 2 {
                            out.add_term(vec![Partition::column(d - 2 * k)], BigInt::one());
                        }
                    }
                    Leaf::Heisenberg { .. } => {
                        for k in 0..=d / 2 {
                            out.add_term(vec![Partition::row(d - 2 * k)], BigInt::one());
                        }
                    }
                    Leaf::TensorAlgebra { .. } => {
                        out = SchurClass::one(1);
                        let s1 = SchurClass::schur(Partition::row(1));
                        for _ in 0..d {
                            out = out.multiply(&s1).expect("single factor");
                        }
                    }
                    Leaf::Squares | Leaf::Explicit(_) => unreachable!("dimension-only leaves"),
                }
                out
            }
            Kind::Veronese { d: k, base } => class_of(base.term((k * d) as i64)),
            Kind::Tensor(a, b) => {
                let mut out = SchurClass::zero(self.0.factors.len());
                for i in 0..=di {
                    let p = class_of(a.term(i)).multiply(&class_of(b.term(di - i))).expect("same group");
                    out = Ring::add(&out, &p);
                }
                out
            }
            Kind::Segre(a, b) => class_of(a.term(di)).outer(&class_of(b.term(di))),
        }
    }

    /// The Hilbert series `Σ dim A_d t^d` as an exact rational function.
    pub fn hilbert_series(&self) -> RationalSeries {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let one = BigInt::one();
        match &self.0.kind {
            Kind::Leaf(leaf) => match leaf {
                Leaf::Polynomial { m } => RationalSeries::over_one_minus_t(vec![one], *m as u32),
                Leaf::Super { r, s } => RationalSeries::over_one_minus_t(binomial_row(*s), *r as u32),
                Leaf::Quadric { m } => RationalSeries::over_one_minus_t(ints(&[1, 1]), (*m - 1) as u32),
                Leaf::QuadricDual { m } => RationalSeries::over_one_minus_t(binomial_row(*m - 1), 1),
                Leaf::TensorAlgebra { m } => RationalSeries::new(vec![one], BTreeMap::from([(BigInt::from(*m), 1)])),
                Leaf::Heisenberg { u } => RationalSeries::new(
                    vec![one.clone()],
                    BTreeMap::from([(one, *u as u32 + 1), (BigInt::from(-1), 1)]),
                ),
                Leaf::Squares => RationalSeries::over_one_minus_t(ints(&[1, 1]), 3),
                Leaf::Explicit(v) => RationalSeries::polynomial(v.clone()),
            },
            Kind::Veronese { d, base } => base.hilbert_series().veronese(*d),
            Kind::Tensor(a, b) => a.hilbert_series().mul(&b.hilbert_series()),
            Kind::Segre(a, b) => a.hilbert_series().hadamard(&b.hilbert_series()),
        }
    }

    /// The sequence in the command-line mini-grammar, e.g. `segre:poly:2,poly:2`.
    pub fn spec(&self) -> String {
        match &self.0.kind {
            Kind::Leaf(leaf) => match leaf {
                Leaf::Polynomial { m } => format!("poly:{m}"),
                Leaf::Super { r, s } => format!("super:{r},{s}"),
                Leaf::Quadric { m } => format!("quadric:{m}"),
                Leaf::QuadricDual { m } => format!("quadric-dual:{m}"),
                Leaf::TensorAlgebra { m } => format!("tensor-alg:{m}"),
                Leaf::Heisenberg { u } => format!("heisenberg:{u}"),
                Leaf::Squares => "squares".into(),
                Leaf::Explicit(v) => {
                    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
                    format!("list:{}", parts.join(","))
                }
            },
            Kind::Veronese { d, base } => format!("veronese:{d},{}", base.spec()),
            Kind::Tensor(a, b) => format!("tensor:{},{}", a.spec(), b.spec()),
            Kind::Segre(a, b) => format!("segre:{},{}", a.spec(), b.spec()),
        }
    }

    fn determinant(&self, matrix: Vec<Vec<Value>>) -> Value {
        match self.level() {
            Level::Dim => {
                let ints: Vec<Vec<BigInt>> = matrix
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| v.as_int().cloned().expect("dimension level")).collect())
                    .collect();
                Value::Int(bareiss_det(&ints))
            }
            Level::Class => laplace_det(&matrix, &self.zero()),
        }
    }

    fn check_order(&self, r: usize) -> Result<()> {
        if self.level() == Level::Class && r > MAX_CLASS_ORDER {
            return Err(Error::ExpansionTooLarge { r, max: MAX_CLASS_ORDER });
        }
        Ok(())
    }

    /// `det([A_{λ_i - μ_j - i + j}])_{i,j ≤ r}` for arbitrary partitions.
    pub fn jt_determinant(&self, lambda: &Partition, mu: &Partition, r: usize) -> Result<Value> {
        let needed = lambda.len().max(mu.len());
        if r < needed {
            return Err(Error::PaddingTooSmall { r, needed });
        }
        self.check_order(r)?;
        let key = (lambda.clone(), mu.clone(), r);
        if let Some(v) = self.0.minors.lock().get(&key) {
            return Ok(v.clone());
        }
        let (l, m) = (lambda.padded(r), mu.padded(r));
        let matrix = (0..r)
            .map(|i| (0..r).map(|j| self.term(l[i] as i64 - m[j] as i64 - i as i64 + j as i64)).collect())
            .collect();
        let v = self.determinant(matrix);
        Ok(self.0.minors.lock().entry(key).or_insert(v).clone())
    }

    /// The Jacobi–Trudi minor `s^A_{λ/μ}` computed with `r × r` padding.
    pub fn jt_minor(&self, s: &SkewShape, r: usize) -> Result<Value> {
        self.jt_determinant(s.outer(), s.inner(), r)
    }

    /// `s^A_{λ/μ}` with the smallest padding.
    pub fn schur(&self, s: &SkewShape) -> Result<Value> {
        self.jt_minor(s, s.outer().len())
    }

    /// The minor of the Toeplitz matrix on index sets `rows` and `cols`
    /// (1-based, strictly increasing), entries `A_{cols_b - rows_a}`.
    pub fn minor_from_indices(&self, rows: &[usize], cols: &[usize]) -> Result<Value> {
        index_to_shapes(rows, cols)?;
        self.check_order(rows.len())?;
        let matrix = rows
            .iter()
            .map(|&j| cols.iter().map(|&i| self.term(i as i64 - j as i64)).collect())
            .collect();
        Ok(self.determinant(matrix))
    }

    /// `ψ(e_d) = Σ_α (-1)^{d-ℓ(α)} [A_{α_1}] ⋯ [A_{α_ℓ}]` over compositions of `d`.
    pub fn e_class(&self, d: i64) -> Value {
        if d < 0 {
            return self.zero();
        }
        let mut total = self.zero();
        for c in Composition::all_of(d as usize) {
            let mut term = self.one();
            for &p in c.parts() {
                term = Ring::mul(&term, &self.term(p as i64));
            }
            total = if (d as usize - c.len()).is_multiple_of(2) { Ring::add(&total, &term) } else { Ring::sub(&total, &term) };
        }
        total
    }

    /// `det(ψ(e_{λ^T_i - μ^T_j - i + j}))_{i,j ≤ n}`, which needs `n ≥ λ_1`.
    pub fn jt_minor_dual(&self, s: &SkewShape, n: usize) -> Result<Value> {
        let needed = s.outer().get(0);
        if n < needed {
            return Err(Error::PaddingTooSmall { r: n, needed });
        }
        self.check_order(n)?;
        let t = s.transpose();
        let (l, m) = (t.outer().padded(n), t.inner().padded(n));
        let mut cache: BTreeMap<i64, Value> = BTreeMap::new();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let k = l[i] as i64 - m[j] as i64 - i as i64 + j as i64;
                        cache.entry(k).or_insert_with(|| self.e_class(k)).clone()
                    })
                    .collect()
            })
            .collect();
        Ok(self.determinant(matrix))
    }
}

/// Coefficients of `(1 + t)^n`.
fn binomial_row(n: usize) -> Vec<BigInt> {
    (0..=n).map(|k| binomial(BigInt::from(n), BigInt::from(k))).collect()
}

/// `(λ, μ)` with `λ = (i_r - r, ..., i_1 - 1)` from `cols` and `μ` likewise from `rows`.
pub fn index_to_shapes(rows: &[usize], cols: &[usize]) -> Result<(Partition, Partition)> {
    if rows.len() != cols.len() {
        return Err(Error::MalformedIndices(format!("{} rows but {} columns", rows.len(), cols.len())));
    }
    let to_partition = |v: &[usize]| -> Result<Partition> {
        if v.first() == Some(&0) || v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedIndices(format!("{v:?} is not strictly increasing and positive")));
        }
        Partition::new(v.iter().enumerate().rev().map(|(k, &i)| i - k - 1).collect())
    };
    Ok((to_partition(cols)?, to_partition(rows)?))
}

/// Outcome of a total-positivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    PositiveUpToBounds,
    Negative,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PositiveUpToBounds => "positive-up-to-bounds",
            Verdict::Negative => "negative",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lambda: Partition,
    pub mu: Partition,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfReport {
    pub verdict: Verdict,
    pub order: usize,
    pub window: usize,
    pub witness: Option<Witness>,
}

/// Scans Jacobi–Trudi minors for a negative value.
///
/// Straight shapes `λ` with at most `max_order` rows and `λ_1 ≤ window` are
/// visited by size, then lexicographically; with `skew` every `μ ⊆ λ` is also
/// tried (by size, then lexicographically). The first negative minor is the
/// witness.
pub fn pf_check(a: &GradedSequence, max_order: usize, window: usize, skew: bool) -> Result<PfReport> {
    if max_order == 0 || window == 0 {
        return Err(Error::InvalidParameter("pf-check bounds must be positive".into()));
    }
    a.check_order(max_order)?;
    for n in 0..=max_order * window {
        for lambda in Partition::bounded(n, max_order, window) {
            let inners = if skew { lambda.subpartitions() } else { vec![Partition::empty()] };
            for mu in inners {
                if skew && mu == lambda {
                    continue;
                }
                let s = SkewShape::new(lambda.clone(), mu.clone())?;
                let value = a.schur(&s)?;
                if value.has_negative() {
                    return Ok(PfReport {
                        verdict: Verdict::Negative,
                        order: max_order,
                        window,
                        witness: Some(Witness { lambda, mu, value }),
                    });
                }
            }
        }
    }
    Ok(PfReport { verdict: Verdict::PositiveUpToBounds, order: max_order, window, witness: None })
}

/// The Veronese translation `α_i = dλ_i + (d-1)(r-i)`, `β_j = dμ_j + (d-1)(r-j)`.
pub fn veronese_shape(s: &SkewShape, d: usize, r: usize) -> Result<SkewShape> {
    let shift = |p: &Partition| -> Result<Partition> {
        Partition::new((0..r).map(|i| d * p.get(i) + (d - 1) * (r - 1 - i)).collect())
    };
    SkewShape::new(shift(s.outer())?, shift(s.inner())?)
}

/// `s^{A_(d)}_{λ/μ} = s^A_{α/β}` with both sides padded to `r`.
pub fn veronese_identity_check(a: &GradedSequence, d: usize, s: &SkewShape, r: usize) -> Result<bool> {
    let left = a.veronese(d)?.jt_minor(s, r)?;
    let right = a.jt_minor(&veronese_shape(s, d, r)?, r)?;
    Ok(left == right)
}

/// `s^{A⊗B}_{λ/μ} = Σ_{μ ⊆ ν ⊆ λ} s^A_{λ/ν} · s^B_{ν/μ}`.
pub fn tensor_identity_check(a: &GradedSequence, b: &GradedSequence, s: &SkewShape) -> Result<bool> {
    let ab = a.tensor(b)?;
    let r = s.outer().len();
    let left = ab.jt_minor(s, r)?;
    let mut right = ab.zero();
    for nu in s.outer().subpartitions().into_iter().filter(|nu| nu.contains(s.inner())) {
        let x = a.jt_minor(&SkewShape::new(s.outer().clone(), nu.clone())?, r)?;
        let y = b.jt_minor(&SkewShape::new(nu, s.inner().clone())?, r)?;
        right = Ring::add(&right, &Ring::mul(&x, &y));
    }
    Ok(left == right)
}

/// `s^A_{λ/μ}` computed through the e-classes equals the direct minor.
pub fn transpose_duality_check(a: &GradedSequence, s: &SkewShape) -> Result<bool> {
    Ok(a.jt_minor_dual(s, s.outer().get(0))? == a.schur(s)?)
}

/// `s^A_λ · [A_d] = Σ s^A_μ` over horizontal strips `μ/λ` of size `d`.
pub fn pieri_identity_check(a: &GradedSequence, lambda: &Partition, d: usize) -> Result<bool> {
    let left = Ring::mul(&a.schur(&SkewShape::straight(lambda.clone()))?, &a.term(d as i64));
    let mut right = a.zero();
    for mu in lambda.horizontal_strip_extensions(d) {
        right = Ring::add(&right, &a.schur(&SkewShape::straight(mu))?);
    }
    Ok(left == right)
}

/// Finds `(r, s)` with `{λ : s^A_λ = 0} = {λ : λ_{r+1} > s}` on the box of
/// partitions with at most `r_max + 1` rows and `λ_1 ≤ s_max + 1`.
///
/// Returns `None` when the vanishing set is not an upward-closed set of that
/// form inside the box.
pub fn schur_dimension_profile(a: &GradedSequence, r_max: usize, s_max: usize) -> Result<Option<(usize, usize)>> {
    let (rows, cols) = (r_max + 1, s_max + 1);
    a.check_order(rows)?;
    let mut shapes = Vec::new();
    for n in 0..=rows * cols {
        shapes.extend(Partition::bounded(n, rows, cols));
    }
    let mut zero = BTreeMap::new();
    for l in &shapes {
        zero.insert(l.clone(), a.schur(&SkewShape::straight(l.clone()))?.is_zero());
    }
    for l in &shapes {
        if zero[l] && shapes.iter().any(|m| m.contains(l) && !zero[m]) {
            return Ok(None);
        }
    }
    for r in 0..=r_max {
        for s in 0..=s_max {
            if shapes.iter().all(|l| zero[l] == (l.get(r) > s)) {
                return Ok(Some((r, s)));
            }
        }
    }
    Ok(None)
}

/// `Σ_{ℓ(λ) ≤ n, |λ| = k} dim s^A_λ · dim S_λ(C^n)` equals the coefficient of
/// `t^k` in `HS_A(t)^n` for every `k ≤ degree`.
pub fn cauchy_identity_check(a: &GradedSequence, n: usize, degree: usize) -> Result<bool> {
    let a = a.at_level(Level::Dim)?;
    let base: Vec<BigInt> = (0..=degree as i64).map(|d| a.dim(d)).collect();
    let mut power = vec![BigInt::one()];
    for _ in 0..n {
        power = crate::series::poly::mul(&power, &base);
        power.truncate(degree + 1);
    }
    power.resize(degree + 1, BigInt::zero());
    for (k, expected) in power.iter().enumerate() {
        let mut total = BigInt::zero();
        for l in Partition::bounded(k, n, usize::MAX) {
            let v = a.schur(&SkewShape::straight(l.clone()))?;
            total += v.dimension(&[]) * dim_gl(&l, n);
        }
        if &total != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
