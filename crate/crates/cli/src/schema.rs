//! JSON shapes of every command output. See `docs/json-schema.md`.
//!
//! Integers are written as exact JSON numbers of any size.

use std::str::FromStr;

use num_bigint::BigInt;
use polya_core::quadric::OrthogonalDecomposition;
use polya_core::resolutions::{BettiRow, BettiTable, Label, Tail};
use polya_core::sequences::{PfReport, Value};
use polya_core::shapes::{Partition, SkewShape};
use polya_core::symfunc::SchurClass;
use polya_core::zelevinsky::ComplexLayout;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision integer written as a bare JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Big(pub BigInt);

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Big {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map(Big).map_err(serde::de::Error::custom)
    }
}

impl From<&BigInt> for Big {
    fn from(v: &BigInt) -> Self {
        Big(v.clone())
    }
}

pub fn partition(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewJson {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
}

impl From<&SkewShape> for SkewJson {
    fn from(s: &SkewShape) -> Self {
        SkewJson { outer: partition(s.outer()), inner: partition(s.inner()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub partitions: Vec<Vec<usize>>,
    pub coeff: Big,
}

pub fn schur_class(c: &SchurClass) -> Vec<SchurTerm> {
    c.terms()
        .iter()
        .map(|(parts, coeff)| SchurTerm { partitions: parts.iter().map(partition).collect(), coeff: coeff.into() })
        .collect()
}

/// An integer at the dimension level, a class otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Int(Big),
    Class(Vec<SchurTerm>),
}

impl From<&Value> for ValueJson {
    fn from(v: &Value) -> Self {
        match v {
            Value::Int(x) => ValueJson::Int(x.into()),
            Value::Class(c) => ValueJson::Class(schur_class(c)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub value: ValueJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfReportJson {
    pub verdict: String,
    pub order: usize,
    pub window: usize,
    pub witness: Option<WitnessJson>,
}

impl From<&PfReport> for PfReportJson {
    fn from(r: &PfReport) -> Self {
        PfReportJson {
            verdict: r.verdict.to_string(),
            order: r.order,
            window: r.window,
            witness: r.witness.as_ref().map(|w| WitnessJson {
                lambda: partition(&w.lambda),
                mu: partition(&w.mu),
                value: (&w.value).into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthoTerm {
    pub mu: Vec<usize>,
    pub mult: u64,
}

pub fn ortho(d: &OrthogonalDecomposition) -> Vec<OrthoTerm> {
    d.terms.iter().map(|(mu, mult)| OrthoTerm { mu: partition(mu), mult: *mult }).collect()
}

/// A Schur-functor label: a partition array or a skew-shape object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelJson {
    Partition(Vec<usize>),
    Skew(SkewJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRowJson {
    pub index: usize,
    pub twist: i64,
    pub rank: Big,
    #[serde(default)]
    pub label: Option<LabelJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailJson {
    pub start: usize,
    pub rank: Big,
    pub step: i64,
    pub ratio: Big,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTableJson {
    pub rows: Vec<BettiRowJson>,
    #[serde(default)]
    pub tail: Option<TailJson>,
}

impl From<&BettiTable> for BettiTableJson {
    fn from(t: &BettiTable) -> Self {
        BettiTableJson {
            rows: t
                .rows
                .iter()
                .map(|r| BettiRowJson {
                    index: r.index,
                    twist: r.twist,
                    rank: (&r.rank).into(),
                    label: r.label.as_ref().map(|l| match l {
                        Label::Partition(p) => LabelJson::Partition(partition(p)),
                        Label::Skew(s) => LabelJson::Skew(s.into()),
                    }),
                })
                .collect(),
            tail: t.tail.as_ref().map(|t| TailJson {
                start: t.start,
                rank: (&t.rank).into(),
                step: 1,
                ratio: (&t.ratio).into(),
            }),
        }
    }
}

impl BettiTableJson {
    /// Back to a table; labels that are not valid shapes are dropped.
    pub fn into_table(self) -> Result<BettiTable, String> {
        if let Some(t) = &self.tail {
            if t.step != 1 {
                return Err(format!("tail step must be 1, found {}", t.step));
            }
        }
        let label = |l: LabelJson| -> Option<Label> {
            match l {
                LabelJson::Partition(p) => Partition::new(p).ok().map(Label::Partition),
                LabelJson::Skew(s) => {
                    let (o, i) = (Partition::new(s.outer).ok()?, Partition::new(s.inner).ok()?);
                    SkewShape::new(o, i).ok().map(Label::Skew)
                }
            }
        };
        Ok(BettiTable {
            rows: self
                .rows
                .into_iter()
                .map(|r| BettiRow { index: r.index, twist: r.twist, rank: r.rank.0, label: r.label.and_then(label) })
                .collect(),
            tail: self.tail.map(|t| Tail { start: t.start, rank: t.rank.0, ratio: t.ratio.0 }),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub perm: Vec<usize>,
    pub weight: Vec<i64>,
    pub value: ValueJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutJson {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub degrees: Vec<DegreeJson>,
    pub euler_characteristic: ValueJson,
    pub minor: ValueJson,
}

impl LayoutJson {
    pub fn new(layout: &ComplexLayout, euler: &Value) -> Self {
        LayoutJson {
            n: layout.n,
            lambda: partition(&layout.lambda),
            mu: partition(&layout.mu),
            degrees: layout
                .degrees
                .iter()
                .enumerate()
                .map(|(degree, terms)| DegreeJson {
                    degree,
                    terms: terms
                        .iter()
                        .map(|t| TermJson {
                            perm: t.perm.one_line().to_vec(),
                            weight: t.weight.entries().to_vec(),
                            value: (&t.value).into(),
                        })
                        .collect(),
                })
                .collect(),
            euler_characteristic: euler.into(),
            minor: (&layout.target).into(),
        }
    }
}
