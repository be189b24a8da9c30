//! The sequence mini-grammar.
//!
//! ```text
//! spec  := leaf | comb | "(" spec ")"
//! leaf  := "poly:" m | "super:" r "," s | "quadric:" m | "quadric-dual:" m
//!        | "tensor-alg:" m | "heisenberg:" u | "squares" | "list:" int ("," int)*
//! comb  := ("segre" | "hadamard" | "tensor") ":" spec "," spec
//!        | "veronese:" d "," spec
//! ```
//!
//! `list` takes integers greedily, so a list can only be followed by a spec
//! that does not start with a digit.

use std::fmt;

use num_bigint::BigInt;
use polya_core::sequences::{GradedSequence, Leaf, Level};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    Leaf(Leaf),
    Veronese(usize, Box<SeqSpec>),
    Tensor(Box<SeqSpec>, Box<SeqSpec>),
    Segre(Box<SeqSpec>, Box<SeqSpec>),
}

impl SeqSpec {
    /// Builds the sequence with every leaf at `level`.
    pub fn build(&self, level: Level) -> polya_core::Result<GradedSequence> {
        match self {
            SeqSpec::Leaf(leaf) => GradedSequence::leaf(leaf.clone(), level),
            SeqSpec::Veronese(d, base) => base.build(level)?.veronese(*d),
            SeqSpec::Tensor(a, b) => a.build(level)?.tensor(&b.build(level)?),
            SeqSpec::Segre(a, b) => a.build(level)?.segre(&b.build(level)?),
        }
    }
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqSpec::Leaf(leaf) => {
                // the dimension level never fails on a parsed leaf
                let s = GradedSequence::leaf(leaf.clone(), Level::Dim).map_err(|_| fmt::Error)?;
                f.write_str(&s.spec())
            }
            SeqSpec::Veronese(d, base) => write!(f, "veronese:{d},{base}"),
            SeqSpec::Tensor(a, b) => write!(f, "tensor:{a},{b}"),
            SeqSpec::Segre(a, b) => write!(f, "segre:{a},{b}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn fail<T>(&self, what: &str) -> Result<T, String> {
        Err(format!("{what} at position {} in {:?}", self.pos, self.src))
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), String> {
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(&format!("expected {token:?}"))
        }
    }

    fn word(&mut self) -> &'a str {
        let rest = self.rest();
        let len = rest.find(|c: char| !(c.is_ascii_alphabetic() || c == '-')).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn int(&mut self) -> Result<i64, String> {
        let rest = self.rest();
        let digits = rest.strip_prefix('-').unwrap_or(rest);
        let len = digits.find(|c: char| !c.is_ascii_digit()).unwrap_or(digits.len());
        if len == 0 {
            return self.fail("expected an integer");
        }
        let len = len + (rest.len() - digits.len());
        let value = rest[..len].parse().map_err(|e| format!("{e} in {:?}", self.src))?;
        self.pos += len;
        Ok(value)
    }

    fn count(&mut self) -> Result<usize, String> {
        let v = self.int()?;
        usize::try_from(v).or_else(|_| self.fail("expected a nonnegative integer"))
    }

    fn next_is_int(&self) -> bool {
        let rest = self.rest().strip_prefix(',').unwrap_or("");
        rest.strip_prefix('-').unwrap_or(rest).starts_with(|c: char| c.is_ascii_digit())
    }

    fn spec(&mut self) -> Result<SeqSpec, String> {
        if self.eat("(") {
            let inner = self.spec()?;
            self.expect(")")?;
            return Ok(inner);
        }
        let start = self.pos;
        let name = self.word();
        let pair = |p: &mut Self| -> Result<(Box<SeqSpec>, Box<SeqSpec>), String> {
            p.expect(":")?;
            let a = p.spec()?;
            p.expect(",")?;
            Ok((Box::new(a), Box::new(p.spec()?)))
        };
        Ok(match name {
            "squares" => SeqSpec::Leaf(Leaf::Squares),
            "segre" | "hadamard" => {
                let (a, b) = pair(self)?;
                SeqSpec::Segre(a, b)
            }
            "tensor" => {
                let (a, b) = pair(self)?;
                SeqSpec::Tensor(a, b)
            }
            "veronese" => {
                self.expect(":")?;
                let d = self.count()?;
                self.expect(",")?;
                SeqSpec::Veronese(d, Box::new(self.spec()?))
            }
            "super" => {
                self.expect(":")?;
                let r = self.count()?;
                self.expect(",")?;
                SeqSpec::Leaf(Leaf::Super { r, s: self.count()? })
            }
            "list" => {
                self.expect(":")?;
                let mut values = vec![BigInt::from(self.int()?)];
                while self.next_is_int() {
                    self.expect(",")?;
                    values.push(BigInt::from(self.int()?));
                }
                SeqSpec::Leaf(Leaf::Explicit(values))
            }
            "poly" | "quadric" | "quadric-dual" | "tensor-alg" | "heisenberg" => {
                self.expect(":")?;
                let m = self.count()?;
                SeqSpec::Leaf(match name {
                    "poly" => Leaf::Polynomial { m },
                    "quadric" => Leaf::Quadric { m },
                    "quadric-dual" => Leaf::QuadricDual { m },
                    "tensor-alg" => Leaf::TensorAlgebra { m },
                    _ => Leaf::Heisenberg { u: m },
                })
            }
            _ => {
                self.pos = start;
                return self.fail(&format!("unknown sequence kind {name:?}"));
            }
        })
    }
}

/// Parses a complete sequence spec.
pub fn parse_spec(src: &str) -> Result<SeqSpec, String> {
    let mut p = Parser { src: src.trim(), pos: 0 };
    let spec = p.spec()?;
    if !p.rest().is_empty() {
        return p.fail("trailing input");
    }
    Ok(spec)
}
