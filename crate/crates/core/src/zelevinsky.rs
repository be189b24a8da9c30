//! Term layout of the Jacobi–Trudi complex `F^{A,λ,μ}`.
//!
//! `F_i = ⊕_{ℓ(σ) = i} A_{w_1} ⊗ ... ⊗ A_{w_n}` with `w = λ - σ∙μ`. Only the
//! terms are modelled; the complex is acyclic, so its Euler characteristic is
//! the Jacobi–Trudi minor.

use alloc::vec::Vec;

use crate::linalg::Ring;
use crate::sequences::{GradedSequence, Value};
use crate::shapes::{dotted_action, permutations_by_length, Partition, Permutation, Weight, MAX_PERMUTATION_LETTERS};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub perm: Permutation,
    pub weight: Weight,
    /// `Π_j [A_{w_j}]`, zero when some `w_j < 0`.
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexLayout {
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    /// `degrees[i]` holds the terms of `F_i`.
    pub degrees: Vec<Vec<Term>>,
    /// The Jacobi–Trudi minor `det([A_{λ_i - μ_j - i + j}])`.
    pub target: Value,
}

/// All `n!` terms of the complex, grouped by homological degree.
pub fn jt_complex_layout(a: &GradedSequence, lambda: &Partition, mu: &Partition, n: usize) -> Result<ComplexLayout> {
    let needed = lambda.len().max(mu.len()).max(1);
    if n < needed {
        return Err(Error::PaddingTooSmall { r: n, needed });
    }
    if n > MAX_PERMUTATION_LETTERS {
        return Err(Error::TooManyLetters { n, max: MAX_PERMUTATION_LETTERS });
    }
    let l = Weight::from_partition(lambda, n);
    let m = Weight::from_partition(mu, n);
    let mut degrees = Vec::new();
    for (_, perms) in permutations_by_length(n)? {
        let mut terms = Vec::with_capacity(perms.len());
        for perm in perms {
            let shifted = dotted_action(&perm, &m)?;
            let weight = Weight(l.entries().iter().zip(shifted.entries()).map(|(a, b)| a - b).collect());
            let value = if weight.entries().iter().any(|&w| w < 0) {
                a.zero()
            } else {
                weight.entries().iter().fold(a.one(), |acc, &w| acc.mul(&a.term(w)))
            };
            terms.push(Term { perm, weight, value });
        }
        degrees.push(terms);
    }
    let target = a.jt_determinant(lambda, mu, n)?;
    Ok(ComplexLayout { n, lambda: lambda.clone(), mu: mu.clone(), degrees, target })
}

/// `Σ_i (-1)^i Σ_{terms of F_i} value`.
pub fn euler_characteristic(layout: &ComplexLayout) -> Value {
    let mut total = layout.target.zero_like();
    for (i, terms) in layout.degrees.iter().enumerate() {
        for t in terms {
            total = if i % 2 == 0 { total.add(&t.value) } else { total.sub(&t.value) };
        }
    }
    total
}

/// The Euler characteristic of the layout equals the Jacobi–Trudi minor.
pub fn euler_check(a: &GradedSequence, lambda: &Partition, mu: &Partition, n: usize) -> Result<bool> {
    let layout = jt_complex_layout(a, lambda, mu, n)?;
    Ok(euler_characteristic(&layout) == layout.target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_rows() {
        let q = GradedSequence::quadric(3).unwrap();
        let layout = jt_complex_layout(&q, &p(&[2, 2]), &p(&[]), 2).unwrap();
        assert_eq!(layout.degrees[0][0].weight, Weight(vec![2, 2]));
        assert_eq!(layout.degrees[1][0].weight, Weight(vec![3, 1]));
        assert_eq!(layout.degrees[0][0].value, Value::Int(BigInt::from(25)));
        assert_eq!(layout.degrees[1][0].value, Value::Int(BigInt::from(21)));
        assert_eq!(euler_characteristic(&layout), Value::Int(BigInt::from(4)));
        assert_eq!(layout.target, Value::Int(BigInt::from(4)));
    }

    #[test]
    fn one_letter() {
        let q = GradedSequence::quadric(4).unwrap();
        let layout = jt_complex_layout(&q, &p(&[5]), &p(&[]), 1).unwrap();
        assert_eq!(layout.degrees.len(), 1);
        assert_eq!(euler_characteristic(&layout), q.term(5));
    }

    #[test]
    fn negative_weights_vanish() {
        let q = GradedSequence::quadric(3).unwrap();
        let layout = jt_complex_layout(&q, &p(&[1]), &p(&[]), 2).unwrap();
        assert_eq!(layout.degrees[1][0].weight, Weight(vec![2, -1]));
        assert!(layout.degrees[1][0].value.is_zero());
        assert!(jt_complex_layout(&q, &p(&[1, 1, 1]), &p(&[]), 2).is_err());
        assert!(jt_complex_layout(&q, &p(&[1]), &p(&[]), 9).is_err());
    }
}
