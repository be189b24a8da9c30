mod common;

use common::{int, p};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use polya_core::resolutions::{
    efw_betti, efw_partitions, hk_solve, quadric_pure_resolution, quadric_tail_ranks, rnc_pure_resolution,
    validate_purity, DegreeSequence,
};
use polya_core::sequences::GradedSequence;
use polya_core::shapes::Composition;
use proptest::prelude::*;

fn shifts(m: usize, last_one: bool) -> impl Strategy<Value = Composition> {
    (prop::collection::vec(1usize..4, m - 1), 1usize..4).prop_map(move |(mut v, last)| {
        v.push(if last_one { 1 } else { last + 1 });
        Composition::new(v).unwrap()
    })
}

/// `true` when `a = c·b` for some positive rational `c`.
fn positively_proportional(a: &[BigInt], b: &[BigInt]) -> bool {
    let (Some(i), true) = (b.iter().position(|x| !x.is_zero()), a.len() == b.len()) else { return false };
    let c = BigRational::new(a[i].clone(), b[i].clone());
    c.is_positive() && a.iter().zip(b).all(|(x, y)| BigRational::from(x.clone()) == &c * BigRational::from(y.clone()))
}

/// `β_i ∝ Π_{j ≠ i} 1/|d_j - d_i|`, cleared of denominators.
fn classical_hk(d: &[i64]) -> Vec<BigInt> {
    let all: BigInt = (0..d.len())
        .flat_map(|i| (0..d.len()).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| BigInt::from((d[j] - d[i]).abs()))
        .product();
    (0..d.len())
        .map(|i| {
            let own: BigInt = (0..d.len()).filter(|&j| j != i).map(|j| BigInt::from((d[j] - d[i]).abs())).product();
            &all / own
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn efw_rows_grow_by_one_row(e in prop::collection::vec(1usize..4, 1..5), extra in 0usize..3) {
        let e = Composition::new(e).unwrap();
        let parts = efw_partitions(&e, e.len() + 1 + extra).unwrap();
        let seq = DegreeSequence::new(e.clone());
        for i in 1..parts.len() {
            let (before, after) = (&parts[i - 1], &parts[i]);
            prop_assert_eq!(after.size() - before.size(), seq.shift(i));
            for row in 0..after.len().max(before.len()) {
                let grow = after.get(row) - before.get(row);
                prop_assert_eq!(grow, if row == i - 1 { seq.shift(i) } else { 0 });
            }
        }
    }

    #[test]
    fn finite_quadric_resolutions_are_pure(e in (2usize..5).prop_flat_map(|m| shifts(m, false))) {
        let m = e.len();
        let table = quadric_pure_resolution(m, &e, 0).unwrap();
        prop_assert!(table.tail.is_none());
        let q = GradedSequence::quadric(m).unwrap();
        let report = validate_purity(&table, &q, 40).unwrap();
        prop_assert!(report.polynomial && report.nonnegative);
        prop_assert!(report.dimension.unwrap().is_positive());
        // finite length forces the Herzog–Kühl relations with two steps per row
        let twists = table.twists();
        prop_assert!(positively_proportional(&table.ranks(), &hk_solve(&twists).unwrap().finite));
    }

    #[test]
    fn infinite_quadric_resolutions(e in (2usize..5).prop_flat_map(|m| shifts(m, true))) {
        let m = e.len();
        let table = quadric_pure_resolution(m, &e, 3).unwrap();
        let tail = table.tail.clone().unwrap();
        prop_assert_eq!(tail.start, m - 1);
        let ranks = quadric_tail_ranks(m, &e, 10).unwrap();
        prop_assert!(ranks.iter().all(|r| r == &tail.rank));
        let q = GradedSequence::quadric(m).unwrap();
        let report = validate_purity(&table, &q, 40).unwrap();
        prop_assert!(report.polynomial && report.nonnegative);
        let head: Vec<BigInt> = table.ranks()[..m].to_vec();
        let twists: Vec<i64> = table.twists()[..m].to_vec();
        prop_assert!(positively_proportional(&head, &hk_solve(&twists).unwrap().infinite));
    }
}

#[test]
fn herzog_kuhl_branches() {
    for d in [[0i64, 1, 2], [0, 1, 3], [0, 2, 3], [0, 2, 5]] {
        let sol = hk_solve(&d).unwrap();
        assert!(positively_proportional(&sol.finite, &classical_hk(&d)), "{d:?}");
        assert!(sol.infinite.iter().all(|x| x.is_positive()));
    }
    assert_eq!(hk_solve(&[0, 1, 2]).unwrap().infinite, [1, 3, 4].map(int));
    assert!(hk_solve(&[1, 2]).is_err());
    assert!(hk_solve(&[0, 2, 2]).is_err());
}

#[test]
fn polynomial_resolutions_are_finite_length() {
    for e in [vec![1, 1], vec![2, 1, 2], vec![1, 3, 1, 1]] {
        let e = Composition::new(e).unwrap();
        let n = e.len();
        let table = efw_betti(&e, n, n + 1).unwrap();
        let report = validate_purity(&table, &GradedSequence::polynomial(n).unwrap(), 40).unwrap();
        assert!(report.polynomial && report.nonnegative, "{e}");
        let twists = table.twists();
        let hk = classical_hk(&twists);
        assert!(positively_proportional(&table.ranks(), &hk), "{e}");
    }
}

#[test]
fn rnc_tables_validate() {
    for d in 1..=4 {
        for e in [vec![1, 1, 1], vec![1, 2, 1], vec![2, 1, 3], vec![1, 1, 2]] {
            let e = Composition::new(e).unwrap();
            let table = rnc_pure_resolution(d, &e, 4).unwrap();
            table.validate().unwrap();
            let a = GradedSequence::polynomial(2).unwrap().veronese(d).unwrap();
            let report = validate_purity(&table, &a, 60).unwrap();
            assert!(report.polynomial && report.nonnegative, "d = {d}, {e}");
        }
    }
    let t = rnc_pure_resolution(2, &Composition::new(vec![1, 1, 1]).unwrap(), 3).unwrap();
    assert_eq!(t.tail.unwrap().ratio, BigInt::one());
}

#[test]
fn efw_figure_partitions() {
    let e = Composition::new(vec![2, 1, 2, 3]).unwrap();
    let got = efw_partitions(&e, 5).unwrap();
    assert_eq!(got, [p(&[3, 3, 2]), p(&[5, 3, 2]), p(&[5, 4, 2]), p(&[5, 4, 4]), p(&[5, 4, 4, 3])]);
}
