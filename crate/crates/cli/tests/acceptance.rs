//! End-to-end acceptance checks, one line of output per criterion.
//!
//! Built without the libtest harness, so `cargo test` always shows the report.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use polya_cli::schema::{BettiTableJson, PfReportJson, SchurTerm, ValueJson};
use polya_core::quadric::{
    decomposition_dimension, multigraded_hs_check, orthogonal_stable_decomposition, quadric_schur_dim, Method,
    QuadricContext,
};
use polya_core::resolutions::{efw_partitions, hk_solve, quadric_pure_resolution, quadric_tail_ranks, validate_purity};
use polya_core::sequences::{
    cauchy_identity_check, pf_check, pieri_identity_check, schur_dimension_profile, tensor_identity_check,
    transpose_duality_check, veronese_identity_check, GradedSequence, Leaf, Level, Verdict,
};
use polya_core::shapes::{Composition, Partition, SkewShape};
use polya_core::symfunc::lr_coefficient;
use polya_core::zelevinsky::euler_check;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<(), String>;

fn cli(args: &[&str]) -> Result<String, String> {
    let out = polya_cli::run(std::iter::once("polya").chain(args.iter().copied()));
    if out.code != 0 {
        return Err(format!("polya {} exited {}: {}", args.join(" "), out.code, out.stderr.trim()));
    }
    Ok(out.stdout)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec()).unwrap()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn criterion_1() -> Check {
    let out = cli(&["jt-minor", "--seq", "segre:poly:3,poly:3", "--lambda", "2,2,2", "--level", "class"])?;
    let json: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let terms: Vec<SchurTerm> = serde_json::from_value(json["value"].clone()).map_err(|e| e.to_string())?;
    // (x shape, y shape, coefficient) as displayed, grouped by the y shape
    let expected: &[(&[usize], &[usize], i64)] = &[
        (&[2, 2, 2], &[6], 1),
        (&[3, 3], &[5, 1], -1),
        (&[2, 2, 2], &[5, 1], 2),
        (&[4, 2], &[4, 2], 2),
        (&[3, 2, 1], &[4, 2], 2),
        (&[2, 2, 2], &[4, 2], 3),
        (&[3, 3], &[4, 1, 1], -1),
        (&[2, 2, 2], &[4, 1, 1], 1),
        (&[5, 1], &[3, 3], -1),
        (&[4, 1, 1], &[3, 3], -1),
        (&[2, 2, 2], &[3, 3], 1),
        (&[4, 2], &[3, 2, 1], 2),
        (&[3, 2, 1], &[3, 2, 1], 2),
        (&[2, 2, 2], &[3, 2, 1], 2),
        (&[6], &[2, 2, 2], 1),
        (&[5, 1], &[2, 2, 2], 2),
        (&[4, 2], &[2, 2, 2], 3),
        (&[4, 1, 1], &[2, 2, 2], 1),
        (&[3, 3], &[2, 2, 2], 1),
        (&[3, 2, 1], &[2, 2, 2], 2),
        (&[2, 2, 2], &[2, 2, 2], 1),
    ];
    let mut want: Vec<(Vec<Vec<usize>>, BigInt)> =
        expected.iter().map(|(x, y, c)| (vec![x.to_vec(), y.to_vec()], int(*c))).collect();
    let mut got: Vec<(Vec<Vec<usize>>, BigInt)> = terms.into_iter().map(|t| (t.partitions, t.coeff.0)).collect();
    want.sort();
    got.sort();
    ensure(got == want, || format!("expansion differs: got {got:?}"))
}

fn criterion_2() -> Check {
    let out = cli(&["jt-minor", "--seq", "heisenberg:2", "--lambda", "1,1,1"])?;
    let json: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(json["value"] == serde_json::json!(-2), || format!("value {}", json["value"]))?;
    let class = GradedSequence::leaf(Leaf::Heisenberg { u: 2 }, Level::Class).unwrap();
    let v = class.schur(&SkewShape::straight(p(&[1, 1, 1]))).map_err(|e| e.to_string())?;
    ensure(v.dimension(class.factors()) == int(-2), || format!("class minor {v}"))
}

fn criterion_3() -> Check {
    let out = cli(&["jt-minor", "--seq", "tensor-alg:3", "--lambda", "1,1", "--level", "class"])?;
    let json: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(json["value"] == serde_json::json!([]), || format!("s_11 = {}", json["value"]))?;
    let out = cli(&["schur-profile", "--seq", "tensor-alg:3", "--format", "text"])?;
    ensure(out.trim() == "1|0", || format!("profile {out}"))?;
    let t = GradedSequence::leaf(Leaf::TensorAlgebra { m: 2 }, Level::Class).unwrap();
    ensure(schur_dimension_profile(&t, 3, 3).unwrap() == Some((1, 0)), || "class-level profile".into())
}

fn criterion_4() -> Check {
    let mut shapes = Vec::new();
    for n in 0..=8 {
        for outer in Partition::all_of_size(n) {
            for inner in outer.subpartitions() {
                shapes.push(SkewShape::new(outer.clone(), inner).unwrap());
            }
        }
    }
    for m in 2..=5 {
        let ctx = QuadricContext::new(m).unwrap();
        for s in &shapes {
            let jt = quadric_schur_dim(&ctx, s, Method::Jt);
            let vs = quadric_schur_dim(&ctx, s, Method::VerticalStrip);
            let sup = quadric_schur_dim(&ctx, s, Method::Super);
            ensure(jt == vs && vs == sup, || format!("m = {m}, {s}: {jt} {vs} {sup}"))?;
            if s.inner().is_empty() {
                let l = s.outer();
                ensure(jt.is_zero() == (l.get(m - 1) > 1), || format!("vanishing fails at m = {m}, {l}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let q3 = GradedSequence::quadric(3).unwrap();
    let t = quadric_pure_resolution(3, &comp(&[1, 1, 1]), 3).unwrap();
    ensure(t.ranks()[..3] == [int(1), int(3), int(4)], || format!("ranks {:?}", t.ranks()))?;
    ensure(t.tail.as_ref().is_some_and(|t| t.rank == int(4) && t.ratio == int(1)), || "tail".into())?;
    let r = validate_purity(&t, &q3, 30).unwrap();
    ensure(r.coefficients == [int(1)], || format!("HS_M = {:?}", r.coefficients))?;

    let out = cli(&["resolve", "quadric", "--m", "3", "--shifts", "1,1,2", "--format", "csv"])?;
    let rows: Vec<String> = out.lines().skip(1).map(|l| l.splitn(4, ',').take(3).collect::<Vec<_>>().join(",")).collect();
    ensure(rows == ["0,0,4", "1,1,8", "2,2,4"], || format!("csv rows {rows:?}"))?;
    let json = cli(&["resolve", "quadric", "--m", "3", "--shifts", "1,1,2"])?;
    let table = serde_json::from_str::<BettiTableJson>(&json).map_err(|e| e.to_string())?.into_table()?;
    let r = validate_purity(&table, &q3, 30).unwrap();
    ensure(r.coefficients == [int(4), int(4)], || format!("HS_M = {:?}", r.coefficients))?;

    let mut runner = TestRunner::deterministic();
    let strategy = (2usize..=5).prop_flat_map(|m| prop::collection::vec(1usize..=3, m - 1));
    for _ in 0..5 {
        let mut e = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        e.push(1);
        let m = e.len();
        let ranks = quadric_tail_ranks(m, &comp(&e), 10).unwrap();
        ensure(ranks.iter().all(|r| r == &ranks[0] && r.is_positive()), || format!("e = {e:?}: {ranks:?}"))?;
    }
    Ok(())
}

fn proportional(a: &[BigInt], b: &[BigInt]) -> bool {
    let Some(i) = b.iter().position(|x| !x.is_zero()) else { return false };
    let c = BigRational::new(a[i].clone(), b[i].clone());
    a.len() == b.len()
        && c.is_positive()
        && a.iter().zip(b).all(|(x, y)| BigRational::from(x.clone()) == &c * BigRational::from(y.clone()))
}

fn criterion_6() -> Check {
    for d in [[0i64, 1, 2], [0, 1, 3], [0, 2, 3]] {
        let sol = hk_solve(&d).map_err(|e| e.to_string())?;
        let shifts: Vec<usize> = vec![(d[1] - d[0]) as usize, (d[2] - d[1]) as usize, 1];
        let table = quadric_pure_resolution(3, &comp(&shifts), 0).unwrap();
        ensure(proportional(&table.ranks()[..3], &sol.infinite), || format!("{d:?}: {:?}", sol.infinite))?;
        // classical Herzog–Kühl: β_i ∝ Π_{j ≠ i} 1/|d_j - d_i|
        let classical: Vec<BigRational> = (0..3)
            .map(|i| {
                let den: i64 = (0..3).filter(|&j| j != i).map(|j| (d[j] - d[i]).abs()).product();
                BigRational::new(int(1), int(den))
            })
            .collect();
        let scale = BigRational::from(sol.finite[0].clone()) / &classical[0];
        let ok = sol.finite.iter().zip(&classical).all(|(x, c)| BigRational::from(x.clone()) == &scale * c);
        ensure(ok, || format!("{d:?}: finite branch {:?}", sol.finite))?;
        let text = cli(&["hk-solve", "--degrees", &format!("{},{},{}", d[0], d[1], d[2])])?;
        ensure(text.contains("\"infinite\""), || "hk-solve JSON".into())?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let got = efw_partitions(&comp(&[2, 1, 2, 3]), 5).map_err(|e| e.to_string())?;
    let want = [p(&[3, 3, 2]), p(&[5, 3, 2]), p(&[5, 4, 2]), p(&[5, 4, 4]), p(&[5, 4, 4, 3])];
    ensure(got == want, || format!("{got:?}"))?;
    let json = cli(&["efw", "--shifts", "2,1,2,3", "--count", "5"])?;
    let table: BettiTableJson = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    ensure(table.rows.len() == 5, || format!("{} rows", table.rows.len()))
}

fn criterion_8() -> Check {
    let out = cli(&["pf-check", "--seq", "hadamard:quadric:2,squares", "--order", "3", "--window", "6"])?;
    let report: PfReportJson = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let w = report.witness.ok_or("no witness")?;
    ensure(report.verdict == "negative", || report.verdict.clone())?;
    ensure(w.lambda == [2, 2, 2] && w.mu.is_empty(), || format!("witness {:?}/{:?}", w.lambda, w.mu))?;
    ensure(w.value == ValueJson::Int(polya_cli::schema::Big(int(-60))), || format!("{:?}", w.value))?;

    let a = GradedSequence::quadric(2).unwrap();
    let b = GradedSequence::leaf(Leaf::Squares, Level::Dim).unwrap();
    for f in [&a, &b] {
        let r = pf_check(f, 4, 8, false).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::PositiveUpToBounds, || format!("{} is not PF", f.spec()))?;
    }
    // the Hilbert series of the product against termwise multiplication
    let h = a.segre(&b).unwrap();
    let coeffs = h.hilbert_series().coefficients(20);
    let direct: Vec<BigInt> = (0..=20).map(|d| a.dim(d) * b.dim(d)).collect();
    ensure(coeffs == direct, || format!("series {coeffs:?}"))?;
    println!("    hadamard series numerator over (1-t)^3: {:?}", h.hilbert_series().numerator());
    Ok(())
}

fn fail<E: std::fmt::Display>(name: &'static str) -> impl Fn(E) -> String {
    move |e| format!("{name}: {e}")
}

fn criterion_9() -> Check {
    let mut runner = TestRunner::new(Config { cases: 32, ..Config::default() });
    let seqs = vec![
        GradedSequence::quadric(3).unwrap(),
        GradedSequence::polynomial(2).unwrap(),
        GradedSequence::leaf(Leaf::Super { r: 1, s: 1 }, Level::Dim).unwrap(),
        GradedSequence::leaf(Leaf::TensorAlgebra { m: 2 }, Level::Dim).unwrap(),
        GradedSequence::leaf(Leaf::Quadric { m: 3 }, Level::Class).unwrap(),
        GradedSequence::leaf(Leaf::Polynomial { m: 2 }, Level::Class).unwrap(),
    ];
    let dims = seqs[..4].to_vec();
    let partition = prop::collection::vec(0usize..=3, 0..=3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    });
    let skew = partition.clone().prop_flat_map(|o| {
        let subs = o.subpartitions();
        (Just(o), 0..subs.len()).prop_map(move |(o, k)| SkewShape::new(o, subs[k].clone()).unwrap())
    });

    let s = seqs.clone();
    runner
        .run(&(0..s.len(), partition.clone(), 0usize..3), |(i, l, d)| {
            prop_assert!(pieri_identity_check(&s[i], &l, d).unwrap());
            Ok(())
        })
        .map_err(fail("pieri"))?;
    runner
        .run(&(0..s.len(), skew.clone()), |(i, sh)| {
            prop_assert!(transpose_duality_check(&s[i], &sh).unwrap());
            Ok(())
        })
        .map_err(fail("transpose duality"))?;
    runner
        .run(&(0..s.len(), skew.clone()), |(i, sh)| {
            let a = &s[i];
            let direct = a.schur(&sh).unwrap();
            let mut total = a.zero();
            for nu in Partition::all_of_size(sh.size()) {
                let c = lr_coefficient(sh.outer(), sh.inner(), &nu);
                if c > 0 {
                    let v = a.schur(&SkewShape::straight(nu)).unwrap();
                    for _ in 0..c {
                        total = polya_core::linalg::Ring::add(&total, &v);
                    }
                }
            }
            prop_assert_eq!(direct, total);
            Ok(())
        })
        .map_err(fail("generalized LR"))?;
    runner
        .run(&(0..dims.len(), skew.clone(), 1usize..4), |(i, sh, d)| {
            let r = sh.outer().len().max(1);
            prop_assert!(veronese_identity_check(&dims[i], d, &sh, r).unwrap());
            Ok(())
        })
        .map_err(fail("veronese"))?;
    runner
        .run(&(0..dims.len(), 0..dims.len(), skew.clone()), |(i, j, sh)| {
            prop_assert!(tensor_identity_check(&dims[i], &dims[j], &sh).unwrap());
            Ok(())
        })
        .map_err(fail("tensor"))?;
    runner
        .run(&(0..s.len(), skew.clone(), 1usize..3), |(i, sh, extra)| {
            let r = sh.outer().len();
            prop_assert_eq!(s[i].jt_minor(&sh, r).unwrap(), s[i].jt_minor(&sh, r + extra).unwrap());
            Ok(())
        })
        .map_err(fail("padding"))?;
    for m in 1..=3 {
        for n in 1..=3 {
            ensure(cauchy_identity_check(&GradedSequence::quadric(m).unwrap(), n, 8).unwrap(), || {
                format!("cauchy m = {m}, n = {n}")
            })?;
        }
    }
    runner
        .run(&(0..s.len(), skew, 0usize..2), |(i, sh, extra)| {
            let n = (sh.outer().len() + extra).max(1);
            prop_assert!(euler_check(&s[i], sh.outer(), sh.inner(), n).unwrap());
            Ok(())
        })
        .map_err(fail("euler"))?;
    Ok(())
}

fn criterion_10() -> Check {
    for n in 1..=6 {
        for l in Partition::all_of_size(n) {
            for m in 2 * l.len()..=2 * l.len() + 2 {
                let ctx = QuadricContext::new(m).unwrap();
                let dec = orthogonal_stable_decomposition(&ctx, &l).map_err(|e| e.to_string())?;
                let total = decomposition_dimension(&ctx, &dec).map_err(|e| e.to_string())?;
                let direct = quadric_schur_dim(&ctx, &SkewShape::straight(l.clone()), Method::Jt);
                ensure(total == direct, || format!("{l}, m = {m}: {total} vs {direct}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_11() -> Check {
    for m in 1..=4 {
        for n in 1..=3 {
            ensure(multigraded_hs_check(m, n, 8).map_err(|e| e.to_string())?, || format!("m = {m}, n = {n}"))?;
        }
    }
    let out = cli(&["hs-check", "--m", "2", "--n", "3", "--trunc", "5"])?;
    ensure(out.contains("\"holds\": true"), || out.clone())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 11] = [
        ("Segre s_222 expansion", criterion_1, Duration::from_secs(5)),
        ("Heisenberg minor -2", criterion_2, Duration::from_secs(1)),
        ("tensor algebra Schur dimension 1|0", criterion_3, Duration::from_secs(5)),
        ("quadric triple equality and vanishing", criterion_4, Duration::from_secs(60)),
        ("quadric pure resolutions", criterion_5, Duration::from_secs(30)),
        ("Herzog-Kuhl cross-check", criterion_6, Duration::from_secs(5)),
        ("EFW partitions", criterion_7, Duration::from_secs(5)),
        ("Hadamard product is not PF", criterion_8, Duration::from_secs(10)),
        ("identity properties", criterion_9, Duration::from_secs(120)),
        ("stable orthogonal decomposition", criterion_10, Duration::from_secs(10)),
        ("multigraded Hilbert series", criterion_11, Duration::from_secs(30)),
    ];
    let mut failed = Vec::new();
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check().and_then(|()| {
            let t = start.elapsed();
            ensure(t <= *budget, || format!("took {t:?}, budget {budget:?}"))
        });
        let t = start.elapsed();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({t:.2?})", k + 1),
            Err(e) => {
                println!("criterion {:>2}: FAIL  {name} ({t:.2?}): {e}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
