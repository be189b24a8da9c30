//! Argument definitions and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use polya_core::quadric::{
    decomposition_dimension, multigraded_hs_check, orthogonal_stable_decomposition, quadric_schur_dim, Method,
    QuadricContext,
};
use polya_core::resolutions::{
    efw_betti, hk_solve, quadric_pure_resolution, rnc_pure_resolution, validate_purity, BettiTable,
};
use polya_core::sequences::{
    pf_check, schur_dimension_profile, tensor_identity_check, veronese_shape, GradedSequence, Level, Value,
};
use polya_core::shapes::{Composition, Partition, SkewShape};
use polya_core::symfunc::{dim_gl_skew, dim_super_skew, lr_coefficient, lr_product, skew_to_straight, SchurClass};
use polya_core::zelevinsky::{euler_characteristic, jt_complex_layout};
use serde_json::json;

use crate::grammar::{parse_spec, SeqSpec};
use crate::schema::{self, Big, BettiTableJson, LayoutJson, PfReportJson, SkewJson, ValueJson};
use crate::table_io;
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "polya", version, about = "Jacobi–Trudi minors, total positivity and pure resolutions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest order of a determinant expanded over permutations.
    #[arg(long, global = true, default_value_t = 8, value_name = "R")]
    pub max_cost: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Dim,
    Class,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Dim => Level::Dim,
            LevelArg::Class => Level::Class,
        }
    }
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    /// Sequence, e.g. `quadric:3`, `super:2,1` or `hadamard:quadric:2,squares`.
    #[arg(long, value_parser = parse_spec)]
    pub seq: SeqSpec,
    /// Work with dimensions or with Schur classes.
    #[arg(long, value_enum, default_value_t = LevelArg::Dim)]
    pub level: LevelArg,
}

impl SeqArgs {
    fn build(&self) -> Result<GradedSequence, CliError> {
        Ok(self.seq.build(self.level.into())?)
    }
}

#[derive(Args, Debug)]
pub struct ShapeArgs {
    /// Outer partition, comma separated.
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub lambda: Partition,
    /// Inner partition; empty by default.
    #[arg(long, value_parser = parse_partition)]
    pub mu: Option<Partition>,
}

impl ShapeArgs {
    fn shape(&self) -> Result<SkewShape, CliError> {
        Ok(SkewShape::new(self.lambda.clone(), self.mu.clone().unwrap_or_else(Partition::empty))?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DimKind {
    Gl,
    Super,
    Quadric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Jt,
    VerticalStrip,
    Super,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Scan Jacobi–Trudi minors for a negative value.
    PfCheck {
        #[command(flatten)]
        seq: SeqArgs,
        /// Largest number of rows.
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Largest first row.
        #[arg(long, default_value_t = 8)]
        window: usize,
        /// Also scan skew shapes.
        #[arg(long)]
        skew: bool,
    },
    /// The minor det(A_{λ_i - μ_j - i + j}).
    JtMinor {
        #[command(flatten)]
        seq: SeqArgs,
        #[command(flatten)]
        shape: ShapeArgs,
        /// Matrix size; the length of λ by default.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Littlewood–Richardson coefficients, or the product s_μ s_ν without --lambda.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
    },
    /// Expand a skew Schur function in the Schur basis.
    SkewExpand {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Dimension of a (skew) Schur functor.
    Dim {
        #[arg(value_enum)]
        kind: DimKind,
        #[command(flatten)]
        shape: ShapeArgs,
        /// dim V.
        #[arg(long, required_if_eq_any([("kind", "gl"), ("kind", "quadric")]))]
        m: Option<usize>,
        /// Even dimension of a super space.
        #[arg(long, required_if_eq("kind", "super"))]
        r: Option<usize>,
        /// Odd dimension of a super space.
        #[arg(long, required_if_eq("kind", "super"))]
        s: Option<usize>,
        /// Algorithm for quadric dimensions.
        #[arg(long, value_enum, default_value_t = MethodArg::Jt)]
        method: MethodArg,
    },
    /// Compare a minor of a Veronese subsequence with the translated minor.
    Veronese {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Minor of A ⊗ B, checked against the Cauchy–Binet sum.
    Tensor {
        #[command(flatten)]
        seq: SeqArgs,
        /// The second factor.
        #[arg(long, value_parser = parse_spec)]
        with: SeqSpec,
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Minor of the Segre (Hadamard) product.
    Segre {
        #[command(flatten)]
        seq: SeqArgs,
        /// The second factor.
        #[arg(long, value_parser = parse_spec)]
        with: SeqSpec,
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// The class Σ_α (-1)^{d-ℓ(α)} A_{α_1} ⋯ A_{α_ℓ} over compositions of d.
    EClass {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        d: i64,
    },
    /// Find r|s with s^A_λ = 0 exactly when λ_{r+1} > s.
    SchurProfile {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[arg(long, default_value_t = 3)]
        s_max: usize,
    },
    /// Orthogonal-group decomposition of a quadric Schur functor (stable range).
    OrthoDecomp {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Check the multigraded Hilbert series factorization of the quadric.
    HsCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        trunc: usize,
    },
    /// Betti table of the EFW complex over a polynomial ring.
    Efw {
        #[arg(long, value_parser = parse_composition)]
        shifts: Composition,
        /// Number of terms; one more than the shifts by default.
        #[arg(long)]
        count: Option<usize>,
        /// Number of variables; the number of shifts by default.
        #[arg(long)]
        e_dim: Option<usize>,
    },
    /// Pure resolutions.
    Resolve {
        #[command(subcommand)]
        kind: ResolveKind,
    },
    /// Solve the Herzog–Kühl conditions for a degree sequence.
    HkSolve {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        degrees: Ints,
    },
    /// Check that a Betti table resolves a finite-length module.
    Validate {
        /// Betti table in CSV or JSON.
        #[arg(long)]
        table: PathBuf,
        /// The ring, as a dimension sequence.
        #[arg(long, value_parser = parse_spec)]
        seq: SeqSpec,
        #[arg(long, default_value_t = 40)]
        horizon: usize,
    },
    /// Terms of the Jacobi–Trudi complex and its Euler characteristic.
    Zelevinsky {
        #[command(flatten)]
        seq: SeqArgs,
        #[command(flatten)]
        shape: ShapeArgs,
        /// Number of letters; the length of λ by default.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ResolveKind {
    /// Over the quadric hypersurface with dim V = m.
    Quadric {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_composition)]
        shifts: Composition,
        /// Explicit rows past the start of a tail.
        #[arg(long, default_value_t = 3)]
        tail_terms: usize,
    },
    /// Over the degree d rational normal curve.
    Rnc {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_composition)]
        shifts: Composition,
        #[arg(long, default_value_t = 3)]
        tail_terms: usize,
    },
    /// Over a polynomial ring in as many variables as shifts (the EFW complex).
    Poly {
        #[arg(long, value_parser = parse_composition)]
        shifts: Composition,
    },
}

/// A list of integers as one flag value.
#[derive(Clone, Debug)]
pub struct Ints(pub Vec<i64>);

fn split_ints(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"))).collect()
}

fn parse_ints(s: &str) -> Result<Ints, String> {
    split_ints(s).map(Ints)
}

fn naturals(s: &str) -> Result<Vec<usize>, String> {
    split_ints(s)?.into_iter().map(|x| usize::try_from(x).map_err(|_| format!("{x} is negative"))).collect()
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(naturals(s)?).map_err(|e| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    Composition::new(naturals(s)?).map_err(|e| e.to_string())
}

/// A command's result in all three formats.
pub struct Report {
    pub json: serde_json::Value,
    pub text: String,
    pub csv: String,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        let mut out = match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values always serialize"),
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone(),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("schema types always serialize")
}

fn csv_records<I, R>(records: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.write_record(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 fields")
}

/// `key: value` lines with aligned values, and the same pairs as CSV.
fn pairs(json: serde_json::Value, items: &[(&str, String)]) -> Report {
    let width = items.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let text = items.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect();
    let csv = csv_records(
        std::iter::once(vec!["key".to_string(), "value".to_string()])
            .chain(items.iter().map(|(k, v)| vec![k.to_string(), v.clone()])),
    );
    Report { json, text, csv }
}

fn class_report(c: &SchurClass) -> Report {
    let text = format!("{c}\n");
    let csv = csv_records(std::iter::once(vec!["partitions".to_string(), "coeff".to_string()]).chain(
        c.terms().iter().map(|(parts, coeff)| {
            let names: Vec<String> = parts.iter().map(Partition::to_string).collect();
            vec![names.join("⊗"), coeff.to_string()]
        }),
    ));
    Report { json: to_json(&schema::schur_class(c)), text, csv }
}

fn table_report(t: &BettiTable) -> Report {
    let mut rows = vec![["index".to_string(), "twist".into(), "rank".into(), "label".into()]];
    for r in &t.rows {
        let label = r.label.as_ref().map(|l| l.to_string()).unwrap_or_default();
        rows.push([r.index.to_string(), r.twist.to_string(), r.rank.to_string(), label]);
    }
    let widths: Vec<usize> = (0..4).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut text = String::new();
    for r in &rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    if let Some(tail) = &t.tail {
        text.push_str(&format!(
            "tail from index {}: rank {} times {}^j, twist +1 per step\n",
            tail.start, tail.rank, tail.ratio
        ));
    }
    Report { json: to_json(&BettiTableJson::from(t)), text, csv: table_io::write_csv(t) }
}

fn value_pairs(json: serde_json::Value, head: Vec<(&str, String)>, value: &Value) -> Report {
    let mut items = head;
    items.push(("value", value.to_string()));
    pairs(json, &items)
}

fn guard(max_cost: usize, level: Level, r: usize) -> Result<(), CliError> {
    if level == Level::Class && r > max_cost {
        return Err(polya_core::Error::ExpansionTooLarge { r, max: max_cost }.into());
    }
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let cost = cli.max_cost;
    Ok(match &cli.command {
        Command::PfCheck { seq, order, window, skew } => {
            let a = seq.build()?;
            guard(cost, a.level(), *order)?;
            let report = pf_check(&a, *order, *window, *skew)?;
            let mut items = vec![
                ("sequence", a.spec()),
                ("verdict", report.verdict.to_string()),
                ("order", order.to_string()),
                ("window", window.to_string()),
            ];
            if let Some(w) = &report.witness {
                let shape = SkewShape::new(w.lambda.clone(), w.mu.clone())?;
                items.push(("witness", shape.to_string()));
                items.push(("value", w.value.to_string()));
            }
            pairs(to_json(&PfReportJson::from(&report)), &items)
        }
        Command::JtMinor { seq, shape, r } => {
            let a = seq.build()?;
            let s = shape.shape()?;
            let r = r.unwrap_or(s.outer().len().max(s.inner().len()));
            guard(cost, a.level(), r)?;
            let v = a.jt_minor(&s, r)?;
            let json = json!({
                "sequence": a.spec(),
                "lambda": schema::partition(s.outer()),
                "mu": schema::partition(s.inner()),
                "r": r,
                "value": to_json(&ValueJson::from(&v)),
            });
            let mut report = value_pairs(json, vec![], &v);
            report.text = format!("{v}\n");
            report
        }
        Command::Lr { mu, nu, lambda } => match lambda {
            Some(l) => {
                let c = lr_coefficient(l, mu, nu);
                let json = json!({
                    "lambda": schema::partition(l),
                    "mu": schema::partition(mu),
                    "nu": schema::partition(nu),
                    "coefficient": c,
                });
                let mut report = pairs(json, &[("coefficient", c.to_string())]);
                report.text = format!("{c}\n");
                report
            }
            None => {
                let mut class = SchurClass::zero(1);
                for (l, c) in lr_product(mu, nu) {
                    class.add_term(vec![l], BigInt::from(c));
                }
                class_report(&class)
            }
        },
        Command::SkewExpand { shape } => class_report(&skew_to_straight(&shape.shape()?)),
        Command::Dim { kind, shape, m, r, s, method } => dim(*kind, &shape.shape()?, *m, *r, *s, *method)?,
        Command::Veronese { seq, d, shape, r } => {
            let a = seq.build()?;
            let s = shape.shape()?;
            let r = r.unwrap_or(s.outer().len().max(1));
            guard(cost, a.level(), r)?;
            let v = a.veronese(*d)?;
            let translated = veronese_shape(&s, *d, r)?;
            let left = v.jt_minor(&s, r)?;
            let right = a.jt_minor(&translated, r)?;
            let json = json!({
                "sequence": v.spec(),
                "shape": SkewJson::from(&s),
                "translated": SkewJson::from(&translated),
                "r": r,
                "value": to_json(&ValueJson::from(&left)),
                "translated_value": to_json(&ValueJson::from(&right)),
                "equal": left == right,
            });
            pairs(
                json,
                &[
                    ("sequence", v.spec()),
                    ("shape", s.to_string()),
                    ("translated", translated.to_string()),
                    ("value", left.to_string()),
                    ("translated value", right.to_string()),
                    ("equal", (left == right).to_string()),
                ],
            )
        }
        Command::Tensor { seq, with, shape } => {
            let a = seq.build()?;
            let b = with.build(seq.level.into())?;
            let s = shape.shape()?;
            guard(cost, a.level(), s.outer().len())?;
            let ab = a.tensor(&b)?;
            let v = ab.schur(&s)?;
            let holds = tensor_identity_check(&a, &b, &s)?;
            let json = json!({
                "sequence": ab.spec(),
                "lambda": schema::partition(s.outer()),
                "mu": schema::partition(s.inner()),
                "value": to_json(&ValueJson::from(&v)),
                "cauchy_binet": holds,
            });
            value_pairs(json, vec![("sequence", ab.spec()), ("cauchy-binet", holds.to_string())], &v)
        }
        Command::Segre { seq, with, shape } => {
            let a = seq.build()?;
            let b = with.build(seq.level.into())?;
            let s = shape.shape()?;
            guard(cost, a.level(), s.outer().len())?;
            let ab = a.segre(&b)?;
            let v = ab.schur(&s)?;
            let json = json!({
                "sequence": ab.spec(),
                "lambda": schema::partition(s.outer()),
                "mu": schema::partition(s.inner()),
                "value": to_json(&ValueJson::from(&v)),
            });
            value_pairs(json, vec![("sequence", ab.spec())], &v)
        }
        Command::EClass { seq, d } => {
            let a = seq.build()?;
            let v = a.e_class(*d);
            let json = json!({"sequence": a.spec(), "d": d, "value": to_json(&ValueJson::from(&v))});
            value_pairs(json, vec![("sequence", a.spec()), ("d", d.to_string())], &v)
        }
        Command::SchurProfile { seq, r_max, s_max } => {
            let a = seq.build()?;
            guard(cost, a.level(), r_max + 1)?;
            let profile = schur_dimension_profile(&a, *r_max, *s_max)?;
            let json = json!({
                "sequence": a.spec(),
                "r_max": r_max,
                "s_max": s_max,
                "profile": profile.map(|(r, s)| json!({"r": r, "s": s})),
            });
            let shown = profile.map_or("none".to_string(), |(r, s)| format!("{r}|{s}"));
            let mut report = pairs(json, &[("sequence", a.spec()), ("profile", shown.clone())]);
            report.text = format!("{shown}\n");
            report
        }
        Command::OrthoDecomp { m, lambda } => {
            let ctx = QuadricContext::new(*m)?;
            let dec = orthogonal_stable_decomposition(&ctx, lambda)?;
            let total = decomposition_dimension(&ctx, &dec)?;
            let text = dec.terms.iter().map(|(mu, k)| format!("{mu}  {k}\n")).collect::<String>()
                + &format!("dimension  {total}\n");
            let csv = csv_records(
                std::iter::once(vec!["mu".to_string(), "mult".to_string()])
                    .chain(dec.terms.iter().map(|(mu, k)| vec![mu.to_string(), k.to_string()])),
            );
            Report { json: to_json(&schema::ortho(&dec)), text, csv }
        }
        Command::HsCheck { m, n, trunc } => {
            let holds = multigraded_hs_check(*m, *n, *trunc)?;
            let json = json!({"m": m, "n": n, "trunc": trunc, "holds": holds});
            pairs(
                json,
                &[("m", m.to_string()), ("n", n.to_string()), ("trunc", trunc.to_string()), ("holds", holds.to_string())],
            )
        }
        Command::Efw { shifts, count, e_dim } => {
            let count = count.unwrap_or(shifts.len() + 1);
            table_report(&efw_betti(shifts, e_dim.unwrap_or(shifts.len()), count)?)
        }
        Command::Resolve { kind } => table_report(&match kind {
            ResolveKind::Quadric { m, shifts, tail_terms } => quadric_pure_resolution(*m, shifts, *tail_terms)?,
            ResolveKind::Rnc { d, shifts, tail_terms } => rnc_pure_resolution(*d, shifts, *tail_terms)?,
            ResolveKind::Poly { shifts } => efw_betti(shifts, shifts.len(), shifts.len() + 1)?,
        }),
        Command::HkSolve { degrees } => {
            let sol = hk_solve(&degrees.0)?;
            let big = |v: &[BigInt]| v.iter().map(Big::from).collect::<Vec<_>>();
            let json = json!({
                "degrees": degrees.0,
                "finite": to_json(&big(&sol.finite)),
                "infinite": to_json(&big(&sol.infinite)),
            });
            let list = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",");
            let mut report = pairs(
                json,
                &[("degrees", list(&degrees.0.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>())),
                  ("finite", list(&sol.finite)),
                  ("infinite", list(&sol.infinite))],
            );
            report.csv = csv_records(std::iter::once(vec!["index".into(), "degree".into(), "finite".into(), "infinite".into()]).chain(
                (0..degrees.0.len()).map(|i| {
                    vec![i.to_string(), degrees.0[i].to_string(), sol.finite[i].to_string(), sol.infinite[i].to_string()]
                }),
            ));
            report
        }
        Command::Validate { table, seq, horizon } => {
            let text = std::fs::read_to_string(table).map_err(|e| CliError::Input(format!("{}: {e}", table.display())))?;
            let t = table_io::read_table(&text).map_err(|e| CliError::Input(format!("{}: {e}", table.display())))?;
            let a = seq.build(Level::Dim)?;
            let r = validate_purity(&t, &a, *horizon)?;
            let coeffs: Vec<Big> = r.coefficients.iter().map(Big::from).collect();
            let json = json!({
                "polynomial": r.polynomial,
                "nonnegative": r.nonnegative,
                "coefficients": to_json(&coeffs),
                "dimension": r.dimension.as_ref().map(|d| to_json(&Big::from(d))),
            });
            let list: Vec<String> = r.coefficients.iter().map(BigInt::to_string).collect();
            pairs(
                json,
                &[
                    ("polynomial", r.polynomial.to_string()),
                    ("nonnegative", r.nonnegative.to_string()),
                    ("coefficients", list.join(",")),
                    ("dimension", r.dimension.map_or("none".into(), |d| d.to_string())),
                ],
            )
        }
        Command::Zelevinsky { seq, shape, n } => {
            let a = seq.build()?;
            let s = shape.shape()?;
            let n = n.unwrap_or(s.outer().len().max(s.inner().len()).max(1));
            if n > cost {
                return Err(polya_core::Error::ExpansionTooLarge { r: n, max: cost }.into());
            }
            let layout = jt_complex_layout(&a, s.outer(), s.inner(), n)?;
            let chi = euler_characteristic(&layout);
            let mut text = String::new();
            let mut rows = vec![vec!["degree".to_string(), "perm".into(), "weight".into(), "value".into()]];
            for (i, terms) in layout.degrees.iter().enumerate() {
                for t in terms {
                    let w: Vec<String> = t.weight.entries().iter().map(i64::to_string).collect();
                    text.push_str(&format!("F_{i}  {}  ({})  {}\n", t.perm, w.join(","), t.value));
                    rows.push(vec![i.to_string(), t.perm.to_string(), format!("({})", w.join(",")), t.value.to_string()]);
                }
            }
            text.push_str(&format!("euler characteristic  {chi}\nminor  {}\n", layout.target));
            Report { json: to_json(&LayoutJson::new(&layout, &chi)), text, csv: csv_records(rows) }
        }
    })
}

fn dim(
    kind: DimKind,
    s: &SkewShape,
    m: Option<usize>,
    r: Option<usize>,
    sodd: Option<usize>,
    method: MethodArg,
) -> Result<Report, CliError> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")));
    let mut json = json!({"kind": format!("{kind:?}").to_lowercase(), "shape": SkewJson::from(s)});
    let mut items = vec![("shape", s.to_string())];
    let value = match kind {
        DimKind::Gl => {
            let m = need(m, "m")?;
            json["m"] = json!(m);
            dim_gl_skew(s, m)
        }
        DimKind::Super => {
            let (r, sodd) = (need(r, "r")?, need(sodd, "s")?);
            json["r"] = json!(r);
            json["s"] = json!(sodd);
            dim_super_skew(s, r, sodd)
        }
        DimKind::Quadric => {
            let m = need(m, "m")?;
            json["m"] = json!(m);
            let ctx = QuadricContext::new(m)?;
            let methods: &[(MethodArg, Method, &str)] = &[
                (MethodArg::Jt, Method::Jt, "jt"),
                (MethodArg::VerticalStrip, Method::VerticalStrip, "vertical-strip"),
                (MethodArg::Super, Method::Super, "super"),
            ];
            let chosen: Vec<_> = methods.iter().filter(|(a, _, _)| method == MethodArg::All || *a == method).collect();
            let values: Vec<(&str, BigInt)> =
                chosen.iter().map(|(_, meth, name)| (*name, quadric_schur_dim(&ctx, s, *meth))).collect();
            if method == MethodArg::All {
                let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
                let mut by = serde_json::Map::new();
                for (name, v) in &values {
                    by.insert(name.to_string(), to_json(&Big::from(v)));
                    items.push((name, v.to_string()));
                }
                json["methods"] = serde_json::Value::Object(by);
                json["agree"] = json!(agree);
                items.push(("agree", agree.to_string()));
            } else {
                json["method"] = json!(values[0].0);
            }
            values[0].1.clone()
        }
    };
    json["dimension"] = to_json(&Big::from(&value));
    items.push(("dimension", value.to_string()));
    Ok(pairs(json, &items))
}
