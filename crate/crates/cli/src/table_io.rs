//! Betti tables on disk.
//!
//! CSV has the header `index,twist,rank,label`; a linear tail is recorded in a
//! trailing comment line `# tail start=S rank=R step=1 ratio=Q`. JSON follows
//! [`BettiTableJson`].

use std::str::FromStr;

use num_bigint::BigInt;
use polya_core::resolutions::{BettiRow, BettiTable, Label, Tail};
use polya_core::shapes::{Partition, SkewShape};

use crate::schema::BettiTableJson;

pub fn write_csv(table: &BettiTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let write = |w: &mut csv::Writer<Vec<u8>>, rec: [String; 4]| w.write_record(rec).expect("writing to memory");
    write(&mut w, ["index", "twist", "rank", "label"].map(String::from));
    for r in &table.rows {
        let label = r.label.as_ref().map(Label::to_string).unwrap_or_default();
        write(&mut w, [r.index.to_string(), r.twist.to_string(), r.rank.to_string(), label]);
    }
    let mut out = String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input");
    if let Some(t) = &table.tail {
        out.push_str(&format!("# tail start={} rank={} step=1 ratio={}\n", t.start, t.rank, t.ratio));
    }
    out
}

fn parse_tail(line: &str) -> Result<Tail, String> {
    let mut start = None;
    let mut rank = None;
    let mut ratio = BigInt::from(1);
    for field in line.split_whitespace() {
        let Some((key, value)) = field.split_once('=') else { continue };
        let bad = |e: &dyn std::fmt::Display| format!("tail field {field:?}: {e}");
        match key {
            "start" => start = Some(value.parse::<usize>().map_err(|e| bad(&e))?),
            "rank" => rank = Some(BigInt::from_str(value).map_err(|e| bad(&e))?),
            "ratio" => ratio = BigInt::from_str(value).map_err(|e| bad(&e))?,
            "step" if value != "1" => return Err(format!("tail step must be 1, found {value}")),
            _ => {}
        }
    }
    match (start, rank) {
        (Some(start), Some(rank)) => Ok(Tail { start, rank, ratio }),
        _ => Err(format!("tail line {line:?} needs start and rank")),
    }
}

/// Parses `(3,2)` or `(3,2)/(1)` into a label.
fn parse_label(s: &str) -> Option<Label> {
    let part = |p: &str| -> Option<Partition> {
        let inner = p.trim().strip_prefix('(')?.strip_suffix(')')?;
        let parts: Option<Vec<usize>> =
            inner.split(',').filter(|x| !x.trim().is_empty()).map(|x| x.trim().parse().ok()).collect();
        Partition::new(parts?).ok()
    };
    match s.split_once('/') {
        Some((o, i)) => SkewShape::new(part(o)?, part(i)?).ok().map(Label::Skew),
        None => part(s).map(Label::Partition),
    }
}

pub fn read_csv(text: &str) -> Result<BettiTable, String> {
    let mut tail = None;
    for line in text.lines().map(str::trim) {
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(rest) = rest.trim().strip_prefix("tail") {
                tail = Some(parse_tail(rest)?);
            }
        }
    }
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| e.to_string())?.clone();
    let column = |name: &str| headers.iter().position(|h| h == name).ok_or(format!("missing column {name:?}"));
    let (ci, ct, cr) = (column("index")?, column("twist")?, column("rank")?);
    let cl = headers.iter().position(|h| h == "label");
    let mut rows = Vec::new();
    for (n, record) in reader.records().enumerate() {
        let record = record.map_err(|e| e.to_string())?;
        let field = |c: usize| record.get(c).ok_or(format!("row {} is short", n + 1));
        let bad = |what: &str, e: &dyn std::fmt::Display| format!("row {}: {what}: {e}", n + 1);
        rows.push(BettiRow {
            index: field(ci)?.parse().map_err(|e| bad("index", &e))?,
            twist: field(ct)?.parse().map_err(|e| bad("twist", &e))?,
            rank: BigInt::from_str(field(cr)?).map_err(|e| bad("rank", &e))?,
            label: cl.and_then(|c| record.get(c)).and_then(parse_label),
        });
    }
    Ok(BettiTable { rows, tail })
}

pub fn read_json(text: &str) -> Result<BettiTable, String> {
    serde_json::from_str::<BettiTableJson>(text).map_err(|e| e.to_string())?.into_table()
}

/// JSON when the first non-blank character is `{`, CSV otherwise.
pub fn read_table(text: &str) -> Result<BettiTable, String> {
    if text.trim_start().starts_with('{') {
        read_json(text)
    } else {
        read_csv(text)
    }
}
