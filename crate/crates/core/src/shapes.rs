//! Partitions, skew shapes, compositions, ribbons, weights and permutations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest number of letters for which permutations are enumerated.
pub const MAX_PERMUTATION_LETTERS: usize = 8;

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// accepted and trimmed.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self::from_sorted(parts))
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(d)`.
    pub fn row(d: usize) -> Self {
        Self::from_sorted(vec![d])
    }

    /// The one-column partition `(1^d)`.
    pub fn column(d: usize) -> Self {
        Self::from_sorted(vec![1; d])
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the length.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn transpose(&self) -> Partition {
        let width = self.get(0);
        let parts = (0..width)
            .map(|i| self.parts.iter().filter(|&&p| p > i).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// `true` if the diagram of `other` is contained in the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Appends `count` parts equal to `value` (which must not exceed the last part).
    pub fn extended(&self, value: usize, count: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        parts.extend(core::iter::repeat_n(value, count));
        Partition::new(parts)
    }

    /// All partitions of `n`, in increasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        Self::bounded(n, usize::MAX, usize::MAX)
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
    /// in increasing lexicographic order.
    pub fn bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn rec(
            rest: usize,
            cap: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            // smallest feasible first part keeps the output lexicographically sorted
            let lo = rest.div_ceil(slots.min(rest));
            for p in lo..=cap.min(rest) {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition contained in `self` (including `∅` and `self`),
    /// ordered by size then lexicographically.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=outer[i].min(cap) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }

    /// Every `μ ⊇ self` such that `μ/self` is a horizontal strip of `d` boxes,
    /// in increasing lexicographic order.
    pub fn horizontal_strip_extensions(&self, d: usize) -> Vec<Partition> {
        let rows = self.len() + 1;
        let from = self.padded(rows);
        let mut out = Vec::new();
        fn rec(from: &[usize], i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == from.len() {
                if rest == 0 {
                    out.push(Partition::from_sorted(cur.clone()));
                }
                return;
            }
            let room = if i == 0 { rest } else { (from[i - 1] - from[i]).min(rest) };
            for extra in 0..=room {
                cur.push(from[i] + extra);
                rec(from, i + 1, rest - extra, cur, out);
                cur.pop();
            }
        }
        rec(&from, 0, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = Error;

    fn try_from(parts: &[usize]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Row lengths of the skew diagram, one per row of the outer shape.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.outer.len()).map(|i| self.outer.get(i) - self.inner.get(i)).collect()
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape { outer: self.outer.transpose(), inner: self.inner.transpose() }
    }

    /// At most one box in every column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.inner.get(i) >= self.outer.get(i + 1))
    }

    /// At most one box in every row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.get(i) - self.inner.get(i) <= 1)
    }

    /// Boxes as `(row, column)` pairs, rows top to bottom, 0-based.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.outer.len() {
            for c in self.inner.get(r)..self.outer.get(r) {
                out.push((r, c));
            }
        }
        out
    }

    /// Edge-connectedness of the box set. The empty shape counts as connected.
    pub fn is_connected(&self) -> bool {
        let boxes = self.boxes();
        if boxes.is_empty() {
            return true;
        }
        let mut seen = vec![false; boxes.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(k) = stack.pop() {
            let (r, c) = boxes[k];
            for (j, &(r2, c2)) in boxes.iter().enumerate() {
                if !seen[j] && r.abs_diff(r2) + c.abs_diff(c2) == 1 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `true` if some 2×2 square lies inside the diagram.
    pub fn contains_square(&self) -> bool {
        (0..self.outer.len().saturating_sub(1)).any(|r| {
            let lo = self.inner.get(r).max(self.inner.get(r + 1));
            let hi = self.outer.get(r).min(self.outer.get(r + 1));
            hi >= lo + 2
        })
    }

    /// Rebuilds a skew shape from an arbitrary box set, translating it so the
    /// smallest row and column are 0.
    pub fn from_boxes(boxes: &[(i64, i64)]) -> Result<SkewShape> {
        if boxes.is_empty() {
            return Ok(SkewShape::straight(Partition::empty()));
        }
        let r0 = boxes.iter().map(|b| b.0).min().unwrap_or(0);
        let c0 = boxes.iter().map(|b| b.1).min().unwrap_or(0);
        let rows = (boxes.iter().map(|b| b.0).max().unwrap_or(0) - r0 + 1) as usize;
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); rows];
        for &(r, c) in boxes {
            cols[(r - r0) as usize].push((c - c0) as usize);
        }
        let mut spans: Vec<Option<(usize, usize)>> = Vec::with_capacity(rows);
        for row in &mut cols {
            row.sort_unstable();
            row.dedup();
            if row.is_empty() {
                spans.push(None);
                continue;
            }
            let (lo, hi) = (row[0], row[row.len() - 1] + 1);
            if hi - lo != row.len() {
                return Err(Error::InvalidSkewShape(format!("row with a gap: {row:?}")));
            }
            spans.push(Some((lo, hi)));
        }
        // empty rows sit between column-disjoint neighbours; give them the
        // inner value of the nonempty row above
        let mut outer = Vec::with_capacity(rows);
        let mut inner = Vec::with_capacity(rows);
        let mut last_inner = usize::MAX;
        for span in &spans {
            match span {
                Some((lo, hi)) => {
                    inner.push(*lo);
                    outer.push(*hi);
                    last_inner = *lo;
                }
                None => {
                    inner.push(last_inner);
                    outer.push(last_inner);
                }
            }
        }
        let outer = Partition::new(outer)
            .map_err(|_| Error::InvalidSkewShape(String::from("row ends are not weakly decreasing")))?;
        let inner = Partition::new(inner)
            .map_err(|_| Error::InvalidSkewShape(String::from("row starts are not weakly decreasing")))?;
        SkewShape::new(outer, inner)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape{self}")
    }
}

/// A composition: a finite list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based); positions past the end read as 1.
    pub fn get_or_one(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(1)
    }

    /// All compositions of `n`, in lexicographic order. `n = 0` yields the
    /// empty composition.
    pub fn all_of(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for first in 1..=rest {
                cur.push(first);
                rec(rest - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Partition { parts: self.parts.clone() };
        write!(f, "{p}")
    }
}

/// Box set of the ribbon of `c` before normalization. Row 0 is the top row;
/// the bottom row starts in column 0.
fn ribbon_boxes(c: &Composition) -> Vec<(i64, i64)> {
    let r = c.len() as i64;
    let mut boxes = Vec::with_capacity(c.size());
    let mut start = 0i64;
    // parts[0] is the bottom row, each next part sits one row higher and
    // shares exactly one column with the row below
    for (k, &len) in c.parts().iter().enumerate() {
        let row = r - 1 - k as i64;
        for col in start..start + len as i64 {
            boxes.push((row, col));
        }
        start += len as i64 - 1;
    }
    boxes
}

/// The ribbon diagram of a composition `(a_1, ..., a_r)`: row lengths
/// `a_r, ..., a_1` from top to bottom, consecutive rows sharing one column.
pub fn ribbon_of(c: &Composition) -> Result<SkewShape> {
    if c.is_empty() {
        return Err(Error::InvalidComposition(String::from("empty composition")));
    }
    SkewShape::from_boxes(&ribbon_boxes(c))
}

/// Places the ribbon of `c` against the bottom row of `d`.
///
/// `same_row == true` puts the ribbon's top row in the same row as the bottom
/// row of `d`, immediately to its left. Otherwise the ribbon's top row goes in
/// the next row down and shares exactly one column (the first column of the
/// bottom row of `d`).
fn attach(d: &SkewShape, c: &Composition, same_row: bool) -> Result<SkewShape> {
    let ribbon = ribbon_boxes(c);
    if d.is_empty() {
        return SkewShape::from_boxes(&ribbon);
    }
    let mut boxes: Vec<(i64, i64)> = d.boxes().into_iter().map(|(r, c)| (r as i64, c as i64)).collect();
    let bottom = boxes.iter().map(|b| b.0).max().unwrap_or(0);
    let bottom_start = boxes.iter().filter(|b| b.0 == bottom).map(|b| b.1).min().unwrap_or(0);
    let top_end = ribbon.iter().filter(|b| b.0 == 0).map(|b| b.1).max().unwrap_or(0);
    let (dr, dc) = if same_row {
        (bottom, bottom_start - 1 - top_end)
    } else {
        (bottom + 1, bottom_start - top_end)
    };
    boxes.extend(ribbon.iter().map(|&(r, c)| (r + dr, c + dc)));
    SkewShape::from_boxes(&boxes)
}

/// `D ⊙ α`: the top row of the ribbon of `α` is glued onto the bottom row of
/// `D`, extending that row to the left.
pub fn attach_odot(d: &SkewShape, c: &Composition) -> Result<SkewShape> {
    attach(d, c, true)
}

/// `D · α`: the ribbon of `α` continues below `D`, its top row sharing one
/// column with the bottom row of `D`.
pub fn attach_dot(d: &SkewShape, c: &Composition) -> Result<SkewShape> {
    attach(d, c, false)
}

/// An integral weight of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn from_partition(p: &Partition, n: usize) -> Weight {
        Weight(p.padded(n).into_iter().map(|x| x as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &x in &one_line {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidParameter(format!("not a permutation: {one_line:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Self { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Self { one_line: (1..=n).collect() }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn degree(&self) -> usize {
        self.one_line.len()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.one_line.len()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Permutes positions: the entry in position `i` moves to position `σ(i)`.
    pub fn act(&self, w: &Weight) -> Result<Weight> {
        if w.len() != self.degree() {
            return Err(Error::LengthMismatch { expected: self.degree(), found: w.len() });
        }
        let mut out = vec![0; w.len()];
        for (i, &x) in w.0.iter().enumerate() {
            out[self.one_line[i] - 1] = x;
        }
        Ok(Weight(out))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.one_line.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// `ρ = (n-1, ..., 1, 0)`.
pub fn rho(n: usize) -> Weight {
    Weight((0..n).rev().map(|x| x as i64).collect())
}

/// The dotted action `σ • w = σ(w + ρ) - ρ`.
pub fn dotted_action(s: &Permutation, w: &Weight) -> Result<Weight> {
    let n = s.degree();
    if w.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: w.len() });
    }
    let rho = rho(n);
    let shifted = Weight(w.0.iter().zip(&rho.0).map(|(a, b)| a + b).collect());
    let moved = s.act(&shifted)?;
    Ok(Weight(moved.0.iter().zip(&rho.0).map(|(a, b)| a - b).collect()))
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn permutations(n: usize) -> Result<Vec<Permutation>> {
    if n > MAX_PERMUTATION_LETTERS {
        return Err(Error::TooManyLetters { n, max: MAX_PERMUTATION_LETTERS });
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { one_line: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap_or(i + 1);
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    Ok(out)
}

/// Permutations of `{1..n}` grouped by length (number of inversions).
pub fn permutations_by_length(n: usize) -> Result<BTreeMap<usize, Vec<Permutation>>> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("n must be positive")));
    }
    let mut out: BTreeMap<usize, Vec<Permutation>> = BTreeMap::new();
    for p in permutations(n)? {
        out.entry(p.length()).or_default().push(p);
    }
    Ok(out)
}
