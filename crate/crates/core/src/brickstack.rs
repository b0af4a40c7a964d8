//! Brick stacks over a linear base and their bijection with q-satisfying strings.
//!
//! A brick has length `q + 1` and occupies the half-open span
//! `[start, start + q + 1)`. Row 0 of [`BrickStack::rows`] sits on the base.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::{is_q_dominating, is_q_satisfying, prefix_counts, BitString};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrickStack {
    pub q: usize,
    pub m: usize,
    pub rows: Vec<Vec<usize>>,
}

impl BrickStack {
    /// Sorts every row and drops empty rows at the top.
    pub fn new(q: usize, m: usize, mut rows: Vec<Vec<usize>>) -> Self {
        for row in &mut rows {
            row.sort_unstable();
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Self { q, m, rows }
    }

    pub fn empty(q: usize, m: usize) -> Self {
        Self {
            q,
            m,
            rows: Vec::new(),
        }
    }

    pub fn brick_len(&self) -> usize {
        self.q + 1
    }

    /// Bricks resting directly on the base.
    pub fn base_bricks(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn brick_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn covers_first_space(&self) -> bool {
        self.rows.first().is_some_and(|r| r.first() == Some(&0))
    }

    fn shifted(&self, delta: isize, m: usize) -> BrickStack {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&s| (s as isize + delta) as usize).collect())
            .collect();
        BrickStack::new(self.q, m, rows)
    }

    /// Bricks starting before `cut`, on a base of length `cut`.
    pub(crate) fn prefix(&self, cut: usize) -> BrickStack {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&s| s < cut).collect())
            .collect();
        BrickStack::new(self.q, cut, rows)
    }

    /// Bricks starting at or after `cut`, moved onto a base of length `m - cut`.
    pub(crate) fn suffix(&self, cut: usize) -> BrickStack {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|&&s| s >= cut)
                    .map(|&s| s - cut)
                    .collect()
            })
            .collect();
        BrickStack::new(self.q, self.m - cut, rows)
    }

    /// Side-by-side union of two stacks with equal `q`.
    fn beside(&self, right: &BrickStack) -> BrickStack {
        let height = self.rows.len().max(right.rows.len());
        let rows = (0..height)
            .map(|r| {
                let mut row: Vec<usize> = self.rows.get(r).cloned().unwrap_or_default();
                row.extend(right.rows.get(r).into_iter().flatten().map(|&s| s + self.m));
                row
            })
            .collect();
        BrickStack::new(self.q, self.m + right.m, rows)
    }

    /// End of the chain of base bricks starting at 0 whose junctions are all
    /// covered from above; `None` when the first space is uncovered.
    fn mound_end(&self) -> Option<usize> {
        if !self.covers_first_space() {
            return None;
        }
        let len = self.brick_len();
        let base = &self.rows[0];
        let second: &[usize] = self.rows.get(1).map_or(&[], Vec::as_slice);
        let mut end = len;
        loop {
            let next_on_base = base.binary_search(&end).is_ok();
            let junction_covered = second.iter().any(|&u| u < end && end < u + len);
            if next_on_base && junction_covered {
                end += len;
            } else {
                return Some(end);
            }
        }
    }
}

impl fmt::Display for BrickStack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={};m={};rows=", self.q, self.m)?;
        if self.rows.is_empty() {
            return f.write_str("[]");
        }
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for BrickStack {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidStackText(s.to_string(), why.to_string());
        let mut parts = s.trim().splitn(3, ';');
        let q = parts
            .next()
            .and_then(|p| p.strip_prefix("q="))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| bad("expected q=<int>"))?;
        let m = parts
            .next()
            .and_then(|p| p.strip_prefix("m="))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| bad("expected m=<int>"))?;
        let mut body = parts
            .next()
            .and_then(|p| p.strip_prefix("rows="))
            .ok_or_else(|| bad("expected rows=[...]"))?;
        let mut rows = Vec::new();
        while !body.is_empty() {
            let inner = body.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let close = inner.find(']').ok_or_else(|| bad("unclosed '['"))?;
            let row = if inner[..close].is_empty() {
                Vec::new()
            } else {
                inner[..close]
                    .split(',')
                    .map(|v| v.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("row entries must be nonnegative integers"))?
            };
            rows.push(row);
            body = &inner[close + 1..];
        }
        Ok(BrickStack::new(q, m, rows))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BadParameters {
        q: usize,
        m: usize,
    },
    OutsideBase {
        row: usize,
        start: usize,
    },
    Overlap {
        row: usize,
        left: usize,
        right: usize,
    },
    Unsupported {
        row: usize,
        start: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // rows are reported 1-based, counting up from the base
        match self {
            Violation::BadParameters { q, m } => {
                write!(f, "q={q} and m={m} must both be positive")
            }
            Violation::OutsideBase { row, start } => {
                write!(
                    f,
                    "row {} brick at {start} does not fit on the base",
                    row + 1
                )
            }
            Violation::Overlap { row, left, right } => {
                write!(f, "row {} bricks at {left} and {right} overlap", row + 1)
            }
            Violation::Unsupported { row, start } => write!(
                f,
                "row {} brick at {start} does not rest on two contiguous bricks of row {}",
                row + 1,
                row
            ),
        }
    }
}

pub fn validate(s: &BrickStack) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if s.q == 0 || s.m == 0 {
        out.push(Violation::BadParameters { q: s.q, m: s.m });
        return Err(out);
    }
    let len = s.brick_len();
    for (r, row) in s.rows.iter().enumerate() {
        let mut sorted = row.clone();
        sorted.sort_unstable();
        for &start in &sorted {
            if start + len > s.m {
                out.push(Violation::OutsideBase { row: r, start });
            }
        }
        for w in sorted.windows(2) {
            if w[0] + len > w[1] {
                out.push(Violation::Overlap {
                    row: r,
                    left: w[0],
                    right: w[1],
                });
            }
        }
        if r == 0 {
            continue;
        }
        let below = &s.rows[r - 1];
        for &start in &sorted {
            let rests = (1..=s.q).any(|a| {
                let junction = start + a;
                junction >= len && below.contains(&junction) && below.contains(&(junction - len))
            });
            if !rests {
                out.push(Violation::Unsupported { row: r, start });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn require_valid(s: &BrickStack) -> Result<()> {
    validate(s).map_err(|v| {
        let msgs: Vec<String> = v.iter().map(Violation::to_string).collect();
        Error::InvalidStack(msgs.join("; "))
    })
}

fn junctions(row: &[usize], len: usize) -> Vec<usize> {
    row.windows(2)
        .filter(|w| w[0] + len == w[1])
        .map(|w| w[1])
        .collect()
}

/// Every way to place a row over `junctions`: each junction gets no brick or
/// one brick with overhang `a` in `1..=q`, without overlaps.
fn upper_rows(junctions: &[usize], q: usize) -> Vec<Vec<usize>> {
    fn go(
        junctions: &[usize],
        q: usize,
        free_from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some((&x, rest)) = junctions.split_first() else {
            out.push(current.clone());
            return;
        };
        go(rest, q, free_from, current, out);
        for a in (1..=q).rev() {
            let start = x - a;
            if start >= free_from {
                current.push(start);
                go(rest, q, start + q + 1, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(junctions, q, 0, &mut Vec::new(), &mut out);
    out
}

fn extend_upward(rows: &mut Vec<Vec<usize>>, q: usize, m: usize, out: &mut Vec<BrickStack>) {
    let top = rows.last().expect("at least one row");
    let choices = upper_rows(&junctions(top, q + 1), q);
    for upper in choices {
        if upper.is_empty() {
            out.push(BrickStack::new(q, m, rows.clone()));
        } else {
            rows.push(upper);
            extend_upward(rows, q, m, out);
            rows.pop();
        }
    }
}

fn base_rows(m: usize, len: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(
        from: usize,
        m: usize,
        len: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let mut s = from;
        while s + left * len <= m {
            cur.push(s);
            go(s + len, m, len, left - 1, cur, out);
            cur.pop();
            s += 1;
        }
    }
    let mut out = Vec::new();
    go(0, m, len, n, &mut Vec::new(), &mut out);
    out
}

/// Every q-stack on a base of length `m`, the empty stack first, then by
/// number of base bricks, base positions and upper rows.
pub fn enumerate_stacks(m: usize, q: usize) -> Vec<BrickStack> {
    let len = q + 1;
    let mut out = Vec::new();
    for n in 0..=m / len {
        for base in base_rows(m, len, n) {
            if base.is_empty() {
                out.push(BrickStack::empty(q, m));
                continue;
            }
            let mut rows = vec![base];
            extend_upward(&mut rows, q, m, &mut out);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Flat,
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Silhouette {
    pub steps: Vec<Step>,
}

impl Silhouette {
    /// 0 for up or flat, 1 for down.
    pub fn to_bits(&self) -> BitString {
        BitString::new(self.steps.iter().map(|&s| s == Step::Down).collect())
    }
}

/// Outline height at each integer coordinate `0..=m` after shaving every
/// brick into a trapezoid.
fn outline_heights(s: &BrickStack) -> Vec<usize> {
    let len = s.brick_len();
    let mut h = vec![0usize; s.m + 1];
    for (r, row) in s.rows.iter().enumerate() {
        for &start in row {
            for (x, slot) in h.iter_mut().enumerate().skip(start).take(len + 1) {
                let v = if x == start || x == start + len {
                    r
                } else {
                    r + 1
                };
                *slot = (*slot).max(v);
            }
        }
    }
    h
}

pub fn silhouette(s: &BrickStack) -> Result<Silhouette> {
    require_valid(s)?;
    let h = outline_heights(s);
    let steps = h
        .windows(2)
        .map(|w| match w[1].cmp(&w[0]) {
            std::cmp::Ordering::Greater => Step::Up,
            std::cmp::Ordering::Equal => Step::Flat,
            std::cmp::Ordering::Less => Step::Down,
        })
        .collect();
    Ok(Silhouette { steps })
}

/// First positive coordinate where the shaved outline is back on the base.
pub fn first_return(s: &BrickStack) -> Result<Option<usize>> {
    require_valid(s)?;
    if !s.covers_first_space() {
        return Ok(None);
    }
    let h = outline_heights(s);
    Ok((1..=s.m).find(|&x| h[x] == 0))
}

fn encode(s: &BrickStack) -> BitString {
    if s.m == 0 {
        return BitString::default();
    }
    let Some(end) = s.mound_end() else {
        let mut out = BitString::new(vec![false]);
        out = out.concat(&encode(&s.shifted(-1, s.m - 1)));
        return out;
    };
    if end < s.m {
        return encode(&s.prefix(end)).concat(&encode(&s.suffix(end)));
    }
    let inner = BrickStack::new(s.q, s.m - 2, s.rows[1..].to_vec()).shifted(-1, s.m - 2);
    let mut out = BitString::new(vec![false]).concat(&encode(&inner));
    out.push(true);
    out
}

/// The string read off the stack outline, computed by splitting the stack at
/// its first return to the base.
pub fn stack_to_sequence(s: &BrickStack) -> Result<BitString> {
    require_valid(s)?;
    Ok(encode(s))
}

/// The same string read directly from the shaved outline.
pub fn stack_to_sequence_by_silhouette(s: &BrickStack) -> Result<BitString> {
    Ok(silhouette(s)?.to_bits())
}

fn decode(b: &BitString, q: usize) -> BrickStack {
    let m = b.len();
    if m == 0 {
        return BrickStack::empty(q, 0);
    }
    if is_q_dominating(b, q) {
        return decode(&b.slice(1..m), q).shifted(1, m);
    }
    let shortest = prefix_counts(b)
        .iter()
        .position(|&(z, o)| z == q * o)
        .expect("non-dominating satisfying string has a ballot prefix")
        + 1;
    if shortest < m {
        return decode(&b.slice(0..shortest), q).beside(&decode(&b.slice(shortest..m), q));
    }
    let len = q + 1;
    let inner = decode(&b.slice(1..m - 1), q).shifted(1, m);
    let mut rows = vec![(0..m / len).map(|i| i * len).collect::<Vec<_>>()];
    rows.extend(inner.rows);
    BrickStack::new(q, m, rows)
}

/// Inverse of [`stack_to_sequence`].
pub fn sequence_to_stack(b: &BitString, q: usize) -> Result<BrickStack> {
    if q == 0 {
        return Err(Error::OutOfRange {
            name: "q",
            value: 0,
            reason: "bricks need q >= 1".into(),
        });
    }
    if b.is_empty() {
        return Err(Error::Precondition("base length must be positive".into()));
    }
    if !is_q_satisfying(b, q) {
        return Err(Error::NotSatisfying(q));
    }
    Ok(decode(b, q))
}

/// Fixed-width drawing, top row first, base line last. Rectangular bricks
/// are `[==]`; shaved bricks are `/__\`.
pub fn render_ascii(s: &BrickStack, shaved: bool) -> Result<String> {
    require_valid(s)?;
    let len = s.brick_len();
    let glyph: Vec<char> = if shaved {
        std::iter::once('/')
            .chain(std::iter::repeat_n('_', len - 2))
            .chain(std::iter::once('\\'))
            .collect()
    } else {
        std::iter::once('[')
            .chain(std::iter::repeat_n('=', len - 2))
            .chain(std::iter::once(']'))
            .collect()
    };
    let mut lines = Vec::new();
    for row in s.rows.iter().rev() {
        let mut line = vec![' '; s.m];
        for &start in row {
            line[start..start + len].copy_from_slice(&glyph);
        }
        lines.push(line.into_iter().collect::<String>());
    }
    lines.push("-".repeat(s.m));
    Ok(lines.join("\n") + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_q_stacks;

    fn stack(s: &str) -> BrickStack {
        s.parse().unwrap()
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn twelve_unit_stack() -> BrickStack {
        stack("q=2;m=12;rows=[0,3,7][1]")
    }

    #[test]
    fn text_form() {
        assert_eq!(twelve_unit_stack().to_string(), "q=2;m=12;rows=[0,3,7][1]");
        assert_eq!(stack("q=1;m=3;rows=[]").to_string(), "q=1;m=3;rows=[]");
        assert_eq!(stack("q=1;m=3;rows=").rows, Vec::<Vec<usize>>::new());
        assert_eq!(
            stack("q=1;m=4;rows=[2,0][]").to_string(),
            "q=1;m=4;rows=[0,2]"
        );
        assert_eq!(stack("q=1;m=4;rows=[][0]").rows, vec![vec![], vec![0]]);
        assert!("q=1;rows=[]".parse::<BrickStack>().is_err());
        assert!("q=1;m=4;rows=[0".parse::<BrickStack>().is_err());
        assert!("q=1;m=4;rows=[a]".parse::<BrickStack>().is_err());
    }

    #[test]
    fn json_form() {
        let s = twelve_unit_stack();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"q":2,"m":12,"rows":[[0,3,7],[1]]}"#);
        assert_eq!(serde_json::from_str::<BrickStack>(&json).unwrap(), s);
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&BrickStack::empty(1, 5)).is_ok());
        assert!(validate(&stack("q=1;m=4;rows=[0,2][1]")).is_ok());
        let err = validate(&stack("q=1;m=4;rows=[0][1]")).unwrap_err();
        assert_eq!(err, vec![Violation::Unsupported { row: 1, start: 1 }]);
        assert!(err[0].to_string().contains("row 2 brick at 1"));
        assert!(validate(&stack("q=1;m=4;rows=[][0]")).is_err());
        assert_eq!(
            validate(&stack("q=1;m=4;rows=[3]")).unwrap_err(),
            vec![Violation::OutsideBase { row: 0, start: 3 }]
        );
        assert_eq!(
            validate(&stack("q=2;m=6;rows=[0,2]")).unwrap_err(),
            vec![Violation::Overlap {
                row: 0,
                left: 0,
                right: 2
            }]
        );
        // overhang a = q+1 would rest on one brick only
        assert!(validate(&stack("q=2;m=6;rows=[0,3][0]")).is_err());
        assert!(validate(&stack("q=2;m=6;rows=[0,3][1]")).is_ok());
        assert!(validate(&stack("q=2;m=6;rows=[0,3][2]")).is_ok());
        // two upper bricks over adjacent junctions may touch, not overlap
        assert!(validate(&stack("q=2;m=9;rows=[0,3,6][1,4]")).is_ok());
        assert!(validate(&stack("q=2;m=9;rows=[0,3,6][2,4]")).is_err());
        assert!(validate(&BrickStack::empty(0, 3)).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let all = enumerate_stacks(4, 1);
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().filter(|s| s.brick_count() > 0).count(), 5);
        assert_eq!(enumerate_stacks(6, 2).len(), 8);
        assert_eq!(
            enumerate_stacks(9, 2)
                .iter()
                .filter(|s| s.base_bricks() == 3)
                .count(),
            12
        );
        assert_eq!(enumerate_stacks(1, 1), vec![BrickStack::empty(1, 1)]);
        for s in enumerate_stacks(8, 1) {
            assert!(validate(&s).is_ok(), "{s}");
        }
    }

    #[test]
    fn enumerate_matches_formula_small() {
        for q in 1..=2 {
            for m in 1..=8 {
                let all = enumerate_stacks(m, q);
                for n in 0..=m / (q + 1) {
                    let got = all.iter().filter(|s| s.base_bricks() == n).count() as u64;
                    assert_eq!(count_q_stacks(m as u64, n as u64, q as u64), got);
                }
            }
        }
    }

    #[test]
    fn silhouette_examples() {
        let one = stack("q=2;m=3;rows=[0]");
        assert_eq!(
            silhouette(&one).unwrap().steps,
            vec![Step::Up, Step::Flat, Step::Down]
        );
        assert_eq!(
            silhouette(&BrickStack::empty(1, 3)).unwrap().steps,
            vec![Step::Flat; 3]
        );
        assert_eq!(
            silhouette(&twelve_unit_stack()).unwrap().to_bits(),
            bs("000101000100")
        );
        assert!(silhouette(&stack("q=1;m=4;rows=[0][1]")).is_err());
    }

    #[test]
    fn stack_to_sequence_examples() {
        assert_eq!(
            stack_to_sequence(&twelve_unit_stack()).unwrap(),
            bs("000101000100")
        );
        assert_eq!(
            stack_to_sequence(&BrickStack::empty(2, 5)).unwrap(),
            bs("00000")
        );
        let tall = sequence_to_stack(&bs("000000111"), 2).unwrap();
        assert_eq!(
            tall.rows.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![3, 2, 1]
        );
        assert_eq!(tall.to_string(), "q=2;m=9;rows=[0,3,6][2,5][4]");
        assert_eq!(stack_to_sequence(&tall).unwrap(), bs("000000111"));
    }

    #[test]
    fn sequence_to_stack_examples() {
        assert_eq!(
            sequence_to_stack(&bs("000101000100"), 2).unwrap(),
            twelve_unit_stack()
        );
        assert_eq!(
            sequence_to_stack(&bs("0000"), 3).unwrap(),
            BrickStack::empty(3, 4)
        );
        assert_eq!(
            sequence_to_stack(&bs("110"), 1),
            Err(Error::NotSatisfying(1))
        );
        assert!(sequence_to_stack(&bs("0"), 0).is_err());
    }

    #[test]
    fn first_return_examples() {
        assert_eq!(first_return(&twelve_unit_stack()).unwrap(), Some(6));
        for q in 1..4 {
            let s = BrickStack::new(q, 2 * q + 3, vec![vec![0]]);
            assert_eq!(first_return(&s).unwrap(), Some(q + 1));
        }
        let mound = stack("q=2;m=9;rows=[0,3,6][1,4][2]");
        assert_eq!(first_return(&mound).unwrap(), Some(9));
        assert_eq!(first_return(&stack("q=1;m=4;rows=[1]")).unwrap(), None);
    }

    #[test]
    fn mound_end_matches_first_return() {
        for q in 1..=3 {
            for m in 1..=9 {
                for s in enumerate_stacks(m, q) {
                    assert_eq!(s.mound_end(), first_return(&s).unwrap(), "{s}");
                }
            }
        }
    }

    #[test]
    fn render_examples() {
        assert_eq!(
            render_ascii(&BrickStack::empty(1, 5), false).unwrap(),
            "-----\n"
        );
        assert_eq!(
            render_ascii(&stack("q=1;m=2;rows=[0]"), false).unwrap(),
            "[]\n--\n"
        );
        assert_eq!(
            render_ascii(&stack("q=1;m=2;rows=[0]"), true).unwrap(),
            "/\\\n--\n"
        );
        let drawing = render_ascii(&twelve_unit_stack(), false).unwrap();
        assert_eq!(drawing, " [=]        \n[=][=] [=]  \n------------\n");
        let shaved = render_ascii(&twelve_unit_stack(), true).unwrap();
        assert_eq!(shaved, " /_\\        \n/_\\/_\\ /_\\  \n------------\n");
        assert!(render_ascii(&stack("q=1;m=4;rows=[][0]"), false).is_err());
    }
}
