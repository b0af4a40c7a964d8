//! Chung–Feller statistics, Montágh linearizations of integer cycles, Raney
//! sequences and the plane-tree encoding.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::cyclelemma::stronger_linearization;
use crate::error::{Error, Result};
use crate::seqcore::{enumerate_bitstrings, BitString, CyclicArrangement};

/// Largest `n` accepted by [`chung_feller_distribution`]; `C(24, 12)` words.
pub const MAX_CHUNG_FELLER_N: usize = 12;

/// Number of `i` for which the `i`-th `A` comes before the `i`-th `B`.
pub fn chung_feller_statistic(word: &str) -> Result<usize> {
    let mut a_pos = Vec::new();
    let mut b_pos = Vec::new();
    for (i, c) in word.chars().enumerate() {
        match c {
            'A' => a_pos.push(i),
            'B' => b_pos.push(i),
            _ => {
                return Err(Error::InvalidWord(
                    word.to_string(),
                    format!("unexpected {c:?}"),
                ))
            }
        }
    }
    if a_pos.len() != b_pos.len() {
        return Err(Error::InvalidWord(
            word.to_string(),
            format!("{} A's and {} B's", a_pos.len(), b_pos.len()),
        ));
    }
    Ok(a_pos.iter().zip(&b_pos).filter(|(a, b)| a < b).count())
}

/// Exhaustive distribution of the statistic over all words with `n` of each letter.
pub fn chung_feller_distribution(n: usize) -> Result<BTreeMap<usize, u64>> {
    if n > MAX_CHUNG_FELLER_N {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as i64,
            reason: format!("exhaustive sweep limited to n <= {MAX_CHUNG_FELLER_N}"),
        });
    }
    let mut dist: BTreeMap<usize, u64> = (0..=n).map(|l| (l, 0)).collect();
    for s in enumerate_bitstrings(n, n) {
        let word: String = s
            .bits()
            .iter()
            .map(|&b| if b { 'B' } else { 'A' })
            .collect();
        *dist.entry(chung_feller_statistic(&word)?).or_default() += 1;
    }
    Ok(dist)
}

/// A cyclic list of integers summing to +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerCycle(Vec<i64>);

impl IntegerCycle {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidCycle(String::new()));
        }
        let sum: i64 = values.iter().sum();
        if sum != 1 {
            return Err(Error::CycleSum(sum));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The values read starting at `start`.
    pub fn rotation(&self, start: usize) -> Vec<i64> {
        let n = self.0.len();
        (0..n).map(|i| self.0[(start + i) % n]).collect()
    }
}

impl FromStr for IntegerCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidCycle(s.to_string()))?;
        IntegerCycle::new(values)
    }
}

impl fmt::Display for IntegerCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn positive_partial_sums(values: &[i64]) -> usize {
    values
        .iter()
        .scan(0i64, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .filter(|&s| s > 0)
        .count()
}

/// Result of [`montagh_encode`]: the 0/1 arrangement, the run-ending zeros,
/// and for each cycle entry the index of the zero that ends its block.
#[derive(Debug, Clone)]
pub struct MontaghEncoding {
    pub arrangement: CyclicArrangement,
    pub run_ends: BTreeSet<usize>,
    pub block_ends: Vec<usize>,
}

/// Nonnegative `b` becomes `1 0^(1+b)`; negative `b` becomes `1^(1-b) 0`.
pub fn montagh_encode(c: &IntegerCycle) -> MontaghEncoding {
    let mut bits = Vec::new();
    let mut block_ends = Vec::with_capacity(c.len());
    for &b in c.values() {
        if b >= 0 {
            bits.push(true);
            bits.extend(std::iter::repeat_n(false, (1 + b) as usize));
        } else {
            bits.extend(std::iter::repeat_n(true, (1 - b) as usize));
            bits.push(false);
        }
        block_ends.push(bits.len() - 1);
    }
    MontaghEncoding {
        arrangement: CyclicArrangement::new(BitString::new(bits)),
        run_ends: block_ends.iter().copied().collect(),
        block_ends,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MontaghRotation {
    pub start: usize,
    pub values: Vec<i64>,
}

fn check_l(c: &IntegerCycle, l: usize) -> Result<()> {
    if l < 1 || l > c.len() {
        return Err(Error::OutOfRange {
            name: "l",
            value: l as i64,
            reason: format!("must lie in 1..={}", c.len()),
        });
    }
    Ok(())
}

/// The rotation of `c` with exactly `l` positive partial sums, found through
/// the 0/1 encoding and the run-end restricted cycle lemma.
pub fn montagh_linearization(c: &IntegerCycle, l: usize) -> Result<MontaghRotation> {
    check_l(c, l)?;
    let enc = montagh_encode(c);
    let report = stronger_linearization(&enc.arrangement, &enc.run_ends, l, 1)?;
    let block = enc
        .block_ends
        .iter()
        .position(|&e| e == report.cut)
        .expect("cut is a block end");
    let start = (block + 1) % c.len();
    let rotation = MontaghRotation {
        start,
        values: c.rotation(start),
    };
    debug_assert_eq!(
        Some(&rotation),
        montagh_linearization_by_scan(c, l)?.as_ref()
    );
    Ok(rotation)
}

/// Direct scan of all rotations; `None` if no rotation or several rotations
/// have exactly `l` positive partial sums.
pub fn montagh_linearization_by_scan(
    c: &IntegerCycle,
    l: usize,
) -> Result<Option<MontaghRotation>> {
    check_l(c, l)?;
    let hits: Vec<usize> = (0..c.len())
        .filter(|&s| positive_partial_sums(&c.rotation(s)) == l)
        .collect();
    Ok(match hits.as_slice() {
        [start] => Some(MontaghRotation {
            start: *start,
            values: c.rotation(*start),
        }),
        _ => None,
    })
}

/// Positive partial sums for the rotation starting at each index.
pub fn positive_sum_profile(c: &IntegerCycle) -> Vec<usize> {
    (0..c.len())
        .map(|s| positive_partial_sums(&c.rotation(s)))
        .collect()
}

/// Start index from which every partial sum is positive: the position after
/// the last minimum of the prefix sums over one period.
pub fn raney_start(c: &IntegerCycle) -> usize {
    let mut height = 0i64;
    let mut best = (0i64, 0usize);
    for (j, &v) in c.values().iter().enumerate() {
        // height is the prefix sum before element j
        if height <= best.0 {
            best = (height, j);
        }
        height += v;
    }
    best.1
}

/// A sequence over `{+1, -q}` whose partial sums are all positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RaneySequence {
    pub q: usize,
    pub terms: Vec<i64>,
}

impl fmt::Display for RaneySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// All q-Raney sequences with `k` terms equal to `-q`.
pub fn enumerate_raney(k: usize, q: usize) -> impl Iterator<Item = RaneySequence> {
    let minus = -(q as i64);
    enumerate_bitstrings(k, q * k + 1).filter_map(move |s| {
        let terms: Vec<i64> = s
            .bits()
            .iter()
            .map(|&b| if b { minus } else { 1 })
            .collect();
        (positive_partial_sums(&terms) == terms.len()).then_some(RaneySequence { q, terms })
    })
}

/// A rooted plane tree; internal nodes list their children left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PlaneTree {
    Leaf,
    Node(Vec<PlaneTree>),
}

impl PlaneTree {
    pub fn internal_count(&self) -> usize {
        match self {
            PlaneTree::Leaf => 0,
            PlaneTree::Node(ch) => 1 + ch.iter().map(PlaneTree::internal_count).sum::<usize>(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            PlaneTree::Leaf => 1,
            PlaneTree::Node(ch) => ch.iter().map(PlaneTree::leaf_count).sum(),
        }
    }

    /// Every internal node has exactly `q + 1` children.
    pub fn is_regular(&self, q: usize) -> bool {
        match self {
            PlaneTree::Leaf => true,
            PlaneTree::Node(ch) => ch.len() == q + 1 && ch.iter().all(|c| c.is_regular(q)),
        }
    }

    /// Bracketing with leaves labelled `a, b, c, ...` left to right.
    pub fn labelled(&self) -> String {
        fn walk(t: &PlaneTree, next: &mut u32, out: &mut String) {
            match t {
                PlaneTree::Leaf => {
                    out.push(char::from_u32('a' as u32 + *next % 26).expect("ascii"));
                    *next += 1;
                }
                PlaneTree::Node(ch) => {
                    out.push('(');
                    for c in ch {
                        walk(c, next, out);
                    }
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        walk(self, &mut 0, &mut out);
        out
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneTree::Leaf => f.write_str("·"),
            PlaneTree::Node(ch) => {
                f.write_str("(")?;
                for c in ch {
                    c.fmt(f)?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTree(s.to_string());
        let mut stack: Vec<Vec<PlaneTree>> = vec![Vec::new()];
        for c in s.chars() {
            match c {
                '·' => stack.last_mut().ok_or_else(bad)?.push(PlaneTree::Leaf),
                '(' => stack.push(Vec::new()),
                ')' => {
                    let children = stack.pop().ok_or_else(bad)?;
                    if children.is_empty() {
                        return Err(bad());
                    }
                    stack
                        .last_mut()
                        .ok_or_else(bad)?
                        .push(PlaneTree::Node(children));
                }
                _ => return Err(bad()),
            }
        }
        match stack.pop() {
            Some(mut top) if stack.is_empty() && top.len() == 1 => Ok(top.pop().expect("one")),
            _ => Err(bad()),
        }
    }
}

/// All plane trees with `n` internal nodes, each with `q + 1` children.
pub fn enumerate_plane_trees(n: usize, q: usize) -> Vec<PlaneTree> {
    let mut memo: Vec<Vec<PlaneTree>> = vec![vec![PlaneTree::Leaf]];
    for size in 1..=n {
        let mut trees = Vec::new();
        // distribute size - 1 internal nodes over q + 1 children
        let mut forests: Vec<(usize, Vec<PlaneTree>)> = vec![(0, Vec::new())];
        for _ in 0..=q {
            let mut next = Vec::new();
            for (used, forest) in &forests {
                for (part, sized) in memo.iter().enumerate().take(size - used) {
                    for t in sized {
                        let mut f = forest.clone();
                        f.push(t.clone());
                        next.push((used + part, f));
                    }
                }
            }
            forests = next;
        }
        for (used, forest) in forests {
            if used == size - 1 {
                trees.push(PlaneTree::Node(forest));
            }
        }
        memo.push(trees);
    }
    memo.swap_remove(n)
}

/// Postorder reading: 0 for each leaf, 1 when an internal node's subtree is finished.
pub fn tree_to_sequence(t: &PlaneTree) -> BitString {
    fn walk(t: &PlaneTree, out: &mut BitString) {
        match t {
            PlaneTree::Leaf => out.push(false),
            PlaneTree::Node(ch) => {
                for c in ch {
                    walk(c, out);
                }
                out.push(true);
            }
        }
    }
    let mut out = BitString::default();
    walk(t, &mut out);
    out
}

/// Stack evaluation: a 0 pushes a leaf, a 1 pops `q + 1` trees and pushes
/// their parent.
pub fn sequence_to_tree(s: &BitString, q: usize) -> Result<PlaneTree> {
    let mut stack: Vec<PlaneTree> = Vec::new();
    for (i, &bit) in s.bits().iter().enumerate() {
        if bit {
            if stack.len() < q + 1 {
                return Err(Error::NotATree(format!(
                    "marker at index {i} needs {} items, stack holds {}",
                    q + 1,
                    stack.len()
                )));
            }
            let children = stack.split_off(stack.len() - (q + 1));
            stack.push(PlaneTree::Node(children));
        } else {
            stack.push(PlaneTree::Leaf);
        }
    }
    if stack.len() != 1 {
        return Err(Error::NotATree(format!(
            "{} items remain after evaluation",
            stack.len()
        )));
    }
    Ok(stack.pop().expect("one item"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::generalized_catalan;

    fn cycle(s: &str) -> IntegerCycle {
        s.parse().unwrap()
    }

    fn nine_term_cycle() -> IntegerCycle {
        cycle("2,-1,2,-5,3,-2,1,-2,3")
    }

    #[test]
    fn chung_feller_statistic_examples() {
        assert_eq!(chung_feller_statistic("AABB").unwrap(), 2);
        assert_eq!(chung_feller_statistic("BBAA").unwrap(), 0);
        assert_eq!(chung_feller_statistic("ABBA").unwrap(), 1);
        assert!(chung_feller_statistic("AAB").is_err());
        assert!(chung_feller_statistic("ABC").is_err());
    }

    #[test]
    fn chung_feller_distribution_examples() {
        let d = chung_feller_distribution(2).unwrap();
        assert_eq!(d, BTreeMap::from([(0, 2), (1, 2), (2, 2)]));
        let d = chung_feller_distribution(1).unwrap();
        assert_eq!(d, BTreeMap::from([(0, 1), (1, 1)]));
        let d = chung_feller_distribution(4).unwrap();
        assert!(d.values().all(|&v| v == 14));
        assert!(chung_feller_distribution(MAX_CHUNG_FELLER_N + 1).is_err());
    }

    #[test]
    fn integer_cycle_parse() {
        assert_eq!(nine_term_cycle().to_string(), "2,-1,2,-5,3,-2,1,-2,3");
        assert_eq!("1,1".parse::<IntegerCycle>(), Err(Error::CycleSum(2)));
        assert!("1,x".parse::<IntegerCycle>().is_err());
    }

    #[test]
    fn montagh_encode_examples() {
        let enc = montagh_encode(&nine_term_cycle());
        assert_eq!((enc.arrangement.ones(), enc.arrangement.zeros()), (19, 20));
        assert_eq!(enc.run_ends.len(), 9);

        let enc = montagh_encode(&cycle("1"));
        assert_eq!(enc.arrangement.representative().to_string(), "100");
        assert_eq!(enc.run_ends, BTreeSet::from([2]));

        let enc = montagh_encode(&cycle("0,1,0"));
        assert_eq!((enc.arrangement.ones(), enc.arrangement.zeros()), (3, 4));

        // run ends are exactly the zeros followed by a 1
        let enc = montagh_encode(&nine_term_cycle());
        let a = &enc.arrangement;
        let ends: BTreeSet<usize> = a
            .zero_positions()
            .into_iter()
            .filter(|&i| a.bit(i + 1))
            .collect();
        assert_eq!(ends, enc.run_ends);
    }

    #[test]
    fn nine_term_cycle_rows() {
        let c = nine_term_cycle();
        let rows = [
            (5, "2,-1,2,-5,3,-2,1,-2,3"),
            (2, "-1,2,-5,3,-2,1,-2,3,2"),
            (3, "2,-5,3,-2,1,-2,3,2,-1"),
            (1, "-5,3,-2,1,-2,3,2,-1,2"),
            (8, "3,-2,1,-2,3,2,-1,2,-5"),
            (4, "-2,1,-2,3,2,-1,2,-5,3"),
            (7, "1,-2,3,2,-1,2,-5,3,-2"),
            (6, "-2,3,2,-1,2,-5,3,-2,1"),
            (9, "3,2,-1,2,-5,3,-2,1,-2"),
        ];
        for (start, (l, row)) in rows.iter().enumerate() {
            let rot = montagh_linearization(&c, *l).unwrap();
            assert_eq!(rot.start, start);
            let want: Vec<i64> = row.split(',').map(|v| v.parse().unwrap()).collect();
            assert_eq!(rot.values, want);
        }
        assert!(montagh_linearization(&c, 0).is_err());
        assert!(montagh_linearization(&c, 10).is_err());
    }

    #[test]
    fn raney_start_examples() {
        assert_eq!(raney_start(&nine_term_cycle()), 8);
        assert_eq!(raney_start(&cycle("1")), 0);
        let c = cycle("-1,1,1");
        assert_eq!(c.rotation(raney_start(&c)), vec![1, 1, -1]);
    }

    #[test]
    fn raney_enumeration_examples() {
        let v: Vec<Vec<i64>> = enumerate_raney(2, 1).map(|r| r.terms).collect();
        assert_eq!(v.len(), 2);
        assert!(v.contains(&vec![1, 1, 1, -1, -1]));
        assert!(v.contains(&vec![1, 1, -1, 1, -1]));
        let v: Vec<_> = enumerate_raney(0, 3).collect();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].terms, vec![1]);
        assert_eq!(enumerate_raney(2, 2).count(), 3);
    }

    #[test]
    fn plane_tree_examples() {
        let trees = enumerate_plane_trees(2, 2);
        assert_eq!(trees.len(), 3);
        let labels: BTreeSet<String> = trees.iter().map(PlaneTree::labelled).collect();
        assert_eq!(
            labels,
            BTreeSet::from(["((abc)de)".into(), "(a(bcd)e)".into(), "(ab(cde))".into()])
        );
        assert_eq!(enumerate_plane_trees(0, 3), vec![PlaneTree::Leaf]);
        assert_eq!(enumerate_plane_trees(3, 1).len(), 5);
        for t in enumerate_plane_trees(3, 2) {
            assert!(t.is_regular(2));
            assert_eq!(t.leaf_count(), 2 * t.internal_count() + 1);
        }
        assert_eq!(
            enumerate_plane_trees(4, 2).len() as u64,
            generalized_catalan(4, 2).to_u64().unwrap()
        );
    }

    #[test]
    fn ternary_tree_encodings() {
        for (label, bits) in [
            ("((abc)de)", "0001001"),
            ("(a(bcd)e)", "0000101"),
            ("(ab(cde))", "0000011"),
        ] {
            let s: BitString = bits.parse().unwrap();
            let t = sequence_to_tree(&s, 2).unwrap();
            assert_eq!(t.labelled(), label);
            assert_eq!(tree_to_sequence(&t), s);
        }
        assert_eq!(
            sequence_to_tree(&"0".parse().unwrap(), 4).unwrap(),
            PlaneTree::Leaf
        );
    }

    #[test]
    fn sequence_to_tree_rejects() {
        assert!(sequence_to_tree(&"001".parse().unwrap(), 2).is_err());
        assert!(sequence_to_tree(&"00".parse().unwrap(), 1).is_err());
        assert!(sequence_to_tree(&"".parse().unwrap(), 1).is_err());
    }

    #[test]
    fn tree_text_round_trip() {
        for t in enumerate_plane_trees(3, 2) {
            let text = t.to_string();
            assert_eq!(text.parse::<PlaneTree>().unwrap(), t);
        }
        assert_eq!("(···)".parse::<PlaneTree>().unwrap().internal_count(), 1);
        assert!("(··".parse::<PlaneTree>().is_err());
        assert!("()".parse::<PlaneTree>().is_err());
        assert!("··".parse::<PlaneTree>().is_err());
    }
}
