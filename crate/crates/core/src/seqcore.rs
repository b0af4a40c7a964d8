//! 0/1 sequences, cyclic arrangements and the prefix predicates built on them.
//!
//! A `true` bit is a 1. Indices are 0-based throughout.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn zeros_only(len: usize) -> Self {
        Self(vec![false; len])
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.0.len() - self.ones()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn insert(&mut self, index: usize, bit: bool) {
        self.0.insert(index, bit);
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BitString(bits)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> BitString {
        BitString(self.0[range].to_vec())
    }

    pub fn ends_with_zero(&self) -> bool {
        self.0.last() == Some(&false)
    }
}

impl From<Vec<bool>> for BitString {
    fn from(bits: Vec<bool>) -> Self {
        Self(bits)
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidBits(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

/// Running `(zeros, ones)` after each bit.
pub fn prefix_counts(s: &BitString) -> Vec<(usize, usize)> {
    let (mut zeros, mut ones) = (0, 0);
    s.bits()
        .iter()
        .map(|&b| {
            if b {
                ones += 1;
            } else {
                zeros += 1;
            }
            (zeros, ones)
        })
        .collect()
}

/// Every nonempty prefix has more than `q` zeros per one.
pub fn is_q_dominating(s: &BitString, q: usize) -> bool {
    prefix_counts(s).into_iter().all(|(z, o)| z > q * o)
}

/// Every prefix has at least `q` zeros per one.
pub fn is_q_satisfying(s: &BitString, q: usize) -> bool {
    prefix_counts(s).into_iter().all(|(z, o)| z >= q * o)
}

pub fn is_q_ballot(s: &BitString, q: usize) -> bool {
    s.zeros() == q * s.ones() && is_q_satisfying(s, q)
}

/// Index of the lexicographically least rotation start.
fn least_rotation_start(bits: &[bool]) -> usize {
    let n = bits.len();
    (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|i| bits[(a + i) % n])
                .cmp((0..n).map(|i| bits[(b + i) % n]))
        })
        .unwrap_or(0)
}

fn rotate_left(bits: &[bool], by: usize) -> Vec<bool> {
    let n = bits.len();
    (0..n).map(|i| bits[(by + i) % n]).collect()
}

/// A cyclic 0/1 arrangement with a fixed reading direction.
///
/// The stored representative is kept as given so that indices supplied by
/// callers stay meaningful; equality and hashing go through the
/// lexicographically least rotation.
#[derive(Clone)]
pub struct CyclicArrangement {
    bits: Vec<bool>,
}

impl CyclicArrangement {
    pub fn new(bits: impl Into<BitString>) -> Self {
        Self {
            bits: bits.into().into_bits(),
        }
    }

    pub fn canonical(&self) -> CyclicArrangement {
        let start = least_rotation_start(&self.bits);
        Self {
            bits: rotate_left(&self.bits, start),
        }
    }

    pub fn is_canonical(&self) -> bool {
        least_rotation_start(&self.bits) == 0
    }

    /// Blocked arrangement: all ones together followed by all zeros.
    pub fn blocked(ones: usize, zeros: usize) -> Self {
        let mut bits = vec![true; ones];
        bits.extend(std::iter::repeat_n(false, zeros));
        Self { bits }
    }

    pub fn representative(&self) -> BitString {
        BitString(self.bits.clone())
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at `i` modulo the length.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i % self.bits.len()]
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.bits.len() - self.ones()
    }

    pub fn zero_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.bits[i]).collect()
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                len: self.len(),
            })
        }
    }

    /// `p` such that the arrangement has `q*ones + p` zeros, if nonnegative.
    pub fn excess(&self, q: usize) -> Option<usize> {
        self.zeros().checked_sub(q * self.ones())
    }
}

impl PartialEq for CyclicArrangement {
    fn eq(&self, other: &Self) -> bool {
        self.bits.len() == other.bits.len() && self.canonical().bits == other.canonical().bits
    }
}

impl Eq for CyclicArrangement {}

impl Hash for CyclicArrangement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().bits.hash(state);
    }
}

impl FromStr for CyclicArrangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix("cyc:")
            .ok_or_else(|| Error::InvalidArrangement(s.to_string()))?;
        let bits: BitString = body
            .parse()
            .map_err(|_| Error::InvalidArrangement(s.to_string()))?;
        Ok(CyclicArrangement::new(bits).canonical())
    }
}

impl fmt::Display for CyclicArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc:{}", BitString(self.bits.clone()))
    }
}

impl fmt::Debug for CyclicArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicArrangement({self})")
    }
}

/// The list `(start, end]` of a cyclic arrangement. `(r, r]` is the whole cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalRef {
    pub start: usize,
    pub end: usize,
}

impl IntervalRef {
    pub fn new(start: usize, end: usize) -> Self {
        Self { start, end }
    }

    pub fn full(at: usize) -> Self {
        Self { start: at, end: at }
    }

    pub fn len(&self, n: usize) -> usize {
        if self.start % n == self.end % n {
            n
        } else {
            (self.end + n - self.start % n) % n
        }
    }

    /// Indices covered, in reading order.
    pub fn positions(&self, n: usize) -> impl Iterator<Item = usize> {
        let start = self.start;
        (1..=self.len(n)).map(move |d| (start + d) % n)
    }
}

/// `q * ones - zeros` over an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Deficiency(pub i64);

impl Deficiency {
    pub fn value(self) -> i64 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl std::ops::Add for Deficiency {
    type Output = Deficiency;

    fn add(self, rhs: Self) -> Self {
        Deficiency(self.0 + rhs.0)
    }
}

pub fn deficiency(a: &CyclicArrangement, interval: IntervalRef, q: usize) -> Result<Deficiency> {
    a.check_index(interval.start)?;
    a.check_index(interval.end)?;
    let q = q as i64;
    let value = interval
        .positions(a.len())
        .map(|i| if a.bit(i) { q } else { -1 })
        .sum();
    Ok(Deficiency(value))
}

/// Ends of the q-good 0-intervals of the linearization `(r, r]`, optionally
/// restricted to the positions in `restrict`.
pub fn good_zero_set(
    a: &CyclicArrangement,
    r: usize,
    q: usize,
    restrict: Option<&BTreeSet<usize>>,
) -> Result<BTreeSet<usize>> {
    a.check_index(r)?;
    if a.bit(r) {
        return Err(Error::NotAZero(r));
    }
    if let Some(set) = restrict {
        if let Some(&bad) = set.iter().find(|&&j| j >= a.len() || a.bit(j)) {
            if bad >= a.len() {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    len: a.len(),
                });
            }
            return Err(Error::NotAZero(bad));
        }
        if !set.contains(&r) {
            return Err(Error::CutNotInSet(r));
        }
    }
    let q = q as i64;
    let mut running = 0i64;
    let mut good = BTreeSet::new();
    for j in IntervalRef::full(r).positions(a.len()) {
        if a.bit(j) {
            running += q;
        } else {
            running -= 1;
            if running < 0 && restrict.is_none_or(|s| s.contains(&j)) {
                good.insert(j);
            }
        }
    }
    Ok(good)
}

/// The linearization `(cut, cut]`: starts right after `cut`, ends at `cut`.
pub fn linearize(a: &CyclicArrangement, cut: usize) -> Result<BitString> {
    a.check_index(cut)?;
    Ok(BitString(
        IntervalRef::full(cut)
            .positions(a.len())
            .map(|i| a.bit(i))
            .collect(),
    ))
}

/// All strings with the given numbers of ones and zeros, in lexicographic order.
#[derive(Debug, Clone)]
pub struct BitStrings {
    current: Option<Vec<bool>>,
}

impl Iterator for BitStrings {
    type Item = BitString;

    fn next(&mut self) -> Option<BitString> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(BitString(out))
    }
}

fn next_permutation(v: &mut [bool]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| !v[i] & v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| !v[i] & v[j]).expect("pivot");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub fn enumerate_bitstrings(ones: usize, zeros: usize) -> BitStrings {
    let mut first = vec![false; zeros];
    first.extend(std::iter::repeat_n(true, ones));
    BitStrings {
        current: Some(first),
    }
}

/// One canonical (least-rotation) representative per rotation class.
pub fn enumerate_arrangements(
    ones: usize,
    zeros: usize,
) -> impl Iterator<Item = CyclicArrangement> {
    enumerate_bitstrings(ones, zeros).filter_map(|s| {
        let bits = s.into_bits();
        (least_rotation_start(&bits) == 0).then_some(CyclicArrangement { bits })
    })
}
