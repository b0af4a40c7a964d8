//! The cycle lemma and its strengthenings, as checkable computations.
//!
//! A *cut* is the index of the 0 that ends a linearization; the linearization
//! itself starts at the following index. The one exception is
//! [`dominating_cuts`], which reports start indices.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::seqcore::{good_zero_set, is_q_dominating, linearize, BitString, CyclicArrangement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizationReport {
    pub cut: usize,
    pub good_set: BTreeSet<usize>,
    pub good_count: usize,
}

impl LinearizationReport {
    fn new(cut: usize, good_set: BTreeSet<usize>) -> Self {
        let good_count = good_set.len();
        Self {
            cut,
            good_set,
            good_count,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub i: usize,
    pub observed: usize,
    pub bound: usize,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.observed >= self.bound
    }
}

fn require_excess(a: &CyclicArrangement, q: usize, want: Option<usize>) -> Result<usize> {
    let expected = match want {
        Some(p) => format!("zeros = {q}*ones + {p}"),
        None => format!("zeros >= {q}*ones"),
    };
    match (a.excess(q), want) {
        (Some(p), None) => Ok(p),
        (Some(p), Some(w)) if p == w => Ok(p),
        _ => Err(Error::WrongShape {
            ones: a.ones(),
            zeros: a.zeros(),
            expected,
        }),
    }
}

/// Start positions from which the arrangement reads as a q-dominating string.
/// There are exactly `zeros - q*ones` of them.
pub fn dominating_cuts(a: &CyclicArrangement, q: usize) -> Result<Vec<usize>> {
    require_excess(a, q, None)?;
    let n = a.len();
    Ok((0..n)
        .filter(|&start| {
            let s = linearize(a, (start + n - 1) % n).expect("index in range");
            is_q_dominating(&s, q)
        })
        .collect())
}

/// Number of q-good 0-intervals for every 0-linearization, keyed by cut.
pub fn good_count_profile(a: &CyclicArrangement, q: usize) -> BTreeMap<usize, usize> {
    a.zero_positions()
        .into_iter()
        .map(|r| {
            let set = good_zero_set(a, r, q, None).expect("r holds a 0");
            (r, set.len())
        })
        .collect()
}

fn unique_with_count(
    reports: impl Iterator<Item = LinearizationReport>,
    i: usize,
) -> Result<LinearizationReport> {
    let mut hits: Vec<_> = reports.filter(|r| r.good_count == i).collect();
    if hits.len() == 1 {
        Ok(hits.pop().expect("one hit"))
    } else {
        Err(Error::NoUniqueLinearization {
            wanted: i,
            found: hits.len(),
        })
    }
}

/// The 0-linearization of a `(k, qk+1)`-arrangement with exactly `i` q-good
/// 0-intervals.
pub fn strong_linearization(
    a: &CyclicArrangement,
    i: usize,
    q: usize,
) -> Result<LinearizationReport> {
    require_excess(a, q, Some(1))?;
    let top = q * a.ones() + 1;
    if i < 1 || i > top {
        return Err(Error::OutOfRange {
            name: "i",
            value: i as i64,
            reason: format!("must lie in 1..={top}"),
        });
    }
    let reports = a
        .zero_positions()
        .into_iter()
        .map(|r| LinearizationReport::new(r, good_zero_set(a, r, q, None).expect("r holds a 0")));
    unique_with_count(reports, i)
}

/// Like [`strong_linearization`], counting only 0-intervals that end in `set`
/// and cutting only at members of `set`.
pub fn stronger_linearization(
    a: &CyclicArrangement,
    set: &BTreeSet<usize>,
    i: usize,
    q: usize,
) -> Result<LinearizationReport> {
    require_excess(a, q, Some(1))?;
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&bad) = set.iter().find(|&&j| j >= a.len() || a.bit(j)) {
        return Err(Error::NotAZero(bad));
    }
    if i < 1 || i > set.len() {
        return Err(Error::OutOfRange {
            name: "i",
            value: i as i64,
            reason: format!("must lie in 1..={}", set.len()),
        });
    }
    let reports = set
        .iter()
        .map(|&r| {
            Ok(LinearizationReport::new(
                r,
                good_zero_set(a, r, q, Some(set))?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    unique_with_count(reports.into_iter(), i)
}

/// One check per `i` in `p..=qk+p`: how many 0-linearizations have at least
/// `i` q-good 0-intervals, against the guaranteed `qk + 2p - i`.
pub fn extended_bounds_check(a: &CyclicArrangement, q: usize) -> Result<Vec<BoundCheck>> {
    let p = require_excess(a, q, None)?;
    if p < 1 {
        return Err(Error::WrongShape {
            ones: a.ones(),
            zeros: a.zeros(),
            expected: format!("zeros > {q}*ones"),
        });
    }
    let qk = q * a.ones();
    let counts: Vec<usize> = good_count_profile(a, q).into_values().collect();
    Ok((p..=qk + p)
        .map(|i| BoundCheck {
            i,
            observed: counts.iter().filter(|&&c| c >= i).count(),
            bound: qk + 2 * p - i,
        })
        .collect())
}

/// Number of q-good 0-intervals (prefixes ending at a 0) of a linear string.
pub fn good_interval_count(b: &BitString, q: usize) -> usize {
    let (mut zeros, mut ones) = (0usize, 0usize);
    let mut good = 0;
    for &bit in b.bits() {
        if bit {
            ones += 1;
        } else {
            zeros += 1;
            if zeros > q * ones {
                good += 1;
            }
        }
    }
    good
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub string: BitString,
    pub good_before: usize,
    pub good_after: usize,
}

/// Insert a 0 at `position` of a 0-linearization with more than `q` zeros per
/// one, and recount q-good 0-intervals.
pub fn augmentation_insert(b: &BitString, position: usize, q: usize) -> Result<Augmentation> {
    if !b.ends_with_zero() {
        return Err(Error::Precondition("string must end with a 0".into()));
    }
    if b.zeros() <= q * b.ones() {
        return Err(Error::Precondition(format!(
            "need zeros > {q}*ones, have {} zeros and {} ones",
            b.zeros(),
            b.ones()
        )));
    }
    if position > b.len() {
        return Err(Error::IndexOutOfRange {
            index: position,
            len: b.len() + 1,
        });
    }
    let mut string = b.clone();
    string.insert(position, false);
    Ok(Augmentation {
        good_before: good_interval_count(b, q),
        good_after: good_interval_count(&string, q),
        string,
    })
}

/// Sum of the 1-based positions of the ones in `b`.
pub fn position_sum(b: &BitString) -> usize {
    b.bits()
        .iter()
        .enumerate()
        .filter(|(_, &bit)| bit)
        .map(|(i, _)| i + 1)
        .sum()
}

/// `(cut, position-sum)` for every 0-linearization of an arrangement whose
/// numbers of ones and zeros are coprime.
pub fn position_sums(a: &CyclicArrangement) -> Result<Vec<(usize, usize)>> {
    let (ones, zeros) = (a.ones(), a.zeros());
    if ones.gcd(&zeros) != 1 {
        return Err(Error::NotCoprime { ones, zeros });
    }
    Ok(a.zero_positions()
        .into_iter()
        .map(|r| (r, position_sum(&linearize(a, r).expect("index in range"))))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicFamily {
    pub arrangement: CyclicArrangement,
    pub q: usize,
    /// Predicted number of 0-intervals that are not q-good, indexed by the
    /// number `j` of zeros preceding the first 1 in a 0-linearization.
    pub predicted_not_good: Vec<usize>,
}

/// The `(k, qk + tk)`-arrangement in which every 1 is followed by exactly
/// `q + t` zeros, with per-class predictions of non-good 0-intervals.
pub fn periodic_arrangement(k: usize, q: usize, t: usize) -> Result<PeriodicFamily> {
    for (name, v) in [("k", k), ("q", q), ("t", t)] {
        if v < 1 {
            return Err(Error::OutOfRange {
                name,
                value: v as i64,
                reason: "must be at least 1".into(),
            });
        }
    }
    let mut bits = Vec::with_capacity(k * (q + t + 1));
    for _ in 0..k {
        bits.push(true);
        bits.extend(std::iter::repeat_n(false, q + t));
    }
    let predicted_not_good = (0..q + t)
        .map(|j| {
            if j > q {
                return 0;
            }
            let r = (k - 1).min((q - j) / t);
            (0..=r).map(|i| q - j - i * t).sum()
        })
        .collect();
    Ok(PeriodicFamily {
        arrangement: CyclicArrangement::new(BitString::new(bits)),
        q,
        predicted_not_good,
    })
}

/// For each 0-linearization: `(zeros before the first 1, 0-intervals not q-good)`.
pub fn observed_not_good(a: &CyclicArrangement, q: usize) -> Vec<(usize, usize)> {
    good_count_profile(a, q)
        .into_iter()
        .map(|(cut, good)| {
            let lin = linearize(a, cut).expect("index in range");
            let lead = lin.bits().iter().take_while(|&&b| !b).count();
            (lead, a.zeros() - good)
        })
        .collect()
}
