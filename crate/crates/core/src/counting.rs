//! Exact closed forms and recurrences for ballot-type counts.
//!
//! Every division inside a formula is checked for a zero remainder. An
//! inexact division means the formula was misapplied and is reported, never
//! rounded.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CountValue(BigUint);

impl CountValue {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn one() -> Self {
        Self(BigUint::one())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn exact_div(self, d: u64) -> Result<Self> {
        let d = BigUint::from(d);
        let (quot, rem) = self.0.div_rem(&d);
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                numerator: self.0.to_string(),
                denominator: d.to_string(),
            });
        }
        Ok(Self(quot))
    }

    fn mul_small(self, f: u64) -> Self {
        Self(self.0 * f)
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for CountValue {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl PartialEq<u64> for CountValue {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl std::ops::Add for CountValue {
    type Output = CountValue;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl<'a> std::ops::Add<&'a CountValue> for CountValue {
    type Output = CountValue;
    fn add(self, rhs: &'a CountValue) -> Self {
        Self(self.0 + &rhs.0)
    }
}

impl<'a> std::ops::Mul<&'a CountValue> for &'a CountValue {
    type Output = CountValue;
    fn mul(self, rhs: &'a CountValue) -> CountValue {
        CountValue(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for CountValue {
    fn sum<I: Iterator<Item = CountValue>>(iter: I) -> Self {
        iter.fold(CountValue::zero(), |a, b| a + b)
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// Internal formulas divide by quantities known to divide the numerator.
fn exact(v: CountValue, d: u64) -> CountValue {
    v.exact_div(d)
        .unwrap_or_else(|e| panic!("count formula invariant broken: {e}"))
}

/// C(n, k), zero when k is out of range.
pub fn binomial(n: u64, k: i64) -> CountValue {
    if k < 0 || k as u64 > n {
        return CountValue::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = CountValue::one();
    for i in 0..k {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1.
        acc = exact(acc.mul_small(n - i), i + 1);
    }
    acc
}

pub fn catalan(k: u64) -> CountValue {
    exact(binomial(2 * k, k as i64), k + 1)
}

/// `C((q+1)n, n) / (qn + 1)`.
pub fn generalized_catalan(n: u64, q: u64) -> CountValue {
    exact(binomial((q + 1) * n, n as i64), q * n + 1)
}

/// Number of q-satisfying strings with `k` ones and `qk + p - 1` zeros.
pub fn count_q_satisfying(k: u64, p: u64, q: u64) -> Result<CountValue> {
    if p < 1 {
        return Err(Error::OutOfRange {
            name: "p",
            value: p as i64,
            reason: "must be at least 1".into(),
        });
    }
    binomial((q + 1) * k + p - 1, k as i64)
        .mul_small(p)
        .exact_div(q * k + p)
}

/// Number of q-satisfying strings of length `m`, any number of ones.
pub fn count_q_satisfying_length(m: u64, q: u64) -> CountValue {
    (0..=m / (q + 1))
        .map(|k| {
            exact(
                binomial(m, k as i64).mul_small(m - (q + 1) * k + 1),
                m - k + 1,
            )
        })
        .sum()
}

/// q-stacks on a base of length `m` with `n` bricks on the base.
pub fn count_q_stacks(m: u64, n: u64, q: u64) -> CountValue {
    if (q + 1) * n > m {
        return CountValue::zero();
    }
    exact(
        binomial(m, n as i64).mul_small(m - (q + 1) * n + 1),
        m - n + 1,
    )
}

/// All q-stacks on a base of length `m`, the empty stack included.
pub fn count_q_stacks_total(m: u64, q: u64) -> CountValue {
    (0..=m / (q + 1)).map(|n| count_q_stacks(m, n, q)).sum()
}

/// `c[m][n]` for a fixed `q`: q-satisfying strings of length `m` with `n` ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub q: u64,
    entries: BTreeMap<(u64, u64), CountValue>,
}

impl CountTable {
    /// Zero outside the stored range.
    pub fn get(&self, m: u64, n: u64) -> CountValue {
        self.entries.get(&(m, n)).cloned().unwrap_or_default()
    }

    fn get_signed(&self, m: i64, n: i64) -> CountValue {
        if m < 0 || n < 0 {
            CountValue::zero()
        } else {
            self.get(m as u64, n as u64)
        }
    }

    /// `(m, n, count)` for `m >= 1`, ordered by `m` then `n`.
    pub fn rows(&self) -> impl Iterator<Item = (u64, u64, &CountValue)> {
        self.entries
            .iter()
            .filter(|((m, _), _)| *m >= 1)
            .map(|(&(m, n), v)| (m, n, v))
    }

    pub fn to_csv(&self) -> String {
        self.rows()
            .map(|(m, n, v)| format!("{m},{n},{v}\n"))
            .collect()
    }
}

/// Builds `c[m][n]` from the three-case decomposition of q-satisfying strings.
///
/// A string of length `m` either starts with a 0 that can be dropped
/// (`c[m-1][n]`), is a ballot string with no proper ballot prefix
/// (`c[m-2][n-1]`, only when `m = (q+1)n`), or splits after its shortest
/// ballot prefix of length `(q+1)k < m`. That prefix is itself a ballot string
/// with no proper ballot prefix, so it contributes `c[(q+1)k-2][k-1]`.
pub fn recurrence_table(m_max: u64, q: u64) -> Result<CountTable> {
    if m_max < 1 {
        return Err(Error::OutOfRange {
            name: "m_max",
            value: m_max as i64,
            reason: "must be at least 1".into(),
        });
    }
    if q < 1 {
        return Err(Error::OutOfRange {
            name: "q",
            value: q as i64,
            reason: "must be at least 1".into(),
        });
    }
    let mut table = CountTable {
        q,
        entries: BTreeMap::new(),
    };
    table.entries.insert((0, 0), CountValue::one());
    table.entries.insert((1, 0), CountValue::one());
    let step = (q + 1) as i64;
    for m in 2..=m_max as i64 {
        for n in 0..=m / step {
            let mut c = table.get_signed(m - 1, n);
            if m == step * n {
                c = c + table.get_signed(m - 2, n - 1);
            }
            let mut k = 1;
            while step * k < m {
                let primitive = table.get_signed(step * k - 2, k - 1);
                let rest = table.get_signed(m - step * k, n - k);
                c = c + &(&primitive * &rest);
                k += 1;
            }
            table.entries.insert((m as u64, n as u64), c);
        }
    }
    Ok(table)
}

/// Generalized Catalan numbers from the last-operator split of a bracketing:
/// the sum over compositions of `n - 1` into `q + 1` nonnegative parts of the
/// product of the parts' values.
pub fn hp_recurrence(n: u64, q: u64) -> CountValue {
    let parts = (q + 1) as usize;
    let mut values: Vec<CountValue> = vec![CountValue::one()];
    for target in 1..=n as usize {
        // conv[j][s]: ways to split s over j parts
        let mut conv: Vec<CountValue> = values.clone();
        for _ in 1..parts {
            let mut next = vec![CountValue::zero(); target];
            for s in 0..target {
                for first in 0..=s {
                    next[s] = next[s].clone() + &(&values[first] * &conv[s - first]);
                }
            }
            conv = next;
        }
        values.push(conv[target - 1].clone());
    }
    values[n as usize].clone()
}

/// `a_n = sum_{k=1..n} a_{k-1} a_{n-k}`, `a_0 = 1`.
pub fn catalan_recurrence(n: u64) -> CountValue {
    let mut a: Vec<CountValue> = vec![CountValue::one()];
    for i in 1..=n as usize {
        let v = (1..=i).map(|k| &a[k - 1] * &a[i - k]).sum();
        a.push(v);
    }
    a[n as usize].clone()
}
