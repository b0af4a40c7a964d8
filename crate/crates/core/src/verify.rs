//! Exhaustive and sampled verification sweeps.
//!
//! Each sweep returns one [`SweepRecord`] per checked object, printed as
//! `object;property;observed;expected;PASS|FAIL`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::applications::{
    chung_feller_distribution, chung_feller_statistic, enumerate_plane_trees, enumerate_raney,
    montagh_linearization, montagh_linearization_by_scan, positive_sum_profile, raney_start,
    sequence_to_tree, tree_to_sequence, IntegerCycle,
};
use crate::brickstack::{
    enumerate_stacks, first_return, sequence_to_stack, stack_to_sequence,
    stack_to_sequence_by_silhouette, BrickStack,
};
use crate::counting::{
    binomial, catalan, catalan_recurrence, count_q_satisfying, count_q_satisfying_length,
    count_q_stacks, generalized_catalan, hp_recurrence, recurrence_table,
};
use crate::cyclelemma::{
    augmentation_insert, dominating_cuts, extended_bounds_check, good_count_profile,
    good_interval_count, observed_not_good, periodic_arrangement, position_sums,
};
use crate::error::{Error, Result};
use crate::seqcore::{
    enumerate_arrangements, enumerate_bitstrings, good_zero_set, is_q_dominating, is_q_satisfying,
    BitString, CyclicArrangement,
};

pub const DEFAULT_INSTANCE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub object: String,
    pub property: String,
    pub observed: String,
    pub expected: String,
    pub pass: bool,
}

impl SweepRecord {
    pub fn equal(
        object: impl fmt::Display,
        property: impl Into<String>,
        observed: impl fmt::Display,
        expected: impl fmt::Display,
    ) -> Self {
        let (observed, expected) = (observed.to_string(), expected.to_string());
        Self {
            object: object.to_string(),
            property: property.into(),
            pass: observed == expected,
            observed,
            expected,
        }
    }

    pub fn judged(
        object: impl fmt::Display,
        property: impl Into<String>,
        observed: impl fmt::Display,
        expected: impl fmt::Display,
        pass: bool,
    ) -> Self {
        Self {
            object: object.to_string(),
            property: property.into(),
            observed: observed.to_string(),
            expected: expected.to_string(),
            pass,
        }
    }
}

impl fmt::Display for SweepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};{};{};{};{}",
            self.object,
            self.property,
            self.observed,
            self.expected,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    fn push(&mut self, r: SweepRecord) {
        self.records.push(r);
    }

    fn extend(&mut self, other: SweepReport) {
        self.records.extend(other.records);
    }
}

struct Budget {
    cap: u64,
    used: u64,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Self { cap, used: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            Err(Error::CapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

/// Every arrangement has exactly `p` cut points giving a q-dominating string.
pub fn cycle_lemma_sweep(max_size: usize, q_max: usize, cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for len in 1..=max_size {
        for ones in 0..=len {
            let zeros = len - ones;
            let qs: Vec<usize> = (0..=q_max).filter(|q| zeros >= q * ones).collect();
            if qs.is_empty() {
                continue;
            }
            for a in enumerate_arrangements(ones, zeros) {
                for &q in &qs {
                    budget.tick()?;
                    let p = zeros - q * ones;
                    let cuts = dominating_cuts(&a, q)?;
                    report.push(SweepRecord::equal(
                        &a,
                        format!("dominating_cuts(q={q})"),
                        cuts.len(),
                        p,
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// `(ones, q)` pairs with `(q+1)*ones + 1 <= max_size`; `ones = 0` only for `q <= 3`.
fn p_one_shapes(max_size: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for ones in 0..max_size {
        for q in 0..max_size {
            if (q + 1) * ones + 1 > max_size || (ones == 0 && q > 3) {
                continue;
            }
            out.push((ones, q));
        }
    }
    out
}

/// Sets ordered by size must have sizes `1..=t` and form a chain.
fn chain_check(mut sets: Vec<BTreeSet<usize>>) -> (String, bool) {
    sets.sort_by_key(BTreeSet::len);
    let sizes: Vec<usize> = sets.iter().map(BTreeSet::len).collect();
    let sizes_ok = sizes.iter().enumerate().all(|(i, &s)| s == i + 1);
    let nested = sets.windows(2).all(|w| w[0].is_subset(&w[1]));
    (
        format!("sizes={} nested={nested}", join(&sizes)),
        sizes_ok && nested,
    )
}

/// Good-count profile of every `(k, qk+1)`-arrangement is `{1..qk+1}` with
/// nested good sets.
pub fn strong_sweep(max_size: usize, cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for (ones, q) in p_one_shapes(max_size) {
        for a in enumerate_arrangements(ones, q * ones + 1) {
            budget.tick()?;
            let sets = a
                .zero_positions()
                .into_iter()
                .map(|r| good_zero_set(&a, r, q, None))
                .collect::<Result<Vec<_>>>()?;
            let (observed, pass) = chain_check(sets);
            let top = q * ones + 1;
            report.push(SweepRecord::judged(
                &a,
                format!("strong_profile(q={q})"),
                observed,
                format!("sizes=[1..{top}] nested=true"),
                pass,
            ));
        }
    }
    Ok(report)
}

/// For every nonempty set `S` of zeros, the `S`-restricted counts over cuts in
/// `S` are `{1..|S|}` and nested.
pub fn stronger_sweep(max_size: usize, cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for (ones, q) in p_one_shapes(max_size) {
        for a in enumerate_arrangements(ones, q * ones + 1) {
            let zeros = a.zero_positions();
            let mut failures = Vec::new();
            let mut subsets = 0u64;
            for mask in 1u64..(1 << zeros.len()) {
                budget.tick()?;
                subsets += 1;
                let set: BTreeSet<usize> = zeros
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &z)| z)
                    .collect();
                let sets = set
                    .iter()
                    .map(|&r| good_zero_set(&a, r, q, Some(&set)))
                    .collect::<Result<Vec<_>>>()?;
                if !chain_check(sets).1 {
                    failures.push(join(&set));
                }
            }
            report.push(SweepRecord::judged(
                &a,
                format!("stronger_profile(q={q},subsets={subsets})"),
                if failures.is_empty() {
                    "all".to_string()
                } else {
                    format!("failing={}", failures.join(","))
                },
                "all",
                failures.is_empty(),
            ));
        }
    }
    Ok(report)
}

/// Lower bounds on good 0-linearizations for `p <= p_max`, equality on blocked
/// arrangements, the periodic family, and strict augmentation on strings up
/// to `augment_max`.
pub fn extended_sweep(
    max_size: usize,
    p_max: usize,
    q_max: usize,
    augment_max: usize,
    cap: u64,
) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for len in 1..=max_size {
        for ones in 0..len {
            let zeros = len - ones;
            for q in 0..=q_max {
                let Some(p) = zeros.checked_sub(q * ones) else {
                    continue;
                };
                if p < 1 || p > p_max {
                    continue;
                }
                for a in enumerate_arrangements(ones, zeros) {
                    budget.tick()?;
                    let checks = extended_bounds_check(&a, q)?;
                    let pass = checks.iter().all(|c| c.holds());
                    report.push(SweepRecord::judged(
                        &a,
                        format!("extended_bounds(q={q},p={p})"),
                        join(checks.iter().map(|c| c.observed)),
                        format!(">={}", join(checks.iter().map(|c| c.bound))),
                        pass,
                    ));
                }
                let blocked = CyclicArrangement::blocked(ones, zeros);
                let checks = extended_bounds_check(&blocked, q)?;
                report.push(SweepRecord::equal(
                    &blocked,
                    format!("blocked_tight(q={q},p={p})"),
                    join(checks.iter().map(|c| c.observed)),
                    join(checks.iter().map(|c| c.bound)),
                ));
            }
        }
    }
    report.extend(periodic_sweep(&mut budget)?);
    report.extend(augmentation_sweep(augment_max, q_max, &mut budget)?);
    Ok(report)
}

fn periodic_sweep(budget: &mut Budget) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for k in 1..=3 {
        for q in 1..=3 {
            for t in 1..=2 {
                budget.tick()?;
                let fam = periodic_arrangement(k, q, t)?;
                let observed = observed_not_good(&fam.arrangement, q);
                let mut per_class: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
                for (lead, not_good) in &observed {
                    per_class.entry(*lead).or_default().insert(*not_good);
                }
                let got: Vec<String> = per_class
                    .iter()
                    .map(|(j, v)| format!("{j}:{}", join(v)))
                    .collect();
                let want: Vec<String> = fam
                    .predicted_not_good
                    .iter()
                    .enumerate()
                    .map(|(j, v)| format!("{j}:[{v}]"))
                    .collect();
                let name = format!("periodic(k={k},q={q},t={t})");
                report.push(SweepRecord::equal(
                    &name,
                    "not_good_per_class",
                    got.join(" "),
                    want.join(" "),
                ));
            }
        }
    }
    Ok(report)
}

fn augmentation_sweep(max_len: usize, q_max: usize, budget: &mut Budget) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for len in 1..=max_len {
        for ones in 0..len {
            for b in enumerate_bitstrings(ones, len - ones) {
                if !b.ends_with_zero() {
                    continue;
                }
                for q in (0..=q_max).filter(|q| b.zeros() > q * b.ones()) {
                    budget.tick()?;
                    let mut worst: Option<(usize, usize, usize)> = None;
                    for pos in 0..=len {
                        let aug = augmentation_insert(&b, pos, q)?;
                        if aug.good_after <= aug.good_before {
                            worst = Some((pos, aug.good_before, aug.good_after));
                            break;
                        }
                    }
                    report.push(match worst {
                        None => SweepRecord::equal(
                            &b,
                            format!("augmentation(q={q})"),
                            "strict",
                            "strict",
                        ),
                        Some((pos, before, after)) => SweepRecord::judged(
                            &b,
                            format!("augmentation(q={q})"),
                            format!("pos={pos} {before}->{after}"),
                            "strict",
                            false,
                        ),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Position-sums of the 0-linearizations are distinct modulo the number of zeros.
pub fn position_sum_sweep(max_size: usize, cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for len in 1..=max_size {
        for ones in 0..len {
            let zeros = len - ones;
            if num_integer::gcd(ones, zeros) != 1 {
                continue;
            }
            for a in enumerate_arrangements(ones, zeros) {
                budget.tick()?;
                let residues: Vec<usize> = position_sums(&a)?
                    .into_iter()
                    .map(|(_, s)| s % zeros)
                    .collect();
                let distinct: BTreeSet<usize> = residues.iter().copied().collect();
                report.push(SweepRecord::equal(
                    &a,
                    "position_sum_residues_distinct",
                    distinct.len(),
                    residues.len(),
                ));
            }
        }
    }
    Ok(report)
}

/// Exact uniformity for `n <= n_max`, plus the good-interval reading of the
/// statistic on every word.
pub fn chung_feller_sweep(n_max: usize, cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for n in 1..=n_max {
        let total = binomial(2 * n as u64, n as i64);
        for _ in 0..total.to_u64().unwrap_or(u64::MAX) {
            budget.tick()?;
        }
        let dist = chung_feller_distribution(n)?;
        let share = catalan(n as u64);
        report.push(SweepRecord::equal(
            format!("n={n}"),
            "uniform_distribution",
            join(dist.values()),
            join(std::iter::repeat_n(&share, n + 1)),
        ));
        let mut mismatches = 0usize;
        for s in enumerate_bitstrings(n, n) {
            let word: String = s
                .bits()
                .iter()
                .map(|&b| if b { 'B' } else { 'A' })
                .collect();
            let mut lin = s.clone();
            lin.push(false);
            if chung_feller_statistic(&word)? + 1 != good_interval_count(&lin, 1) {
                mismatches += 1;
            }
        }
        report.push(SweepRecord::equal(
            format!("n={n}"),
            "statistic_is_good_count_minus_one",
            mismatches,
            0,
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy)]
pub struct MontaghSweep {
    pub exhaustive_n: usize,
    pub exhaustive_range: i64,
    pub samples: usize,
    pub sample_n: usize,
    pub sample_range: i64,
    pub seed: u64,
}

impl Default for MontaghSweep {
    fn default() -> Self {
        Self {
            exhaustive_n: 4,
            exhaustive_range: 3,
            samples: 10_000,
            sample_n: 8,
            sample_range: 6,
            seed: 0,
        }
    }
}

fn exhaustive_cycles(n_max: usize, range: i64) -> Vec<IntegerCycle> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut values = vec![-range; n];
        loop {
            if values.iter().sum::<i64>() == 1 {
                out.push(IntegerCycle::new(values.clone()).expect("sum checked"));
            }
            let mut i = 0;
            while i < n && values[i] == range {
                values[i] = -range;
                i += 1;
            }
            if i == n {
                break;
            }
            values[i] += 1;
        }
    }
    out
}

/// Uniformly chosen length, uniform entries, last entry fixed by the sum.
pub fn random_cycles(count: usize, n_max: usize, range: i64, seed: u64) -> Vec<IntegerCycle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=n_max);
        let mut values: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-range..=range)).collect();
        let last = 1 - values.iter().sum::<i64>();
        if last.abs() > range {
            continue;
        }
        values.push(last);
        out.push(IntegerCycle::new(values).expect("sum is 1"));
    }
    out
}

/// Indices of the cycle at which a positive partial sum ends, for the
/// rotation starting at `start`.
fn positive_ends(c: &IntegerCycle, start: usize) -> BTreeSet<usize> {
    let n = c.len();
    let mut acc = 0;
    let mut out = BTreeSet::new();
    for d in 0..n {
        let j = (start + d) % n;
        acc += c.values()[j];
        if acc > 0 {
            out.insert(j);
        }
    }
    out
}

pub fn check_montagh_cycle(c: &IntegerCycle) -> Result<SweepRecord> {
    let n = c.len();
    let mut problems = Vec::new();
    let mut starts = Vec::with_capacity(n);
    for l in 1..=n {
        let reduced = montagh_linearization(c, l)?;
        let scanned = montagh_linearization_by_scan(c, l)?;
        if scanned.as_ref() != Some(&reduced) {
            problems.push(format!("l={l}:reduction!=scan"));
        }
        starts.push(reduced.start);
    }
    let mut profile = positive_sum_profile(c);
    profile.sort_unstable();
    if profile != (1..=n).collect::<Vec<_>>() {
        problems.push(format!("profile={}", join(&profile)));
    }
    for l in 1..n {
        if !positive_ends(c, starts[l - 1]).is_subset(&positive_ends(c, starts[l])) {
            problems.push(format!("nesting@{l}"));
        }
    }
    if raney_start(c) != starts[n - 1] {
        problems.push(format!("raney_start={}", raney_start(c)));
    }
    let observed = if problems.is_empty() {
        "ok".to_string()
    } else {
        problems.join(",")
    };
    Ok(SweepRecord::equal(
        c,
        "montagh_unique_nested",
        observed,
        "ok",
    ))
}

pub fn montagh_sweep(cfg: MontaghSweep, cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    let cycles = exhaustive_cycles(cfg.exhaustive_n, cfg.exhaustive_range)
        .into_iter()
        .chain(random_cycles(
            cfg.samples,
            cfg.sample_n,
            cfg.sample_range,
            cfg.seed,
        ));
    for c in cycles {
        budget.tick()?;
        report.push(check_montagh_cycle(&c)?);
    }
    Ok(report)
}

fn check_stack(s: &BrickStack) -> Result<SweepRecord> {
    let q = s.q;
    let seq = stack_to_sequence(s)?;
    let mut problems = Vec::new();
    if stack_to_sequence_by_silhouette(s)? != seq {
        problems.push("recursive!=silhouette".to_string());
    }
    if !is_q_satisfying(&seq, q) {
        problems.push("not_satisfying".into());
    }
    if sequence_to_stack(&seq, q)? != *s {
        problems.push("inverse_mismatch".into());
    }
    if seq.ones() != s.base_bricks() {
        problems.push("refinement".into());
    }
    let first_uncovered = first_return(s)?.is_none();
    if is_q_dominating(&seq, q) != first_uncovered {
        problems.push("dominance".into());
    }
    if let Some(mp) = first_return(s)?.filter(|&mp| mp < s.m) {
        let left = stack_to_sequence(&s.prefix(mp))?;
        let right = stack_to_sequence(&s.suffix(mp))?;
        if left.concat(&right) != seq {
            problems.push("concatenation".into());
        }
    }
    let observed = if problems.is_empty() {
        seq.to_string()
    } else {
        format!("{seq}:{}", problems.join(","))
    };
    Ok(SweepRecord::equal(s, "bijection", observed, seq))
}

/// Round trip, refinement, dominance and concatenation on every stack, plus
/// image and per-`n` counts for every `(m, q)`.
pub fn bijection_sweep(m_max: usize, qs: &[usize], cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for &q in qs {
        for m in 1..=m_max {
            let stacks = enumerate_stacks(m, q);
            let mut images = Vec::with_capacity(stacks.len());
            for s in &stacks {
                budget.tick()?;
                let record = check_stack(s)?;
                images.push(stack_to_sequence(s)?);
                report.push(record);
            }
            let image_set: BTreeSet<BitString> = images.iter().cloned().collect();
            let satisfying: BTreeSet<BitString> = (0..=m)
                .flat_map(|ones| enumerate_bitstrings(ones, m - ones))
                .filter(|b| is_q_satisfying(b, q))
                .collect();
            let tag = format!("q={q};m={m}");
            report.push(SweepRecord::equal(
                &tag,
                "injective",
                image_set.len(),
                images.len(),
            ));
            report.push(SweepRecord::equal(
                &tag,
                "image_is_satisfying_set",
                image_set == satisfying,
                true,
            ));
            for n in 0..=m / (q + 1) {
                let got = stacks.iter().filter(|s| s.base_bricks() == n).count();
                report.push(SweepRecord::equal(
                    &tag,
                    format!("count_n={n}"),
                    got,
                    count_q_stacks(m as u64, n as u64, q as u64),
                ));
            }
            if q == 1 && m % 2 == 0 {
                let full = stacks.iter().filter(|s| s.base_bricks() == m / 2).count();
                report.push(SweepRecord::equal(
                    &tag,
                    "coin_stacks_catalan",
                    full,
                    catalan(m as u64 / 2),
                ));
            }
        }
    }
    Ok(report)
}

/// Closed-form counts of q-satisfying strings against exhaustive enumeration.
pub fn satisfying_count_sweep(m_max: usize, q_max: usize, cap: u64) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for q in 0..=q_max {
        for m in 0..=m_max {
            let mut by_ones = vec![0u64; m + 1];
            for (ones, slot) in by_ones.iter_mut().enumerate() {
                for b in enumerate_bitstrings(ones, m - ones) {
                    budget.tick()?;
                    if is_q_satisfying(&b, q) {
                        *slot += 1;
                    }
                }
            }
            let tag = format!("q={q};m={m}");
            report.push(SweepRecord::equal(
                &tag,
                "count_q_satisfying_length",
                by_ones.iter().sum::<u64>(),
                count_q_satisfying_length(m as u64, q as u64),
            ));
            for (k, &got) in by_ones.iter().enumerate() {
                if (q + 1) * k > m {
                    continue;
                }
                let p = (m - (q + 1) * k + 1) as u64;
                report.push(SweepRecord::equal(
                    &tag,
                    format!("count_q_satisfying(k={k},p={p})"),
                    got,
                    count_q_satisfying(k as u64, p, q as u64)?,
                ));
            }
        }
    }
    Ok(report)
}

/// The length/ones recurrence against the closed form, the bracketing
/// recurrence against `C_n^q`, and the Catalan convolution.
pub fn recurrence_sweep(
    m_max: usize,
    q_max: usize,
    hp_n_max: usize,
    catalan_n_max: usize,
    cap: u64,
) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for q in 1..=q_max as u64 {
        let table = recurrence_table(m_max as u64, q)?;
        for (m, n, v) in table.rows() {
            budget.tick()?;
            report.push(SweepRecord::equal(
                format!("q={q};m={m};n={n}"),
                "recurrence_vs_closed_form",
                v,
                count_q_stacks(m, n, q),
            ));
        }
        for n in 0..=hp_n_max as u64 {
            budget.tick()?;
            report.push(SweepRecord::equal(
                format!("q={q};n={n}"),
                "hp_recurrence",
                hp_recurrence(n, q),
                generalized_catalan(n, q),
            ));
        }
    }
    for n in 0..=catalan_n_max as u64 {
        budget.tick()?;
        let c = catalan(n);
        report.push(SweepRecord::equal(
            format!("n={n}"),
            "catalan_recurrence",
            catalan_recurrence(n),
            &c,
        ));
        report.push(SweepRecord::equal(
            format!("n={n}"),
            "catalan_is_gcatalan_q1",
            generalized_catalan(n, 1),
            &c,
        ));
    }
    Ok(report)
}

/// Raney sequences, plane trees and q-ballot strings against `C_k^q`, and
/// against the number of `(k, qk+1)`-arrangements.
pub fn raney_tree_sweep(
    k_max: usize,
    tree_n_max: usize,
    q_max: usize,
    cap: u64,
) -> Result<SweepReport> {
    let mut budget = Budget::new(cap);
    let mut report = SweepReport::default();
    for q in 1..=q_max {
        for k in 0..=k_max {
            budget.tick()?;
            let tag = format!("k={k};q={q}");
            let expected = generalized_catalan(k as u64, q as u64);
            let raney: Vec<_> = enumerate_raney(k, q).collect();
            report.push(SweepRecord::equal(
                &tag,
                "raney_count",
                raney.len(),
                &expected,
            ));
            let mut bad_start = 0;
            for r in &raney {
                let c = IntegerCycle::new(r.terms.clone())?;
                if raney_start(&c) != 0 {
                    bad_start += 1;
                }
            }
            report.push(SweepRecord::equal(
                &tag,
                "raney_start_is_zero",
                bad_start,
                0,
            ));
            let ballots = enumerate_bitstrings(k, q * k)
                .filter(|b| is_q_satisfying(b, q))
                .count();
            let arrangements = enumerate_arrangements(k, q * k + 1).count();
            report.push(SweepRecord::equal(
                &tag,
                "ballots_equal_arrangements",
                ballots,
                arrangements,
            ));
            if k <= tree_n_max {
                let trees = enumerate_plane_trees(k, q);
                report.push(SweepRecord::equal(
                    &tag,
                    "tree_count",
                    trees.len(),
                    &expected,
                ));
                let mut broken = 0;
                for t in &trees {
                    let s = tree_to_sequence(t);
                    let ok = sequence_to_tree(&s, q).as_ref() == Ok(t)
                        && tree_to_sequence(&sequence_to_tree(&s, q)?) == s;
                    if !ok || !is_q_dominating(&s, q) {
                        broken += 1;
                    }
                }
                report.push(SweepRecord::equal(&tag, "tree_round_trip", broken, 0));
            }
        }
    }
    Ok(report)
}

/// Good-count profile per arrangement, used by the CLI for inspection.
pub fn profile_line(a: &CyclicArrangement, q: usize) -> String {
    join(
        good_count_profile(a, q)
            .into_iter()
            .map(|(c, g)| format!("{c}:{g}")),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_format() {
        let r = SweepRecord::equal("cyc:0001", "dominating_cuts(q=1)", 2, 2);
        assert_eq!(r.to_string(), "cyc:0001;dominating_cuts(q=1);2;2;PASS");
        let r = SweepRecord::equal("x", "y", 1, 2);
        assert_eq!(r.to_string(), "x;y;1;2;FAIL");
    }

    #[test]
    fn small_sweeps_pass() {
        assert!(cycle_lemma_sweep(8, 3, DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        assert!(strong_sweep(8, DEFAULT_INSTANCE_CAP).unwrap().passed());
        assert!(stronger_sweep(7, DEFAULT_INSTANCE_CAP).unwrap().passed());
        assert!(extended_sweep(8, 3, 3, 6, DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        assert!(position_sum_sweep(8, DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        assert!(chung_feller_sweep(4, DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        assert!(bijection_sweep(6, &[1, 2], DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        assert!(satisfying_count_sweep(8, 2, DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        assert!(recurrence_sweep(12, 2, 5, 8, DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        assert!(raney_tree_sweep(3, 3, 2, DEFAULT_INSTANCE_CAP)
            .unwrap()
            .passed());
        let cfg = MontaghSweep {
            samples: 50,
            ..MontaghSweep::default()
        };
        assert!(montagh_sweep(cfg, DEFAULT_INSTANCE_CAP).unwrap().passed());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            cycle_lemma_sweep(10, 3, 5).unwrap_err(),
            Error::CapExceeded { cap: 5 }
        );
    }

    #[test]
    fn random_cycles_are_seeded() {
        let a = random_cycles(20, 8, 6, 7);
        let b = random_cycles(20, 8, 6, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|c| c.values().iter().all(|v| v.abs() <= 6)));
        assert_ne!(random_cycles(20, 8, 6, 8), a);
    }

    #[test]
    fn exhaustive_cycles_cover_range() {
        let v = exhaustive_cycles(2, 1);
        // (1), (0,1), (1,0)
        assert_eq!(v.len(), 3);
    }
}
