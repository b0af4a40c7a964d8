use std::collections::BTreeSet;

use proptest::prelude::*;

use bricklayer::applications::{sequence_to_tree, tree_to_sequence, IntegerCycle};
use bricklayer::brickstack::{sequence_to_stack, stack_to_sequence, validate};
use bricklayer::cyclelemma::dominating_cuts;
use bricklayer::seqcore::{
    deficiency, enumerate_arrangements, enumerate_bitstrings, is_q_dominating, is_q_satisfying,
    linearize, BitString, CyclicArrangement, IntervalRef,
};
use bricklayer::verify::check_montagh_cycle;

fn bit_string(max_len: usize) -> impl Strategy<Value = BitString> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(BitString::new)
}

/// An arrangement with `ones` ones and `q*ones + p` zeros in random order.
fn arrangement(q: usize, p: usize) -> impl Strategy<Value = CyclicArrangement> {
    (0usize..=4).prop_flat_map(move |ones| {
        let mut bits = vec![true; ones];
        bits.extend(std::iter::repeat_n(false, q * ones + p));
        Just(bits).prop_shuffle().prop_map(CyclicArrangement::new)
    })
}

/// A q-dominating string built from a dominating cut of a random arrangement.
fn dominating(q: usize, p: usize) -> impl Strategy<Value = BitString> {
    (arrangement(q, p), any::<prop::sample::Index>()).prop_map(move |(a, pick)| {
        let starts = dominating_cuts(&a, q).unwrap();
        let start = starts[pick.index(starts.len())];
        linearize(&a, (start + a.len() - 1) % a.len()).unwrap()
    })
}

proptest! {
    #[test]
    fn dominating_implies_satisfying(s in bit_string(16), q in 0usize..4) {
        if is_q_dominating(&s, q) {
            prop_assert!(is_q_satisfying(&s, q));
        }
    }

    #[test]
    fn prepending_zero(s in bit_string(16), q in 0usize..4) {
        let prefixed = BitString::new(vec![false]).concat(&s);
        prop_assert_eq!(is_q_satisfying(&s, q), is_q_dominating(&prefixed, q));
    }

    #[test]
    fn deficiency_is_additive(a in arrangement(2, 3), cuts in prop::collection::btree_set(0usize..32, 3)) {
        let n = a.len();
        let picks: BTreeSet<usize> = cuts.into_iter().map(|c| c % n).collect();
        prop_assume!(picks.len() == 3);
        let v: Vec<usize> = picks.into_iter().collect();
        let (i, j, k) = (v[0], v[1], v[2]);
        let d = |s, e| deficiency(&a, IntervalRef::new(s, e), 2).unwrap();
        prop_assert_eq!(d(i, j) + d(j, k), d(i, k));
        let whole = deficiency(&a, IntervalRef::full(i), 2).unwrap();
        prop_assert_eq!(d(i, j) + d(j, i), whole);
        prop_assert_eq!(whole.value(), 2 * a.ones() as i64 - a.zeros() as i64);
    }

    #[test]
    fn dominating_cut_count(a in arrangement(1, 2)) {
        prop_assert_eq!(dominating_cuts(&a, 1).unwrap().len(), 2);
    }

    #[test]
    fn stack_round_trip(s in prop_oneof![dominating(1, 1), dominating(2, 2), dominating(3, 1)]) {
        // strip the leading 0 to get a q-satisfying string for some q
        let body = s.slice(1..s.len());
        for q in 1..=3 {
            if body.is_empty() || !is_q_satisfying(&body, q) {
                continue;
            }
            let stack = sequence_to_stack(&body, q).unwrap();
            prop_assert!(validate(&stack).is_ok());
            prop_assert_eq!(stack.base_bricks(), body.ones());
            prop_assert_eq!(stack_to_sequence(&stack).unwrap(), body.clone());
        }
    }

    #[test]
    fn tree_round_trip(s in dominating(2, 1)) {
        let t = sequence_to_tree(&s, 2).unwrap();
        prop_assert!(t.is_regular(2));
        prop_assert_eq!(t.internal_count(), s.ones());
        prop_assert_eq!(tree_to_sequence(&t), s);
    }

    #[test]
    fn montagh_on_random_cycles(head in prop::collection::vec(-6i64..=6, 0..8)) {
        let mut values = head.clone();
        values.push(1 - head.iter().sum::<i64>());
        let c = IntegerCycle::new(values).unwrap();
        let record = check_montagh_cycle(&c).unwrap();
        prop_assert!(record.pass, "{}", record);
    }
}

#[test]
fn arrangements_times_length_when_coprime() {
    for ones in 0..=7usize {
        for zeros in 1..=9usize {
            if num_integer::gcd(ones, zeros) != 1 {
                continue;
            }
            let arrangements = enumerate_arrangements(ones, zeros).count();
            let strings = enumerate_bitstrings(ones, zeros).count();
            assert_eq!(
                arrangements * (ones + zeros),
                strings,
                "ones={ones} zeros={zeros}"
            );
        }
    }
}
