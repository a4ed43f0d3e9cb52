use std::collections::BTreeSet;

use proptest::prelude::*;
use qrz9_core::{LinearCodeZ9, Z9};

fn code(rows: &[Vec<u8>], n: usize) -> LinearCodeZ9 {
    LinearCodeZ9::from_rows(n, rows.iter().map(|r| r.iter().map(|&x| Z9::from_u8(x % 9)).collect()).collect())
}

#[test]
fn enumeration_lists_each_codeword_once() {
    let c = LinearCodeZ9::from_int_rows(&[&[1, 2, 0, 3], &[0, 3, 3, 6]]);
    let words: Vec<_> = c.enumerate(1 << 20).unwrap().collect();
    assert_eq!(words.len() as u128, c.cardinality_u128().unwrap());
    let distinct: BTreeSet<_> = words.iter().cloned().collect();
    assert_eq!(distinct.len(), words.len());
    assert!(words.iter().all(|w| c.contains(w)));
}

#[test]
fn enumeration_respects_budget() {
    let c = LinearCodeZ9::full(3);
    assert!(c.enumerate(728).is_err());
    assert_eq!(c.enumerate(729).unwrap().count(), 729);
}

#[test]
fn zero_code_has_one_word() {
    let c = LinearCodeZ9::zero(5);
    assert_eq!(c.enumerate(1).unwrap().count(), 1);
    assert_eq!(c.enumerate_from(1).count(), 0);
}

proptest! {
    #[test]
    fn resuming_yields_the_suffix(rows in prop::collection::vec(prop::collection::vec(0u8..9, 4), 0..4), start in 0u128..800) {
        let c = code(&rows, 4);
        let all: Vec<_> = c.enumerate(u128::MAX).unwrap().collect();
        let rest: Vec<_> = c.enumerate_from(start).collect();
        let skip = (start as usize).min(all.len());
        prop_assert_eq!(&rest[..], &all[skip..]);
    }
}
