#![allow(dead_code)]

use ltl_reduce::semantics::{LassoWord, Letter};
use ltl_reduce::Formula;
use proptest::prelude::*;

pub const PROPS: [&str; 3] = ["a", "b", "c"];

pub fn formula(depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::True),
        1 => Just(Formula::False),
        4 => proptest::sample::select(&PROPS[..]).prop_map(Formula::atom),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            inner.clone().prop_map(Formula::next),
            inner.clone().prop_map(Formula::finally),
            inner.clone().prop_map(Formula::globally),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| l.and(r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| l.or(r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| l.until(r)),
            (inner.clone(), inner).prop_map(|(l, r)| l.release(r)),
        ]
    })
}

pub fn letter() -> impl Strategy<Value = Letter> {
    proptest::sample::subsequence(&PROPS[..], 0..=3)
        .prop_map(|ps| ps.into_iter().map(str::to_string).collect())
}

pub fn word() -> impl Strategy<Value = LassoWord> {
    (
        proptest::collection::vec(letter(), 0..=3),
        proptest::collection::vec(letter(), 1..=3),
    )
        .prop_map(|(u, v)| LassoWord::new(u, v).unwrap())
}
