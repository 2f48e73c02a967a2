//! Shared proptest strategies.
#![allow(dead_code)]

use motspec_core::{Frac, MonClass, QmodZ, SpectrumPoly};
use proptest::prelude::*;

pub fn frac(max_den: i64) -> impl Strategy<Value = Frac> {
    (-3 * max_den..=3 * max_den, 1..=max_den).prop_map(|(n, d)| Frac::new(n, d))
}

pub fn residue(max_den: i64) -> impl Strategy<Value = QmodZ> {
    (1..=max_den).prop_flat_map(|d| (0..d).prop_map(move |n| QmodZ::from_ratio(n, d)))
}

pub fn spectrum(max_den: i64) -> impl Strategy<Value = SpectrumPoly> {
    prop::collection::vec((frac(max_den), -3i64..=3), 0..5).prop_map(|terms| {
        let mut p = SpectrumPoly::zero();
        for (e, m) in terms {
            p.add_monomial(e, m);
        }
        p
    })
}

pub fn monomial(arity: usize, max_den: i64) -> impl Strategy<Value = MonClass> {
    (prop::collection::vec(residue(max_den), arity), -5i64..=5, -5i64..=5, -3i64..=3)
        .prop_map(|(eigen, p, q, m)| MonClass::monomial(eigen, p, q, m))
}

pub fn class(arity: usize, max_den: i64) -> impl Strategy<Value = MonClass> {
    prop::collection::vec(monomial(arity, max_den), 0..5)
        .prop_map(move |ms| ms.into_iter().fold(MonClass::zero(arity), |acc, m| &acc + &m))
}
