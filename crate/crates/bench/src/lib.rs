//! Fixtures shared by the benchmarks.

use grdiff_core::rational::{frac, int};
use grdiff_core::{class_member, named_scheme, FamilyKind, Rational, Scheme};

pub fn nodes(n: usize) -> Vec<Rational> {
    (0..=n as i64).map(|k| int(k - (n as i64) / 2)).collect()
}

pub fn shift_pair() -> (Scheme, Scheme) {
    let d31 = named_scheme(&FamilyKind::RiemannShift { n: 3, k: -1 }).expect("shift scheme");
    let nab = class_member(&d31, &int(1), &int(1), &frac(1, 2)).expect("class member");
    (d31, nab)
}

pub fn symmetric(n: usize) -> Scheme {
    named_scheme(&FamilyKind::SymmetricRiemann { n }).expect("symmetric scheme")
}

pub fn forward(n: usize) -> Scheme {
    named_scheme(&FamilyKind::Riemann { n }).expect("forward scheme")
}
