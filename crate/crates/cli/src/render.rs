//! Text renderings shared by verbs and demos.

use grdiff_core::rational::display_rational;
use grdiff_core::{GaussianEquivalence, GaussianMatch, MzVerdict, PeanoEquivalence, Rational, Scheme};

pub fn rat(r: &Rational) -> String {
    display_rational(r)
}

/// `c[...]` with integer coefficients inside the brackets.
pub fn factored(s: &Scheme) -> String {
    let c = s.content();
    if c == Rational::from_integer(1.into()) {
        return s.to_string();
    }
    format!("({})[{}]", rat(&c), s.mul_scalar(&c.recip()))
}

pub fn recognize_line(m: Option<&GaussianMatch>) -> String {
    let exact = m.filter(|m| m.is_exact_member());
    format!(
        "recognize: {}; exact-gaussian: {}",
        m.map_or("none".into(), GaussianMatch::describe),
        exact.map_or("none".into(), GaussianMatch::describe)
    )
}

pub fn gaussian_equivalence(g: Option<&GaussianEquivalence>) -> String {
    match g {
        Some(g) => format!("{} {}", g.matched.describe(), g.witness),
        None => "none".into(),
    }
}

pub fn verdict_line(label: &str, v: &MzVerdict) -> String {
    let mut s = format!("{label}: {v}");
    if v.conjecture != grdiff_core::Conjecture::None {
        s.push_str(&format!(" [conjecture {}]", v.conjecture.as_str()));
    }
    s
}

pub fn peano(p: &PeanoEquivalence) -> String {
    match p {
        PeanoEquivalence::EstablishedByAllMz => "established (all orders MZ)".into(),
        PeanoEquivalence::EstablishedByIdentity { .. } => "established by identity".into(),
        PeanoEquivalence::Unknown { note } => format!("unknown ({note})"),
    }
}
