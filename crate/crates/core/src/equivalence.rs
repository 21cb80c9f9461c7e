//! Equivalence of generalized Riemann differentiations.
//!
//! Two order-`n` differences `a`, `b` are equivalent when their
//! symmetrizers are scales of each other and their skew-symmetrizers are
//! proportional dilates: `b⁺ = scale(a⁺, r)` and `b⁻ = B·a⁻(s·h)`.
//! Every positive verdict carries a [`Witness`] that re-expands exactly.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::{best_match, named_scheme, recognize_gaussian, GaussianMatch, GaussianVariant};
use crate::rational::{display_rational, format_rational, int, pow, Rational};
use crate::scheme::Scheme;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub n: usize,
    /// Symmetric-part scale.
    pub r: Rational,
    /// Skew-part dilation.
    pub s: Rational,
    /// `r^{-n}`, the constant in front of the symmetrizer dilate.
    pub sym_factor: Rational,
    /// Constant in front of the skew dilate; zero only when both skew parts vanish.
    pub skew_factor: Rational,
}

impl Witness {
    pub fn new(n: usize, r: Rational, s: Rational, skew_factor: Rational) -> Self {
        let sym_factor = pow(&r, -(n as i64));
        Witness {
            n,
            r,
            s,
            sym_factor,
            skew_factor,
        }
    }

    /// Witness for `b = scale(a, r)` given `a`'s skew part.
    fn from_scale(n: usize, r: &Rational, a_minus_is_zero: bool) -> Self {
        if a_minus_is_zero {
            return Witness::new(n, r.abs(), int(1), Rational::zero());
        }
        // a⁻ has parity n+1, so a⁻(rh) = ±a⁻(|r|h).
        let mut b = pow(r, -(n as i64));
        if r.is_negative() && n % 2 == 0 {
            b = -b;
        }
        Witness::new(n, r.abs(), r.abs(), b)
    }

    /// Re-expands both identities and the explicit class formula against `a`, `b`.
    pub fn reverify(&self, a: &Scheme, b: &Scheme) -> bool {
        let Ok(a) = a.normalized() else { return false };
        let Ok(b) = b.normalized() else { return false };
        if a.order().ok() != Some(self.n) || b.order().ok() != Some(self.n) {
            return false;
        }
        if self.sym_factor != pow(&self.r, -(self.n as i64)) {
            return false;
        }
        let (ap, am) = a.decompose(self.n);
        let (bp, bm) = b.decompose(self.n);
        let sym_ok = ap.scale_with_order(&self.r, self.n).is_ok_and(|x| x == bp);
        let skew_ok = am
            .dilate(&self.s)
            .is_ok_and(|x| x.mul_scalar(&self.skew_factor) == bm);
        let member_ok = class_member(&a, &self.r, &self.s, &self.skew_factor)
            .is_ok_and(|x| x == b);
        sym_ok && skew_ok && member_ok
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Witness", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("r", &format_rational(&self.r))?;
        st.serialize_field("s", &format_rational(&self.s))?;
        st.serialize_field("A", &format_rational(&self.sym_factor))?;
        st.serialize_field("B", &format_rational(&self.skew_factor))?;
        st.end()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} r={} s={} A={} B={}",
            self.n,
            display_rational(&self.r),
            display_rational(&self.s),
            display_rational(&self.sym_factor),
            display_rational(&self.skew_factor)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquivalencePath {
    General,
    FastNonNegNodes,
    FastDistinctAbs,
    SymmetricScale,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inequivalence {
    OrderMismatch,
    SymmetricPartMismatch,
    SkewPartMismatch,
    SkewZeroVsNonzero,
}

impl EquivalencePath {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::General => "general",
            Self::FastNonNegNodes => "fast-non-neg-nodes",
            Self::FastDistinctAbs => "fast-distinct-abs",
            Self::SymmetricScale => "symmetric-scale",
        }
    }
}

impl Inequivalence {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::OrderMismatch => "order-mismatch",
            Self::SymmetricPartMismatch => "symmetric-part-mismatch",
            Self::SkewPartMismatch => "skew-part-mismatch",
            Self::SkewZeroVsNonzero => "skew-zero-vs-nonzero",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceResult {
    Equivalent {
        witness: Witness,
        path: EquivalencePath,
    },
    NotEquivalent {
        reason: Inequivalence,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub result: EquivalenceResult,
    /// Set when an input had to be normalized first.
    pub normalized_inputs: bool,
}

impl EquivalenceVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self.result, EquivalenceResult::Equivalent { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.result {
            EquivalenceResult::Equivalent { witness, .. } => Some(witness),
            EquivalenceResult::NotEquivalent { .. } => None,
        }
    }

    pub fn path(&self) -> Option<EquivalencePath> {
        match &self.result {
            EquivalenceResult::Equivalent { path, .. } => Some(*path),
            EquivalenceResult::NotEquivalent { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<Inequivalence> {
        match &self.result {
            EquivalenceResult::Equivalent { .. } => None,
            EquivalenceResult::NotEquivalent { reason } => Some(*reason),
        }
    }
}

impl Serialize for EquivalenceVerdict {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("EquivalenceVerdict", 4)?;
        st.serialize_field("equivalent", &self.is_equivalent())?;
        st.serialize_field("witness", &self.witness())?;
        st.serialize_field("path", &self.path().map(EquivalencePath::as_str))?;
        st.serialize_field("reason", &self.reason().map(Inequivalence::as_str))?;
        st.end()
    }
}

impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.result {
            EquivalenceResult::Equivalent { witness, path } => {
                write!(f, "equivalent ({}) {witness}", path.as_str())
            }
            EquivalenceResult::NotEquivalent { reason } => {
                write!(f, "not equivalent ({})", reason.as_str())
            }
        }
    }
}

fn not_equivalent(reason: Inequivalence, normalized_inputs: bool) -> EquivalenceVerdict {
    EquivalenceVerdict {
        result: EquivalenceResult::NotEquivalent { reason },
        normalized_inputs,
    }
}

fn normalize_pair(a: &Scheme, b: &Scheme) -> Result<(Scheme, Scheme, bool)> {
    let ia = a.order_info()?;
    let ib = b.order_info()?;
    let flag = !ia.normalizer.is_one() || !ib.normalizer.is_one();
    Ok((a.mul_scalar(&ia.normalizer), b.mul_scalar(&ib.normalizer), flag))
}

fn ratio_of_extremes(from: &Scheme, to: &Scheme) -> Option<Rational> {
    let ma = from.max_abs_node()?;
    let mb = to.max_abs_node()?;
    match (ma.is_zero(), mb.is_zero()) {
        (true, true) => Some(int(1)),
        (false, false) => Some(mb / ma),
        _ => None,
    }
}

/// The test on decomposed parts; never takes a fast path.
pub fn decide_equivalent_general(a: &Scheme, b: &Scheme) -> Result<EquivalenceVerdict> {
    let (a, b, flag) = normalize_pair(a, b)?;
    let n = a.order()?;
    if b.order()? != n {
        return Ok(not_equivalent(Inequivalence::OrderMismatch, flag));
    }
    let (ap, am) = a.decompose(n);
    let (bp, bm) = b.decompose(n);

    // Scaling a symmetric part by r or −r gives the same scheme, so the
    // positive extreme-node ratio is the only candidate.
    let r = match ratio_of_extremes(&ap, &bp) {
        Some(r) if ap.scale_with_order(&r, n)? == bp => r,
        _ => return Ok(not_equivalent(Inequivalence::SymmetricPartMismatch, flag)),
    };

    let (s, skew) = match (am.is_zero(), bm.is_zero()) {
        (true, true) => (int(1), Rational::zero()),
        (true, false) | (false, true) => {
            return Ok(not_equivalent(Inequivalence::SkewZeroVsNonzero, flag))
        }
        (false, false) => {
            let Some(s) = ratio_of_extremes(&am, &bm) else {
                return Ok(not_equivalent(Inequivalence::SkewPartMismatch, flag));
            };
            let dilated = am.dilate(&s)?;
            let top = bm.terms().last().expect("non-zero skew part");
            let base = dilated.coeff_at(&top.node);
            if base.is_zero() {
                return Ok(not_equivalent(Inequivalence::SkewPartMismatch, flag));
            }
            let factor = &top.coeff / base;
            if dilated.mul_scalar(&factor) != bm {
                return Ok(not_equivalent(Inequivalence::SkewPartMismatch, flag));
            }
            (s, factor)
        }
    };
    Ok(EquivalenceVerdict {
        result: EquivalenceResult::Equivalent {
            witness: Witness::new(n, r, s, skew),
            path: EquivalencePath::General,
        },
        normalized_inputs: flag,
    })
}

/// Decides equivalence, using the scale criterion when one of the classical
/// sufficient conditions applies.
pub fn decide_equivalent(a: &Scheme, b: &Scheme) -> Result<EquivalenceVerdict> {
    let (na, nb, flag) = normalize_pair(a, b)?;
    let n = na.order()?;
    if nb.order()? != n {
        return Ok(not_equivalent(Inequivalence::OrderMismatch, flag));
    }
    let path = if na.is_symmetric(n) && nb.is_symmetric(n) {
        Some(EquivalencePath::SymmetricScale)
    } else if na.all_nodes_nonnegative() && nb.all_nodes_nonnegative() {
        Some(EquivalencePath::FastNonNegNodes)
    } else if na.is_exact()
        && nb.is_exact()
        && (na.has_distinct_abs_nodes() || nb.has_distinct_abs_nodes())
    {
        Some(EquivalencePath::FastDistinctAbs)
    } else {
        None
    };
    if let Some(path) = path {
        if let Some(r) = is_scale(&na, &nb)? {
            let (_, am) = na.decompose(n);
            return Ok(EquivalenceVerdict {
                result: EquivalenceResult::Equivalent {
                    witness: Witness::from_scale(n, &r, am.is_zero()),
                    path,
                },
                normalized_inputs: flag,
            });
        }
    }
    let mut verdict = decide_equivalent_general(&na, &nb)?;
    verdict.normalized_inputs = flag;
    if path.is_some() && verdict.is_equivalent() {
        return Err(Error::Internal(
            "fast path found no scale but the general test found an equivalence".into(),
        ));
    }
    Ok(verdict)
}

/// `scale(a⁺, r) + B·a⁻(s·h)`; equivalent to `a` by construction.
pub fn class_member(a: &Scheme, r: &Rational, s: &Rational, skew_factor: &Rational) -> Result<Scheme> {
    let n = a.order()?;
    if r.is_zero() {
        return Err(Error::ZeroScale);
    }
    if s.is_zero() {
        return Err(Error::ZeroDilation);
    }
    let (ap, am) = a.decompose(n);
    if skew_factor.is_zero() && !am.is_zero() {
        return Err(Error::ZeroSkewFactor);
    }
    let sym = ap.scale_with_order(r, n)?;
    let skew = am.dilate(s)?.mul_scalar(skew_factor);
    Ok(&sym + &skew)
}

/// `Σ aᵢ {A[f(x+bᵢrh) − f(x−bᵢrh)] + B[f(x+bᵢsh) + f(x−bᵢsh)]}/2`.
pub fn explicit_class_member(
    a: &Scheme,
    big_a: &Rational,
    big_b: &Rational,
    r: &Rational,
    s: &Rational,
) -> Result<Scheme> {
    if a.is_zero() {
        return Err(Error::ZeroScheme);
    }
    if r.is_zero() || s.is_zero() {
        return Err(Error::ZeroScale);
    }
    let half = Rational::new(1.into(), 2.into());
    let mut raw = Vec::with_capacity(4 * a.len());
    for t in a.terms() {
        let odd = &t.coeff * big_a * &half;
        let even = &t.coeff * big_b * &half;
        raw.push((odd.clone(), &t.node * r));
        raw.push((-odd, -(&t.node * r)));
        raw.push((even.clone(), &t.node * s));
        raw.push((even, -(&t.node * s)));
    }
    Ok(Scheme::canonicalize(raw))
}

/// `r` with `scale(a, r) = b`, trying the positive extreme ratio first.
pub fn is_scale(a: &Scheme, b: &Scheme) -> Result<Option<Rational>> {
    let n = a.order()?;
    if b.order()? != n || a.len() != b.len() {
        return Ok(None);
    }
    let Some(r) = ratio_of_extremes(a, b) else {
        return Ok(None);
    };
    for cand in [r.clone(), -r] {
        if a.scale_with_order(&cand, n)? == *b {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussianEquivalence {
    pub matched: GaussianMatch,
    pub witness: Witness,
}

/// Decides whether `s` is equivalent to some Gaussian differentiation.
pub fn equivalent_gaussian(s: &Scheme) -> Result<Option<GaussianEquivalence>> {
    equivalent_gaussian_among(s, &GaussianVariant::ALL)
}

pub fn equivalent_gaussian_among(
    s: &Scheme,
    variants: &[GaussianVariant],
) -> Result<Option<GaussianEquivalence>> {
    let s = s.normalized()?;
    let n = s.order()?;
    if n == 0 {
        return Ok(None);
    }

    // Both sides are exact and s has distinct absolute nodes: equivalence is scaling.
    if s.is_exact() && s.has_distinct_abs_nodes() {
        let Some(m) = recognize_gaussian(&s) else {
            return Ok(None);
        };
        if !variants.contains(&m.variant) {
            return Ok(None);
        }
        let member = named_scheme(&m.family())?;
        let verdict = decide_equivalent(&member, &s)?;
        let witness = verdict.witness().cloned().ok_or_else(|| {
            Error::Internal("recognized Gaussian scale failed the equivalence test".into())
        })?;
        return Ok(Some(GaussianEquivalence { matched: m, witness }));
    }

    let (sp, _) = s.decompose(n);
    let p: Vec<Rational> = sp.nodes().filter(|b| b.is_positive()).cloned().collect();
    if p.is_empty() {
        return Ok(None);
    }
    let len = p.len();
    let mut qs: Vec<Rational> = Vec::new();
    if len == 1 {
        qs.push(int(2));
    } else {
        let rho = &p[1] / &p[0];
        if p.windows(2).any(|w| &w[1] / &w[0] != rho) {
            return Ok(None);
        }
        let inv = rho.recip();
        qs.extend([rho.clone(), -rho, inv.clone(), -inv]);
    }

    let mut found = Vec::new();
    let mut witnesses = Vec::new();
    for &variant in variants {
        if variant.positive_node_count(n) != len {
            continue;
        }
        let candidates: &[Rational] = if variant.q_independent(n) { &qs[..1] } else { &qs };
        for q in candidates {
            let q = if variant.q_independent(n) { int(2) } else { q.clone() };
            let member = named_scheme(&variant.family(n, q.clone()))?;
            if let Some(w) = decide_equivalent(&member, &s)?.witness() {
                let m = GaussianMatch {
                    variant,
                    q,
                    scale_b: w.r.clone(),
                    n,
                };
                witnesses.push((m.clone(), w.clone()));
                found.push(m);
            }
        }
    }
    let Some(best) = best_match(found) else {
        return Ok(None);
    };
    let witness = witnesses
        .into_iter()
        .find(|(m, _)| *m == best)
        .map(|(_, w)| w)
        .expect("best match comes from the candidate list");
    Ok(Some(GaussianEquivalence {
        matched: best,
        witness,
    }))
}
