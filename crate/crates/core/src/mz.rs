//! Catalog of MZ verdicts for single differentiations, sets and chains.
//!
//! Verdicts are three-valued. Positive and negative verdicts always carry a
//! certificate that can be re-checked; everything else is `Open` and tagged
//! with the conjecture that governs it. All reasoning fixes the base point
//! `x = 0`, since every identity used here is translation invariant.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::equivalence::{decide_equivalent, equivalent_gaussian_among, is_scale, Witness};
use crate::error::{Error, Result};
use crate::family::{check_q, named_scheme, FamilyKind, GaussianMatch, GaussianVariant};
use crate::rational::{display_rational, pow, serde_rational, Rational};
use crate::scheme::{combine, construct_exact, Scheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MzStatus {
    KnownMz,
    KnownNotMz,
    Open,
}

impl MzStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::KnownMz => "known-mz",
            Self::KnownNotMz => "known-not-mz",
            Self::Open => "open",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// Riemann vs. MZ for this order.
    RMz(usize),
    /// Gaussian vs. MZ.
    GMz,
    None,
}

impl Conjecture {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::RMz(_) => "R-MZ",
            Self::GMz => "G-MZ",
            Self::None => "none",
        }
    }
}

impl Serialize for Conjecture {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GgrCoverEntry {
    /// Backward shift index: the member `Δ_{n,−k}`.
    pub k: usize,
    /// Index into the checked set.
    pub member: usize,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    EquivalentToGaussian {
        matched: GaussianMatch,
        witness: Witness,
    },
    EquivalentToMzTilde {
        n: usize,
        witness: Witness,
    },
    EquivalentToMzTildeSymmetric {
        n: usize,
        witness: Witness,
    },
    #[serde(rename = "equivalent-to-d31")]
    EquivalentToD31 {
        witness: Witness,
    },
    RiemannProvenNotMz {
        n: usize,
        witness: Witness,
    },
    #[serde(rename = "symmetric-d2s-not-mz")]
    SymmetricD2sNotMz {
        witness: Witness,
    },
    SymmetricRiemannProvenNotMz {
        n: usize,
        witness: Witness,
    },
    /// Every member is a scale of member 0, which is itself known MZ.
    CommonScale {
        #[serde(serialize_with = "ser_rationals")]
        scales: Vec<Rational>,
        base: Box<Certificate>,
    },
    MemberKnownMz {
        member: usize,
        certificate: Box<Certificate>,
    },
    GgrCover {
        n: usize,
        reduced: bool,
        cover: Vec<GgrCoverEntry>,
    },
    #[serde(rename = "conjecture-r-mz")]
    ConjectureRMz {
        n: usize,
    },
    #[serde(rename = "conjecture-g-mz")]
    ConjectureGMz,
    None,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::rational::serde_rational_vec::serialize(v, s)
}

fn d31() -> Scheme {
    named_scheme(&FamilyKind::RiemannShift { n: 3, k: -1 }).expect("fixed family")
}

fn fixed(kind: FamilyKind) -> Result<Scheme> {
    named_scheme(&kind)
}

impl Certificate {
    /// Short text label used by reports.
    pub fn label(&self) -> String {
        match self {
            Self::EquivalentToGaussian { matched, .. } => {
                format!("equivalent to {}", matched.describe())
            }
            Self::EquivalentToMzTilde { n, .. } => format!("equivalent to tilde D_{n}"),
            Self::EquivalentToMzTildeSymmetric { n, .. } => {
                format!("equivalent to symmetric tilde D_{n}")
            }
            Self::EquivalentToD31 { .. } => "GGR singleton".into(),
            Self::RiemannProvenNotMz { n, .. } => format!("Riemann D_{n}"),
            Self::SymmetricD2sNotMz { .. } => "symmetric D_2".into(),
            Self::SymmetricRiemannProvenNotMz { n, .. } => format!("symmetric Riemann D_{n}"),
            Self::CommonScale { base, .. } => format!("common scale of {}", base.label()),
            Self::MemberKnownMz { member, certificate } => {
                format!("member {member}: {}", certificate.label())
            }
            Self::GgrCover { n, reduced, .. } => {
                format!("{} GGR set of order {n}", if *reduced { "reduced" } else { "full" })
            }
            Self::ConjectureRMz { n } => format!("R-MZ conjecture, n={n}"),
            Self::ConjectureGMz => "G-MZ conjecture".into(),
            Self::None => "none".into(),
        }
    }

    /// Re-checks the certificate against a single scheme.
    pub fn reverify(&self, s: &Scheme) -> bool {
        let check = |base: Result<Scheme>, w: &Witness| base.is_ok_and(|b| w.reverify(&b, s));
        match self {
            Self::EquivalentToGaussian { matched, witness } => {
                check(named_scheme(&matched.family()), witness)
            }
            Self::EquivalentToMzTilde { n, witness } => {
                check(fixed(FamilyKind::MzTilde { n: *n }), witness)
            }
            Self::EquivalentToMzTildeSymmetric { n, witness } => {
                check(fixed(FamilyKind::MzTildeSymmetric { n: *n }), witness)
            }
            Self::EquivalentToD31 { witness } => witness.reverify(&d31(), s),
            Self::RiemannProvenNotMz { n, witness } => {
                check(fixed(FamilyKind::Riemann { n: *n }), witness)
            }
            Self::SymmetricD2sNotMz { witness } => {
                check(fixed(FamilyKind::SymmetricRiemann { n: 2 }), witness)
            }
            Self::SymmetricRiemannProvenNotMz { n, witness } => {
                check(fixed(FamilyKind::SymmetricRiemann { n: *n }), witness)
            }
            Self::ConjectureRMz { .. } | Self::ConjectureGMz | Self::None => true,
            Self::CommonScale { .. } | Self::MemberKnownMz { .. } | Self::GgrCover { .. } => false,
        }
    }

    /// Re-checks a set-level certificate against the set it was issued for.
    pub fn reverify_set(&self, set: &[Scheme]) -> bool {
        match self {
            Self::CommonScale { scales, base } => {
                let Some(first) = set.first() else { return false };
                scales.len() == set.len()
                    && set.iter().zip(scales).all(|(m, r)| {
                        first.scale(r).is_ok_and(|x| x.normalized().ok() == m.normalized().ok())
                    })
                    && base.reverify(first)
            }
            Self::MemberKnownMz {
                member,
                certificate,
            } => set.get(*member).is_some_and(|m| certificate.reverify(m)),
            Self::GgrCover { n, reduced, cover } => {
                let Ok(ggr) = ggr_set(*n, *reduced) else { return false };
                cover.len() == ggr.len()
                    && cover.iter().all(|e| {
                        e.k >= 1
                            && e.k <= ggr.len()
                            && set
                                .get(e.member)
                                .is_some_and(|m| e.witness.reverify(&ggr[e.k - 1], m))
                    })
            }
            other => set.len() == 1 && other.reverify(&set[0]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MzVerdict {
    pub status: MzStatus,
    pub certificate: Certificate,
    pub conjecture: Conjecture,
    /// Whether the verdict concerns symmetric MZ-ness.
    #[serde(skip)]
    pub symmetric: bool,
}

impl MzVerdict {
    fn known(status: MzStatus, certificate: Certificate, symmetric: bool) -> Self {
        MzVerdict {
            status,
            certificate,
            conjecture: Conjecture::None,
            symmetric,
        }
    }

    fn open(conjecture: Conjecture, symmetric: bool) -> Self {
        let certificate = match conjecture {
            Conjecture::RMz(n) => Certificate::ConjectureRMz { n },
            Conjecture::GMz => Certificate::ConjectureGMz,
            Conjecture::None => Certificate::None,
        };
        MzVerdict {
            status: MzStatus::Open,
            certificate,
            conjecture,
            symmetric,
        }
    }

    pub fn is_known_mz(&self) -> bool {
        self.status == MzStatus::KnownMz
    }
}

impl fmt::Display for MzVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.status.as_str(), self.certificate.label())
    }
}

fn witness_against(base: &Scheme, s: &Scheme) -> Result<Option<Witness>> {
    Ok(decide_equivalent(base, s)?.witness().cloned())
}

fn require_normalized(s: &Scheme) -> Result<usize> {
    let info = s.order_info()?;
    if !info.normalizer.is_one() {
        return Err(Error::NotNormalized(display_rational(&info.normalizer)));
    }
    if info.order == 0 {
        return Err(Error::InvalidOrder("MZ verdicts need order at least 1".into()));
    }
    Ok(info.order)
}

/// MZ verdict for one generalized Riemann differentiation.
///
/// In symmetric mode the question is symmetric MZ-ness and `s` must be symmetric.
pub fn mz_check(s: &Scheme, symmetric_mode: bool) -> Result<MzVerdict> {
    let n = require_normalized(s)?;
    if symmetric_mode {
        return mz_check_symmetric(s, n);
    }

    let ordinary = [GaussianVariant::Forward, GaussianVariant::Affine];
    if let Some(g) = equivalent_gaussian_among(s, &ordinary)? {
        return Ok(MzVerdict::known(
            MzStatus::KnownMz,
            Certificate::EquivalentToGaussian {
                matched: g.matched,
                witness: g.witness,
            },
            false,
        ));
    }
    if let Some(w) = witness_against(&fixed(FamilyKind::MzTilde { n })?, s)? {
        return Ok(MzVerdict::known(
            MzStatus::KnownMz,
            Certificate::EquivalentToMzTilde { n, witness: w },
            false,
        ));
    }
    if n == 3 {
        if let Some(w) = witness_against(&d31(), s)? {
            return Ok(MzVerdict::known(
                MzStatus::KnownMz,
                Certificate::EquivalentToD31 { witness: w },
                false,
            ));
        }
    }
    let riemann = witness_against(&fixed(FamilyKind::Riemann { n })?, s)?;
    if let (Some(w), true) = (&riemann, n == 3 || n == 7) {
        return Ok(MzVerdict::known(
            MzStatus::KnownNotMz,
            Certificate::RiemannProvenNotMz {
                n,
                witness: w.clone(),
            },
            false,
        ));
    }
    if n == 2 {
        if let Some(w) = witness_against(&fixed(FamilyKind::SymmetricRiemann { n: 2 })?, s)? {
            return Ok(MzVerdict::known(
                MzStatus::KnownNotMz,
                Certificate::SymmetricD2sNotMz { witness: w },
                false,
            ));
        }
    }
    let tag = if riemann.is_some() && n >= 3 {
        Conjecture::RMz(n)
    } else {
        Conjecture::GMz
    };
    Ok(MzVerdict::open(tag, false))
}

fn mz_check_symmetric(s: &Scheme, n: usize) -> Result<MzVerdict> {
    if !s.is_symmetric(n) {
        return Err(Error::NotSymmetric(n));
    }
    if let Some(g) = equivalent_gaussian_among(s, &[GaussianVariant::SymmetricG])? {
        return Ok(MzVerdict::known(
            MzStatus::KnownMz,
            Certificate::EquivalentToGaussian {
                matched: g.matched,
                witness: g.witness,
            },
            true,
        ));
    }
    if n >= 2 {
        if let Some(w) = witness_against(&fixed(FamilyKind::MzTildeSymmetric { n })?, s)? {
            return Ok(MzVerdict::known(
                MzStatus::KnownMz,
                Certificate::EquivalentToMzTildeSymmetric { n, witness: w },
                true,
            ));
        }
    }
    let riemann = witness_against(&fixed(FamilyKind::SymmetricRiemann { n })?, s)?;
    if let (Some(w), true) = (&riemann, (5..=8).contains(&n)) {
        return Ok(MzVerdict::known(
            MzStatus::KnownNotMz,
            Certificate::SymmetricRiemannProvenNotMz {
                n,
                witness: w.clone(),
            },
            true,
        ));
    }
    let tag = if riemann.is_some() && n >= 9 {
        Conjecture::RMz(n)
    } else {
        Conjecture::GMz
    };
    Ok(MzVerdict::open(tag, true))
}

/// Backward shifts `Δ_{n,−k}` for `k = 1..n`, or `k = 1..⌊n/2⌋` when reduced.
pub fn ggr_set(n: usize, reduced: bool) -> Result<Vec<Scheme>> {
    if n == 0 {
        return Err(Error::InvalidOrder("GGR sets need n >= 1".into()));
    }
    let top = if reduced { n / 2 } else { n };
    if top == 0 {
        return Err(Error::InvalidOrder(format!("reduced GGR set of order {n} is empty")));
    }
    (1..=top)
        .map(|k| {
            let nodes: Vec<Rational> = (0..=n)
                .map(|i| Rational::from_integer((i as i64 - k as i64).into()))
                .collect();
            construct_exact(&nodes, n)
        })
        .collect()
}

/// Confirms that each shifted affine Gaussian `q̄Δ_{n,k}`, `k = ell..ell+n`,
/// is the scale by `q^k` of the unshifted one.
pub fn verify_quantum_ggr(n: usize, ell: i64, q: &Rational) -> Result<Vec<(i64, Rational)>> {
    check_q(q)?;
    let base = named_scheme(&FamilyKind::GaussianAffine { n, q: q.clone() })?;
    let mut out = Vec::with_capacity(n + 1);
    for k in ell..=ell + n as i64 {
        let shifted = named_scheme(&FamilyKind::GaussianAffineShift { n, k, q: q.clone() })?;
        let expected = pow(q, k);
        match is_scale(&base, &shifted)? {
            Some(r) if r == expected => out.push((k, r)),
            other => {
                return Err(Error::Internal(format!(
                    "shift k={k} of the order-{n} affine Gaussian at q={} has scale {other:?}, expected q^k",
                    display_rational(q)
                )))
            }
        }
    }
    Ok(out)
}

fn set_orders(set: &[Scheme]) -> Result<(Vec<Scheme>, usize)> {
    let first = set.first().ok_or(Error::EmptySet)?;
    let normalized: Vec<Scheme> = set.iter().map(Scheme::normalized).collect::<Result<_>>()?;
    let n = first.order()?;
    for m in &normalized {
        if m.order()? != n {
            return Err(Error::MixedOrders);
        }
    }
    Ok((normalized, n))
}

fn ggr_cover(set: &[Scheme], n: usize, reduced: bool) -> Result<Option<Certificate>> {
    let ggr = ggr_set(n, reduced)?;
    let mut cover = Vec::with_capacity(ggr.len());
    for (idx, g) in ggr.iter().enumerate() {
        let mut hit = None;
        for (mi, m) in set.iter().enumerate() {
            if let Some(w) = witness_against(g, m)? {
                hit = Some(GgrCoverEntry {
                    k: idx + 1,
                    member: mi,
                    witness: w,
                });
                break;
            }
        }
        match hit {
            Some(e) => cover.push(e),
            None => return Ok(None),
        }
    }
    Ok(Some(Certificate::GgrCover { n, reduced, cover }))
}

/// MZ verdict for a set of same-order differentiations.
pub fn mz_set_check(set: &[Scheme]) -> Result<MzVerdict> {
    let (set, n) = set_orders(set)?;

    let scales: Option<Vec<Rational>> = set
        .iter()
        .map(|m| is_scale(&set[0], m))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    let first = mz_check(&set[0], false)?;
    if let (Some(scales), true) = (scales, first.is_known_mz()) {
        if set.len() > 1 {
            return Ok(MzVerdict::known(
                MzStatus::KnownMz,
                Certificate::CommonScale {
                    scales,
                    base: Box::new(first.certificate),
                },
                false,
            ));
        }
    }

    let mut verdicts = vec![first];
    for m in &set[1..] {
        verdicts.push(mz_check(m, false)?);
    }
    if let Some((i, v)) = verdicts.iter().enumerate().find(|(_, v)| v.is_known_mz()) {
        return Ok(MzVerdict::known(
            MzStatus::KnownMz,
            Certificate::MemberKnownMz {
                member: i,
                certificate: Box::new(v.certificate.clone()),
            },
            false,
        ));
    }

    // The half-size set for n = 2 is {Δ₂ˢ}, which is not MZ.
    if n >= 3 {
        if let Some(c) = ggr_cover(&set, n, true)? {
            return Ok(MzVerdict::known(MzStatus::KnownMz, c, false));
        }
    }
    if let Some(c) = ggr_cover(&set, n, false)? {
        return Ok(MzVerdict::known(MzStatus::KnownMz, c, false));
    }

    let tag = verdicts[0].conjecture;
    let shared = verdicts.iter().all(|v| v.conjecture == tag);
    Ok(MzVerdict::open(if shared { tag } else { Conjecture::None }, false))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainItem {
    Continuity,
    Scheme(Scheme),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainEntry {
    pub order: usize,
    pub item: ChainItem,
}

impl ChainEntry {
    pub fn continuity() -> Self {
        ChainEntry {
            order: 0,
            item: ChainItem::Continuity,
        }
    }

    pub fn scheme(order: usize, s: Scheme) -> Self {
        ChainEntry {
            order,
            item: ChainItem::Scheme(s),
        }
    }
}

/// `replacement = original + coeff · next(dilation · h)`, an order-`order`
/// difference whose existence follows from the chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReplacement {
    pub order: usize,
    #[serde(with = "serde_rational")]
    pub coeff: Rational,
    #[serde(with = "serde_rational")]
    pub dilation: Rational,
    pub replacement: Scheme,
    pub verdict: MzVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PeanoEquivalence {
    EstablishedByAllMz,
    EstablishedByIdentity { replacements: Vec<IdentityReplacement> },
    Unknown { note: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderVerdict {
    pub order: usize,
    pub verdict: MzVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NTimesReport {
    pub n: usize,
    pub orders_present: Vec<usize>,
    pub all_mz: bool,
    pub per_order: Vec<OrderVerdict>,
    pub peano_equivalence: PeanoEquivalence,
}

fn replacement_candidates(a: &Scheme, next: &Scheme) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    let mut push = |c: Rational, d: Rational| {
        if !c.is_zero() && !out.contains(&(c.clone(), d.clone())) {
            out.push((c, d));
        }
    };
    for t in a.terms() {
        let ct = next.coeff_at(&t.node);
        if !ct.is_zero() {
            push(-(&t.coeff / ct), Rational::one());
        }
    }
    for t in a.terms().iter().filter(|t| !t.node.is_zero()) {
        for u in next.terms().iter().filter(|u| !u.node.is_zero()) {
            push(-(&t.coeff / &u.coeff), &t.node / &u.node);
        }
    }
    out
}

/// Checks an n-times generalized Riemann differentiation chain.
pub fn n_times_check(chain: &[ChainEntry]) -> Result<NTimesReport> {
    if chain.is_empty() {
        return Err(Error::InvalidChain("chain is empty".into()));
    }
    let n = chain.iter().map(|e| e.order).max().expect("non-empty");
    let mut slots: Vec<Option<&ChainItem>> = vec![None; n + 1];
    for e in chain {
        if slots[e.order].replace(&e.item).is_some() {
            return Err(Error::DuplicateOrder(e.order));
        }
    }
    if let Some(missing) = slots.iter().position(Option::is_none) {
        return Err(Error::MissingOrder(missing));
    }
    let mut schemes: Vec<Scheme> = Vec::with_capacity(n);
    for (order, item) in slots.iter().enumerate() {
        match (order, item.expect("all slots filled")) {
            (0, ChainItem::Continuity) => {}
            (0, ChainItem::Scheme(_)) => {
                return Err(Error::InvalidChain("order 0 must be the continuity marker".into()))
            }
            (_, ChainItem::Continuity) => {
                return Err(Error::InvalidChain(format!(
                    "continuity marker listed at order {order}"
                )))
            }
            (_, ChainItem::Scheme(s)) => {
                let detected = s.order()?;
                if detected != order {
                    return Err(Error::DeclaredOrderMismatch {
                        declared: order,
                        detected,
                    });
                }
                schemes.push(s.clone());
            }
        }
    }

    let per_order: Vec<OrderVerdict> = schemes
        .iter()
        .enumerate()
        .map(|(i, s)| {
            Ok(OrderVerdict {
                order: i + 1,
                verdict: mz_check(s, false)?,
            })
        })
        .collect::<Result<_>>()?;
    let all_mz = per_order.iter().all(|v| v.verdict.is_known_mz());

    let peano_equivalence = if all_mz {
        PeanoEquivalence::EstablishedByAllMz
    } else if !per_order[n - 1].verdict.is_known_mz() {
        PeanoEquivalence::Unknown {
            note: format!(
                "the top order {n} must itself be an MZ differentiation and is not known to be"
            ),
        }
    } else {
        identity_search(&schemes, &per_order)?
    };

    Ok(NTimesReport {
        n,
        orders_present: (0..=n).collect(),
        all_mz,
        per_order,
        peano_equivalence,
    })
}

fn identity_search(schemes: &[Scheme], per_order: &[OrderVerdict]) -> Result<PeanoEquivalence> {
    let n = schemes.len();
    let mut replacements = Vec::new();
    for j in (1..n).rev() {
        if per_order[j - 1].verdict.is_known_mz() {
            continue;
        }
        let (a, next) = (&schemes[j - 1], &schemes[j]);
        let mut found = None;
        for (c, d) in replacement_candidates(a, next) {
            let e = combine(&[
                (Rational::one(), Rational::one(), a.clone()),
                (c.clone(), d.clone(), next.clone()),
            ])?;
            if e.order().ok() != Some(j) {
                continue;
            }
            let v = mz_check(&e, false)?;
            if v.is_known_mz() {
                found = Some(IdentityReplacement {
                    order: j,
                    coeff: c,
                    dilation: d,
                    replacement: e,
                    verdict: v,
                });
                break;
            }
        }
        match found {
            Some(r) => replacements.push(r),
            None => {
                return Ok(PeanoEquivalence::Unknown {
                    note: format!("no MZ replacement found for order {j}"),
                })
            }
        }
    }
    Ok(PeanoEquivalence::EstablishedByIdentity { replacements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn fam(family_text: &str) -> Scheme {
        named_scheme(&family_text.parse().unwrap()).unwrap()
    }

    #[test]
    fn single_verdicts() {
        let v = mz_check(&fam("mz-tilde:n=4"), false).unwrap();
        assert_eq!(v.status, MzStatus::KnownMz);
        match &v.certificate {
            Certificate::EquivalentToGaussian { matched, .. } => {
                assert_eq!((matched.variant, matched.q.clone()), (GaussianVariant::Forward, int(2)))
            }
            other => panic!("unexpected certificate {other:?}"),
        }

        let v = mz_check(&fam("shift:n=3,k=-1"), false).unwrap();
        assert_eq!(v.status, MzStatus::KnownMz);
        assert!(matches!(v.certificate, Certificate::EquivalentToD31 { .. }));
        assert_eq!(v.to_string(), "known-mz (GGR singleton)");

        let v = mz_check(&fam("riemann:n=3"), false).unwrap();
        assert_eq!(v.status, MzStatus::KnownNotMz);
        assert!(matches!(v.certificate, Certificate::RiemannProvenNotMz { n: 3, .. }));

        let v = mz_check(&fam("riemann:n=5"), false).unwrap();
        assert_eq!((v.status, v.conjecture), (MzStatus::Open, Conjecture::RMz(5)));
        assert_eq!(v.certificate, Certificate::ConjectureRMz { n: 5 });

        let v = mz_check(&fam("sym-riemann:n=2"), false).unwrap();
        assert_eq!(v.status, MzStatus::KnownNotMz);
        assert!(matches!(v.certificate, Certificate::SymmetricD2sNotMz { .. }));
    }

    #[test]
    fn certificates_reverify() {
        for family_text in [
            "mz-tilde:n=4",
            "shift:n=3,k=-1",
            "riemann:n=3",
            "riemann:n=7",
            "sym-riemann:n=2",
            "gauss-aff:n=3,k=2,q=-3",
        ] {
            let s = fam(family_text);
            let v = mz_check(&s, false).unwrap();
            assert!(v.certificate.reverify(&s), "{family_text}");
        }
        let s = fam("shift:n=3,k=-1").scale(&frac(47, 10)).unwrap();
        let v = mz_check(&s, false).unwrap();
        assert!(matches!(v.certificate, Certificate::EquivalentToD31 { .. }));
        assert!(v.certificate.reverify(&s));
    }

    #[test]
    fn symmetric_mode() {
        for n in 1..=6 {
            let s = fam(&format!("gauss-sym:n={n},q=3"));
            assert!(mz_check(&s, true).unwrap().is_known_mz(), "n={n}");
        }
        assert!(mz_check(&fam("sym-riemann:n=2"), true).unwrap().is_known_mz());
        let v = mz_check(&fam("sym-riemann:n=6"), true).unwrap();
        assert_eq!(v.status, MzStatus::KnownNotMz);
        let v = mz_check(&fam("sym-riemann:n=9"), true).unwrap();
        assert_eq!((v.status, v.conjecture), (MzStatus::Open, Conjecture::RMz(9)));
        assert_eq!(mz_check(&fam("riemann:n=3"), true), Err(Error::NotSymmetric(3)));
    }

    #[test]
    fn errors() {
        let d = fam("riemann:n=3").mul_scalar(&int(2));
        assert!(matches!(mz_check(&d, false), Err(Error::NotNormalized(_))));
        assert_eq!(mz_set_check(&[]), Err(Error::EmptySet));
        assert_eq!(
            mz_set_check(&[fam("riemann:n=3"), fam("riemann:n=4")]),
            Err(Error::MixedOrders)
        );
    }

    #[test]
    fn ggr_sets() {
        let reduced = ggr_set(3, true).unwrap();
        assert_eq!(reduced, vec![fam("shift:n=3,k=-1")]);
        assert_eq!(ggr_set(4, false).unwrap().len(), 4);
        let five = ggr_set(5, true).unwrap();
        assert_eq!(five, vec![fam("shift:n=5,k=-1"), fam("shift:n=5,k=-2")]);
        assert!(ggr_set(1, true).is_err());
        assert!(ggr_set(0, false).is_err());
    }

    #[test]
    fn quantum_ggr() {
        let w = verify_quantum_ggr(2, -2, &int(3)).unwrap();
        assert_eq!(w, vec![(-2, frac(1, 9)), (-1, frac(1, 3)), (0, int(1))]);
        let w = verify_quantum_ggr(3, 0, &int(2)).unwrap();
        let scales: Vec<Rational> = w.into_iter().map(|(_, r)| r).collect();
        assert_eq!(scales, vec![int(1), int(2), int(4), int(8)]);
        assert_eq!(
            verify_quantum_ggr(2, 0, &int(1)),
            Err(Error::InvalidQ("1".into()))
        );
        assert!(verify_quantum_ggr(3, -1, &int(-2)).is_ok());
    }

    #[test]
    fn set_verdicts() {
        let full = ggr_set(4, false).unwrap();
        let v = mz_set_check(&full).unwrap();
        assert!(v.is_known_mz());
        assert!(v.certificate.reverify_set(&full));

        let quantum: Vec<Scheme> = (0..=2)
            .map(|k| fam(&format!("gauss-aff:n=2,k={k},q=3")))
            .collect();
        let v = mz_set_check(&quantum).unwrap();
        assert!(matches!(v.certificate, Certificate::CommonScale { .. }));
        assert!(v.certificate.reverify_set(&quantum));

        let v = mz_set_check(&[fam("riemann:n=5")]).unwrap();
        assert_eq!((v.status, v.conjecture), (MzStatus::Open, Conjecture::RMz(5)));

        // Supersets of an MZ-set stay MZ.
        let mut bigger = full.clone();
        bigger.push(fam("riemann:n=4"));
        assert!(mz_set_check(&bigger).unwrap().is_known_mz());
    }

    #[test]
    fn chains() {
        let e14 = vec![
            ChainEntry::continuity(),
            ChainEntry::scheme(1, fam("gauss-aff:n=1,q=22/7")),
            ChainEntry::scheme(2, fam("gauss-fwd:n=2,q=5")),
            ChainEntry::scheme(3, fam("shift:n=3,k=-1").scale(&frac(47, 10)).unwrap()),
        ];
        let r = n_times_check(&e14).unwrap();
        assert!(r.all_mz);
        assert_eq!(r.peano_equivalence, PeanoEquivalence::EstablishedByAllMz);

        let chain = vec![
            ChainEntry::continuity(),
            ChainEntry::scheme(1, fam("riemann:n=1")),
            ChainEntry::scheme(2, fam("sym-riemann:n=2")),
            ChainEntry::scheme(3, fam("shift:n=3,k=-1")),
        ];
        let r = n_times_check(&chain).unwrap();
        assert!(!r.all_mz);
        let PeanoEquivalence::EstablishedByIdentity { replacements } = &r.peano_equivalence else {
            panic!("expected an identity certificate, got {:?}", r.peano_equivalence);
        };
        assert_eq!(replacements.len(), 1);
        assert_eq!(replacements[0].order, 2);
        assert_eq!(replacements[0].replacement, fam("riemann:n=2"));
        assert_eq!((replacements[0].coeff.clone(), replacements[0].dilation.clone()), (int(1), int(1)));

        let missing = vec![
            ChainEntry::continuity(),
            ChainEntry::scheme(1, fam("riemann:n=1")),
            ChainEntry::scheme(3, fam("shift:n=3,k=-1")),
        ];
        assert_eq!(n_times_check(&missing), Err(Error::MissingOrder(2)));

        let dup = vec![
            ChainEntry::continuity(),
            ChainEntry::scheme(1, fam("riemann:n=1")),
            ChainEntry::scheme(1, fam("riemann:n=1")),
        ];
        assert_eq!(n_times_check(&dup), Err(Error::DuplicateOrder(1)));

        let wrong = vec![ChainEntry::continuity(), ChainEntry::scheme(1, fam("riemann:n=2"))];
        assert!(matches!(
            n_times_check(&wrong),
            Err(Error::DeclaredOrderMismatch { declared: 1, detected: 2 })
        ));

        let top_open = vec![
            ChainEntry::continuity(),
            ChainEntry::scheme(1, fam("riemann:n=1")),
            ChainEntry::scheme(2, fam("riemann:n=2")),
            ChainEntry::scheme(3, fam("riemann:n=3")),
        ];
        let r = n_times_check(&top_open).unwrap();
        assert!(matches!(r.peano_equivalence, PeanoEquivalence::Unknown { .. }));
    }

    #[test]
    fn verdict_json() {
        let v = mz_check(&fam("riemann:n=5"), false).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"status":"open","certificate":{"kind":"conjecture-r-mz","n":5},"conjecture":"R-MZ"}"#
        );
    }
}
