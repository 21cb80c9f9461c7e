//! Named difference families, q-binomials and Gaussian recognition.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{
    binomial, display_rational, factorial, int, parse_rational, pow, serde_rational, Rational,
};
use crate::scheme::{construct_exact, construct_exact_symmetric, Scheme};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Riemann { n: usize },
    RiemannShift { n: usize, k: i64 },
    SymmetricRiemann { n: usize },
    GaussianForward { n: usize, q: Rational },
    GaussianAffine { n: usize, q: Rational },
    GaussianAffineShift { n: usize, k: i64, q: Rational },
    GaussianSymmetric { n: usize, q: Rational },
    MzTilde { n: usize },
    MzTildeSymmetric { n: usize },
    ScriptD { n: usize, q: Rational },
    ScriptDBar { n: usize, q: Rational },
}

impl FamilyKind {
    pub fn order(&self) -> usize {
        use FamilyKind::*;
        match self {
            Riemann { n }
            | RiemannShift { n, .. }
            | SymmetricRiemann { n }
            | GaussianForward { n, .. }
            | GaussianAffine { n, .. }
            | GaussianAffineShift { n, .. }
            | GaussianSymmetric { n, .. }
            | MzTilde { n }
            | MzTildeSymmetric { n }
            | ScriptD { n, .. }
            | ScriptDBar { n, .. } => *n,
        }
    }

    fn q(&self) -> Option<&Rational> {
        use FamilyKind::*;
        match self {
            GaussianForward { q, .. }
            | GaussianAffine { q, .. }
            | GaussianAffineShift { q, .. }
            | GaussianSymmetric { q, .. }
            | ScriptD { q, .. }
            | ScriptDBar { q, .. } => Some(q),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 {
            return Err(Error::InvalidOrder("family order must be at least 1".into()));
        }
        if matches!(self, FamilyKind::MzTildeSymmetric { .. }) && n < 2 {
            return Err(Error::InvalidOrder(
                "symmetric tilde difference needs n >= 2".into(),
            ));
        }
        if let Some(q) = self.q() {
            check_q(q)?;
        }
        Ok(())
    }
}

pub fn check_q(q: &Rational) -> Result<()> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::InvalidQ(display_rational(q)));
    }
    Ok(())
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyKind::*;
        let q = |q: &Rational| display_rational(q);
        match self {
            Riemann { n } => write!(f, "riemann:n={n}"),
            RiemannShift { n, k } => write!(f, "shift:n={n},k={k}"),
            SymmetricRiemann { n } => write!(f, "sym-riemann:n={n}"),
            GaussianForward { n, q: v } => write!(f, "gauss-fwd:n={n},q={}", q(v)),
            GaussianAffine { n, q: v } => write!(f, "gauss-aff:n={n},q={}", q(v)),
            GaussianAffineShift { n, k, q: v } => write!(f, "gauss-aff:n={n},k={k},q={}", q(v)),
            GaussianSymmetric { n, q: v } => write!(f, "gauss-sym:n={n},q={}", q(v)),
            MzTilde { n } => write!(f, "mz-tilde:n={n}"),
            MzTildeSymmetric { n } => write!(f, "mz-tilde-sym:n={n}"),
            ScriptD { n, q: v } => write!(f, "scriptD:n={n},q={}", q(v)),
            ScriptDBar { n, q: v } => write!(f, "scriptDbar:n={n},q={}", q(v)),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("family {s:?}: {msg}"));
        let (tag, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let mut n = None;
        let mut k = None;
        let mut q = None;
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let value = value.trim();
            match key.trim() {
                "n" => n = Some(value.parse::<usize>().map_err(|_| bad("n must be a non-negative integer"))?),
                "k" => k = Some(value.parse::<i64>().map_err(|_| bad("k must be an integer"))?),
                "q" => q = Some(parse_rational(value)?),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| bad("missing n"))?;
        let need_q = || q.clone().ok_or_else(|| bad("missing q"));
        let kind = match tag {
            "riemann" => FamilyKind::Riemann { n },
            "shift" => FamilyKind::RiemannShift {
                n,
                k: k.ok_or_else(|| bad("missing k"))?,
            },
            "sym-riemann" => FamilyKind::SymmetricRiemann { n },
            "gauss-fwd" => FamilyKind::GaussianForward { n, q: need_q()? },
            "gauss-aff" => match k {
                Some(k) => FamilyKind::GaussianAffineShift { n, k, q: need_q()? },
                None => FamilyKind::GaussianAffine { n, q: need_q()? },
            },
            "gauss-sym" => FamilyKind::GaussianSymmetric { n, q: need_q()? },
            "mz-tilde" => FamilyKind::MzTilde { n },
            "mz-tilde-sym" => FamilyKind::MzTildeSymmetric { n },
            "scriptD" => FamilyKind::ScriptD { n, q: need_q()? },
            "scriptDbar" => FamilyKind::ScriptDBar { n, q: need_q()? },
            other => return Err(bad(&format!("unknown family {other:?}"))),
        };
        if k.is_some()
            && !matches!(
                kind,
                FamilyKind::RiemannShift { .. } | FamilyKind::GaussianAffineShift { .. }
            )
        {
            return Err(bad("k is only valid for shifts"));
        }
        Ok(kind)
    }
}

/// Gaussian binomial `[n choose i]_q` by `[n,i] = [n−1,i−1] + qⁱ[n−1,i]`.
pub fn qbinom(n: usize, i: usize, q: &Rational) -> Result<Rational> {
    if i > n {
        return Err(Error::IndexOutOfRange { n, i });
    }
    let mut row = vec![Rational::one()];
    for m in 1..=n {
        let mut next = vec![Rational::one(); m + 1];
        for j in 1..m {
            next[j] = &row[j - 1] + pow(q, j as i64) * &row[j];
        }
        row = next;
    }
    Ok(row[i].clone())
}

/// `n! / Π_{j<n} (qⁿ − qʲ)`.
pub fn lambda_bar(n: usize, q: &Rational) -> Rational {
    let qn = pow(q, n as i64);
    let denom: Rational = (0..n).map(|j| &qn - pow(q, j as i64)).product();
    factorial(n) / denom
}

/// Closed form of the exact difference on `q^k, …, q^{n+k}`.
pub fn affine_shift_closed_form(n: usize, k: i64, q: &Rational) -> Result<Scheme> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::InvalidOrder("order must be at least 1".into()));
    }
    let lead = pow(q, -(n as i64) * k) * lambda_bar(n, q);
    let mut raw = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        let c = &lead * sign * pow(q, (i * i.saturating_sub(1) / 2) as i64) * qbinom(n, i, q)?;
        raw.push((c, pow(q, n as i64 + k - i as i64)));
    }
    Ok(Scheme::canonicalize(raw))
}

fn binomial_row(n: usize, node: impl Fn(usize) -> Rational) -> Scheme {
    Scheme::canonicalize((0..=n).map(|i| {
        let c = Rational::from_integer(binomial(n, i));
        let c = if i % 2 == 0 { c } else { -c };
        (c, node(i))
    }))
}

fn geometric(q: &Rational, exps: impl IntoIterator<Item = i64>) -> Vec<Rational> {
    exps.into_iter().map(|e| pow(q, e)).collect()
}

fn solved_and_closed_agree(closed: Scheme, nodes: &[Rational], n: usize) -> Result<Scheme> {
    let solved = construct_exact(nodes, n)?;
    if solved != closed {
        return Err(Error::Internal(format!(
            "Gaussian closed form disagrees with the Vandermonde solution: {closed} vs {solved}"
        )));
    }
    Ok(closed)
}

/// The exact difference of a named family.
pub fn named_scheme(kind: &FamilyKind) -> Result<Scheme> {
    kind.validate()?;
    use FamilyKind::*;
    match kind {
        Riemann { n } => Ok(binomial_row(*n, |i| int((n - i) as i64))),
        RiemannShift { n, k } => Ok(binomial_row(*n, |i| int((n - i) as i64 + k))),
        SymmetricRiemann { n } => Ok(binomial_row(*n, |i| {
            Rational::new((*n as i64 - 2 * i as i64).into(), 2.into())
        })),
        GaussianForward { n, q } => {
            let mut nodes = vec![Rational::zero()];
            nodes.extend(geometric(q, 0..*n as i64));
            construct_exact(&nodes, *n)
        }
        GaussianAffine { n, q } => {
            let nodes = geometric(q, 0..=*n as i64);
            solved_and_closed_agree(affine_shift_closed_form(*n, 0, q)?, &nodes, *n)
        }
        GaussianAffineShift { n, k, q } => {
            let nodes = geometric(q, *k..=*n as i64 + k);
            solved_and_closed_agree(affine_shift_closed_form(*n, *k, q)?, &nodes, *n)
        }
        GaussianSymmetric { n, q } => {
            let pairs = geometric(&q.abs(), 0..(n.div_ceil(2)) as i64);
            construct_exact_symmetric(&pairs, n % 2 == 0, *n)
        }
        MzTilde { n } => {
            let mut nodes = vec![Rational::zero()];
            nodes.extend(geometric(&int(2), 0..*n as i64));
            construct_exact(&nodes, *n)
        }
        MzTildeSymmetric { n } => {
            let m = (n - 1) / 2;
            let pairs = geometric(&int(2), 0..=m as i64);
            construct_exact_symmetric(&pairs, n % 2 == 0, *n)
        }
        ScriptD { n, q } => {
            let mut nodes = vec![Rational::zero(), Rational::one()];
            nodes.extend((0..n.saturating_sub(1)).map(|e| pow(q, 1 << e)));
            construct_exact(&nodes, *n)
        }
        ScriptDBar { n, q } => {
            let mut nodes = vec![Rational::one()];
            nodes.extend((0..*n).map(|e| pow(q, 1 << e)));
            construct_exact(&nodes, *n)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaussianVariant {
    Forward,
    Affine,
    #[serde(rename = "symmetric")]
    SymmetricG,
}

impl GaussianVariant {
    pub const ALL: [GaussianVariant; 3] = [Self::Forward, Self::Affine, Self::SymmetricG];

    pub fn family(self, n: usize, q: Rational) -> FamilyKind {
        match self {
            Self::Forward => FamilyKind::GaussianForward { n, q },
            Self::Affine => FamilyKind::GaussianAffine { n, q },
            Self::SymmetricG => FamilyKind::GaussianSymmetric { n, q },
        }
    }

    /// Number of positive nodes in the symmetrizer of an order-`n` member.
    pub fn positive_node_count(self, n: usize) -> usize {
        match self {
            Self::Forward => n,
            Self::Affine => n + 1,
            Self::SymmetricG => n.div_ceil(2),
        }
    }

    /// Orders at which the member does not depend on `q`.
    pub fn q_independent(self, n: usize) -> bool {
        match self {
            Self::Forward => n == 1,
            Self::Affine => false,
            Self::SymmetricG => n <= 2,
        }
    }
}

impl fmt::Display for GaussianVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Forward => "forward",
            Self::Affine => "affine",
            Self::SymmetricG => "symmetric",
        })
    }
}

impl FromStr for GaussianVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" | "fwd" => Ok(Self::Forward),
            "affine" | "aff" => Ok(Self::Affine),
            "symmetric" | "sym" => Ok(Self::SymmetricG),
            _ => Err(Error::Parse(format!("unknown Gaussian variant {s:?}"))),
        }
    }
}

/// A scheme identified as the scale by `scale_b` of a Gaussian family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GaussianMatch {
    pub variant: GaussianVariant,
    #[serde(with = "serde_rational")]
    pub q: Rational,
    #[serde(with = "serde_rational")]
    pub scale_b: Rational,
    pub n: usize,
}

impl GaussianMatch {
    pub fn family(&self) -> FamilyKind {
        self.variant.family(self.n, self.q.clone())
    }

    pub fn scheme(&self) -> Result<Scheme> {
        named_scheme(&self.family())?.scale(&self.scale_b)
    }

    pub fn is_exact_member(&self) -> bool {
        self.scale_b.is_one()
    }

    /// Ordering key: b = 1 first, then smaller |b|, |q| > 1, q > 0, b > 0.
    fn preference(&self) -> (bool, Rational, bool, bool, bool) {
        (
            !self.scale_b.is_one(),
            self.scale_b.abs(),
            self.q.abs() < Rational::one(),
            self.q.is_negative(),
            self.scale_b.is_negative(),
        )
    }

    pub fn describe(&self) -> String {
        if self.is_exact_member() {
            format!("{} q={}", self.variant, display_rational(&self.q))
        } else {
            format!(
                "scale-of-{} q={} b={}",
                self.variant,
                display_rational(&self.q),
                display_rational(&self.scale_b)
            )
        }
    }
}

pub(crate) fn best_match(mut found: Vec<GaussianMatch>) -> Option<GaussianMatch> {
    found.sort_by_key(GaussianMatch::preference);
    found.into_iter().next()
}

/// Nonzero nodes ordered by absolute value, or `None` on a repeated absolute value.
fn abs_sorted_nonzero(s: &Scheme) -> Option<Vec<Rational>> {
    let mut t: Vec<Rational> = s.nodes().filter(|b| !b.is_zero()).cloned().collect();
    t.sort_by_key(|b| b.abs());
    if t.windows(2).any(|w| w[0].abs() == w[1].abs()) {
        return None;
    }
    Some(t)
}

fn is_geometric(t: &[Rational]) -> bool {
    t.len() < 3 || t.windows(3).all(|w| &w[1] * &w[1] == &w[0] * &w[2])
}

/// Candidate `(b, q)` pairs reading a geometric run from either end.
fn geometric_readings(t: &[Rational]) -> Vec<(Rational, Rational)> {
    match t.len() {
        0 => Vec::new(),
        1 => vec![(t[0].clone(), int(2))],
        len if is_geometric(t) => vec![
            (t[0].clone(), &t[1] / &t[0]),
            (t[len - 1].clone(), &t[len - 2] / &t[len - 1]),
        ],
        _ => Vec::new(),
    }
}

fn matches_member(s: &Scheme, variant: GaussianVariant, n: usize, b: &Rational, q: &Rational) -> bool {
    if check_q(q).is_err() || b.is_zero() {
        return false;
    }
    let m = GaussianMatch {
        variant,
        q: q.clone(),
        scale_b: b.clone(),
        n,
    };
    m.scheme().is_ok_and(|g| &g == s)
}

/// All verified `(variant, q, b)` readings of an exact scheme.
pub fn gaussian_readings(s: &Scheme) -> Vec<GaussianMatch> {
    if !s.is_exact() {
        return Vec::new();
    }
    let n = s.order().expect("exact schemes are non-zero");
    let mut found = Vec::new();
    let mut push = |variant: GaussianVariant, b: Rational, q: Rational| {
        let q = if variant == GaussianVariant::SymmetricG && variant.q_independent(n) {
            int(2)
        } else {
            q
        };
        if matches_member(s, variant, n, &b, &q) {
            found.push(GaussianMatch {
                variant,
                q,
                scale_b: b,
                n,
            });
        }
    };

    let has_zero = !s.coeff_at(&Rational::zero()).is_zero();
    if let Some(t) = abs_sorted_nonzero(s) {
        let variant = if has_zero {
            GaussianVariant::Forward
        } else {
            GaussianVariant::Affine
        };
        if t.len() == variant.positive_node_count(n) {
            for (b, q) in geometric_readings(&t) {
                push(variant, b, q);
            }
        }
    }
    if s.is_symmetric(n) {
        let p: Vec<Rational> = s.nodes().filter(|b| b.is_positive()).cloned().collect();
        if p.len() == GaussianVariant::SymmetricG.positive_node_count(n) {
            for (b, q) in geometric_readings(&p) {
                push(GaussianVariant::SymmetricG, b, q);
            }
        }
    }
    found.sort_by_key(GaussianMatch::preference);
    found.dedup();
    found
}

/// Recognizes exact Gaussians and their scales; see [`GaussianMatch`] for the tie-break.
pub fn recognize_gaussian(s: &Scheme) -> Option<GaussianMatch> {
    best_match(gaussian_readings(s))
}

/// Same-variant members with parameter `−q`, `1/q` or `−1/q` that are scales of `m`.
///
/// Each partner carries the scale that maps its exact member onto `m`'s scheme.
pub fn scale_partners(m: &GaussianMatch) -> Result<Vec<GaussianMatch>> {
    let min_order = match m.variant {
        GaussianVariant::Forward => 2,
        GaussianVariant::Affine => 1,
        GaussianVariant::SymmetricG => 3,
    };
    if m.n < min_order {
        return Ok(Vec::new());
    }
    let target = m.scheme()?;
    let inv = m.q.recip();
    let mut out = Vec::new();
    for q in [-&m.q, inv.clone(), -inv] {
        let member = named_scheme(&m.variant.family(m.n, q.clone()))?;
        if let Some(r) = crate::equivalence::is_scale(&member, &target)? {
            out.push(GaussianMatch {
                variant: m.variant,
                q,
                scale_b: r,
                n: m.n,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn fam(s: &str) -> Scheme {
        named_scheme(&s.parse().unwrap()).unwrap()
    }

    /// Product formula oracle Π (1 − q^{n−j}) / (1 − q^{j+1}).
    fn qbinom_product(n: usize, i: usize, q: &Rational) -> Rational {
        (0..i)
            .map(|j| (int(1) - pow(q, (n - j) as i64)) / (int(1) - pow(q, j as i64 + 1)))
            .product()
    }

    #[test]
    fn qbinom_values() {
        assert_eq!(qbinom(2, 1, &int(2)).unwrap(), int(3));
        assert_eq!(qbinom(4, 2, &int(2)).unwrap(), int(35));
        assert_eq!(qbinom(7, 0, &frac(5, 3)).unwrap(), int(1));
        assert!(matches!(qbinom(2, 3, &int(2)), Err(Error::IndexOutOfRange { n: 2, i: 3 })));
        for n in 0..=12 {
            for i in 0..=n {
                assert_eq!(
                    qbinom(n, i, &int(1)).unwrap(),
                    Rational::from_integer(binomial(n, i))
                );
            }
        }
        for q in [int(3), frac(-1, 2), frac(5, 3)] {
            for n in 0..=7 {
                for i in 0..=n {
                    assert_eq!(qbinom(n, i, &q).unwrap(), qbinom_product(n, i, &q));
                }
            }
        }
    }

    #[test]
    fn table_examples() {
        assert_eq!(
            fam("gauss-aff:n=2,q=2"),
            Scheme::canonicalize([(frac(1, 3), int(4)), (int(-1), int(2)), (frac(2, 3), int(1))])
        );
        assert_eq!(
            fam("gauss-fwd:n=3,q=2"),
            Scheme::canonicalize([
                (frac(1, 4), int(4)),
                (frac(-3, 2), int(2)),
                (int(2), int(1)),
                (frac(-3, 4), int(0)),
            ])
        );
        assert_eq!(
            fam("gauss-sym:n=3,q=2"),
            Scheme::canonicalize([
                (frac(1, 2), int(2)),
                (int(-1), int(1)),
                (int(1), int(-1)),
                (frac(-1, 2), int(-2)),
            ])
        );
        assert_eq!(
            fam("shift:n=3,k=-1"),
            construct_exact(&[int(-1), int(0), int(1), int(2)], 3).unwrap()
        );
        assert_eq!(fam("sym-riemann:n=2"), fam("mz-tilde-sym:n=2"));
        assert_eq!(
            fam("sym-riemann:n=3"),
            construct_exact(&[frac(-3, 2), frac(-1, 2), frac(1, 2), frac(3, 2)], 3).unwrap()
        );
    }

    #[test]
    fn every_family_is_exact_on_its_nodes() {
        let kinds = [
            "riemann:n=5",
            "shift:n=4,k=-3",
            "sym-riemann:n=6",
            "gauss-fwd:n=4,q=-3",
            "gauss-aff:n=3,q=5/3",
            "gauss-aff:n=3,k=-2,q=1/2",
            "gauss-sym:n=5,q=3",
            "gauss-sym:n=6,q=1/2",
            "mz-tilde:n=5",
            "mz-tilde-sym:n=5",
            "mz-tilde-sym:n=6",
            "scriptD:n=4,q=2",
            "scriptDbar:n=3,q=-2",
        ];
        for k in kinds {
            let kind: FamilyKind = k.parse().unwrap();
            let s = named_scheme(&kind).unwrap();
            assert!(s.is_exact(), "{k}");
            assert_eq!(s.order().unwrap(), kind.order(), "{k}");
            assert_eq!(kind.to_string(), k);
        }
    }

    #[test]
    fn symmetric_families_are_symmetric() {
        for n in 1..=6 {
            assert!(fam(&format!("sym-riemann:n={n}")).is_symmetric(n));
            assert!(fam(&format!("gauss-sym:n={n},q=-2")).is_symmetric(n));
        }
    }

    #[test]
    fn tilde_is_forward_gaussian_at_two() {
        for n in 1..=8 {
            assert_eq!(fam(&format!("mz-tilde:n={n}")), fam(&format!("gauss-fwd:n={n},q=2")));
        }
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(
            named_scheme(&FamilyKind::GaussianForward { n: 3, q: int(1) }),
            Err(Error::InvalidQ("1".into()))
        );
        assert!(named_scheme(&FamilyKind::GaussianAffine { n: 2, q: int(-1) }).is_err());
        assert!(named_scheme(&FamilyKind::Riemann { n: 0 }).is_err());
        assert!("gauss-fwd:n=3".parse::<FamilyKind>().is_err());
        assert!("riemann:n=3,k=1".parse::<FamilyKind>().is_err());
        assert!("nope:n=3".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn recognition() {
        let m = recognize_gaussian(&fam("mz-tilde:n=3")).unwrap();
        assert_eq!(
            (m.variant, m.q.clone(), m.scale_b.clone()),
            (GaussianVariant::Forward, int(2), int(1))
        );

        let e1 = fam("gauss-aff:n=2,q=2").scale(&int(2)).unwrap();
        let m = recognize_gaussian(&e1).unwrap();
        assert_eq!(
            (m.variant, m.q.clone(), m.scale_b.clone()),
            (GaussianVariant::Affine, int(2), int(2))
        );
        assert_eq!(m.describe(), "scale-of-affine q=2 b=2");
        assert!(gaussian_readings(&e1).iter().all(|g| !g.is_exact_member()));

        assert_eq!(recognize_gaussian(&fam("riemann:n=3")), None);

        let m = recognize_gaussian(&fam("sym-riemann:n=3")).unwrap();
        assert_eq!(
            (m.variant, m.q.clone(), m.scale_b.clone()),
            (GaussianVariant::SymmetricG, int(3), frac(1, 2))
        );
        let m = recognize_gaussian(&fam("gauss-fwd:n=3,q=-1/3")).unwrap();
        assert_eq!((m.q.clone(), m.scale_b.clone()), (frac(-1, 3), int(1)));
    }

    #[test]
    fn recognition_round_trips_up_to_partners() {
        for variant in GaussianVariant::ALL {
            for q in [int(2), int(-3), frac(1, 2), frac(5, 3)] {
                for n in 1..=5 {
                    let m = GaussianMatch {
                        variant,
                        q: q.clone(),
                        scale_b: int(1),
                        n,
                    };
                    let got = recognize_gaussian(&m.scheme().unwrap()).unwrap();
                    assert_eq!(got.variant, variant);
                    assert_eq!(got.scheme().unwrap(), m.scheme().unwrap());
                    let partners = scale_partners(&m).unwrap();
                    let accepted = got.q == q
                        || variant.q_independent(n)
                        || partners.iter().any(|p| p.q == got.q);
                    assert!(accepted, "{variant} q={q} n={n}");
                }
            }
        }
    }

    #[test]
    fn scale_partner_sets() {
        let fwd = GaussianMatch {
            variant: GaussianVariant::Forward,
            q: int(2),
            scale_b: int(1),
            n: 3,
        };
        let qs: Vec<Rational> = scale_partners(&fwd).unwrap().into_iter().map(|p| p.q).collect();
        assert_eq!(qs, vec![frac(1, 2)]);

        let sym = GaussianMatch {
            variant: GaussianVariant::SymmetricG,
            q: int(2),
            scale_b: int(1),
            n: 3,
        };
        let qs: Vec<Rational> = scale_partners(&sym).unwrap().into_iter().map(|p| p.q).collect();
        assert_eq!(qs, vec![int(-2), frac(1, 2), frac(-1, 2)]);

        let aff = GaussianMatch {
            variant: GaussianVariant::Affine,
            q: int(2),
            scale_b: int(1),
            n: 2,
        };
        let p = scale_partners(&aff).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!((p[0].q.clone(), p[0].scale_b.clone()), (frac(1, 2), int(4)));
    }
}
