//! Generalized Riemann differences as exact finite schemes.
//!
//! A [`Scheme`] stores `Δ(h, x; f) = Σ aᵢ f(x + bᵢ h)` as a list of
//! `(coefficient, node)` terms kept in canonical form: nodes strictly
//! increasing, no zero coefficients, and the empty list for the zero
//! difference. All operations are pure and work with exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{solve, LinearSolution};
use crate::rational::{display_rational, factorial, pow, serde_rational, sign_pow, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "serde_rational")]
    pub coeff: Rational,
    #[serde(with = "serde_rational")]
    pub node: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Scheme {
    terms: Vec<Term>,
}

/// Order, leading moments and normalizing factor of a non-zero scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderInfo {
    pub order: usize,
    /// `moments[j] = Σ aᵢ bᵢʲ` for `j = 0..=order`.
    pub moments: Vec<Rational>,
    /// `order! / moments[order]`.
    pub normalizer: Rational,
}

impl Scheme {
    pub fn zero() -> Self {
        Scheme { terms: Vec::new() }
    }

    /// Merges equal nodes, drops zero coefficients and sorts by node.
    pub fn canonicalize<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (coeff, node) in raw {
            *merged.entry(node).or_insert_with(Rational::zero) += coeff;
        }
        Scheme {
            terms: merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(node, coeff)| Term { coeff, node })
                .collect(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        Self::canonicalize(terms.into_iter().map(|t| (t.coeff, t.node)))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.terms.iter().map(|t| &t.node)
    }

    /// Coefficient at `node`, zero when the node is absent.
    pub fn coeff_at(&self, node: &Rational) -> Rational {
        self.terms
            .binary_search_by(|t| t.node.cmp(node))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// `Σ aᵢ bᵢʲ` with `0⁰ = 1`.
    pub fn moment(&self, j: usize) -> Rational {
        let e = j as i64;
        self.terms
            .iter()
            .map(|t| &t.coeff * pow(&t.node, e))
            .sum()
    }

    pub fn order_info(&self) -> Result<OrderInfo> {
        if self.is_zero() {
            return Err(Error::ZeroScheme);
        }
        let mut moments = Vec::new();
        for j in 0..self.len() {
            let m = self.moment(j);
            let nonzero = !m.is_zero();
            moments.push(m);
            if nonzero {
                let normalizer = factorial(j) / &moments[j];
                return Ok(OrderInfo {
                    order: j,
                    moments,
                    normalizer,
                });
            }
        }
        // Vandermonde matrices on distinct nodes are nonsingular.
        Err(Error::Internal(format!(
            "first {} moments of a non-zero scheme vanish",
            self.len()
        )))
    }

    pub fn order(&self) -> Result<usize> {
        self.order_info().map(|i| i.order)
    }

    pub fn is_normalized(&self) -> bool {
        self.order_info().is_ok_and(|i| i.normalizer.is_one())
    }

    /// Multiplies by the normalizer so that the leading moment is `n!`.
    pub fn normalized(&self) -> Result<Scheme> {
        let info = self.order_info()?;
        Ok(self.mul_scalar(&info.normalizer))
    }

    /// Exact means a normalized scheme with `order + 1` terms.
    pub fn is_exact(&self) -> bool {
        self.order_info()
            .is_ok_and(|i| i.normalizer.is_one() && self.len() == i.order + 1)
    }

    pub fn has_distinct_abs_nodes(&self) -> bool {
        let mut abs: Vec<Rational> = self.nodes().map(|b| b.abs()).collect();
        abs.sort();
        abs.windows(2).all(|w| w[0] != w[1])
    }

    pub fn all_nodes_nonnegative(&self) -> bool {
        self.nodes().all(|b| !b.is_negative())
    }

    pub fn max_abs_node(&self) -> Option<Rational> {
        self.nodes().map(|b| b.abs()).max()
    }

    /// Positive `c` such that `self / c` has coprime integer coefficients.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for t in &self.terms {
            g = g.gcd(t.coeff.numer());
            l = l.lcm(t.coeff.denom());
        }
        Rational::new(g, l)
    }

    pub fn mul_scalar(&self, c: &Rational) -> Scheme {
        if c.is_zero() {
            return Scheme::zero();
        }
        Scheme {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    node: t.node.clone(),
                })
                .collect(),
        }
    }

    /// `Δ(d·h)`: nodes multiplied by `d`, coefficients unchanged.
    pub fn dilate(&self, d: &Rational) -> Result<Scheme> {
        if d.is_zero() {
            return Err(Error::ZeroDilation);
        }
        Ok(Self::canonicalize(
            self.terms.iter().map(|t| (t.coeff.clone(), &t.node * d)),
        ))
    }

    /// `Δ(−h)`.
    pub fn reflect(&self) -> Scheme {
        Scheme {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    node: -&t.node,
                })
                .collect(),
        }
    }

    /// Scale by `r`: data `{aᵢ/rⁿ; r·bᵢ}` with `n` the detected order.
    pub fn scale(&self, r: &Rational) -> Result<Scheme> {
        if r.is_zero() {
            return Err(Error::ZeroScale);
        }
        let n = self.order()?;
        self.scale_with_order(r, n)
    }

    /// Scale by `r` using a caller-supplied reference order.
    pub fn scale_with_order(&self, r: &Rational, n: usize) -> Result<Scheme> {
        if r.is_zero() {
            return Err(Error::ZeroScale);
        }
        let factor = pow(r, -(n as i64));
        Ok(self.dilate(r)?.mul_scalar(&factor))
    }

    /// Symmetrizer and skew-symmetrizer `½[Δ(h) ± (−1)ⁿ Δ(−h)]`.
    pub fn decompose(&self, n: usize) -> (Scheme, Scheme) {
        let half = Rational::new(1.into(), 2.into());
        let mirrored = self.reflect().mul_scalar(&sign_pow(n));
        let plus = (self + &mirrored).mul_scalar(&half);
        let minus = (self - &mirrored).mul_scalar(&half);
        (plus, minus)
    }

    /// `Δ(−h) = (−1)ⁿ Δ(h)`.
    pub fn is_symmetric(&self, n: usize) -> bool {
        self.reflect().mul_scalar(&sign_pow(n)) == *self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("scheme serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Scheme> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("scheme JSON: {e}")))
    }
}

impl Add for &Scheme {
    type Output = Scheme;
    fn add(self, rhs: &Scheme) -> Scheme {
        Scheme::canonicalize(
            self.terms
                .iter()
                .chain(&rhs.terms)
                .map(|t| (t.coeff.clone(), t.node.clone())),
        )
    }
}

impl Sub for &Scheme {
    type Output = Scheme;
    fn sub(self, rhs: &Scheme) -> Scheme {
        self + &(-rhs)
    }
}

impl Neg for &Scheme {
    type Output = Scheme;
    fn neg(self) -> Scheme {
        self.mul_scalar(&-Rational::one())
    }
}

impl Serialize for Scheme {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            terms: &'a [Term],
        }
        Wire { terms: &self.terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scheme {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            terms: Vec<Term>,
        }
        Ok(Scheme::from_terms(Wire::deserialize(d)?.terms))
    }
}

fn fmt_node(node: &Rational) -> String {
    if node.is_zero() {
        "f(x)".to_string()
    } else {
        let sign = if node.is_negative() { '-' } else { '+' };
        let a = node.abs();
        if a.is_one() {
            format!("f(x{sign}h)")
        } else if a.is_integer() {
            format!("f(x{sign}{}h)", a.numer())
        } else {
            format!("f(x{sign}({})h)", display_rational(&a))
        }
    }
}

/// Conventional text with the largest node first, e.g.
/// `f(x+2h) - 3f(x+h) + 3f(x) - f(x-h)`.
impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().rev().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = t.coeff.abs();
            if a.is_one() {
                write!(f, "{}", fmt_node(&t.node))?;
            } else if a.is_integer() {
                write!(f, "{}{}", a.numer(), fmt_node(&t.node))?;
            } else {
                write!(f, "({}){}", display_rational(&a), fmt_node(&t.node))?;
            }
        }
        Ok(())
    }
}

fn ensure_distinct(nodes: &[Rational]) -> Result<()> {
    let mut sorted = nodes.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateNodes);
    }
    Ok(())
}

/// The unique exact `n`-th generalized Riemann difference on `n + 1` nodes.
pub fn construct_exact(nodes: &[Rational], n: usize) -> Result<Scheme> {
    if nodes.len() != n + 1 {
        return Err(Error::WrongNodeCount {
            expected: n + 1,
            got: nodes.len(),
            order: n,
        });
    }
    ensure_distinct(nodes)?;
    let rows: Vec<Vec<Rational>> = (0..=n)
        .map(|j| nodes.iter().map(|b| pow(b, j as i64)).collect())
        .collect();
    let rhs: Vec<Rational> = (0..=n)
        .map(|j| if j == n { factorial(n) } else { Rational::zero() })
        .collect();
    match solve(&rows, &rhs) {
        LinearSolution::Unique(coeffs) => Ok(Scheme::canonicalize(
            coeffs.into_iter().zip(nodes.iter().cloned()),
        )),
        other => Err(Error::Internal(format!(
            "Vandermonde system on distinct nodes was {other:?}"
        ))),
    }
}

/// Symmetric `n`-th difference on nodes `±p` (plus `0` when requested).
///
/// The coefficient at `−p` is `(−1)ⁿ` times the one at `p`, so only moments
/// of the parity of `n` constrain the unknowns.
pub fn construct_exact_symmetric(
    pairs: &[Rational],
    include_zero: bool,
    n: usize,
) -> Result<Scheme> {
    if n == 0 {
        return Err(Error::InvalidOrder("order must be positive".into()));
    }
    if pairs.iter().any(|p| !p.is_positive()) {
        return Err(Error::InvalidPairs);
    }
    ensure_distinct(pairs).map_err(|_| Error::InvalidPairs)?;
    let odd = n % 2 == 1;
    if include_zero && odd {
        return Err(Error::ZeroNodeParityError(n));
    }
    let two = Rational::from_integer(2.into());
    // Conditions are the moments j ≡ n (mod 2), j ≤ n.
    let conditions: Vec<usize> = (0..=n).filter(|j| j % 2 == n % 2).collect();
    let with_zero = include_zero && !odd;
    let unknowns = pairs.len() + usize::from(with_zero);
    let rows: Vec<Vec<Rational>> = conditions
        .iter()
        .map(|&j| {
            let mut row: Vec<Rational> = pairs.iter().map(|p| &two * pow(p, j as i64)).collect();
            if with_zero {
                row.push(if j == 0 { Rational::one() } else { Rational::zero() });
            }
            row
        })
        .collect();
    let rhs: Vec<Rational> = conditions
        .iter()
        .map(|&j| if j == n { factorial(n) } else { Rational::zero() })
        .collect();
    let x = match solve(&rows, &rhs) {
        LinearSolution::Unique(x) => x,
        LinearSolution::Underdetermined { rank } => {
            return Err(Error::UnderdeterminedSystem { unknowns, rank })
        }
        LinearSolution::Inconsistent => return Err(Error::InconsistentSystem),
    };
    let mirror = sign_pow(n);
    let mut raw = Vec::with_capacity(2 * pairs.len() + 1);
    for (p, a) in pairs.iter().zip(&x) {
        raw.push((a.clone(), p.clone()));
        raw.push((a * &mirror, -p));
    }
    if with_zero {
        raw.push((x[pairs.len()].clone(), Rational::zero()));
    }
    Ok(Scheme::canonicalize(raw))
}

/// `Σ cₖ · Sₖ(dₖ h)`, canonicalized.
pub fn combine(parts: &[(Rational, Rational, Scheme)]) -> Result<Scheme> {
    let mut raw = Vec::new();
    for (c, d, s) in parts {
        if d.is_zero() {
            return Err(Error::ZeroDilation);
        }
        raw.extend(s.terms().iter().map(|t| (&t.coeff * c, &t.node * d)));
    }
    Ok(Scheme::canonicalize(raw))
}

/// Builds a scheme from integer-ish `(coeff, node)` pairs; handy in tests and demos.
pub fn scheme_of(pairs: &[(Rational, Rational)]) -> Scheme {
    Scheme::canonicalize(pairs.iter().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn s(pairs: &[(i64, i64)]) -> Scheme {
        Scheme::canonicalize(pairs.iter().map(|&(c, b)| (int(c), int(b))))
    }

    /// Independent oracle: aᵢ = n! / Πⱼ≠ᵢ (bᵢ − bⱼ) (divided differences).
    fn divided_difference_oracle(nodes: &[Rational]) -> Scheme {
        let n = nodes.len() - 1;
        Scheme::canonicalize(nodes.iter().enumerate().map(|(i, bi)| {
            let denom: Rational = nodes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, bj)| bi - bj)
                .product();
            (factorial(n) / denom, bi.clone())
        }))
    }

    #[test]
    fn canonicalize_merges_and_drops() {
        assert_eq!(s(&[(1, 1), (1, 1)]), s(&[(2, 1)]));
        assert!(s(&[(1, 0), (-1, 0)]).is_zero());
        let d = s(&[(1, 2), (-3, 1), (3, 0), (-1, -1)]);
        let nodes: Vec<_> = d.nodes().cloned().collect();
        assert_eq!(nodes, vec![int(-1), int(0), int(1), int(2)]);
        assert_eq!(d.terms()[0].coeff, int(-1));
        assert_eq!(d.terms()[1].coeff, int(3));
    }

    #[test]
    fn moments_of_second_riemann_difference() {
        let d2 = s(&[(1, 0), (-2, 1), (1, 2)]);
        assert_eq!(d2.moment(0), int(0));
        assert_eq!(d2.moment(1), int(0));
        assert_eq!(d2.moment(2), int(2));
    }

    #[test]
    fn order_detection_examples() {
        let sym1 = Scheme::canonicalize([(frac(1, 2), int(1)), (frac(-1, 2), int(-1))]);
        let info = sym1.order_info().unwrap();
        assert_eq!((info.order, info.normalizer), (1, int(1)));

        let b_minus = Scheme::canonicalize([
            (frac(1, 2), int(1)),
            (frac(1, 2), int(-1)),
            (int(-1), int(0)),
        ]);
        let info = b_minus.order_info().unwrap();
        assert_eq!(info.order, 2);
        assert_eq!(info.moments[2], int(1));
        assert_eq!(info.normalizer, int(2));

        let d2 = s(&[(1, 0), (-2, 1), (1, 2)]);
        assert_eq!(d2.order_info().unwrap().normalizer, int(1));
        assert_eq!(Scheme::zero().order_info(), Err(Error::ZeroScheme));
    }

    #[test]
    fn construct_exact_reproduces_named_differences() {
        assert_eq!(
            construct_exact(&[int(0), int(1), int(2)], 2).unwrap(),
            s(&[(1, 2), (-2, 1), (1, 0)])
        );
        assert_eq!(
            construct_exact(&[int(1), int(2), int(4)], 2).unwrap(),
            Scheme::canonicalize([
                (frac(1, 3), int(4)),
                (int(-1), int(2)),
                (frac(2, 3), int(1))
            ])
        );
        assert_eq!(
            construct_exact(&[int(-1), int(0), int(1), int(2)], 3).unwrap(),
            s(&[(-1, -1), (3, 0), (-3, 1), (1, 2)])
        );
    }

    #[test]
    fn construct_exact_matches_divided_difference_oracle() {
        let nodes = vec![frac(-3, 2), int(0), frac(1, 3), int(2), frac(7, 5)];
        assert_eq!(
            construct_exact(&nodes, 4).unwrap(),
            divided_difference_oracle(&nodes)
        );
    }

    #[test]
    fn construct_exact_errors() {
        assert_eq!(
            construct_exact(&[int(0), int(1), int(1)], 2),
            Err(Error::DuplicateNodes)
        );
        assert!(matches!(
            construct_exact(&[int(0), int(1)], 2),
            Err(Error::WrongNodeCount { expected: 3, got: 2, order: 2 })
        ));
    }

    #[test]
    fn symmetric_construction() {
        let d = construct_exact_symmetric(&[int(1), int(2)], false, 3).unwrap();
        assert_eq!(
            d,
            Scheme::canonicalize([
                (frac(1, 2), int(2)),
                (int(-1), int(1)),
                (int(1), int(-1)),
                (frac(-1, 2), int(-2)),
            ])
        );
        assert_eq!(
            construct_exact_symmetric(&[int(1)], true, 2).unwrap(),
            s(&[(1, 1), (-2, 0), (1, -1)])
        );
        assert_eq!(
            construct_exact_symmetric(&[int(1)], false, 3),
            Err(Error::InconsistentSystem)
        );
        assert_eq!(
            construct_exact_symmetric(&[int(1)], true, 3),
            Err(Error::ZeroNodeParityError(3))
        );
        assert!(matches!(
            construct_exact_symmetric(&[int(1), int(2), int(3)], false, 3),
            Err(Error::UnderdeterminedSystem { unknowns: 3, rank: 2 })
        ));
        assert_eq!(
            construct_exact_symmetric(&[int(-1)], false, 1),
            Err(Error::InvalidPairs)
        );
    }

    #[test]
    fn scale_examples() {
        let affine = Scheme::canonicalize([
            (frac(1, 3), int(4)),
            (int(-1), int(2)),
            (frac(2, 3), int(1)),
        ]);
        assert_eq!(
            affine.scale(&int(2)).unwrap(),
            Scheme::canonicalize([
                (frac(1, 12), int(8)),
                (frac(-1, 4), int(4)),
                (frac(1, 6), int(2)),
            ])
        );
        assert_eq!(affine.scale(&int(1)).unwrap(), affine);
        // Oracle: exact first difference on {2, 4}.
        let fwd = s(&[(1, 2), (-1, 1)]);
        assert_eq!(
            fwd.scale(&int(2)).unwrap(),
            divided_difference_oracle(&[int(2), int(4)])
        );
        assert_eq!(fwd.scale(&int(0)), Err(Error::ZeroScale));
        assert_eq!(Scheme::zero().scale(&int(2)), Err(Error::ZeroScheme));
    }

    #[test]
    fn decompose_examples() {
        let d31 = s(&[(1, 2), (-3, 1), (3, 0), (-1, -1)]);
        let (plus, minus) = d31.decompose(3);
        assert_eq!(
            plus,
            Scheme::canonicalize([
                (frac(1, 2), int(2)),
                (int(-1), int(1)),
                (int(1), int(-1)),
                (frac(-1, 2), int(-2)),
            ])
        );
        assert_eq!(
            minus,
            Scheme::canonicalize([
                (frac(1, 2), int(2)),
                (int(-2), int(1)),
                (int(3), int(0)),
                (int(-2), int(-1)),
                (frac(1, 2), int(-2)),
            ])
        );

        let d2s = s(&[(1, 1), (-2, 0), (1, -1)]);
        assert_eq!(d2s.decompose(2), (d2s.clone(), Scheme::zero()));

        let fwd = s(&[(1, 1), (-1, 0)]);
        let (p, m) = fwd.decompose(1);
        assert_eq!(p, Scheme::canonicalize([(frac(1, 2), int(1)), (frac(-1, 2), int(-1))]));
        assert_eq!(
            m,
            Scheme::canonicalize([(frac(1, 2), int(1)), (frac(1, 2), int(-1)), (int(-1), int(0))])
        );
    }

    #[test]
    fn symmetry_checks() {
        assert!(s(&[(1, 1), (-2, 0), (1, -1)]).is_symmetric(2));
        assert!(!s(&[(1, 2), (-3, 1), (3, 0), (-1, -1)]).is_symmetric(3));
        assert!(Scheme::zero().is_symmetric(1));
    }

    #[test]
    fn combine_examples() {
        let c = s(&[(3, 1), (-5, 0), (2, -1)]);
        let out = combine(&[(frac(3, 5), int(1), c.clone()), (frac(-2, 5), int(-1), c)]).unwrap();
        assert_eq!(out, s(&[(1, 1), (-1, 0)]));

        let d31 = s(&[(1, 2), (-3, 1), (3, 0), (-1, -1)]);
        let d2s = s(&[(1, 1), (-2, 0), (1, -1)]);
        let out = combine(&[(int(1), int(1), d31.clone()), (int(1), int(1), d2s)]).unwrap();
        assert_eq!(out, s(&[(1, 2), (-2, 1), (1, 0)]));

        let nabla = Scheme::canonicalize([
            (frac(3, 4), int(2)),
            (int(-2), int(1)),
            (frac(3, 2), int(0)),
            (frac(-1, 4), int(-2)),
        ]);
        let out = combine(&[(int(1), int(2), d31), (int(-4), int(1), nabla)]).unwrap();
        assert_eq!(out, s(&[(1, 4), (-6, 2), (8, 1), (-3, 0)]));
        assert_eq!(out.moment(3), int(24));
        assert_eq!(out.order_info().unwrap().normalizer, frac(1, 4));

        assert_eq!(
            combine(&[(int(1), int(0), Scheme::zero())]),
            Err(Error::ZeroDilation)
        );
    }

    #[test]
    fn json_uses_reduced_fractions() {
        let d = Scheme::canonicalize([(frac(1, 2), int(1)), (frac(-1, 2), int(-1))]);
        let text = d.to_json();
        assert_eq!(
            text,
            r#"{"terms":[{"coeff":"-1/2","node":"-1/1"},{"coeff":"1/2","node":"1/1"}]}"#
        );
        assert_eq!(Scheme::from_json(&text).unwrap(), d);
        // Integer shorthand on input, unsorted and unmerged terms.
        let parsed = Scheme::from_json(
            r#"{"terms":[{"coeff":"1","node":"2"},{"coeff":3,"node":"0"},{"coeff":"1","node":"2"}]}"#,
        )
        .unwrap();
        assert_eq!(parsed, s(&[(3, 0), (2, 2)]));
        assert!(Scheme::from_json(r#"{"terms":[{"coeff":"x","node":"1"}]}"#).is_err());
    }

    #[test]
    fn content_of_nabla() {
        let nabla = Scheme::canonicalize([
            (frac(3, 4), int(2)),
            (int(-2), int(1)),
            (frac(3, 2), int(0)),
            (frac(-1, 4), int(-2)),
        ]);
        assert_eq!(nabla.content(), frac(1, 4));
        assert_eq!(nabla.mul_scalar(&int(4)).to_string(), "3f(x+2h) - 8f(x+h) + 6f(x) - f(x-2h)");
        assert_eq!(Scheme::zero().content(), int(1));
    }

    #[test]
    fn display_conventional_text() {
        let d31 = s(&[(1, 2), (-3, 1), (3, 0), (-1, -1)]);
        assert_eq!(d31.to_string(), "f(x+2h) - 3f(x+h) + 3f(x) - f(x-h)");
        let half = Scheme::canonicalize([(frac(1, 2), frac(1, 2)), (frac(-1, 2), int(-1))]);
        assert_eq!(half.to_string(), "(1/2)f(x+(1/2)h) - (1/2)f(x-h)");
        assert_eq!(Scheme::zero().to_string(), "0");
    }
}
