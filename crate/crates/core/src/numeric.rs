//! Difference quotients on concrete functions and numeric limit probes.
//!
//! Quotients are computed exactly; only the convergence verdict compares
//! `f64` images of the exact values. Probe output is numeric evidence and
//! never feeds back into classification.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{named_scheme, FamilyKind};
use crate::lattice::Subgroup;
use crate::rational::{
    display_rational, frac, int, parse_rational_list, pow, serde_rational,
    to_f64, Rational,
};
use crate::scheme::Scheme;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionOracle {
    Abs,
    /// `t² · sgn t`.
    SgnSquare,
    Monomial(u32),
    /// Coefficients in ascending degree.
    Polynomial(Vec<Rational>),
    /// `t^k` on the subgroup generated by `gens`, zero elsewhere.
    SubgroupMonomial { k: u32, gens: Vec<Rational> },
}

impl FunctionOracle {
    /// Precomputes what evaluation needs (the subgroup, if any).
    pub fn prepare(&self) -> Result<PreparedOracle<'_>> {
        let group = match self {
            FunctionOracle::SubgroupMonomial { gens, .. } => {
                if gens.iter().any(Zero::is_zero) {
                    return Err(Error::ZeroInput);
                }
                Some(Subgroup::new(gens)?)
            }
            _ => None,
        };
        Ok(PreparedOracle { oracle: self, group })
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        self.prepare()?.eval(t)
    }
}

pub struct PreparedOracle<'a> {
    oracle: &'a FunctionOracle,
    group: Option<Subgroup>,
}

impl PreparedOracle<'_> {
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        Ok(match self.oracle {
            FunctionOracle::Abs => t.abs(),
            FunctionOracle::SgnSquare => t * t.abs(),
            FunctionOracle::Monomial(k) => pow(t, i64::from(*k)),
            FunctionOracle::Polynomial(c) => c
                .iter()
                .rev()
                .fold(Rational::zero(), |acc, ci| acc * t + ci),
            FunctionOracle::SubgroupMonomial { k, .. } => {
                if self.in_group(t)? == Some(true) {
                    pow(t, i64::from(*k))
                } else {
                    Rational::zero()
                }
            }
        })
    }

    /// Subgroup membership of `t`; `None` for oracles without a subgroup.
    pub fn in_group(&self, t: &Rational) -> Result<Option<bool>> {
        match &self.group {
            None => Ok(None),
            Some(_) if t.is_zero() => Ok(Some(false)),
            Some(g) => g.contains(t).map(Some),
        }
    }
}

impl fmt::Display for FunctionOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Rational]| v.iter().map(display_rational).collect::<Vec<_>>().join(",");
        match self {
            Self::Abs => write!(f, "abs"),
            Self::SgnSquare => write!(f, "sgnsq"),
            Self::Monomial(k) => write!(f, "mono:k={k}"),
            Self::Polynomial(c) => write!(f, "poly:{}", list(c)),
            Self::SubgroupMonomial { k, gens } => write!(f, "subgmono:k={k};gens={}", list(gens)),
        }
    }
}

impl FromStr for FunctionOracle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("oracle {s:?}: {msg}"));
        let (tag, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let parse_k = |v: &str| v.trim().parse::<u32>().map_err(|_| bad("k must be a non-negative integer"));
        match tag {
            "abs" => Ok(Self::Abs),
            "sgnsq" => Ok(Self::SgnSquare),
            "mono" => {
                let v = rest.strip_prefix("k=").ok_or_else(|| bad("expected k=<int>"))?;
                Ok(Self::Monomial(parse_k(v)?))
            }
            "poly" => {
                let c = parse_rational_list(rest)?;
                if c.is_empty() {
                    return Err(bad("no coefficients"));
                }
                Ok(Self::Polynomial(c))
            }
            "subgmono" => {
                let mut k = None;
                let mut gens = None;
                for part in rest.split(';') {
                    match part.split_once('=') {
                        Some(("k", v)) => k = Some(parse_k(v)?),
                        Some(("gens", v)) => gens = Some(parse_rational_list(v)?),
                        _ => return Err(bad("expected k=<int>;gens=<list>")),
                    }
                }
                let gens = gens.ok_or_else(|| bad("missing gens"))?;
                if gens.iter().any(Zero::is_zero) {
                    return Err(Error::ZeroInput);
                }
                Ok(Self::SubgroupMonomial {
                    k: k.ok_or_else(|| bad("missing k"))?,
                    gens,
                })
            }
            other => Err(bad(&format!("unknown oracle {other:?}"))),
        }
    }
}

/// `Δ_s(h, x; f) / hⁿ`, exactly.
pub fn eval_quotient(s: &Scheme, f: &FunctionOracle, x: &Rational, h: &Rational) -> Result<Rational> {
    eval_prepared(s, s.order()?, &f.prepare()?, x, h)
}

fn eval_prepared(s: &Scheme, n: usize, f: &PreparedOracle<'_>, x: &Rational, h: &Rational) -> Result<Rational> {
    if h.is_zero() {
        return Err(Error::ZeroStep);
    }
    let mut acc = Rational::zero();
    for t in s.terms() {
        acc += &t.coeff * f.eval(&(x + &t.node * h))?;
    }
    Ok(acc / pow(h, n as i64))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeConfig {
    #[serde(with = "serde_rational")]
    pub h0: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational_vec::serialize")]
    pub ratios: Vec<Rational>,
    pub jmin: u32,
    pub jmax: u32,
    pub tol: f64,
    /// Samples per sequence that form the tail.
    pub tail: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            h0: int(1),
            ratios: vec![frac(1, 2), frac(1, 3), frac(1, 5)],
            jmin: 4,
            jmax: 40,
            tol: 1e-9,
            tail: 5,
        }
    }
}

impl ProbeConfig {
    fn validate(&self) -> Result<()> {
        if self.h0.is_zero() {
            return Err(Error::ZeroStep);
        }
        if self.ratios.is_empty() || self.ratios.iter().any(|r| r.is_zero() || r.abs() >= Rational::one()) {
            return Err(Error::Parse("ratios must satisfy 0 < |ρ| < 1".into()));
        }
        if self.jmin > self.jmax || self.tail == 0 || (self.jmax - self.jmin + 1) < self.tail as u32 {
            return Err(Error::Parse("need jmin <= jmax and at least `tail` samples per sequence".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Parse("tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    #[serde(with = "serde_rational")]
    pub ratio: Rational,
    pub sign: i8,
    pub j: u32,
    #[serde(with = "serde_rational")]
    pub h: Rational,
    #[serde(with = "serde_rational")]
    pub value: Rational,
    pub approx: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_group: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Estimate {
    Exact {
        #[serde(with = "serde_rational")]
        value: Rational,
    },
    Approx {
        value: f64,
    },
}

impl Estimate {
    pub fn approx(&self) -> f64 {
        match self {
            Estimate::Exact { value } => to_f64(value),
            Estimate::Approx { value } => *value,
        }
    }
}

impl fmt::Display for Estimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Estimate::Exact { value } => write!(f, "{}", display_rational(value)),
            Estimate::Approx { value } => write!(f, "{value:e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub count: usize,
    #[serde(serialize_with = "crate::rational::serde_rational_vec::serialize")]
    pub ratios: Vec<Rational>,
    pub signs: Vec<i8>,
    /// Set when every sample in the cluster agrees on subgroup membership.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_group: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ProbeVerdict {
    Converges { estimate: Estimate },
    Diverges { first: Cluster, second: Cluster },
    Inconclusive,
}

impl ProbeVerdict {
    pub fn converges(&self) -> bool {
        matches!(self, ProbeVerdict::Converges { .. })
    }
}

impl fmt::Display for ProbeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Converges { estimate } => write!(f, "converges({estimate})"),
            Self::Diverges { first, second } => {
                write!(f, "diverges(clusters {} / {})", first.value, second.value)
            }
            Self::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub verdict: ProbeVerdict,
    pub samples: Vec<Sample>,
    pub config: ProbeConfig,
    /// Probes are evidence only.
    pub numeric_evidence: bool,
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

fn smallest_prime_outside(primes: &[BigInt]) -> u64 {
    (2u64..)
        .filter(|p| (2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0))
        .find(|p| !primes.contains(&BigInt::from(*p)))
        .expect("infinitely many primes")
}

/// Sequence ratios, extended for subgroup oracles with one ratio inside the
/// group and one built from a prime outside it.
fn effective_ratios(f: &FunctionOracle, config: &ProbeConfig) -> Result<Vec<Rational>> {
    let mut ratios = config.ratios.clone();
    if let FunctionOracle::SubgroupMonomial { gens, .. } = f {
        let group = Subgroup::new(gens)?;
        if let Some(g) = gens.iter().find(|g| !g.abs().is_one()) {
            let inside = if g.abs() < Rational::one() { g.clone() } else { g.recip() };
            if !ratios.contains(&inside) {
                ratios.push(inside);
            }
        }
        let outside = frac(1, smallest_prime_outside(group.primes()) as i64);
        if !ratios.contains(&outside) {
            ratios.push(outside);
        }
    }
    Ok(ratios)
}

/// Samples `Δ(h)/hⁿ` along `h = ±h₀ρʲ` and classifies the tails.
pub fn limit_probe(s: &Scheme, f: &FunctionOracle, x: &Rational, config: &ProbeConfig) -> Result<ProbeReport> {
    config.validate()?;
    let n = s.order()?;
    let prepared = f.prepare()?;
    let ratios = effective_ratios(f, config)?;

    let mut samples = Vec::new();
    let mut tails: Vec<&Sample> = Vec::new();
    let mut tail_ranges = Vec::new();
    for sign in [1i8, -1] {
        let h0 = if sign > 0 { config.h0.clone() } else { -&config.h0 };
        for rho in &ratios {
            let start = samples.len();
            let mut h = &h0 * pow(rho, i64::from(config.jmin));
            for j in config.jmin..=config.jmax {
                let value = eval_prepared(s, n, &prepared, x, &h)?;
                samples.push(Sample {
                    ratio: rho.clone(),
                    sign,
                    j,
                    h: h.clone(),
                    approx: to_f64(&value),
                    value,
                    in_group: prepared.in_group(&h)?,
                });
                h *= rho;
            }
            tail_ranges.push(samples.len() - config.tail..samples.len());
            debug_assert!(samples.len() - start >= config.tail);
        }
    }
    for r in tail_ranges {
        tails.extend(&samples[r]);
    }

    let verdict = classify(&tails, config.tol);
    Ok(ProbeReport {
        verdict,
        samples,
        config: ProbeConfig {
            ratios,
            ..config.clone()
        },
        numeric_evidence: true,
    })
}

fn classify(tail: &[&Sample], tol: f64) -> ProbeVerdict {
    let first = &tail[0].value;
    if tail.iter().all(|t| &t.value == first) {
        return ProbeVerdict::Converges {
            estimate: Estimate::Exact {
                value: first.clone(),
            },
        };
    }
    let lo = tail.iter().map(|t| t.approx).fold(f64::INFINITY, f64::min);
    let hi = tail.iter().map(|t| t.approx).fold(f64::NEG_INFINITY, f64::max);
    if lo.is_finite() && hi.is_finite() && close(lo, hi, tol) {
        let mean = tail.iter().map(|t| t.approx).sum::<f64>() / tail.len() as f64;
        return ProbeVerdict::Converges {
            estimate: Estimate::Approx { value: mean },
        };
    }

    let mut sorted: Vec<&Sample> = tail.to_vec();
    sorted.sort_by(|a, b| a.approx.total_cmp(&b.approx));
    let mut groups: Vec<Vec<&Sample>> = Vec::new();
    for s in sorted {
        match groups.last_mut() {
            Some(g) if close(g[0].approx, s.approx, tol) => g.push(s),
            _ => groups.push(vec![s]),
        }
    }
    groups.sort_by_key(|g| std::cmp::Reverse(g.len()));
    if groups.len() < 2 || groups[1].len() < 5 {
        return ProbeVerdict::Inconclusive;
    }
    let summarize = |g: &[&Sample]| {
        let value = g.iter().map(|s| s.approx).sum::<f64>() / g.len() as f64;
        let mut ratios: Vec<Rational> = g.iter().map(|s| s.ratio.clone()).collect();
        ratios.sort();
        ratios.dedup();
        let mut signs: Vec<i8> = g.iter().map(|s| s.sign).collect();
        signs.sort();
        signs.dedup();
        let in_group = match g[0].in_group {
            Some(flag) if g.iter().all(|s| s.in_group == Some(flag)) => Some(flag),
            _ => None,
        };
        Cluster {
            value,
            count: g.len(),
            ratios,
            signs,
            in_group,
        }
    };
    let a = summarize(&groups[0]);
    let b = summarize(&groups[1]);
    let scale = 1f64.max(a.value.abs()).max(b.value.abs());
    if !((a.value - b.value).abs() > 10.0 * tol * scale) {
        return ProbeVerdict::Inconclusive;
    }
    let (first, second) = if a.value >= b.value { (a, b) } else { (b, a) };
    ProbeVerdict::Diverges { first, second }
}

/// Probes the tilde quotients of orders `1..=n`, stopping at the first
/// stage that does not converge.
pub fn peano_probe(f: &FunctionOracle, x: &Rational, n: usize, config: &ProbeConfig) -> Result<Vec<ProbeReport>> {
    if n == 0 {
        return Err(Error::InvalidOrder("Peano probe needs n >= 1".into()));
    }
    let mut out = Vec::new();
    for j in 1..=n {
        let tilde = named_scheme(&FamilyKind::MzTilde { n: j })?;
        let report = limit_probe(&tilde, f, x, config)?;
        let stop = !report.verdict.converges();
        out.push(report);
        if stop {
            break;
        }
    }
    Ok(out)
}
