//! Membership in finitely generated multiplicative subgroups of ℚ×.
//!
//! A non-zero rational maps to its vector of prime exponents plus a sign
//! bit. Membership in `⟨g₁,…,g_k⟩` is then membership of that vector in the
//! integer lattice spanned by the generators' vectors, with the sign
//! coordinate taken modulo 2.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{display_rational, Rational};

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

type Exponents = BTreeMap<BigInt, i64>;

fn trial_u128(mut m: u128, mut d: u128, bound: u64, out: &mut Exponents, sign: i64) -> Option<u128> {
    while d * d <= m && d <= bound as u128 {
        while m % d == 0 {
            *out.entry(BigInt::from(d)).or_insert(0) += sign;
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    (m > 1).then_some(m)
}

fn trial_big(mut m: BigInt, bound: u64, out: &mut Exponents, sign: i64) -> Option<BigInt> {
    let mut d: u64 = 2;
    while d <= bound && BigInt::from(d) * BigInt::from(d) <= m {
        if let Some(small) = m.to_u128() {
            return trial_u128(small, d as u128, bound, out, sign).map(BigInt::from);
        }
        let bd = BigInt::from(d);
        while m.is_multiple_of(&bd) {
            *out.entry(bd.clone()).or_insert(0) += sign;
            m /= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    (m > BigInt::one()).then_some(m)
}

/// Adds the factorization of `|m|` to `out` with multiplicity `sign`.
fn factor_into(m: &BigInt, bound: u64, out: &mut Exponents, sign: i64, shown: &Rational) -> Result<()> {
    let m = m.abs();
    let rest = match m.to_u128() {
        Some(small) => trial_u128(small, 2, bound, out, sign).map(BigInt::from),
        None => trial_big(m, bound, out, sign),
    };
    if let Some(rest) = rest {
        // No factor up to the bound, so a cofactor below bound² is prime.
        let b = BigInt::from(bound);
        if rest > &b * &b {
            return Err(Error::FactorizationBoundExceeded(display_rational(shown)));
        }
        *out.entry(rest).or_insert(0) += sign;
    }
    Ok(())
}

fn exponents(x: &Rational, bound: u64) -> Result<Exponents> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Exponents::new();
    factor_into(x.numer(), bound, &mut out, 1, x)?;
    factor_into(x.denom(), bound, &mut out, -1, x)?;
    out.retain(|_, e| *e != 0);
    Ok(out)
}

/// Integer row echelon form; pivots are positive and each row's leading
/// entry sits strictly right of the previous row's.
fn echelon(mut rows: Vec<Vec<BigInt>>, width: usize) -> Vec<(usize, Vec<BigInt>)> {
    let mut out = Vec::new();
    for c in 0..width {
        loop {
            let mut live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by_key(|&i| rows[i][c].abs());
            let p = live[0];
            for &i in &live[1..] {
                let q = rows[i][c].div_floor(&rows[p][c]);
                let pivot_row = rows[p].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            let mut row = rows.swap_remove(i);
            if row[c].sign() == Sign::Minus {
                row.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push((c, row));
        }
    }
    out
}

/// A finitely generated subgroup of the non-zero rationals.
#[derive(Debug, Clone)]
pub struct Subgroup {
    primes: Vec<BigInt>,
    basis: Vec<(usize, Vec<BigInt>)>,
    bound: u64,
}

impl Subgroup {
    pub fn new(generators: &[Rational]) -> Result<Self> {
        Self::with_bound(generators, DEFAULT_FACTOR_BOUND)
    }

    pub fn with_bound(generators: &[Rational], bound: u64) -> Result<Self> {
        let factored: Vec<(Exponents, bool)> = generators
            .iter()
            .map(|g| Ok((exponents(g, bound)?, g.is_negative())))
            .collect::<Result<_>>()?;
        let mut primes: Vec<BigInt> = factored.iter().flat_map(|(e, _)| e.keys().cloned()).collect();
        primes.sort();
        primes.dedup();
        let width = primes.len() + 1;
        let mut rows: Vec<Vec<BigInt>> = factored
            .iter()
            .map(|(e, neg)| {
                let mut row: Vec<BigInt> = primes
                    .iter()
                    .map(|p| BigInt::from(e.get(p).copied().unwrap_or(0)))
                    .collect();
                row.push(BigInt::from(u8::from(*neg)));
                row
            })
            .collect();
        // The sign coordinate lives in Z/2.
        let mut sign_row = vec![BigInt::zero(); width];
        sign_row[width - 1] = BigInt::from(2);
        rows.push(sign_row);
        Ok(Subgroup {
            basis: echelon(rows, width),
            primes,
            bound,
        })
    }

    /// Primes that occur in some generator.
    pub fn primes(&self) -> &[BigInt] {
        &self.primes
    }

    pub fn contains(&self, x: &Rational) -> Result<bool> {
        let e = exponents(x, self.bound)?;
        if e.keys().any(|p| self.primes.binary_search(p).is_err()) {
            return Ok(false);
        }
        let mut target: Vec<BigInt> = self
            .primes
            .iter()
            .map(|p| BigInt::from(e.get(p).copied().unwrap_or(0)))
            .collect();
        target.push(BigInt::from(u8::from(x.is_negative())));
        let mut next = self.basis.iter().peekable();
        for c in 0..target.len() {
            match next.peek() {
                Some((pc, row)) if *pc == c => {
                    let (q, r) = target[c].div_rem(&row[c]);
                    if !r.is_zero() {
                        return Ok(false);
                    }
                    for (t, y) in target.iter_mut().zip(row) {
                        *t -= &q * y;
                    }
                    next.next();
                }
                _ => {
                    if !target[c].is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Whether `x` lies in the subgroup generated by `generators`.
pub fn subgroup_membership(x: &Rational, generators: &[Rational]) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    Subgroup::new(generators)?.contains(x)
}
