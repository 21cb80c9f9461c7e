//! Fraction-free elimination for small dense rational systems.
//!
//! Each row is cleared of denominators, then the integer system is reduced
//! to echelon form with Bareiss updates (every division is exact) and
//! partial pivoting by absolute value. Only back substitution touches
//! fractions again.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Underdetermined { rank: usize },
    Inconsistent,
}

/// Solves `rows · x = rhs` for `x`; every row must have the same length.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational]) -> LinearSolution {
    assert_eq!(rows.len(), rhs.len(), "row count must match rhs length");
    let unknowns = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), unknowns, "ragged matrix");
            let lcm = row
                .iter()
                .chain(std::iter::once(b))
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .chain(std::iter::once(b))
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();

    let height = m.len();
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        if r == height {
            break;
        }
        let Some(p) = (r..height)
            .filter(|&i| !m[i][c].is_zero())
            .max_by(|&i, &j| m[i][c].abs().cmp(&m[j][c].abs()))
        else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..height {
            for j in c + 1..=unknowns {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    if m[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    if r < unknowns {
        return LinearSolution::Underdetermined { rank: r };
    }

    let mut x = vec![Rational::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate().rev() {
        let mut acc = Rational::from_integer(m[i][unknowns].clone());
        for j in c + 1..unknowns {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[c] = acc / Rational::from_integer(m[i][c].clone());
    }
    LinearSolution::Unique(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn solves_small_rational_system() {
        let rows = vec![vec![frac(1, 2), int(1)], vec![int(1), frac(-1, 3)]];
        let rhs = vec![int(2), frac(1, 3)];
        let LinearSolution::Unique(x) = solve(&rows, &rhs) else {
            panic!("expected a unique solution");
        };
        for (row, b) in rows.iter().zip(&rhs) {
            let lhs: Rational = row.iter().zip(&x).map(|(a, v)| a * v).sum();
            assert_eq!(&lhs, b);
        }
    }

    #[test]
    fn detects_rank_deficiency() {
        let rows = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(
            solve(&rows, &[int(1), int(2)]),
            LinearSolution::Underdetermined { rank: 1 }
        );
        assert_eq!(solve(&rows, &[int(1), int(3)]), LinearSolution::Inconsistent);
    }

    #[test]
    fn overdetermined_consistent_and_inconsistent() {
        let rows = vec![vec![int(1)], vec![int(2)], vec![int(3)]];
        assert_eq!(
            solve(&rows, &[int(2), int(4), int(6)]),
            LinearSolution::Unique(vec![int(2)])
        );
        assert_eq!(
            solve(&rows, &[int(2), int(4), int(7)]),
            LinearSolution::Inconsistent
        );
    }
}
