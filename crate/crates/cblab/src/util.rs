//! Small exact-arithmetic helpers: combinatorial binomials, rational
//! string round-trips, and dense Gaussian elimination over the rationals.

use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};

/// Binomial coefficient with the combinatorial convention: zero whenever
/// `n < 0`, `k < 0`, or `n < k`. The identity generators rely on this
/// convention so that out-of-range terms drop out instead of erroring.
pub fn binomial(n: i64, k: i64) -> Int {
    if n < 0 || k < 0 || n < k {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for j in 0..k {
        acc = acc * Int::from(n - j) / Int::from(j + 1);
    }
    acc
}

/// `binomial` as an exact rational, since most callers combine it with
/// rational coefficients.
pub fn binomial_rat(n: i64, k: i64) -> Rat {
    Rat::from_integer(binomial(n, k))
}

/// Render a rational in lowest terms as `p` or `p/q` with `q > 0`.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serialize a big integer as its decimal string, so JSON consumers never
/// see a number outside their integer range.
pub fn int_string<S: serde::Serializer>(x: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Serialize a `u128` as its decimal string, for the same reason.
pub fn u128_string<S: serde::Serializer>(x: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Parse `p` or `p/q` into an exact rational.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.parse::<Int>()
            .map_err(|e| Error::Normalization(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Normalization(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Rank of a dense rational matrix, by fraction-free-ish Gaussian
/// elimination (exact rational pivots; no pivoting subtleties since the
/// arithmetic is exact).
pub fn matrix_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for i in rank + 1..nrows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &inv;
            for j in col..ncols {
                let delta = &f * &m[rank][j];
                m[i][j] = &m[i][j] - delta;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Solve a (possibly overdetermined) exact linear system `A x = b`.
///
/// Returns the unique solution when one exists; `Err(Inconsistent)` when the
/// system has no solution; `Err(Inconsistent)` as well when the solution is
/// not unique (callers here always expect full column rank, so an
/// underdetermined system is equally a caller bug worth surfacing).
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> Result<Vec<Rat>> {
    let nrows = a.len();
    if nrows != b.len() {
        return Err(Error::Inconsistent(format!(
            "matrix has {nrows} rows but rhs has {}",
            b.len()
        )));
    }
    if nrows == 0 {
        return Ok(Vec::new());
    }
    let ncols = a[0].len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for j in col..=ncols {
            m[row][j] = &m[row][j] / &inv;
        }
        for i in 0..nrows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=ncols {
                    let delta = &f * &m[row][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }

    for i in row..nrows {
        if !m[i][ncols].is_zero() {
            return Err(Error::Inconsistent(
                "overdetermined system has no exact solution".into(),
            ));
        }
    }
    if pivot_cols.len() != ncols {
        return Err(Error::Inconsistent(format!(
            "system is underdetermined: rank {} < {} unknowns",
            pivot_cols.len(),
            ncols
        )));
    }

    let mut x = vec![Rat::zero(); ncols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Ok(x)
}

/// Exact integer check for a rational; returns the integer when the
/// denominator is one.
pub fn rat_as_int(x: &Rat) -> Option<Int> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// Factorial as a big integer (small arguments only).
pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for j in 2..=n {
        acc *= Int::from(j);
    }
    acc
}

/// Signed magnitude helper used by display code: `|x|` with its sign split
/// off, so callers can typeset `+ c` / `- c`.
pub fn rat_signed_parts(x: &Rat) -> (bool, Rat) {
    (x.is_negative(), x.abs())
}
