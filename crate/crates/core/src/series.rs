//! Truncated formal power series with arbitrary-precision integer
//! coefficients, and the two partition generating functions built from them:
//!
//! - `sum P(n) q^n = prod_{j>=1} 1/(1 - q^j)`
//! - `sum Q(n) q^n = sum_{s>=1} q^s prod_{j>=s+1} 1/(1 - q^j)`
//!
//! # Truncation
//!
//! Everything is computed modulo `q^(N+1)`. Under that reduction the infinite
//! products and sums become finite: a factor `1/(1 - q^j)` with `j > N` is
//! `1 + O(q^(N+1))`, so it is dropped, and a summand `q^s * (...)` with
//! `s > N` is `O(q^(N+1))`, so it is dropped too. Coefficients of degree
//! `<= N` are therefore exact.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficients `c_0 ..= c_N` of a power series truncated after degree `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(degree: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Pads or truncates `coeffs` to exactly `degree + 1` entries.
    pub fn from_coeffs<I, T>(degree: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut v: Vec<BigInt> = coeffs
            .into_iter()
            .take(degree + 1)
            .map(Into::into)
            .collect();
        v.resize(degree + 1, BigInt::zero());
        Series { coeffs: v }
    }

    /// Truncation degree `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        series_mul(self, other)
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series { coeffs })
    }

    /// Multiplies by `q^s`, discarding whatever moves past degree `N`.
    pub fn shift(&self, s: usize) -> Series {
        let n = self.degree();
        let mut out = Series::zero(n);
        if s <= n {
            out.coeffs[s..].clone_from_slice(&self.coeffs[..=n - s]);
        }
        out
    }

    fn check_degree(&self, other: &Series) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

/// Cauchy product truncated at the common degree. Schoolbook; zero
/// coefficients of `a` are skipped, which makes multiplying by the sparse
/// geometric factors cost `O(N^2 / j)`.
pub fn series_mul(a: &Series, b: &Series) -> Result<Series> {
    a.check_degree(b)?;
    let n = a.degree();
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=n - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    Ok(Series { coeffs: out })
}

/// `1/(1 - q^j) = 1 + q^j + q^(2j) + ...` truncated at degree `n`.
pub fn geometric_factor(j: usize, n: usize) -> Result<Series> {
    if j < 1 {
        return Err(Error::InvalidFactor(j));
    }
    let mut s = Series::zero(n);
    for k in (0..=n).step_by(j) {
        s.coeffs[k] = BigInt::one();
    }
    Ok(s)
}

/// `P(0) ..= P(N)` from the Euler product, factors multiplied in increasing `j`.
pub fn euler_p_coeffs(n: usize) -> Vec<BigInt> {
    let mut acc = Series::one(n);
    for j in 1..=n {
        let factor = geometric_factor(j, n).expect("j >= 1");
        acc = series_mul(&acc, &factor).expect("same degree");
    }
    acc.into_coeffs()
}

/// `Q(0) ..= Q(N)` from `sum_{s=1..N} q^s prod_{j=s+1..N} 1/(1 - q^j)`.
///
/// The tail products are built from the top down, `T_N = 1` and
/// `T_(s-1) = T_s / (1 - q^s)`, so each is one multiplication away from the
/// previous one.
pub fn q_coeffs(n: usize) -> Vec<BigInt> {
    let mut total = Series::zero(n);
    let mut tail = Series::one(n);
    for s in (1..=n).rev() {
        // tail = prod_{j=s+1..N} 1/(1 - q^j)
        total = total.add(&tail.shift(s)).expect("same degree");
        let factor = geometric_factor(s, n).expect("s >= 1");
        tail = series_mul(&tail, &factor).expect("same degree");
    }
    total.into_coeffs()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceViolation {
    pub n: usize,
    /// `P(n + 1)`
    pub lhs: BigInt,
    /// `P(n) + Q(n)`
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub max_n: usize,
    pub violations: Vec<RecurrenceViolation>,
}

impl RecurrenceCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `P(n+1) = P(n) + Q(n)` for every `0 <= n < max_n` from the two
/// generating functions.
pub fn check_recurrence(max_n: usize) -> RecurrenceCheck {
    let p = euler_p_coeffs(max_n);
    let q = q_coeffs(max_n);
    check_recurrence_with(&p, &q)
}

/// Same check on precomputed coefficient arrays of equal length.
pub fn check_recurrence_with(p: &[BigInt], q: &[BigInt]) -> RecurrenceCheck {
    let max_n = p.len().min(q.len()).saturating_sub(1);
    let violations = (0..max_n)
        .filter_map(|n| {
            let rhs = &p[n] + &q[n];
            (p[n + 1] != rhs).then(|| RecurrenceViolation {
                n,
                lhs: p[n + 1].clone(),
                rhs,
            })
        })
        .collect();
    RecurrenceCheck { max_n, violations }
}

/// Writes `n,P,Q` CSV rows for degrees `0..=N`.
pub fn write_coeff_csv<W: Write>(out: W, p: &[BigInt], q: &[BigInt]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "P", "Q"])?;
    for (n, (pn, qn)) in p.iter().zip(q).enumerate() {
        w.write_record([n.to_string(), pn.to_string(), qn.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
