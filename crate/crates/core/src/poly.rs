//! Integer polynomials in a formal variable `q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sum_k c_k q^k` with exact integer coefficients; trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

/// `rational + irrational * sqrt(radicand)`; the second part is present only
/// when odd powers of `sqrt(p)` survive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdValue {
    pub rational: i128,
    pub irrational: i128,
    pub radicand: u64,
}

impl SurdValue {
    pub fn is_integer(&self) -> bool {
        self.irrational == 0
    }
}

impl fmt::Display for SurdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational, self.irrational) {
            (r, 0) => write!(f, "{r}"),
            (0, i) => write!(f, "{i}*sqrt({})", self.radicand),
            (r, i) if i < 0 => write!(f, "{r} - {}*sqrt({})", -i, self.radicand),
            (r, i) => write!(f, "{r} + {i}*sqrt({})", self.radicand),
        }
    }
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Adds `c * q^k`.
    pub fn add_monomial(&mut self, k: usize, c: i64) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        self.trim();
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `c_k == c_{deg - k}` for all `k`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Exact value at an integer `q`.
    pub fn evaluate(&self, q: i128) -> Result<i128> {
        self.coeffs.iter().rev().try_fold(0i128, |acc, &c| {
            acc.checked_mul(q)
                .and_then(|v| v.checked_add(c as i128))
                .ok_or(Error::Overflow)
        })
    }

    /// Value at `q = p^(half_exponent / 2)`, e.g. `q = sqrt(2)^3` for the
    /// Suzuki groups.
    pub fn evaluate_at_root_power(&self, p: u64, half_exponent: u32) -> Result<SurdValue> {
        let mut value = SurdValue {
            rational: 0,
            irrational: 0,
            radicand: p,
        };
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let total = (k as u64)
                .checked_mul(half_exponent as u64)
                .and_then(|t| u32::try_from(t).ok())
                .ok_or(Error::Overflow)?;
            let power = (p as i128).checked_pow(total / 2).ok_or(Error::Overflow)?;
            let term = power.checked_mul(c as i128).ok_or(Error::Overflow)?;
            let slot = if total % 2 == 0 {
                &mut value.rational
            } else {
                &mut value.irrational
            };
            *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
        }
        Ok(value)
    }

    /// Exponent to coefficient map of the nonzero terms.
    pub fn to_map(&self) -> BTreeMap<usize, i64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect()
    }

    pub fn from_map(map: &BTreeMap<usize, i64>) -> Self {
        let mut p = QPolynomial::zero();
        for (&k, &c) in map {
            p.add_monomial(k, c);
        }
        p
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (k, magnitude) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("q")?,
                (1, m) => write!(f, "{m}*q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, m) => write!(f, "{m}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_map().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        BTreeMap::<usize, i64>::deserialize(deserializer).map(|m| QPolynomial::from_map(&m))
    }
}
