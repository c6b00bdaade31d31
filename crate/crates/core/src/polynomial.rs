use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Polynomial with non-negative integer coefficients, ascending degree,
/// without trailing zeros. Text form: `4 4 1` for `4 + 4x + x^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// `p(x + 1)`.
    pub fn shifted_by_one(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0u64; n];
        // row of binomial coefficients C(i, k)
        let mut binom = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            binom[i] = 1;
            for k in (1..i).rev() {
                binom[k] += binom[k - 1];
            }
            binom[0] = 1;
            for k in 0..=i {
                out[k] += a * binom[k];
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::InvalidParameter(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Polynomial::new)
    }
}
