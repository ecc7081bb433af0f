use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::partition::Partition;

use super::count::{ce_tiling, ci_tilings};
use super::enumerate::DEFAULT_CAP;

/// A polynomial in `q` with exact integer coefficients, lowest degree first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> QPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        QPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// `p(q)` with every odd coefficient negated, i.e. `p(-q)`.
    pub fn at_minus_q(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

impl Zero for QPoly {
    fn zero() -> QPoly {
        QPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> QPoly {
        QPoly::monomial(1, 0)
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        self + (-rhs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

/// `Σ_T q^{#tiles}` over cover-inclusive tilings `T` of `λ∖μ`.
pub fn ci_qpoly(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    ci_qpoly_capped(lambda, mu, DEFAULT_CAP)
}

pub fn ci_qpoly_capped(lambda: &Partition, mu: &Partition, cap: usize) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for t in ci_tilings(lambda, mu, cap)? {
        out += &QPoly::monomial(1, t.len());
    }
    Ok(out)
}

/// `q^{#tiles}` of the cover-expansive tiling of `λ∖μ`, or zero.
pub fn ce_qpoly(lambda: &Partition, mu: &Partition) -> QPoly {
    ce_tiling(lambda, mu).map_or_else(QPoly::zero, |t| QPoly::monomial(1, t.len()))
}
