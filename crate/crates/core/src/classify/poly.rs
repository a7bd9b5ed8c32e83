//! Writing `[F_i]` as an integer polynomial in a single generator.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::context::TorsionContext;
use crate::kring::KRingElement;
use crate::{Error, IndecomposableBundle, Result};

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x`.
    pub fn variable() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let zero = BigInt::zero();
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..len)
                .map(|i| {
                    op(
                        self.coefficients.get(i).unwrap_or(&zero),
                        other.coefficients.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Horner evaluation at a K-ring element.
    pub fn evaluate(&self, x: &KRingElement) -> KRingElement {
        let ctx = x.context();
        self.coefficients
            .iter()
            .rev()
            .fold(KRingElement::zero(ctx), |acc, c| {
                &(&acc * x) + &KRingElement::from_integer(ctx, c.clone())
            })
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coefficients.iter().enumerate().rev() {
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
            let mag = c.magnitude();
            let show_coeff = deg == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                d => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Which generator the polynomial is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chain {
    /// `x = [F_2]`; covers every index.
    Even,
    /// `x = [F_3]`; covers odd indices only.
    Odd,
}

impl Chain {
    pub fn generator(self) -> u32 {
        match self {
            Chain::Even => 2,
            Chain::Odd => 3,
        }
    }

    pub fn generator_element(self, context: TorsionContext) -> KRingElement {
        IndecomposableBundle::atiyah(context, self.generator())
            .expect("generator index is positive")
            .into()
    }
}

/// The polynomial `p` with `[F_i] = p(x)` in the chosen chain.
///
/// Even chain: `p_1 = 1`, `p_2 = x`, `p_{i+1} = x·p_i − p_{i−1}`.
/// Odd chain: `q_1 = 1`, `q_3 = x`, `q_{i+2} = (x − 1)·q_i − q_{i−2}`.
pub fn express_in_generator(index: u32, chain: Chain) -> Result<IntegerPolynomial> {
    if index == 0 {
        return Err(Error::ZeroIndex);
    }
    let x = IntegerPolynomial::variable();
    let (step, shift) = match chain {
        Chain::Even => (x.clone(), 1),
        Chain::Odd => {
            if index.is_multiple_of(2) {
                return Err(Error::EvenIndexInOddChain(index));
            }
            (x.sub(&IntegerPolynomial::one()), 2)
        }
    };
    let mut prev = IntegerPolynomial::one();
    if index == 1 {
        return Ok(prev);
    }
    let mut cur = x;
    let mut at = 1 + shift;
    while at < index {
        let next = step.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
        at += shift;
    }
    Ok(cur)
}
