//! Signed integer combinations of indecomposables: elements of `K(X)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bundle::{BundleSum, IndecomposableBundle};
use crate::context::TorsionContext;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KRingElement {
    context: TorsionContext,
    coeffs: BTreeMap<IndecomposableBundle, BigInt>,
}

impl KRingElement {
    pub fn zero(context: TorsionContext) -> Self {
        Self {
            context,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(context: TorsionContext) -> Self {
        Self::basis(IndecomposableBundle::trivial(context))
    }

    pub fn basis(bundle: IndecomposableBundle) -> Self {
        let mut out = Self::zero(bundle.context());
        out.coeffs.insert(bundle, BigInt::one());
        out
    }

    pub fn from_integer(context: TorsionContext, value: impl Into<BigInt>) -> Self {
        Self::one(context).scale(&value.into())
    }

    pub fn context(&self) -> TorsionContext {
        self.context
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, bundle: &IndecomposableBundle) -> BigInt {
        self.coeffs.get(bundle).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndecomposableBundle, &BigInt)> {
        self.coeffs.iter()
    }

    fn accumulate(&mut self, bundle: IndecomposableBundle, value: BigInt) {
        let slot = self.coeffs.entry(bundle).or_default();
        *slot += value;
        if slot.is_zero() {
            self.coeffs.remove(&bundle);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.context);
        }
        Self {
            context: self.context,
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, c * factor)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.context.check(other.context)?;
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.context.check(other.context)?;
        let mut out = Self::zero(self.context);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let weight = ca * cb;
                for c in a.tensor(*b)?.support() {
                    out.accumulate(c, weight.clone());
                }
            }
        }
        Ok(out)
    }

    /// The class of an actual bundle, when every coefficient is non-negative.
    pub fn to_bundle(&self) -> Option<BundleSum> {
        if self.coeffs.values().any(|c| c.is_negative()) {
            return None;
        }
        let terms = self.coeffs.iter().map(|(b, c)| (*b, c.magnitude().clone()));
        BundleSum::from_terms(self.context, terms).ok()
    }
}

impl From<&BundleSum> for KRingElement {
    fn from(bundle: &BundleSum) -> Self {
        let mut out = Self::zero(bundle.context());
        for (b, m) in bundle.iter() {
            out.accumulate(*b, BigInt::from(m.clone()));
        }
        out
    }
}

impl From<IndecomposableBundle> for KRingElement {
    fn from(bundle: IndecomposableBundle) -> Self {
        Self::basis(bundle)
    }
}

// Operator forms panic on mismatched contexts; use `checked_*` when mixing.
impl Add for &KRingElement {
    type Output = KRingElement;

    fn add(self, rhs: Self) -> KRingElement {
        self.checked_add(rhs)
            .expect("K-ring elements from different contexts")
    }
}

impl Sub for &KRingElement {
    type Output = KRingElement;

    fn sub(self, rhs: Self) -> KRingElement {
        self.checked_add(&-rhs)
            .expect("K-ring elements from different contexts")
    }
}

impl Mul for &KRingElement {
    type Output = KRingElement;

    fn mul(self, rhs: Self) -> KRingElement {
        self.checked_mul(rhs)
            .expect("K-ring elements from different contexts")
    }
}

impl Neg for &KRingElement {
    type Output = KRingElement;

    fn neg(self) -> KRingElement {
        KRingElement {
            context: self.context,
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl fmt::Display for KRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.coeffs.iter().enumerate() {
            let magnitude = c.magnitude();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if magnitude.is_one() {
                write!(f, "[{b}]")?;
            } else {
                write!(f, "{magnitude}[{b}]")?;
            }
        }
        Ok(())
    }
}
