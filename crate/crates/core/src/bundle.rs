//! Isomorphism classes of degree-zero bundles `L^e ⊗ F_r` and their direct sums.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::context::TorsionContext;
use crate::{Error, Result};

/// The indecomposable bundle `L^e ⊗ F_r` of rank `r` and degree zero.
///
/// The exponent is canonicalized at construction, so two values compare
/// equal exactly when the bundles are isomorphic. Ordering is by index first,
/// then exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecomposableBundle {
    index: u32,
    exponent: i64,
    context: TorsionContext,
}

impl IndecomposableBundle {
    pub fn new(context: TorsionContext, exponent: i64, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(Self {
            index,
            exponent: context.reduce(exponent),
            context,
        })
    }

    /// `O_X`.
    pub fn trivial(context: TorsionContext) -> Self {
        Self {
            index: 1,
            exponent: 0,
            context,
        }
    }

    /// The Atiyah bundle `F_r`.
    pub fn atiyah(context: TorsionContext, index: u32) -> Result<Self> {
        Self::new(context, 0, index)
    }

    /// The line bundle `L^e`.
    pub fn line(context: TorsionContext, exponent: i64) -> Self {
        Self {
            index: 1,
            exponent: context.reduce(exponent),
            context,
        }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn exponent(self) -> i64 {
        self.exponent
    }

    pub fn context(self) -> TorsionContext {
        self.context
    }

    pub fn rank(self) -> u32 {
        self.index
    }

    pub fn is_trivial(self) -> bool {
        self.index == 1 && self.exponent == 0
    }

    /// `F_r` is self-dual, so only the line factor is inverted.
    pub fn dual(self) -> Self {
        Self {
            exponent: self.context.reduce(-self.exponent),
            ..self
        }
    }

    /// Exponent of `det(L^e ⊗ F_r) = L^{e·r}`.
    pub fn det_exponent(self) -> i64 {
        self.context.reduce(self.exponent * i64::from(self.index))
    }

    /// Atiyah's multiplication rule: for `s ≤ r`,
    /// `F_r ⊗ F_s = F_{r-s+1} ⊕ F_{r-s+3} ⊕ … ⊕ F_{r+s-1}`, and the line
    /// exponents add.
    pub fn tensor(self, other: Self) -> Result<BundleSum> {
        self.context.check(other.context)?;
        let (r, s) = if self.index >= other.index {
            (self.index, other.index)
        } else {
            (other.index, self.index)
        };
        let exponent = self.context.reduce(self.exponent + other.exponent);
        let mut out = BundleSum::zero(self.context);
        for k in 0..s {
            out.insert(
                Self {
                    index: r - s + 1 + 2 * k,
                    exponent,
                    context: self.context,
                },
                BigUint::one(),
            );
        }
        Ok(out)
    }

    /// `S^k F_2 = F_{k+1}`.
    pub fn sym_power_f2(context: TorsionContext, k: u32) -> Self {
        Self {
            index: k + 1,
            exponent: 0,
            context,
        }
    }
}

impl fmt::Display for IndecomposableBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = match self.exponent {
            0 => None,
            1 => Some("L".to_string()),
            e => Some(format!("L^{e}")),
        };
        match (line, self.index) {
            (None, 1) => write!(f, "O"),
            (None, r) => write!(f, "F_{r}"),
            (Some(l), 1) => write!(f, "{l}"),
            (Some(l), r) => write!(f, "{l}*F_{r}"),
        }
    }
}

/// A vector bundle up to isomorphism: a finite multiset of indecomposables.
///
/// The empty sum is the zero object and only appears as an intermediate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleSum {
    context: TorsionContext,
    terms: BTreeMap<IndecomposableBundle, BigUint>,
}

impl BundleSum {
    pub fn zero(context: TorsionContext) -> Self {
        Self {
            context,
            terms: BTreeMap::new(),
        }
    }

    pub fn trivial(context: TorsionContext) -> Self {
        IndecomposableBundle::trivial(context).into()
    }

    pub fn from_terms<I>(context: TorsionContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IndecomposableBundle, BigUint)>,
    {
        let mut out = Self::zero(context);
        for (bundle, multiplicity) in terms {
            context.check(bundle.context)?;
            out.insert(bundle, multiplicity);
        }
        Ok(out)
    }

    fn insert(&mut self, bundle: IndecomposableBundle, multiplicity: BigUint) {
        if multiplicity.is_zero() {
            return;
        }
        *self.terms.entry(bundle).or_default() += multiplicity;
    }

    pub fn context(&self) -> TorsionContext {
        self.context
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct indecomposable components.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in `(index, exponent)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&IndecomposableBundle, &BigUint)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = IndecomposableBundle> + '_ {
        self.terms.keys().copied()
    }

    pub fn multiplicity(&self, bundle: &IndecomposableBundle) -> BigUint {
        self.terms.get(bundle).cloned().unwrap_or_default()
    }

    pub fn rank(&self) -> BigUint {
        self.terms.iter().map(|(b, m)| m * b.index).sum()
    }

    /// Canonical exponent of `det` as a power of `L`.
    pub fn det_exponent(&self) -> BigInt {
        let total: BigInt = self
            .terms
            .iter()
            .map(|(b, m)| BigInt::from(m.clone()) * b.exponent * b.index)
            .sum();
        match self.context.order() {
            0 => total,
            n => {
                let n = BigInt::from(n);
                ((total % &n) + &n) % n
            }
        }
    }

    pub fn dual(&self) -> Self {
        Self {
            context: self.context,
            terms: self
                .terms
                .iter()
                .map(|(b, m)| (b.dual(), m.clone()))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.context.check(other.context)?;
        let mut out = self.clone();
        for (b, m) in &other.terms {
            out.insert(*b, m.clone());
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.context.check(other.context)?;
        let mut out = Self::zero(self.context);
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                let weight = ma * mb;
                for (c, _) in a.tensor(*b)?.terms {
                    out.insert(c, weight.clone());
                }
            }
        }
        Ok(out)
    }

    /// `x^{⊗m}`; negative powers go through the dual and `m = 0` gives `O_X`.
    pub fn tensor_power(&self, m: i64) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::EmptyBundle);
        }
        let mut base = if m < 0 { self.dual() } else { self.clone() };
        let mut remaining = m.unsigned_abs();
        let mut acc = Self::trivial(self.context);
        while remaining > 0 {
            if remaining & 1 == 1 {
                acc = acc.tensor(&base)?;
            }
            remaining >>= 1;
            if remaining > 0 {
                base = base.tensor(&base)?;
            }
        }
        Ok(acc)
    }
}

impl From<IndecomposableBundle> for BundleSum {
    fn from(bundle: IndecomposableBundle) -> Self {
        let mut out = Self::zero(bundle.context);
        out.insert(bundle, BigUint::one());
        out
    }
}

impl fmt::Display for BundleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{m}*{b}")?;
            }
        }
        Ok(())
    }
}
