//! Character oracle.
//!
//! A bundle class `L^e ⊗ F_r` is sent to `t^e·[r]_q` where
//! `[r]_q = q^{r-1} + q^{r-3} + … + q^{-(r-1)}`. Products of characters are
//! computed by plain Laurent-polynomial multiplication and decomposed back by
//! peeling highest weights, which gives a route to tensor decompositions that
//! never touches the multiplication rule in [`crate::bundle`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bundle::{BundleSum, IndecomposableBundle};
use crate::context::TorsionContext;
use crate::{Error, Result};

/// Laurent polynomial in a line variable `t` and a weight variable `q`.
///
/// Keys are `(q-exponent, t-exponent)` so the last entry always carries the
/// highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateCharacter {
    context: TorsionContext,
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl BivariateCharacter {
    pub fn zero(context: TorsionContext) -> Self {
        Self {
            context,
            coeffs: BTreeMap::new(),
        }
    }

    /// Monomial `c·t^t_exp·q^q_exp`.
    pub fn monomial(context: TorsionContext, t_exp: i64, q_exp: i64, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(context);
        out.accumulate(t_exp, q_exp, c.into());
        out
    }

    pub fn context(&self) -> TorsionContext {
        self.context
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, t_exp: i64, q_exp: i64) -> BigInt {
        self.coeffs
            .get(&(q_exp, self.context.reduce(t_exp)))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms as `(t-exponent, q-exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.coeffs.iter().map(|(&(q, t), c)| (t, q, c))
    }

    fn accumulate(&mut self, t_exp: i64, q_exp: i64, value: BigInt) {
        let key = (q_exp, self.context.reduce(t_exp));
        let slot = self.coeffs.entry(key).or_default();
        *slot += value;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.context.check(other.context)?;
        let mut out = self.clone();
        for (&(q, t), c) in &other.coeffs {
            out.accumulate(t, q, c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.context.check(other.context)?;
        let mut out = Self::zero(self.context);
        for (&(qa, ta), ca) in &self.coeffs {
            for (&(qb, tb), cb) in &other.coeffs {
                out.accumulate(ta + tb, qa + qb, ca * cb);
            }
        }
        Ok(out)
    }

    /// Value at `t = q = 1`; equals the rank for characters of bundles.
    pub fn rank(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn is_weight_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(q, t), c)| self.coeffs.get(&(-q, t)) == Some(c))
    }
}

impl fmt::Display for BivariateCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(q, t), c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if t != 0 {
                write!(f, "*t^{t}")?;
            }
            if q != 0 {
                write!(f, "*q^{q}")?;
            }
        }
        Ok(())
    }
}

/// Weight character `[r]_q`.
pub fn bracket(context: TorsionContext, r: u32) -> Result<BivariateCharacter> {
    if r == 0 {
        return Err(Error::ZeroIndex);
    }
    let top = i64::from(r) - 1;
    let mut out = BivariateCharacter::zero(context);
    for k in 0..i64::from(r) {
        out.accumulate(0, top - 2 * k, BigInt::one());
    }
    Ok(out)
}

pub fn indecomposable_character(bundle: IndecomposableBundle) -> BivariateCharacter {
    let mut out = BivariateCharacter::zero(bundle.context());
    let top = i64::from(bundle.index()) - 1;
    for k in 0..i64::from(bundle.index()) {
        out.accumulate(bundle.exponent(), top - 2 * k, BigInt::one());
    }
    out
}

pub fn character(bundle: &BundleSum) -> BivariateCharacter {
    let mut out = BivariateCharacter::zero(bundle.context());
    for (b, m) in bundle.iter() {
        let m = BigInt::from(m.clone());
        for (t, q, c) in indecomposable_character(*b).terms() {
            out.accumulate(t, q, c * &m);
        }
    }
    out
}

/// Inverts [`character`] by repeatedly removing `m·t^e·[w+1]_q` for the
/// highest remaining weight `w`.
pub fn decompose_character(c: &BivariateCharacter) -> Result<BundleSum> {
    let context = c.context;
    let mut rest = c.clone();
    let mut terms = Vec::new();
    while let Some((&(w, t), m)) = rest.coeffs.last_key_value() {
        if w < 0 {
            return Err(Error::NotACharacter(format!(
                "leftover term at negative weight q^{w}"
            )));
        }
        if !m.is_positive() {
            return Err(Error::NotACharacter(format!(
                "coefficient {m} at highest weight q^{w}, t^{t}"
            )));
        }
        let m = m.clone();
        for k in 0..=w {
            rest.accumulate(t, w - 2 * k, -&m);
            if rest.coefficient(t, w - 2 * k).is_negative() {
                return Err(Error::NotACharacter(format!(
                    "negative coefficient at q^{}, t^{t}",
                    w - 2 * k
                )));
            }
        }
        let index = u32::try_from(w + 1)
            .map_err(|_| Error::NotACharacter(format!("weight {w} out of range")))?;
        terms.push((
            IndecomposableBundle::new(context, t, index)?,
            m.magnitude().clone(),
        ));
    }
    BundleSum::from_terms(context, terms)
}

/// Result of comparing the multiplication rule with the character route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub agrees: bool,
    pub rule: BundleSum,
    pub oracle: BundleSum,
}

pub fn oracle_check(a: IndecomposableBundle, b: IndecomposableBundle) -> Result<OracleCheck> {
    let rule = a.tensor(b)?;
    let product = indecomposable_character(a).mul(&indecomposable_character(b))?;
    let oracle = decompose_character(&product)?;
    Ok(OracleCheck {
        agrees: rule == oracle,
        rule,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const N0: TorsionContext = TorsionContext::NON_TORSION;

    fn q(exp: i64, c: i64) -> BivariateCharacter {
        BivariateCharacter::monomial(N0, 0, exp, c)
    }

    fn poly(terms: &[(i64, i64)]) -> BivariateCharacter {
        terms
            .iter()
            .fold(BivariateCharacter::zero(N0), |acc, &(e, c)| {
                acc.add(&q(e, c)).unwrap()
            })
    }

    fn f(e: i64, r: u32) -> IndecomposableBundle {
        IndecomposableBundle::new(N0, e, r).unwrap()
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(N0, 1).unwrap(), q(0, 1));
        assert_eq!(bracket(N0, 2).unwrap(), poly(&[(1, 1), (-1, 1)]));
        assert_eq!(
            bracket(N0, 4).unwrap(),
            poly(&[(3, 1), (1, 1), (-1, 1), (-3, 1)])
        );
        assert_eq!(bracket(N0, 0), Err(Error::ZeroIndex));
    }

    #[test]
    fn characters() {
        assert_eq!(character(&BundleSum::trivial(N0)), q(0, 1));
        assert_eq!(
            character(&f(1, 2).into()),
            BivariateCharacter::monomial(N0, 1, 1, 1)
                .add(&BivariateCharacter::monomial(N0, 1, -1, 1))
                .unwrap()
        );
        let two_f2 = BundleSum::from(f(0, 2))
            .direct_sum(&f(0, 2).into())
            .unwrap();
        assert_eq!(character(&two_f2), poly(&[(1, 2), (-1, 2)]));
    }

    #[test]
    fn decompose_hand_expansions() {
        // (q + 1/q)^2 = q^2 + 2 + q^-2
        let got = decompose_character(&poly(&[(2, 1), (0, 2), (-2, 1)])).unwrap();
        assert_eq!(got.to_string(), "O + F_3");
        // (q + 1/q)^3 = q^3 + 3q + 3/q + q^-3
        let got = decompose_character(&poly(&[(3, 1), (1, 3), (-1, 3), (-3, 1)])).unwrap();
        assert_eq!(got.to_string(), "2*F_2 + F_4");
    }

    #[test]
    fn rejects_non_characters() {
        assert!(matches!(
            decompose_character(&q(1, 1)),
            Err(Error::NotACharacter(_))
        ));
        assert!(matches!(
            decompose_character(&q(-2, 1)),
            Err(Error::NotACharacter(_))
        ));
        assert!(matches!(
            decompose_character(&q(0, -1)),
            Err(Error::NotACharacter(_))
        ));
    }

    #[test]
    fn twisted_product_via_characters() {
        let product = character(&f(1, 2).into())
            .mul(&character(&f(2, 3).into()))
            .unwrap();
        assert_eq!(
            decompose_character(&product).unwrap().to_string(),
            "L^3*F_2 + L^3*F_4"
        );
    }

    #[test]
    fn torsion_reduces_line_variable() {
        let ctx = TorsionContext::new(3);
        let a = BivariateCharacter::monomial(ctx, 2, 0, 1);
        let prod = a.mul(&a).unwrap();
        assert_eq!(prod.coefficient(1, 0), BigInt::one());
        assert_eq!(prod.coefficient(4, 0), BigInt::one());
    }

    #[test]
    fn oracle_examples() {
        for (r, s) in [(2, 2), (3, 3), (1, 7), (7, 1), (5, 2)] {
            let check = oracle_check(f(0, r), f(0, s)).unwrap();
            assert!(check.agrees, "{check:?}");
        }
        let check = oracle_check(f(0, 3), f(0, 3)).unwrap();
        assert_eq!(check.oracle.to_string(), "O + F_3 + F_5");
    }
}
