use std::fmt;

/// Order of the twisting line bundle `L` in `Pic⁰`.
///
/// `0` stands for infinite order, `1` for `L ≅ O_X`, and `n ≥ 2` for the
/// minimal `n` with `L^n ≅ O_X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TorsionContext {
    order: u64,
}

impl TorsionContext {
    pub const NON_TORSION: TorsionContext = TorsionContext { order: 0 };
    pub const TRIVIAL: TorsionContext = TorsionContext { order: 1 };

    pub fn new(order: u64) -> Self {
        Self { order }
    }

    pub fn order(self) -> u64 {
        self.order
    }

    pub fn is_torsion(self) -> bool {
        self.order != 0
    }

    /// Canonical representative of `L^e`: unchanged for non-torsion, `e mod n` otherwise.
    pub fn reduce(self, e: i64) -> i64 {
        match self.order {
            0 => e,
            n => e.rem_euclid(n as i64),
        }
    }

    pub(crate) fn check(self, other: TorsionContext) -> crate::Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(crate::Error::ContextMismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for TorsionContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            0 => write!(f, "non-torsion"),
            n => write!(f, "n={n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_exponent() {
        assert_eq!(TorsionContext::new(0).reduce(-3), -3);
        assert_eq!(TorsionContext::new(4).reduce(6), 2);
        assert_eq!(TorsionContext::new(1).reduce(5), 0);
        assert_eq!(TorsionContext::new(4).reduce(-1), 3);
    }
}
