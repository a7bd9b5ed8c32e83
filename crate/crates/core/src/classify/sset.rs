//! The tensor-closure set `S(E)`: closed-form descriptions and bounded enumeration.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::bundle::{BundleSum, IndecomposableBundle};
use crate::context::TorsionContext;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: i64) -> Self {
        if value.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn admits(parity: Option<Self>, value: i64) -> bool {
        parity.is_none_or(|p| p == Self::of(value))
    }

    fn word(parity: Option<Self>) -> &'static str {
        match parity {
            None => "",
            Some(Parity::Even) => " even",
            Some(Parity::Odd) => " odd",
        }
    }
}

/// Which line exponents a family covers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExponentPattern {
    /// Every canonical residue `0 ≤ e < modulus`, optionally of one parity.
    Residues {
        modulus: u64,
        parity: Option<Parity>,
    },
    /// `e = ±i` for `i ≥ from`, optionally of one parity.
    SignedPowers { from: u64, parity: Option<Parity> },
    /// `e = λ·step` for all integers `λ`.
    Multiples { step: u64 },
    /// `e = ±(k_1 g_1 + … + k_s g_s)` with `k_i ≥ 0`.
    SignedSums { generators: Vec<u64> },
}

/// Upper bound on the Atiyah index within a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexBound {
    Unbounded,
    AtMost(u32),
    /// `j ≤ slope·|e| + 1`, tying the index to the power that produced it.
    Linear {
        slope: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexPattern {
    pub parity: Option<Parity>,
    pub bound: IndexBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexFamily {
    pub exponents: ExponentPattern,
    pub indices: IndexPattern,
}

/// What the description was computed for; drives [`SSetDescription::reachable_within`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SSetSource {
    /// `E = L ⊗ F_rank` on the elliptic curve.
    Elliptic { rank: u32 },
    /// `O(d_1) ⊕ … ⊕ O(d_k)` on the projective line, with `L = O(1)`.
    ProjectiveLine { degrees: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SSetDescription {
    pub source: SSetSource,
    pub context: TorsionContext,
    pub finite_part: Vec<IndecomposableBundle>,
    pub families: Vec<IndexFamily>,
}

impl IndexFamily {
    fn new(exponents: ExponentPattern, parity: Option<Parity>, bound: IndexBound) -> Self {
        Self {
            exponents,
            indices: IndexPattern { parity, bound },
        }
    }

    pub fn contains(&self, bundle: IndecomposableBundle) -> bool {
        let e = bundle.exponent();
        let j = i64::from(bundle.index());
        let exponent_ok = match &self.exponents {
            ExponentPattern::Residues { modulus, parity } => {
                (0..*modulus as i64).contains(&e) && Parity::admits(*parity, e)
            }
            ExponentPattern::SignedPowers { from, parity } => {
                e.unsigned_abs() >= *from && Parity::admits(*parity, e)
            }
            ExponentPattern::Multiples { step } => match step {
                0 => e == 0,
                s => e.unsigned_abs().is_multiple_of(*s),
            },
            ExponentPattern::SignedSums { generators } => in_monoid(e.unsigned_abs(), generators),
        };
        let index_ok = Parity::admits(self.indices.parity, j)
            && match self.indices.bound {
                IndexBound::Unbounded => true,
                IndexBound::AtMost(c) => j <= i64::from(c),
                IndexBound::Linear { slope } => j <= i64::from(slope) * e.abs() + 1,
            };
        exponent_ok && index_ok
    }

    fn describe(&self, projective: bool) -> String {
        let (term, exps) = match &self.exponents {
            ExponentPattern::Residues { modulus, parity } => (
                "L^i",
                format!("i in 0..{}{}", modulus, Parity::word(*parity)),
            ),
            ExponentPattern::SignedPowers { from, parity } => {
                ("L^(±i)", format!("i >= {from}{}", Parity::word(*parity)))
            }
            ExponentPattern::Multiples { step } => ("L^i", format!("i = {step}λ, λ in Z")),
            ExponentPattern::SignedSums { generators } => {
                let gens: Vec<String> = generators.iter().map(u64::to_string).collect();
                (
                    "L^(±i)",
                    format!("i in the monoid generated by {{{}}}", gens.join(", ")),
                )
            }
        };
        let term = match (projective, term) {
            (true, "L^i") => "O(i)",
            (true, _) => "O(±i)",
            (false, t) => t,
        };
        if projective {
            return format!("{term} : {exps}");
        }
        let mut idx = vec![format!("j{}", Parity::word(self.indices.parity))];
        match self.indices.bound {
            IndexBound::Unbounded => idx[0] = format!("{} >= 1", idx[0]),
            IndexBound::AtMost(1) => return format!("{term} : {exps}"),
            IndexBound::AtMost(c) => idx.push(format!("j <= {c}")),
            IndexBound::Linear { slope: 1 } => idx.push("j <= i+1".to_string()),
            IndexBound::Linear { slope } => idx.push(format!("j <= {slope}i+1")),
        }
        format!("{term}*F_j : {exps}, {}", idx.join(", "))
    }
}

/// Whether `d` is a non-negative integer combination of `generators`.
fn in_monoid(d: u64, generators: &[u64]) -> bool {
    let gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
    if d == 0 {
        return true;
    }
    let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if g == 0 || !d.is_multiple_of(g) {
        return false;
    }
    let target = (d / g) as usize;
    let gens: Vec<usize> = gens.iter().map(|&x| (x / g) as usize).collect();
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for v in 1..=target {
        reach[v] = gens.iter().any(|&x| x <= v && reach[v - x]);
    }
    reach[target]
}

/// Indices `j` of the components of `F_r^{⊗k}`, `k ≥ 0`.
fn power_components(rank: u32, k: u64, index: u32) -> bool {
    match (rank, k) {
        (_, 0) | (1, _) => index == 1,
        (r, 1) => index == r,
        (r, k) => {
            let top = u64::from(r - 1) * k + 1;
            u64::from(index) <= top && (top - u64::from(index)) % 2 == 0
        }
    }
}

impl SSetDescription {
    pub fn contains(&self, bundle: IndecomposableBundle) -> bool {
        bundle.context() == self.context
            && (self.finite_part.contains(&bundle)
                || self.families.iter().any(|f| f.contains(bundle)))
    }

    /// Whether `bundle` is a component of `E^{⊗m}` for some `|m| ≤ bound`,
    /// read off the closed form of the power decomposition.
    pub fn reachable_within(&self, bundle: IndecomposableBundle, bound: u64) -> bool {
        if bundle.context() != self.context {
            return false;
        }
        let e = bundle.exponent();
        match &self.source {
            SSetSource::Elliptic { rank } => (0..=bound).any(|k| {
                let k_signed = k as i64;
                (self.context.reduce(k_signed) == e || self.context.reduce(-k_signed) == e)
                    && power_components(*rank, k, bundle.index())
            }),
            SSetSource::ProjectiveLine { degrees } => {
                if bundle.index() != 1 {
                    return false;
                }
                let mut sums = BTreeSet::from([0i64]);
                for _ in 0..=bound {
                    if sums.contains(&e) || sums.contains(&-e) {
                        return true;
                    }
                    sums = sums
                        .iter()
                        .flat_map(|s| degrees.iter().map(move |d| s + d))
                        .collect();
                }
                false
            }
        }
    }

    /// Human-readable rendering of the finite part and each family.
    pub fn describe(&self) -> (Vec<String>, Vec<String>) {
        let projective = matches!(self.source, SSetSource::ProjectiveLine { .. });
        let finite = self
            .finite_part
            .iter()
            .map(|b| {
                if projective {
                    format!("O({})", b.exponent())
                } else {
                    b.to_string()
                }
            })
            .collect();
        let families = self
            .families
            .iter()
            .map(|f| f.describe(projective))
            .collect();
        (finite, families)
    }
}

impl fmt::Display for SSetDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (finite, families) = self.describe();
        let parts: Vec<String> = finite.into_iter().chain(families).collect();
        write!(f, "{{ {} }}", parts.join("; "))
    }
}

/// Closed-form `S(L ⊗ F_r)` in the context of order `n`.
pub fn s_set_symbolic(rank: u32, torsion: u64) -> Result<SSetDescription> {
    use ExponentPattern::*;
    use IndexBound::*;

    if rank == 0 {
        return Err(Error::ZeroIndex);
    }
    let ctx = TorsionContext::new(torsion);
    let odd = Some(Parity::Odd);
    let even = Some(Parity::Even);
    let slope = rank - 1;
    let mut finite_part = Vec::new();
    let families = match (rank, torsion) {
        (1, 1) => {
            finite_part.push(IndecomposableBundle::trivial(ctx));
            vec![]
        }
        (1, 0) => {
            finite_part.push(IndecomposableBundle::trivial(ctx));
            vec![IndexFamily::new(
                SignedPowers {
                    from: 1,
                    parity: None,
                },
                None,
                AtMost(1),
            )]
        }
        (1, n) => vec![IndexFamily::new(
            Residues {
                modulus: n,
                parity: None,
            },
            None,
            AtMost(1),
        )],
        (r, 1) => {
            let parity = if r % 2 == 0 { None } else { odd };
            vec![IndexFamily::new(
                Residues {
                    modulus: 1,
                    parity: None,
                },
                parity,
                Unbounded,
            )]
        }
        (r, 0) => {
            finite_part.push(IndecomposableBundle::trivial(ctx));
            finite_part.push(IndecomposableBundle::new(ctx, -1, r)?);
            finite_part.push(IndecomposableBundle::new(ctx, 1, r)?);
            if r % 2 == 1 {
                vec![IndexFamily::new(
                    SignedPowers {
                        from: 2,
                        parity: None,
                    },
                    odd,
                    Linear { slope },
                )]
            } else {
                vec![
                    IndexFamily::new(
                        SignedPowers {
                            from: 2,
                            parity: even,
                        },
                        odd,
                        Linear { slope },
                    ),
                    IndexFamily::new(
                        SignedPowers {
                            from: 3,
                            parity: odd,
                        },
                        even,
                        Linear { slope },
                    ),
                ]
            }
        }
        (r, n) if r % 2 == 1 => {
            vec![IndexFamily::new(
                Residues {
                    modulus: n,
                    parity: None,
                },
                odd,
                Unbounded,
            )]
        }
        (_, n) if n % 2 == 1 => {
            finite_part.push(IndecomposableBundle::trivial(ctx));
            vec![IndexFamily::new(
                Residues {
                    modulus: n,
                    parity: None,
                },
                None,
                Unbounded,
            )]
        }
        (_, n) => vec![
            IndexFamily::new(
                Residues {
                    modulus: n,
                    parity: even,
                },
                odd,
                Unbounded,
            ),
            IndexFamily::new(
                Residues {
                    modulus: n,
                    parity: odd,
                },
                even,
                Unbounded,
            ),
        ],
    };
    Ok(SSetDescription {
        source: SSetSource::Elliptic { rank },
        context: ctx,
        finite_part,
        families,
    })
}

/// Components of `(L ⊗ F_r)^{⊗m}` for all `|m| ≤ bound`, computed by tensor
/// arithmetic. `m = 0` contributes `O_X`.
pub fn s_set_enumerate(
    rank: u32,
    torsion: u64,
    bound: u64,
) -> Result<BTreeSet<IndecomposableBundle>> {
    let ctx = TorsionContext::new(torsion);
    let e: BundleSum = IndecomposableBundle::new(ctx, 1, rank)?.into();
    enumerate_powers(&e, bound)
}

/// Union of the supports of `x^{⊗m}` for `|m| ≤ bound`.
pub fn enumerate_powers(x: &BundleSum, bound: u64) -> Result<BTreeSet<IndecomposableBundle>> {
    if x.is_empty() {
        return Err(Error::EmptyBundle);
    }
    let mut seen = BTreeSet::from([IndecomposableBundle::trivial(x.context())]);
    let mut power = BundleSum::trivial(x.context());
    for _ in 0..bound {
        power = power.tensor(x)?;
        for b in power.support() {
            seen.insert(b);
            seen.insert(b.dual());
        }
    }
    Ok(seen)
}
