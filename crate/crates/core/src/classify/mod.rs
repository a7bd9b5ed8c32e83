//! Case analysis for `E = L ⊗ F_r`: the ring `R(E)`, its Krull dimension and
//! the smallest group scheme over whose torsors `E` becomes trivial.

mod p1;
mod poly;
mod sset;

use std::fmt;

pub use p1::p1_classify;
pub use poly::{express_in_generator, Chain, IntegerPolynomial};
pub use sset::{
    enumerate_powers, s_set_enumerate, s_set_symbolic, ExponentPattern, IndexBound, IndexFamily,
    IndexPattern, Parity, SSetDescription, SSetSource,
};

use crate::{Error, Result};

/// The shapes `R(E)` can take, as tensor products of a polynomial ring,
/// a Laurent ring and a cyclotomic quotient `ℚ[x]/(x^m − 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresentationKind {
    Point,
    Cyclotomic(u64),
    Poly,
    Laurent,
    LaurentPoly,
    CyclotomicPoly(u64),
}

impl PresentationKind {
    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::Point => "point",
            PresentationKind::Cyclotomic(_) => "cyclotomic",
            PresentationKind::Poly => "poly",
            PresentationKind::Laurent => "laurent",
            PresentationKind::LaurentPoly => "laurent_poly",
            PresentationKind::CyclotomicPoly(_) => "cyclotomic_poly",
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            PresentationKind::Cyclotomic(m) | PresentationKind::CyclotomicPoly(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    pub kind: PresentationKind,
    /// K-ring classes playing the roles of `x` and then `y`.
    pub generators: Vec<String>,
}

impl RingPresentation {
    fn new(kind: PresentationKind, generators: &[&str]) -> Self {
        Self {
            kind,
            generators: generators.iter().map(|g| g.to_string()).collect(),
        }
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PresentationKind::Point => write!(f, "Q"),
            PresentationKind::Cyclotomic(m) => write!(f, "Q[x]/(x^{m} - 1)"),
            PresentationKind::Poly => write!(f, "Q[x]"),
            PresentationKind::Laurent => write!(f, "Q[x, x^-1]"),
            PresentationKind::LaurentPoly => write!(f, "Q[x, x^-1] ⊗ Q[y]"),
            PresentationKind::CyclotomicPoly(m) => write!(f, "Q[x]/(x^{m} - 1) ⊗ Q[y]"),
        }
    }
}

pub fn krull_dimension(presentation: &RingPresentation) -> u32 {
    match presentation.kind {
        PresentationKind::Point | PresentationKind::Cyclotomic(_) => 0,
        PresentationKind::Poly
        | PresentationKind::Laurent
        | PresentationKind::CyclotomicPoly(_) => 1,
        PresentationKind::LaurentPoly => 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFactor {
    Trivial,
    Mu(u64),
    Gm,
    Ga,
}

impl GroupFactor {
    pub fn dimension(self) -> u32 {
        match self {
            GroupFactor::Trivial | GroupFactor::Mu(_) => 0,
            GroupFactor::Gm | GroupFactor::Ga => 1,
        }
    }
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFactor::Trivial => write!(f, "trivial"),
            GroupFactor::Mu(m) => write!(f, "mu_{m}"),
            GroupFactor::Gm => write!(f, "Gm"),
            GroupFactor::Ga => write!(f, "Ga"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupScheme {
    pub factors: Vec<GroupFactor>,
}

impl GroupScheme {
    pub fn new(factors: &[GroupFactor]) -> Self {
        Self {
            factors: factors.to_vec(),
        }
    }

    pub fn dimension(&self) -> u32 {
        self.factors.iter().map(|f| f.dimension()).sum()
    }
}

impl fmt::Display for GroupScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", names.join(" x "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ReportInput {
    /// `L ⊗ F_rank` with `L` of order `torsion` (0 = infinite).
    Elliptic { rank: u32, torsion: u64 },
    /// `O(d_1) ⊕ … ⊕ O(d_k)` on `P¹`, degrees normalized up to order and sign.
    ProjectiveLine { degrees: Vec<i64>, gcd: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassificationReport {
    pub input: ReportInput,
    pub s_set: SSetDescription,
    pub presentation: RingPresentation,
    pub krull_dim: u32,
    pub group: GroupScheme,
    pub correspondence_holds: bool,
    pub minimality_note: Option<String>,
    /// Set for cases the classification extends by analogy (a non-torsion
    /// line bundle on its own).
    pub extension: bool,
}

impl ClassificationReport {
    fn assemble(
        input: ReportInput,
        s_set: SSetDescription,
        presentation: RingPresentation,
        group: GroupScheme,
    ) -> Self {
        let krull_dim = krull_dimension(&presentation);
        let correspondence_holds = krull_dim == group.dimension();
        Self {
            input,
            s_set,
            presentation,
            krull_dim,
            group,
            correspondence_holds,
            minimality_note: None,
            extension: false,
        }
    }
}

/// Classifies `E = L ⊗ F_rank` where `L` has order `torsion` (0 = infinite).
pub fn classify(rank: u32, torsion: u64) -> Result<ClassificationReport> {
    use GroupFactor::*;
    use PresentationKind::*;

    if rank == 0 {
        return Err(Error::ZeroIndex);
    }
    let s_set = s_set_symbolic(rank, torsion)?;
    let even_rank = rank.is_multiple_of(2);
    let f_gen = if even_rank { "[F_2]" } else { "[F_3]" };
    let n = torsion;

    let (presentation, group) = match (rank, n) {
        (1, 1) => (
            RingPresentation::new(Point, &[]),
            GroupScheme::new(&[Trivial]),
        ),
        (1, 0) => (
            RingPresentation::new(Laurent, &["[L]"]),
            GroupScheme::new(&[Gm]),
        ),
        (1, n) => (
            RingPresentation::new(Cyclotomic(n), &["[L]"]),
            GroupScheme::new(&[Mu(n)]),
        ),
        (_, 1) => (
            RingPresentation::new(Poly, &[f_gen]),
            GroupScheme::new(&[Ga]),
        ),
        (_, 0) => {
            let gens: &[&str] = if even_rank {
                &["[L^2]", "[L^-1*F_2]"]
            } else {
                &["[L]", "[F_3]"]
            };
            (
                RingPresentation::new(LaurentPoly, gens),
                GroupScheme::new(&[Gm, Ga]),
            )
        }
        (_, n) if even_rank && n % 2 == 0 => (
            RingPresentation::new(CyclotomicPoly(n / 2), &["[L^2]", "[L*F_2]"]),
            GroupScheme::new(&[Mu(n), Ga]),
        ),
        (_, n) => (
            RingPresentation::new(CyclotomicPoly(n), &["[L]", f_gen]),
            GroupScheme::new(&[Mu(n), Ga]),
        ),
    };

    let mut report = ClassificationReport::assemble(
        ReportInput::Elliptic { rank, torsion },
        s_set,
        presentation,
        group,
    );
    report.extension = rank == 1 && torsion == 0;
    if even_rank && n >= 2 && n.is_multiple_of(2) {
        report.minimality_note = Some(format!(
            "E does not trivialize on any mu_{} x Ga torsor: L has order {n} in Pic(X) \
             and Pic(Q x_X P) = Pic(Q) for a Ga-torsor P, so the mu_{n} factor is minimal \
             although R(E) only has modulus {}",
            n / 2,
            n / 2
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridRow {
    pub rank: u32,
    pub torsion: u64,
    pub krull_dim: u32,
    pub group_dim: u32,
    pub holds: bool,
}

/// Classifies every `(r, n)` in `[1, r_max] × [0, n_max]`, ordered by `r` then `n`.
pub fn correspondence_grid(r_max: u32, n_max: u64) -> Result<Vec<GridRow>> {
    let mut rows = Vec::new();
    for rank in 1..=r_max {
        for torsion in 0..=n_max {
            let report = classify(rank, torsion)?;
            rows.push(GridRow {
                rank,
                torsion,
                krull_dim: report.krull_dim,
                group_dim: report.group.dimension(),
                holds: report.correspondence_holds,
            });
        }
    }
    Ok(rows)
}
