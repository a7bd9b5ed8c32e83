//! Split bundles `O(d_1) ⊕ … ⊕ O(d_k)` on the projective line.
//!
//! `O(d)` is modelled as `L^d` with `L = O(1)` of infinite order, so the
//! elliptic machinery (tensor arithmetic, S-set descriptions) applies as is.

use num_integer::Integer;

use super::sset::{
    ExponentPattern, IndexBound, IndexFamily, IndexPattern, SSetDescription, SSetSource,
};
use super::{
    ClassificationReport, GroupFactor, GroupScheme, PresentationKind, ReportInput, RingPresentation,
};
use crate::context::TorsionContext;
use crate::{Error, IndecomposableBundle, Result};

fn normalize(degrees: &[i64]) -> Vec<i64> {
    let mut pos: Vec<i64> = degrees.to_vec();
    pos.sort_unstable();
    let mut neg: Vec<i64> = degrees.iter().map(|d| -d).collect();
    neg.sort_unstable();
    pos.max(neg)
}

pub fn p1_classify(degrees: &[i64]) -> Result<ClassificationReport> {
    if degrees.is_empty() {
        return Err(Error::EmptyDegrees);
    }
    let degrees = normalize(degrees);
    let gcd = degrees
        .iter()
        .fold(0u64, |acc, d| acc.gcd(&d.unsigned_abs()));
    let ctx = TorsionContext::NON_TORSION;
    let line_only = IndexPattern {
        parity: None,
        bound: IndexBound::AtMost(1),
    };

    let mixed = degrees.iter().any(|&d| d > 0) && degrees.iter().any(|&d| d < 0);
    let (finite_part, families) = if gcd == 0 {
        (vec![IndecomposableBundle::trivial(ctx)], vec![])
    } else if mixed {
        let family = IndexFamily {
            exponents: ExponentPattern::Multiples { step: gcd },
            indices: line_only,
        };
        (vec![], vec![family])
    } else {
        let mut generators: Vec<u64> = degrees
            .iter()
            .filter(|&&d| d != 0)
            .map(|d| d.unsigned_abs())
            .collect();
        generators.dedup();
        let family = IndexFamily {
            exponents: ExponentPattern::SignedSums { generators },
            indices: line_only,
        };
        (vec![], vec![family])
    };

    let s_set = SSetDescription {
        source: SSetSource::ProjectiveLine {
            degrees: degrees.clone(),
        },
        context: ctx,
        finite_part,
        families,
    };
    let (presentation, group) = if gcd == 0 {
        (
            RingPresentation::new(PresentationKind::Point, &[]),
            GroupScheme::new(&[GroupFactor::Trivial]),
        )
    } else {
        (
            RingPresentation::new(PresentationKind::Laurent, &[&format!("[O({gcd})]")]),
            GroupScheme::new(&[GroupFactor::Gm]),
        )
    };
    Ok(ClassificationReport::assemble(
        ReportInput::ProjectiveLine { degrees, gcd },
        s_set,
        presentation,
        group,
    ))
}
