use atiyah_kring::classify::{
    classify, correspondence_grid, express_in_generator, krull_dimension, p1_classify, Chain,
    PresentationKind,
};
use atiyah_kring::oracle::{character, decompose_character, oracle_check};
use atiyah_kring::{BundleSum, IndecomposableBundle, KRingElement, TorsionContext};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

fn arb_context() -> impl Strategy<Value = TorsionContext> {
    prop::sample::select(vec![0u64, 1, 2, 3, 4, 6]).prop_map(TorsionContext::new)
}

fn arb_sum_in(ctx: TorsionContext) -> impl Strategy<Value = BundleSum> {
    prop::collection::vec((-3i64..=3, 1u32..=5, 1u32..=3), 1..=3).prop_map(move |terms| {
        BundleSum::from_terms(
            ctx,
            terms.into_iter().map(|(e, r, m)| {
                (
                    IndecomposableBundle::new(ctx, e, r).unwrap(),
                    BigUint::from(m),
                )
            }),
        )
        .unwrap()
    })
}

fn arb_pair() -> impl Strategy<Value = (BundleSum, BundleSum)> {
    arb_context().prop_flat_map(|ctx| (arb_sum_in(ctx), arb_sum_in(ctx)))
}

fn arb_triple() -> impl Strategy<Value = (BundleSum, BundleSum, BundleSum)> {
    arb_context().prop_flat_map(|ctx| (arb_sum_in(ctx), arb_sum_in(ctx), arb_sum_in(ctx)))
}

fn reduce_big(ctx: TorsionContext, v: BigInt) -> BigInt {
    match ctx.order() {
        0 => v,
        n => {
            let n = BigInt::from(n);
            ((v % &n) + &n) % n
        }
    }
}

proptest! {
    #[test]
    fn rank_is_multiplicative((x, y) in arb_pair()) {
        prop_assert_eq!(x.tensor(&y).unwrap().rank(), x.rank() * y.rank());
    }

    #[test]
    fn det_is_additive((x, y) in arb_pair()) {
        let ctx = x.context();
        let want = reduce_big(
            ctx,
            BigInt::from(y.rank()) * x.det_exponent() + BigInt::from(x.rank()) * y.det_exponent(),
        );
        prop_assert_eq!(x.tensor(&y).unwrap().det_exponent(), want);
    }

    #[test]
    fn tensor_commutes_and_associates((x, y, z) in arb_triple()) {
        prop_assert_eq!(x.tensor(&y).unwrap(), y.tensor(&x).unwrap());
        prop_assert_eq!(
            x.tensor(&y).unwrap().tensor(&z).unwrap(),
            x.tensor(&y.tensor(&z).unwrap()).unwrap()
        );
    }

    #[test]
    fn tensor_distributes_over_sum((x, y, z) in arb_triple()) {
        prop_assert_eq!(
            x.tensor(&y.direct_sum(&z).unwrap()).unwrap(),
            x.tensor(&y).unwrap().direct_sum(&x.tensor(&z).unwrap()).unwrap()
        );
    }

    #[test]
    fn dual_is_an_involution_fixing_atiyah_bundles(
        ctx in arb_context(), e in -5i64..=5, r in 1u32..=12
    ) {
        let b = IndecomposableBundle::new(ctx, e, r).unwrap();
        prop_assert_eq!(b.dual().dual(), b);
        let f = IndecomposableBundle::atiyah(ctx, r).unwrap();
        prop_assert_eq!(f.dual(), f);
    }

    #[test]
    fn dual_is_multiplicative((x, y) in arb_pair()) {
        prop_assert_eq!(x.tensor(&y).unwrap().dual(), x.dual().tensor(&y.dual()).unwrap());
    }

    #[test]
    fn character_is_multiplicative((x, y) in arb_pair()) {
        prop_assert_eq!(
            character(&x.tensor(&y).unwrap()),
            character(&x).mul(&character(&y)).unwrap()
        );
    }

    #[test]
    fn character_round_trips((x, _) in arb_pair()) {
        let c = character(&x);
        prop_assert!(c.is_weight_symmetric());
        prop_assert_eq!(c.rank(), BigInt::from(x.rank()));
        prop_assert_eq!(decompose_character(&c).unwrap(), x);
    }

    #[test]
    fn k_ring_axioms((x, y, z) in arb_triple()) {
        let (a, b, c) = (KRingElement::from(&x), KRingElement::from(&y), KRingElement::from(&z));
        let b = &b - &KRingElement::from(&z.dual());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &KRingElement::one(a.context()), a.clone());
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn p1_report_ignores_order_and_sign(
        mut degrees in prop::collection::vec(-6i64..=6, 1..=3),
        flip in any::<bool>()
    ) {
        let base = p1_classify(&degrees).unwrap();
        degrees.reverse();
        if flip {
            degrees.iter_mut().for_each(|d| *d = -*d);
        }
        prop_assert_eq!(p1_classify(&degrees).unwrap(), base);
    }
}

#[test]
fn power_parity_and_top_component() {
    for r in 1..=5u32 {
        let fr: BundleSum = IndecomposableBundle::atiyah(TorsionContext::NON_TORSION, r)
            .unwrap()
            .into();
        for m in 1..=8u32 {
            let p = fr.tensor_power(i64::from(m)).unwrap();
            let top = (r - 1) * m + 1;
            for b in p.support() {
                assert_eq!(b.index() % 2, top % 2, "F_{r}^{m} contains {b}");
                assert!(b.index() <= top);
            }
            let top_bundle =
                IndecomposableBundle::atiyah(TorsionContext::NON_TORSION, top).unwrap();
            assert!(p.multiplicity(&top_bundle).is_one(), "F_{r}^{m}");
        }
    }
}

#[test]
fn f4_power_table_has_expected_shape() {
    let ctx = TorsionContext::NON_TORSION;
    let f4: BundleSum = IndecomposableBundle::atiyah(ctx, 4).unwrap().into();
    for n in 1..=6i64 {
        let via_rule = f4.tensor_power(n).unwrap();
        let via_oracle = decompose_character(
            &character(&f4)
                .mul(&character(&f4.tensor_power(n - 1).unwrap()))
                .unwrap(),
        )
        .unwrap();
        assert_eq!(via_rule, via_oracle, "F_4^{n}");
        let top = 3 * n as u32 + 1;
        assert!(via_rule.support().all(|b| b.index() % 2 == top % 2));
        if n >= 2 && n % 2 == 0 {
            // odd indices only, starting from O_X
            assert!(
                via_rule.multiplicity(&IndecomposableBundle::trivial(ctx)) > BigUint::from(0u32)
            );
        }
    }
}

#[test]
fn oracle_agrees_on_twisted_pairs() {
    for n in [0u64, 1, 2, 5] {
        let ctx = TorsionContext::new(n);
        for r in 1..=12 {
            for s in 1..=r {
                let a = IndecomposableBundle::new(ctx, 2, r).unwrap();
                let b = IndecomposableBundle::new(ctx, -3, s).unwrap();
                assert!(oracle_check(a, b).unwrap().agrees);
            }
        }
    }
}

#[test]
fn generator_polynomials_reproduce_basis() {
    let ctx = TorsionContext::NON_TORSION;
    for (chain, indices) in [
        (Chain::Even, (1..=12).collect::<Vec<u32>>()),
        (Chain::Odd, (1..=13).step_by(2).collect()),
    ] {
        let x = chain.generator_element(ctx);
        for i in indices {
            let p = express_in_generator(i, chain).unwrap();
            let want: KRingElement = IndecomposableBundle::atiyah(ctx, i).unwrap().into();
            assert_eq!(p.evaluate(&x), want, "{chain:?} chain, i = {i}");
        }
    }
}

#[test]
fn dimension_correspondence_everywhere() {
    let rows = correspondence_grid(10, 12).unwrap();
    assert_eq!(rows.len(), 130);
    for row in &rows {
        assert!(row.holds, "{row:?}");
        let report = classify(row.rank, row.torsion).unwrap();
        assert_eq!(
            krull_dimension(&report.presentation),
            report.group.dimension()
        );
    }
}

#[test]
fn both_even_minimality_encoding() {
    for r in (2..=10).step_by(2) {
        for n in (2..=12).step_by(2) {
            let report = classify(r, n).unwrap();
            assert_eq!(
                report.presentation.kind,
                PresentationKind::CyclotomicPoly(n / 2)
            );
            assert_eq!(report.group.to_string(), format!("mu_{n} x Ga"));
            assert!(report
                .minimality_note
                .as_deref()
                .is_some_and(|s| !s.is_empty()));
            assert_eq!(report.krull_dim, report.group.dimension());
        }
    }
}
