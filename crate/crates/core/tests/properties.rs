use num_integer::Integer;
use proptest::prelude::*;

use phir::classify::{brute, check, revalidate, IdealClass};
use phir::cli::{parse_ring, parse_ring_expr};
use phir::phi::{order_chain, Phi};
use phir::ring::make_product;
use phir::{Bound, Ideal, Ring};

/// A ring from {Z, Z_n, Z x Z_n, Z_a x Z_b} and a proper principal ideal.
fn ring_and_ideal() -> impl Strategy<Value = (Ring, Ideal)> {
    prop_oneof![
        (0i128..40).prop_map(|d| vec![d]).prop_map(|g| (Ring::z(), g)),
        (2i128..40, 0i128..40).prop_map(|(n, d)| (Ring::zn(n).unwrap(), vec![d % n])),
        (2i128..6, 0i128..16, 0i128..6).prop_map(|(n, d, e)| {
            (make_product(&[Ring::z(), Ring::zn(n).unwrap()]).unwrap(), vec![d, e % n])
        }),
        (2i128..10, 2i128..10, 0i128..10, 0i128..10).prop_map(|(a, b, d, e)| {
            let r = make_product(&[Ring::zn(a).unwrap(), Ring::zn(b).unwrap()]).unwrap();
            (r, vec![d % a, e % b])
        }),
    ]
    .prop_map(|(ring, gen)| {
        let i = Ideal::from_generators(&ring, &[ring.element(&gen).unwrap()]).unwrap();
        (ring, i)
    })
    .prop_filter("proper", |(_, i)| i.is_proper())
}

fn base_phi() -> impl Strategy<Value = Phi> {
    prop_oneof![
        Just(Phi::Empty),
        Just(Phi::Zero),
        Just(Phi::Identity),
        (2u32..5).prop_map(Phi::Power),
        Just(Phi::Omega),
    ]
}

fn fit(phi: Phi, ring: &Ring) -> Phi {
    if ring.arity() == 1 {
        phi
    } else {
        Phi::Product(vec![phi; ring.arity()])
    }
}

fn passes(class: IdealClass, i: &Ideal) -> bool {
    check(&class, i, Bound::default()).unwrap().passes()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn r_implies_every_phi_r((_, i) in ring_and_ideal(), phi in base_phi()) {
        let phi = fit(phi, i.ring());
        if passes(IdealClass::RIdeal, &i) {
            prop_assert!(passes(IdealClass::PhiR(phi), &i));
        }
    }

    #[test]
    fn weakly_r_matches_r((_, i) in ring_and_ideal()) {
        let r = check(&IdealClass::RIdeal, &i, Bound::default()).unwrap();
        let w = check(&IdealClass::WeaklyR, &i, Bound::default()).unwrap();
        prop_assert_eq!(r.status(), w.status());
    }

    #[test]
    fn phi_r_implies_phi_pr((_, i) in ring_and_ideal(), phi in base_phi()) {
        let phi = fit(phi, i.ring());
        if passes(IdealClass::PhiR(phi.clone()), &i) {
            prop_assert!(passes(IdealClass::PhiPr(phi), &i));
        }
    }

    #[test]
    fn larger_maps_give_weaker_conditions((_, i) in ring_and_ideal(), lo in 0usize..6, span in 1usize..6) {
        let chain = order_chain(4);
        let hi = (lo + span).min(chain.len() - 1);
        prop_assume!(hi > lo);
        let (a, b) = (fit(chain[lo].clone(), i.ring()), fit(chain[hi].clone(), i.ring()));
        if passes(IdealClass::PhiR(a), &i) {
            prop_assert!(passes(IdealClass::PhiR(b), &i));
        }
    }

    #[test]
    fn witnesses_replay((_, i) in ring_and_ideal(), phi in base_phi(), kind in 0usize..5) {
        let phi = fit(phi, i.ring());
        let class = match kind {
            0 => IdealClass::PhiR(phi),
            1 => IdealClass::PhiPr(phi),
            2 => IdealClass::PhiPure(phi),
            3 => IdealClass::PhiVnr(phi),
            _ => IdealClass::PhiPrime(phi),
        };
        if let Some(w) = check(&class, &i, Bound::default()).unwrap().witness() {
            prop_assert!(revalidate(&class, &i, w).unwrap());
        }
    }

    #[test]
    fn fast_path_matches_search_on_finite_rings(n in 2i128..30, d in 0i128..30, phi in base_phi()) {
        let ring = Ring::zn(n).unwrap();
        let i = Ideal::from_ints(&ring, &[d % n]).unwrap();
        prop_assume!(i.is_proper());
        for class in [IdealClass::PhiR(phi.clone()), IdealClass::PhiPr(phi.clone()), IdealClass::PhiPure(phi)] {
            let fast = check(&class, &i, Bound::default()).unwrap();
            let slow = brute::check(&class, &i, 0).unwrap().unwrap();
            prop_assert_eq!(fast.status(), slow.status());
        }
    }

    #[test]
    fn radical_and_colon_laws((ring, i) in ring_and_ideal(), x in 0i128..12) {
        let root = i.radical().unwrap();
        prop_assert!(i.is_subset(&root).unwrap());
        prop_assert_eq!(root.radical().unwrap(), root);
        let x = ring.from_int(x);
        let col = i.colon_element(&x).unwrap();
        prop_assert!(i.is_subset(&col).unwrap());
        for g in col.generators() {
            prop_assert!(i.has(&ring.mul(&x, &g)));
        }
    }

    #[test]
    fn ring_expressions_round_trip(terms in prop::collection::vec(ring_term(), 1..4)) {
        let src = terms.join(" x ");
        let expr = parse_ring_expr(&src).unwrap();
        prop_assert_eq!(parse_ring_expr(&expr.to_string()).unwrap(), expr);
        let canon = parse_ring(&src).unwrap();
        prop_assert_eq!(parse_ring(&canon.to_string()).unwrap(), canon);
    }
}

fn ring_term() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("Z".to_string()),
        (2u32..40).prop_map(|n| format!("Z/{n}")),
        (2u32..30, 0u32..30).prop_map(|(n, d)| {
            // a generator sharing a factor with n, so the quotient is nonzero
            let d = d % n;
            let d = if d.gcd(&n) == 1 { 0 } else { d };
            format!("quot(Z/{n}, gen {d})")
        }),
        (2u32..7).prop_map(|n| format!("idealize(Z/{n})")),
        prop::collection::vec(prop_oneof![Just(2u32), Just(3), Just(5), Just(7)], 1..3)
            .prop_map(|s| format!("loc(Z, {{{}}})", s.iter().map(u32::to_string).collect::<Vec<_>>().join(","))),
    ]
}
