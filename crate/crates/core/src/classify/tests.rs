use super::*;
use crate::ideal::enumerate_ideals;
use crate::ring::{make_idealization, make_product, Module};

fn zn(n: i128) -> Ring {
    Ring::zn(n).unwrap()
}

fn ideal(ring: &Ring, gens: &[&[i128]]) -> Ideal {
    let gens: Vec<Element> = gens.iter().map(|g| ring.element(g).unwrap()).collect();
    Ideal::from_generators(ring, &gens).unwrap()
}

fn b() -> Bound {
    Bound::default()
}

fn witness_of(v: &Verdict) -> String {
    v.witness().expect("expected a failure").to_string()
}

#[test]
fn phi_r_examples() {
    let z12 = zn(12);
    assert_eq!(is_phi_r_ideal(&ideal(&z12, &[&[4]]), &Phi::Empty, b()).unwrap(), Verdict::Holds);
    let z = Ring::z();
    let v = is_phi_r_ideal(&ideal(&z, &[&[6]]), &Phi::Empty, b()).unwrap();
    assert_eq!(witness_of(&v), "[2, 3]");
    let r = make_product(&[Ring::z(), zn(4)]).unwrap();
    let i = ideal(&r, &[&[0, 2]]);
    assert_eq!(is_phi_r_ideal(&i, &Phi::Empty, b()).unwrap(), Verdict::Holds);
}

#[test]
fn r_and_weakly_r() {
    let z = Ring::z();
    assert_eq!(is_r_ideal(&Ideal::zero(&z), b()).unwrap(), Verdict::Holds);
    let four = ideal(&z, &[&[4]]);
    assert_eq!(witness_of(&is_r_ideal(&four, b()).unwrap()), "[2, 2]");
    assert_eq!(witness_of(&is_weakly_r_ideal(&four, b()).unwrap()), "[2, 2]");
}

#[test]
fn pr_examples() {
    let z = Ring::z();
    let v = is_phi_pr_ideal(&ideal(&z, &[&[4]]), &Phi::Empty, b()).unwrap();
    assert_eq!(witness_of(&v), "[4, 1]");
    assert_eq!(is_phi_pr_ideal(&Ideal::zero(&z), &Phi::Empty, b()).unwrap(), Verdict::Holds);
    let z12 = zn(12);
    assert_eq!(is_phi_pr_ideal(&ideal(&z12, &[&[4]]), &Phi::Empty, b()).unwrap(), Verdict::Holds);
}

#[test]
fn pure_and_vnr_examples() {
    assert_eq!(is_phi_pure(&ideal(&zn(6), &[&[3]]), &Phi::Empty).unwrap(), Verdict::Holds);
    let z4 = zn(4);
    let two = ideal(&z4, &[&[2]]);
    assert_eq!(witness_of(&is_phi_pure(&two, &Phi::Empty).unwrap()), "[2]");
    assert_eq!(witness_of(&is_phi_vnr(&two, &Phi::Zero).unwrap()), "[2]");
}

#[test]
fn strongly_examples() {
    assert_eq!(
        is_strongly_phi_r(&ideal(&zn(12), &[&[4]]), &Phi::Empty, b()).unwrap(),
        Verdict::Holds
    );
    let z = Ring::z();
    let ten = Bound::uniform(10);
    let v = is_strongly_phi_r(&ideal(&z, &[&[4]]), &Phi::Empty, ten).unwrap();
    assert_eq!(witness_of(&v), "[<2>, <2>]");
    assert_eq!(
        is_strongly_phi_r(&Ideal::zero(&z), &Phi::Empty, ten).unwrap(),
        Verdict::HoldsUpToBound(10)
    );
}

#[test]
fn prime_examples() {
    let z12 = zn(12);
    assert_eq!(is_prime(&ideal(&z12, &[&[2]]), b()).unwrap(), Verdict::Holds);
    assert_eq!(witness_of(&is_prime(&ideal(&z12, &[&[4]]), b()).unwrap()), "[2, 2]");
    assert_eq!(is_phi_prime(&Ideal::zero(&zn(4)), &Phi::Zero, b()).unwrap(), Verdict::Holds);
}

#[test]
fn idempotent_regular_sac() {
    assert!(is_idempotent(&ideal(&zn(6), &[&[3]])).unwrap());
    assert!(is_regular_ideal(&ideal(&zn(12), &[&[4]])).unwrap().is_fails());
    assert_eq!(satisfies_sac(&zn(12)).unwrap(), Verdict::Holds);
    assert_eq!(is_regular_ideal(&ideal(&Ring::z(), &[&[4]])).unwrap(), Verdict::Holds);
}

#[test]
fn improper_ideals_are_rejected() {
    let z = Ring::z();
    let unit = Ideal::unit(&z);
    assert!(matches!(is_r_ideal(&unit, b()), Err(Error::ImproperIdeal)));
    assert!(matches!(classify(&unit, &[], b()), Err(Error::ImproperIdeal)));
}

#[test]
fn classify_reports() {
    let z12 = zn(12);
    let phis = [Phi::Empty, Phi::Zero, Phi::Power(2)];
    let rep = classify(&ideal(&z12, &[&[4]]), &phis, b()).unwrap();
    for p in &phis {
        assert_eq!(rep.get(&IdealClass::PhiR(p.clone())), Some(&Verdict::Holds));
    }
    assert_eq!(rep.get(&IdealClass::RIdeal), Some(&Verdict::Holds));
    let z = Ring::z();
    let rep = classify(&ideal(&z, &[&[4]]), &[Phi::Empty], b()).unwrap();
    assert!(rep.get(&IdealClass::RIdeal).unwrap().is_fails());
    let r = make_product(&[Ring::z(), zn(4)]).unwrap();
    let rep = classify(&ideal(&r, &[&[0, 2]]), &[Phi::Empty], b()).unwrap();
    assert_eq!(rep.get(&IdealClass::RIdeal), Some(&Verdict::Holds));
}

#[test]
fn product_witness_is_componentwise() {
    let r = make_product(&[Ring::z(), zn(2)]).unwrap();
    let i = ideal(&r, &[&[4, 1]]);
    let phi = Phi::power_product(2, 2);
    let v = is_phi_r_ideal(&i, &phi, b()).unwrap();
    let w = v.witness().unwrap();
    assert!(revalidate(&IdealClass::PhiR(phi), &i, w).unwrap());
}

fn sample_rings() -> Vec<Ring> {
    let mut out: Vec<Ring> = (2..=12).map(zn).collect();
    out.push(make_product(&[zn(2), zn(2)]).unwrap());
    out.push(make_product(&[zn(2), zn(4)]).unwrap());
    out.push(make_product(&[zn(3), zn(4)]).unwrap());
    out.push(make_idealization(&zn(2), Module::Regular).unwrap());
    out.push(make_idealization(&zn(4), Module::Regular).unwrap());
    out.push(make_idealization(&zn(3), Module::Regular).unwrap());
    out
}

fn sample_phis() -> Vec<Phi> {
    vec![Phi::Empty, Phi::Zero, Phi::Identity, Phi::Power(2), Phi::Power(3), Phi::Omega]
}

#[test]
fn engine_matches_brute_force_on_finite_rings() {
    for ring in sample_rings() {
        let all = enumerate_ideals(&ring, None).unwrap();
        for i in all.proper() {
            for phi in sample_phis() {
                let classes = [
                    IdealClass::PhiR(phi.clone()),
                    IdealClass::PhiPr(phi.clone()),
                    IdealClass::PhiPure(phi.clone()),
                    IdealClass::PhiVnr(phi.clone()),
                    IdealClass::PhiPrime(phi.clone()),
                    IdealClass::StronglyPhiR(phi.clone()),
                ];
                for class in classes {
                    let fast = check(&class, i, b()).unwrap();
                    let slow = brute::check(&class, i, 0).unwrap().unwrap();
                    assert_eq!(fast.status(), slow.status(), "{class} on {i} in {ring}");
                    if let Some(w) = fast.witness() {
                        assert!(revalidate(&class, i, w).unwrap(), "{class} on {i} in {ring}: {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn engine_matches_brute_force_on_integers() {
    let z = Ring::z();
    let zz2 = make_product(&[Ring::z(), zn(2)]).unwrap();
    let mut cases: Vec<Ideal> = (0..=24).map(|d| ideal(&z, &[&[d]])).collect();
    for d in [0, 2, 3, 4, 6, 8] {
        cases.push(ideal(&zz2, &[&[d, 0]]));
        cases.push(ideal(&zz2, &[&[d, 1]]));
    }
    for i in cases.iter().filter(|i| i.is_proper()) {
        for phi in sample_phis() {
            let phi = if i.ring().arity() == 2 { Phi::Product(vec![phi.clone(), phi]) } else { phi };
            for class in [
                IdealClass::PhiR(phi.clone()),
                IdealClass::PhiPr(phi.clone()),
                IdealClass::PhiPrime(phi.clone()),
                IdealClass::PhiPure(phi.clone()),
                IdealClass::PhiVnr(phi.clone()),
            ] {
                let fast = check(&class, i, b()).unwrap();
                let slow = brute::check(&class, i, 60).unwrap().unwrap();
                assert_eq!(fast.is_fails(), slow.is_fails(), "{class} on {i}");
                if let Some(w) = fast.witness() {
                    assert!(revalidate(&class, i, w).unwrap(), "{class} on {i}: {w}");
                }
            }
        }
    }
}

#[test]
fn sac_matches_element_search() {
    for ring in sample_rings() {
        let elems = ring.elements().unwrap();
        let ann = |set: &[Element]| -> Vec<Element> {
            elems
                .iter()
                .filter(|r| set.iter().all(|x| ring.is_zero(&ring.mul(r, x))))
                .cloned()
                .collect()
        };
        let mut expected = true;
        for j in enumerate_ideals(&ring, None).unwrap().ideals {
            let members = j.elements().unwrap();
            let target = ann(&members);
            if !members.iter().any(|b| ann(std::slice::from_ref(b)) == target) {
                expected = false;
            }
        }
        let v = satisfies_sac(&ring).unwrap();
        assert_eq!(v.passes(), expected, "{ring}");
        if let Some(w) = v.witness() {
            assert!(revalidate(&IdealClass::Sac, &Ideal::zero(&ring), w).unwrap());
        }
    }
}

#[test]
fn class_names_round_trip() {
    for c in report_classes(&[Phi::Zero]) {
        let back = IdealClass::from_name(c.name(), c.phi().cloned()).unwrap();
        assert_eq!(back, c);
    }
    assert!(IdealClass::from_name("phi-r", None).is_err());
}
