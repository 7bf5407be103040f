//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};

use phir::classify::{brute, check, is_r_ideal, is_weakly_r_ideal, IdealClass};
use phir::cli::{parse_ring, parse_ring_expr, report};
use phir::ideal::enumerate_ideals;
use phir::phi::Phi;
use phir::ring::{make_idealization, make_product, Module};
use phir::verify::{verify, CorpusSpec, Params, TheoremId};
use phir::{Bound, Ideal, Ring, Verdict};

type Outcome = Result<String, String>;

fn zn(n: i128) -> Ring {
    Ring::zn(n).unwrap()
}

/// All Z_n for n in 2..=60 and Z_a x Z_b with ab <= 100.
fn finite_corpus() -> Vec<Ring> {
    let mut out: Vec<Ring> = (2..=60).map(zn).collect();
    for a in 2..=50 {
        for b in 2..=50 {
            if a * b <= 100 {
                out.push(make_product(&[zn(a), zn(b)]).unwrap());
            }
        }
    }
    out
}

fn proper_ideals(ring: &Ring) -> Vec<Ideal> {
    enumerate_ideals(ring, None).unwrap().proper().cloned().collect()
}

fn c1_finite_rings_are_r() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for ring in finite_corpus() {
        for i in proper_ideals(&ring) {
            count += 1;
            let v = is_r_ideal(&i, Bound::default()).map_err(|e| e.to_string())?;
            if v != Verdict::Holds {
                return Err(format!("{i} in {ring}: {v}"));
            }
        }
    }
    let took = start.elapsed();
    if took > Duration::from_secs(60) {
        return Err(format!("took {took:.1?}"));
    }
    Ok(format!("{count} proper ideals in {took:.1?}"))
}

fn c2_weakly_r_equals_r() -> Outcome {
    let mut ideals: Vec<Ideal> = finite_corpus().iter().flat_map(proper_ideals).collect();
    let z = Ring::z();
    ideals.extend((0..=50).filter(|&d| d != 1).map(|d| Ideal::from_ints(&z, &[d]).unwrap()));
    for i in &ideals {
        let r = is_r_ideal(i, Bound::default()).map_err(|e| e.to_string())?;
        let w = is_weakly_r_ideal(i, Bound::default()).map_err(|e| e.to_string())?;
        if r.status() != w.status() {
            return Err(format!("{i} in {}: r {r}, weakly-r {w}", i.ring()));
        }
    }
    Ok(format!("{} instances", ideals.len()))
}

fn theorem_on(id: TheoremId, rings: &[Ring], params: &Params) -> Result<(u64, u64, Verdict), String> {
    let (mut inst, mut sat, mut verdict) = (0, 0, Verdict::Holds);
    for ring in rings {
        let rep = verify(id, ring, params, Bound::default()).map_err(|e| e.to_string())?;
        if rep.violations > 0 {
            let c = &rep.witnesses[0];
            return Err(format!("{id} on {ring}: {} {}", c.description, c.witness));
        }
        inst += rep.instances;
        sat += rep.hypotheses_satisfied;
        verdict = verdict.and(rep.conclusion);
    }
    Ok((inst, sat, verdict))
}

fn c3_implication_chain() -> Outcome {
    let rings = finite_corpus();
    let chain = Params {
        n: Some(3),
        ..Params::default()
    };
    let (n2, _, v2) = theorem_on(TheoremId::Basic2, &rings, &chain)?;
    let (n3, _, v3) = theorem_on(TheoremId::Basic3, &rings, &Params::default())?;
    if v2 != Verdict::Holds || v3 != Verdict::Holds {
        return Err(format!("chain {v2}, omega biconditional {v3}"));
    }
    Ok(format!("{n2} chain instances, {n3} exact omega instances"))
}

fn c4_characterization() -> Outcome {
    let rings = finite_corpus();
    let mut total = 0;
    for phi in [Phi::Zero, Phi::Power(2)] {
        let params = Params {
            phi: Some(phi),
            ..Params::default()
        };
        let (n, _, v) = theorem_on(TheoremId::Cha, &rings, &params)?;
        if v != Verdict::Holds {
            return Err(v.to_string());
        }
        total += n;
    }
    Ok(format!("{total} (ideal, regular x, phi) triples"))
}

fn c5_radical() -> Outcome {
    let params = Params {
        phi: Some(Phi::Zero),
        ..Params::default()
    };
    let (n, sat, _) = theorem_on(TheoremId::Rad, &finite_corpus(), &params)?;
    Ok(format!("{sat} of {n} instances satisfy the hypothesis, 0 violations"))
}

fn c6_idealization() -> Outcome {
    let rings: Vec<Ring> = (2..=12).map(|n| make_idealization(&zn(n), Module::Regular).unwrap()).collect();
    let mut total = 0;
    let mut satisfied = 0;
    for psi in [Phi::Empty, Phi::Zero] {
        let params = Params {
            phi: Some(psi),
            ..Params::default()
        };
        let (n, s, _) = theorem_on(TheoremId::Ide, &rings, &params)?;
        total += n;
        satisfied += s;
    }
    for ring in &rings {
        let data = ring.idealization().unwrap();
        let zm = data.module_zerodivisors();
        let base = data.base();
        let brute = brute::zerodivisors(ring).map_err(|e| e.to_string())?;
        let all = ring.elements().map_err(|e| e.to_string())?;
        for a in &all {
            let (r, _) = data.components(a);
            let k = data.base_elements().iter().position(|e| *e == r).unwrap();
            let formula = !base.is_regular(&r) || zm[k];
            if formula != brute.contains(a) {
                return Err(format!("zerodivisor formula disagrees at {} in {ring}", ring.format_element(a)));
            }
        }
        let counted = data.formula_zerodivisors().iter().filter(|z| **z).count();
        if counted != brute.len() {
            return Err(format!("{ring}: formula counts {counted}, search finds {}", brute.len()));
        }
    }
    Ok(format!("{satisfied} of {total} instances satisfy the hypothesis; zerodivisor formula exact on {} rings", rings.len()))
}

fn c7a_finite_products() -> Outcome {
    let rings: Vec<Ring> = "prod(zn:2..12, zn:2..12):size<=100; prod(zn:2..4, zn:2..4, zn:2..4)"
        .parse::<CorpusSpec>()
        .unwrap()
        .rings()
        .unwrap();
    let mut total = 0;
    for n in [2, 3] {
        let params = Params {
            n: Some(n),
            ..Params::default()
        };
        let (_, sat, v) = theorem_on(TheoremId::ProductTqr, &rings, &params)?;
        if v != Verdict::Holds {
            return Err(format!("n = {n}: {v}"));
        }
        total += sat;
    }
    Ok(format!("{total} proper ideals over {} products", rings.len()))
}

fn c7b_integer_product() -> Outcome {
    let start = Instant::now();
    let ring = make_product(&[Ring::z(), zn(2)]).unwrap();
    let params = Params {
        n: Some(2),
        ..Params::default()
    };
    let rep = verify(TheoremId::ProductTqr, &ring, &params, Bound::default()).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let w = rep.conclusion.witness().ok_or("no witness")?;
    let expected = Ideal::from_generators(&ring, &[ring.element(&[4, 1]).unwrap()]).unwrap();
    let x = ring.element(&[2, 1]).unwrap();
    if w.ideal(0) != Some(&expected) || w.element(1) != Some(&x) || w.element(2) != Some(&x) {
        return Err(format!("unexpected witness {w}"));
    }
    // independent replay: x regular, xy in I minus phi(I), y not in I
    let phi = Phi::power_product(2, 2);
    let image = phi.apply(&expected).map_err(|e| e.to_string())?;
    let xy = ring.mul(&x, &x);
    if !ring.is_regular(&x) || !expected.has(&xy) || image.has(&xy) || expected.has(&x) {
        return Err("witness does not replay".into());
    }
    if took > Duration::from_secs(5) {
        return Err(format!("took {took:.1?}"));
    }
    Ok(format!("{w} in {took:.1?}"))
}

fn random_phi(rng: &mut StdRng) -> Phi {
    match rng.gen_range(0..6) {
        0 => Phi::Empty,
        1 => Phi::Zero,
        2 => Phi::Identity,
        3 => Phi::Power(2),
        4 => Phi::Power(3),
        _ => Phi::Omega,
    }
}

fn c8_oracle_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut disagreements = Vec::new();
    let mut done = 0;
    while done < 200 {
        let (ring, gen): (Ring, Vec<i128>) = match rng.gen_range(0..3) {
            0 => (Ring::z(), vec![rng.gen_range(0..=40)]),
            1 => {
                let n = rng.gen_range(2..=60);
                (zn(n), vec![rng.gen_range(0..n)])
            }
            _ => {
                let n = rng.gen_range(2..=4);
                (make_product(&[Ring::z(), zn(n)]).unwrap(), vec![rng.gen_range(0..=12), rng.gen_range(0..n)])
            }
        };
        let i = Ideal::from_generators(&ring, &[ring.element(&gen).unwrap()]).unwrap();
        if !i.is_proper() {
            continue;
        }
        let phi = random_phi(&mut rng);
        let phi = if ring.arity() == 2 { Phi::Product(vec![phi.clone(), phi]) } else { phi };
        let class = if rng.gen_bool(0.5) { IdealClass::PhiR(phi) } else { IdealClass::PhiPr(phi) };
        let fast = check(&class, &i, Bound::default()).map_err(|e| e.to_string())?;
        let slow = brute::check(&class, &i, 1000).map_err(|e| e.to_string())?.unwrap();
        if fast.is_fails() != slow.is_fails() {
            disagreements.push(format!("{class} on {i} in {ring}: {fast} vs {slow}"));
        }
        done += 1;
    }
    match disagreements.first() {
        None => Ok("200 triples, 0 disagreements".into()),
        Some(d) => Err(format!("{} disagreements, first {d}", disagreements.len())),
    }
}

fn c9_localization() -> Outcome {
    let bound = Bound {
        elements: 1000,
        ideals: 30,
    };
    let mut satisfied = 0;
    for p in [2, 3, 5] {
        let params = Params {
            phi: Some(Phi::Zero),
            n: None,
            denominators: vec![p],
        };
        let rep = verify(TheoremId::Loc1, &Ring::z(), &params, bound).map_err(|e| e.to_string())?;
        if rep.violations > 0 {
            return Err(format!("S = {{{p}}}: {}", rep.witnesses[0].description));
        }
        satisfied += rep.hypotheses_satisfied;
    }
    Ok(format!("{satisfied} hypothesis-satisfying instances, 0 violations"))
}

const FIXTURES: [&str; 50] = [
    "Z",
    "Z/2",
    "Z/12",
    "Z/60",
    "Z x Z",
    "Z x Z/2",
    "Z x Z/4",
    "Z/2 x Z/2",
    "Z/3 x Z/4",
    "Z/4 x Z/9",
    "Z/2 x Z/3 x Z/5",
    "Z x Z/2 x Z/3",
    "Z x Z x Z/6",
    "Z/8 x Z",
    "quot(Z, gen 12)",
    "quot(Z, gen 4, 6)",
    "quot(Z/12, gen 8)",
    "quot(Z/12, gen)",
    "quot(Z x Z, gen (2,0), (0,3))",
    "quot(Z x Z/4, gen (6,2))",
    "quot(Z/4 x Z/6, gen (2,3))",
    "quot(Z, gen 0)",
    "quot(quot(Z, gen 24), gen 6)",
    "idealize(Z/2)",
    "idealize(Z/3)",
    "idealize(Z/4)",
    "idealize(Z/6)",
    "idealize(Z/12)",
    "idealize(Z/4, mod gen 2)",
    "idealize(Z/6, mod gen 3)",
    "idealize(Z/2 x Z/2)",
    "idealize(Z/8, mod gen 4)",
    "idealize(quot(Z, gen 9))",
    "idealize(Z/2) x Z/3",
    "Z x idealize(Z/2)",
    "loc(Z, {2})",
    "loc(Z, {6})",
    "loc(Z, {2, 3, 5})",
    "loc(Z, {10})",
    "loc(Z/12, {5})",
    "loc(Z/12, {7, 11})",
    "loc(Z x Z/4, {3})",
    "loc(Z x Z/5, {2})",
    "loc(Z x Z, {7})",
    "loc(Z, {4}) x Z/3",
    "Z/5 x loc(Z, {3})",
    "quot(loc(Z, {2}), gen 9)",
    "loc(quot(Z, gen 10), {3})",
    "  Z/7  x  Z  ",
    "quot(idealize(Z/4), gen (2,0))",
];

fn c10_cli() -> Outcome {
    let mut canonical = 0;
    let mut failures = Vec::new();
    for src in FIXTURES {
        let expr = match parse_ring_expr(src) {
            Ok(e) => e,
            Err(e) => {
                failures.push(format!("{src:?}: {e}"));
                continue;
            }
        };
        let printed = expr.to_string();
        if parse_ring_expr(&printed).as_ref() != Ok(&expr) {
            failures.push(format!("{src:?} prints as {printed:?}"));
            continue;
        }
        let norm = match parse_ring(src) {
            Ok(n) => n,
            Err(e) => {
                failures.push(format!("{src:?}: {e}"));
                continue;
            }
        };
        let shown = norm.to_string();
        // explicit tables have no surface syntax
        if !shown.contains("table(") {
            if parse_ring(&shown).as_ref() != Ok(&norm) {
                failures.push(format!("{src:?}: canonical form {shown:?} does not reparse"));
                continue;
            }
            canonical += 1;
        }
    }
    if let Some(f) = failures.first() {
        return Err(format!("{} fixture failures, first {f}", failures.len()));
    }

    let bin = env!("CARGO_BIN_EXE_phir");
    let runs: [(&[&str], i32); 9] = [
        (&["classify", "--ring", "Z", "--ideal", "gen 4", "--phi", "empty"], 0),
        (&["classify", "--ring", "Z/12 x Z/2", "--ideal", "gen (4,0)", "--phi", "zero", "--phi", "pow:2"], 0),
        (&["ideals", "--ring", "Z/12"], 0),
        (&["ideals", "--ring", "Z", "--bound", "20"], 0),
        (&["verify", "--theorem", "product-tqr", "--ring", "Z x Z/2", "--n", "2"], 1),
        (&["verify", "--theorem", "cha", "--ring", "Z/12", "--phi", "pow:2"], 0),
        (&["verify", "--theorem", "basic-2", "--corpus", "zn:2..20"], 0),
        (&["search", "--have", "phi-r", "--lack", "phi-pure", "--phi", "empty", "--corpus", "zn:2..12"], 1),
        (&["search", "--have", "phi-pr", "--lack", "phi-r", "--phi", "empty", "--corpus", "ideal(z)"], 0),
    ];
    for (args, want) in runs {
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--format", "json"]);
        let out = Command::new(bin).args(&full).output().map_err(|e| e.to_string())?;
        let code = out.status.code().unwrap_or(-1);
        if code != want {
            return Err(format!("{args:?}: exit {code}, expected {want}"));
        }
        let doc: serde_json::Value =
            serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: invalid JSON: {e}"))?;
        report::validate(&doc).map_err(|e| format!("{args:?}: {e}"))?;
    }
    let usage: [&[&str]; 4] = [
        &["classify", "--ring", "Z/1", "--ideal", "gen"],
        &["classify", "--ring", "Z", "--ideal", "gen (1,2)"],
        &["verify", "--theorem", "no-such", "--ring", "Z"],
        &["frobnicate"],
    ];
    for args in usage {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        if out.status.code() != Some(2) {
            return Err(format!("{args:?}: exit {:?}, expected 2", out.status.code()));
        }
    }
    Ok(format!(
        "50 fixtures round-trip ({canonical} canonical forms reparse), {} reports validate, exit codes honored",
        runs.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("1 finite rings: every proper ideal is an r-ideal", c1_finite_rings_are_r),
        ("2 weakly-r status equals r status", c2_weakly_r_equals_r),
        ("3 implication chain and omega biconditional", c3_implication_chain),
        ("4 three-way characterization", c4_characterization),
        ("5 radical transfer with phi_0", c5_radical),
        ("6 idealization transfer and zerodivisor formula", c6_idealization),
        ("7a finite products are phi_n-r for n in {2,3}", c7a_finite_products),
        ("7b Z x Z/2 witness", c7b_integer_product),
        ("8 fast path agrees with brute force", c8_oracle_equivalence),
        ("9 localization transfer", c9_localization),
        ("10 CLI grammar, schema and exit codes", c10_cli),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
