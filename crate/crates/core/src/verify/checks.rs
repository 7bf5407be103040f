use std::collections::HashMap;
use std::sync::Arc;

use super::{Params, Tally, TheoremId};
use crate::classify::{check, is_regular_ideal, revalidate, satisfies_sac, IdealClass};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, Ideal, IdealPart};
use crate::phi::{order_chain, preserves_order, stabilization_index, CustomPhi, Phi, PhiImage};
use crate::ring::{
    is_total_quotient_ring, make_localization, make_quotient, regular_nonunit, Element, Ring,
};
use crate::verdict::{Bound, Verdict, Witness, WitnessItem};

/// Largest entry magnitude in element samples of infinite rings.
const SAMPLE: u64 = 12;

/// Memoized class verdicts for one ring.
struct Ctx<'a> {
    ring: &'a Ring,
    bound: Bound,
    cache: HashMap<(String, Ideal), Verdict>,
}

impl<'a> Ctx<'a> {
    fn new(ring: &'a Ring, bound: Bound) -> Self {
        Ctx {
            ring,
            bound,
            cache: HashMap::new(),
        }
    }

    fn verdict(&mut self, class: &IdealClass, i: &Ideal, t: &mut Tally) -> Result<Verdict> {
        let key = (class.to_string(), i.clone());
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let v = check(class, i, self.bound)?;
        t.absorb(&v);
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    fn phi_r(&mut self, phi: &Phi, i: &Ideal, t: &mut Tally) -> Result<Verdict> {
        self.verdict(&IdealClass::PhiR(phi.clone()), i, t)
    }

    fn r(&mut self, i: &Ideal, t: &mut Tally) -> Result<Verdict> {
        self.verdict(&IdealClass::RIdeal, i, t)
    }

    /// Whether a value of a map is an r-ideal (proper by definition).
    fn image_is_r(&mut self, img: &PhiImage, t: &mut Tally) -> Result<bool> {
        Ok(match img.ideal() {
            Some(f) if f.is_proper() => self.r(f, t)?.passes(),
            _ => false,
        })
    }

    fn ideals(&self, t: &mut Tally) -> Result<Vec<Ideal>> {
        let e = enumerate_ideals(self.ring, Some(self.bound.ideals))?;
        if !e.complete {
            t.bounded(self.bound.ideals);
        }
        Ok(e.ideals)
    }

    fn proper_ideals(&self, t: &mut Tally) -> Result<Vec<Ideal>> {
        Ok(self.ideals(t)?.into_iter().filter(Ideal::is_proper).collect())
    }

    /// All elements, or a bounded sample on infinite rings.
    fn elements(&self, t: &mut Tally) -> Vec<Element> {
        if self.ring.is_finite() {
            self.ring.bounded_elements(0)
        } else {
            let s = SAMPLE.min(self.bound.elements);
            t.bounded(s);
            self.ring.bounded_elements(s)
        }
    }
}

fn ideal_witness(i: &Ideal) -> Witness {
    Witness::ideals([i.clone()])
}

fn with_element(w: Witness, ring: &Ring, x: &Element) -> Witness {
    w.with(WitnessItem::Element(ring.clone(), x.clone()))
}

/// `I ⊆ zd(R)`, i.e. `I` has no regular element.
fn within_zd(i: &Ideal) -> Result<bool> {
    Ok(is_regular_ideal(i)?.is_fails())
}

/// Every nonzero element of `I` is regular.
fn nonzero_regular(i: &Ideal) -> Result<bool> {
    let ring = i.ring();
    if i.is_zero() {
        return Ok(true);
    }
    if ring.is_finite() {
        return Ok(i.elements()?.iter().all(|a| ring.is_zero(a) || ring.is_regular(a)));
    }
    // with two or more factors, e_k a is a nonzero zerodivisor in I
    Ok(ring.arity() == 1)
}

fn colon_image(img: &PhiImage, x: &Element) -> Result<PhiImage> {
    Ok(match img {
        PhiImage::Empty => PhiImage::Empty,
        PhiImage::Ideal(f) => PhiImage::Ideal(f.colon_element(x)?),
    })
}

fn radical_image(img: &PhiImage) -> Result<PhiImage> {
    Ok(match img {
        PhiImage::Empty => PhiImage::Empty,
        PhiImage::Ideal(f) => PhiImage::Ideal(f.radical()?),
    })
}

pub(super) fn run(id: TheoremId, ring: &Ring, params: &Params, bound: Bound, t: &mut Tally) -> Result<()> {
    let mut cx = Ctx::new(ring, bound);
    let phis = params.phis();
    match id {
        TheoremId::Basic1 => basic_1(&mut cx, params, t),
        TheoremId::Basic2 => basic_2(&mut cx, params, t),
        TheoremId::Basic3 => basic_3(&mut cx, params, t),
        TheoremId::Basic4 => basic_4(&mut cx, t),
        TheoremId::QuotPhi1 => quot_phi_1(&mut cx, &phis, t),
        TheoremId::QuotPhi2 => quot_phi_2(&mut cx, &phis, t),
        TheoremId::Cha => cha(&mut cx, &phis, t),
        TheoremId::DiffZd => diff_zd(&mut cx, &phis, t),
        TheoremId::Equ => equ(&mut cx, &phis, t),
        TheoremId::Rad => rad(&mut cx, &phis, t),
        TheoremId::Union => union(&mut cx, &phis, t),
        TheoremId::ProZd => pro_zd(&mut cx, &phis, t),
        TheoremId::PrimeZd => prime_zd(&mut cx, &phis, t),
        TheoremId::ColonX => colon_x(&mut cx, &phis, t),
        TheoremId::StronglyImplies => strongly_implies(&mut cx, &phis, t),
        TheoremId::SacThm => sac_thm(&mut cx, &phis, t),
        TheoremId::QuotJI => quot_ji(&mut cx, &phis, t),
        TheoremId::QuotLift => quot_lift(&mut cx, &phis, t),
        TheoremId::Ide => ide(&mut cx, &phis, t),
        TheoremId::Loc1 | TheoremId::Loc2 => loc(&mut cx, &phis, params, id == TheoremId::Loc2, t),
        TheoremId::ProductTqr => product_tqr(&mut cx, params, t),
    }
}

fn basic_1(cx: &mut Ctx, params: &Params, t: &mut Tally) -> Result<()> {
    let chain = order_chain(params.n.unwrap_or(4).max(2));
    for i in cx.proper_ideals(t)? {
        for (k, lo) in chain.iter().enumerate() {
            for hi in &chain[k + 1..] {
                t.instance();
                if !lo.apply(&i)?.is_subset(&hi.apply(&i)?)? || !cx.phi_r(lo, &i, t)?.passes() {
                    continue;
                }
                t.satisfied();
                if let Verdict::Fails(w) = cx.phi_r(hi, &i, t)? {
                    t.violation(Some(hi), format!("{i} is {lo}-r but not {hi}-r"), ideal_witness(&i).with_all(w));
                }
            }
        }
    }
    Ok(())
}

fn basic_2(cx: &mut Ctx, params: &Params, t: &mut Tally) -> Result<()> {
    let top = params.n.unwrap_or(4).max(2) + 1;
    // strongest first: r, weakly, omega, pow:top, ..., pow:2
    let mut chain = vec![Phi::Empty, Phi::Zero, Phi::Omega];
    chain.extend((2..=top).rev().map(Phi::Power));
    for i in cx.proper_ideals(t)? {
        t.instance();
        t.satisfied();
        let vs = chain.iter().map(|p| cx.phi_r(p, &i, t)).collect::<Result<Vec<_>>>()?;
        if vs[0].passes() != vs[1].passes() {
            t.violation(None, format!("r and weakly-r disagree on {i}"), ideal_witness(&i));
            continue;
        }
        for k in 1..chain.len() - 1 {
            if vs[k].passes() && !vs[k + 1].passes() {
                t.violation(
                    Some(&chain[k + 1]),
                    format!("{i} is {}-r but not {}-r", chain[k], chain[k + 1]),
                    ideal_witness(&i),
                );
                break;
            }
        }
    }
    Ok(())
}

fn basic_3(cx: &mut Ctx, params: &Params, t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        t.instance();
        t.satisfied();
        // past the stabilization index every power map agrees with omega
        let top = if cx.ring.is_finite() {
            stabilization_index(&i)?.max(2) + 1
        } else {
            t.bounded(params.n.unwrap_or(4) as u64);
            params.n.unwrap_or(4).max(2)
        };
        let omega = cx.phi_r(&Phi::Omega, &i, t)?.passes();
        let mut all = true;
        for n in 2..=top {
            all &= cx.phi_r(&Phi::Power(n), &i, t)?.passes();
        }
        if omega != all {
            t.violation(Some(&Phi::Omega), format!("omega-r is {omega} but all n-almost is {all} on {i}"), ideal_witness(&i));
        }
    }
    Ok(())
}

fn basic_4(cx: &mut Ctx, t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        for n in 1..=4u32 {
            t.instance();
            if !i.is_idempotent()? {
                continue;
            }
            t.satisfied();
            let phi = if n == 1 { Phi::Identity } else { Phi::Power(n) };
            if let Verdict::Fails(w) = cx.phi_r(&phi, &i, t)? {
                t.violation(Some(&phi), format!("idempotent {i} is not {phi}-r"), ideal_witness(&i).with_all(w));
            }
        }
    }
    Ok(())
}

fn quot_phi_1(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            let img = phi.apply(&i)?;
            let Some(f) = img.ideal() else { continue };
            if !nonzero_regular(f)? || !cx.phi_r(phi, &i, t)?.passes() {
                continue;
            }
            t.satisfied();
            let (_, map) = make_quotient(cx.ring, f)?;
            let q = map.project_ideal(&i)?;
            let v = check(&IdealClass::RIdeal, &q, cx.bound)?;
            t.absorb(&v);
            if v.is_fails() {
                t.violation(Some(phi), format!("{i}/phi(I) is not an r-ideal"), ideal_witness(&i));
            }
        }
    }
    Ok(())
}

fn quot_phi_2(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            let img = phi.apply(&i)?;
            if !cx.image_is_r(&img, t)? {
                continue;
            }
            let f = img.ideal().expect("r-ideals are ideals");
            let (_, map) = make_quotient(cx.ring, f)?;
            let v = check(&IdealClass::RIdeal, &map.project_ideal(&i)?, cx.bound)?;
            t.absorb(&v);
            if !v.passes() {
                continue;
            }
            t.satisfied();
            if let Verdict::Fails(w) = cx.phi_r(phi, &i, t)? {
                t.violation(Some(phi), format!("{i} is not {phi}-r"), ideal_witness(&i).with_all(w));
            }
        }
    }
    Ok(())
}

fn cha(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let ring = cx.ring.clone();
    let elems = cx.elements(t);
    let regular: Vec<Element> = elems.iter().filter(|x| ring.is_regular(x)).cloned().collect();
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            let img = phi.apply(&i)?;
            let v1 = cx.phi_r(phi, &i, t)?;
            let (mut xs, mut tests) = (regular.clone(), elems.clone());
            if let Some(w) = v1.witness() {
                // the violating pair is always examined
                xs.push(w.element(0).expect("pair witness").clone());
                tests.push(w.element(1).expect("pair witness").clone());
            }
            let mut c2 = true;
            let mut c3 = true;
            for x in &xs {
                t.instance();
                t.satisfied();
                // (2) as sets: r x in I iff r in I or r x in phi(I)
                let eq2 = tests.iter().all(|r| {
                    let rx = ring.mul(r, x);
                    i.has(&rx) == (i.has(r) || img.has(&rx))
                });
                let col = i.colon_element(x)?;
                let eq3 = col == i || colon_image(&img, x)?.ideal() == Some(&col);
                c2 &= eq2;
                c3 &= eq3;
            }
            if v1.passes() != c2 || c2 != c3 {
                t.violation(
                    Some(phi),
                    format!("on {i}: (1) is {}, (2) is {c2}, (3) is {c3}", v1.passes()),
                    ideal_witness(&i),
                );
            }
        }
    }
    Ok(())
}

fn diff_zd(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let ring = cx.ring.clone();
    let elems = cx.elements(t);
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            if !cx.phi_r(phi, &i, t)?.passes() {
                continue;
            }
            t.satisfied();
            let img = phi.apply(&i)?;
            if let Some(a) = elems.iter().find(|a| i.has(a) && !img.has(a) && ring.is_regular(a)) {
                t.violation(Some(phi), format!("regular element in {i} - phi(I)"), with_element(ideal_witness(&i), &ring, a));
            }
        }
    }
    Ok(())
}

fn equ(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            if !cx.image_is_r(&phi.apply(&i)?, t)? {
                continue;
            }
            t.satisfied();
            let a = cx.phi_r(phi, &i, t)?.passes();
            let b = cx.r(&i, t)?.passes();
            if a != b {
                t.violation(Some(phi), format!("{i}: phi-r is {a}, r is {b}"), ideal_witness(&i));
            }
        }
    }
    Ok(())
}

fn rad(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        let root = i.radical()?;
        for phi in phis {
            t.instance();
            let lhs = radical_image(&phi.apply(&i)?)?;
            if lhs != phi.apply(&root)? || !cx.phi_r(phi, &i, t)?.passes() {
                continue;
            }
            t.satisfied();
            if let Verdict::Fails(w) = cx.phi_r(phi, &root, t)? {
                t.violation(Some(phi), format!("sqrt of {i} is not {phi}-r"), ideal_witness(&root).with_all(w));
            }
        }
    }
    Ok(())
}

fn union(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let ideals = cx.proper_ideals(t)?;
    for phi in phis {
        let order = preserves_order(phi, cx.ring, Some(cx.bound.ideals))?;
        t.absorb(&order);
        let mut members = Vec::new();
        for i in &ideals {
            if cx.phi_r(phi, i, t)?.passes() {
                members.push(i.clone());
            }
        }
        // strictly ascending chains of length two and three
        let mut chains: Vec<Vec<Ideal>> = Vec::new();
        for a in &members {
            for b in &members {
                if a != b && a.is_subset(b)? {
                    chains.push(vec![a.clone(), b.clone()]);
                    for c in &members {
                        if c != b && b.is_subset(c)? {
                            chains.push(vec![a.clone(), b.clone(), c.clone()]);
                        }
                    }
                }
            }
        }
        for chain in chains {
            t.instance();
            if !order.passes() {
                continue;
            }
            t.satisfied();
            let mut u = chain[0].clone();
            for c in &chain[1..] {
                u = u.sum(c)?;
            }
            if let Verdict::Fails(w) = cx.phi_r(phi, &u, t)? {
                t.violation(Some(phi), format!("union {u} of a chain is not {phi}-r"), Witness::ideals(chain).with_all(w));
            }
        }
    }
    Ok(())
}

fn pro_zd(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            if !cx.image_is_r(&phi.apply(&i)?, t)? || !cx.phi_r(phi, &i, t)?.passes() {
                continue;
            }
            t.satisfied();
            if !within_zd(&i)? {
                t.violation(Some(phi), format!("{i} contains a regular element"), ideal_witness(&i));
            }
        }
    }
    Ok(())
}

fn prime_zd(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            if !cx.image_is_r(&phi.apply(&i)?, t)? || !cx.verdict(&IdealClass::Prime, &i, t)?.passes() {
                continue;
            }
            t.satisfied();
            let a = cx.phi_r(phi, &i, t)?.passes();
            let b = within_zd(&i)?;
            if a != b {
                t.violation(Some(phi), format!("prime {i}: phi-r is {a}, inside zd is {b}"), ideal_witness(&i));
            }
        }
    }
    Ok(())
}

fn colon_x(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let ring = cx.ring.clone();
    let elems = cx.elements(t);
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            let img = phi.apply(&i)?;
            let base = cx.phi_r(phi, &i, t)?.passes();
            for x in elems.iter().filter(|x| !i.has(x)) {
                t.instance();
                let col = i.colon_element(x)?;
                if !base || !colon_image(&img, x)?.is_subset(&phi.apply(&col)?)? {
                    continue;
                }
                t.satisfied();
                if let Verdict::Fails(w) = cx.phi_r(phi, &col, t)? {
                    t.violation(
                        Some(phi),
                        format!("({i}:x) is not {phi}-r"),
                        with_element(ideal_witness(&i), &ring, x).with_all(w),
                    );
                }
            }
        }
    }
    Ok(())
}

/// `(⟨a⟩, ⟨b⟩)` from a φ-r violation `(a, b)`, which violates the strong form.
fn strong_pair(i: &Ideal, w: &Witness) -> Result<Witness> {
    let ring = i.ring();
    let x = Ideal::principal(ring, w.element(0).expect("pair witness"))?;
    let y = Ideal::principal(ring, w.element(1).expect("pair witness"))?;
    Ok(Witness::ideals([x, y]))
}

fn strongly_implies(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            let strong = IdealClass::StronglyPhiR(phi.clone());
            let sv = cx.verdict(&strong, &i, t)?;
            if !sv.passes() {
                continue;
            }
            t.satisfied();
            if let Verdict::Fails(w) = cx.phi_r(phi, &i, t)? {
                // a bounded strong check can miss the pair built from the witness
                let pair = strong_pair(&i, &w)?;
                if matches!(sv, Verdict::Holds) || !revalidate(&strong, &i, &pair)? {
                    t.violation(Some(phi), format!("{i} is strongly {phi}-r but not {phi}-r"), ideal_witness(&i).with_all(w));
                }
            }
        }
    }
    Ok(())
}

fn sac_thm(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let sac = satisfies_sac(cx.ring)?.passes();
    for i in cx.proper_ideals(t)? {
        for phi in phis {
            t.instance();
            if !sac || !cx.image_is_r(&phi.apply(&i)?, t)? {
                continue;
            }
            t.satisfied();
            let strong = IdealClass::StronglyPhiR(phi.clone());
            let r = cx.phi_r(phi, &i, t)?;
            let sv = cx.verdict(&strong, &i, t)?;
            let agree = match (&r, &sv) {
                (Verdict::Fails(w), Verdict::HoldsUpToBound(_)) => revalidate(&strong, &i, &strong_pair(&i, w)?)?,
                _ => r.passes() == sv.passes(),
            };
            if !agree {
                t.violation(Some(phi), format!("{i}: phi-r is {r}, strong form is {sv}"), ideal_witness(&i));
            }
        }
    }
    Ok(())
}

fn quot_ji(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let ideals = cx.proper_ideals(t)?;
    for i in &ideals {
        let small = nonzero_regular(i)?;
        let map = if small { Some(Arc::new(make_quotient(cx.ring, i)?.1)) } else { None };
        for j in &ideals {
            if !i.is_subset(j)? {
                continue;
            }
            for phi in phis {
                t.instance();
                let Some(map) = &map else { continue };
                if !cx.phi_r(phi, j, t)?.passes() {
                    continue;
                }
                t.satisfied();
                let induced = Phi::QuotientInduced(Box::new(phi.clone()), map.clone());
                let v = check(&IdealClass::PhiR(induced), &map.project_ideal(j)?, cx.bound)?;
                t.absorb(&v);
                if let Verdict::Fails(w) = v {
                    t.violation(Some(phi), format!("{j}/{i} is not phi_I-r"), Witness::ideals([i.clone(), j.clone()]).with_all(w));
                }
            }
        }
    }
    Ok(())
}

fn quot_lift(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let ideals = cx.proper_ideals(t)?;
    for i in &ideals {
        let base = cx.r(i, t)?.passes();
        let map = if base { Some(make_quotient(cx.ring, i)?.1) } else { None };
        for j in &ideals {
            if !i.is_subset(j)? {
                continue;
            }
            let lifted = match &map {
                Some(m) => {
                    let v = check(&IdealClass::RIdeal, &m.project_ideal(j)?, cx.bound)?;
                    t.absorb(&v);
                    v.passes()
                }
                None => false,
            };
            for phi in phis {
                t.instance();
                if !lifted {
                    continue;
                }
                t.satisfied();
                if let Verdict::Fails(w) = cx.phi_r(phi, j, t)? {
                    t.violation(Some(phi), format!("{j} is not {phi}-r"), Witness::ideals([i.clone(), j.clone()]).with_all(w));
                }
            }
        }
    }
    Ok(())
}

fn ide(cx: &mut Ctx, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let ring = cx.ring.clone();
    let data = ring
        .idealization()
        .ok_or_else(|| Error::ShapeMismatch(format!("{ring} is not an idealization")))?
        .clone();
    let base = data.base().clone();
    let zm = data.module_zerodivisors();
    let same_zd = data.base_elements().iter().zip(&zm).all(|(r, &z)| !base.is_regular(r) == z);
    let whole = Ideal::unit(&base);
    let base_ideals = enumerate_ideals(&base, None)?;
    let mut base_cx = Ctx::new(&base, cx.bound);
    for i in base_ideals.proper() {
        let k = data.ideal_pair(&ring, i, &whole)?;
        for psi1 in phis {
            t.instance();
            let image = match psi1.apply(i)? {
                PhiImage::Empty => PhiImage::Empty,
                PhiImage::Ideal(f) => PhiImage::Ideal(data.ideal_pair(&ring, &f, &whole)?),
            };
            let psi2 = Phi::Custom(Arc::new(CustomPhi::new(format!("ide-{psi1}"), [(k.clone(), image)])));
            if !same_zd || !cx.phi_r(&psi2, &k, t)?.passes() {
                continue;
            }
            t.satisfied();
            if let Verdict::Fails(w) = base_cx.phi_r(psi1, i, t)? {
                t.violation(Some(psi1), format!("{k} is psi2-r but {i} is not {psi1}-r"), Witness::ideals([k.clone(), i.clone()]).with_all(w));
            }
        }
    }
    Ok(())
}

fn loc(cx: &mut Ctx, phis: &[Phi], params: &Params, second: bool, t: &mut Tally) -> Result<()> {
    let ring = cx.ring.clone();
    let sets: Vec<Vec<i128>> = if params.denominators.is_empty() {
        vec![vec![2], vec![3], vec![5]]
    } else {
        vec![params.denominators.clone()]
    };
    let ideals = cx.proper_ideals(t)?;
    for s in sets {
        let gens: Vec<Element> = s.iter().map(|&k| ring.from_int(k)).collect();
        let made = make_localization(&ring, &gens);
        let (target, map) = match made {
            Ok(m) => m,
            Err(Error::NonRegularDenominator(_)) => {
                // S is not inside r(R): every instance fails the hypothesis
                t.instances += (ideals.len() * phis.len()) as u64;
                continue;
            }
            Err(e) => return Err(e),
        };
        let map = Arc::new(map);
        let tprod = gens.iter().fold(ring.one(), |acc, g| ring.mul(&acc, g));
        let mut loc_cx = Ctx::new(&target, cx.bound);
        for i in &ideals {
            let meets = i.radical()?.has(&tprod);
            for phi in phis {
                t.instance();
                if meets || !cx.phi_r(phi, i, t)?.passes() {
                    continue;
                }
                let phi_s = Phi::LocalizationInduced(Box::new(phi.clone()), map.clone());
                let i_s = map.extend(i)?;
                let f_s = match phi.apply(i)? {
                    PhiImage::Empty => PhiImage::Empty,
                    PhiImage::Ideal(f) => PhiImage::Ideal(map.extend(&f)?),
                };
                if !f_s.is_subset(&phi_s.apply(&i_s)?)? {
                    continue;
                }
                t.satisfied();
                let w = ideal_witness(i);
                if !second {
                    if !i_s.is_proper() {
                        t.violation(Some(phi), format!("{i} extends to the unit ideal"), w);
                        continue;
                    }
                    if let Verdict::Fails(v) = loc_cx.phi_r(&phi_s, &i_s, t)? {
                        t.violation(Some(phi), format!("{i_s} is not phi_S-r"), w.with_all(v));
                    }
                } else if f_s.ideal() != Some(&i_s) && !within_zd(&map.contract(&i_s)?)? {
                    t.violation(Some(phi), format!("contraction of {i_s} has a regular element"), w);
                }
            }
        }
    }
    Ok(())
}

/// A proper ideal that is not `phi_n^×`-r when some factor has a regular
/// non-unit `a`: `I = ⟨a²⟩` there and the whole ring elsewhere, `x = y = (.., a, ..)`.
pub fn tqr_witness(ring: &Ring) -> Option<(Ideal, Element)> {
    let one = ring.one();
    ring.atoms().iter().enumerate().find_map(|(k, atom)| {
        let a = regular_nonunit(atom)?;
        let mut parts: Vec<IdealPart> = ring.atoms().iter().map(IdealPart::unit).collect();
        parts[k] = IdealPart::generated(atom, &[atom.mul(a, a)]);
        Some((Ideal::from_parts(ring, parts), ring.with_component(&one, k, a)))
    })
}

fn product_tqr(cx: &mut Ctx, params: &Params, t: &mut Tally) -> Result<()> {
    let ring = cx.ring.clone();
    let n = params.n.unwrap_or(2);
    if n < 2 {
        return Err(Error::Semantic("product-tqr needs n >= 2".into()));
    }
    let phi = Phi::power_product(n, ring.arity());
    let class = IdealClass::PhiR(phi.clone());
    match is_total_quotient_ring(&ring) {
        Verdict::Fails(_) => {
            // (ii) fails: exhibit the ideal from the construction
            t.instance();
            t.satisfied();
            let (i, x) = tqr_witness(&ring).expect("a factor with a regular non-unit");
            let pair = Witness::elements(&ring, [x.clone(), x.clone()]);
            let w = ideal_witness(&i).with_all(pair.clone());
            if i.is_proper() && revalidate(&class, &i, &pair)? {
                t.conclude(Verdict::Fails(w));
            } else {
                t.violation(Some(&phi), "construction does not violate (ii)", w);
            }
        }
        _ => {
            for i in cx.ideals(t)? {
                t.instance();
                if !i.is_proper() {
                    continue;
                }
                t.satisfied();
                if let Verdict::Fails(w) = cx.phi_r(&phi, &i, t)? {
                    t.violation(Some(&phi), format!("{i} is not {phi}-r over total quotient rings"), ideal_witness(&i).with_all(w));
                }
            }
        }
    }
    Ok(())
}

impl Witness {
    fn with_all(mut self, other: Witness) -> Witness {
        self.items.extend(other.items);
        self
    }
}
