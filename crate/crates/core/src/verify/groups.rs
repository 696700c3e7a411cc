use super::{Ctx, Verdict};
use crate::error::Result;
use crate::moufang::{MoufangPoint, MoufangSet};
use crate::net::Tally;
use crate::quadrangle::{Flag, QLine};
use crate::root_groups::{filtration_degree, Relations};
use crate::sample::Sampler;
use crate::uinf::{LabelForm, UInfElem, G3_TERMS};

fn uinf(c: &Ctx, s: &mut Sampler) -> UInfElem {
    UInfElem::new(s.r1(&c.inst), s.r2())
}

/// Membership checks off, so that a wrong slot shows up as a failure of
/// associativity rather than as an error.
pub fn associativity(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let rel = Relations {
        check_membership: false,
        ..c.rel.clone()
    };
    let mut t = Tally::default();
    for _ in 0..2 * c.cfg.samples {
        let (g, h, k) = (s.uplus(&c.inst), s.uplus(&c.inst), s.uplus(&c.inst));
        let left = rel.mul(&rel.mul(&g, &h)?, &k)?;
        let right = rel.mul(&g, &rel.mul(&h, &k)?)?;
        t.record(left == right, || {
            format!("g = {g}, h = {h}, k = {k}: (gh)k = {left}, g(hk) = {right}")
        });
    }
    Ok(Verdict::tally(&t, "triples associate"))
}

pub fn inverse(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let g = s.uplus(&c.inst);
        let n = c.rel.inv(&g)?;
        let ok = c.rel.mul(&g, &n)?.is_identity() && c.rel.mul(&n, &g)?.is_identity();
        t.record(ok, || format!("g = {g}"));
    }
    Ok(Verdict::tally(&t, "g g^-1 = g^-1 g = 1"))
}

pub fn commutator_slots(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (g, h) = (s.uplus(&c.inst), s.uplus(&c.inst));
        let k = c.rel.commutator(&g, &h)?;
        let ok = c.rel.is_member(&k) && filtration_degree(&k) >= 2;
        t.record(ok, || format!("[{g}, {h}] = {k}"));
    }
    Ok(Verdict::tally(&t, "commutators lie in U2 U3"))
}

pub fn rho_star(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (g, h) = (s.uplus(&c.inst), s.uplus(&c.inst));
        let lhs = c.rel.rho_star(&c.rel.mul(&g, &h)?)?;
        let rhs = c.rel.mul(&c.rel.rho_star(&g)?, &c.rel.rho_star(&h)?)?;
        let inv = c.rel.rho_star(&c.rel.rho_star(&g)?)? == g;
        t.record(lhs == rhs && inv, || format!("g = {g}, h = {h}"));
    }
    Ok(Verdict::tally(&t, "rho* is an involutive automorphism"))
}

pub fn labelling(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let u = uinf(c, s);
        let g = c.ms.embed(&u)?;
        let f = c.quad.act_flag(&g, &Flag::zero())?;
        let coords = c
            .rel
            .uinf_extract(&c.rel.inv(&g)?, LabelForm::Centralizer)?;
        let read = matches!(&f.l, QLine::L3(k, b, _) if *k == coords.r1 && *b == coords.r2);
        let p = MoufangPoint::from(u.clone());
        let ok = c.quad.is_absolute(&f)? && read && c.ms.label_of(&f)? == p;
        t.record(ok, || format!("[{}, {}] gives {f}", u.r1, u.r2));
    }
    Ok(Verdict::tally(
        &t,
        "images of the zero flag are absolute and carry their label",
    ))
}

fn closure_with(c: &Ctx, s: &mut Sampler, form: LabelForm) -> Result<(Tally, Option<UInfElem>)> {
    let ms = MoufangSet::new(c.rel.clone()).with_form(form);
    let mut t = Tally::default();
    let mut bad = None;
    for _ in 0..2 * c.cfg.samples {
        let (g, h) = (uinf(c, s), uinf(c, s));
        let r = ms.mul(&g, &h);
        if r.is_err() && bad.is_none() {
            bad = Some(c.ms.mul(&g, &h)?);
        }
        t.record(r.is_ok(), || {
            format!("g = [{}, {}], h = [{}, {}]", g.r1, g.r2, h.r1, h.r2)
        });
    }
    Ok((t, bad))
}

pub fn closure(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (t, _) = closure_with(c, s, c.ms.form)?;
    Ok(Verdict::tally(&t, "products re-extract"))
}

/// The printed summands that differ from the corrected reading at `u`,
/// when the corrected reading reproduces the centralizer solution.
fn localize(c: &Ctx, u: &UInfElem) -> Result<String> {
    let printed = c.rel.uinf_g3_terms(u, LabelForm::Printed)?;
    let corrected = c.rel.uinf_g3_terms(u, LabelForm::Corrected)?;
    let centre = c.rel.uinf_g3_centralizer(u)?;
    if c.rel.uinf_g3(u, LabelForm::Corrected)? != centre {
        return Ok("not localized to a single summand".into());
    }
    let names: Vec<_> = (0..printed.len())
        .filter(|&k| printed[k] != corrected[k])
        .map(|k| G3_TERMS[k])
        .collect();
    Ok(format!("term {}", names.join(", ")))
}

pub fn closure_printed(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (t, bad) = closure_with(c, s, LabelForm::Printed)?;
    let mut v = Verdict::tally(&t, "products re-extract with the printed U3 part");
    if let (Some(u), Some(cx)) = (bad, v.counterexample.as_mut()) {
        cx.push_str(&format!(
            "; product [{}, {}]; {}",
            u.r1,
            u.r2,
            localize(c, &u)?
        ));
    }
    Ok(v)
}

pub fn filtration(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut two, mut three, mut four) = (Tally::default(), Tally::default(), Tally::default());
    for _ in 0..c.cfg.samples {
        let (g, h, k, l) = (uinf(c, s), uinf(c, s), uinf(c, s), uinf(c, s));
        let d = c.ms.commutator(&g, &h)?;
        two.record(d.r1.is_zero(), || format!("[g, h] = [{}, {}]", d.r1, d.r2));
        let e = c.ms.commutator(&k, &d)?;
        let ok = e.r1.is_zero() && e.r2.is_scalar();
        three.record(ok, || format!("[k, [g, h]] = [{}, {}]", e.r1, e.r2));
        let f = c.ms.commutator(&l, &e)?;
        four.record(f.is_identity(), || {
            format!("[l, [k, [g, h]]] = [{}, {}]", f.r1, f.r2)
        });
    }
    Ok(Verdict::tallies(&[
        ("[U,U]", &two),
        ("[U,[U,U]]", &three),
        ("triple", &four),
    ]))
}

pub fn regularity(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (p, q) = (
            MoufangPoint::from(uinf(c, s)),
            MoufangPoint::from(uinf(c, s)),
        );
        let g = c.ms.divide(&p, &q)?;
        let h = uinf(c, s);
        let moves = h.is_identity() || c.ms.act(&p, &h)? != p;
        let fixes_inf = c.ms.act(&MoufangPoint::Inf, &g)? == MoufangPoint::Inf;
        t.record(c.ms.act(&p, &g)? == q && moves && fixes_inf, || {
            format!("p = {p}, q = {q}")
        });
    }
    Ok(Verdict::tally(&t, "U_inf is sharply transitive off inf"))
}

pub fn label_action(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (p, g) = (MoufangPoint::from(uinf(c, s)), uinf(c, s));
        let lhs = c.ms.flag(&c.ms.act(&p, &g)?)?;
        let rhs = c.quad.act_flag(&c.ms.embed(&g)?, &c.ms.flag(&p)?)?;
        t.record(lhs == rhs, || format!("p = {p}, g = [{}, {}]", g.r1, g.r2));
    }
    Ok(Verdict::tally(&t, "flag(p^g) = flag(p)^g"))
}
