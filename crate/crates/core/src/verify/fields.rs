use super::{Ctx, Verdict};
use crate::error::Result;
use crate::net::Tally;
use crate::sample::Sampler;
use crate::validate::{validate, Outcome, ValidationReport};

pub fn tits_law(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut k, mut l) = (Tally::default(), Tally::default());
    for _ in 0..c.cfg.samples {
        let x = s.kelem();
        k.record(x.phi().phi() == x.square(), || format!("x = {x}"));
        let z = s.lelem();
        let ok = c.inst.phi_l(&c.inst.phi_l(&z)) == c.inst.square(&z);
        l.record(ok, || format!("z = {z}"));
    }
    Ok(Verdict::tallies(&[("K", &k), ("L", &l)]))
}

pub fn theta_phi(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut k, mut kp, mut l) = (Tally::default(), Tally::default(), Tally::default());
    for _ in 0..c.cfg.samples {
        let x = s.kelem();
        k.record(x.phi().theta()? == x, || format!("x = {x}"));
        let y = s.kprime();
        kp.record(y.theta()?.phi() == y, || format!("y = {y}"));
        let z = s.lelem();
        l.record(c.inst.theta_l(&c.inst.phi_l(&z))? == z, || {
            format!("z = {z}")
        });
    }
    Ok(Verdict::tallies(&[
        ("theta phi on K", &k),
        ("phi theta on K'", &kp),
        ("theta phi on L", &l),
    ]))
}

pub fn conjugation_norm(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let i = &c.inst;
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (z, w) = (s.lelem(), s.lelem());
        let ok = z.conj().conj() == z
            && i.norm(&i.mul(&z, &w)) == i.norm(&z).mul(&i.norm(&w))
            && i.mul(&z, &z.conj()).in_k()
            && z.add(&z.conj()).in_k();
        t.record(ok, || format!("z = {z}, w = {w}"));
    }
    Ok(Verdict::tally(&t, "conj involutive, norm multiplicative"))
}

pub fn tower(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let i = &c.inst;
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (x, z) = (s.kelem(), s.lelem());
        let ok = x.square().in_kprime()
            && x.phi().in_kprime()
            && i.in_lprime(&i.square(&z))
            && i.in_lprime(&i.phi_l(&z))
            && i.in_lprime(&s.lprime(i));
        t.record(ok, || format!("x = {x}, z = {z}"));
    }
    Ok(Verdict::tally(
        &t,
        "squares and phi-images land in K' and L'",
    ))
}

fn split(r: &ValidationReport, names: &[&str]) -> Verdict {
    let picked: Vec<_> = r
        .checks
        .iter()
        .filter(|c| names.contains(&c.name))
        .collect();
    let detail = picked
        .iter()
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect::<Vec<_>>()
        .join("; ");
    match picked.iter().find(|c| c.outcome == Outcome::Fail) {
        None => Verdict::pass(detail),
        Some(f) => Verdict::fail(format!("{}: {}", f.name, f.detail), detail),
    }
}

pub fn instance(c: &Ctx, _: &mut Sampler) -> Result<Verdict> {
    let r = validate(&c.inst, c.cfg.seed, c.cfg.samples, c.cfg.max_degree);
    Ok(split(
        &r,
        &["quadratic_irreducible", "tits_law", "alpha_is_phi_beta"],
    ))
}

/// `100 * samples` probes of degree at most 2 per form.
pub fn anisotropy(c: &Ctx, _: &mut Sampler) -> Result<Verdict> {
    let r = validate(
        &c.inst,
        c.cfg.seed,
        100 * c.cfg.samples,
        c.cfg.max_degree.min(2),
    );
    Ok(split(
        &r,
        &["anisotropy_one", "anisotropy_two", "anisotropy_transfer"],
    ))
}
