use super::{Ctx, Verdict};
use crate::blocks::{self, tau_prime, Block, SpecialCircle};
use crate::error::Result;
use crate::kfield::KElem;
use crate::moufang::MoufangPoint;
use crate::net::Tally;
use crate::root_groups::{R1Coord, R2Coord};
use crate::sample::Sampler;
use crate::uinf::UInfElem;

fn label(r1: R1Coord, r2: R2Coord) -> MoufangPoint {
    MoufangPoint::Label(r1, r2)
}

fn scalar(a: KElem, b: KElem) -> MoufangPoint {
    label(R1Coord::scalar(a), R2Coord::scalar(b))
}

fn half(c: &Ctx) -> usize {
    c.cfg.samples.div_ceil(2)
}

pub fn sphere_at_infinity(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for i in 0..c.cfg.samples {
        let base = label(s.r1(&c.inst), s.r2());
        let b = Block::sphere(MoufangPoint::Inf, base.clone())?;
        let r1 = if i % 2 == 0 {
            base.parts().expect("label").0.clone()
        } else {
            s.r1(&c.inst)
        };
        let p = label(r1, s.r2());
        let geo = c.ms.sphere_contains_geometric(&b, &p)?;
        let coords = c.ms.sphere_at_infinity_contains(&b, &p)?;
        t.record(geo == coords, || {
            format!("{p} in {b}: geometric {geo}, coordinates {coords}")
        });
    }
    Ok(Verdict::tally(
        &t,
        "geometric and coordinate membership agree",
    ))
}

/// `[(k,l,m),(u,v,b)]` and a point off the sphere.
pub fn sphere_gnarl_zero(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut on, mut off) = (Tally::default(), Tally::default());
    for _ in 0..half(c) {
        let r2 = s.r2();
        let b = Block::sphere(label(R1Coord::zero(), r2.clone()), MoufangPoint::Inf)?;
        let p = label(s.r1(&c.inst), r2.clone());
        on.record(c.ms.sphere_contains_geometric(&b, &p)?, || {
            format!("{p} not on {b}")
        });
        let other = s.r2();
        if other != r2 {
            let q = label(s.r1(&c.inst), other);
            off.record(!c.ms.sphere_contains_geometric(&b, &q)?, || {
                format!("{q} on {b}")
            });
        }
    }
    Ok(Verdict::tallies(&[("members", &on), ("non-members", &off)]))
}

/// `[(k,l,m+1),(u + beta k^theta, v + beta l^theta, b + m^(2 theta))]`.
fn gnarl_one_member(c: &Ctx, r2: &R2Coord, k: &R1Coord) -> Result<MoufangPoint> {
    let i = &c.inst;
    Ok(label(
        R1Coord::new(k.x.clone(), k.y.clone(), k.b.add(&KElem::one())),
        R2Coord::new(
            r2.u.add(&i.theta_l(&k.x)?.scale(&i.beta)),
            r2.v.add(&i.theta_l(&k.y)?.scale(&i.beta)),
            r2.a.add(&k.b.pow_2theta()),
        ),
    ))
}

pub fn sphere_gnarl_one(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut on, mut off) = (Tally::default(), Tally::default());
    for _ in 0..half(c) {
        let r2 = s.r2();
        let g = label(R1Coord::scalar(KElem::one()), r2.clone());
        let b = Block::sphere(g, MoufangPoint::Inf)?;
        let k = s.r1(&c.inst);
        let p = gnarl_one_member(c, &r2, &k)?;
        on.record(c.ms.sphere_contains_geometric(&b, &p)?, || {
            format!("{p} not on {b}")
        });
        let shifted = R2Coord::new(
            r2.u.clone(),
            r2.v.clone(),
            r2.a.add(&s.nonzero_kelem().square()),
        );
        let q = gnarl_one_member(c, &shifted, &k)?;
        off.record(!c.ms.sphere_contains_geometric(&b, &q)?, || {
            format!("{q} on {b}")
        });
    }
    Ok(Verdict::tallies(&[("members", &on), ("non-members", &off)]))
}

/// Right translation by `[(0,0,1),(0,0,0)]` carries `B_[(0,0,0),r]` onto
/// the sphere with gnarl `[(0,0,1),r']`.
pub fn sphere_translate(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let shift = UInfElem::new(R1Coord::scalar(KElem::one()), R2Coord::zero());
    let (mut gnarl, mut members) = (Tally::default(), Tally::default());
    for _ in 0..half(c) {
        let g0 = label(R1Coord::zero(), s.r2());
        let g1 = c.ms.act(&g0, &shift)?;
        let Some((g1r1, g1r2)) = g1.parts() else {
            continue;
        };
        gnarl.record(*g1r1 == R1Coord::scalar(KElem::one()), || {
            format!("{g0} goes to {g1}")
        });
        let p = label(s.r1(&c.inst), g0.parts().expect("label").1.clone());
        let q = c.ms.act(&p, &shift)?;
        let Some((q1, _)) = q.parts() else { continue };
        let k = R1Coord::new(q1.x.clone(), q1.y.clone(), q1.b.add(&KElem::one()));
        let formula = gnarl_one_member(c, g1r2, &k)? == q;
        let geo =
            c.ms.sphere_contains_geometric(&Block::sphere(g1.clone(), MoufangPoint::Inf)?, &q)?;
        members.record(formula && geo, || format!("{p} goes to {q}, gnarl {g1}"));
    }
    Ok(Verdict::tallies(&[
        ("gnarl", &gnarl),
        ("members", &members),
    ]))
}

pub fn circle_at_infinity(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..half(c) {
        let (r1, r2) = (s.r1(&c.inst), s.r2());
        let b = Block::circle(MoufangPoint::Inf, label(r1.clone(), r2.clone()))?;
        let k = s.kprime();
        let p = label(
            r1.clone(),
            R2Coord::new(r2.u.clone(), r2.v.clone(), r2.a.add(&k)),
        );
        let orbit =
            c.ms.act(&b.base, &UInfElem::new(R1Coord::zero(), R2Coord::scalar(k)))? == p;
        let sphere = Block::sphere(MoufangPoint::Inf, b.base.clone())?;
        let ok = orbit && c.ms.contains(&b, &p)? && c.ms.sphere_contains_geometric(&sphere, &p)?;
        t.record(ok, || format!("{p} and {b}"));
    }
    Ok(Verdict::tally(
        &t,
        "[(x,y,a),(u,v,b+k)] lie on the circle and its sphere",
    ))
}

/// Members lie on the sphere and are right translates of the members of
/// the circle with gnarl `[(0,0,0),(0,0,0)]`.
pub fn circle_through_infinity(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut sphere, mut transport) = (Tally::default(), Tally::default());
    for i in 0..half(c) {
        let g = if i % 2 == 0 {
            label(s.r1(&c.inst), s.r2())
        } else {
            label(s.r1_suzuki(), s.r2_suzuki())
        };
        let k = s.kprime();
        let p = c.ms.circle_through_inf_point(&g, &k)?;
        let b = Block::sphere(g.clone(), MoufangPoint::Inf)?;
        sphere.record(c.ms.sphere_contains_geometric(&b, &p)?, || {
            format!("{p} for gnarl {g}")
        });
        let q =
            c.ms.act(&scalar(k, KElem::zero()), &g.as_uinf().expect("label"))?;
        transport.record(p == q, || format!("gnarl {g}: formula {p}, translate {q}"));
    }
    Ok(Verdict::tallies(&[
        ("in sphere", &sphere),
        ("translate", &transport),
    ]))
}

pub fn special_circle_points(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (o, z) = (KElem::one(), KElem::zero());
    let first = SpecialCircle::First;
    let at_one = first.point(&o);
    let at_zero = first.point(&z);
    if at_one != Some(scalar(o.clone(), o.clone())) || at_zero != Some(scalar(z.clone(), o.clone()))
    {
        return Ok(Verdict::fail(
            format!("x = 1 gives {at_one:?}, x = 0 gives {at_zero:?}"),
            "listed points",
        ));
    }
    let mut t = Tally::default();
    for _ in 0..half(c) {
        let x = s.kelem();
        for circle in [SpecialCircle::First, SpecialCircle::Second] {
            let Some(p) = circle.point(&x) else { continue };
            let back = circle.parameter(&p)?;
            let ok = back.as_ref().and_then(|y| circle.point(y)) == Some(p.clone());
            t.record(ok, || format!("{circle:?} at x = {x}: {p}"));
        }
    }
    Ok(Verdict::tally(
        &t,
        "x = 1 and x = 0 give the listed points; parameters recovered",
    ))
}

/// Members checked against the printed headers and the observed blocks.
pub fn special_circle_blocks(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut printed, mut observed) = (Tally::default(), Tally::default());
    for _ in 0..half(c).min(12) {
        let x = s.kelem();
        for circle in [SpecialCircle::First, SpecialCircle::Second] {
            let Some(p) = circle.point(&x) else { continue };
            let (b, o) = (circle.block(), circle.observed_block());
            printed.record(c.ms.contains(&b, &p)?, || format!("{p} not on {b}"));
            observed.record(c.ms.contains(&o, &p)?, || format!("{p} not on {o}"));
        }
    }
    let mut v = Verdict::tallies(&[("printed", &printed), ("observed", &observed)]);
    if !v.ok {
        let o =
            [SpecialCircle::First, SpecialCircle::Second].map(|x| x.observed_block().to_string());
        v.detail = format!("{}; observed blocks {} and {}", v.detail, o[0], o[1]);
    }
    Ok(v)
}

pub fn tau_prime_values(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (o, z) = (KElem::one(), KElem::zero());
    let zero = MoufangPoint::zero();
    let t0 = tau_prime(&c.ms, &zero)?;
    let t1 = tau_prime(&c.ms, &scalar(o.clone(), z.clone()))?;
    if t0 != zero || t1 != scalar(o.clone(), o.clone()) {
        return Ok(Verdict::fail(
            format!("tau'(0) = {t0}, tau'([(0,0,1),0]) = {t1}"),
            "fixed values",
        ));
    }
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let p = label(s.r1_suzuki(), s.r2_suzuki());
        let tp = tau_prime(&c.ms, &p)?;
        let ok = tau_prime(&c.ms, &tp)? == p && blocks::tau_prime_composite(&c.ms, &p)? == tp;
        t.record(ok, || format!("p = {p}, tau'(p) = {tp}"));
    }
    Ok(Verdict::tally(
        &t,
        "involutive on Suzuki-Tits labels and equal to the composite there",
    ))
}

pub fn tau_prime_composite(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let p = label(s.r1(&c.inst), s.r2());
        let (a, b) = (
            tau_prime(&c.ms, &p)?,
            blocks::tau_prime_composite(&c.ms, &p)?,
        );
        t.record(a == b, || format!("p = {p}: displayed {a}, composite {b}"));
    }
    Ok(Verdict::tally(
        &t,
        "displayed tau' equals tau composed with a translation",
    ))
}

pub fn tau_prime_circle(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..half(c).min(12) {
        let x = s.kelem();
        let Some(p) = SpecialCircle::First.point(&x) else {
            continue;
        };
        let q = tau_prime(&c.ms, &p)?;
        t.record(SpecialCircle::Second.contains(&q)?, || {
            format!("x = {x}: tau'({p}) = {q}")
        });
    }
    Ok(Verdict::tally(
        &t,
        "tau'-images of the first special circle on the second",
    ))
}

pub fn net(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let r = c.ms.net_report(s, half(c))?;
    Ok(Verdict::tallies(&[
        ("vertical disjoint", &r.vertical_disjoint),
        ("unique intersection", &r.unique_intersection),
        ("parallel disjoint", &r.parallel_disjoint),
    ]))
}

pub fn reconstruction(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (points, spheres) = c.ms.reconstruction_sample(s, c.cfg.samples)?;
    let r = c.ms.reconstruct(&points, &spheres)?;
    let mut v = Verdict::tallies(&[
        ("point-line", &r.point_line),
        ("gnarl rule", &r.gnarl_rule),
        ("sphere-sphere", &r.sphere_sphere),
        ("injective", &r.injective),
        ("polarity", &r.polarity_swap),
    ]);
    v.detail = format!(
        "{} points, {} spheres, {} incident sphere pairs; {}",
        r.points, r.spheres, r.sphere_sphere_incident, v.detail
    );
    if r.sphere_sphere_incident == 0 {
        v.ok = false;
    }
    Ok(v)
}
