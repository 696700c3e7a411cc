use super::{Ctx, Verdict};
use crate::error::Result;
use crate::net::Tally;
use crate::quadrangle::{QLine, QPoint};
use crate::sample::Sampler;

const POINT_VERTICES: [usize; 4] = [0, 2, 4, 6];

fn point(c: &Ctx, s: &mut Sampler, arity: usize) -> QPoint {
    match arity {
        0 => QPoint::Inf,
        1 => QPoint::P1(s.r2()),
        2 => QPoint::P2(s.r1(&c.inst), s.r2()),
        _ => QPoint::P3(s.r2(), s.r1(&c.inst), s.r2()),
    }
}

fn line(c: &Ctx, s: &mut Sampler, arity: usize) -> QLine {
    match arity {
        0 => QLine::Inf,
        1 => QLine::L1(s.r1(&c.inst)),
        2 => QLine::L2(s.r2(), s.r1(&c.inst)),
        _ => QLine::L3(s.r1(&c.inst), s.r2(), s.r1(&c.inst)),
    }
}

/// An incident pair `g . v`, `g . (v +- 1)` from the standard apartment.
fn incident_pair(c: &Ctx, s: &mut Sampler) -> Result<(QPoint, QLine)> {
    let g = s.uplus(&c.inst);
    let v = POINT_VERTICES[s.gen_range(4)];
    let w = if s.gen_bool(0.5) {
        (v + 1) % 8
    } else {
        (v + 7) % 8
    };
    Ok((c.quad.point_at(&g, v)?, c.quad.line_at(&g, w)?))
}

pub fn polarity_involution(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut pts, mut lns) = (Tally::default(), Tally::default());
    for arity in 0..4 {
        for _ in 0..c.cfg.samples {
            let p = point(c, s, arity);
            pts.record(
                c.quad.polarity_line(&c.quad.polarity_point(&p)?)? == p,
                || format!("{p}"),
            );
            let l = line(c, s, arity);
            lns.record(
                c.quad.polarity_point(&c.quad.polarity_line(&l)?)? == l,
                || format!("{l}"),
            );
        }
    }
    Ok(Verdict::tallies(&[("points", &pts), ("lines", &lns)]))
}

pub fn polarity_incidence(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let (mut inc, mut any) = (Tally::default(), Tally::default());
    for _ in 0..c.cfg.samples {
        let (p, l) = incident_pair(c, s)?;
        let ok = c.quad.incident(&p, &l)?
            && c.quad
                .incident(&c.quad.polarity_line(&l)?, &c.quad.polarity_point(&p)?)?;
        inc.record(ok, || format!("{p} on {l}"));
        let (p, _) = incident_pair(c, s)?;
        let (_, l) = incident_pair(c, s)?;
        let before = c.quad.incident(&p, &l)?;
        let after = c
            .quad
            .incident(&c.quad.polarity_line(&l)?, &c.quad.polarity_point(&p)?)?;
        any.record(before == after, || {
            format!("{p}, {l}: {before} then {after}")
        });
    }
    Ok(Verdict::tallies(&[("incident", &inc), ("random", &any)]))
}

pub fn action_incidence(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (p, l) = incident_pair(c, s)?;
        let (g, h) = (s.uplus(&c.inst), s.uplus(&c.inst));
        let (gp, gl) = (c.quad.act_point(&g, &p)?, c.quad.act_line(&g, &l)?);
        let gh = c.rel.mul(&g, &h)?;
        let composes = c.quad.act_point(&gh, &p)? == c.quad.act_point(&h, &gp)?
            && c.quad.act_line(&gh, &l)? == c.quad.act_line(&h, &gl)?;
        t.record(c.quad.incident(&gp, &gl)? && composes, || {
            format!("{p} on {l}, g = {g}")
        });
    }
    Ok(Verdict::tally(
        &t,
        "U_+ preserves incidence and acts on the right",
    ))
}

pub fn collinear_join(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let p = point(c, s, 3);
        let l = c.quad.line_through_p3(&p, &s.r1(&c.inst))?;
        let x = c.quad.point_on_l3(&l, &s.r2())?;
        if x == p {
            continue;
        }
        let ok = c.quad.collinear(&p, &x)? == Some(l.clone())
            && c.quad.collinear(&x, &p)? == Some(l.clone());
        t.record(ok, || format!("{p}, {x} on {l}"));
    }
    Ok(Verdict::tally(&t, "collinear points recover their line"))
}

pub fn projection(c: &Ctx, s: &mut Sampler) -> Result<Verdict> {
    let mut t = Tally::default();
    for _ in 0..c.cfg.samples {
        let (pa, la) = [(3, 0), (3, 1), (3, 2), (2, 2), (2, 3), (1, 3), (0, 3)][s.gen_range(7)];
        let (p, l) = (point(c, s, pa), line(c, s, la));
        let x = c.quad.project(&p, &l)?;
        let joined = x == p || c.quad.collinear(&p, &x)?.is_some();
        t.record(c.quad.incident(&x, &l)? && joined, || {
            format!("{p} onto {l} gives {x}")
        });
    }
    Ok(Verdict::tally(&t, "projections are collinear feet"))
}
