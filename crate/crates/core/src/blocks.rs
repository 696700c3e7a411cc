//! Spheres and circles of the Moufang set, and the map `tau'`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kfield::KElem;
use crate::linalg::{self, Solution};
use crate::moufang::{MoufangPoint, MoufangSet};
use crate::quadrangle::QPoint;
use crate::root_groups::{R1Coord, R2Coord};
use crate::uinf::UInfElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Sphere,
    Circle,
}

/// A block, described by its gnarl and one further point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub kind: BlockKind,
    pub gnarl: MoufangPoint,
    pub base: MoufangPoint,
}

#[derive(Serialize)]
struct Descriptor {
    kind: BlockKind,
    gnarl: String,
    base: String,
}

impl Block {
    pub fn new(kind: BlockKind, gnarl: MoufangPoint, base: MoufangPoint) -> Result<Self> {
        if gnarl == base {
            return Err(Error::Precondition(format!(
                "block with gnarl = base = {gnarl}"
            )));
        }
        Ok(Block { kind, gnarl, base })
    }

    pub fn sphere(gnarl: MoufangPoint, base: MoufangPoint) -> Result<Self> {
        Block::new(BlockKind::Sphere, gnarl, base)
    }

    pub fn circle(gnarl: MoufangPoint, base: MoufangPoint) -> Result<Self> {
        Block::new(BlockKind::Circle, gnarl, base)
    }

    /// `{"kind":..,"gnarl":..,"base":..}` with canonical labels.
    pub fn descriptor(&self) -> String {
        serde_json::to_string(&Descriptor {
            kind: self.kind,
            gnarl: self.gnarl.to_string(),
            base: self.base.to_string(),
        })
        .expect("plain strings serialize")
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

fn scalar_label(a: KElem, b: KElem) -> MoufangPoint {
    MoufangPoint::Label(R1Coord::scalar(a), R2Coord::scalar(b))
}

fn scalar_parts(p: &MoufangPoint) -> Option<(KElem, KElem)> {
    let (a, b) = p.parts()?;
    (a.is_scalar() && b.is_scalar()).then(|| (a.b.clone(), b.a.clone()))
}

/// The two circles written out explicitly in coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCircle {
    /// Gnarl `[(0,0,0),(0,0,0)]` through `[(0,0,1),(0,0,0)]`.
    First,
    /// Through `[(0,0,1),(0,0,0)]` with gnarl `[(0,0,0),(0,0,1)]`.
    Second,
}

impl SpecialCircle {
    /// The gnarl as printed with the formula.
    pub fn gnarl(self) -> MoufangPoint {
        match self {
            SpecialCircle::First => MoufangPoint::zero(),
            SpecialCircle::Second => scalar_label(KElem::zero(), KElem::one()),
        }
    }

    /// The point the circle is printed to pass through.
    pub fn base(self) -> MoufangPoint {
        scalar_label(KElem::one(), KElem::zero())
    }

    /// The point listed beside the parametrized family.
    pub fn listed_point(self) -> MoufangPoint {
        MoufangPoint::zero()
    }

    /// The printed `(gnarl, base)` as a block.
    pub fn block(self) -> Block {
        Block {
            kind: BlockKind::Circle,
            gnarl: self.gnarl(),
            base: self.base(),
        }
    }

    /// The circle the parametrized set actually lies on: the two `K` slots of
    /// the printed labels are swapped.
    pub fn observed_block(self) -> Block {
        let (z, o) = (KElem::zero(), KElem::one());
        match self {
            SpecialCircle::First => Block {
                kind: BlockKind::Circle,
                gnarl: MoufangPoint::zero(),
                base: scalar_label(z, o),
            },
            SpecialCircle::Second => Block {
                kind: BlockKind::Circle,
                gnarl: scalar_label(o, z),
                base: MoufangPoint::zero(),
            },
        }
    }

    /// The member with parameter `x`, or `None` where a denominator vanishes.
    pub fn point(self, x: &KElem) -> Option<MoufangPoint> {
        let one = KElem::one();
        let p = x.phi();
        let (a, b) = match self {
            SpecialCircle::First => {
                let a = x.div(&one.add(x).add(&p)).ok()?;
                let b = one.div(&one.add(&p).add(&x.square())).ok()?;
                (a, b)
            }
            SpecialCircle::Second => {
                let x2 = x.square();
                let a = one.div(&one.add(x).add(&x2.mul(&p))).ok()?;
                let b = p.div(&one.add(&p).add(&x2.mul(&p.square()))).ok()?;
                (a, b)
            }
        };
        Some(scalar_label(a, b))
    }

    /// A parameter `x` with `point(x) = p`, if any.
    pub fn parameter(self, p: &MoufangPoint) -> Result<Option<KElem>> {
        let Some((a, b)) = scalar_parts(p) else {
            return Ok(None);
        };
        let candidates = match self {
            SpecialCircle::First => first_circle_candidates(&a, &b)?,
            SpecialCircle::Second => second_circle_candidates(&a, &b)?,
        };
        Ok(candidates
            .into_iter()
            .find(|x| self.point(x).as_ref() == Some(p)))
    }

    pub fn contains(self, p: &MoufangPoint) -> Result<bool> {
        if *p == self.listed_point() {
            return Ok(true);
        }
        Ok(self.parameter(p)?.is_some())
    }
}

/// Unknowns `(x, phi(x), x^2)`: `(A+1) x + A u = A`, `B u + B y = 1 + B`
/// and its image under `phi`, using `phi(u) = y`.
fn first_circle_candidates(a: &KElem, b: &KElem) -> Result<Vec<KElem>> {
    let one = KElem::one();
    let z = KElem::zero();
    let rows = vec![
        vec![a.add(&one), a.clone(), z.clone()],
        vec![z.clone(), b.clone(), b.clone()],
        vec![z, a.add(&one).phi(), a.phi()],
    ];
    let rhs = vec![a.clone(), one.add(b), a.phi()];
    let fixed = match linalg::solve(&rows, &rhs)? {
        Solution::Unique(v) => v.into_iter().map(Some).collect::<Vec<_>>(),
        Solution::Family(v, ker) => v
            .into_iter()
            .enumerate()
            .map(|(i, c)| ker.iter().all(|k| k[i].is_zero()).then_some(c))
            .collect(),
        Solution::Inconsistent => return Ok(Vec::new()),
    };
    let mut out = Vec::new();
    if let Some(x) = &fixed[0] {
        out.push(x.clone());
    }
    if let Some(x) = fixed[1].as_ref().and_then(|u| u.theta().ok()) {
        out.push(x);
    }
    if let Some(x) = fixed[2].as_ref().and_then(KElem::sqrt) {
        out.push(x);
    }
    Ok(out)
}

/// With `c = 1/A + 1`: `x^2 phi(x) = c + x`, and then `(1 + B) x = c (1 + B) + B c^2`.
fn second_circle_candidates(a: &KElem, b: &KElem) -> Result<Vec<KElem>> {
    if a.is_zero() {
        return Ok(Vec::new());
    }
    let one = KElem::one();
    let c = a.inv()?.add(&one);
    let b1 = one.add(b);
    if b1.is_zero() {
        return Ok(vec![one]);
    }
    Ok(vec![c.add(&b.mul(&c.square()).div(&b1)?)])
}

/// `[(x,y,a),(u,v,b)] -> [(x,y,a),(u + beta x^theta, v + x^theta, b + phi(a))]`, as printed.
pub fn tau_prime(m: &MoufangSet, p: &MoufangPoint) -> Result<MoufangPoint> {
    let Some((r1, r2)) = p.parts() else {
        return Err(Error::Precondition("tau' is defined away from inf".into()));
    };
    let i = &m.rel().inst;
    let xt = i.theta_l(&r1.x)?;
    Ok(MoufangPoint::Label(
        r1.clone(),
        R2Coord::new(
            r2.u.add(&xt.scale(&i.beta)),
            r2.v.add(&xt),
            r2.a.add(&r1.b.phi()),
        ),
    ))
}

impl MoufangSet {
    /// The point of the quadrangle all members of a sphere are collinear with.
    pub fn sphere_centre(&self, b: &Block) -> Result<QPoint> {
        let fg = self.flag(&b.gnarl)?;
        let fb = self.flag(&b.base)?;
        self.quad.project(&fb.p, &fg.l)
    }

    /// Membership through projection and collinearity in the quadrangle.
    pub fn sphere_contains_geometric(&self, b: &Block, p: &MoufangPoint) -> Result<bool> {
        if *p == b.gnarl || *p == b.base {
            return Ok(true);
        }
        let c = self.sphere_centre(b)?;
        let q = self.flag(p)?.p;
        Ok(q == c || self.quad.collinear(&q, &c)?.is_some())
    }

    /// Membership by coordinates, for spheres with gnarl `inf`.
    pub fn sphere_at_infinity_contains(&self, b: &Block, p: &MoufangPoint) -> Result<bool> {
        let (MoufangPoint::Inf, Some((r1, _))) = (&b.gnarl, b.base.parts()) else {
            return Err(Error::Precondition(format!("{b} does not have gnarl inf")));
        };
        Ok(p.parts().is_none_or(|(q1, _)| q1 == r1))
    }

    /// The circle with gnarl `[(x,y,a),(u,v,b)]` through `inf` at parameter `k` in `K'`.
    pub fn circle_through_inf_point(
        &self,
        gnarl: &MoufangPoint,
        k: &KElem,
    ) -> Result<MoufangPoint> {
        let Some((r1, r2)) = gnarl.parts() else {
            return Err(Error::Precondition("gnarl inf".into()));
        };
        let i = &self.rel().inst;
        let k2 = k.phi();
        let n = i.norm(&r1.x).add(&i.beta.square().mul(&i.norm(&r1.y)));
        let db = r1.b.square().mul(&k2).add(&k2.mul(&i.alpha).mul(&n));
        Ok(MoufangPoint::Label(
            R1Coord::new(r1.x.clone(), r1.y.clone(), r1.b.add(k)),
            R2Coord::new(r2.u.clone(), r2.v.clone(), r2.a.add(&db)),
        ))
    }

    pub fn circle_contains(&self, b: &Block, p: &MoufangPoint) -> Result<bool> {
        if *p == b.gnarl || *p == b.base {
            return Ok(true);
        }
        match (&b.gnarl, &b.base) {
            (MoufangPoint::Inf, MoufangPoint::Label(r1, r2)) => Ok(p
                .parts()
                .is_none_or(|(q1, q2)| q1 == r1 && q2.u == r2.u && q2.v == r2.v)),
            (MoufangPoint::Label(g1, _), MoufangPoint::Inf) => {
                let Some((q1, _)) = p.parts() else {
                    return Ok(true);
                };
                let k = q1.b.add(&g1.b);
                if q1.x != g1.x || q1.y != g1.y || !k.in_kprime() {
                    return Ok(false);
                }
                Ok(self.circle_through_inf_point(&b.gnarl, &k)? == *p)
            }
            _ if b.gnarl.is_suzuki_tits() && b.base.is_suzuki_tits() => {
                let sphere = Block {
                    kind: BlockKind::Sphere,
                    ..b.clone()
                };
                Ok(p.is_suzuki_tits() && self.sphere_contains_geometric(&sphere, p)?)
            }
            _ => Err(Error::Unsupported(format!(
                "circle {b}: no coordinate description"
            ))),
        }
    }

    pub fn contains(&self, b: &Block, p: &MoufangPoint) -> Result<bool> {
        match b.kind {
            BlockKind::Sphere => self.sphere_contains_geometric(b, p),
            BlockKind::Circle => self.circle_contains(b, p),
        }
    }
}

/// `tau` after right multiplication by `[(0,0,1),(0,0,0)]`, where `tau` adds 1 to `a`.
pub fn tau_prime_composite(m: &MoufangSet, p: &MoufangPoint) -> Result<MoufangPoint> {
    let shift = UInfElem::new(R1Coord::scalar(KElem::one()), R2Coord::zero());
    match m.act(p, &shift)? {
        MoufangPoint::Label(r1, r2) => Ok(MoufangPoint::Label(
            R1Coord::new(r1.x, r1.y, r1.b.add(&KElem::one())),
            r2,
        )),
        MoufangPoint::Inf => Err(Error::Precondition("tau' is defined away from inf".into())),
    }
}
