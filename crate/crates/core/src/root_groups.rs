//! Root groups `U1..U4` of the exceptional quadrangle, their commutator
//! relations, and collection into the normal form `U1 U2 U3 U4`.
//!
//! Every root group is elementary abelian of exponent 2, so each root element
//! is its own inverse and `[g, h] = g h g h` regardless of convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::kfield::KElem;
use crate::lfield::{FieldInstance, LElem};

/// Coordinates of `U1` and `U3`: `L' x L' x K`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct R1Coord {
    pub x: LElem,
    pub y: LElem,
    pub b: KElem,
}

/// Coordinates of `U2` and `U4`: `L x L x K'`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct R2Coord {
    pub u: LElem,
    pub v: LElem,
    pub a: KElem,
}

macro_rules! coord_common {
    ($ty:ident, $p:ident, $q:ident, $r:ident) => {
        impl $ty {
            pub fn new($p: LElem, $q: LElem, $r: KElem) -> Self {
                $ty { $p, $q, $r }
            }

            pub fn zero() -> Self {
                $ty::new(LElem::zero(), LElem::zero(), KElem::zero())
            }

            /// Only the scalar slot set.
            pub fn scalar($r: KElem) -> Self {
                $ty::new(LElem::zero(), LElem::zero(), $r)
            }

            pub fn is_zero(&self) -> bool {
                self.$p.is_zero() && self.$q.is_zero() && self.$r.is_zero()
            }

            /// Whether both `L` slots vanish.
            pub fn is_scalar(&self) -> bool {
                self.$p.is_zero() && self.$q.is_zero()
            }

            pub fn add(&self, o: &Self) -> Self {
                $ty::new(self.$p.add(&o.$p), self.$q.add(&o.$q), self.$r.add(&o.$r))
            }

            pub fn height(&self) -> usize {
                self.$p.height().max(self.$q.height()).max(self.$r.height())
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}, {}, {})", self.$p, self.$q, self.$r)
            }
        }
    };
}

coord_common!(R1Coord, x, y, b);
coord_common!(R2Coord, u, v, a);

impl R1Coord {
    pub fn is_member(&self, inst: &FieldInstance) -> bool {
        inst.in_lprime(&self.x) && inst.in_lprime(&self.y)
    }
}

impl R2Coord {
    pub fn is_member(&self) -> bool {
        self.a.in_kprime()
    }
}

/// An element `g1 g2 g3 g4` of `U+ = U1 U2 U3 U4` in normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPlusElem {
    pub g1: R1Coord,
    pub g2: R2Coord,
    pub g3: R1Coord,
    pub g4: R2Coord,
}

impl UPlusElem {
    pub fn identity() -> Self {
        UPlusElem {
            g1: R1Coord::zero(),
            g2: R2Coord::zero(),
            g3: R1Coord::zero(),
            g4: R2Coord::zero(),
        }
    }

    pub fn u1(c: R1Coord) -> Self {
        UPlusElem {
            g1: c,
            ..Self::identity()
        }
    }

    pub fn u2(c: R2Coord) -> Self {
        UPlusElem {
            g2: c,
            ..Self::identity()
        }
    }

    pub fn u3(c: R1Coord) -> Self {
        UPlusElem {
            g3: c,
            ..Self::identity()
        }
    }

    pub fn u4(c: R2Coord) -> Self {
        UPlusElem {
            g4: c,
            ..Self::identity()
        }
    }

    pub fn is_identity(&self) -> bool {
        self.g1.is_zero() && self.g2.is_zero() && self.g3.is_zero() && self.g4.is_zero()
    }

    /// Whether every `L` slot vanishes (the Suzuki–Tits subgroup).
    pub fn is_suzuki_tits(&self) -> bool {
        self.g1.is_scalar() && self.g2.is_scalar() && self.g3.is_scalar() && self.g4.is_scalar()
    }

    pub fn height(&self) -> usize {
        self.g1
            .height()
            .max(self.g2.height())
            .max(self.g3.height())
            .max(self.g4.height())
    }
}

impl fmt::Display for UPlusElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_1 {}_2 {}_3 {}_4", self.g1, self.g2, self.g3, self.g4)
    }
}

/// Where the commutator `[U2, U4]` is placed. The relation is only
/// consistent with the group law when the result lies in `U3`; the `U2`
/// reading exists so that its failure can be demonstrated.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Eq3Slot {
    Two,
    #[default]
    Three,
}

/// A single root element tagged with its root group.
#[derive(Clone, Debug)]
pub enum RootElem {
    U1(R1Coord),
    U2(R2Coord),
    U3(R1Coord),
    U4(R2Coord),
}

/// The commutator relations over a fixed field instance.
#[derive(Clone, Debug)]
pub struct Relations {
    pub inst: FieldInstance,
    pub eq3_slot: Eq3Slot,
    /// Check slot membership of every emitted commutator.
    pub check_membership: bool,
}

impl Relations {
    pub fn new(inst: FieldInstance) -> Self {
        Relations {
            inst,
            eq3_slot: Eq3Slot::Three,
            check_membership: true,
        }
    }

    pub fn with_eq3_slot(mut self, slot: Eq3Slot) -> Self {
        self.eq3_slot = slot;
        self
    }

    fn check_r2(&self, slot: &str, c: &R2Coord) -> Result<()> {
        if self.check_membership && !c.is_member() {
            return Err(Error::SlotMembership {
                slot: slot.to_string(),
                value: c.to_string(),
            });
        }
        Ok(())
    }

    fn check_r1(&self, slot: &str, c: &R1Coord) -> Result<()> {
        if self.check_membership && !c.is_member(&self.inst) {
            return Err(Error::SlotMembership {
                slot: slot.to_string(),
                value: c.to_string(),
            });
        }
        Ok(())
    }

    /// `[(x,y,b)_1, (x',y',b')_3]`, scalar part
    /// `alpha (x x̄' + x' x̄ + beta^2 (y ȳ' + y' ȳ))`. No membership check.
    pub fn comm13_raw(&self, p: &R1Coord, q: &R1Coord) -> R2Coord {
        let i = &self.inst;
        let s = i
            .bilinear_trace(&p.x, &q.x)
            .add(&i.beta.square().mul(&i.bilinear_trace(&p.y, &q.y)));
        R2Coord::scalar(i.alpha.mul(&s))
    }

    pub fn comm13(&self, p: &R1Coord, q: &R1Coord) -> Result<R2Coord> {
        let r = self.comm13_raw(p, q);
        self.check_r2("[U1,U3]", &r)?;
        Ok(r)
    }

    /// `[(u,v,a)_2, (u',v',a')_4]`, scalar part
    /// `beta^-1 (u ū' + u' ū + alpha (v v̄' + v' v̄))`. No membership check.
    pub fn comm24_raw(&self, p: &R2Coord, q: &R2Coord) -> R1Coord {
        let i = &self.inst;
        let s = i
            .bilinear_trace(&p.u, &q.u)
            .add(&i.alpha.mul(&i.bilinear_trace(&p.v, &q.v)));
        R1Coord::scalar(i.beta_inv().mul(&s))
    }

    pub fn comm24(&self, p: &R2Coord, q: &R2Coord) -> Result<R1Coord> {
        let r = self.comm24_raw(p, q);
        if self.eq3_slot == Eq3Slot::Three {
            self.check_r1("[U2,U4]", &r)?;
        }
        Ok(r)
    }

    /// `[(x,y,b)_1, (u,v,a)_4]` as its `(U2, U3)` parts. No membership check.
    pub fn comm14_raw(&self, p: &R1Coord, q: &R2Coord) -> (R2Coord, R1Coord) {
        let i = &self.inst;
        let (x, y, b) = (&p.x, &p.y, &p.b);
        let (u, v, a) = (&q.u, &q.v, &q.a);
        let (alpha, beta) = (&i.alpha, &i.beta);
        let m = |z: &LElem, w: &LElem| i.mul(z, w);
        let m3 = |z: &LElem, w: &LElem, r: &LElem| i.mul(&i.mul(z, w), r);
        let (xb, yb, ub, vb) = (x.conj(), y.conj(), u.conj(), v.conj());
        let (u2, v2) = (i.square(u), i.square(v));
        let (ub2, vb2) = (u2.conj(), v2.conj());
        let norm_xy = i.norm(x).add(&beta.square().mul(&i.norm(y)));

        // U2 part
        let p1 = u
            .scale(b)
            .add(&m(&xb, v).add(&m(y, &vb).scale(beta)).scale(alpha));
        let p2 = v.scale(b).add(&m(x, u)).add(&m(y, &ub).scale(beta));
        let p3 = b.square().mul(a).add(&a.mul(alpha).mul(&norm_xy)).add(
            &alpha.mul(
                &m3(&u2, x, &yb)
                    .trace()
                    .add(&alpha.mul(&m3(&vb2, x, y).trace())),
            ),
        );
        // U3 part
        let q1 = x.scale(a).add(&m(&ub2, y)).add(&m(&v2, &yb).scale(alpha));
        let beta_inv = i.beta_inv();
        let q2 = y.scale(a).add(
            &m(&u2, x)
                .add(&m(&v2, &xb).scale(alpha))
                .scale(&beta_inv.square()),
        );
        let q3 = a
            .mul(b)
            .add(&b.mul(&beta_inv).mul(&i.norm(u).add(&alpha.mul(&i.norm(v)))))
            .add(
                &alpha.mul(
                    &beta_inv
                        .mul(&m3(x, u, &vb).trace())
                        .add(&m3(y, &ub, &vb).trace()),
                ),
            );
        (R2Coord::new(p1, p2, p3), R1Coord::new(q1, q2, q3))
    }

    pub fn comm14(&self, p: &R1Coord, q: &R2Coord) -> Result<(R2Coord, R1Coord)> {
        let (a, b) = self.comm14_raw(p, q);
        self.check_r2("[U1,U4] U2-part", &a)?;
        self.check_r1("[U1,U4] U3-part", &b)?;
        Ok((a, b))
    }

    /// Right-multiply a normal form by one root element and re-collect.
    pub fn mul_root(&self, g: &UPlusElem, h: &RootElem) -> Result<UPlusElem> {
        let mut out = g.clone();
        match h {
            RootElem::U4(d) => out.g4 = out.g4.add(d),
            RootElem::U3(c) => out.g3 = out.g3.add(c),
            RootElem::U2(b) => {
                // g4 b = b g4 [g4, b]
                let c = self.comm24(b, &g.g4)?;
                match self.eq3_slot {
                    Eq3Slot::Three => out.g3 = out.g3.add(&c),
                    Eq3Slot::Two => {
                        out.g2 = out.g2.add(&R2Coord::scalar(c.b));
                    }
                }
                out.g2 = out.g2.add(b);
            }
            RootElem::U1(w) => {
                // g4 w = w g4 P Q, then g4 P = P g4 [g4, P]
                let (p, q) = self.comm14(w, &g.g4)?;
                let c = self.comm24(&p, &g.g4)?;
                // g3 w = w g3 [g3, w]
                let d = self.comm13(w, &g.g3)?;
                out.g1 = out.g1.add(w);
                out.g2 = out.g2.add(&d).add(&p);
                out.g3 = out.g3.add(&q);
                match self.eq3_slot {
                    Eq3Slot::Three => out.g3 = out.g3.add(&c),
                    Eq3Slot::Two => out.g2 = out.g2.add(&R2Coord::scalar(c.b)),
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, g: &UPlusElem, h: &UPlusElem) -> Result<UPlusElem> {
        let mut out = g.clone();
        for r in [
            RootElem::U1(h.g1.clone()),
            RootElem::U2(h.g2.clone()),
            RootElem::U3(h.g3.clone()),
            RootElem::U4(h.g4.clone()),
        ] {
            let zero = match &r {
                RootElem::U1(c) | RootElem::U3(c) => c.is_zero(),
                RootElem::U2(c) | RootElem::U4(c) => c.is_zero(),
            };
            if !zero {
                out = self.mul_root(&out, &r)?;
            }
        }
        Ok(out)
    }

    /// Product of a sequence of root elements, collected left to right.
    pub fn word(&self, roots: &[RootElem]) -> Result<UPlusElem> {
        roots
            .iter()
            .try_fold(UPlusElem::identity(), |acc, r| self.mul_root(&acc, r))
    }

    /// `g^-1 = g4 g3 g2 g1` collected.
    pub fn inv(&self, g: &UPlusElem) -> Result<UPlusElem> {
        self.word(&[
            RootElem::U4(g.g4.clone()),
            RootElem::U3(g.g3.clone()),
            RootElem::U2(g.g2.clone()),
            RootElem::U1(g.g1.clone()),
        ])
    }

    /// `[g, h] = g^-1 h^-1 g h`.
    pub fn commutator(&self, g: &UPlusElem, h: &UPlusElem) -> Result<UPlusElem> {
        let gi = self.inv(g)?;
        let hi = self.inv(h)?;
        let a = self.mul(&gi, &hi)?;
        let b = self.mul(&a, g)?;
        self.mul(&b, h)
    }

    /// Conjugate `h^-1 g h`.
    pub fn conjugate(&self, g: &UPlusElem, h: &UPlusElem) -> Result<UPlusElem> {
        let hi = self.inv(h)?;
        self.mul(&self.mul(&hi, g)?, h)
    }

    pub fn is_member(&self, g: &UPlusElem) -> bool {
        g.g1.is_member(&self.inst)
            && g.g2.is_member()
            && g.g3.is_member(&self.inst)
            && g.g4.is_member()
    }

    /// The image under the polarity on root groups: `U1 -> U4`, `U2 -> U3`,
    /// `U3 -> U2`, `U4 -> U1`, re-collected into normal form.
    pub fn rho_star(&self, g: &UPlusElem) -> Result<UPlusElem> {
        self.word(&[
            RootElem::U4(self.rho_r1(&g.g1)?),
            RootElem::U3(self.rho_r2(&g.g2)?),
            RootElem::U2(self.rho_r1(&g.g3)?),
            RootElem::U1(self.rho_r2(&g.g4)?),
        ])
    }

    /// `(x,y,b) -> (beta x^theta, beta y^theta, b^(2 theta))`.
    pub fn rho_r1(&self, c: &R1Coord) -> Result<R2Coord> {
        let i = &self.inst;
        Ok(R2Coord::new(
            i.theta_l(&c.x)?.scale(&i.beta),
            i.theta_l(&c.y)?.scale(&i.beta),
            c.b.pow_2theta(),
        ))
    }

    /// `(u,v,a) -> (alpha^-1 u^(2 theta), alpha^-1 v^(2 theta), a^theta)`.
    pub fn rho_r2(&self, c: &R2Coord) -> Result<R1Coord> {
        let i = &self.inst;
        let ai = i.alpha_inv();
        Ok(R1Coord::new(
            i.pow_2theta(&c.u).scale(&ai),
            i.pow_2theta(&c.v).scale(&ai),
            c.a.theta()?,
        ))
    }
}

/// Position in the lower central series filtration: `1` for elements with a
/// nonzero `U1` or `U4` part, `2` when only `U2`/`U3` carry `L`-slot data,
/// `3` when only the scalar slots of `U2`/`U3` survive, and `4` for the
/// identity (which lies in every term).
pub fn filtration_degree(g: &UPlusElem) -> u8 {
    if g.is_identity() {
        4
    } else if !g.g1.is_zero() || !g.g4.is_zero() {
        1
    } else if !g.g2.is_scalar() || !g.g3.is_scalar() {
        2
    } else {
        3
    }
}
