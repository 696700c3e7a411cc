//! The root group `U_inf` of the Moufang set, as a subgroup of `U+`.
//!
//! An element is fixed by its free parameters `(x,y,a)` in `U1` and
//! `(u,v,b)` in `U2`. The `U3` and `U4` parts follow, either from the
//! printed closed form or from the requirement that the element commutes
//! with the polarity.

use crate::error::{Error, Result};
use crate::lfield::LElem;
use crate::root_groups::{R1Coord, R2Coord, Relations, UPlusElem};

/// Free parameters `[(x,y,a),(u,v,b)]` of an element of `U_inf`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UInfElem {
    pub r1: R1Coord,
    pub r2: R2Coord,
}

impl UInfElem {
    pub fn new(r1: R1Coord, r2: R2Coord) -> Self {
        UInfElem { r1, r2 }
    }

    pub fn identity() -> Self {
        UInfElem::new(R1Coord::zero(), R2Coord::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.r1.is_zero() && self.r2.is_zero()
    }
}

/// Which derivation of the `U3` part to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum LabelForm {
    /// The closed form exactly as printed.
    Printed,
    /// The printed form with the second-slot term `x^(2 theta) x` read as
    /// `x^(2 theta) x̄`.
    Amended,
    /// The printed form with the norm term's leading `alpha` read as `a`.
    Corrected,
    /// Solved from `rho*(g) = g`.
    #[default]
    Centralizer,
}

/// Names of the summands in the printed `U3` part, in print order.
pub const G3_TERMS: [&str; 15] = [
    "g3.x: alpha^-1 u^(2theta)",
    "g3.x: a^(2theta) x",
    "g3.x: beta^2 xbar^(2theta) y",
    "g3.x: alpha beta^2 y^(2theta) ybar",
    "g3.y: alpha^-1 v^(2theta)",
    "g3.y: a^(2theta) y",
    "g3.y: x^(2theta) x",
    "g3.y: alpha y^(2theta) xbar",
    "g3.b: b^theta",
    "g3.b: a a^(2theta)",
    "g3.b: alpha beta (x^theta xbar^theta + alpha y^theta ybar^theta)",
    "g3.b: alpha beta^2 (y xbar^theta ybar^theta + ybar x^theta y^theta)",
    "g3.b: alpha beta (x x^theta ybar^theta + xbar xbar^theta y^theta)",
    "g3.b: u xbar^theta + ubar x^theta",
    "g3.b: alpha (v ybar^theta + vbar y^theta)",
];

impl Relations {
    /// `U4` part `(beta x^theta, beta y^theta, a^(2 theta))`.
    pub fn uinf_g4(&self, g: &UInfElem) -> Result<R2Coord> {
        self.rho_r1(&g.r1)
    }

    /// The fifteen printed summands of the `U3` part, grouped by slot
    /// (indices 0-3 feed `x`, 4-7 feed `y`, 8-14 feed `b`).
    pub fn uinf_g3_terms(&self, g: &UInfElem, form: LabelForm) -> Result<Vec<Term>> {
        let i = &self.inst;
        let (x, y, a) = (&g.r1.x, &g.r1.y, &g.r1.b);
        let (u, v, b) = (&g.r2.u, &g.r2.v, &g.r2.a);
        let (alpha, beta) = (&i.alpha, &i.beta);
        let ai = i.alpha_inv();
        let m = |p: &LElem, q: &LElem| i.mul(p, q);
        let (xt, yt) = (i.theta_l(x)?, i.theta_l(y)?);
        let (xbt, ybt) = (xt.conj(), yt.conj());
        let (x2t, y2t) = (i.pow_2theta(x), i.pow_2theta(y));
        let a2t = a.pow_2theta();
        let ab = alpha.mul(beta);
        let second_x = match form {
            LabelForm::Amended => x.conj(),
            _ => x.clone(),
        };
        let norm_coeff = match form {
            LabelForm::Corrected => a.mul(beta),
            _ => ab.clone(),
        };
        Ok(vec![
            Term::L(i.pow_2theta(u).scale(&ai)),
            Term::L(x.scale(&a2t)),
            Term::L(m(&x2t.conj(), y).scale(&beta.square())),
            Term::L(m(&y2t, &y.conj()).scale(&alpha.mul(&beta.square()))),
            Term::L(i.pow_2theta(v).scale(&ai)),
            Term::L(y.scale(&a2t)),
            Term::L(m(&x2t, &second_x)),
            Term::L(m(&y2t, &x.conj()).scale(alpha)),
            Term::K(b.theta()?),
            Term::K(a.mul(&a2t)),
            Term::K(norm_coeff.mul(&i.norm(&xt).add(&alpha.mul(&i.norm(&yt))))),
            Term::K(ab.mul(beta).mul(&m(&m(y, &xbt), &ybt).trace())),
            Term::K(ab.mul(&m(&m(x, &xt), &ybt).trace())),
            Term::K(m(u, &xbt).trace()),
            Term::K(alpha.mul(&m(v, &ybt).trace())),
        ])
    }

    fn sum_g3(terms: &[Term]) -> R1Coord {
        let mut out = R1Coord::zero();
        for (k, t) in terms.iter().enumerate() {
            match (k, t) {
                (0..=3, Term::L(z)) => out.x = out.x.add(z),
                (4..=7, Term::L(z)) => out.y = out.y.add(z),
                (_, Term::K(c)) => out.b = out.b.add(c),
                _ => unreachable!("term shape fixed by position"),
            }
        }
        out
    }

    /// `U3` part solved from the centralizer condition `rho*(g) = g`.
    pub fn uinf_g3_centralizer(&self, g: &UInfElem) -> Result<R1Coord> {
        let w = &g.r1;
        let rw = self.rho_r1(w)?;
        let rc = self.rho_r2(&g.r2)?;
        let (p, q) = self.comm14_raw(w, &rw);
        let c = self.comm24_raw(&p, &rw);
        let base = rc.add(&q).add(&c);
        let z = R2Coord::new(
            self.inst.theta_l(&base.x)?.scale(&self.inst.beta),
            self.inst.theta_l(&base.y)?.scale(&self.inst.beta),
            crate::kfield::KElem::zero(),
        );
        let corr = self.comm24_raw(&z, &rw);
        Ok(base.add(&corr))
    }

    pub fn uinf_g3(&self, g: &UInfElem, form: LabelForm) -> Result<R1Coord> {
        match form {
            LabelForm::Centralizer => self.uinf_g3_centralizer(g),
            _ => Ok(Self::sum_g3(&self.uinf_g3_terms(g, form)?)),
        }
    }

    pub fn uinf_embed_with(&self, g: &UInfElem, form: LabelForm) -> Result<UPlusElem> {
        Ok(UPlusElem {
            g1: g.r1.clone(),
            g2: g.r2.clone(),
            g3: self.uinf_g3(g, form)?,
            g4: self.uinf_g4(g)?,
        })
    }

    /// Re-extract free parameters, checking that the `U3`/`U4` parts have
    /// the shape demanded by `form`.
    pub fn uinf_extract(&self, h: &UPlusElem, form: LabelForm) -> Result<UInfElem> {
        let g = UInfElem::new(h.g1.clone(), h.g2.clone());
        let expected = self.uinf_embed_with(&g, form)?;
        if expected != *h {
            return Err(Error::Precondition(format!(
                "not of U_inf shape: got {h}, expected {expected}"
            )));
        }
        Ok(g)
    }
}

/// A single summand: an `L` value for the first two slots, a `K` value for the third.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    L(LElem),
    K(crate::kfield::KElem),
}
