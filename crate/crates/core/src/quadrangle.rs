//! The quadrangle as a coset geometry of `U+` on a fixed apartment.
//!
//! The apartment is the cycle
//! `(inf) [inf] (0) [0,0] (0,0,0) [0,0,0] (0,0) [0]`, vertices `v0..v7`.
//! Each element is `g . v_i` for `g` in `U+`; coordinates are read off the
//! normal form of `g` (or of `g^-1` where the stabilizer sits on the left).

use std::fmt;

use crate::error::{Error, Result};
use crate::kfield::KElem;
use crate::lfield::LElem;
use crate::linalg::{self, Solution};
use crate::root_groups::{R1Coord, R2Coord, Relations, RootElem, UPlusElem};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QPoint {
    Inf,
    /// `(a)`, `a` in `U4`.
    P1(R2Coord),
    /// `(k, b)`, `k` in `U1`, `b` in `U2`.
    P2(R1Coord, R2Coord),
    /// `(a, l, a')` in `U4 x U3 x U2`.
    P3(R2Coord, R1Coord, R2Coord),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QLine {
    Inf,
    /// `[k]`, `k` in `U1`.
    L1(R1Coord),
    /// `[a, l]` in `U4 x U3`.
    L2(R2Coord, R1Coord),
    /// `[k, b, k']` in `U1 x U2 x U3`.
    L3(R1Coord, R2Coord, R1Coord),
}

impl QPoint {
    pub fn arity(&self) -> usize {
        match self {
            QPoint::Inf => 0,
            QPoint::P1(..) => 1,
            QPoint::P2(..) => 2,
            QPoint::P3(..) => 3,
        }
    }

    pub fn zero() -> Self {
        QPoint::P3(R2Coord::zero(), R1Coord::zero(), R2Coord::zero())
    }

    pub fn is_suzuki_tits(&self) -> bool {
        match self {
            QPoint::Inf => true,
            QPoint::P1(a) => a.is_scalar(),
            QPoint::P2(k, b) => k.is_scalar() && b.is_scalar(),
            QPoint::P3(a, l, c) => a.is_scalar() && l.is_scalar() && c.is_scalar(),
        }
    }
}

impl QLine {
    pub fn arity(&self) -> usize {
        match self {
            QLine::Inf => 0,
            QLine::L1(..) => 1,
            QLine::L2(..) => 2,
            QLine::L3(..) => 3,
        }
    }

    pub fn zero() -> Self {
        QLine::L3(R1Coord::zero(), R2Coord::zero(), R1Coord::zero())
    }

    pub fn is_suzuki_tits(&self) -> bool {
        match self {
            QLine::Inf => true,
            QLine::L1(k) => k.is_scalar(),
            QLine::L2(a, l) => a.is_scalar() && l.is_scalar(),
            QLine::L3(k, b, c) => k.is_scalar() && b.is_scalar() && c.is_scalar(),
        }
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QPoint::Inf => write!(f, "(inf)"),
            QPoint::P1(a) => write!(f, "({a})"),
            QPoint::P2(k, b) => write!(f, "({k}, {b})"),
            QPoint::P3(a, l, c) => write!(f, "({a}, {l}, {c})"),
        }
    }
}

impl fmt::Display for QLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QLine::Inf => write!(f, "[inf]"),
            QLine::L1(k) => write!(f, "[{k}]"),
            QLine::L2(a, l) => write!(f, "[{a}, {l}]"),
            QLine::L3(k, b, c) => write!(f, "[{k}, {b}, {c}]"),
        }
    }
}

/// A point together with an incident line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    pub p: QPoint,
    pub l: QLine,
}

impl Flag {
    pub fn new(p: QPoint, l: QLine) -> Self {
        Flag { p, l }
    }

    pub fn base() -> Self {
        Flag::new(QPoint::Inf, QLine::Inf)
    }

    pub fn zero() -> Self {
        Flag::new(QPoint::zero(), QLine::zero())
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.p, self.l)
    }
}

#[derive(Clone, Debug)]
pub struct Quadrangle {
    pub rel: Relations,
}

fn r1_vec(w: &[KElem]) -> R1Coord {
    R1Coord::new(
        LElem::new(w[0].clone(), w[1].clone()),
        LElem::new(w[2].clone(), w[3].clone()),
        w[4].clone(),
    )
}

fn push_l(out: &mut Vec<KElem>, z: &LElem) {
    out.push(z.c0.clone());
    out.push(z.c1.clone());
}

impl Quadrangle {
    pub fn new(rel: Relations) -> Self {
        Quadrangle { rel }
    }

    fn w(&self, roots: &[RootElem]) -> Result<UPlusElem> {
        self.rel.word(roots)
    }

    /// A representative `g` and apartment vertex `v` with `p = g . v`.
    pub fn point_rep(&self, p: &QPoint) -> Result<(UPlusElem, usize)> {
        use RootElem::*;
        Ok(match p {
            QPoint::Inf => (UPlusElem::identity(), 0),
            QPoint::P1(a) => (UPlusElem::u4(a.clone()), 2),
            QPoint::P2(k, b) => (self.w(&[U1(k.clone()), U2(b.clone())])?, 6),
            QPoint::P3(a, l, c) => (self.w(&[U4(a.clone()), U3(l.clone()), U2(c.clone())])?, 4),
        })
    }

    pub fn line_rep(&self, l: &QLine) -> Result<(UPlusElem, usize)> {
        use RootElem::*;
        Ok(match l {
            QLine::Inf => (UPlusElem::identity(), 1),
            QLine::L1(k) => (UPlusElem::u1(k.clone()), 7),
            QLine::L2(a, m) => (self.w(&[U4(a.clone()), U3(m.clone())])?, 3),
            QLine::L3(k, b, c) => (self.w(&[U1(k.clone()), U2(b.clone()), U3(c.clone())])?, 5),
        })
    }

    /// Canonical coordinates of `g . v` for a point vertex `v`.
    pub fn point_at(&self, g: &UPlusElem, v: usize) -> Result<QPoint> {
        Ok(match v {
            0 => QPoint::Inf,
            2 => QPoint::P1(g.g4.clone()),
            6 => QPoint::P2(g.g1.clone(), g.g2.clone()),
            4 => {
                let n = self.rel.inv(g)?;
                QPoint::P3(n.g4, n.g3, n.g2)
            }
            _ => return Err(Error::Precondition(format!("v{v} is not a point vertex"))),
        })
    }

    pub fn line_at(&self, g: &UPlusElem, v: usize) -> Result<QLine> {
        Ok(match v {
            1 => QLine::Inf,
            7 => QLine::L1(g.g1.clone()),
            5 => QLine::L3(g.g1.clone(), g.g2.clone(), g.g3.clone()),
            3 => {
                let n = self.rel.inv(g)?;
                QLine::L2(n.g4, n.g3)
            }
            _ => return Err(Error::Precondition(format!("v{v} is not a line vertex"))),
        })
    }

    /// The right action `p^g`, so that `p^(gh) = (p^g)^h`.
    pub fn act_point(&self, g: &UPlusElem, p: &QPoint) -> Result<QPoint> {
        let (r, v) = self.point_rep(p)?;
        self.point_at(&self.rel.mul(&self.rel.inv(g)?, &r)?, v)
    }

    pub fn act_line(&self, g: &UPlusElem, l: &QLine) -> Result<QLine> {
        let (r, v) = self.line_rep(l)?;
        self.line_at(&self.rel.mul(&self.rel.inv(g)?, &r)?, v)
    }

    pub fn act_flag(&self, g: &UPlusElem, f: &Flag) -> Result<Flag> {
        Ok(Flag::new(self.act_point(g, &f.p)?, self.act_line(g, &f.l)?))
    }

    /// `rho(g . v_i) = rho*(g) . v_(1-i)`.
    pub fn polarity_point(&self, p: &QPoint) -> Result<QLine> {
        let (r, v) = self.point_rep(p)?;
        self.line_at(&self.rel.rho_star(&r)?, (9 - v) % 8)
    }

    pub fn polarity_line(&self, l: &QLine) -> Result<QPoint> {
        let (r, v) = self.line_rep(l)?;
        self.point_at(&self.rel.rho_star(&r)?, (9 - v) % 8)
    }

    pub fn is_absolute(&self, f: &Flag) -> Result<bool> {
        Ok(self.polarity_point(&f.p)? == f.l && self.polarity_line(&f.l)? == f.p)
    }

    pub fn incident(&self, p: &QPoint, l: &QLine) -> Result<bool> {
        use QLine as L;
        use QPoint as P;
        Ok(match (p, l) {
            (P::Inf, L::Inf | L::L1(_)) => true,
            (P::P1(_), L::Inf) => true,
            (P::P1(a), L::L2(b, _)) => a == b,
            (P::P2(k, _), L::L1(m)) => k == m,
            (P::P2(k, b), L::L3(m, c, _)) => k == m && b == c,
            (P::P3(a, l, _), L::L2(b, m)) => a == b && l == m,
            (P::P3(..), L::L3(..)) => {
                let (h, _) = self.point_rep(p)?;
                let (g, _) = self.line_rep(l)?;
                let n = self.rel.mul(&self.rel.inv(&h)?, &g)?;
                n.g3.is_zero() && n.g2.is_zero()
            }
            _ => false,
        })
    }

    /// The point on `[k, b, k']` with first coordinate `a`.
    pub fn point_on_l3(&self, l: &QLine, a: &R2Coord) -> Result<QPoint> {
        let (g, v) = self.line_rep(l)?;
        if v != 5 {
            return Err(Error::Precondition(format!("{l} is not a line [k,b,k']")));
        }
        self.point_at(&self.rel.mul_root(&g, &RootElem::U4(a.clone()))?, 4)
    }

    /// The line through `(a, l, a')` with first coordinate `k`.
    pub fn line_through_p3(&self, p: &QPoint, k: &R1Coord) -> Result<QLine> {
        let (g, v) = self.point_rep(p)?;
        if v != 4 {
            return Err(Error::Precondition(format!("{p} is not a point (a,l,a')")));
        }
        self.line_at(&self.rel.mul_root(&g, &RootElem::U1(k.clone()))?, 5)
    }

    /// Solve for `w` in `U1` with `(w d w)` having `U3` part `q` and, when
    /// given, `U2` part `p` in its `L` slots.
    fn solve_w(&self, d: &R2Coord, p: Option<&R2Coord>, q: &R1Coord) -> Result<Option<R1Coord>> {
        let mut target = Vec::new();
        if let Some(p) = p {
            push_l(&mut target, &p.u);
            push_l(&mut target, &p.v);
        }
        push_l(&mut target, &q.x);
        push_l(&mut target, &q.y);
        target.push(q.b.clone());
        let want_p = p.is_some();
        let sol = linalg::solve_affine(5, &target, |v| {
            let w = r1_vec(v);
            let (pp, qq) = self.rel.comm14_raw(&w, d);
            let qq = qq.add(&self.rel.comm24_raw(&pp, d));
            let mut out = Vec::with_capacity(9);
            if want_p {
                push_l(&mut out, &pp.u);
                push_l(&mut out, &pp.v);
            }
            push_l(&mut out, &qq.x);
            push_l(&mut out, &qq.y);
            out.push(qq.b);
            Ok(out)
        })?;
        match sol {
            Solution::Unique(v) => {
                let w = r1_vec(&v);
                Ok(w.is_member(&self.rel.inst).then_some(w))
            }
            Solution::Inconsistent => Ok(None),
            Solution::Family(..) => Err(Error::Unsupported(format!(
                "degenerate linear system for the line through (0,0,0) at {d}"
            ))),
        }
    }

    fn collinear_p3(&self, p: &QPoint, q: &QPoint) -> Result<Option<QLine>> {
        use RootElem::*;
        let (r, _) = self.point_rep(p)?;
        let (r2, _) = self.point_rep(q)?;
        let QPoint::P3(d, c3, c2) = self.point_at(&self.rel.mul(&self.rel.inv(&r)?, &r2)?, 4)?
        else {
            unreachable!()
        };
        if d.is_zero() {
            return Ok(if c3.is_zero() {
                Some(self.line_at(&r, 3)?)
            } else {
                None
            });
        }
        let y = self.w(&[U4(d.clone()), U3(c3), U2(c2)])?;
        let Some(w) = self.solve_w(&d, Some(&y.g2), &y.g3)? else {
            return Ok(None);
        };
        if self.w(&[U1(w.clone()), U4(d), U1(w.clone())])? != y {
            return Ok(None);
        }
        Ok(Some(self.line_at(&self.rel.mul_root(&r, &U1(w))?, 5)?))
    }

    /// The line joining `p` and `q`, or `None` when they are not collinear.
    pub fn collinear(&self, p: &QPoint, q: &QPoint) -> Result<Option<QLine>> {
        use QLine as L;
        use QPoint as P;
        if p == q {
            return Err(Error::Precondition(format!(
                "collinear({p}, {p}): points coincide"
            )));
        }
        let (p, q) = if p.arity() <= q.arity() {
            (p, q)
        } else {
            (q, p)
        };
        Ok(match (p, q) {
            (P::Inf, P::P1(_)) | (P::P1(_), P::P1(_)) => Some(L::Inf),
            (P::Inf, P::P2(k, _)) => Some(L::L1(k.clone())),
            (P::P1(a), P::P3(b, l, _)) if a == b => Some(L::L2(a.clone(), l.clone())),
            (P::P2(k, _), P::P2(m, _)) if k == m => Some(L::L1(k.clone())),
            (P::P2(k, b), P::P3(..)) => {
                let (r, _) = self.point_rep(q)?;
                let m = self.rel.mul_root(&r, &RootElem::U1(k.clone()))?;
                (m.g2 == *b).then(|| L::L3(k.clone(), b.clone(), m.g3.clone()))
            }
            (P::P3(a, l, _), P::P3(b, m, _)) if a == b && l == m => {
                Some(L::L2(a.clone(), l.clone()))
            }
            (P::P3(..), P::P3(..)) => self.collinear_p3(p, q)?,
            _ => None,
        })
    }

    /// The point common to `l` and `m`, or `None`.
    pub fn concurrent(&self, l: &QLine, m: &QLine) -> Result<Option<QPoint>> {
        let p = self.polarity_line(l)?;
        let q = self.polarity_line(m)?;
        self.collinear(&p, &q)?
            .map(|j| self.polarity_line(&j))
            .transpose()
    }

    /// The point on `[a, l]` collinear with `(a', l', a'')`, `a != a'`.
    fn project_p3_l2(&self, p: &QPoint, a: &R2Coord, l: &R1Coord) -> Result<QPoint> {
        use RootElem::*;
        let r = self.w(&[U4(a.clone()), U3(l.clone())])?;
        let (h, _) = self.point_rep(p)?;
        let QPoint::P3(d, e3, e2) = self.point_at(&self.rel.mul(&self.rel.inv(&r)?, &h)?, 4)?
        else {
            unreachable!()
        };
        let target = e3.add(&self.rel.comm24_raw(&e2, &d));
        let w = self.solve_w(&d, None, &target)?.ok_or_else(|| {
            Error::Unsupported(format!(
                "no line through (0,0,0) reaches {p} from [{a}, {l}]"
            ))
        })?;
        let c = e2.add(&self.rel.comm14_raw(&w, &d).0);
        Ok(QPoint::P3(a.clone(), l.clone(), c))
    }

    /// Projection of `(d, c, c')` onto `[0,0,0]` after translation, for scalar
    /// coordinates: the foot is `(d + c^2/c', 0, 0)`.
    fn project_suzuki_tits(&self, p: &QPoint, l: &QLine) -> Result<Option<QPoint>> {
        if !p.is_suzuki_tits() || !l.is_suzuki_tits() {
            return Ok(None);
        }
        let (r, _) = self.line_rep(l)?;
        let (h, _) = self.point_rep(p)?;
        let QPoint::P3(d, c3, c2) = self.point_at(&self.rel.mul(&self.rel.inv(&r)?, &h)?, 4)?
        else {
            unreachable!()
        };
        if c2.a.is_zero() {
            return Ok(None);
        }
        let a = d.a.add(&c3.b.square().div(&c2.a)?);
        let foot = self.point_on_l3(l, &R2Coord::scalar(a))?;
        Ok(self.collinear(p, &foot)?.is_some().then_some(foot))
    }

    /// The unique point on `l` collinear with `p`.
    pub fn project(&self, p: &QPoint, l: &QLine) -> Result<QPoint> {
        use QLine as L;
        use QPoint as P;
        if self.incident(p, l)? {
            return Err(Error::Precondition(format!("{p} lies on {l}")));
        }
        Ok(match (p, l) {
            (P::P2(..), L::Inf) => P::Inf,
            (P::P3(a, ..), L::Inf) => P::P1(a.clone()),
            (P::P1(_) | P::P2(..), L::L1(_)) => P::Inf,
            (P::P3(..), L::L1(k)) => {
                let (r, _) = self.point_rep(p)?;
                P::P2(
                    k.clone(),
                    self.rel.mul_root(&r, &RootElem::U1(k.clone()))?.g2,
                )
            }
            (P::Inf | P::P1(_), L::L2(a, _)) => P::P1(a.clone()),
            (P::P2(k, b), L::L2(a, m)) => {
                use RootElem::*;
                let x = self.w(&[U4(a.clone()), U3(m.clone()), U1(k.clone())])?;
                P::P3(a.clone(), m.clone(), b.add(&x.g2))
            }
            (P::P3(b, ..), L::L2(a, _)) if a == b => P::P1(a.clone()),
            (P::P3(..), L::L2(a, m)) => self.project_p3_l2(p, a, m)?,
            (P::Inf, L::L3(k, b, _)) => P::P2(k.clone(), b.clone()),
            (P::P1(a), L::L3(..)) => self.point_on_l3(l, a)?,
            (P::P2(k, _), L::L3(m, b, _)) if k == m => P::P2(k.clone(), b.clone()),
            (P::P2(..), L::L3(..)) => {
                let rl = self.polarity_line(l)?;
                let rp = self.polarity_point(p)?;
                let foot = self.project(&rl, &rp)?;
                let join = self.collinear(&rl, &foot)?.ok_or_else(|| {
                    Error::Precondition(format!("projection {foot} not collinear with {rl}"))
                })?;
                self.polarity_line(&join)?
            }
            (P::P3(..), L::L3(k, b, _)) => {
                let kb = P::P2(k.clone(), b.clone());
                if self.collinear(p, &kb)?.is_some() {
                    kb
                } else if let Some(q) = self.project_suzuki_tits(p, l)? {
                    q
                } else {
                    return Err(Error::Unsupported(format!(
                        "projection of {p} onto {l}: the system is bilinear"
                    )));
                }
            }
            _ => unreachable!("incident pairs rejected above"),
        })
    }
}
