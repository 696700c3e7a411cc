//! The Moufang set on absolute flags.

use std::fmt;

use crate::error::{Error, Result};
use crate::quadrangle::{Flag, QLine, Quadrangle};
use crate::root_groups::{R1Coord, R2Coord, Relations, UPlusElem};
use crate::uinf::{LabelForm, UInfElem};

/// `inf` or the label `[(x,y,a),(u,v,b)]` of an absolute flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MoufangPoint {
    Inf,
    Label(R1Coord, R2Coord),
}

impl MoufangPoint {
    pub fn zero() -> Self {
        MoufangPoint::Label(R1Coord::zero(), R2Coord::zero())
    }

    pub fn label(r1: R1Coord, r2: R2Coord) -> Self {
        MoufangPoint::Label(r1, r2)
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, MoufangPoint::Inf)
    }

    pub fn parts(&self) -> Option<(&R1Coord, &R2Coord)> {
        match self {
            MoufangPoint::Inf => None,
            MoufangPoint::Label(a, b) => Some((a, b)),
        }
    }

    pub fn as_uinf(&self) -> Option<UInfElem> {
        self.parts()
            .map(|(a, b)| UInfElem::new(a.clone(), b.clone()))
    }

    pub fn is_suzuki_tits(&self) -> bool {
        self.parts()
            .is_none_or(|(a, b)| a.is_scalar() && b.is_scalar())
    }
}

impl From<UInfElem> for MoufangPoint {
    fn from(g: UInfElem) -> Self {
        MoufangPoint::Label(g.r1, g.r2)
    }
}

impl fmt::Display for MoufangPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoufangPoint::Inf => write!(f, "inf"),
            MoufangPoint::Label(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MoufangSet {
    pub quad: Quadrangle,
    pub form: LabelForm,
}

impl MoufangSet {
    pub fn new(rel: Relations) -> Self {
        MoufangSet {
            quad: Quadrangle::new(rel),
            form: LabelForm::default(),
        }
    }

    pub fn with_form(mut self, form: LabelForm) -> Self {
        self.form = form;
        self
    }

    pub fn rel(&self) -> &Relations {
        &self.quad.rel
    }

    pub fn embed(&self, g: &UInfElem) -> Result<UPlusElem> {
        self.rel().uinf_embed_with(g, self.form)
    }

    /// Product in `U_inf`, with the closure check on the result.
    pub fn mul(&self, g: &UInfElem, h: &UInfElem) -> Result<UInfElem> {
        let p = self.rel().mul(&self.embed(g)?, &self.embed(h)?)?;
        self.rel().uinf_extract(&p, self.form)
    }

    pub fn inv(&self, g: &UInfElem) -> Result<UInfElem> {
        let p = self.rel().inv(&self.embed(g)?)?;
        self.rel().uinf_extract(&p, self.form)
    }

    pub fn commutator(&self, g: &UInfElem, h: &UInfElem) -> Result<UInfElem> {
        let p = self.rel().commutator(&self.embed(g)?, &self.embed(h)?)?;
        self.rel().uinf_extract(&p, self.form)
    }

    pub fn flag(&self, p: &MoufangPoint) -> Result<Flag> {
        match p.as_uinf() {
            None => Ok(Flag::base()),
            Some(g) => self.quad.act_flag(&self.embed(&g)?, &Flag::zero()),
        }
    }

    /// The label of an absolute flag.
    pub fn label_of(&self, f: &Flag) -> Result<MoufangPoint> {
        if *f == Flag::base() {
            return Ok(MoufangPoint::Inf);
        }
        if !self.quad.is_absolute(f)? {
            return Err(Error::Precondition(format!("{f} is not absolute")));
        }
        match &f.l {
            QLine::L3(k, b, _) => {
                let g = self.inv(&UInfElem::new(k.clone(), b.clone()))?;
                Ok(MoufangPoint::Label(g.r1, g.r2))
            }
            _ => Err(Error::Precondition(format!(
                "absolute flag {f} not opposite the base flag"
            ))),
        }
    }

    pub fn act(&self, p: &MoufangPoint, g: &UInfElem) -> Result<MoufangPoint> {
        match p.as_uinf() {
            None => Ok(MoufangPoint::Inf),
            Some(h) => Ok(self.mul(&h, g)?.into()),
        }
    }

    /// The element of `U_inf` carrying `p` to `q`.
    pub fn divide(&self, p: &MoufangPoint, q: &MoufangPoint) -> Result<UInfElem> {
        match (p.as_uinf(), q.as_uinf()) {
            (Some(g), Some(h)) => self.mul(&self.inv(&g)?, &h),
            _ => Err(Error::Precondition("U_inf fixes inf".into())),
        }
    }
}
