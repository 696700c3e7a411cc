//! The separable quadratic extension `L = K[e]/(e^2 + e + delta)` and the
//! field instance binding `delta`, `phi(e)`, `beta` and `alpha`.

use std::fmt;

use crate::error::{Error, Result};
use crate::kfield::KElem;

/// `c0 + c1*e`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LElem {
    pub c0: KElem,
    pub c1: KElem,
}

impl LElem {
    pub fn new(c0: KElem, c1: KElem) -> Self {
        LElem { c0, c1 }
    }

    pub fn zero() -> Self {
        LElem::new(KElem::zero(), KElem::zero())
    }

    pub fn one() -> Self {
        LElem::from_k(KElem::one())
    }

    pub fn e() -> Self {
        LElem::new(KElem::zero(), KElem::one())
    }

    pub fn from_k(c0: KElem) -> Self {
        LElem::new(c0, KElem::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// Whether the element lies in `K` (no `e` part).
    pub fn in_k(&self) -> bool {
        self.c1.is_zero()
    }

    pub fn add(&self, other: &LElem) -> LElem {
        LElem::new(self.c0.add(&other.c0), self.c1.add(&other.c1))
    }

    pub fn scale(&self, k: &KElem) -> LElem {
        LElem::new(self.c0.mul(k), self.c1.mul(k))
    }

    /// `e -> e + 1`.
    pub fn conj(&self) -> LElem {
        LElem::new(self.c0.add(&self.c1), self.c1.clone())
    }

    /// `z + conj(z)`.
    pub fn trace(&self) -> KElem {
        self.c1.clone()
    }

    pub fn height(&self) -> usize {
        self.c0.height().max(self.c1.height())
    }
}

impl fmt::Display for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0.is_zero(), self.c1.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.c0),
            (true, false) if self.c1.is_one() => write!(f, "e"),
            (true, false) => write!(f, "({})*e", self.c1),
            (false, false) if self.c1.is_one() => write!(f, "{}+e", self.c0),
            (false, false) => write!(f, "{}+({})*e", self.c0, self.c1),
        }
    }
}

impl fmt::Debug for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The data fixing `(K, L, K', alpha, beta)` together with the Tits
/// endomorphism. On `K` the endomorphism is always `s -> t, t -> s^2`; on `L`
/// it is extended by the image `phi_e` of `e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldInstance {
    pub delta: KElem,
    pub phi_e: LElem,
    pub beta: KElem,
    pub alpha: KElem,
}

impl Default for FieldInstance {
    /// `delta = s + t`, `phi(e) = e + s`, `beta = s`, `alpha = t`.
    fn default() -> Self {
        FieldInstance {
            delta: KElem::s().add(&KElem::t()),
            phi_e: LElem::new(KElem::s(), KElem::one()),
            beta: KElem::s(),
            alpha: KElem::t(),
        }
    }
}

impl FieldInstance {
    pub fn mul(&self, a: &LElem, b: &LElem) -> LElem {
        let c11 = a.c1.mul(&b.c1);
        LElem::new(
            a.c0.mul(&b.c0).add(&self.delta.mul(&c11)),
            a.c0.mul(&b.c1).add(&a.c1.mul(&b.c0)).add(&c11),
        )
    }

    pub fn square(&self, a: &LElem) -> LElem {
        let c11 = a.c1.square();
        LElem::new(a.c0.square().add(&self.delta.mul(&c11)), c11)
    }

    /// `z * conj(z) = c0^2 + c0*c1 + delta*c1^2`.
    pub fn norm(&self, z: &LElem) -> KElem {
        z.c0.square()
            .add(&z.c0.mul(&z.c1))
            .add(&self.delta.mul(&z.c1.square()))
    }

    pub fn inv(&self, z: &LElem) -> Result<LElem> {
        let n = self.norm(z);
        Ok(z.conj().scale(&n.inv()?))
    }

    /// `z * conj(w) + w * conj(z)`, which lies in `K`.
    pub fn bilinear_trace(&self, z: &LElem, w: &LElem) -> KElem {
        self.mul(z, &w.conj()).trace()
    }

    /// The Tits endomorphism on `L`.
    pub fn phi_l(&self, z: &LElem) -> LElem {
        LElem::from_k(z.c0.phi()).add(&self.phi_e.scale(&z.c1.phi()))
    }

    /// Solve `phi(c0) + phi(c1)*phi_e = d` for the images `(phi(c0), phi(c1))`.
    fn phi_preimage_parts(&self, z: &LElem) -> Result<(KElem, KElem)> {
        let (p, q) = (&self.phi_e.c0, &self.phi_e.c1);
        let f1 = z.c1.div(q)?;
        let f0 = z.c0.add(&p.mul(&f1));
        Ok((f0, f1))
    }

    pub fn in_lprime(&self, z: &LElem) -> bool {
        match self.phi_preimage_parts(z) {
            Ok((f0, f1)) => f0.in_kprime() && f1.in_kprime(),
            Err(_) => false,
        }
    }

    /// Inverse of `phi` on `L' = phi(L)`.
    pub fn theta_l(&self, z: &LElem) -> Result<LElem> {
        let (f0, f1) = self.phi_preimage_parts(z)?;
        let not_member = || Error::NotInSubfield {
            field: "L'",
            value: z.to_string(),
        };
        Ok(LElem::new(
            f0.theta().map_err(|_| not_member())?,
            f1.theta().map_err(|_| not_member())?,
        ))
    }

    /// `z^(2 theta) = phi(z)`.
    pub fn pow_2theta(&self, z: &LElem) -> LElem {
        self.phi_l(z)
    }

    pub fn beta_inv(&self) -> KElem {
        self.beta.inv().expect("beta is nonzero")
    }

    pub fn alpha_inv(&self) -> KElem {
        self.alpha.inv().expect("alpha is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst() -> FieldInstance {
        FieldInstance::default()
    }

    #[test]
    fn norm_and_trace_of_generators() {
        let i = inst();
        assert_eq!(i.norm(&LElem::e()), KElem::s().add(&KElem::t()));
        let z = LElem::new(KElem::s(), KElem::one());
        assert!(z.add(&z.conj()).c0.is_one());
        assert!(z.trace().is_one());
    }

    #[test]
    fn inverse_of_e() {
        let i = inst();
        let expected = LElem::new(KElem::one(), KElem::one()).scale(&i.delta.inv().unwrap());
        let inv = i.inv(&LElem::e()).unwrap();
        assert_eq!(inv, expected);
        assert_eq!(i.mul(&inv, &LElem::e()), LElem::one());
        assert!(i.inv(&LElem::zero()).is_err());
    }

    #[test]
    fn phi_on_e_is_frobenius_after_two_steps() {
        let i = inst();
        let e = LElem::e();
        assert_eq!(i.phi_l(&e), LElem::new(KElem::s(), KElem::one()));
        assert_eq!(i.phi_l(&i.phi_l(&e)), i.square(&e));
    }

    #[test]
    fn lprime_membership_of_e() {
        let i = inst();
        assert!(!i.in_lprime(&LElem::e()));
        assert!(i.in_lprime(&LElem::new(KElem::s(), KElem::one())));
        assert_eq!(
            i.theta_l(&LElem::new(KElem::s(), KElem::one())).unwrap(),
            LElem::e()
        );
    }
}
