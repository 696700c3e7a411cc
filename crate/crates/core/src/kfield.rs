//! The ground field `K = GF(2)(s, t)` with the Tits endomorphism
//! `phi: s -> t, t -> s^2` and its inverse `theta` on `K' = phi(K) = GF(2)(s^2, t)`.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::poly2::Poly2;

/// A reduced fraction `num / den` in `GF(2)(s, t)`.
///
/// Over GF(2) the only unit is 1, so a coprime pair is already canonical and
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KElem {
    num: Poly2,
    den: Poly2,
}

impl KElem {
    pub fn zero() -> Self {
        KElem {
            num: Poly2::zero(),
            den: Poly2::one(),
        }
    }

    pub fn one() -> Self {
        KElem::from_poly(Poly2::one())
    }

    pub fn s() -> Self {
        KElem::from_poly(Poly2::s())
    }

    pub fn t() -> Self {
        KElem::from_poly(Poly2::t())
    }

    pub fn from_poly(num: Poly2) -> Self {
        KElem {
            num,
            den: Poly2::one(),
        }
    }

    pub fn new(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(KElem::reduced(num, den))
    }

    fn reduced(num: Poly2, den: Poly2) -> Self {
        if num.is_zero() {
            return KElem::zero();
        }
        if den.is_one() {
            return KElem { num, den };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            KElem { num, den }
        } else {
            KElem {
                num: num.div_exact(&g).expect("gcd divides numerator"),
                den: den.div_exact(&g).expect("gcd divides denominator"),
            }
        }
    }

    pub fn num(&self) -> &Poly2 {
        &self.num
    }

    pub fn den(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &KElem) -> KElem {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // With g = gcd(b, d), only gcd(num, g) can be nontrivial.
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if num.is_zero() {
                return KElem::zero();
            }
            return KElem {
                num,
                den: self.den.mul(&other.den),
            };
        }
        let b = self.den.div_exact(&g).unwrap();
        let d = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d).add(&other.num.mul(&b));
        if num.is_zero() {
            return KElem::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            KElem {
                num,
                den: b.mul(&d).mul(&g),
            }
        } else {
            KElem {
                num: num.div_exact(&h).unwrap(),
                den: b.mul(&d).mul(&g.div_exact(&h).unwrap()),
            }
        }
    }

    pub fn mul(&self, other: &KElem) -> KElem {
        if self.is_zero() || other.is_zero() {
            return KElem::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return KElem::from_poly(self.num.mul(&other.num));
        }
        // Cross-cancel first to keep the gcd inputs small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        KElem {
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        }
    }

    pub fn square(&self) -> KElem {
        KElem {
            num: self.num.square(),
            den: self.den.square(),
        }
    }

    pub fn inv(&self) -> Result<KElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(KElem {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn div(&self, other: &KElem) -> Result<KElem> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<KElem> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = KElem::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.square();
            n >>= 1;
        }
        Ok(acc)
    }

    /// The Tits endomorphism: substitute `s -> t`, `t -> s^2`.
    pub fn phi(&self) -> KElem {
        let m = |p: &Poly2| p.map_terms(|i, j| (2 * j, i));
        KElem {
            num: m(&self.num),
            den: m(&self.den),
        }
    }

    /// Decompose as `g + s*h` with `g, h` in `GF(2)(s^2, t)`. Returns the
    /// unreduced even numerators of `g` and `h` over a shared even denominator.
    fn decompose_raw(&self) -> (Poly2, Poly2, Poly2) {
        let (p0, p1) = self.num.split_s_parity();
        let (q0, q1) = self.den.split_s_parity();
        let s2 = Poly2::monomial(2, 0);
        let g = p0.mul(&q0).add(&s2.mul(&p1).mul(&q1));
        let h = p0.mul(&q1).add(&p1.mul(&q0));
        let den = q0.square().add(&s2.mul(&q1.square()));
        (g, h, den)
    }

    /// `f = g + s*h` with `g, h` in `K'`; `f` lies in `K'` iff `h = 0`.
    pub fn kprime_decompose(&self) -> (KElem, KElem) {
        let (g, h, den) = self.decompose_raw();
        (KElem::reduced(g, den.clone()), KElem::reduced(h, den))
    }

    pub fn in_kprime(&self) -> bool {
        if self.num.is_even_in_s() && self.den.is_even_in_s() {
            return true;
        }
        self.decompose_raw().1.is_zero()
    }

    /// Inverse of `phi` on `K'`: rewrite in `s^2, t` and substitute `s^2 -> t`, `t -> s`.
    pub fn theta(&self) -> Result<KElem> {
        let (num, den) = if self.num.is_even_in_s() && self.den.is_even_in_s() {
            (self.num.clone(), self.den.clone())
        } else {
            let (g, h, den) = self.decompose_raw();
            if !h.is_zero() {
                return Err(Error::NotInSubfield {
                    field: "K'",
                    value: self.to_string(),
                });
            }
            (g, den)
        };
        let m = |p: &Poly2| p.map_terms(|i, j| (j, i / 2));
        Ok(KElem::reduced(m(&num), m(&den)))
    }

    /// `x^(2 theta)`, which equals `phi(x)`.
    pub fn pow_2theta(&self) -> KElem {
        self.phi()
    }

    pub fn sqrt(&self) -> Option<KElem> {
        Some(KElem {
            num: self.num.sqrt()?,
            den: self.den.sqrt()?,
        })
    }

    /// Largest total degree of numerator and denominator.
    pub fn height(&self) -> usize {
        self.num
            .total_degree()
            .unwrap_or(0)
            .max(self.den.total_degree().unwrap_or(0))
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly2| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &KElem {
    type Output = KElem;
    fn add(self, rhs: &KElem) -> KElem {
        KElem::add(self, rhs)
    }
}

impl Mul for &KElem {
    type Output = KElem;
    fn mul(self, rhs: &KElem) -> KElem {
        KElem::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> KElem {
        KElem::s()
    }
    fn t() -> KElem {
        KElem::t()
    }

    #[test]
    fn square_over_root_normalizes() {
        let n = s().square().add(&t().square());
        let d = s().add(&t());
        assert_eq!(n.div(&d).unwrap(), d);
    }

    #[test]
    fn characteristic_two() {
        let a = s()
            .mul(&t())
            .add(&KElem::one())
            .div(&t().add(&s().square()))
            .unwrap();
        assert!(a.add(&a).is_zero());
    }

    #[test]
    fn cancellation() {
        let a = s().inv().unwrap().mul(&s().div(&t()).unwrap());
        assert_eq!(a, t().inv().unwrap());
    }

    #[test]
    fn inverse_of_zero_is_error() {
        assert_eq!(KElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn decompose_members_and_nonmembers() {
        assert_eq!(t().kprime_decompose(), (t(), KElem::zero()));
        assert_eq!(s().kprime_decompose(), (KElem::zero(), KElem::one()));
        // 1/(s+t) = (s+t)/(s^2+t^2)
        let f = s().add(&t()).inv().unwrap();
        let den = s().square().add(&t().square());
        let (g, h) = f.kprime_decompose();
        assert_eq!(g, t().div(&den).unwrap());
        assert_eq!(h, den.inv().unwrap());
        assert!(!f.in_kprime());
    }

    #[test]
    fn phi_and_theta_on_generators() {
        assert_eq!(s().mul(&t()).phi(), s().square().mul(&t()));
        assert_eq!(s().add(&t()).phi().phi(), s().add(&t()).square());
        assert_eq!(t().theta().unwrap(), s());
        assert!(s().theta().is_err());
        assert_eq!(s().pow_2theta(), t());
    }

    #[test]
    fn theta_of_odd_representation_member() {
        // (s^3 + s t) / (s) = s^2 + t lies in K' even though the input is odd in s.
        let f = KElem::new(Poly2::from_terms([(3, 0), (1, 1)]), Poly2::s()).unwrap();
        assert_eq!(f.theta().unwrap(), t().add(&s()));
    }
}
