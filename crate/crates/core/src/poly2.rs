//! Polynomials in `GF(2)[s, t]`.
//!
//! Stored as a vector of `GF(2)[t]` coefficients indexed by the power of `s`,
//! with no trailing zero coefficient. Since every nonzero coefficient in
//! GF(2) is 1, a term is just its exponent pair.

use std::fmt;

use crate::gf2x::Gf2x;
use crate::modgcd;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    coeffs: Vec<Gf2x>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2 {
            coeffs: vec![Gf2x::one()],
        }
    }

    pub fn s() -> Self {
        Poly2::monomial(1, 0)
    }

    pub fn t() -> Self {
        Poly2::monomial(0, 1)
    }

    /// `s^i t^j`
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut coeffs = vec![Gf2x::zero(); i + 1];
        coeffs[i] = Gf2x::monomial(j);
        Poly2 { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Gf2x>) -> Self {
        while coeffs.last().is_some_and(Gf2x::is_zero) {
            coeffs.pop();
        }
        Poly2 { coeffs }
    }

    /// Build from exponent pairs `(i, j)` meaning `s^i t^j`; repeated pairs cancel.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize)>>(terms: I) -> Self {
        let mut coeffs: Vec<Gf2x> = Vec::new();
        for (i, j) in terms {
            if coeffs.len() <= i {
                coeffs.resize(i + 1, Gf2x::zero());
            }
            let flip = !coeffs[i].coeff(j);
            coeffs[i].set_coeff(j, flip);
        }
        Poly2::from_coeffs(coeffs)
    }

    pub fn from_t_poly(c: Gf2x) -> Self {
        Poly2::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficients in `GF(2)[t]` of `s^0, s^1, ...`.
    pub fn coeffs(&self) -> &[Gf2x] {
        &self.coeffs
    }

    pub fn degree_s(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff_s(&self) -> Option<&Gf2x> {
        self.coeffs.last()
    }

    /// All terms `(i, j)` for `s^i t^j`, sorted by `i` then `j`.
    pub fn terms(&self) -> Vec<(usize, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.exponents().map(move |j| (i, j)))
            .collect()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().into_iter().map(|(i, j)| i + j).max()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(|c| c.exponents().count()).sum()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => coeffs.push(a.add(b)),
                (Some(a), None) => coeffs.push(a.clone()),
                (None, Some(b)) => coeffs.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly2::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let mut coeffs = vec![Gf2x::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Poly2::from_coeffs(coeffs)
    }

    pub fn square(&self) -> Poly2 {
        let mut coeffs = vec![Gf2x::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.square();
        }
        Poly2::from_coeffs(coeffs)
    }

    pub fn scale_t(&self, c: &Gf2x) -> Poly2 {
        Poly2::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// `self * s^n`
    pub fn shift_s(&self, n: usize) -> Poly2 {
        if self.is_zero() {
            return Poly2::zero();
        }
        let mut coeffs = vec![Gf2x::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly2 { coeffs }
    }

    /// Gcd of the coefficients in `GF(2)[t]`.
    pub fn content(&self) -> Gf2x {
        let mut g = Gf2x::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_t_exact(&self, c: &Gf2x) -> Poly2 {
        Poly2::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    pub fn primitive_part(&self) -> Poly2 {
        if self.is_zero() {
            return Poly2::zero();
        }
        let c = self.content();
        if c.is_one() {
            self.clone()
        } else {
            self.div_t_exact(&c)
        }
    }

    /// Pseudo-remainder with respect to `s`.
    fn prem(&self, divisor: &Poly2) -> Poly2 {
        let db = divisor.degree_s().expect("pseudo-division by zero");
        let lb = divisor.leading_coeff_s().unwrap().clone();
        let mut a = self.clone();
        while let Some(da) = a.degree_s() {
            if da < db {
                break;
            }
            let la = a.leading_coeff_s().unwrap().clone();
            a = a.scale_t(&lb).add(&divisor.scale_t(&la).shift_s(da - db));
        }
        a
    }

    /// Greatest common divisor in `GF(2)[s, t]`, by content and primitive
    /// remainder sequences in `s` over `GF(2)[t]`. `gcd(0, q) = q`.
    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_one() || other.is_one() {
            return Poly2::one();
        }
        if modgcd::coprime_in_s(&self.coeffs, &other.coeffs) == Some(true) {
            return Poly2::from_t_poly(self.content().gcd(&other.content()));
        }
        let cont = self.content().gcd(&other.content());
        let (a, b) = (self.primitive_part(), other.primitive_part());
        if let Some(h) = modgcd::gcd_primitive(&a.coeffs, &b.coeffs) {
            let h = Poly2::from_coeffs(h).primitive_part();
            if a.div_exact(&h).is_some() && b.div_exact(&h).is_some() {
                return Poly2::from_t_poly(cont).mul(&h);
            }
        }
        Poly2::from_t_poly(cont).mul(&a.prs_gcd(&b))
    }

    /// Primitive remainder sequence for primitive inputs.
    fn prs_gcd(&self, other: &Poly2) -> Poly2 {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.degree_s() < b.degree_s() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Poly2) -> Option<Poly2> {
        let db = divisor.degree_s()?;
        let lb = divisor.leading_coeff_s().unwrap();
        let mut a = self.clone();
        let mut q = vec![Gf2x::zero(); a.coeffs.len().saturating_sub(db).max(1)];
        while let Some(da) = a.degree_s() {
            if da < db {
                return None;
            }
            let (c, r) = a.leading_coeff_s().unwrap().div_rem(lb);
            if !r.is_zero() {
                return None;
            }
            a = a.add(&divisor.scale_t(&c).shift_s(da - db));
            q[da - db].add_assign(&c);
        }
        Some(Poly2::from_coeffs(q))
    }

    /// Ring homomorphism given by images of the generators. Terms are mapped
    /// through `term_map(i, j)` which returns the image of `s^i t^j`.
    pub fn map_terms(&self, term_map: impl Fn(usize, usize) -> (usize, usize)) -> Poly2 {
        Poly2::from_terms(self.terms().into_iter().map(|(i, j)| term_map(i, j)))
    }

    /// Split into `(even, odd)` with `self = even + s * odd`, both in `GF(2)[s^2, t]`.
    pub fn split_s_parity(&self) -> (Poly2, Poly2) {
        let mut even = vec![Gf2x::zero(); self.coeffs.len()];
        let mut odd = vec![Gf2x::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                even[i] = c.clone();
            } else {
                odd[i - 1] = c.clone();
            }
        }
        (Poly2::from_coeffs(even), Poly2::from_coeffs(odd))
    }

    pub fn is_even_in_s(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Gf2x::is_zero)
    }

    /// Square root when every exponent is even.
    pub fn sqrt(&self) -> Option<Poly2> {
        let terms = self.terms();
        if terms.iter().any(|&(i, j)| i % 2 == 1 || j % 2 == 1) {
            return None;
        }
        Some(Poly2::from_terms(
            terms.into_iter().map(|(i, j)| (i / 2, j / 2)),
        ))
    }
}

/// Graded reverse lexicographic order on `(i, j)` with `s > t`, largest first.
fn grevlex_desc(mut terms: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
    terms
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = grevlex_desc(self.terms())
            .into_iter()
            .map(|(i, j)| match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => pow("s", i),
                (0, j) => pow("t", j),
                (i, j) => format!("{}*{}", pow("s", i), pow("t", j)),
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

fn pow(var: &str, e: usize) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Poly2 {
        Poly2::s()
    }
    fn t() -> Poly2 {
        Poly2::t()
    }

    #[test]
    fn modular_gcd_agrees_with_remainder_sequence() {
        let mut r = crate::sample::Sampler::new(5, 6);
        for _ in 0..40 {
            let h = r.nonzero_poly(4);
            let a = r.nonzero_poly(6).mul(&h);
            let b = r.nonzero_poly(6).mul(&h);
            let g = a.gcd(&b);
            let cont = Poly2::from_t_poly(a.content().gcd(&b.content()));
            let prs = cont.mul(&a.primitive_part().prs_gcd(&b.primitive_part()));
            assert_eq!(g, prs, "{a} / {b}");
            assert!(g.div_exact(&h).is_some());
        }
    }

    #[test]
    fn gcd_of_square_and_root() {
        let a = s().square().add(&t().square());
        let b = s().add(&t());
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn gcd_with_zero_is_identity() {
        let p = s().mul(&t()).add(&Poly2::one());
        assert_eq!(p.gcd(&Poly2::zero()), p);
        assert_eq!(Poly2::zero().gcd(&p), p);
    }

    #[test]
    fn gcd_of_hand_factored_pair() {
        // st + t^2 = t(s+t), s^2 + st = s(s+t)
        let a = s().mul(&t()).add(&t().square());
        let b = s().square().add(&s().mul(&t()));
        assert_eq!(a.gcd(&b), s().add(&t()));
    }

    #[test]
    fn gcd_extracts_content() {
        let f = t().add(&Poly2::one());
        let a = f.mul(&s()).mul(&s().add(&t()));
        let b = f.mul(&t()).mul(&s().add(&t()));
        assert_eq!(a.gcd(&b), f.mul(&s().add(&t())));
    }

    #[test]
    fn exact_division() {
        let a = s().add(&t());
        let b = s().mul(&t()).add(&Poly2::one());
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn display_is_grevlex() {
        let p = Poly2::from_terms([(0, 0), (1, 0), (0, 2), (2, 1)]);
        assert_eq!(p.to_string(), "s^2*t+t^2+s+1");
    }

    #[test]
    fn parity_split() {
        let p = Poly2::from_terms([(3, 1), (2, 0), (1, 5), (0, 0)]);
        let (e, o) = p.split_s_parity();
        assert!(e.is_even_in_s() && o.is_even_in_s());
        assert_eq!(e.add(&s().mul(&o)), p);
    }
}
