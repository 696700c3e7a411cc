//! Dense univariate polynomials over GF(2), packed 64 coefficients per word.

use std::cmp::Ordering;
use std::fmt;

/// A polynomial in `GF(2)[t]`. Bit `i` of the packed words is the coefficient of `t^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2x {
    words: Vec<u64>,
}

impl Gf2x {
    pub fn zero() -> Self {
        Gf2x { words: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2x { words: vec![1] }
    }

    /// `t^n`
    pub fn monomial(n: usize) -> Self {
        let mut words = vec![0u64; n / 64 + 1];
        words[n / 64] = 1u64 << (n % 64);
        Gf2x { words }
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Gf2x { words }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        let w = i / 64;
        if w >= self.words.len() {
            if !value {
                return;
            }
            self.words.resize(w + 1, 0);
        }
        if value {
            self.words[w] |= 1u64 << (i % 64);
        } else {
            self.words[w] &= !(1u64 << (i % 64));
            self.trim();
        }
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn add_assign(&mut self, other: &Gf2x) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
        self.trim();
    }

    pub fn add(&self, other: &Gf2x) -> Gf2x {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    /// `self * t^n`
    pub fn shl(&self, n: usize) -> Gf2x {
        if self.is_zero() {
            return Gf2x::zero();
        }
        let (ws, bs) = (n / 64, n % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        Gf2x::from_words(words)
    }

    pub fn mul(&self, other: &Gf2x) -> Gf2x {
        if self.is_zero() || other.is_zero() {
            return Gf2x::zero();
        }
        let (a, b) = if self.words.len() <= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![0u64; a.words.len() + b.words.len() + 1];
        for (i, &aw) in a.words.iter().enumerate() {
            let mut w = aw;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                for (j, &bw) in b.words.iter().enumerate() {
                    out[i + j] ^= bw << bit;
                    if bit != 0 {
                        out[i + j + 1] ^= bw >> (64 - bit);
                    }
                }
            }
        }
        Gf2x::from_words(out)
    }

    /// The square, computed by spreading bits.
    pub fn square(&self) -> Gf2x {
        let mut out = vec![0u64; self.words.len() * 2];
        for (i, &w) in self.words.iter().enumerate() {
            out[2 * i] = spread(w as u32);
            out[2 * i + 1] = spread((w >> 32) as u32);
        }
        Gf2x::from_words(out)
    }

    /// `self += other * t^n`, in place.
    pub fn add_shl_assign(&mut self, other: &Gf2x, n: usize) {
        let (ws, bs) = (n / 64, n % 64);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Gf2x) -> (Gf2x, Gf2x) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Gf2x::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quo.set_coeff(shift, true);
            rem.add_shl_assign(divisor, shift);
        }
        (quo, rem)
    }

    pub fn gcd(&self, other: &Gf2x) -> Gf2x {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Evaluate at `t = 1`.
    pub fn eval_one(&self) -> bool {
        self.words.iter().fold(0u32, |acc, w| acc ^ w.count_ones()) & 1 == 1
    }
}

fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

impl PartialOrd for Gf2x {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gf2x {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for Gf2x {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.exponents().map(|e| format!("t^{e}")).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: &[usize]) -> Gf2x {
        let mut r = Gf2x::zero();
        for &b in bits {
            r.set_coeff(b, true);
        }
        r
    }

    #[test]
    fn mul_and_square_agree() {
        let a = p(&[0, 3, 64, 70, 130]);
        assert_eq!(a.mul(&a), a.square());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[0, 1, 5, 9, 100]);
        let b = p(&[1, 3, 7]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().unwrap_or(0) < 7);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn gcd_of_products() {
        let g = p(&[0, 1, 2]);
        let a = g.mul(&p(&[0, 3]));
        let b = g.mul(&p(&[1]));
        assert_eq!(a.gcd(&b), g);
    }

    #[test]
    fn degree_across_words() {
        assert_eq!(Gf2x::monomial(127).degree(), Some(127));
        assert_eq!(Gf2x::zero().degree(), None);
    }
}
