//! Modular gcd in `GF(2)[t][s]`: images in `GF(2^31)[s]` for irreducible
//! moduli in `t`, recombined by CRT.

use std::sync::OnceLock;

use crate::gf2x::Gf2x;

const M: u32 = 31;

/// Arithmetic in `GF(2)[t] / (p)` with `deg p = 31`.
#[derive(Clone, Copy)]
struct Field {
    p: u64,
    x64: u64,
}

fn clmul(a: u64, b: u64) -> u128 {
    let mut r = 0u128;
    let mut a = a;
    let mut i = 0;
    while a != 0 {
        if a & 1 == 1 {
            r ^= (b as u128) << i;
        }
        a >>= 1;
        i += 1;
    }
    r
}

impl Field {
    fn new(p: u64) -> Self {
        let mut f = Field { p, x64: 0 };
        f.x64 = f.reduce128(1u128 << 64);
        f
    }

    fn reduce128(&self, mut v: u128) -> u64 {
        let p = self.p as u128;
        while v >> M != 0 {
            let bit = 127 - v.leading_zeros();
            v ^= p << (bit - M);
        }
        v as u64
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce128(clmul(a, b))
    }

    /// Inverse by the extended Euclidean algorithm on bit-packed polynomials.
    fn inv(&self, a: u64) -> u64 {
        let deg = |x: u64| 63 - x.leading_zeros();
        let (mut r0, mut r1) = (self.p, a);
        let (mut s0, mut s1) = (0u64, 1u64);
        while r1 != 0 {
            while r0 != 0 && deg(r0) >= deg(r1) {
                let sh = deg(r0) - deg(r1);
                r0 ^= r1 << sh;
                s0 ^= s1 << sh;
            }
            std::mem::swap(&mut r0, &mut r1);
            std::mem::swap(&mut s0, &mut s1);
        }
        self.reduce128(s0 as u128)
    }

    fn image(&self, c: &Gf2x) -> u64 {
        let words = c.words();
        let mut r = 0u64;
        for &w in words.iter().rev() {
            r = self.mul(r, self.x64) ^ self.reduce128(w as u128);
        }
        r
    }

    fn poly_image(&self, a: &[Gf2x]) -> Vec<u64> {
        let mut v: Vec<u64> = a.iter().map(|c| self.image(c)).collect();
        trim(&mut v);
        v
    }

    /// Monic gcd in `GF(2^31)[s]`.
    fn gcd(&self, a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
        let (mut a, mut b) = (a, b);
        while !b.is_empty() {
            let lb_inv = self.inv(*b.last().unwrap());
            while a.len() >= b.len() {
                let f = self.mul(*a.last().unwrap(), lb_inv);
                let shift = a.len() - b.len();
                for (i, &c) in b.iter().enumerate() {
                    a[i + shift] ^= self.mul(f, c);
                }
                trim(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        if let Some(&l) = a.last() {
            let li = self.inv(l);
            for c in a.iter_mut() {
                *c = self.mul(*c, li);
            }
        }
        a
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Irreducible `p` of degree 31: for prime degree it suffices that
/// `t^(2^31) = t mod p` and `p` has no root in `GF(2)`.
fn moduli() -> &'static [u64] {
    static CELL: OnceLock<Vec<u64>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        let mut low = 1u64;
        while out.len() < 96 {
            let p = (1u64 << M) | low;
            low += 2;
            if p.count_ones() % 2 == 0 {
                continue;
            }
            let f = Field::new(p);
            let mut x = 2u64;
            for _ in 0..M {
                x = f.mul(x, x);
            }
            if x == 2 {
                out.push(p);
            }
        }
        out
    })
}

/// `Some(true)` when some modular image shows `a`, `b` have no common
/// factor of positive `s`-degree. `None` if no usable modulus was found.
pub fn coprime_in_s(a: &[Gf2x], b: &[Gf2x]) -> Option<bool> {
    for &p in moduli().iter().take(3) {
        let f = Field::new(p);
        let (ia, ib) = (f.poly_image(a), f.poly_image(b));
        if ia.len() != a.len() || ib.len() != b.len() {
            continue;
        }
        return Some(f.gcd(ia, ib).len() == 1);
    }
    None
}

/// The gcd of primitive `a`, `b` (coefficients in `t`, indexed by `s`
/// power), up to its `t`-content, or `None` if the moduli ran out.
pub fn gcd_primitive(a: &[Gf2x], b: &[Gf2x]) -> Option<Vec<Gf2x>> {
    let (la, lb) = (a.last()?, b.last()?);
    let gamma = la.gcd(lb);
    let tdeg = |v: &[Gf2x]| v.iter().filter_map(Gf2x::degree).max().unwrap_or(0);
    let bound = gamma.degree().unwrap_or(0) + tdeg(a).min(tdeg(b)) + 1;
    let mut acc: Option<(Vec<Gf2x>, Gf2x)> = None;
    for &p in moduli() {
        let f = Field::new(p);
        let (ia, ib) = (f.poly_image(a), f.poly_image(b));
        if ia.len() != a.len() || ib.len() != b.len() {
            continue;
        }
        let mut g = f.gcd(ia, ib);
        if g.len() == 1 {
            return Some(vec![Gf2x::one()]);
        }
        let gp = f.image(&gamma);
        for c in g.iter_mut() {
            *c = f.mul(*c, gp);
        }
        let pm = Gf2x::from_words(vec![p]);
        acc = match acc {
            Some((h, m)) if h.len() < g.len() => Some((h, m)),
            Some((h, m)) if h.len() == g.len() => {
                let minv = f.inv(f.image(&m));
                let h = h
                    .iter()
                    .zip(&g)
                    .map(|(hc, &r)| {
                        let delta = f.mul(r ^ f.image(hc), minv);
                        hc.add(&m.mul(&Gf2x::from_words(vec![delta])))
                    })
                    .collect();
                Some((h, m.mul(&pm)))
            }
            _ => Some((
                g.into_iter().map(|c| Gf2x::from_words(vec![c])).collect(),
                pm,
            )),
        };
        let (h, m) = acc.as_ref().unwrap();
        if m.degree().unwrap_or(0) > bound {
            return Some(h.clone());
        }
    }
    None
}
