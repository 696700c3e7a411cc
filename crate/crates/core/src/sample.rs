//! Seeded, degree-bounded sampling of field elements and root-group coordinates.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::kfield::KElem;
use crate::lfield::{FieldInstance, LElem};
use crate::poly2::Poly2;
use crate::root_groups::{R1Coord, R2Coord, UPlusElem};

pub struct Sampler {
    rng: ChaCha8Rng,
    pub max_degree: usize,
    /// Probability that a sampled `K` element gets a non-trivial denominator.
    pub rational_probability: f64,
    /// Probability that a sampled coordinate slot is zero.
    pub zero_probability: f64,
}

impl Sampler {
    pub fn new(seed: u64, max_degree: usize) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_degree,
            rational_probability: 0.25,
            zero_probability: 0.1,
        }
    }

    /// Derive an independent stream, e.g. one per named check.
    pub fn fork(&mut self, tag: &str) -> Sampler {
        let mut h: u64 = self.rng.gen();
        for b in tag.bytes() {
            h = h.rotate_left(5) ^ b as u64;
            h = h.wrapping_mul(0x100_0000_01b3);
        }
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(h),
            max_degree: self.max_degree,
            rational_probability: self.rational_probability,
            zero_probability: self.zero_probability,
        }
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn gen_range(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Random polynomial of total degree at most `deg`.
    pub fn poly(&mut self, deg: usize) -> Poly2 {
        let mut terms = Vec::new();
        for i in 0..=deg {
            for j in 0..=(deg - i) {
                if self.rng.gen_bool(0.5) {
                    terms.push((i, j));
                }
            }
        }
        Poly2::from_terms(terms)
    }

    pub fn nonzero_poly(&mut self, deg: usize) -> Poly2 {
        loop {
            let p = self.poly(deg);
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn kelem(&mut self) -> KElem {
        let num = self.poly(self.max_degree);
        if num.is_zero() || !self.rng.gen_bool(self.rational_probability) {
            return KElem::from_poly(num);
        }
        let den = self.nonzero_poly(self.max_degree);
        KElem::new(num, den).expect("nonzero denominator")
    }

    pub fn nonzero_kelem(&mut self) -> KElem {
        loop {
            let k = self.kelem();
            if !k.is_zero() {
                return k;
            }
        }
    }

    /// Element of `K'`, drawn as the image of a `K` element under the Tits map.
    pub fn kprime(&mut self) -> KElem {
        self.kelem().phi()
    }

    pub fn lelem(&mut self) -> LElem {
        LElem::new(self.kelem(), self.kelem())
    }

    pub fn nonzero_lelem(&mut self) -> LElem {
        loop {
            let z = self.lelem();
            if !z.is_zero() {
                return z;
            }
        }
    }

    pub fn lprime(&mut self, inst: &FieldInstance) -> LElem {
        inst.phi_l(&self.lelem())
    }

    fn maybe_zero<T>(&mut self, zero: T, f: impl FnOnce(&mut Self) -> T) -> T {
        if self.rng.gen_bool(self.zero_probability) {
            zero
        } else {
            f(self)
        }
    }

    pub fn r1(&mut self, inst: &FieldInstance) -> R1Coord {
        R1Coord {
            x: self.maybe_zero(LElem::zero(), |s| s.lprime(inst)),
            y: self.maybe_zero(LElem::zero(), |s| s.lprime(inst)),
            b: self.maybe_zero(KElem::zero(), Sampler::kelem),
        }
    }

    pub fn r2(&mut self) -> R2Coord {
        R2Coord {
            u: self.maybe_zero(LElem::zero(), Sampler::lelem),
            v: self.maybe_zero(LElem::zero(), Sampler::lelem),
            a: self.maybe_zero(KElem::zero(), Sampler::kprime),
        }
    }

    /// Suzuki–Tits coordinates: all `L` slots zero.
    pub fn r1_suzuki(&mut self) -> R1Coord {
        R1Coord {
            x: LElem::zero(),
            y: LElem::zero(),
            b: self.kelem(),
        }
    }

    pub fn r2_suzuki(&mut self) -> R2Coord {
        R2Coord {
            u: LElem::zero(),
            v: LElem::zero(),
            a: self.kprime(),
        }
    }

    pub fn uplus(&mut self, inst: &FieldInstance) -> UPlusElem {
        UPlusElem {
            g1: self.r1(inst),
            g2: self.r2(),
            g3: self.r1(inst),
            g4: self.r2(),
        }
    }
}
