//! Checks on a [`FieldInstance`]: the quadratic defining `L`, the Tits law,
//! `alpha = phi(beta)` and randomized probing of the two anisotropic forms.

use serde::Serialize;

use crate::kfield::KElem;
use crate::lfield::{FieldInstance, LElem};
use crate::poly2::Poly2;
use crate::sample::Sampler;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceCheck {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<InstanceCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> Vec<&InstanceCheck> {
        self.checks
            .iter()
            .filter(|c| c.outcome == Outcome::Fail)
            .collect()
    }

    fn push(&mut self, name: &'static str, outcome: Outcome, detail: impl Into<String>) {
        self.checks.push(InstanceCheck {
            name,
            outcome,
            detail: detail.into(),
        });
    }
}

/// A polynomial `a` with `a^2 + a = d`, if any. Peels off the top
/// homogeneous component, which must be the square of that of `a`.
pub fn artin_schreier_root(d: &Poly2) -> Option<Poly2> {
    let mut d = d.clone();
    let mut a = Poly2::zero();
    loop {
        let Some(deg) = d.total_degree() else {
            return Some(a);
        };
        if deg == 0 || deg % 2 == 1 {
            return None;
        }
        let top = d.terms().into_iter().filter(|(i, j)| i + j == deg);
        let h = Poly2::from_terms(top).sqrt()?;
        d = d.add(&h.square()).add(&h);
        a = a.add(&h);
    }
}

/// `N(u) + alpha N(v) + beta a`.
pub fn form_one(i: &FieldInstance, u: &LElem, v: &LElem, a: &KElem) -> KElem {
    i.norm(u).add(&i.alpha.mul(&i.norm(v))).add(&i.beta.mul(a))
}

/// `N(x) + beta^2 N(y) + alpha b^2`.
pub fn form_two(i: &FieldInstance, x: &LElem, y: &LElem, b: &KElem) -> KElem {
    i.norm(x)
        .add(&i.beta.square().mul(&i.norm(y)))
        .add(&i.alpha.mul(&b.square()))
}

/// Run checks (i) to (v) with `samples` probes per form.
pub fn validate(
    inst: &FieldInstance,
    seed: u64,
    samples: usize,
    max_degree: usize,
) -> ValidationReport {
    let mut r = ValidationReport::default();
    let mut s = Sampler::new(seed, max_degree);

    let d = &inst.delta;
    let quad = if d.is_polynomial() {
        match artin_schreier_root(d.num()) {
            None => (Outcome::Pass, format!("x^2 + x + {d} has no root in K")),
            Some(a) => (Outcome::Fail, format!("root {a} of x^2 + x + {d}")),
        }
    } else if d.den().sqrt().is_none() {
        (Outcome::Pass, format!("denominator of {d} is not a square"))
    } else {
        (
            Outcome::Inconclusive,
            format!("rational delta {d} with square denominator"),
        )
    };
    r.push("quadratic_irreducible", quad.0, quad.1);

    let mut tits = None;
    for _ in 0..samples.min(100) {
        let k = s.kelem();
        if k.phi().phi() != k.square() {
            tits = Some(format!("phi(phi({k})) != {k}^2"));
            break;
        }
        let l = s.lelem();
        if inst.phi_l(&inst.phi_l(&l)) != inst.square(&l) {
            tits = Some(format!("phi(phi({l})) != {l}^2"));
            break;
        }
    }
    let pe = &inst.phi_e;
    let e_ok = inst
        .square(pe)
        .add(pe)
        .add(&LElem::from_k(d.phi()))
        .is_zero();
    match (tits, e_ok) {
        (None, true) => r.push("tits_law", Outcome::Pass, "phi^2 = squaring on samples"),
        (Some(m), _) => r.push("tits_law", Outcome::Fail, m),
        (None, false) => r.push(
            "tits_law",
            Outcome::Fail,
            format!("phi(e) = {pe} is not a root of phi(x^2 + x + delta)"),
        ),
    }

    let ab = if inst.alpha != inst.beta.phi() {
        (
            Outcome::Fail,
            format!("alpha = {} but phi(beta) = {}", inst.alpha, inst.beta.phi()),
        )
    } else if !inst.alpha.in_kprime() || inst.beta.is_zero() {
        (
            Outcome::Fail,
            "alpha must be a nonzero element of K'".to_string(),
        )
    } else {
        (Outcome::Pass, "alpha = phi(beta)".to_string())
    };
    r.push("alpha_is_phi_beta", ab.0, ab.1);

    let mut one = None;
    let mut two = None;
    for _ in 0..samples {
        let (u, v, a) = (s.lelem(), s.lelem(), s.kprime());
        let nontrivial = !(u.is_zero() && v.is_zero() && a.is_zero());
        if one.is_none() && nontrivial && form_one(inst, &u, &v, &a).is_zero() {
            one = Some((u, v, a));
        }
        let (x, y, b) = (s.lprime(inst), s.lprime(inst), s.kelem());
        let nontrivial = !(x.is_zero() && y.is_zero() && b.is_zero());
        if two.is_none() && nontrivial && form_two(inst, &x, &y, &b).is_zero() {
            two = Some((x, y, b));
        }
    }
    let probe = |found: &Option<(LElem, LElem, KElem)>| match found {
        None => (
            Outcome::Pass,
            format!("no nontrivial zero in {samples} probes"),
        ),
        Some((p, q, c)) => (Outcome::Fail, format!("zero at ({p}, {q}, {c})")),
    };
    let p1 = probe(&one);
    r.push("anisotropy_one", p1.0, p1.1);
    let p2 = probe(&two);
    r.push("anisotropy_two", p2.0, p2.1);

    let transfer = match (&one, &two) {
        (Some((u, v, a)), _) => {
            let b = a.theta().unwrap_or_else(|_| KElem::zero());
            let z = form_two(inst, &inst.phi_l(u), &inst.phi_l(v), &b).is_zero();
            (
                Outcome::Fail,
                format!("phi-image of the first zero is a zero of the second form: {z}"),
            )
        }
        (None, Some((x, y, b))) => {
            let z = match (inst.theta_l(x), inst.theta_l(y)) {
                (Ok(tx), Ok(ty)) => form_one(inst, &tx, &ty, &b.phi()).is_zero(),
                _ => false,
            };
            (
                Outcome::Fail,
                format!("theta-image of the second zero is a zero of the first form: {z}"),
            )
        }
        (None, None) => (Outcome::Pass, "nothing to transfer".to_string()),
    };
    r.push("anisotropy_transfer", transfer.0, transfer.1);
    r
}
