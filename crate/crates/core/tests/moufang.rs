use f4moufang::blocks::{tau_prime, tau_prime_composite};
use f4moufang::sample::Sampler;
use f4moufang::uinf::UInfElem;
use f4moufang::*;

fn set() -> MoufangSet {
    MoufangSet::new(Relations::new(FieldInstance::default()))
}

fn st(a: u8, b: u8) -> MoufangPoint {
    let k = |x: u8| if x == 1 { KElem::one() } else { KElem::zero() };
    MoufangPoint::Label(R1Coord::scalar(k(a)), R2Coord::scalar(k(b)))
}

#[test]
fn tau_prime_fixed_values() {
    let m = set();
    assert_eq!(tau_prime(&m, &st(0, 0)).unwrap(), st(0, 0));
    assert_eq!(tau_prime(&m, &st(1, 0)).unwrap(), st(1, 1));
    let mut s = Sampler::new(3, 2);
    for _ in 0..5 {
        let p = MoufangPoint::Label(s.r1_suzuki(), s.r2_suzuki());
        let q = tau_prime(&m, &p).unwrap();
        assert_eq!(tau_prime(&m, &q).unwrap(), p);
        assert_eq!(tau_prime_composite(&m, &p).unwrap(), q);
    }
}

#[test]
fn first_special_circle_listed_points() {
    let c = SpecialCircle::First;
    assert_eq!(c.point(&KElem::one()), Some(st(1, 1)));
    assert_eq!(c.point(&KElem::zero()), Some(st(0, 1)));
    assert_eq!(c.parameter(&st(1, 1)).unwrap(), Some(KElem::one()));
}

#[test]
fn divide_then_act() {
    let m = set();
    let mut s = Sampler::new(5, 2);
    let inst = FieldInstance::default();
    for _ in 0..3 {
        let p = MoufangPoint::Label(s.r1(&inst), s.r2());
        let q = MoufangPoint::Label(s.r1(&inst), s.r2());
        let g = m.divide(&p, &q).unwrap();
        assert_eq!(m.act(&p, &g).unwrap(), q);
    }
}

#[test]
fn sphere_with_gnarl_zero_through_inf() {
    let m = set();
    let mut s = Sampler::new(6, 2);
    let inst = FieldInstance::default();
    let r2 = s.r2();
    let b = Block::sphere(
        MoufangPoint::Label(R1Coord::zero(), r2.clone()),
        MoufangPoint::Inf,
    )
    .unwrap();
    for _ in 0..3 {
        let p = MoufangPoint::Label(s.r1(&inst), r2.clone());
        assert!(m.contains(&b, &p).unwrap());
    }
    assert!(m.contains(&b, &MoufangPoint::Inf).unwrap());
}

#[test]
fn block_transport() {
    let m = set();
    let mut s = Sampler::new(7, 2);
    let inst = FieldInstance::default();
    let g = UInfElem::new(s.r1(&inst), s.r2());
    let gnarl = MoufangPoint::Label(s.r1(&inst), s.r2());
    let b = Block::sphere(gnarl.clone(), MoufangPoint::Inf).unwrap();
    let image = Block::sphere(m.act(&gnarl, &g).unwrap(), MoufangPoint::Inf).unwrap();
    for _ in 0..2 {
        let p = m.non_vertical_point(&gnarl, &s.r1(&inst)).unwrap();
        assert!(m.contains(&b, &p).unwrap());
        assert!(m.contains(&image, &m.act(&p, &g).unwrap()).unwrap());
    }
}

#[test]
fn block_descriptor() {
    let b = Block::circle(MoufangPoint::zero(), MoufangPoint::Inf).unwrap();
    assert_eq!(
        b.descriptor(),
        r#"{"kind":"circle","gnarl":"[(0, 0, 0), (0, 0, 0)]","base":"inf"}"#
    );
    assert!(Block::sphere(MoufangPoint::Inf, MoufangPoint::Inf).is_err());
}
