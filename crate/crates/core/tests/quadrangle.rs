use f4moufang::quadrangle::*;
use f4moufang::sample::Sampler;
use f4moufang::uinf::{LabelForm, UInfElem};
use f4moufang::*;

fn quad() -> Quadrangle {
    Quadrangle::new(Relations::new(FieldInstance::default()))
}

fn p3(s: &mut Sampler, q: &Quadrangle) -> QPoint {
    QPoint::P3(s.r2(), s.r1(&q.rel.inst), s.r2())
}

fn l3(s: &mut Sampler, q: &Quadrangle) -> QLine {
    QLine::L3(s.r1(&q.rel.inst), s.r2(), s.r1(&q.rel.inst))
}

#[test]
fn zero_and_base_flags_are_absolute() {
    let q = quad();
    assert!(q.is_absolute(&Flag::base()).unwrap());
    assert!(q.is_absolute(&Flag::zero()).unwrap());
    assert!(q.incident(&QPoint::zero(), &QLine::zero()).unwrap());
}

#[test]
fn polarity_is_an_involution() {
    let q = quad();
    let mut s = Sampler::new(11, 2);
    for _ in 0..10 {
        let p = p3(&mut s, &q);
        assert_eq!(q.polarity_line(&q.polarity_point(&p).unwrap()).unwrap(), p);
        let l = l3(&mut s, &q);
        assert_eq!(q.polarity_point(&q.polarity_line(&l).unwrap()).unwrap(), l);
        let p2 = QPoint::P2(s.r1(&q.rel.inst), s.r2());
        assert_eq!(
            q.polarity_line(&q.polarity_point(&p2).unwrap()).unwrap(),
            p2
        );
    }
}

#[test]
fn action_preserves_incidence_and_composes() {
    let q = quad();
    let mut s = Sampler::new(12, 2);
    for _ in 0..8 {
        let l = l3(&mut s, &q);
        let p = q.point_on_l3(&l, &s.r2()).unwrap();
        assert!(q.incident(&p, &l).unwrap());
        let g = s.uplus(&q.rel.inst);
        let h = s.uplus(&q.rel.inst);
        let (gp, gl) = (q.act_point(&g, &p).unwrap(), q.act_line(&g, &l).unwrap());
        assert!(q.incident(&gp, &gl).unwrap());
        let gh = q.rel.mul(&g, &h).unwrap();
        assert_eq!(
            q.act_point(&gh, &p).unwrap(),
            q.act_point(&h, &q.act_point(&g, &p).unwrap()).unwrap()
        );
        let (rp, rl) = (q.polarity_point(&p).unwrap(), q.polarity_line(&l).unwrap());
        assert!(q.incident(&rl, &rp).unwrap());
    }
}

#[test]
fn uinf_images_of_zero_flag_are_absolute_and_labelled() {
    let q = quad();
    let mut s = Sampler::new(13, 2);
    for _ in 0..8 {
        let u = UInfElem::new(s.r1(&q.rel.inst), s.r2());
        let g = q.rel.uinf_embed_with(&u, LabelForm::Centralizer).unwrap();
        let f = q.act_flag(&g, &Flag::zero()).unwrap();
        assert!(q.is_absolute(&f).unwrap());
        let ui = q
            .rel
            .uinf_extract(&q.rel.inv(&g).unwrap(), LabelForm::Centralizer)
            .unwrap();
        match &f.l {
            QLine::L3(k, b, _) => assert!(k == &ui.r1 && b == &ui.r2),
            other => panic!("{other}"),
        }
    }
}

#[test]
fn collinear_recovers_the_joining_line() {
    let q = quad();
    let mut s = Sampler::new(14, 2);
    for _ in 0..6 {
        let p = p3(&mut s, &q);
        let l = q.line_through_p3(&p, &s.r1(&q.rel.inst)).unwrap();
        let x = q.point_on_l3(&l, &s.r2()).unwrap();
        if x == p {
            continue;
        }
        assert_eq!(q.collinear(&p, &x).unwrap(), Some(l.clone()));
        assert_eq!(q.collinear(&x, &p).unwrap(), Some(l));
        let y = p3(&mut s, &q);
        assert_eq!(
            q.collinear(&p, &y).unwrap().is_some(),
            q.collinear(&y, &p).unwrap().is_some()
        );
    }
}

fn check_projection(q: &Quadrangle, p: &QPoint, l: &QLine) {
    let x = q.project(p, l).unwrap();
    assert!(q.incident(&x, l).unwrap(), "{x} not on {l}");
    let j = q.collinear(p, &x).unwrap().expect("projection collinear");
    assert!(q.incident(p, &j).unwrap() && q.incident(&x, &j).unwrap());
}

#[test]
fn projections_are_collinear_feet() {
    let q = quad();
    let mut s = Sampler::new(15, 2);
    for _ in 0..5 {
        let p = p3(&mut s, &q);
        let p2 = QPoint::P2(s.r1(&q.rel.inst), s.r2());
        let l2 = QLine::L2(s.r2(), s.r1(&q.rel.inst));
        let l3 = l3(&mut s, &q);
        check_projection(&q, &p, &QLine::Inf);
        check_projection(&q, &p, &QLine::L1(s.r1(&q.rel.inst)));
        check_projection(&q, &p, &l2);
        check_projection(&q, &p2, &l2);
        check_projection(&q, &p2, &l3);
        check_projection(&q, &QPoint::P1(s.r2()), &l3);
        check_projection(&q, &QPoint::Inf, &l3);
    }
}
