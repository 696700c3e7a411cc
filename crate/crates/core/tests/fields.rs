use f4moufang::*;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly2> {
    proptest::collection::vec((0usize..4, 0usize..4), 0..6).prop_map(Poly2::from_terms)
}

fn kelem() -> impl Strategy<Value = KElem> {
    (poly(), poly()).prop_map(|(n, d)| KElem::new(n, d).unwrap_or_else(|_| KElem::zero()))
}

fn lelem() -> impl Strategy<Value = LElem> {
    (kelem(), kelem()).prop_map(|(a, b)| LElem::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tits_law(x in kelem(), z in lelem()) {
        prop_assert_eq!(x.phi().phi(), x.square());
        let i = FieldInstance::default();
        prop_assert_eq!(i.phi_l(&i.phi_l(&z)), i.square(&z));
    }

    #[test]
    fn theta_inverts_phi(x in kelem()) {
        prop_assert_eq!(x.phi().theta().unwrap(), x.clone());
        prop_assert!(x.square().in_kprime());
    }

    #[test]
    fn field_laws(x in kelem(), y in kelem(), w in kelem()) {
        prop_assert_eq!(x.mul(&y.add(&w)), x.mul(&y).add(&x.mul(&w)));
        prop_assert!(x.add(&x).is_zero());
        if !x.is_zero() {
            prop_assert_eq!(x.mul(&x.inv().unwrap()), KElem::one());
        }
    }

    #[test]
    fn norm_is_multiplicative(z in lelem(), w in lelem()) {
        let i = FieldInstance::default();
        prop_assert_eq!(i.norm(&i.mul(&z, &w)), i.norm(&z).mul(&i.norm(&w)));
        if !z.is_zero() {
            prop_assert!(!i.norm(&z).is_zero());
        }
    }
}
