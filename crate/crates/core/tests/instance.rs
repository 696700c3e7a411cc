use f4moufang::parse::{parse_instance, parse_k, parse_l};
use f4moufang::poly2::Poly2;
use f4moufang::validate::{artin_schreier_root, validate, Outcome};
use f4moufang::*;

const DEFAULT: &str = "delta = s + t\nphiE = e + s\nbeta = s\nalpha = t\n";

#[test]
fn default_file_parses_to_the_builtin_instance() {
    assert_eq!(parse_instance(DEFAULT).unwrap(), FieldInstance::default());
    let spaced =
        "# comment\n\n  delta=(s+t)   \nphiE = s + e\nbeta = s^3/s^2\nalpha = t # trailing\n";
    assert_eq!(parse_instance(spaced).unwrap(), FieldInstance::default());
}

#[test]
fn alpha_not_phi_beta_fails_validation() {
    let inst = parse_instance("delta = s + t\nphiE = e + s\nbeta = s\nalpha = s\n").unwrap();
    let r = validate(&inst, 0, 50, 2);
    let f = r.failures();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].name, "alpha_is_phi_beta");
}

#[test]
fn parse_errors_carry_line_and_column() {
    let err = parse_instance("delta = s +\nphiE = e + s\n").unwrap_err();
    assert_eq!(
        err,
        Error::Parse {
            line: 1,
            column: 12,
            message: "unexpected end of line".into()
        }
    );
    let err = parse_instance("delta = s + t\nphiE = e + s\nbeta = s $ t\n").unwrap_err();
    assert!(
        matches!(
            err,
            Error::Parse {
                line: 3,
                column: 10,
                ..
            }
        ),
        "{err}"
    );
    assert!(matches!(
        parse_instance("gamma = s\n"),
        Err(Error::Parse {
            line: 1,
            column: 1,
            ..
        })
    ));
    assert!(matches!(
        parse_instance("delta = s\n"),
        Err(Error::Instance(_))
    ));
}

#[test]
fn expressions_follow_precedence() {
    assert_eq!(
        parse_k("s + t*s^2").unwrap(),
        KElem::s().add(&KElem::t().mul(&KElem::s().square()))
    );
    assert_eq!(parse_k("(s + 1)^-1 * (s + 1)").unwrap(), KElem::one());
    assert_eq!(parse_k("-s - 3").unwrap(), KElem::s().add(&KElem::one()));
    let d = KElem::s().add(&KElem::t());
    assert_eq!(
        parse_l("e*e", &d).unwrap(),
        LElem::new(d.clone(), KElem::one())
    );
    assert!(parse_k("1/0").is_err());
}

#[test]
fn artin_schreier_roots() {
    let s = Poly2::s();
    let a = s.mul(&Poly2::t()).add(&s);
    assert_eq!(artin_schreier_root(&a.square().add(&a)), Some(a));
    assert_eq!(artin_schreier_root(&s.add(&Poly2::t())), None);
    assert_eq!(artin_schreier_root(&Poly2::one()), None);
}

#[test]
fn default_instance_validates() {
    let r = validate(&FieldInstance::default(), 0, 500, 2);
    assert!(r.passed(), "{r:?}");
    assert!(r.checks.iter().all(|c| c.outcome == Outcome::Pass));
}
