"""Smoke test for the f4moufang extension module.

Build the extension first (see README), then run
    python python/smoke_test.py
"""

import f4moufang as f


def main():
    x = f.K("s + t^2")
    assert x.phi().phi() == x * x
    assert (x * x).in_kprime()
    assert x.phi().theta() == x

    inst = f.Instance.default()
    assert all(o != "fail" for _, o, _ in inst.validate(samples=20, max_degree=2))
    bad = f.Instance.parse("delta = s + t\nphiE = e + s\nbeta = s\nalpha = s\n")
    failed = [n for n, o, _ in bad.validate(samples=5) if o == "fail"]
    assert failed == ["alpha_is_phi_beta"], failed
    try:
        f.Instance.parse("delta = s +\n")
        raise AssertionError("expected a parse error")
    except ValueError as e:
        assert "line 1" in str(e)

    m = f.MoufangSet()
    zero = f.Point.label("0", "0", "0", "0", "0", "0")
    one = f.Point.label("0", "0", "1", "0", "0", "0")
    assert m.tau_prime(zero) == zero
    assert m.tau_prime(one) == f.Point.label("0", "0", "1", "0", "0", "1")

    p = f.Point.label("s^2", "t", "s", "e", "s*e", "t")
    g = m.divide(zero, p)
    assert m.act(zero, g) == p
    assert m.act(f.Point.inf(), g).is_inf()
    assert m.sphere_contains(f.Point.inf(), p, f.Point.label("s^2", "t", "s", "1", "0", "s^2"))
    print("flag of p:", m.flag(p)[1])

    records = f.verify(suites=["fields"], samples=5, max_degree=2)
    assert records and all(r.status == "pass" for r in records), [(r.name, r.status) for r in records]
    slot2 = f.verify(suites=["root-groups"], samples=3, max_degree=2, eq3_slot=2)
    assert next(r for r in slot2 if r.name == "associativity").status == "fail"
    print("ok")


if __name__ == "__main__":
    main()
