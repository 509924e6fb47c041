"""Smoke test for the smirnov extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

from fractions import Fraction

import smirnov


def poly(*coeffs, start=0):
    return smirnov.Poly({start + i: c for i, c in enumerate(coeffs) if c})


def main():
    assert "Wtilde" in smirnov.variants()

    w3 = smirnov.closed_form("Wtilde", 3)
    assert w3.basis == "e" and w3.degree == 3
    assert dict(w3.terms()) == {(3,): poly(0, 0, 3), (2, 1): poly(0, 1)}
    assert w3.coeff([1, 2]) == poly(0, 1)

    # the closed form agrees with word enumeration
    for v in smirnov.variants():
        for n in range(2, 5):
            assert smirnov.closed_form(v, n) == smirnov.brute_force_expansion(v, n), (v, n)
    assert smirnov.closed_form("W", 4).expand(4) == smirnov.brute_force("W", 4)

    # basis changes round trip; omega is an involution
    w4 = smirnov.closed_form("W", 4)
    assert w4.to_basis("h").to_basis("e") == w4
    assert w4.omega().omega() == w4
    assert w4.is_e_positive() and w4.is_t_palindromic()

    top = smirnov.powersum_top_coefficient("Wneq", 5)
    assert top == poly(1, 1, 1, 1, 1) + poly(0, 5, 5, 5)
    assert smirnov.powersum("W", 3).normalized

    a3 = smirnov.q_eulerian("Atilde", 3)
    assert a3.at_q_one() == poly(0, 3, 3)
    assert a3.at_root_of_unity(3) == poly(0, 0, 3)
    r = smirnov.root_of_unity("Aless", 6, 3)
    assert r["holds"] and r["reduced"] == r["closed"]

    fx = smirnov.f_expansion("W", 3)
    assert sum(m for _, _, m in fx) == 6

    half = smirnov.Poly({0: Fraction(1, 2), 2: 3})
    assert half.coefficients() == {0: Fraction(1, 2), 2: Fraction(3)}
    assert (half * half).coeff(2) == 3 and half.degree == 2

    report = smirnov.verify("roots", max_order=5)
    assert report and all(r["status"] == "pass" for r in report)

    for bad in (lambda: smirnov.closed_form("nope", 3),
                lambda: smirnov.brute_force("W", 9),
                lambda: smirnov.verify(max_n=0)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("smoke test passed:", w3)


if __name__ == "__main__":
    main()
