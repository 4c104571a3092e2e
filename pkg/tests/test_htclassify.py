from __future__ import annotations

import pytest

from golden import expected, known_even_erratum
from ssweil.errors import BadArguments, NotPrime
from ssweil.htclassify import (
    degree_identity_holds,
    enumerate_classes,
    enumerate_even,
    enumerate_odd,
    multiplicity_even,
)
from ssweil.oracle import is_supersingular_exact, is_weil_structured
from ssweil.polyarith import IntegerPolynomial, poly_mul
from ssweil.weilmin import CaseTag


def P(*c):
    return IntegerPolynomial(c)


def local_degree(p: int, m: int) -> int:
    """[Q_p(zeta_m) : Q_p] from first principles: residue degree times ramification."""
    s, pk = m, 1
    while s % p == 0:
        s //= p
        pk *= p
    f = next(r for r in range(1, s + 1) if pow(p, r, s) == 1 % s)
    ram = pk - pk // p if pk > 1 else 1
    return f * ram


def test_multiplicity_examples():
    assert multiplicity_even(2, 3) == (2, 1)
    assert multiplicity_even(7, 3) == (1, 2)
    assert multiplicity_even(2, 1) == (1, 2)
    assert multiplicity_even(2, 14) == (3, 2)
    with pytest.raises(BadArguments):
        multiplicity_even(2, 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_multiplicity_is_local_degree_parity(p):
    for m in range(1, 120):
        r, e = multiplicity_even(p, m)
        assert r == local_degree(p, m)
        assert e == (2 if r % 2 else 1)


def test_enumerate_even_examples():
    recs = enumerate_even(2, 2, 1)
    assert {r.char_poly for r in recs} == {P(4, 2, 1), P(4, 0, 1), P(4, -2, 1), P(4, -4, 1), P(4, 4, 1)}
    sq = poly_mul(P(49, 7, 1), P(49, 7, 1))
    assert sq in {r.char_poly for r in enumerate_even(7, 2, 2)}
    assert all(enumerate_even(p, 2, 7) == [] for p in (2, 3, 5, 7, 11, 13))
    with pytest.raises(BadArguments):
        enumerate_even(2, 1, 1)


def test_enumerate_odd_examples():
    assert {r.weil_poly for r in enumerate_odd(3, 1, 1)} == {P(3, 0, 1), P(3, 3, 1), P(3, -3, 1)}
    got = {r.char_poly for r in enumerate_odd(3, 1, 2)}
    assert got == {P(9, 0, 3, 0, 1), P(9, 0, -6, 0, 1), P(9, 0, 0, 0, 1)}
    assert P(9, 0, -3, 0, 1) not in got
    g5 = enumerate_odd(11, 1, 5)
    assert len(g5) == 2 and all(r.case_tag is CaseTag.EXC_ODD_P and r.param == 11 for r in g5)
    with pytest.raises(BadArguments):
        enumerate_odd(3, 2, 1)


def test_enumerate_dispatch_examples():
    assert enumerate_classes(2, 1, 7) == []
    assert len(enumerate_classes(2, 1, 4)) == 5
    assert {r.weil_poly for r in enumerate_classes(3, 1, 3)} == {P(27, 0, 0, 9, 0, 0, 1), P(27, 0, 0, -9, 0, 0, 1)}
    with pytest.raises(NotPrime):
        enumerate_classes(4, 1, 1)
    with pytest.raises(BadArguments):
        enumerate_classes(3, 1, 0)


def test_real_polynomial_routed_to_dimension_two():
    for p in (2, 3, 5):
        assert all(r.weil_poly != P(-p, 0, 1) for r in enumerate_odd(p, 1, 1))
        real = [r for r in enumerate_odd(p, 1, 2) if r.case_tag is CaseTag.REAL_ODD]
        assert len(real) == 1 and real[0].e == 2 and real[0].weil_poly == P(-p, 0, 1)


def test_dedup_across_signs_keeps_plus_witness():
    recs = enumerate_odd(2, 1, 1)
    assert len({r.weil_poly for r in recs}) == len(recs)
    two = [r for r in recs if r.weil_poly in (P(2, 2, 1), P(2, -2, 1))]
    assert all(r.field.sign == 1 and r.case_tag is CaseTag.EXC_TWO_PLUS for r in two)


FIELDS = [(p, n) for p in (2, 3, 5, 7, 11, 13) for n in (1, 2, 3, 4)]


@pytest.mark.parametrize("p,n", FIELDS)
def test_record_invariants(p, n):
    for g in range(1, 8):
        recs = enumerate_classes(p, n, g)
        assert recs == sorted(recs, key=lambda r: (r.weil_poly.degree, r.weil_poly.coeffs))
        for r in recs:
            assert degree_identity_holds(r) and r.e in (1, 2)
            assert is_weil_structured(r.char_poly, p**n)
            assert is_supersingular_exact(r.weil_poly, p**n) is not None
            if n % 2 == 0 and g % 2 and g > 2:
                assert r.e == 1
            if n % 2 and g % 2 and g > 1:
                assert r.case_tag is not CaseTag.NORMAL


@pytest.mark.parametrize("p,n", FIELDS)
def test_against_transcribed_tables(p, n):
    erratum = known_even_erratum(p, n)
    for g in range(1, 8):
        got = {r.char_poly.coeffs for r in enumerate_classes(p, n, g)}
        want = expected(p, n, g)
        listed_absent, unlisted = erratum.get(g, (set(), set()))
        assert want - got == listed_absent
        assert got - want == unlisted


def test_json_record_shape():
    rec = enumerate_classes(2, 2, 1)[0]
    js = rec.to_json()
    assert set(js) == {"p", "n", "q", "g", "case", "param", "variant", "weil_coeffs", "e", "char_coeffs"}
    assert js["q"] == "4" and js["variant"] == "none"
    assert all(isinstance(c, str) for c in js["weil_coeffs"] + js["char_coeffs"])
