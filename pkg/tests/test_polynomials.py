"""Sparse polynomial arithmetic, monomial orders, and printing."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringgraph import (
    GREVLEX,
    LEX,
    QQ,
    PolyRing,
    PrimeField,
    RingGraphError,
    elimination_order,
    parse_polynomial,
)
from ringgraph.polynomials import embed, fresh_names, strip_first

R3 = PolyRing(QQ, ("x", "y", "z"))
X, Y, Z = R3.gens()


def monos(nvars=3, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def polys(ring=R3, max_exp=3):
    return st.dictionaries(
        monos(ring.nvars, max_exp),
        st.integers(-9, 9).filter(lambda c: c != 0).map(ring.field.from_int),
        min_size=0,
        max_size=4,
    ).map(ring.poly)


class TestRingConstruction:
    def test_duplicate_names_refused(self):
        with pytest.raises(RingGraphError):
            PolyRing(QQ, ("x", "x"))

    def test_equality_includes_field(self):
        assert PolyRing(QQ, ("x",)) == PolyRing(QQ, ("x",))
        assert PolyRing(QQ, ("x",)) != PolyRing(PrimeField(5), ("x",))
        assert PolyRing(QQ, ("x",)) != PolyRing(QQ, ("y",))

    def test_extended_and_fresh_names(self):
        ext = R3.extended(("t",), front=True)
        assert ext.names == ("t", "x", "y", "z")
        (name,) = fresh_names(R3, "~t", 1)
        assert name not in R3.names


class TestArithmetic:
    @given(polys(), polys(), polys())
    def test_ring_axioms(self, f, g, h):
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + R3.zero() == f
        assert f * R3.one() == f
        assert f - f == R3.zero()

    @given(polys(), st.integers(0, 4))
    def test_power_matches_repeated_product(self, f, n):
        expected = R3.one()
        for _ in range(n):
            expected = expected * f
        assert f ** n == expected

    def test_int_coercion(self):
        assert (X + 1) - 1 == X
        assert 2 * X == X + X

    def test_evaluate_and_compose(self):
        f = X * Y - Z ** 2
        assert f.evaluate([QQ.from_int(2), QQ.from_int(3), QQ.from_int(1)]) == QQ.from_int(5)
        g = f.compose([Y, X, X + Y])
        assert g == Y * X - (X + Y) ** 2

    @given(polys())
    def test_scale_and_monic(self, f):
        assert f.scale(0).is_zero()
        if not f.is_zero():
            m = f.monic(GREVLEX)
            assert m.leading_term(GREVLEX)[1] == QQ.one
            assert m.scale(f.leading_term(GREVLEX)[1]) == f


class TestOrders:
    def test_grevlex_degree_first(self):
        f = X ** 2 + X * Y ** 2
        assert f.leading_monomial(GREVLEX) == (1, 2, 0)

    def test_grevlex_tie_break(self):
        # Same degree: the earlier variable wins.
        f = X * Y + Y * Z
        assert f.leading_monomial(GREVLEX) == (1, 1, 0)
        assert (X + Y + Z).leading_monomial(GREVLEX) == (1, 0, 0)

    def test_lex_ignores_degree(self):
        f = X + Y ** 5
        assert f.leading_monomial(LEX) == (1, 0, 0)

    def test_elimination_block_dominates(self):
        order = elimination_order(1)
        # Any monomial involving x beats any monomial without it.
        f = X + Y ** 7 * Z ** 7
        assert f.leading_monomial(order) == (1, 0, 0)

    @given(monos(), monos())
    def test_compare_is_antisymmetric(self, a, b):
        for order in (GREVLEX, LEX, elimination_order(1)):
            assert order.compare(a, b) == -order.compare(b, a)


class TestStringRoundTrip:
    def test_known_forms(self):
        assert str(R3.zero()) == "0"
        assert str(X - Y) == "x - y"
        assert str(-X * Z + Z ** 2) == "-x*z + z^2"
        assert str(X.scale(QQ.from_fraction(__import__("fractions").Fraction(1, 2)))) == "1/2*x"

    @given(polys())
    def test_parse_inverts_print(self, f):
        assert parse_polynomial(str(f), R3) == f

    @given(polys(PolyRing(PrimeField(7), ("x", "y", "z"))))
    def test_parse_inverts_print_fp(self, f):
        assert parse_polynomial(str(f), f.ring) == f


class TestEmbedding:
    def test_embed_strip_round_trip(self):
        ext = R3.extended(("t",), front=True)
        shifted = tuple(i + 1 for i in range(3))
        f = X * Y - Z ** 3
        lifted = embed(f, ext, shifted)
        assert strip_first(lifted, 1, R3) == f

    def test_strip_refuses_used_variable(self):
        ext = R3.extended(("t",), front=True)
        with pytest.raises(RingGraphError):
            strip_first(ext.var(0), 1, R3)
