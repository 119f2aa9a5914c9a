import pytest
from hypothesis import given, settings, strategies as st

from crossorder.errors import (
    CocycleIdentityViolated,
    NotAUnit,
    NotNormalized,
    NotSValued,
    ParseError,
    ShapeMismatch,
    ZeroElement,
)
from crossorder.qix import (
    I,
    ONE,
    ZERO,
    GaussRat,
    QiPoly,
    QiRatFunc,
    X,
    build_example,
    conj,
    format_element,
    parse_element,
    to_valuation_model,
    unit_scale,
    val_at,
    validate_exact_cocycle,
    verify_coboundary_exact,
)
from crossorder.valuation import is_zero

P = parse_element
ROOTS = (GaussRat.of(0, -1), GaussRat.of(0, 1))  # x+i vanishes at -i, x-i at i


def _derivative(p: QiPoly) -> QiPoly:
    return QiPoly.make([c * GaussRat.of(k) for k, c in enumerate(p.coeffs)][1:])


def _order_of_vanishing(p: QiPoly, root: GaussRat) -> int:
    k = 0
    while not p(root):
        p = _derivative(p)
        k += 1
    return k


def _oracle_val(a: QiRatFunc, M: int) -> int:
    return _order_of_vanishing(a.num, ROOTS[M]) - _order_of_vanishing(a.den, ROOTS[M])


gauss = st.builds(GaussRat.of, st.integers(-3, 3), st.integers(-3, 3))
polys = st.lists(gauss, min_size=1, max_size=4).map(QiPoly.make).filter(bool)


@st.composite
def elements(draw):
    """Nonzero rational functions with controlled behaviour at the two ideals."""
    a, b, c, d = (draw(st.integers(0, 3)) for _ in range(4))
    xi, xmi = QiRatFunc.of(QiPoly.make([I, ONE])), QiRatFunc.of(QiPoly.make([-I, ONE]))
    num, den = QiRatFunc.of(draw(polys)), QiRatFunc.of(draw(polys))
    return xi ** a * xmi ** b / (xi ** c * xmi ** d) * num / den


def test_arithmetic_examples():
    assert P("x+i") * P("x-i") == P("x^2+1")
    assert P("x^2+1") / P("x+i") == P("x-i")
    assert P("1/2") + P("1/2") == P("1")
    assert P("x^2-1/x-1") == P("x+1")
    assert P("1/2*x") * P("2") == P("x")
    with pytest.raises(ZeroDivisionError):
        P("x") / P("0")


def test_conj_examples():
    assert conj(P("x+i")) == P("x-i")
    assert conj(P("(1+2i)*x")) == P("(1-2i)*x")
    assert conj(P("x^2+1")) == P("x^2+1")


def test_val_examples():
    assert val_at(P("x^2+1"), 0) == val_at(P("x^2+1"), 1) == 1
    sq = P("x+i") * P("x+i") / P("x-i")
    assert val_at(sq, 0) == 2 and val_at(sq, 1) == -1
    assert val_at(P("x^2+2i*x-1/x-i"), 0) == 2
    assert val_at(P("x"), 0) == 0
    assert val_at(P("5"), 1) == 0
    with pytest.raises(ZeroElement):
        val_at(P("0"), 0)


def test_format_examples():
    assert format_element(P("x^3+x")) == "x^3+x"
    assert format_element(P("x+i")) == "x+1i"
    assert format_element(P("x^2+1") * P("x")) == "x^3+x"
    assert format_element(P("x+i") / P("x-i")) == "x+1i/x-1i"
    assert format_element(P("-x+1/2")) == "-1*x+1/2"
    assert format_element(P("0")) == "0"


@pytest.mark.parametrize("bad", ["x^", "(1+x", "x/0", "1/0", "x^2+*", "y", "(x^2+1)*x", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_examples_and_valuations(f1, f2):
    e1, e2 = build_example("f1"), build_example("f2")
    assert e1[1, 1] == P("x^3+x")
    assert e2[1, 1] == P("x^5+2*x^3+x")
    assert to_valuation_model(e1) == f1
    assert to_valuation_model(e2) == f2
    with pytest.raises(ValueError):
        build_example("f3")


def test_exact_validation_errors():
    with pytest.raises(NotNormalized):
        validate_exact_cocycle([["1", "x"], ["1", "1"]])
    with pytest.raises(NotSValued):
        validate_exact_cocycle([["1", "1"], ["1", "1/x+i"]])
    with pytest.raises(NotSValued):
        validate_exact_cocycle([["1", "1"], ["1", "0"]])
    # f(s,s) must be fixed by conjugation
    with pytest.raises(CocycleIdentityViolated):
        validate_exact_cocycle([["1", "1"], ["1", "x+i"]])
    with pytest.raises(ShapeMismatch):
        validate_exact_cocycle([["1"]])


def test_exact_coboundary():
    e1, e2 = build_example("f1"), build_example("f2")
    one = QiRatFunc.of(1)
    assert verify_coboundary_exact(e1, e2, [one, P("x+i")])
    assert not verify_coboundary_exact(e1, e2, [one, P("x")])
    with pytest.raises(ShapeMismatch):
        verify_coboundary_exact(e1, e2, [P("x"), P("x+i")])
    with pytest.raises(ZeroElement):
        verify_coboundary_exact(e1, e2, [one, P("0")])


def test_unit_scale():
    e1 = build_example("f1")
    g = unit_scale(e1, P("x"))
    assert g[1, 1] == P("x^5+x^3")
    assert to_valuation_model(g) == to_valuation_model(e1)
    with pytest.raises(NotAUnit):
        unit_scale(e1, P("x+i"))
    with pytest.raises(NotAUnit):
        unit_scale(e1, P("0"))


@settings(max_examples=120, deadline=None)
@given(elements(), elements(), st.sampled_from([0, 1]))
def test_val_is_additive_and_matches_oracle(a, b, M):
    assert val_at(a, M) == _oracle_val(a, M)
    assert val_at(a * b, M) == val_at(a, M) + val_at(b, M)
    s = a + b
    if s:
        assert val_at(s, M) >= min(val_at(a, M), val_at(b, M))


@settings(max_examples=120, deadline=None)
@given(elements(), elements())
def test_conj_is_involutive_automorphism(a, b):
    assert conj(conj(a)) == a
    assert conj(a * b) == conj(a) * conj(b)
    assert conj(a + b) == conj(a) + conj(b)
    assert conj(a / b) == conj(a) / conj(b)
    # conjugation swaps the two ideals
    assert val_at(conj(a), 0) == val_at(a, 1)


@settings(max_examples=120, deadline=None)
@given(elements())
def test_format_parse_round_trip(a):
    assert P(format_element(a)) == a


# linear factors x - z with z away from the roots +-i
away = st.tuples(st.integers(-2, 2), st.integers(-2, 2)).filter(lambda ab: ab not in ((0, 1), (0, -1)))


@st.composite
def units(draw):
    c = QiRatFunc.of(draw(st.builds(GaussRat.of, st.integers(1, 3), st.integers(-2, 2))))
    for a, b in draw(st.lists(away, max_size=3)):
        c = c * QiRatFunc.of(QiPoly.make([GaussRat.of(-a, -b), ONE]))
    for a, b in draw(st.lists(away, max_size=2)):
        c = c / QiRatFunc.of(QiPoly.make([GaussRat.of(-a, -b), ONE]))
    return c


@settings(max_examples=60, deadline=None)
@given(units())
def test_unit_scale_preserves_valuations(c):
    assert val_at(c, 0) == val_at(c, 1) == 0
    for name in ("f1", "f2"):
        e = build_example(name)
        assert to_valuation_model(unit_scale(e, c)) == to_valuation_model(e)


def test_polynomial_helpers():
    assert X.degree == 1
    assert not QiPoly.make([ZERO])
    q, r = divmod(QiPoly.make([ONE, ZERO, ONE]), QiPoly.make([I, ONE]))
    assert not r and q == QiPoly.make([-I, ONE])
    assert is_zero((0, 0))
