import pytest

from hamtwist.indices import MultiIndex
from hamtwist.lie_h import LieElement, full_context
from hamtwist.modular import ModularContext, ModularLieElement
from hamtwist.syntax import (ParseError, detect_shape, dh_name, dhp_name,
                             format_lie, format_modular, format_mono,
                             parse_lie, parse_modular, parse_terms)


def test_basis_names():
    assert dh_name(MultiIndex((1, 2))) == "DH[1;2]"
    assert dh_name(MultiIndex((1, 0, 2, 3))) == "DH[1,0;2,3]"
    assert dhp_name(MultiIndex((1, 2)), 3) == "DHp[1;2]@3"


def test_parse_single_vector():
    ctx = full_context(1)
    assert parse_lie("DH[1;2]", ctx) == LieElement.basis(ctx, (1, 2))
    assert parse_lie("-DH[1;2]", ctx) == LieElement.basis(ctx, (1, 2), -1)
    assert parse_lie("3*DH[0;1]", ctx) == LieElement.basis(ctx, (0, 1), 3)
    assert parse_lie("1/2*DH[0;1]", ctx) == LieElement.basis(ctx, (0, 1)).scale(
        __import__("fractions").Fraction(1, 2))


def test_parse_sums_and_whitespace():
    ctx = full_context(2)
    a = parse_lie("2*DH[0,0;1,1] - DH[1,0;2,0] + DH[0,0;1,1]", ctx)
    b = (LieElement.basis(ctx, (0, 0, 1, 1), 3)
         + LieElement.basis(ctx, (1, 0, 2, 0), -1))
    assert a == b
    assert parse_lie("  2 * DH[0,0;1,1]\t-DH[1,0;2,0]+DH[0,0;1,1] ", ctx) == b
    # Laurent components parse too
    assert parse_lie("DH[-1;2]", full_context(1)) == LieElement.basis(
        full_context(1), (-1, 2))


def test_parse_modular_and_reduction_of_coefficients():
    ctx = ModularContext(1, 3)
    assert parse_modular("DHp[1;1]@3", ctx) == ModularLieElement.basis(ctx, (1, 1))
    assert parse_modular("2*DHp[1;2]@3 + DHp[1;2]@3", ctx).is_zero()
    # rational coefficients reduce through the inverse mod p
    assert parse_modular("1/2*DHp[0;1]@3", ctx) == ModularLieElement.basis(ctx, (0, 1), 2)


def test_parse_errors():
    ctx = full_context(1)
    for bad in ("", "DH[1]", "DH[1;2]@3", "DHp[1;2]", "DH[1;2]DH[0;1]",
                "1.5*DH[1;2]", "DH[;]"):
        with pytest.raises(ParseError):
            parse_lie(bad, ctx)
    with pytest.raises(ParseError):
        parse_lie("DH[1,0;2,0]", ctx)  # rank mismatch
    with pytest.raises(ParseError):
        parse_modular("DHp[1;1]@5", ModularContext(1, 3))
    with pytest.raises(ParseError):
        parse_modular("DHp[2;2]@3", ModularContext(1, 3))  # not a basis index
    with pytest.raises(ParseError):
        parse_modular("1/3*DHp[1;1]@3", ModularContext(1, 3))  # not p-integral


def test_detect_shape():
    assert detect_shape("DH[1;2] + DH[0;1]") == {"kind": "DH", "n": 1, "p": None}
    assert detect_shape("DHp[1,0;0,1]@5") == {"kind": "DHp", "n": 2, "p": 5}
    with pytest.raises(ParseError):
        detect_shape("DH[1;2] + DHp[1;1]@3")


def test_round_trips():
    ctx = full_context(2)
    elems = [
        LieElement.basis(ctx, (0, 0, 1, 1)),
        LieElement.basis(ctx, (1, 0, 2, 0), -1) + LieElement.basis(ctx, (0, 1, 0, 1), 2),
        LieElement.basis(ctx, (0, 0, 0, 1)).scale(
            __import__("fractions").Fraction(-3, 7)),
        LieElement.basis(ctx, (-1, 0, 2, 0)) - LieElement.basis(ctx, (0, 0, 1, 0), 5),
    ]
    for e in elems:
        assert parse_lie(format_lie(e), ctx) == e
    mctx = ModularContext(1, 5)
    m = (ModularLieElement.basis(mctx, (1, 2), 3)
         + ModularLieElement.basis(mctx, (0, 1), 4))
    assert parse_modular(format_modular(m), mctx) == m


def test_zero_formatting():
    ctx = full_context(1)
    assert format_lie(LieElement(ctx, {})) == "0"


def test_format_mono():
    from hamtwist.enveloping import enveloping
    alg = enveloping(full_context(1))
    mono = ((MultiIndex((1, 1)), 2), (MultiIndex((1, 2)), 1))
    assert format_mono(alg, mono) == "DH[1;1]^2*DH[1;2]"
    assert format_mono(alg, ()) == "1"


def test_parse_terms_structure():
    terms = parse_terms("2*DH[0;1]-DHp[1;1]@3")
    assert terms[0][:2] == (2, "DH") and terms[1][1] == "DHp" and terms[1][3] == 3
