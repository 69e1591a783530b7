import random

import pytest

from hamtwist.indices import MultiIndex
from hamtwist.lie_h import LieElement, bracket, plus_context
from hamtwist.modular import (DividedElement, ModularContext,
                              ModularLieElement, divided_derivative,
                              divided_multiply, modular_bracket,
                              modular_bracket_indices, p_power_keys,
                              poisson_divided, reduce_to_modular)
from hamtwist.oracles import dh_to_w, modular_bracket_via_w, w_to_dh_span
from hamtwist.scalars import Mod


def test_divided_multiply_examples():
    ctx = ModularContext(1, 3)
    x1 = DividedElement.monomial(ctx, (0, 1))
    assert divided_multiply(x1, x1) == DividedElement.monomial(ctx, (0, 2), 2)
    one = DividedElement.one(ctx)
    b = DividedElement.monomial(ctx, (1, 2), 2)
    assert divided_multiply(one, b) == b
    x2 = DividedElement.monomial(ctx, (0, 2))
    assert divided_multiply(x2, x2).is_zero()  # component 4 >= p


def test_divided_derivative():
    ctx = ModularContext(1, 3)
    f = DividedElement.monomial(ctx, (1, 2))
    assert divided_derivative(f, 1) == DividedElement.monomial(ctx, (1, 1))
    assert divided_derivative(f, -1) == DividedElement.monomial(ctx, (0, 2))
    assert divided_derivative(DividedElement.monomial(ctx, (0, 2)), -1).is_zero()


def test_poisson_divided_examples():
    ctx = ModularContext(1, 3)
    # oracle: commutator of the corresponding derivations, re-expressed below
    u = DividedElement.monomial(ctx, (1, 1))
    v = DividedElement.monomial(ctx, (1, 2))
    assert poisson_divided(u, v) == v
    assert poisson_divided(v, v).is_zero()
    a = DividedElement.monomial(ctx, (0, 2))
    b = DividedElement.monomial(ctx, (2, 0))
    # char-0 value -4 reduces to 2 mod 3
    assert poisson_divided(a, b) == DividedElement.monomial(ctx, (1, 1), 2)


@pytest.mark.parametrize("n,p", [(1, 3), (1, 5), (2, 3)])
def test_basis_count(n, p):
    ctx = ModularContext(n, p)
    basis = ctx.basis_indices()
    assert len(basis) == p ** (2 * n) - 2
    assert all(ctx.admissible(i) for i in basis)
    assert MultiIndex.zero(n) not in basis and ctx.tau not in basis


def test_toral_detection():
    ctx = ModularContext(2, 3)
    assert ctx.is_toral(MultiIndex((1, 0, 1, 0)))
    assert ctx.is_toral(MultiIndex((0, 1, 0, 1)))
    assert not ctx.is_toral(MultiIndex((0, 1, 1, 0)))
    assert not ctx.is_toral(MultiIndex((1, 1, 1, 1)))
    assert p_power_keys(ctx, MultiIndex((1, 0, 1, 0))) == {MultiIndex((1, 0, 1, 0)): Mod(1, 3)}
    assert p_power_keys(ctx, MultiIndex((0, 1, 1, 0))) == {}


@pytest.mark.parametrize("p", [3, 5])
def test_modular_bracket_vs_derivation_oracle_exhaustive(p):
    ctx = ModularContext(1, p)
    basis = ctx.basis_indices()
    for a in basis:
        for b in basis:
            got = ModularLieElement(ctx, modular_bracket_indices(ctx, a, b))
            want, tau_c = modular_bracket_via_w(ctx, a, b)
            assert tau_c.is_zero(), (a, b)
            assert got == want, (a, b)


def test_modular_bracket_vs_derivation_oracle_sampled_n2():
    ctx = ModularContext(2, 3)
    basis = ctx.basis_indices()
    rng = random.Random(11)
    for _ in range(80):
        a, b = rng.choice(basis), rng.choice(basis)
        got = ModularLieElement(ctx, modular_bracket_indices(ctx, a, b))
        want, tau_c = modular_bracket_via_w(ctx, a, b)
        assert tau_c.is_zero()
        assert got == want


def test_modular_bracket_frozen_example():
    ctx = ModularContext(1, 3)
    h = ModularLieElement.basis(ctx, (1, 1))
    e1 = ModularLieElement.basis(ctx, (1, 2))
    assert modular_bracket(h, e1) == e1
    a = ModularLieElement.basis(ctx, (0, 2))
    b = ModularLieElement.basis(ctx, (2, 0))
    assert modular_bracket(a, b) == ModularLieElement.basis(ctx, (1, 1), 2)


def test_modular_antisymmetry_jacobi_exhaustive():
    ctx = ModularContext(1, 3)
    basis = [ModularLieElement.basis(ctx, i) for i in ctx.basis_indices()]
    for x in basis:
        for y in basis:
            assert (modular_bracket(x, y) + modular_bracket(y, x)).is_zero()
    for x in basis:
        for y in basis:
            for z in basis:
                total = (modular_bracket(x, modular_bracket(y, z))
                         + modular_bracket(y, modular_bracket(z, x))
                         + modular_bracket(z, modular_bracket(x, y)))
                assert total.is_zero()


def test_reduce_to_modular_examples():
    plus = plus_context(1)
    # alpha! bookkeeping: (2e_1 + e_-1)! = 2
    x = LieElement.basis(plus, (1, 2))
    assert reduce_to_modular(x, 3) == ModularLieElement.basis(ModularContext(1, 3), (1, 2), 2)
    # indices with a component >= p die
    y = LieElement.basis(plus, (0, 3))
    assert reduce_to_modular(y, 3).is_zero()
    # the tau line dies
    z = LieElement.basis(plus, (2, 2))
    assert reduce_to_modular(z, 3).is_zero()
    # alpha! = 1 keeps the coefficient
    w = LieElement.basis(plus, (1, 1))
    assert reduce_to_modular(w, 3) == ModularLieElement.basis(ModularContext(1, 3), (1, 1))
    with pytest.raises(ValueError):
        reduce_to_modular(LieElement.basis(plus_context(1), (1, 1)).scale(1), 4)


@pytest.mark.parametrize("p", [3, 5])
def test_reduction_commutes_with_bracket(p):
    plus = plus_context(1)
    mctx = ModularContext(1, p)
    for a in mctx.basis_indices():
        for b in mctx.basis_indices():
            xa, xb = LieElement.basis(plus, a), LieElement.basis(plus, b)
            lhs = reduce_to_modular(bracket(xa, xb), p)
            rhs = modular_bracket(reduce_to_modular(xa, p), reduce_to_modular(xb, p))
            assert lhs == rhs, (a, b)


def test_w_span_reconstruction_roundtrip():
    ctx = ModularContext(1, 3)
    for gamma in ctx.divided_range():
        if gamma.is_zero():
            continue
        coeffs = w_to_dh_span(dh_to_w(ctx, gamma))
        assert coeffs == {gamma: Mod(1, 3)}
    # something outside the span raises
    from hamtwist.oracles import WElement
    stray = WElement(ctx, {(MultiIndex((0, 1)), 1): Mod(1, 3)})
    with pytest.raises(ValueError):
        w_to_dh_span(stray)


def test_basis_keys_stay_in_range():
    ctx = ModularContext(1, 3)
    with pytest.raises(ValueError):
        ModularLieElement(ctx, {MultiIndex((0, 3)): 1})
    with pytest.raises(ValueError):
        ModularLieElement.basis(ctx, (2, 2))
    # tau and zero silently project away when built from tables
    elem = ModularLieElement(ctx, {MultiIndex((2, 2)): 1, MultiIndex((1, 1)): 1})
    assert elem == ModularLieElement.basis(ctx, (1, 1))
