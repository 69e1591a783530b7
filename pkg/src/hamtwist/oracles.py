"""Independent second implementations used to cross-check the engine.

Nothing here shares code paths with the closed-form machinery: the
characteristic-0 bracket is recomputed through literal differentiation of
Laurent polynomials, the modular bracket through commutators of derivations
of the divided power algebra, and the d^(ell) operators through repeated
brackets.  The verification suites compare these against the formula-based
implementations.
"""

from fractions import Fraction

from .enveloping import commutator
from .indices import MultiIndex
from .lie_h import LieElement, bracket
from .modular import (DividedElement, ModularLieElement, divided_derivative,
                      divided_multiply, modular_bracket)
from .scalars import Mod, Rat


def _laurent_derivative(poly, pos):
    """d/dx_pos of a sparse Laurent polynomial {exponents: coeff}."""
    out = {}
    for expo, c in poly.items():
        k = MultiIndex(expo).get(pos)
        if k == 0:
            continue
        out[tuple(MultiIndex(expo).shifted(pos, -1))] = c * k
    return out


def _laurent_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _laurent_add(a, b, sign=1):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + sign * c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def laurent_poisson(alpha, beta):
    """{x^alpha, x^beta} computed by raw differentiation, as {index: int}."""
    n = alpha.n
    u = {tuple(alpha): 1}
    v = {tuple(beta): 1}
    out = {}
    for i in range(1, n + 1):
        t1 = _laurent_mul(_laurent_derivative(u, -i), _laurent_derivative(v, i))
        t2 = _laurent_mul(_laurent_derivative(u, i), _laurent_derivative(v, -i))
        out = _laurent_add(out, _laurent_add(t1, t2, sign=-1))
    return out


def bracket_via_poisson(a, b):
    """Characteristic-0 bracket recomputed as DH of the Poisson bracket."""
    ctx = a.ctx
    out = LieElement(ctx, {}, _checked=True)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            terms = {}
            for expo, c in laurent_poisson(ka, kb).items():
                idx = MultiIndex(expo)
                if idx.is_zero():
                    continue
                terms[idx] = Rat(c)
            out = out + LieElement(ctx, terms, _checked=True).scale(ca * cb)
    return out


class WElement:
    """Derivation of O(2n;1): sparse sum of x^(beta) D_j terms."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=()):
        self.ctx = ctx
        self.terms = {k: v for k, v in dict(terms).items() if not v.is_zero()}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return WElement(self.ctx, out)

    def __neg__(self):
        return WElement(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.terms

    def apply(self, f):
        """Act on a divided power element."""
        ctx = self.ctx
        out = DividedElement(ctx, {}, _checked=True)
        for (beta, j), c in self.terms.items():
            part = divided_multiply(DividedElement.monomial(ctx, beta),
                                    divided_derivative(f, j))
            out = out + part.scale(c)
        return out


def dh_to_w(ctx, alpha):
    """DH(x^(alpha)) as an honest derivation of O(2n;1)."""
    one = ctx.field.one()
    terms = {}
    for i in range(1, ctx.n + 1):
        if alpha.get(-i) >= 1:
            key = (alpha.shifted(-i, -1), i)
            terms[key] = terms.get(key, ctx.field.zero()) + one
        if alpha.get(i) >= 1:
            key = (alpha.shifted(i, -1), -i)
            terms[key] = terms.get(key, ctx.field.zero()) - one
    return WElement(ctx, terms)


def w_commutator(a, b):
    """[a, b] for derivations, computed from the Leibniz rule."""
    ctx = a.ctx
    out = {}

    def accumulate(coeff, beta_elem, j):
        for beta, c in beta_elem.terms.items():
            key = (beta, j)
            s = out.get(key, ctx.field.zero()) + coeff * c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s

    for (b1, j1), c1 in a.terms.items():
        for (b2, j2), c2 in b.terms.items():
            # [b1 D_j1, b2 D_j2] = b1 D_j1(b2) D_j2 - b2 D_j2(b1) D_j1
            left = divided_multiply(DividedElement.monomial(ctx, b1),
                                    divided_derivative(DividedElement.monomial(ctx, b2), j1))
            accumulate(c1 * c2, left, j2)
            right = divided_multiply(DividedElement.monomial(ctx, b2),
                                     divided_derivative(DividedElement.monomial(ctx, b1), j2))
            accumulate(-(c1 * c2), right, j1)
    return WElement(ctx, out)


def w_to_dh_span(w):
    """Express a derivation as a combination of DH(x^(gamma)), gamma != 0.

    Each term x^(beta) D_j can only come from gamma = beta + e_-j (coefficient
    +1) when j > 0, or gamma = beta + e_|j| (coefficient -1) when j < 0, so
    reading the terms proposes every coefficient; conflicting or unexplained
    proposals mean the element is not in the span and raise.
    """
    ctx = w.ctx
    coeffs = {}
    for (beta, j), c in w.terms.items():
        if j > 0:
            gamma, val = beta.shifted(-j, 1), c
        else:
            gamma, val = beta.shifted(-j, 1), -c
        if not gamma.within(ctx.p - 1):
            raise ValueError("derivation is not in the Hamiltonian span")
        prev = coeffs.get(gamma)
        if prev is None:
            coeffs[gamma] = val
        elif not prev == val:
            raise ValueError("derivation is not in the Hamiltonian span")
    rebuilt = WElement(ctx, {})
    for gamma, c in coeffs.items():
        rebuilt = rebuilt + WElement(ctx, {k: v * c for k, v in dh_to_w(ctx, gamma).terms.items()})
    if not (rebuilt - w).is_zero():
        raise ValueError("derivation is not in the Hamiltonian span")
    return coeffs


def modular_bracket_via_w(ctx, alpha, beta):
    """[DH(x^(alpha)), DH(x^(beta))] through derivation commutators.

    Returns (element of H(2n;1), tau coefficient); closure of the bracket on
    the basis means the tau coefficient is always zero there.
    """
    w = w_commutator(dh_to_w(ctx, alpha), dh_to_w(ctx, beta))
    coeffs = w_to_dh_span(w)
    tau_coeff = coeffs.pop(ctx.tau, ctx.field.zero())
    return ModularLieElement(ctx, coeffs, _checked=True), tau_coeff


def lie_d_ell_char0(e_elem, x_elem, ell):
    """d^(ell) = (ad e)^ell / ell! computed by repeated brackets."""
    out = x_elem
    for _ in range(ell):
        out = bracket(e_elem, out)
    f = 1
    for j in range(2, ell + 1):
        f *= j
    return out.scale(Fraction(1, f))


def lie_d_ell_modular(e_elem, x_elem, ell):
    out = x_elem
    for _ in range(ell):
        out = modular_bracket(e_elem, out)
    f = 1
    for j in range(2, ell + 1):
        f *= j
    return out.scale(Mod(f, x_elem.ctx.p).inverse())


def u_d_ell(e_u, x_u, ell):
    """d^(ell) inside the enveloping algebra (used for powers of generators)."""
    out = x_u
    for _ in range(ell):
        out = commutator(e_u, out)
    f = 1
    for j in range(2, ell + 1):
        f *= j
    if f == 1:
        return out
    if e_u.alg.field.char:
        return out.scale(Mod(f, e_u.alg.field.char).inverse())
    return out.scale(Fraction(1, f))
