"""Divided power algebra O(2n;1) and the restricted Hamiltonian algebra H(2n;1).

Over GF(p) the divided monomials x^(alpha) with 0 <= alpha <= tau,
tau = (p-1,...,p-1), multiply through multi-binomials and vanish as soon as a
component leaves [0, p-1].  The Hamiltonian algebra H(2n;1) is spanned by
DH(x^(alpha)) for alpha in the index set B = {0 <= alpha <= tau} minus
{0, tau}, which has exactly p^{2n} - 2 elements; its bracket is realized
through the divided-power Poisson bracket

    {u, v} = sum_i (D_{-i} u . D_i v  -  D_i u . D_{-i} v),

with D_j x^(alpha) = x^(alpha - e_j).  Indices 0 and tau never enter B:
the zero index is killed by the Hamiltonian map and the tau line is projected
away (its coefficient in a bracket of B-elements vanishes mod p anyway).
"""

from dataclasses import dataclass
from itertools import product as iproduct

from .indices import MultiIndex
from .lie_h import LieElement, H_PLUS
from .scalars import Mod, PrimeField, multi_binomial, reduce_mod_p


@dataclass(frozen=True)
class ModularContext:
    n: int
    p: int

    def __post_init__(self):
        PrimeField(self.p)  # validates primality
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.p < 3:
            raise ValueError("p must be an odd prime")

    @property
    def field(self):
        return PrimeField(self.p)

    @property
    def tau(self):
        return MultiIndex((self.p - 1,) * (2 * self.n))

    def in_range(self, idx):
        return idx.n == self.n and idx.within(self.p - 1)

    def admissible(self, idx):
        """Membership in the basis index set B of H(2n;1)."""
        return self.in_range(idx) and not idx.is_zero() and idx != self.tau

    def basis_indices(self):
        """All of B in the canonical order; |B| = p^{2n} - 2."""
        out = [MultiIndex(parts) for parts in iproduct(range(self.p), repeat=2 * self.n)]
        out = [idx for idx in out if self.admissible(idx)]
        out.sort(key=lambda idx: idx.sortkey())
        return out

    def is_toral(self, idx):
        """True for the indices e_i + e_-i, whose p-th power acts as identity."""
        if idx.grade() != 2:
            return False
        for i in range(1, self.n + 1):
            if idx.get(i) == 1 and idx.get(-i) == 1:
                return True
        return False

    def divided_range(self):
        return [MultiIndex(parts) for parts in iproduct(range(self.p), repeat=2 * self.n)]


class DividedElement:
    """Sparse element of the divided power algebra O(2n;1) over GF(p)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=(), _checked=False):
        self.ctx = ctx
        if _checked:
            self.terms = dict(terms)
            return
        clean = {}
        for idx, c in dict(terms).items():
            if not isinstance(idx, MultiIndex):
                idx = MultiIndex(idx)
            if not ctx.in_range(idx):
                raise ValueError("index %r outside [0, p-1]^%d" % (idx, 2 * ctx.n))
            c = Mod(c, ctx.p)
            if c.is_zero():
                continue
            clean[idx] = clean[idx] + c if idx in clean else c
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def monomial(cls, ctx, idx, coeff=1):
        return cls(ctx, {MultiIndex(idx): coeff})

    @classmethod
    def one(cls, ctx):
        return cls.monomial(ctx, MultiIndex.zero(ctx.n))

    def is_zero(self):
        return not self.terms

    def _require_same(self, other):
        if self.ctx != other.ctx:
            raise ValueError("parameter mismatch: %r vs %r" % (self.ctx, other.ctx))

    def __add__(self, other):
        self._require_same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return DividedElement(self.ctx, out, _checked=True)

    def __neg__(self):
        return DividedElement(self.ctx, {k: -c for k, c in self.terms.items()}, _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Mod(c, self.ctx.p)
        if c.is_zero():
            return DividedElement(self.ctx, {}, _checked=True)
        return DividedElement(self.ctx, {k: v * c for k, v in self.terms.items()}, _checked=True)

    def __eq__(self, other):
        return (isinstance(other, DividedElement) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "O<0>"
        bits = ["%s*x^%s" % (c, tuple(k)) for k, c in
                sorted(self.terms.items(), key=lambda kv: kv[0].sortkey())]
        return "O<%s>" % " + ".join(bits)


def divided_multiply(a, b):
    """x^(alpha) x^(beta) = C(alpha+beta, alpha) x^(alpha+beta), truncated at p."""
    a._require_same(b)
    ctx = a.ctx
    out = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            idx = ka.plus(kb)
            if not idx.within(ctx.p - 1):
                continue
            c = ca * cb * multi_binomial(ka, kb)
            if c.is_zero():
                continue
            s = out.get(idx)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(idx, None)
            else:
                out[idx] = s
    return DividedElement(ctx, out, _checked=True)


def divided_derivative(a, j):
    """D_j: x^(alpha) -> x^(alpha - e_j)."""
    ctx = a.ctx
    out = {}
    for k, c in a.terms.items():
        if k.get(j) >= 1:
            out[k.shifted(j, -1)] = c
    return DividedElement(ctx, out, _checked=True)


def poisson_divided(u, v):
    """Divided-power Poisson bracket {u, v} = sum_i (D_-i u D_i v - D_i u D_-i v)."""
    u._require_same(v)
    ctx = u.ctx
    out = DividedElement(ctx, {}, _checked=True)
    for i in range(1, ctx.n + 1):
        out = out + divided_multiply(divided_derivative(u, -i), divided_derivative(v, i))
        out = out - divided_multiply(divided_derivative(u, i), divided_derivative(v, -i))
    return out


class ModularLieElement:
    """Sparse element of H(2n;1); keys stay inside the basis index set B."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=(), _checked=False):
        self.ctx = ctx
        if _checked:
            self.terms = dict(terms)
            return
        clean = {}
        for idx, c in dict(terms).items():
            if not isinstance(idx, MultiIndex):
                idx = MultiIndex(idx)
            if not ctx.in_range(idx):
                raise ValueError("index %r outside [0, p-1]^%d" % (idx, 2 * ctx.n))
            if idx.is_zero() or idx == ctx.tau:
                continue
            c = Mod(c, ctx.p)
            if c.is_zero():
                continue
            clean[idx] = clean[idx] + c if idx in clean else c
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def basis(cls, ctx, idx, coeff=1):
        idx = MultiIndex(idx)
        if not ctx.admissible(idx):
            raise ValueError("index %r not in the basis of H(2n;1)" % (idx,))
        return cls(ctx, {idx: coeff})

    def is_zero(self):
        return not self.terms

    def _require_same(self, other):
        if self.ctx != other.ctx:
            raise ValueError("parameter mismatch: %r vs %r" % (self.ctx, other.ctx))

    def __add__(self, other):
        self._require_same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return ModularLieElement(self.ctx, out, _checked=True)

    def __neg__(self):
        return ModularLieElement(self.ctx, {k: -c for k, c in self.terms.items()}, _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Mod(c, self.ctx.p)
        if c.is_zero():
            return ModularLieElement(self.ctx, {}, _checked=True)
        return ModularLieElement(self.ctx, {k: v * c for k, v in self.terms.items()},
                                 _checked=True)

    __rmul__ = __mul__ = scale

    def __eq__(self, other):
        return (isinstance(other, ModularLieElement) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __repr__(self):
        from .syntax import format_modular
        return format_modular(self)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sortkey())


def modular_bracket_indices(ctx, alpha, beta):
    """[DH(x^(alpha)), DH(x^(beta))] as a sparse table over B."""
    pois = poisson_divided(DividedElement.monomial(ctx, alpha),
                           DividedElement.monomial(ctx, beta))
    return {k: c for k, c in pois.terms.items() if not k.is_zero() and k != ctx.tau}


def modular_bracket(a, b):
    """[DH u, DH v] = DH {u, v}, projected to the basis of H(2n;1)."""
    a._require_same(b)
    out = ModularLieElement(a.ctx, {}, _checked=True)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            part = ModularLieElement(a.ctx, modular_bracket_indices(a.ctx, ka, kb),
                                     _checked=True)
            out = out + part.scale(ca * cb)
    return out


def reduce_to_modular(x, p):
    """Reduce a characteristic-0 element of the positive part into H(2n;1).

    DH(x^alpha) maps to alpha! DH(x^(alpha)) mod p; indices with a component
    >= p die (they span a maximal ideal), and so does the tau line.
    """
    if isinstance(x, LieElement) and x.ctx.variant != H_PLUS:
        raise ValueError("reduction is defined on the positive part")
    ctx = ModularContext(x.ctx.n, p)
    out = {}
    for idx, c in x.terms.items():
        if not idx.within(p - 1):
            continue
        if idx == ctx.tau:
            continue
        s = reduce_mod_p(c, p) * idx.factorial()
        if s.is_zero():
            continue
        prev = out.get(idx)
        s = s if prev is None else prev + s
        if s.is_zero():
            out.pop(idx, None)
        else:
            out[idx] = s
    return ModularLieElement(ctx, out, _checked=True)


def p_power_keys(ctx, idx):
    """Restriction data for the p-th power of a basis vector.

    The toral vectors DH(x^(e_i + e_-i)) restrict to themselves; every other
    basis vector restricts to zero.  This is exactly the relation table of the
    restricted enveloping algebra u(H(2n;1)).
    """
    if ctx.is_toral(idx):
        return {idx: ctx.field.one()}
    return {}
