"""The generalized Cartan type H Lie algebra over the rationals.

Basis vectors are written DH(alpha) for a nonzero multi-index alpha; they
correspond to the Hamiltonian vector fields of the monomials x^alpha.  The
bracket is

    [DH(a), DH(b)] = sum_i (a_{-i} b_i - a_i b_{-i}) DH(a + b - e_i - e_{-i}),

with terms whose index vanishes dropped (the Hamiltonian map kills scalars).
The "full" context allows Laurent indices in Z^{2n} \\ {0}; the "plus"
context is the positive part spanned by nonnegative indices.
"""

from dataclasses import dataclass

from .indices import MultiIndex
from .scalars import QQ, Rat

FULL_H = "full"
H_PLUS = "plus"


@dataclass(frozen=True)
class LieContext:
    variant: str
    n: int

    def __post_init__(self):
        if self.variant not in (FULL_H, H_PLUS):
            raise ValueError("unknown variant %r" % (self.variant,))
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def field(self):
        return QQ

    def admissible(self, idx):
        if idx.n != self.n or idx.is_zero():
            return False
        return idx.is_nonneg() if self.variant == H_PLUS else True


def full_context(n):
    return LieContext(FULL_H, n)


def plus_context(n):
    return LieContext(H_PLUS, n)


class LieElement:
    """Sparse rational linear combination of basis vectors DH(alpha)."""

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
            c = Rat(c)
            if c.is_zero() or idx.is_zero():
                continue
            if not ctx.admissible(idx):
                raise ValueError("index %r not admissible in %r" % (idx, ctx))
            clean[idx] = clean[idx] + c if idx in clean else c
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def basis(cls, ctx, idx, coeff=1):
        return cls(ctx, {MultiIndex(idx): coeff})

    def is_zero(self):
        return not self.terms

    def _require_same(self, other):
        if self.ctx != other.ctx:
            raise ValueError("context mismatch: %r vs %r" % (self.ctx, other.ctx))

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
        return LieElement(self.ctx, out, _checked=True)

    def __neg__(self):
        return LieElement(self.ctx, {k: -c for k, c in self.terms.items()}, _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Rat(c)
        if c.is_zero():
            return LieElement(self.ctx, {}, _checked=True)
        return LieElement(self.ctx, {k: v * c for k, v in self.terms.items()}, _checked=True)

    __rmul__ = __mul__ = scale

    def __eq__(self, other):
        return (isinstance(other, LieElement) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __repr__(self):
        from .syntax import format_lie
        return format_lie(self)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sortkey())


def bracket_indices(ctx, alpha, beta):
    """[DH(alpha), DH(beta)] as a sparse {index: Rat} table."""
    n = ctx.n
    out = {}
    for i in range(1, n + 1):
        c = alpha.get(-i) * beta.get(i) - alpha.get(i) * beta.get(-i)
        if c == 0:
            continue
        idx = alpha.plus(beta).shifted(i, -1).shifted(-i, -1)
        if idx.is_zero():
            continue
        prev = out.get(idx)
        s = Rat(c) if prev is None else prev + c
        if s.is_zero():
            out.pop(idx, None)
        else:
            out[idx] = s
    return out


def bracket(a, b):
    """Bilinear extension of the basis bracket."""
    a._require_same(b)
    out = LieElement(a.ctx, {}, _checked=True)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            part = LieElement(a.ctx, bracket_indices(a.ctx, ka, kb), _checked=True)
            out = out + part.scale(ca * cb)
    return out


def sigma(m):
    """Sign attached to a signed position: +1 below zero, -1 above."""
    if m == 0:
        raise ValueError("sigma(0) is undefined")
    return 1 if m < 0 else -1


VERTICAL = "vertical"
HORIZONTAL = "horizontal"
GENERIC = "generic"


class TwistPair:
    """A pair (h, e) with [h, e] = e seeding a Jordanian twist.

    Vertical(k):      h = DH(e_k + e_-k),  e = DH(2 e_k + e_-k)
    Horizontal(k, m): h = DH(e_k + e_-k),  e = DH(e_k + e_m), m != +-k, n >= 2
    """

    __slots__ = ("ctx", "kind", "k", "m", "h", "e")

    def __init__(self, ctx, kind, h, e, k=None, m=None):
        bra = bracket(h, e)
        if bra != e:
            raise ValueError("[h, e] != e for the proposed pair")
        self.ctx, self.kind, self.k, self.m, self.h, self.e = ctx, kind, k, m, h, e


def vertical_pair(ctx, k):
    if not 1 <= k <= ctx.n:
        raise ValueError("k out of range")
    n = ctx.n
    h_idx = MultiIndex.unit(n, k).plus(MultiIndex.unit(n, -k))
    e_idx = h_idx.shifted(k, 1)
    return TwistPair(ctx, VERTICAL, LieElement.basis(ctx, h_idx),
                     LieElement.basis(ctx, e_idx), k=k)


def horizontal_pair(ctx, k, m):
    n = ctx.n
    if n < 2:
        raise ValueError("horizontal pairs need n >= 2")
    if not (1 <= k <= n and 1 <= abs(m) <= n) or abs(m) == k or m == 0:
        raise ValueError("need 1 <= k, |m| <= n with m != +-k")
    h_idx = MultiIndex.unit(n, k).plus(MultiIndex.unit(n, -k))
    e_idx = MultiIndex.unit(n, k).plus(MultiIndex.unit(n, m))
    return TwistPair(ctx, HORIZONTAL, LieElement.basis(ctx, h_idx),
                     LieElement.basis(ctx, e_idx), k=k, m=m)


def generic_pair(h, e):
    return TwistPair(h.ctx, GENERIC, h, e)


class LieTensor2:
    """Formal 2-tensors over a Lie algebra; only used for r-matrix reporting."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=()):
        self.ctx = ctx
        self.terms = {k: Rat(c) for k, c in dict(terms).items() if not Rat(c).is_zero()}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return LieTensor2(self.ctx, out)

    def flip(self):
        return LieTensor2(self.ctx, {(b, a): c for (a, b), c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LieTensor2) and self.ctx == other.ctx and self.terms == other.terms


def r_matrix(pair):
    """r = h (x) e - e (x) h for the pair; the twist itself lives elsewhere."""
    ctx = pair.ctx
    out = LieTensor2(ctx)
    for kh, ch in pair.h.terms.items():
        for ke, ce in pair.e.terms.items():
            out = out + LieTensor2(ctx, {(kh, ke): ch * ce, (ke, kh): -(ch * ce)})
    return out
