"""Deformation-parameter arithmetic in two truncation regimes.

Truncated(N) keeps t-degrees 0..N and silently discards anything higher;
PTruncated(p, q) works in K[t]/(t^p - qt), so any t^p produced by a product
folds back to q*t.  Coefficients live in any value space with +, *, scaling
by scalars and is_zero(): enveloping-algebra elements, tensors, or bare
scalars.
"""

from dataclasses import dataclass
from fractions import Fraction

from .enveloping import UElement
from .scalars import Mod, Rat


@dataclass(frozen=True)
class Truncated:
    N: int

    def fold(self, d):
        return (d, 1) if d <= self.N else None


@dataclass(frozen=True)
class PTruncated:
    p: int
    q: int

    def fold(self, d):
        # t^p = q t, hence t^d = q^k t^(d - k(p-1)) until the degree is < p.
        factor = 1
        while d >= self.p:
            if self.q == 0:
                return None
            d -= self.p - 1
            factor *= self.q
        return (d, factor)


class TPoly:
    """Polynomial in t with coefficients in an additive value space."""

    __slots__ = ("mode", "coeffs")

    def __init__(self, mode, coeffs=(), _checked=False):
        self.mode = mode
        if _checked:
            self.coeffs = dict(coeffs)
            return
        out = {}
        for d, v in dict(coeffs).items():
            folded = mode.fold(d)
            if folded is None or v.is_zero():
                continue
            fd, factor = folded
            if factor != 1:
                v = v * factor
            prev = out.get(fd)
            v = v if prev is None else prev + v
            if v.is_zero():
                out.pop(fd, None)
            else:
                out[fd] = v
        self.coeffs = out

    @classmethod
    def constant(cls, mode, v):
        return cls(mode, {0: v})

    @classmethod
    def zero(cls, mode):
        return cls(mode, {}, _checked=True)

    def is_zero(self):
        return not self.coeffs

    def get(self, d, default=None):
        return self.coeffs.get(d, default)

    def degrees(self):
        return sorted(self.coeffs)

    def _same(self, other):
        if self.mode != other.mode:
            raise ValueError("mode mismatch: %r vs %r" % (self.mode, other.mode))

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for d, v in other.coeffs.items():
            s = out.get(d)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(d, None)
            else:
                out[d] = s
        return TPoly(self.mode, out, _checked=True)

    def __neg__(self):
        return TPoly(self.mode, {d: -v for d, v in self.coeffs.items()}, _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TPoly):
            self._same(other)
            out = {}
            for d1, v1 in self.coeffs.items():
                for d2, v2 in other.coeffs.items():
                    folded = self.mode.fold(d1 + d2)
                    if folded is None:
                        continue
                    d, factor = folded
                    v = v1 * v2
                    if factor != 1:
                        v = v * factor
                    if v.is_zero():
                        continue
                    s = out.get(d)
                    s = v if s is None else s + v
                    if s.is_zero():
                        out.pop(d, None)
                    else:
                        out[d] = s
            return TPoly(self.mode, out, _checked=True)
        return self.map(lambda v: v * other)

    def __rmul__(self, other):
        return self.map(lambda v: other * v if not isinstance(other, (int, Fraction, Rat, Mod))
                        else v * other)

    def lmul_value(self, v):
        """Multiply every coefficient by v on the left."""
        return self.map(lambda w: v * w)

    def rmul_value(self, v):
        return self.map(lambda w: w * v)

    def shift(self, d):
        """Multiply by t^d."""
        return TPoly(self.mode, {deg + d: v for deg, v in self.coeffs.items()})

    def map(self, fn):
        out = {}
        for d, v in self.coeffs.items():
            w = fn(v)
            if not w.is_zero():
                out[d] = w
        return TPoly(self.mode, out, _checked=True)

    def truncate(self, N):
        return TPoly(Truncated(N), {d: v for d, v in self.coeffs.items() if d <= N},
                     _checked=True)

    def evaluate(self, t0):
        """Specialize t to a scalar; returns a value-space element or None if empty."""
        total = None
        for d, v in self.coeffs.items():
            w = v * t0 ** d
            total = w if total is None else total + w
        return total

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers need one_minus_et_power")
        out = None
        for _ in range(k):
            out = self if out is None else out * self
        if out is None:
            raise ValueError("cannot build the unit without a value space")
        return out

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.mode == other.mode and self.coeffs == other.coeffs

    def first_mismatch(self, other):
        """Smallest t-degree where the two polynomials differ, or None."""
        self._same(other)
        for d in sorted(set(self.coeffs) | set(other.coeffs)):
            a, b = self.coeffs.get(d), other.coeffs.get(d)
            if a is None or b is None or not (a == b):
                return d
        return None

    def __repr__(self):
        from .syntax import format_tpoly
        return format_tpoly(self)


def tpoly_one(mode, alg):
    return TPoly.constant(mode, UElement.one(alg))


def one_minus_et_power(e_u, s, mode):
    """(1 - e t)^s in the chosen truncation regime.

    Nonnegative powers expand by repeated multiplication.  Negative powers
    expand the geometric series of (1 - e t)^-1 and then raise it; in the
    p-truncated regime the series stops at t^(p-1) and the identity
    (1-et) (1-et)^-1 = 1 is exact because e is nilpotent there.
    """
    alg = e_u.alg
    base = TPoly(mode, {0: UElement.one(alg), 1: -e_u})
    if s >= 0:
        out = tpoly_one(mode, alg)
        for _ in range(s):
            out = out * base
        return out
    cut = mode.N if isinstance(mode, Truncated) else mode.p - 1
    geo = TPoly(mode, {r: e_u ** r for r in range(cut + 1)})
    out = tpoly_one(mode, alg)
    for _ in range(-s):
        out = out * geo
    return out
