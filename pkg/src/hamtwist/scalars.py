"""Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

Every coefficient in the engine is either a rational in lowest terms or a
residue modulo a prime p, with p carried on the value.  Mixing the two
contexts (or two different primes) raises ContextError instead of coercing;
plain Python ints coerce into either context.
"""

from fractions import Fraction
import math


class ContextError(TypeError):
    """Arithmetic between scalars of incompatible contexts."""


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Rat:
    """Exact rational scalar (characteristic 0)."""

    __slots__ = ("v",)

    def __init__(self, num=0, den=None):
        if den is None:
            self.v = num.v if isinstance(num, Rat) else Fraction(num)
        else:
            self.v = Fraction(num, den)

    @property
    def numerator(self):
        return self.v.numerator

    @property
    def denominator(self):
        return self.v.denominator

    def is_zero(self):
        return self.v == 0

    def _coerce(self, other):
        if isinstance(other, Rat):
            return other.v
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        if isinstance(other, Mod):
            raise ContextError("cannot mix rational and mod-p scalars")
        return None

    def __add__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Rat(self.v + w)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Rat(self.v - w)

    def __rsub__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Rat(w - self.v)

    def __mul__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Rat(self.v * w)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Rat(self.v / w)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Rat(w / self.v)

    def __pow__(self, k):
        return Rat(self.v ** k)

    def __neg__(self):
        return Rat(-self.v)

    def __eq__(self, other):
        if isinstance(other, Rat):
            return self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == other
        if isinstance(other, Mod):
            raise ContextError("cannot compare rational and mod-p scalars")
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return "Rat(%s)" % self.v

    def __str__(self):
        return str(self.v)


class Mod:
    """Residue in Z/p for a prime p carried on the value."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        if isinstance(v, Mod):
            if v.p != p:
                raise ContextError("cannot recast mod-%d into mod-%d" % (v.p, p))
            v = v.v
        self.v = v % p
        self.p = p

    def is_zero(self):
        return self.v == 0

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ContextError("cannot mix mod-%d and mod-%d scalars" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, (Rat, Fraction)):
            raise ContextError("cannot mix mod-p and rational scalars")
        return None

    def __add__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Mod(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Mod(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Mod(w - self.v, self.p)

    def __mul__(self, other):
        w = self._coerce(other)
        return NotImplemented if w is None else Mod(self.v * w, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.v % self.p == 0:
            raise ZeroDivisionError("0 has no inverse mod %d" % self.p)
        return Mod(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return self * Mod(w, self.p).inverse()

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return Mod(w, self.p) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Mod(pow(self.v, k, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ContextError("cannot compare mod-%d and mod-%d scalars" % (self.p, other.p))
            return self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        if isinstance(other, (Rat, Fraction)):
            raise ContextError("cannot compare mod-p and rational scalars")
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return "Mod(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class RationalField:
    char = 0

    def __call__(self, x):
        return Rat(x)

    def zero(self):
        return Rat(0)

    def one(self):
        return Rat(1)

    def __repr__(self):
        return "QQ"


_prime_fields = {}


class PrimeField:
    def __new__(cls, p):
        cached = _prime_fields.get(p)
        if cached is not None:
            return cached
        if not is_prime(p):
            raise ValueError("%r is not prime" % (p,))
        self = super().__new__(cls)
        self.p = p
        self.char = p
        _prime_fields[p] = self
        return self

    def __call__(self, x):
        if isinstance(x, Fraction):
            return reduce_mod_p(x, self.p)
        if isinstance(x, Rat):
            return reduce_mod_p(x.v, self.p)
        return Mod(x, self.p)

    def zero(self):
        return Mod(0, self.p)

    def one(self):
        return Mod(1, self.p)

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def binomial(a, b):
    """C(a, b) for a, b >= 0; zero when b > a."""
    if a < 0 or b < 0:
        raise ValueError("binomial requires nonnegative arguments")
    if b > a:
        return 0
    return math.comb(a, b)


def gbinomial(x, k):
    """Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for any integer x."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= x - i
    v = Fraction(num, math.factorial(k))
    assert v.denominator == 1
    return v.numerator


def multi_binomial(alpha, beta):
    """Product of componentwise binomials C(alpha_j + beta_j, alpha_j)."""
    if len(alpha) != len(beta):
        raise ValueError("rank mismatch: %d vs %d" % (len(alpha), len(beta)))
    out = 1
    for a, b in zip(alpha, beta):
        out *= binomial(a + b, a)
        if out == 0:
            break
    return out


def multi_factorial(alpha):
    """alpha! as the product of componentwise factorials."""
    out = 1
    for a in alpha:
        out *= math.factorial(a)
    return out


def reduce_mod_p(r, p):
    """Reduce a rational with p-free denominator into GF(p)."""
    if isinstance(r, Rat):
        r = r.v
    if isinstance(r, int):
        r = Fraction(r)
    if not is_prime(p):
        raise ValueError("%r is not prime" % (p,))
    if r.denominator % p == 0:
        raise ZeroDivisionError(
            "denominator %d is divisible by %d; reduction undefined" % (r.denominator, p))
    return Mod(r.numerator * pow(r.denominator, p - 2, p), p)
