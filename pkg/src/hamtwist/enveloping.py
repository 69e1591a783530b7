"""PBW-ordered universal enveloping algebras and their tensor powers.

Products are normalized to the Poincare-Birkhoff-Witt basis: monomials are
weakly increasing words in the canonical basis order, stored as tuples of
(basis key, exponent).  Normal ordering rewrites x_b x_a = x_a x_b + [x_b,x_a]
for b > a; every step strictly decreases (word length, inversion count), so
the rewriting terminates, and words are memoized per algebra because the
twist series revisit the same swaps constantly.

In restricted mode exponents are capped below p through the restriction
table x^p -> x^[p] (toral basis vectors restrict to themselves, all others to
zero), which realizes the restricted enveloping algebra u(H(2n;1)).
"""

from fractions import Fraction
from functools import lru_cache

from . import lie_h, modular
from .scalars import Mod, Rat, binomial


class PBWAlgebra:
    """Carrier for one enveloping algebra: bracket, order, caches."""

    def __init__(self, kind, field, n, bracket_fn, key_name, restricted=False,
                 p=None, p_power_fn=None, lie_ctx=None):
        self.kind = kind
        self.field = field
        self.n = n
        self.restricted = restricted
        self.p = p
        self.lie_ctx = lie_ctx
        self.key_name = key_name
        self._bracket_fn = bracket_fn
        self._p_power_fn = p_power_fn
        self._bracket_cache = {}
        self._word_cache = {}
        self._delta_cache = {}
        self._s0_cache = {}
        self._fact_cache = {}

    def bracket_keys(self, ka, kb):
        got = self._bracket_cache.get((ka, kb))
        if got is None:
            got = self._bracket_fn(ka, kb)
            self._bracket_cache[(ka, kb)] = got
        return got

    def p_power_keys(self, key):
        return self._p_power_fn(key)

    def __repr__(self):
        return "PBWAlgebra(%s)" % (self.kind,)


@lru_cache(maxsize=None)
def enveloping(ctx):
    """U(H) or U(H+) over the rationals for a characteristic-0 context."""
    def bracket_fn(ka, kb):
        return lie_h.bracket_indices(ctx, ka, kb)

    def key_name(key):
        from .syntax import dh_name
        return dh_name(key)

    return PBWAlgebra("U(%s,n=%d)" % (ctx.variant, ctx.n), ctx.field, ctx.n,
                      bracket_fn, key_name, lie_ctx=ctx)


@lru_cache(maxsize=None)
def modular_enveloping(ctx, restricted):
    """U(H(2n;1)) over GF(p); restricted=True divides out the p-power ideal."""
    def bracket_fn(ka, kb):
        return modular.modular_bracket_indices(ctx, ka, kb)

    def p_power_fn(key):
        return modular.p_power_keys(ctx, key)

    def key_name(key):
        from .syntax import dhp_name
        return dhp_name(key, ctx.p)

    kind = ("u" if restricted else "U") + "(H(%d;1),p=%d)" % (2 * ctx.n, ctx.p)
    return PBWAlgebra(kind, ctx.field, ctx.n, bracket_fn, key_name,
                      restricted=restricted, p=ctx.p, p_power_fn=p_power_fn,
                      lie_ctx=ctx)


def _collapse(alg, word):
    """Collapse an ordered word into a monomial, applying the p-power cap."""
    mono = []
    i = 0
    m = len(word)
    while i < m:
        j = i
        while j < m and word[j] == word[i]:
            j += 1
        e = j - i
        if alg.restricted:
            while e >= alg.p:
                if not alg.p_power_keys(word[i]):
                    return {}
                e -= alg.p - 1  # x^p = x for toral keys
        mono.append((word[i], e))
        i = j
    return {tuple(mono): alg.field.one()}


def _norm_word(alg, word):
    """Normal form of a word of basis keys as {monomial: scalar}."""
    cached = alg._word_cache.get(word)
    if cached is not None:
        return cached
    out = None
    for i in range(len(word) - 1):
        ka, kb = word[i], word[i + 1]
        if ka == kb:
            continue
        if ka.sortkey() > kb.sortkey():
            out = {}
            swapped = word[:i] + (kb, ka) + word[i + 2:]
            for mono, c in _norm_word(alg, swapped).items():
                out[mono] = out.get(mono, alg.field.zero()) + c
            head, tail = word[:i], word[i + 2:]
            for key, cb in alg.bracket_keys(ka, kb).items():
                for mono, c in _norm_word(alg, head + (key,) + tail).items():
                    s = out.get(mono, alg.field.zero()) + cb * c
                    out[mono] = s
            out = {m: c for m, c in out.items() if not c.is_zero()}
            break
    if out is None:
        out = _collapse(alg, word)
    alg._word_cache[word] = out
    return out


def _expand(mono):
    word = []
    for key, e in mono:
        word.extend([key] * e)
    return tuple(word)


def _mul_monos(alg, m1, m2):
    """Product of two PBW monomials as {monomial: scalar}."""
    if not m1:
        return {m2: alg.field.one()}
    if not m2:
        return {m1: alg.field.one()}
    k1, k2 = m1[-1][0], m2[0][0]
    if k1 == k2 or k1.sortkey() < k2.sortkey():
        return _collapse(alg, _expand(m1) + _expand(m2))
    return _norm_word(alg, _expand(m1) + _expand(m2))


class UElement:
    """Sparse linear combination of PBW monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=(), _checked=False):
        self.alg = alg
        if _checked:
            self.terms = dict(terms)
        else:
            clean = {}
            for mono, c in dict(terms).items():
                c = self._coerce_scalar(alg, c)
                if c.is_zero():
                    continue
                clean[mono] = clean[mono] + c if mono in clean else c
            self.terms = {m: c for m, c in clean.items() if not c.is_zero()}

    @staticmethod
    def _coerce_scalar(alg, c):
        if isinstance(c, (Rat, Mod)):
            return c
        return alg.field(c)

    @classmethod
    def zero(cls, alg):
        return cls(alg, {}, _checked=True)

    @classmethod
    def one(cls, alg, coeff=1):
        return cls(alg, {(): coeff})

    @classmethod
    def gen(cls, alg, key, exp=1, coeff=1):
        if exp == 0:
            return cls.one(alg, coeff)
        return cls(alg, {((key, exp),): coeff})

    @classmethod
    def from_lie(cls, alg, elem):
        return cls(alg, {((key, 1),): c for key, c in elem.terms.items()})

    def is_zero(self):
        return not self.terms

    def _same(self, other):
        if self.alg is not other.alg:
            raise ValueError("algebra context mismatch")

    def __add__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return UElement(self.alg, out, _checked=True)

    def __neg__(self):
        return UElement(self.alg, {m: -c for m, c in self.terms.items()}, _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self._coerce_scalar(self.alg, c)
        if c.is_zero():
            return UElement.zero(self.alg)
        return UElement(self.alg, {m: v * c for m, v in self.terms.items()}, _checked=True)

    def __mul__(self, other):
        if isinstance(other, UElement):
            self._same(other)
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    c12 = c1 * c2
                    for mono, c in _mul_monos(self.alg, m1, m2).items():
                        s = out.get(mono)
                        s = c12 * c if s is None else s + c12 * c
                        if s.is_zero():
                            out.pop(mono, None)
                        else:
                            out[mono] = s
            return UElement(self.alg, out, _checked=True)
        if isinstance(other, (int, Fraction, Rat, Mod)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Rat, Mod)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined in U")
        out = UElement.one(self.alg)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UElement):
            return self.alg is other.alg and self.terms == other.terms
        if other == 0:
            return self.is_zero()
        if other == 1:
            return self.terms == {(): self.alg.field.one()}
        return NotImplemented

    def filtration(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: ([(k.sortkey(), e) for k, e in kv[0]],))

    def __repr__(self):
        from .syntax import format_u
        return format_u(self)


def commutator(a, b):
    return a * b - b * a


def ad_power(e, x, ell):
    """(ad e)^ell applied to x inside the enveloping algebra."""
    out = x
    for _ in range(ell):
        out = commutator(e, out)
    return out


def d_ell_bracket(e, x, ell):
    """d^(ell) = (ad e)^ell / ell!; requires ell < p in characteristic p."""
    out = ad_power(e, x, ell)
    f = 1
    for j in range(2, ell + 1):
        f *= j
    if f == 1:
        return out
    if isinstance(e.alg.field.one(), Mod):
        inv = Mod(f, e.alg.p).inverse()
        return out.scale(inv)
    return out.scale(Fraction(1, f))


def epsilon0(u):
    """Counit: the coefficient of the empty monomial."""
    return u.terms.get((), u.alg.field.zero())


def _delta0_mono(alg, mono):
    cached = alg._delta_cache.get(mono)
    if cached is not None:
        return cached
    out = {((), ()): alg.field.one()}
    for key, e in mono:
        nxt = {}
        for (l1, l2), c in out.items():
            for j in range(e + 1):
                b = binomial(e, j)
                cb = c * b
                if cb.is_zero():
                    continue
                n1 = l1 + ((key, j),) if j else l1
                n2 = l2 + ((key, e - j),) if e - j else l2
                s = nxt.get((n1, n2))
                s = cb if s is None else s + cb
                nxt[(n1, n2)] = s
        out = {k: v for k, v in nxt.items() if not v.is_zero()}
    alg._delta_cache[mono] = out
    return out


def delta0(u):
    """Standard coproduct: algebra map with primitive generators."""
    t = TensorElement.zero(u.alg, 2)
    out = {}
    for mono, c in u.terms.items():
        for legs, c2 in _delta0_mono(u.alg, mono).items():
            s = out.get(legs)
            s = c * c2 if s is None else s + c * c2
            if s.is_zero():
                out.pop(legs, None)
            else:
                out[legs] = s
    return TensorElement(u.alg, 2, out, _checked=True)


def _s0_mono(alg, mono):
    cached = alg._s0_cache.get(mono)
    if cached is not None:
        return cached
    word = tuple(reversed(_expand(mono)))
    sign = alg.field.one() if len(word) % 2 == 0 else -alg.field.one()
    out = {m: sign * c for m, c in _norm_word(alg, word).items()}
    alg._s0_cache[mono] = out
    return out


def s0(u):
    """Standard antipode: anti-algebra map with S0(x) = -x on generators."""
    out = {}
    for mono, c in u.terms.items():
        for m, c2 in _s0_mono(u.alg, mono).items():
            s = out.get(m)
            s = c * c2 if s is None else s + c * c2
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
    return UElement(u.alg, out, _checked=True)


def factorial_poly(alg, key, a, m, kind="falling"):
    """Falling x_a^[m] or rising x_a^<m> factorial of the generator at key.

    x_a^<m> = (x+a)(x+a+1)...(x+a+m-1),  x_a^[m] = (x+a)(x+a-1)...(x+a-m+1).
    """
    if kind not in ("falling", "rising"):
        raise ValueError("kind must be falling or rising")
    a = UElement._coerce_scalar(alg, a)
    ck = (key, a, m, kind)
    cached = alg._fact_cache.get(ck)
    if cached is not None:
        return cached
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        out = UElement.one(alg)
    else:
        prev = factorial_poly(alg, key, a, m - 1, kind)
        step = a + (m - 1) if kind == "rising" else a - (m - 1)
        out = prev * (UElement.gen(alg, key) + UElement.one(alg, step))
    alg._fact_cache[ck] = out
    return out


class TensorElement:
    """Sparse element of a tensor power of one enveloping algebra."""

    __slots__ = ("alg", "arity", "terms")

    def __init__(self, alg, arity, terms=(), _checked=False):
        self.alg = alg
        self.arity = arity
        if _checked:
            self.terms = dict(terms)
        else:
            clean = {}
            for legs, c in dict(terms).items():
                c = UElement._coerce_scalar(alg, c)
                if c.is_zero():
                    continue
                clean[legs] = clean[legs] + c if legs in clean else c
            self.terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def zero(cls, alg, arity):
        return cls(alg, arity, {}, _checked=True)

    @classmethod
    def unit(cls, alg, arity, coeff=1):
        return cls(alg, arity, {((),) * arity: coeff})

    @classmethod
    def outer(cls, *factors):
        """Tensor product of UElements, one per leg."""
        alg = factors[0].alg
        terms = {(): alg.field.one()}
        for f in factors:
            if f.alg is not alg:
                raise ValueError("algebra context mismatch")
            nxt = {}
            for legs, c in terms.items():
                for mono, c2 in f.terms.items():
                    nxt[legs + (mono,)] = c * c2
            terms = nxt
        return cls(alg, len(factors), terms, _checked=True)

    def is_zero(self):
        return not self.terms

    def _same(self, other):
        if self.alg is not other.alg or self.arity != other.arity:
            raise ValueError("tensor context mismatch")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for legs, c in other.terms.items():
            s = out.get(legs)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(legs, None)
            else:
                out[legs] = s
        return TensorElement(self.alg, self.arity, out, _checked=True)

    def __neg__(self):
        return TensorElement(self.alg, self.arity,
                             {k: -c for k, c in self.terms.items()}, _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = UElement._coerce_scalar(self.alg, c)
        if c.is_zero():
            return TensorElement.zero(self.alg, self.arity)
        return TensorElement(self.alg, self.arity,
                             {k: v * c for k, v in self.terms.items()}, _checked=True)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            self._same(other)
            alg = self.alg
            out = {}
            for legs1, c1 in self.terms.items():
                for legs2, c2 in other.terms.items():
                    c12 = c1 * c2
                    combos = [_mul_monos(alg, a, b) for a, b in zip(legs1, legs2)]
                    stack = [((), c12)]
                    for table in combos:
                        nstack = []
                        for legs, c in stack:
                            for mono, cm in table.items():
                                nstack.append((legs + (mono,), c * cm))
                        stack = nstack
                    for legs, c in stack:
                        s = out.get(legs)
                        s = c if s is None else s + c
                        if s.is_zero():
                            out.pop(legs, None)
                        else:
                            out[legs] = s
            return TensorElement(self.alg, self.arity, out, _checked=True)
        if isinstance(other, (int, Fraction, Rat, Mod)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Rat, Mod)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        out = TensorElement.unit(self.alg, self.arity)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return (self.alg is other.alg and self.arity == other.arity
                    and self.terms == other.terms)
        return NotImplemented

    def flip(self):
        return TensorElement(self.alg, self.arity,
                             {tuple(reversed(k)): c for k, c in self.terms.items()},
                             _checked=True)

    def embed(self, arity, positions):
        """Place the legs at the given positions of a wider tensor."""
        out = {}
        for legs, c in self.terms.items():
            wide = [()] * arity
            for pos, mono in zip(positions, legs):
                wide[pos] = mono
            out[tuple(wide)] = c
        return TensorElement(self.alg, arity, out, _checked=True)

    def apply_delta0(self, leg):
        """Replace the chosen leg by its standard coproduct (arity grows by 1)."""
        alg = self.alg
        out = {}
        for legs, c in self.terms.items():
            for (l1, l2), c2 in _delta0_mono(alg, legs[leg]).items():
                nlegs = legs[:leg] + (l1, l2) + legs[leg + 1:]
                s = out.get(nlegs)
                s = c * c2 if s is None else s + c * c2
                if s.is_zero():
                    out.pop(nlegs, None)
                else:
                    out[nlegs] = s
        return TensorElement(alg, self.arity + 1, out, _checked=True)

    def apply_s0(self, leg):
        alg = self.alg
        out = {}
        for legs, c in self.terms.items():
            for mono, c2 in _s0_mono(alg, legs[leg]).items():
                nlegs = legs[:leg] + (mono,) + legs[leg + 1:]
                s = out.get(nlegs)
                s = c * c2 if s is None else s + c * c2
                if s.is_zero():
                    out.pop(nlegs, None)
                else:
                    out[nlegs] = s
        return TensorElement(alg, self.arity, out, _checked=True)

    def apply_counit(self, leg):
        """Contract the chosen leg with the counit (arity shrinks by 1)."""
        alg = self.alg
        out = {}
        for legs, c in self.terms.items():
            if legs[leg]:
                continue
            nlegs = legs[:leg] + legs[leg + 1:]
            s = out.get(nlegs)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(nlegs, None)
            else:
                out[nlegs] = s
        if self.arity == 1:
            total = alg.field.zero()
            for _, c in out.items():
                total = total + c
            return total
        if self.arity == 2:
            return UElement(alg, {legs[0]: c for legs, c in out.items()}, _checked=True)
        return TensorElement(alg, self.arity - 1, out, _checked=True)

    def fold(self):
        """Multiply all legs together (the m of m(S (x) Id) and friends)."""
        out = UElement.zero(self.alg)
        for legs, c in self.terms.items():
            acc = UElement.one(self.alg, c)
            for mono in legs:
                acc = acc * UElement(self.alg, {mono: self.alg.field.one()}, _checked=True)
            out = out + acc
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: [[(k.sortkey(), e) for k, e in mono] for mono in kv[0]])

    def __repr__(self):
        from .syntax import format_tensor
        return format_tensor(self)
