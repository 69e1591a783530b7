"""Jordanian Drinfel'd twists and direct twisting of the standard Hopf structure.

For [h, e] = e the twist and its inverse are the truncated series

    curly_F_a = sum_r (-1)^r/r! h_a^[r] (x) e^r t^r,
    F_a       = sum_r  1/r!  h_a^<r> (x) e^r t^r,

with curly_F_a^-1 = F_a.  The auxiliary elements u_a = m(S0 (x) Id)(F_a) and
v_a = m(Id (x) S0)(curly_F_a) implement the twisted antipode through
w = v_0 and w^-1 = u_0.  Everything here works degreewise in a Truncated(N)
regime; in characteristic p the factorials force N < p.
"""

from fractions import Fraction

from .enveloping import TensorElement, UElement, delta0, epsilon0, factorial_poly, s0
from .scalars import Mod
from .tpoly import TPoly, Truncated


def _single_key(u):
    if len(u.terms) != 1:
        raise ValueError("expected a single-generator element")
    [(mono, c)] = u.terms.items()
    if len(mono) != 1 or mono[0][1] != 1 or not (c == 1):
        raise ValueError("expected a plain generator with coefficient 1")
    return mono[0][0]


def _inv_factorial(alg, r):
    if alg.field.char:
        if r >= alg.field.char:
            raise ValueError("1/%d! is undefined mod %d" % (r, alg.field.char))
        f = 1
        for j in range(2, r + 1):
            f *= j
        return Mod(f, alg.field.char).inverse()
    f = 1
    for j in range(2, r + 1):
        f *= j
    return alg.field(Fraction(1, f))


def _check_pair(h_u, e_u):
    if h_u.alg is not e_u.alg:
        raise ValueError("pair must live in one algebra")
    if not (h_u * e_u - e_u * h_u == e_u):
        raise ValueError("[h, e] = e fails for the proposed pair")


def curly_f_series(h_u, e_u, a, mode):
    """The twist series curly_F_a up to the truncation bound."""
    alg = h_u.alg
    hk = _single_key(h_u)
    coeffs = {}
    for r in range(mode.N + 1):
        c = _inv_factorial(alg, r)
        if r % 2:
            c = -c
        coeffs[r] = TensorElement.outer(
            factorial_poly(alg, hk, a, r, "falling"), e_u ** r).scale(c)
    return TPoly(mode, coeffs)


def f_series(h_u, e_u, a, mode):
    """The inverse series F_a (rising factorials)."""
    alg = h_u.alg
    hk = _single_key(h_u)
    coeffs = {}
    for r in range(mode.N + 1):
        coeffs[r] = TensorElement.outer(
            factorial_poly(alg, hk, a, r, "rising"), e_u ** r).scale(_inv_factorial(alg, r))
    return TPoly(mode, coeffs)


def u_series(h_u, e_u, a, mode):
    """u_a = m(S0 (x) Id)(F_a)."""
    return f_series(h_u, e_u, a, mode).map(lambda t: t.apply_s0(0).fold())


def v_series(h_u, e_u, a, mode):
    """v_a = m(Id (x) S0)(curly_F_a)."""
    return curly_f_series(h_u, e_u, a, mode).map(lambda t: t.apply_s0(1).fold())


def build_u_v(h_u, e_u, a, mode):
    """(u_a, v_a, w) with w = m(Id (x) S0)(curly_F_0)."""
    return (u_series(h_u, e_u, a, mode), v_series(h_u, e_u, a, mode),
            v_series(h_u, e_u, 0, mode))


class TwistElement:
    """A concrete twist: its series, its inverse, and the supporting pair."""

    __slots__ = ("alg", "mode", "body", "inv_body", "label", "h_u", "e_u")

    def __init__(self, alg, mode, body, inv_body, label, h_u=None, e_u=None):
        self.alg, self.mode = alg, mode
        self.body, self.inv_body = body, inv_body
        self.label = label
        self.h_u, self.e_u = h_u, e_u

    def counit_ok(self):
        """(eps (x) Id)(F) = 1 = (Id (x) eps)(F)."""
        unit = TPoly.constant(self.mode, UElement.one(self.alg))
        left = self.body.map(lambda t: t.apply_counit(0))
        right = self.body.map(lambda t: t.apply_counit(1))
        return left == unit and right == unit

    def invertible_ok(self):
        unit = TPoly.constant(self.mode, TensorElement.unit(self.alg, 2))
        return self.body * self.inv_body == unit and self.inv_body * self.body == unit


def build_twist(h_u, e_u, a, mode, variant="curly_F"):
    """Assemble the twist curly_F_a (or its inverse family F_a) with checks."""
    _check_pair(h_u, e_u)
    body = curly_f_series(h_u, e_u, a, mode)
    inv = f_series(h_u, e_u, a, mode)
    if variant == "F":
        body, inv = inv, body
    tw = TwistElement(h_u.alg, mode, body, inv, "%s(a=%s)" % (variant, a), h_u, e_u)
    if a == 0 and not tw.counit_ok():
        raise AssertionError("counit condition failed for %s" % tw.label)
    return tw


def jordanian_twist(h_u, e_u, mode):
    return build_twist(h_u, e_u, 0, mode)


def verify_cocycle(tw, N=None):
    """Compare (F (x) 1)(Delta0 (x) Id)(F) with (1 (x) F)(Id (x) Delta0)(F).

    Returns a report dict rather than raising; a mismatch records the first
    differing t-degree.
    """
    body = tw.body if N is None else tw.body.truncate(N)
    lhs = body.map(lambda t: t.embed(3, (0, 1))) * body.map(lambda t: t.apply_delta0(0))
    rhs = body.map(lambda t: t.embed(3, (1, 2))) * body.map(lambda t: t.apply_delta0(1))
    mismatch = lhs.first_mismatch(rhs)
    return {"equal": mismatch is None, "first_mismatch_degree": mismatch,
            "max_degree": body.mode.N if N is None else N}


def twist_coproduct(tw, x_u):
    """Delta_F(x) = F Delta0(x) F^-1, degreewise PBW-normalized."""
    mid = TPoly.constant(tw.mode, delta0(x_u))
    return tw.body * mid * tw.inv_body


def twist_antipode(tw, x_u):
    """S_F(x) = w S0(x) w^-1 with w = m(Id (x) S0)(F)."""
    w = tw.body.map(lambda t: t.apply_s0(1).fold())
    w_inv = tw.inv_body.map(lambda t: t.apply_s0(0).fold())
    return w * TPoly.constant(tw.mode, s0(x_u)) * w_inv


def twist_counit(tw, x_u):
    return epsilon0(x_u)


def product_twist(tw1, tw2):
    """Product of two commuting twists; refuses non-commuting inputs."""
    if tw1.alg is not tw2.alg or tw1.mode != tw2.mode:
        raise ValueError("twists live in different settings")
    if not (tw1.body * tw2.body == tw2.body * tw1.body):
        raise ValueError("twists do not commute; product is not formed")
    return TwistElement(tw1.alg, tw1.mode, tw1.body * tw2.body,
                        tw2.inv_body * tw1.inv_body,
                        "%s*%s" % (tw1.label, tw2.label))


def distinctness_probe(tw1, tw2, probe_u):
    """First t-degree where the two twisted coproducts of the probe differ."""
    d1 = twist_coproduct(tw1, probe_u)
    d2 = twist_coproduct(tw2, probe_u)
    deg = d1.first_mismatch(d2)
    return {"differ": deg is not None, "first_degree": deg}
