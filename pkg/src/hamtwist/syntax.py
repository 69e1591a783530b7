"""Text grammar for elements and canonical printing.

Basis vectors are written DH[a_-1,..,a_-n;a_1,..,a_n] in characteristic 0
and DHp[a_-1,..;a_1,..]@p in characteristic p.  Elements are +/- separated
sums of optionally scalar-multiplied basis vectors, e.g. "2*DH[0;1] - DH[1;2]"
or "DHp[1;1]@3".  Whitespace is ignored everywhere and printing round-trips
through parsing exactly.
"""

import re
from fractions import Fraction

from .indices import MultiIndex
from .lie_h import LieElement
from .modular import ModularLieElement


class ParseError(ValueError):
    pass


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?"
    r"(?:(?P<coeff>\d+(?:/\d+)?)\*?)?"
    r"(?P<head>DHp|DH)"
    r"\[(?P<neg>-?\d+(?:,-?\d+)*)?;(?P<pos>-?\d+(?:,-?\d+)*)?\]"
    r"(?:@(?P<p>\d+))?")


def parse_terms(text):
    """Split an element expression into (Fraction, kind, parts, p) tuples."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty element expression")
    pos = 0
    out = []
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.start() != pos:
            raise ParseError("cannot parse element at %r" % s[pos:pos + 24])
        if pos > 0 and m.group("sign") is None:
            raise ParseError("missing +/- between terms near %r" % s[pos:pos + 24])
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        neg = [int(x) for x in m.group("neg").split(",")] if m.group("neg") else []
        posp = [int(x) for x in m.group("pos").split(",")] if m.group("pos") else []
        if len(neg) != len(posp) or not neg:
            raise ParseError("need equally many components on both sides of ';'")
        kind = m.group("head")
        p = int(m.group("p")) if m.group("p") else None
        if kind == "DHp" and p is None:
            raise ParseError("modular basis vectors need an @p suffix")
        if kind == "DH" and p is not None:
            raise ParseError("@p is only valid on DHp vectors")
        out.append((coeff, kind, tuple(neg + posp), p))
        pos = m.end()
    return out


def parse_lie(text, ctx):
    """Parse a characteristic-0 element in the given Lie context."""
    terms = {}
    for coeff, kind, parts, _ in parse_terms(text):
        if kind != "DH":
            raise ParseError("expected DH[..] vectors in characteristic 0")
        idx = MultiIndex(parts)
        if idx.n != ctx.n:
            raise ParseError("rank mismatch: got n=%d, context has n=%d" % (idx.n, ctx.n))
        terms[idx] = terms.get(idx, Fraction(0)) + coeff
    return LieElement(ctx, terms)


def parse_modular(text, ctx):
    """Parse a modular element; every term must carry @p matching the context."""
    terms = {}
    for coeff, kind, parts, p in parse_terms(text):
        if kind != "DHp":
            raise ParseError("expected DHp[..]@p vectors in characteristic p")
        if p != ctx.p:
            raise ParseError("term is mod %s but context is mod %d" % (p, ctx.p))
        idx = MultiIndex(parts)
        if idx.n != ctx.n:
            raise ParseError("rank mismatch: got n=%d, context has n=%d" % (idx.n, ctx.n))
        if coeff.denominator % ctx.p == 0:
            raise ParseError("coefficient %s is not p-integral" % coeff)
        if not ctx.admissible(idx):
            raise ParseError("index %s is not a basis index of H(%d;1) mod %d"
                             % (parts, 2 * ctx.n, ctx.p))
        terms[idx] = terms.get(idx, Fraction(0)) + coeff
    return ModularLieElement(ctx, {k: (c.numerator * pow(c.denominator, ctx.p - 2, ctx.p))
                                   for k, c in terms.items()})


def detect_shape(text):
    """Rank and characteristic implied by an element expression."""
    terms = parse_terms(text)
    kinds = {kind for _, kind, _, _ in terms}
    if len(kinds) != 1:
        raise ParseError("cannot mix DH and DHp terms")
    ns = {len(parts) // 2 for _, _, parts, _ in terms}
    if len(ns) != 1:
        raise ParseError("mixed ranks in one expression")
    ps = {p for _, _, _, p in terms}
    return {"kind": kinds.pop(), "n": ns.pop(), "p": ps.pop()}


def _idx_body(idx):
    n = idx.n
    return "%s;%s" % (",".join(str(a) for a in idx[:n]),
                      ",".join(str(a) for a in idx[n:]))


def dh_name(idx):
    return "DH[%s]" % _idx_body(idx)


def dhp_name(idx, p):
    return "DHp[%s]@%d" % (_idx_body(idx), p)


def _format_linear(pairs):
    """pairs: iterable of (coefficient string or '', basis string)."""
    bits = []
    for cs, name in pairs:
        if cs.startswith("-"):
            sign, mag = "-", cs[1:]
        else:
            sign, mag = "+", cs
        body = name if mag in ("1", "") else "%s*%s" % (mag, name)
        bits.append((sign, body))
    if not bits:
        return "0"
    first_sign, first_body = bits[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in bits[1:]:
        out += " %s %s" % (sign, body)
    return out


def format_lie(elem):
    return _format_linear((str(c), dh_name(k)) for k, c in elem.sorted_terms())


def format_modular(elem):
    p = elem.ctx.p
    return _format_linear((str(c), dhp_name(k, p)) for k, c in elem.sorted_terms())


def format_mono(alg, mono):
    if not mono:
        return "1"
    bits = []
    for key, e in mono:
        name = alg.key_name(key)
        bits.append(name if e == 1 else "%s^%d" % (name, e))
    return "*".join(bits)


def format_u(u):
    return _format_linear((str(c), format_mono(u.alg, m)) for m, c in u.sorted_terms())


def format_tensor(t):
    pairs = []
    for legs, c in t.sorted_terms():
        name = " (x) ".join(format_mono(t.alg, mono) for mono in legs)
        pairs.append((str(c), "[%s]" % name))
    return _format_linear(pairs)


def format_tpoly(tp):
    if tp.is_zero():
        return "0"
    lines = []
    for d in tp.degrees():
        v = tp.coeffs[d]
        head = "t^%d" % d
        lines.append("%s: %r" % (head, v))
    return "\n".join(lines)
