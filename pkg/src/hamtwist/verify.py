"""Verification suites: every closed-form identity, checked exactly.

Each check is a module-level function registered in CHECKS so a worker pool
can run suite cells by name.  A check returns (ok, witness); the driver wraps
that into a CheckRecord.  All arithmetic is exact, so every tolerance is
zero: checks compare canonical forms syntactically.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product as iproduct

from .enveloping import (TensorElement, UElement, delta0, enveloping,
                         factorial_poly, modular_enveloping, s0)
from .indices import MultiIndex
from .lie_h import LieElement, bracket, full_context, plus_context, sigma
from .modular import (ModularContext, ModularLieElement, modular_bracket,
                      modular_bracket_indices, reduce_to_modular)
from .oracles import (bracket_via_poisson, lie_d_ell_char0, lie_d_ell_modular,
                      modular_bracket_via_w, u_d_ell)
from .quantize import (antipode_axiom_witness, char0_horizontal, char0_vertical,
                       coassociativity_witness, coeff_a_ik,
                       coeff_abbar_horizontal, coeff_bbar_horizontal_alt,
                       counit_axiom_witness, d_ell_special_p_power,
                       d_ell_special_toral, delta_multiplicative_witness,
                       hopf_ideal_stability, jordanian_sp4_rows,
                       jordanian_sp4_table, sp2n_bracket_homomorphism,
                       ut_horizontal, ut_vertical, utq_horizontal, utq_vertical)
from .report import CheckRecord
from .scalars import Mod, binomial
from .tpoly import TPoly, Truncated, one_minus_et_power, tpoly_one
from .twist import (TwistElement, f_series, jordanian_twist, twist_antipode,
                    twist_coproduct, u_series, v_series, verify_cocycle)

CHECKS = {}

DEFAULT_SEED = 20240811


def check(name):
    def wrap(fn):
        CHECKS[name] = fn
        return fn
    return wrap


def _vertical_twist(n, k, N):
    ctx = char0_vertical(n, k, N)
    return ctx, jordanian_twist(ctx.h_u, ctx.e_u, ctx.mode)


def _horizontal_twist(n, k, m, N):
    ctx = char0_horizontal(n, k, m, N)
    return ctx, jordanian_twist(ctx.h_u, ctx.e_u, ctx.mode)


def _diamond(n, radius):
    """All nonzero integer multi-indices with 1-norm at most radius."""
    out = []
    for parts in iproduct(range(-radius, radius + 1), repeat=2 * n):
        idx = MultiIndex(parts)
        if not idx.is_zero() and idx.abs_grade() <= radius:
            out.append(idx)
    out.sort(key=lambda i: i.sortkey())
    return out


def _sample_nonneg(rng, n, bound):
    while True:
        idx = MultiIndex([rng.randrange(0, bound + 1) for _ in range(2 * n)])
        if not idx.is_zero():
            return idx


# ---------------------------------------------------------------------------
# twist identities (cocycle suite)


@check("cocycle_vertical")
def check_cocycle_vertical(n=1, k=1, N=5):
    _, tw = _vertical_twist(n, k, N)
    rep = verify_cocycle(tw)
    return rep["equal"], rep


@check("cocycle_horizontal")
def check_cocycle_horizontal(n=2, k=1, m=2, N=4):
    _, tw = _horizontal_twist(n, k, m, N)
    rep = verify_cocycle(tw)
    return rep["equal"], rep


@check("twist_counit_and_inverse")
def check_twist_counit_and_inverse(n=1, k=1, N=6):
    _, tw = _vertical_twist(n, k, N)
    return tw.counit_ok() and tw.invertible_ok(), None


@check("shift_grid_identities")
def check_shift_grid(N=6, shifts=(-1, 0, 1, 2)):
    ctx, _ = _vertical_twist(1, 1, N)
    h, e, mode = ctx.h_u, ctx.e_u, ctx.mode
    from .twist import curly_f_series
    bad = []
    one_u = UElement.one(ctx.alg)
    for a in shifts:
        for b in shifts:
            lhs = curly_f_series(h, e, a, mode) * f_series(h, e, b, mode)
            rhs = one_minus_et_power(e, a - b, mode).map(
                lambda u: TensorElement.outer(one_u, u))
            if not lhs == rhs:
                bad.append(("curly_F_a F_b", a, b))
            lhs2 = v_series(h, e, a, mode) * u_series(h, e, b, mode)
            if not lhs2 == one_minus_et_power(e, -(a + b), mode):
                bad.append(("v_a u_b", a, b))
    for a in shifts:
        if not u_series(h, e, a, mode) * v_series(h, e, -a, mode) == tpoly_one(mode, ctx.alg):
            bad.append(("u_a v_-a", a))
    return not bad, bad or None


@check("product_twist")
def check_product_twist(n=2, N=3):
    from .twist import product_twist
    ctx1, tw1 = _vertical_twist(n, 1, N)
    ctx2 = char0_vertical(n, 2, N)
    tw2 = jordanian_twist(ctx2.h_u, ctx2.e_u, ctx2.mode)
    commute = tw1.body * tw2.body == tw2.body * tw1.body
    prod = product_twist(tw1, tw2)
    rep = verify_cocycle(prod)
    swapped = product_twist(tw2, tw1)
    same = prod.body == swapped.body
    return commute and rep["equal"] and same, rep


@check("distinctness_probe")
def check_distinctness_probe(n=2, N=3):
    from .twist import distinctness_probe, product_twist
    ctx1, tw1 = _vertical_twist(n, 1, N)
    ctx2 = char0_vertical(n, 2, N)
    tw2 = jordanian_twist(ctx2.h_u, ctx2.e_u, ctx2.mode)
    prod = product_twist(tw1, tw2)
    probe = UElement.gen(ctx1.alg, MultiIndex.unit(n, 2).plus(MultiIndex.unit(n, -2)))
    rep = distinctness_probe(tw1, prod, probe)
    return rep["differ"] and rep["first_degree"] == 1, rep


@check("iterated_twisting")
def check_iterated_twisting(n=2, N=3):
    """Twisting by a commuting product equals twisting one factor at a time."""
    from .twist import product_twist
    ctx1, tw1 = _vertical_twist(n, 1, N)
    ctx2 = char0_vertical(n, 2, N)
    tw2 = jordanian_twist(ctx2.h_u, ctx2.e_u, ctx2.mode)
    prod = product_twist(tw1, tw2)
    probe = UElement.gen(ctx1.alg, MultiIndex.unit(n, 2).plus(MultiIndex.unit(n, -2)))
    lhs = twist_coproduct(prod, probe)
    rhs = tw2.body * twist_coproduct(tw1, probe) * tw2.inv_body
    return lhs == rhs, None


# ---------------------------------------------------------------------------
# characteristic-0 closed forms


@check("closed_vs_conjugation_vertical")
def check_closed_vs_conjugation_vertical(n=1, k=1, N=4, radius=4):
    ctx, tw = _vertical_twist(n, k, N)
    bad = []
    for alpha in _diamond(n, radius):
        x_u = UElement.gen(ctx.alg, alpha)
        if not ctx.delta_basis(alpha) == twist_coproduct(tw, x_u):
            bad.append(("delta", tuple(alpha)))
        if not ctx.antipode_basis(alpha) == twist_antipode(tw, x_u):
            bad.append(("antipode", tuple(alpha)))
        if not ctx.counit_basis(alpha).is_zero():
            bad.append(("counit", tuple(alpha)))
    return not bad, {"checked": len(_diamond(n, radius)), "failures": bad or None}


@check("closed_vs_conjugation_vertical_sampled")
def check_closed_vs_conjugation_vertical_sampled(n=2, k=1, N=4, count=8, seed=DEFAULT_SEED):
    ctx, tw = _vertical_twist(n, k, N)
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        alpha = _sample_nonneg(rng, n, 3)
        x_u = UElement.gen(ctx.alg, alpha)
        if not ctx.delta_basis(alpha) == twist_coproduct(tw, x_u):
            bad.append(("delta", tuple(alpha)))
        if not ctx.antipode_basis(alpha) == twist_antipode(tw, x_u):
            bad.append(("antipode", tuple(alpha)))
    return not bad, bad or None


@check("closed_vs_conjugation_horizontal")
def check_closed_vs_conjugation_horizontal(n=2, k=1, m=2, N=4, count=10, seed=DEFAULT_SEED):
    ctx, tw = _horizontal_twist(n, k, m, N)
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        alpha = _sample_nonneg(rng, n, 3)
        x_u = UElement.gen(ctx.alg, alpha)
        if not ctx.delta_basis(alpha) == twist_coproduct(tw, x_u):
            bad.append(("delta", tuple(alpha)))
        if not ctx.antipode_basis(alpha) == twist_antipode(tw, x_u):
            bad.append(("antipode", tuple(alpha)))
    return not bad, bad or None


@check("coefficient_oracle_vertical_char0")
def check_coefficient_oracle_vertical(n=1, k=1, radius=3, ellmax=4):
    ctx = char0_vertical(n, k, ellmax)
    lctx = ctx.lie_ctx
    e_l = LieElement.basis(lctx, ctx.e_idx)
    bad = []
    for alpha in _diamond(n, radius):
        x_l = LieElement.basis(lctx, alpha)
        for ell in range(ellmax + 1):
            oracle = lie_d_ell_char0(e_l, x_l, ell)
            closed = LieElement(lctx, dict(ctx.d_ell_terms(alpha, ell)))
            if not oracle == closed:
                bad.append((tuple(alpha), ell))
    return not bad, bad or None


@check("power_law")
def check_power_law(n=1, k=1, N=3, smax=3, count=5, seed=DEFAULT_SEED):
    ctx = char0_vertical(n, k, N)
    alg, mode = ctx.alg, ctx.mode
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        alpha = _sample_nonneg(rng, n, 3)
        c = alpha.get(k) - alpha.get(-k)
        for s in range(1, smax + 1):
            xs = UElement.gen(alg, alpha, exp=s)
            lhs = ctx.delta_map(xs)
            rhs = TPoly.zero(mode)
            for j in range(s + 1):
                xj = UElement.gen(alg, alpha, exp=j) if j else UElement.one(alg)
                xsj = UElement.gen(alg, alpha, exp=s - j) if s - j else UElement.one(alg)
                for ell in range(mode.N + 1):
                    dl = u_d_ell(ctx.e_u, xsj, ell)
                    if dl.is_zero():
                        continue
                    first = xj * ctx.h_rising(ell)
                    piece = ctx.omet(j * c - ell).rmul_value(dl).map(
                        lambda u: TensorElement.outer(first, u)).shift(ell)
                    rhs = rhs + piece.map(lambda t: t.scale(binomial(s, j) * (-1) ** ell))
            if not lhs == rhs:
                bad.append((tuple(alpha), s, "delta"))
            ser = TPoly.zero(mode)
            for ell in range(mode.N + 1):
                dl = u_d_ell(ctx.e_u, xs, ell)
                if dl.is_zero():
                    continue
                ser = ser + TPoly.constant(mode, dl * ctx.h_rising(ell, shift=1)).shift(ell)
            rhs_s = (ctx.omet(-s * c) * ser).map(lambda u: u.scale((-1) ** s))
            if not ctx.antipode_map(xs) == rhs_s:
                bad.append((tuple(alpha), s, "antipode"))
    return not bad, bad or None


@check("char0_t0_specialization")
def check_char0_t0(n=1, k=1, N=3, radius=3):
    ctx = char0_vertical(n, k, N)
    bad = []
    for alpha in _diamond(n, radius):
        x_u = UElement.gen(ctx.alg, alpha)
        if not ctx.delta_basis(alpha).evaluate(Fraction(0)) == delta0(x_u):
            bad.append(tuple(alpha))
        if not ctx.antipode_basis(alpha).evaluate(Fraction(0)) == s0(x_u):
            bad.append(tuple(alpha))
    return not bad, bad or None


# ---------------------------------------------------------------------------
# modular reduction


@check("bracket_reduction_square")
def check_bracket_reduction_square(n=1, p=3):
    plus = plus_context(n)
    mctx = ModularContext(n, p)
    bad = []
    for a in mctx.basis_indices():
        for b in mctx.basis_indices():
            xa, xb = LieElement.basis(plus, a), LieElement.basis(plus, b)
            lhs = reduce_to_modular(bracket(xa, xb), p)
            rhs = modular_bracket(reduce_to_modular(xa, p), reduce_to_modular(xb, p))
            if not lhs == rhs:
                bad.append((tuple(a), tuple(b)))
    return not bad, bad or None


@check("abar_reduction")
def check_abar_reduction(n=1, k=1, p=3):
    """Abar_ell equals both the reduced characteristic-0 value and the bracket."""
    plus = plus_context(n)
    mctx = ModularContext(n, p)
    ctx = ut_vertical(n, k, p)
    e0 = LieElement.basis(plus, ctx.e_idx)
    e_mod = reduce_to_modular(e0, p)
    if not e_mod == ModularLieElement.basis(mctx, ctx.e_idx, 2):
        return False, "e does not reduce to twice the divided vector"
    bad = []
    for alpha in mctx.basis_indices():
        x0 = LieElement.basis(plus, alpha)
        for ell in range(p):
            reduced = reduce_to_modular(lie_d_ell_char0(e0, x0, ell), p)
            oracle = lie_d_ell_modular(e_mod, reduce_to_modular(x0, p), ell)
            closed = ModularLieElement(mctx, dict(ctx.d_ell_terms(alpha, ell))).scale(
                alpha.factorial())
            if not (reduced == oracle and oracle == closed):
                bad.append((tuple(alpha), ell))
    return not bad, bad or None


@check("poisson_vs_w_oracle")
def check_poisson_vs_w(n=1, p=3, sample=None, seed=DEFAULT_SEED):
    mctx = ModularContext(n, p)
    basis = mctx.basis_indices()
    if sample is None:
        pairs = [(a, b) for a in basis for b in basis]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(sample)]
    bad = []
    for a, b in pairs:
        got = ModularLieElement(mctx, modular_bracket_indices(mctx, a, b))
        want, tau_c = modular_bracket_via_w(mctx, a, b)
        if not tau_c.is_zero() or not got == want:
            bad.append((tuple(a), tuple(b)))
    return not bad, {"pairs": len(pairs), "failures": bad or None}


@check("char0_bracket_vs_laurent")
def check_char0_bracket_vs_laurent(n=2, radius=3, count=60, seed=DEFAULT_SEED):
    ctx = full_context(n)
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        a = MultiIndex([rng.randrange(-radius, radius + 1) for _ in range(2 * n)])
        b = MultiIndex([rng.randrange(-radius, radius + 1) for _ in range(2 * n)])
        if a.is_zero() or b.is_zero():
            continue
        x, y = LieElement.basis(ctx, a), LieElement.basis(ctx, b)
        if not bracket(x, y) == bracket_via_poisson(x, y):
            bad.append((tuple(a), tuple(b)))
    return not bad, bad or None


@check("ut_closed_vs_conjugation")
def check_ut_closed_vs_conjugation(n=1, k=1, m=None, p=5, N=4, limit=None):
    ctx = ut_vertical(n, k, p, N) if m is None else ut_horizontal(n, k, m, p, N)
    tw = jordanian_twist(ctx.h_u, ctx.e_u, ctx.mode)
    basis = ctx.lie_ctx.basis_indices()
    if limit is not None:
        basis = basis[:limit]
    bad = []
    for alpha in basis:
        x_u = UElement.gen(ctx.alg, alpha)
        if not ctx.delta_basis(alpha) == twist_coproduct(tw, x_u):
            bad.append(("delta", tuple(alpha)))
        if not ctx.antipode_basis(alpha) == twist_antipode(tw, x_u):
            bad.append(("antipode", tuple(alpha)))
    return not bad, {"checked": len(basis), "failures": bad or None}


# ---------------------------------------------------------------------------
# the finite quotient


@check("utq_ideal_stability")
def check_utq_ideal_stability(n=1, k=1, m=None, p=3, q=1, indices=None):
    ctx = utq_vertical(n, k, p, q) if m is None else utq_horizontal(n, k, m, p, q)
    reps = hopf_ideal_stability(ctx, indices=[MultiIndex(i) for i in indices] if indices else None)
    bad = [r for r in reps if not r["ok"]]
    return not bad, {"generators": len(reps), "failures": bad or None}


@check("utq_axioms")
def check_utq_axioms(n=1, k=1, m=None, p=3, q=1, indices=None):
    ctx = utq_vertical(n, k, p, q) if m is None else utq_horizontal(n, k, m, p, q)
    basis = ctx.lie_ctx.basis_indices() if indices is None else [MultiIndex(i) for i in indices]
    bad = []
    for alpha in basis:
        if coassociativity_witness(ctx, alpha) is not None:
            bad.append(("coassoc", tuple(alpha)))
        if antipode_axiom_witness(ctx, alpha) is not None:
            bad.append(("antipode", tuple(alpha)))
        if counit_axiom_witness(ctx, alpha) is not None:
            bad.append(("counit", tuple(alpha)))
    return not bad, {"generators": len(basis), "failures": bad or None}


@check("utq_radford")
def check_utq_radford(n=1, k=1, p=3, q=1):
    ctx = utq_vertical(n, k, p, q)
    alg = ctx.alg
    h, e = ctx.h_u, ctx.e_u
    one = tpoly_one(ctx.mode, alg)
    f = ctx.omet(-1)
    bad = []
    if not f.lmul_value(h) - f.rmul_value(h) == f * f - f:
        bad.append("[h,f] = f^2 - f")
    if not h ** p == h:
        bad.append("h^p = h")
    if not f ** p == one:
        bad.append("f^p = 1")
    dh = ctx.delta_basis(ctx.h_idx)
    expect = (f.map(lambda u: TensorElement.outer(h, u))
              + TPoly.constant(ctx.mode, TensorElement.outer(UElement.one(alg), h)))
    if not dh == expect:
        bad.append("Delta(h) = h (x) f + 1 (x) h")
    if not ctx.antipode_basis(ctx.h_idx) == ctx.omet(1).lmul_value(-h):
        bad.append("S(h) = -h f^-1")
    if not ctx.counit_basis(ctx.h_idx).is_zero():
        bad.append("eps(h) = 0")
    # group-likeness of f: Delta(e^r)-free statement, checked through
    # Delta being an algebra map on the series defining f.
    df = TPoly.zero(ctx.mode)
    for d, u in ctx.omet(-1).coeffs.items():
        df = df + ctx.delta_map(u).shift(d)
    ff = TPoly.zero(ctx.mode)
    for d1, u1 in f.coeffs.items():
        for d2, u2 in f.coeffs.items():
            ff = ff + TPoly.constant(ctx.mode, TensorElement.outer(u1, u2)).shift(d1 + d2)
    if not df == ff:
        bad.append("Delta(f) = f (x) f")
    return not bad, bad or None


@check("utq_p_truncation_rules")
def check_utq_p_truncation(n=1, k=1, p=3, q=1):
    ctx = utq_vertical(n, k, p, q)
    alg = ctx.alg
    one = tpoly_one(ctx.mode, alg)
    bad = []
    if not one_minus_et_power(ctx.e_u, p, ctx.mode) == one:
        bad.append("(1-et)^p = 1")
    geo = TPoly(ctx.mode, {r: ctx.e_u ** r for r in range(p)})
    if not ctx.omet(-1) == geo:
        bad.append("(1-et)^-1 = 1 + et + ... + e^(p-1) t^(p-1)")
    if not (ctx.omet(1) * ctx.omet(-1)) == one:
        bad.append("(1-et)(1-et)^-1 = 1")
    for a in range(p):
        if not factorial_poly(alg, ctx.h_idx, a, p, "rising").is_zero():
            bad.append("h_%d^<p> = 0" % a)
    return not bad, bad or None


@check("utq_monomial_count")
def check_utq_monomial_count(n=1, p=3):
    mctx = ModularContext(n, p)
    basis = mctx.basis_indices()
    if len(basis) != p ** (2 * n) - 2:
        return False, {"basis": len(basis)}
    count = 0
    for _ in iproduct(range(p), repeat=len(basis)):
        count += 1
    return count == p ** (p ** (2 * n) - 2), {"monomials": count}


@check("utq_delta_multiplicative")
def check_utq_delta_multiplicative(n=1, k=1, m=None, p=3, q=1, count=8, seed=DEFAULT_SEED):
    ctx = utq_vertical(n, k, p, q) if m is None else utq_horizontal(n, k, m, p, q)
    rng = random.Random(seed)
    basis = ctx.lie_ctx.basis_indices()
    bad = []
    for _ in range(count):
        u = UElement.gen(ctx.alg, rng.choice(basis), exp=rng.randrange(1, p)) \
            * UElement.gen(ctx.alg, rng.choice(basis))
        v = UElement.gen(ctx.alg, rng.choice(basis), exp=rng.randrange(1, p))
        w = delta_multiplicative_witness(ctx, u, v)
        if w is not None:
            bad.append(w)
    return not bad, bad or None


@check("utq_t0_specialization")
def check_utq_t0(n=1, k=1, p=3, q=1):
    ctx = utq_vertical(n, k, p, q)
    bad = []
    for alpha in ctx.lie_ctx.basis_indices():
        x_u = UElement.gen(ctx.alg, alpha)
        d0 = ctx.delta_basis(alpha).evaluate(Mod(0, p))
        if not d0 == delta0(x_u):
            bad.append(("delta", tuple(alpha)))
        if not ctx.antipode_basis(alpha).evaluate(Mod(0, p)) == s0(x_u):
            bad.append(("antipode", tuple(alpha)))
    return not bad, bad or None


@check("utq_t_evaluation")
def check_utq_t_evaluation(n=1, k=1, p=3, q=1):
    """Specializing t to a root of t^p - qt keeps the counit law intact."""
    ctx = utq_vertical(n, k, p, q)
    roots = [Mod(0, p)] + [Mod(r, p) for r in range(1, p) if Mod(r, p) ** p == Mod(r, p) * q]
    bad = []
    for alpha in ctx.lie_ctx.basis_indices():
        d = ctx.delta_basis(alpha)
        for t0 in roots:
            t2 = d.evaluate(t0)
            got = t2.apply_counit(0)
            if not got == UElement.gen(ctx.alg, alpha):
                bad.append((tuple(alpha), int(t0.v)))
    return not bad, {"roots": len(roots), "failures": bad or None}


# ---------------------------------------------------------------------------
# horizontal battery


@check("coeff_oracle_horizontal_modular")
def check_coeff_oracle_horizontal_modular(n=2, k=1, m=2, p=3, ellmax=2):
    mctx = ModularContext(n, p)
    ctx = ut_horizontal(n, k, m, p)
    e_m = ModularLieElement.basis(mctx, ctx.e_idx)
    bad = []
    for alpha in mctx.basis_indices():
        x_m = ModularLieElement.basis(mctx, alpha)
        for ell in range(ellmax + 1):
            oracle = lie_d_ell_modular(e_m, x_m, ell)
            closed = ModularLieElement(mctx, dict(ctx.d_ell_terms(alpha, ell)))
            if not oracle == closed:
                bad.append((tuple(alpha), ell))
    return not bad, {"alphas": len(mctx.basis_indices()), "failures": bad or None}


@check("coeff_oracle_horizontal_char0")
def check_coeff_oracle_horizontal_char0(n=2, k=1, count=200, bound=6, ellmax=3,
                                        seed=DEFAULT_SEED):
    rng = random.Random(seed)
    bad = []
    for m in (2, -2):
        ctx = char0_horizontal(n, k, m, ellmax)
        lctx = ctx.lie_ctx
        e_l = LieElement.basis(lctx, ctx.e_idx)
        for _ in range(count // 2):
            alpha = _sample_nonneg(rng, n, bound)
            x_l = LieElement.basis(lctx, alpha)
            for ell in range(ellmax + 1):
                oracle = lie_d_ell_char0(e_l, x_l, ell)
                closed = LieElement(lctx, dict(ctx.d_ell_terms(alpha, ell)))
                if not oracle == closed:
                    bad.append((m, tuple(alpha), ell))
    return not bad, {"samples": count, "failures": bad or None}


@check("bbar_discrepancy")
def check_bbar_discrepancy(n=2, k=1, m=2, p=3, ellmax=2):
    """The implemented lower index matches the oracle; the variant does not."""
    mctx = ModularContext(n, p)
    ctx = ut_horizontal(n, k, m, p)
    e_m = ModularLieElement.basis(mctx, ctx.e_idx)
    alt_disagreements = 0
    impl_failures = []
    for alpha in mctx.basis_indices():
        x_m = ModularLieElement.basis(mctx, alpha)
        for ell in range(ellmax + 1):
            oracle = lie_d_ell_modular(e_m, x_m, ell)
            closed = ModularLieElement(mctx, dict(ctx.d_ell_terms(alpha, ell)))
            if not oracle == closed:
                impl_failures.append((tuple(alpha), ell))
            terms = {}
            for j in range(ell + 1):
                abar, _ = coeff_abbar_horizontal(alpha, k, m, j, ell, p)
                balt = coeff_bbar_horizontal_alt(alpha, k, m, j, ell, p)
                tgt = alpha.shifted(k, ell - j).shifted(-m, -(ell - j)) \
                           .shifted(m, j).shifted(-k, -j)
                if mctx.admissible(tgt):
                    terms[tgt] = terms.get(tgt, Mod(0, p)) + abar * balt
            if not ModularLieElement(mctx, terms) == oracle:
                alt_disagreements += 1
    ok = not impl_failures and alt_disagreements > 0
    return ok, {"alt_disagreements": alt_disagreements,
                "implemented_failures": impl_failures or None}


@check("ad_power_closed_form")
def check_ad_power_closed_form(n=2, k=1, m=2, smax=3, count=25, bound=3, seed=DEFAULT_SEED):
    ctx = char0_horizontal(n, k, m, smax)
    lctx = ctx.lie_ctx
    e_l = LieElement.basis(lctx, ctx.e_idx)
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        alpha = _sample_nonneg(rng, n, bound)
        x_l = LieElement.basis(lctx, alpha)
        for s in range(1, smax + 1):
            lhs = e_l
            for _ in range(s):
                lhs = bracket(x_l, lhs)
            terms = {}
            for i in range(s + 1):
                c = ((-sigma(m)) ** i * binomial(s, i)
                     * coeff_a_ik(alpha, s - i - 1, k) * coeff_a_ik(alpha, i - 1, m))
                if c == 0:
                    continue
                tgt = MultiIndex([s * a for a in alpha])
                for _ in range(i):
                    tgt = tgt.shifted(m, -1).shifted(-m, -1)
                for _ in range(s - i):
                    tgt = tgt.shifted(k, -1).shifted(-k, -1)
                tgt = tgt.shifted(k, 1).shifted(m, 1)
                if tgt.is_zero():
                    continue
                terms[tgt] = terms.get(tgt, Fraction(0)) + c
            if not lhs == LieElement(lctx, terms):
                bad.append((tuple(alpha), s))
    return not bad, bad or None


@check("transport_identities")
def check_transport_identities(n=2, k=1, m=2, N=4, count=5, bound=3, smax=3,
                               seed=DEFAULT_SEED):
    ctx = char0_horizontal(n, k, m, N)
    alg, mode = ctx.alg, ctx.mode
    h_u, e_u = ctx.h_u, ctx.e_u
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        alpha = _sample_nonneg(rng, n, bound)
        drop = alpha.get(-k) - alpha.get(k)
        for s in range(1, smax + 1):
            xs = UElement.gen(alg, alpha, exp=s)
            for a in (0, 1):
                # generator transport through h factorials
                hs = factorial_poly(alg, ctx.h_idx, a, s, "rising")
                hs_shift = factorial_poly(alg, ctx.h_idx, a + drop, s, "rising")
                if not UElement.gen(alg, alpha) * hs == hs_shift * UElement.gen(alg, alpha):
                    bad.append(("h-transport", tuple(alpha), s, a))
                xs1 = TPoly.constant(mode, TensorElement.outer(xs, UElement.one(alg)))
                if not xs1 * f_series(h_u, e_u, a, mode) == \
                        f_series(h_u, e_u, a + s * drop, mode) * xs1:
                    bad.append(("F-transport", tuple(alpha), s, a))
                ser = TPoly.zero(mode)
                for ell in range(N + 1):
                    dl = u_d_ell(e_u, xs, ell)
                    if dl.is_zero():
                        continue
                    ser = ser + TPoly.constant(
                        mode, dl * factorial_poly(alg, ctx.h_idx, 1 - a, ell, "rising")).shift(ell)
                lhs = TPoly.constant(mode, xs) * u_series(h_u, e_u, a, mode)
                if not lhs == u_series(h_u, e_u, a - s * drop, mode) * ser:
                    bad.append(("u-transport", tuple(alpha), s, a))
                lhs2 = TPoly.constant(mode, TensorElement.outer(UElement.one(alg), xs)) \
                    * f_series(h_u, e_u, a, mode)
                rhs2 = TPoly.zero(mode)
                for ell in range(N + 1):
                    dl = u_d_ell(e_u, xs, ell)
                    if dl.is_zero():
                        continue
                    piece = f_series(h_u, e_u, a + ell, mode) * TPoly.constant(
                        mode, TensorElement.outer(
                            factorial_poly(alg, ctx.h_idx, a, ell, "rising"), dl)).shift(ell)
                    rhs2 = rhs2 + (piece if ell % 2 == 0 else -piece)
                if not lhs2 == rhs2:
                    bad.append(("1xF-transport", tuple(alpha), s, a))
    return not bad, bad or None


@check("d_ell_special_values")
def check_d_ell_special_values(p=3, q=1):
    bad = []
    contexts = [utq_vertical(1, 1, p, q), utq_vertical(2, 2, p, q),
                utq_horizontal(2, 1, 2, p, q), utq_horizontal(2, 1, -2, p, q)]
    for ctx in contexts:
        for i in range(1, ctx.n + 1):
            toral = MultiIndex.unit(ctx.n, i).plus(MultiIndex.unit(ctx.n, -i))
            for ell in range(3):
                if not ctx.d_ell_u(toral, ell) == d_ell_special_toral(ctx, ell, i):
                    bad.append((repr(ctx), "toral", i, ell))
        alg = modular_enveloping(ctx.lie_ctx, False)
        e_u = UElement.gen(alg, ctx.e_idx, coeff=ctx.e_coeff)
        probes = [i for i in ctx.lie_ctx.basis_indices() if i.grade() <= 2][:6]
        for alpha in probes:
            xp = UElement.gen(alg, alpha, exp=p)
            for ell in range(3):
                if not u_d_ell(e_u, xp, ell) == d_ell_special_p_power(ctx, ell, alpha):
                    bad.append((repr(ctx), "p-power", tuple(alpha), ell))
    return not bad, bad or None


@check("delta_p_power_split")
def check_delta_p_power_split(p=3):
    bad = []
    for ctx in (ut_vertical(1, 1, p, 2), ut_horizontal(2, 1, 2, p, 2),
                ut_horizontal(2, 1, -2, p, 2)):
        alg = ctx.alg
        basis = ctx.lie_ctx.basis_indices()
        probes = [i for i in basis if i.grade() == 2][:4] + [i for i in basis if i.grade() == 1][:2]
        for alpha in probes:
            xp = UElement.gen(alg, alpha, exp=p)
            lhs = ctx.delta_map(xp)
            d1 = d_ell_special_p_power(ctx, 1, alpha)
            split = (TPoly.constant(ctx.mode, TensorElement.outer(xp, UElement.one(alg)))
                     + TPoly.constant(ctx.mode, TensorElement.outer(UElement.one(alg), xp)))
            corr = ctx.omet(-1).rmul_value(d1).map(
                lambda u: TensorElement.outer(ctx.h_u, u)).shift(1).map(lambda t: t.scale(-1))
            if not lhs == split + corr:
                bad.append((repr(ctx), tuple(alpha)))
    return not bad, bad or None


# ---------------------------------------------------------------------------
# Jordanian table and dimensions


@check("jordanian_table")
def check_jordanian_table(p=5, q=0):
    reps = jordanian_sp4_table(p=p, q=q)
    bad = [r for r in reps if not r["ok"]]
    return not bad, {"rows": [{k: r[k] for k in ("row", "sp_element", "ok")} for r in reps],
                     "failures": bad or None}


@check("sp2n_homomorphism")
def check_sp2n_homomorphism(n=2, p=5):
    rep = sp2n_bracket_homomorphism(n, p)
    return not rep["failures"], rep


@check("dim_h")
def check_dim_h(n=1, p=3):
    mctx = ModularContext(n, p)
    got = len(mctx.basis_indices())
    return got == p ** (2 * n) - 2, {"dim": got, "expected": p ** (2 * n) - 2}


@check("u_dimension_report")
def check_u_dimension_report(n=1, p=3, enumerate_monomials=False):
    """Report the monomial-basis count p^(p^2n - 2) and the t-ring factor p."""
    dim_h = p ** (2 * n) - 2
    monomials = p ** dim_h
    if enumerate_monomials:
        count = 0
        for _ in iproduct(range(p), repeat=dim_h):
            count += 1
        if count != monomials:
            return False, {"count": count}
    return True, {"dim_H": dim_h, "u_monomial_basis": monomials, "t_ring_factor": p,
                  "enumerated": bool(enumerate_monomials)}


# ---------------------------------------------------------------------------
# negative controls


@check("negative_corrupted_cocycle")
def check_negative_corrupted_cocycle(n=1, k=1, N=4):
    ctx, tw = _vertical_twist(n, k, N)
    bad_body = tw.body + TPoly(Truncated(N), {1: tw.body.coeffs[1]})
    bad_tw = TwistElement(ctx.alg, Truncated(N), bad_body, tw.inv_body, "corrupted")
    rep = verify_cocycle(bad_tw)
    ok = (not rep["equal"]) and rep["first_mismatch_degree"] == 2
    return ok, rep


@check("negative_wrong_sign_sigma")
def check_negative_wrong_sign_sigma(n=2, k=1, m=2, count=40, seed=DEFAULT_SEED):
    """Flipping sigma(m) inside the B family must break the bracket oracle."""
    ctx = char0_horizontal(n, k, m, 3)
    lctx = ctx.lie_ctx
    e_l = LieElement.basis(lctx, ctx.e_idx)
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(count):
        alpha = _sample_nonneg(rng, n, 4)
        x_l = LieElement.basis(lctx, alpha)
        for ell in range(1, 4):
            oracle = lie_d_ell_char0(e_l, x_l, ell)
            terms = {}
            from .scalars import gbinomial
            for j in range(ell + 1):
                a_j = gbinomial(alpha.get(-k), j) * (-1) ** j
                b_i = gbinomial(alpha.get(-m), ell - j) * (-sigma(m)) ** (ell - j)
                c = Fraction(a_j * b_i)
                if c == 0:
                    continue
                tgt = alpha.shifted(k, ell - j).shifted(-m, -(ell - j)) \
                           .shifted(m, j).shifted(-k, -j)
                if tgt.is_zero():
                    continue
                terms[tgt] = terms.get(tgt, Fraction(0)) + c
            if not LieElement(lctx, terms) == oracle:
                mismatches += 1
    return mismatches > 0, {"mismatches": mismatches, "samples": count}


@check("negative_jordanian_mutations")
def check_negative_jordanian_mutations(p=5, q=0):
    """Mutated table rows must be detected by the comparison."""
    ctx, rows = jordanian_sp4_rows(p, q)
    byname = {name: (x, expected) for name, x, expected in rows}
    alg = ctx.alg
    one = UElement.one(alg)
    f = ctx.omet(-1)
    h = ctx.h_u
    failures_detected = 0

    def t0(x, y):
        return TPoly.constant(ctx.mode, TensorElement.outer(x, y))

    def differs(name, mutant):
        x, _ = byname[name]
        [(mono, _c)] = x.terms.items()
        return ctx.delta_basis(mono[0][0]).first_mismatch(mutant) is not None

    # group-like tail replaced by 1 - f
    x, _ = byname["h"]
    mutant = t0(one, x) + t0(x, one) - f.map(lambda u: TensorElement.outer(x, u))
    failures_detected += differs("h", mutant)
    # dropped t factor in the correction term
    x, _ = byname["h'"]
    mutant = (t0(x, one) + t0(one, x)
              - f.map(lambda u: TensorElement.outer(h, u)))
    failures_detected += differs("h'", mutant)
    # spurious degree-0 correction on the row of e
    x, _ = byname["e"]
    mutant = (ctx.omet(1).map(lambda u: TensorElement.outer(x, u)) + t0(one, x)
              - f.map(lambda u: TensorElement.outer(h, u)))
    failures_detected += differs("e", mutant)
    # sign flip on the degree-1 correction
    name = "E[-1,2]+E[-2,1]"
    x, expected = byname[name]
    a4 = UElement.gen(alg, MultiIndex((0, 2, 0, 0)))
    tail = f.rmul_value(a4).map(lambda u: TensorElement.outer(h, u)).shift(1)
    mutant = expected - tail.map(lambda t: t.scale(4))  # +2 becomes -2
    failures_detected += differs(name, mutant)
    return failures_detected == 4, {"mutations": 4, "detected": failures_detected}


# ---------------------------------------------------------------------------
# suite assembly


def _spec(check_id, fn, context, **params):
    return {"check_id": check_id, "fn": fn, "context": context, "params": params}


def suite_cocycle(cfg):
    N5 = cfg.get("N", 5)
    return [
        _spec("cocycle/vertical-n1", "cocycle_vertical", "char0-vertical n=1 k=1", n=1, k=1, N=N5),
        _spec("cocycle/vertical-n2", "cocycle_vertical", "char0-vertical n=2 k=1", n=2, k=1, N=N5),
        _spec("cocycle/horizontal-n2", "cocycle_horizontal",
              "char0-horizontal n=2 (k,m)=(1,2)", n=2, k=1, m=2, N=min(4, N5)),
        _spec("cocycle/counit-inverse", "twist_counit_and_inverse", "char0-vertical n=1", N=6),
        _spec("cocycle/shift-grid", "shift_grid_identities", "char0-vertical n=1, shifts {-1,0,1,2}", N=6),
        _spec("cocycle/product-twist", "product_twist", "char0-vertical n=2, twists k=1,2", n=2, N=3),
        _spec("cocycle/distinctness-probe", "distinctness_probe",
              "char0-vertical n=2, probe at the second toral vector", n=2, N=3),
        _spec("cocycle/iterated-twisting", "iterated_twisting", "char0-vertical n=2", n=2, N=3),
    ]


def suite_char0(cfg):
    N = cfg.get("N", 4)
    seed = cfg.get("seed", DEFAULT_SEED)
    return [
        _spec("char0/closed-vs-conjugation-n1", "closed_vs_conjugation_vertical",
              "char0-vertical n=1 k=1, all |alpha| <= 4", n=1, k=1, N=N, radius=4),
        _spec("char0/closed-vs-conjugation-n2", "closed_vs_conjugation_vertical_sampled",
              "char0-vertical n=2 k=1 sampled", n=2, k=1, N=N, count=12, seed=seed),
        _spec("char0/closed-vs-conjugation-horizontal", "closed_vs_conjugation_horizontal",
              "char0-horizontal n=2 (1,2) sampled", n=2, k=1, m=2, N=N, count=8, seed=seed),
        _spec("char0/closed-vs-conjugation-horizontal-m-neg", "closed_vs_conjugation_horizontal",
              "char0-horizontal n=2 (1,-2) sampled", n=2, k=1, m=-2, N=3, count=5, seed=seed),
        _spec("char0/coefficient-oracle-vertical", "coefficient_oracle_vertical_char0",
              "char0-vertical n=1, Laurent window", n=1, k=1, radius=3, ellmax=4),
        _spec("char0/power-law", "power_law", "char0-vertical n=1, s <= 3",
              n=1, k=1, N=3, smax=3, count=4, seed=seed),
        _spec("char0/t0-specialization", "char0_t0_specialization",
              "char0-vertical n=1", n=1, k=1, N=3, radius=3),
        _spec("char0/bracket-vs-laurent", "char0_bracket_vs_laurent",
              "full H, n=2, Laurent window", n=2, radius=3, count=60, seed=seed),
    ]


def suite_modular_reduction(cfg):
    return [
        _spec("modred/bracket-square-p3", "bracket_reduction_square", "n=1 p=3", n=1, p=3),
        _spec("modred/bracket-square-p5", "bracket_reduction_square", "n=1 p=5", n=1, p=5),
        _spec("modred/abar-p3", "abar_reduction", "vertical n=1 p=3, all basis, ell <= p-1",
              n=1, k=1, p=3),
        _spec("modred/abar-p5", "abar_reduction", "vertical n=1 p=5, all basis, ell <= p-1",
              n=1, k=1, p=5),
        _spec("modred/poisson-w-p3", "poisson_vs_w_oracle", "n=1 p=3 exhaustive", n=1, p=3),
        _spec("modred/poisson-w-p5", "poisson_vs_w_oracle", "n=1 p=5 exhaustive", n=1, p=5),
        _spec("modred/poisson-w-n2", "poisson_vs_w_oracle", "n=2 p=3 sampled", n=2, p=3,
              sample=120, seed=cfg.get("seed", DEFAULT_SEED)),
        _spec("modred/ut-conjugation-vertical", "ut_closed_vs_conjugation",
              "ut-vertical n=1 p=5 N=4, all basis", n=1, k=1, p=5, N=4),
        _spec("modred/ut-conjugation-horizontal", "ut_closed_vs_conjugation",
              "ut-horizontal n=2 (1,2) p=3 N=2", n=2, k=1, m=2, p=3, N=2, limit=30),
    ]


def suite_utq(cfg):
    p = cfg.get("p", 3)
    specs = []
    for q in (0, 1):
        tag = "p=%d q=%d" % (p, q)
        specs += [
            _spec("utq/ideal-stability-q%d" % q, "utq_ideal_stability",
                  "utq-vertical n=1 " + tag, n=1, k=1, p=p, q=q),
            _spec("utq/axioms-q%d" % q, "utq_axioms", "utq-vertical n=1 " + tag,
                  n=1, k=1, p=p, q=q),
            _spec("utq/radford-q%d" % q, "utq_radford", "utq-vertical n=1 " + tag,
                  n=1, k=1, p=p, q=q),
            _spec("utq/delta-multiplicative-q%d" % q, "utq_delta_multiplicative",
                  "utq-vertical n=1 " + tag, n=1, k=1, p=p, q=q,
                  seed=cfg.get("seed", DEFAULT_SEED)),
            _spec("utq/t-evaluation-q%d" % q, "utq_t_evaluation",
                  "utq-vertical n=1 " + tag, n=1, k=1, p=p, q=q),
        ]
    specs += [
        _spec("utq/p-truncation", "utq_p_truncation_rules", "utq-vertical n=1 p=%d" % p,
              n=1, k=1, p=p, q=1),
        _spec("utq/t0-specialization", "utq_t0_specialization",
              "utq-vertical n=1 p=%d q=1" % p, n=1, k=1, p=p, q=1),
        _spec("utq/monomial-count", "utq_monomial_count", "n=1 p=%d" % p, n=1, p=p),
    ]
    return specs


def suite_horizontal(cfg):
    seed = cfg.get("seed", DEFAULT_SEED)
    mctx = ModularContext(2, 3)
    torals = [tuple(i) for i in mctx.basis_indices() if mctx.is_toral(i)]
    small = [tuple(i) for i in mctx.basis_indices() if i.grade() <= 2][:8]
    return [
        _spec("horizontal/coeff-oracle-modular", "coeff_oracle_horizontal_modular",
              "ut-horizontal n=2 (1,2) p=3, all basis", n=2, k=1, m=2, p=3, ellmax=2),
        _spec("horizontal/coeff-oracle-char0", "coeff_oracle_horizontal_char0",
              "char0-horizontal n=2, 200 seeded samples", n=2, k=1, count=200,
              bound=6, ellmax=3, seed=seed),
        _spec("horizontal/bbar-discrepancy", "bbar_discrepancy",
              "ut-horizontal n=2 (1,2) p=3", n=2, k=1, m=2, p=3, ellmax=2),
        _spec("horizontal/ad-power-closed-form", "ad_power_closed_form",
              "char0-horizontal n=2 (1,2), s <= 3", n=2, k=1, m=2, smax=3,
              count=25, seed=seed),
        _spec("horizontal/transport-identities", "transport_identities",
              "char0-horizontal n=2 (1,2)", n=2, k=1, m=2, N=4, count=4, seed=seed),
        _spec("horizontal/d-ell-special-values", "d_ell_special_values",
              "modular contexts p=3", p=3, q=1),
        _spec("horizontal/delta-p-power-split", "delta_p_power_split",
              "ut contexts p=3", p=3),
        _spec("horizontal/ideal-stability", "utq_ideal_stability",
              "utq-horizontal n=2 (1,2) p=3 q=1, torals + low degrees",
              n=2, k=1, m=2, p=3, q=1, indices=torals + small),
        _spec("horizontal/ideal-stability-sign-case", "utq_ideal_stability",
              "utq-horizontal n=2 (1,-2) p=3 q=0, alpha = e_m + e_-m",
              n=2, k=1, m=-2, p=3, q=0, indices=[(0, 1, 0, 1), (1, 0, 1, 0)]),
        _spec("horizontal/axioms", "utq_axioms",
              "utq-horizontal n=2 (1,2) p=3 q=1, torals + low degrees",
              n=2, k=1, m=2, p=3, q=1, indices=torals + small[:4]),
        _spec("horizontal/delta-multiplicative", "utq_delta_multiplicative",
              "utq-horizontal n=2 (1,2) p=3 q=1", n=2, k=1, m=2, p=3, q=1,
              count=5, seed=seed),
    ]


def suite_jordanian(cfg):
    p = cfg.get("p", 5)
    if p < 5:
        p = 5
    return [
        _spec("jordanian/table-p%d" % p, "jordanian_table",
              "utq-horizontal n=2 (1,-2) p=%d q=0 degree-0 part" % p, p=p, q=0),
        _spec("jordanian/table-p7", "jordanian_table",
              "utq-horizontal n=2 (1,-2) p=7 q=0 degree-0 part", p=7, q=0),
        _spec("jordanian/sp-homomorphism", "sp2n_homomorphism",
              "degree-0 part vs matrices, n=2 p=%d" % p, n=2, p=p),
    ]


def suite_dims(cfg):
    return [
        _spec("dims/H-n1-p3", "dim_h", "n=1 p=3", n=1, p=3),
        _spec("dims/H-n1-p5", "dim_h", "n=1 p=5", n=1, p=5),
        _spec("dims/H-n2-p3", "dim_h", "n=2 p=3", n=2, p=3),
        _spec("dims/u-monomials-n1-p3", "utq_monomial_count", "n=1 p=3", n=1, p=3),
        _spec("dims/u-report-n1-p3", "u_dimension_report", "n=1 p=3 (enumerated)",
              n=1, p=3, enumerate_monomials=True),
        _spec("dims/u-report-n1-p5", "u_dimension_report", "n=1 p=5 (by formula)", n=1, p=5),
        _spec("dims/u-report-n2-p3", "u_dimension_report", "n=2 p=3 (by formula)", n=2, p=3),
    ]


def suite_negative(cfg):
    return [
        _spec("negative/corrupted-cocycle", "negative_corrupted_cocycle",
              "char0-vertical n=1, degree-1 coefficient doubled", n=1, k=1, N=4),
        _spec("negative/wrong-sign-sigma", "negative_wrong_sign_sigma",
              "char0-horizontal n=2 (1,2)", n=2, k=1, m=2,
              seed=cfg.get("seed", DEFAULT_SEED)),
        _spec("negative/jordanian-mutations", "negative_jordanian_mutations",
              "utq-horizontal n=2 (1,-2) p=5", p=5, q=0),
    ]


SUITES = {
    "cocycle": suite_cocycle,
    "char0-closed-forms": suite_char0,
    "modular-reduction": suite_modular_reduction,
    "utq-hopf": suite_utq,
    "horizontal": suite_horizontal,
    "jordanian": suite_jordanian,
    "dims": suite_dims,
    "negative": suite_negative,
}

SUITE_ORDER = ["cocycle", "char0-closed-forms", "modular-reduction", "utq-hopf",
               "horizontal", "jordanian", "dims", "negative"]


def suite_specs(suite, cfg=None):
    cfg = cfg or {}
    if suite == "all":
        out = []
        for name in SUITE_ORDER:
            out.extend(SUITES[name](cfg))
        return out
    if suite not in SUITES:
        raise ValueError("unknown suite %r" % (suite,))
    return SUITES[suite](cfg)


def _run_one(spec):
    fn = CHECKS[spec["fn"]]
    start = time.perf_counter()
    try:
        ok, witness = fn(**spec["params"])
        status = "pass" if ok else "fail"
    except Exception as exc:  # a crash is a failing check, not a crashed suite
        status, witness = "fail", "exception: %r" % (exc,)
    elapsed = (time.perf_counter() - start) * 1000.0
    return CheckRecord(check_id=spec["check_id"], context=spec["context"],
                       parameters=dict(spec["params"]), status=status,
                       witness=witness, wall_time_ms=elapsed)


def run_suite(suite, cfg=None, jobs=1):
    specs = suite_specs(suite, cfg)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_one, specs))
    else:
        records = [_run_one(s) for s in specs]
    return records
