"""The check catalog: every supported identity as an executable exact
check with a structured, deterministic report.

Conventions shared by all entries: instances run over every index in
range (compositions of weight <= d, all operator indices, all group
elements); comparisons are structural equality of canonical forms, so
the tolerance is exactly zero.  Identities in the evaluation parameter
a run either with symbolic a (when the base field is symbolic) or at
max-a-degree + 2 seeded, pre-flighted rational values of a; the report
records which mode certified the result.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import SpecializationCollision, UsageError
from .interpolation import (FamilyCache, binom, binom_sym, closed_d, closed_e,
                            closed_phi, e_top, g_oracle, g_recursive, gplus,
                            gprime, okounkov, okounkov_ratio_parts, r_sym,
                            rprime, _point)
from .operators import (hecke, phi_qt, phi_r, sigma_op, sigma_word,
                        symmetrize, xi_qt, xi_r)
from .polyring import LaurentPoly, exact_div_check, negate_shift_all, \
    scale_all, shift_all
from .scalars import FieldConfig, Scalar, qt_config, r_config, seeded_rationals
from .shapes import (Permutation, all_permutations, coleg_vector, contains,
                     dominant_sort, enumerate_compositions, partitions_upto,
                     rearrangements, rho_point, sharp, spectral_qt,
                     spectral_r, tau_point, tilde, weight)


# ---------------------------------------------------------------------------
# reports and context
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    id: str
    config: dict
    instances: int
    failures: list
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, include_timing: bool = False) -> dict:
        out = {"id": self.id, "config": self.config,
               "instances": self.instances, "failures": self.failures}
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _show(x) -> str:
    if isinstance(x, LaurentPoly):
        return x.pretty()
    return str(x)


class CheckContext:
    def __init__(self, check_id: str, n: int, d: int, qt: FieldConfig,
                 r: FieldConfig, seed, cache: FamilyCache):
        self.check_id = check_id
        self.n = n
        self.d = d
        self.qt = qt
        self.r = r
        self.seed = seed
        self.cache = cache
        self.rng = random.Random(f"{seed}|{check_id}")
        self.failures: list = []
        self.instances = 0
        self.a_certification: Optional[str] = None

    # -- assertions -----------------------------------------------------------

    def eq(self, instance: str, lhs, rhs):
        self.instances += 1
        if lhs != rhs:
            self.failures.append({"instance": instance,
                                  "lhs": _show(lhs), "rhs": _show(rhs)})

    def zero(self, instance: str, value):
        self.instances += 1
        bad = not (value.is_zero() if hasattr(value, "is_zero") else value == 0)
        if bad:
            self.failures.append({"instance": instance,
                                  "lhs": _show(value), "rhs": "0"})

    def true(self, instance: str, flag: bool, lhs="false", rhs="true"):
        self.instances += 1
        if not flag:
            self.failures.append({"instance": instance,
                                  "lhs": _show(lhs), "rhs": _show(rhs)})

    # -- shared generators ------------------------------------------------------

    def compositions(self, extra: int = 0) -> list:
        return enumerate_compositions(self.n, self.d + extra)

    def random_polys(self, cfg: FieldConfig, count: int = 3,
                     max_deg: int = 2) -> list:
        """Seeded random polynomials with small integer coefficients."""
        monos = enumerate_compositions(self.n, max_deg)
        out = []
        for _ in range(count):
            terms = {}
            while not terms:
                for e in monos:
                    if self.rng.random() < 0.5:
                        c = self.rng.randint(-6, 6)
                        if c:
                            terms[e] = cfg.scalar(c)
            out.append(LaurentPoly(self.n, terms))
        return out

    # -- evaluation parameter handling ---------------------------------------------

    def a_symbolic_allowed(self, base: FieldConfig) -> bool:
        return base.symbolic

    def symbolic_a(self, base: FieldConfig) -> Scalar:
        gens = tuple(g for g in ("q", "t", "r") if g in base.gens()) + ("a",)
        self.a_certification = "symbolic"
        return Scalar.generator("a", gens)

    def sampled_a(self, k: int, reject: Optional[Callable] = None) -> list:
        """k distinct pre-flighted rational values for a."""
        vals = []
        stream = seeded_rationals(self.rng)
        tries = 0
        while len(vals) < k:
            cand = next(stream)
            tries += 1
            if tries > 200 * k:
                raise SpecializationCollision(
                    "could not pre-flight enough evaluation values")
            if reject is not None and reject(cand):
                continue
            vals.append(cand)
        self._max_sampled = max(k, getattr(self, "_max_sampled", 0))
        self.a_certification = f"sampled(k<={self._max_sampled})"
        return vals

    def a_values(self, base: FieldConfig, k: int,
                 reject: Optional[Callable] = None) -> list:
        """Either [symbolic a] or k sampled rationals, per the base field."""
        if self.a_symbolic_allowed(base):
            return [self.symbolic_a(base)]
        return [Scalar.from_fraction(v) for v in self.sampled_a(k, reject)]


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------

def _cofactor_products(vals: list) -> list:
    """W_i = product of vals[j] for j != i, without divisions."""
    m = len(vals)
    one = vals[0].__class__.one(vals[0].gens)
    pre = [one] * (m + 1)
    for i in range(m):
        pre[i + 1] = pre[i] * vals[i]
    suf = [one] * (m + 1)
    for i in range(m - 1, -1, -1):
        suf[i] = vals[i] * suf[i + 1]
    return [pre[i] * suf[i + 1] for i in range(m)]


def _down_set(alpha: tuple, n: int) -> list:
    """All beta contained in alpha (beta <= |alpha|), graded-lex order."""
    return [b for b in enumerate_compositions(n, weight(alpha))
            if contains(alpha, b)]


def _ones_point(n: int, cfg: FieldConfig) -> tuple:
    return tuple(cfg.one() for _ in range(n))


def _swap(v: tuple, i: int) -> tuple:
    out = list(v)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------

def check_hecke_quadratic(ctx: CheckContext):
    cfg = ctx.qt
    t = cfg.gen("t")
    for fi, f in enumerate(ctx.random_polys(cfg)):
        for i in range(1, ctx.n):
            u = hecke(i, f, cfg) + f
            v = hecke(i, u, cfg) - u.scale(t)
            ctx.zero(f"f#{fi}, i={i}", v)


def check_hecke_braid(ctx: CheckContext):
    cfg = ctx.qt
    for fi, f in enumerate(ctx.random_polys(cfg)):
        for i in range(1, ctx.n - 1):
            lhs = hecke(i, hecke(i + 1, hecke(i, f, cfg), cfg), cfg)
            rhs = hecke(i + 1, hecke(i, hecke(i + 1, f, cfg), cfg), cfg)
            ctx.eq(f"f#{fi}, i={i}", lhs, rhs)
        for i in range(1, ctx.n):
            for j in range(i + 2, ctx.n):
                lhs = hecke(i, hecke(j, f, cfg), cfg)
                rhs = hecke(j, hecke(i, f, cfg), cfg)
                ctx.eq(f"f#{fi}, commute i={i}, j={j}", lhs, rhs)


def check_sigma_braid(ctx: CheckContext):
    cfg = ctx.r
    perms = list(all_permutations(ctx.n))
    for fi, f in enumerate(ctx.random_polys(cfg)):
        for i in range(1, ctx.n):
            ctx.eq(f"f#{fi}, involution i={i}",
                   sigma_op(i, sigma_op(i, f, cfg), cfg), f)
        for i in range(1, ctx.n - 1):
            lhs = sigma_op(i, sigma_op(i + 1, sigma_op(i, f, cfg), cfg), cfg)
            rhs = sigma_op(i + 1, sigma_op(i, sigma_op(i + 1, f, cfg), cfg), cfg)
            ctx.eq(f"f#{fi}, braid i={i}", lhs, rhs)
        for _ in range(2):
            u = perms[ctx.rng.randrange(len(perms))]
            v = perms[ctx.rng.randrange(len(perms))]
            lhs = sigma_word(u * v, f, cfg)
            rhs = sigma_word(u, sigma_word(v, f, cfg), cfg)
            ctx.eq(f"f#{fi}, sigma({u.word})sigma({v.word})", lhs, rhs)


def check_eigen_qt(ctx: CheckContext):
    cfg = ctx.qt
    for alpha in ctx.compositions():
        g = g_recursive(alpha, cfg, ctx.cache)
        bar = spectral_qt(alpha, cfg)
        for i in range(1, ctx.n + 1):
            lhs = xi_qt(i, g, cfg)
            rhs = g.scale(bar[i - 1].invert())
            ctx.eq(f"alpha={alpha}, i={i}", lhs, rhs)


def check_eigen_r(ctx: CheckContext):
    cfg = ctx.r
    for alpha in ctx.compositions():
        g = g_recursive(alpha, cfg, ctx.cache)
        bar = spectral_r(alpha, cfg)
        for i in range(1, ctx.n + 1):
            lhs = xi_r(i, g, cfg)
            rhs = g.scale(bar[i - 1])
            ctx.eq(f"alpha={alpha}, i={i}", lhs, rhs)


def check_discr_qt(ctx: CheckContext):
    cfg = ctx.qt
    t = cfg.gen("t")
    tpow = cfg.gen_power("t", 1 - ctx.n)
    fs = ctx.random_polys(cfg, count=2)
    for a in ctx.a_values(cfg, k=max(f.total_degree() for f in fs) + 3):
        for fi, f in enumerate(fs):
            pf = phi_qt(f, cfg)
            hf = [hecke(i, f, cfg) for i in range(1, ctx.n)]
            for v in ctx.compositions():
                bar = spectral_qt(v, cfg)
                pt = bar.scale(a)
                lhs = pf.evaluate(pt)
                rhs = (a * bar[-1] - tpow) * f.evaluate(
                    spectral_qt(sharp(v), cfg).scale(a))
                ctx.eq(f"raise: f#{fi}, v={v}, a={a}", lhs, rhs)
                fv = f.evaluate(pt)
                for i in range(1, ctx.n):
                    den = bar[i - 1] - bar[i]
                    lhs = hf[i - 1].evaluate(pt)
                    rhs = ((t - 1) * bar[i - 1] / den) * fv \
                        + ((bar[i - 1] - t * bar[i]) / den) * f.evaluate(
                            spectral_qt(_swap(v, i), cfg).scale(a))
                    ctx.eq(f"exchange: f#{fi}, v={v}, i={i}, a={a}", lhs, rhs)


def check_discr_r(ctx: CheckContext):
    cfg = ctx.r
    r = cfg.gen("r")
    fs = ctx.random_polys(cfg, count=2)
    for a in ctx.a_values(cfg, k=max(f.total_degree() for f in fs) + 3):
        for fi, f in enumerate(fs):
            pf = phi_r(f, cfg)
            sf = [sigma_op(i, f, cfg) for i in range(1, ctx.n)]
            for v in ctx.compositions():
                bar = spectral_r(v, cfg)
                pt = bar.shift(a)
                lhs = pf.evaluate(pt)
                rhs = (a + bar[-1] + r * (ctx.n - 1)) * f.evaluate(
                    spectral_r(sharp(v), cfg).shift(a))
                ctx.eq(f"raise: f#{fi}, v={v}", lhs, rhs)
                fv = f.evaluate(pt)
                for i in range(1, ctx.n):
                    den = bar[i - 1] - bar[i]
                    lhs = sf[i - 1].evaluate(pt)
                    rhs = (r / den) * fv + ((den - r) / den) * f.evaluate(
                        spectral_r(_swap(v, i), cfg).shift(a))
                    ctx.eq(f"exchange: f#{fi}, v={v}, i={i}", lhs, rhs)


def check_recur_oracle_qt(ctx: CheckContext):
    for alpha in ctx.compositions():
        ctx.eq(f"alpha={alpha}",
               g_recursive(alpha, ctx.qt, ctx.cache),
               g_oracle(alpha, ctx.qt, ctx.cache))


def check_recur_oracle_r(ctx: CheckContext):
    for alpha in ctx.compositions():
        ctx.eq(f"alpha={alpha}",
               g_recursive(alpha, ctx.r, ctx.cache),
               g_oracle(alpha, ctx.r, ctx.cache))


def check_vanish_extra(ctx: CheckContext):
    cfg = ctx.qt
    for alpha in ctx.compositions():
        g = g_recursive(alpha, cfg, ctx.cache)
        for beta in ctx.compositions(extra=1):
            if beta == alpha or contains(beta, alpha):
                continue
            ctx.zero(f"alpha={alpha}, beta={beta}",
                     g.evaluate(_point("bar", beta, cfg, ctx.cache)))


def check_spectral_closed_form(ctx: CheckContext):
    cfg = ctx.qt
    for alpha in ctx.compositions():
        bar = spectral_qt(alpha, cfg)
        ks = coleg_vector(alpha)
        for i in range(ctx.n):
            want = cfg.gen_power("q", alpha[i]) * cfg.gen_power("t", -ks[i])
            ctx.eq(f"alpha={alpha}, i={i+1}", bar[i], want)


def check_eval_qt(ctx: CheckContext):
    cfg = ctx.qt
    tau = tau_point(ctx.n, cfg)
    for alpha in ctx.compositions():
        g = g_recursive(alpha, cfg, ctx.cache)
        d_a = closed_d(alpha, cfg)
        e_a = closed_e(alpha, cfg)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            lhs = d_a * g.evaluate(tau.scale(a))
            rhs = e_a * closed_phi(alpha, cfg, a)
            ctx.eq(f"alpha={alpha}, a={a}", lhs, rhs)


def check_eval_r(ctx: CheckContext):
    cfg = ctx.r
    rho = rho_point(ctx.n, cfg)
    for alpha in ctx.compositions():
        g = g_recursive(alpha, cfg, ctx.cache)
        d_a = closed_d(alpha, cfg)
        e_a = closed_e(alpha, cfg)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            lhs = d_a * g.evaluate(rho.shift(a))
            rhs = e_a * closed_phi(alpha, cfg, a)
            ctx.eq(f"alpha={alpha}, a={a}", lhs, rhs)


def check_inva(ctx: CheckContext):
    cfg = ctx.qt
    tau = tau_point(ctx.n, cfg)
    perms = list(all_permutations(ctx.n))
    for alpha in ctx.compositions():
        d_a = closed_d(alpha, cfg)
        g_a = g_recursive(alpha, cfg, ctx.cache)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            base = d_a * g_a.evaluate(tau.scale(a))
            for w in perms:
                beta = w.act(alpha)
                val = closed_d(beta, cfg) * g_recursive(
                    beta, cfg, ctx.cache).evaluate(tau.scale(a))
                ctx.eq(f"alpha={alpha}, w={w.word}, a={a}", val, base)


def check_zerosp(ctx: CheckContext):
    cfg = ctx.qt
    origin = tuple(cfg.zero() for _ in range(ctx.n))
    for alpha in ctx.compositions():
        lhs = closed_d(alpha, cfg) * g_recursive(
            alpha, cfg, ctx.cache).evaluate(origin)
        rhs = closed_e(alpha, cfg) * closed_phi(alpha, cfg, 0)
        ctx.eq(f"alpha={alpha}", lhs, rhs)


def check_derecur(ctx: CheckContext):
    cfg = ctx.qt
    t = cfg.gen("t")
    q = cfg.gen("q")
    tn = cfg.gen_power("t", ctx.n)
    tpow = cfg.gen_power("t", 1 - ctx.n)
    perms = list(all_permutations(ctx.n))
    for alpha in ctx.compositions():
        bar = spectral_qt(alpha, cfg)
        if alpha[-1] > 0:
            sa = sharp(alpha)
            ctx.eq(f"d-raise alpha={alpha}", closed_d(alpha, cfg),
                   (cfg.one() - tn * bar[-1]) * closed_d(sa, cfg))
            ctx.eq(f"e-raise alpha={alpha}", closed_e(alpha, cfg),
                   (tpow - t * bar[-1]) * closed_e(sa, cfg))
            ctx.eq(f"phi0-raise alpha={alpha}", closed_phi(alpha, cfg, 0),
                   -(q ** (alpha[-1] - 1)) * closed_phi(sa, cfg, 0))
        for i in range(1, ctx.n):
            if alpha[i - 1] > alpha[i]:
                x = bar[i - 1] / bar[i]
                ctx.eq(f"d-exchange alpha={alpha}, i={i}",
                       closed_d(alpha, cfg) * (cfg.one() - t * x),
                       (cfg.one() - x) * closed_d(_swap(alpha, i), cfg))
        e_a = closed_e(alpha, cfg)
        for w in perms:
            beta = w.act(alpha)
            ctx.eq(f"e-invariance alpha={alpha}, w={w.word}",
                   closed_e(beta, cfg), e_a)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            phi_a = closed_phi(alpha, cfg, a)
            for w in perms:
                beta = w.act(alpha)
                ctx.eq(f"phi-invariance alpha={alpha}, w={w.word}, a={a}",
                       closed_phi(beta, cfg, a), phi_a)


def check_derecur2(ctx: CheckContext):
    cfg = ctx.r
    r = cfg.gen("r")
    perms = list(all_permutations(ctx.n))
    for alpha in ctx.compositions():
        bar = spectral_r(alpha, cfg)
        if alpha[-1] > 0:
            sa = sharp(alpha)
            ratio = r * ctx.n + bar[-1]
            ctx.eq(f"d-raise alpha={alpha}", closed_d(alpha, cfg),
                   ratio * closed_d(sa, cfg))
            ctx.eq(f"e-raise alpha={alpha}", closed_e(alpha, cfg),
                   ratio * closed_e(sa, cfg))
        for i in range(1, ctx.n):
            if alpha[i - 1] > alpha[i]:
                x = bar[i - 1] - bar[i]
                ctx.eq(f"d-exchange alpha={alpha}, i={i}",
                       closed_d(alpha, cfg) * (x + r),
                       x * closed_d(_swap(alpha, i), cfg))
        e_a = closed_e(alpha, cfg)
        for w in perms:
            beta = w.act(alpha)
            ctx.eq(f"e-invariance alpha={alpha}, w={w.word}",
                   closed_e(beta, cfg), e_a)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            phi_a = closed_phi(alpha, cfg, a)
            for w in perms:
                beta = w.act(alpha)
                ctx.eq(f"phi-invariance alpha={alpha}, w={w.word}",
                       closed_phi(beta, cfg, a), phi_a)


def _check_oko(ctx: CheckContext, cfg: FieldConfig):
    """Reciprocity, symbolically in a: construct the interpolating
    polynomial from the ratios at degree <= |alpha|, then verify it
    reproduces the ratio (denominator-cleared) at every gamma up to
    two degrees higher."""
    qt = cfg.variant == "qt"
    kind = "bar-inv" if qt else "bar"
    a = ctx.symbolic_a(cfg)
    for alpha in ctx.compositions():
        deg = weight(alpha)
        o = okounkov(alpha, cfg, a, ctx.cache)
        for gamma in enumerate_compositions(ctx.n, deg + 2):
            num_g, den_g = okounkov_ratio_parts(alpha, gamma, cfg, a,
                                                ctx.cache)
            lhs = o.evaluate(_point(kind, gamma, cfg, ctx.cache))
            ctx.eq(f"alpha={alpha}, gamma={gamma}", lhs * den_g, num_g)


def check_oko_qt(ctx: CheckContext):
    _check_oko(ctx, ctx.qt)


def check_oko_r(ctx: CheckContext):
    _check_oko(ctx, ctx.r)


def check_binom_qt(ctx: CheckContext):
    cfg = ctx.qt
    tau = tau_point(ctx.n, cfg)
    for alpha in ctx.compositions():
        down = _down_set(alpha, ctx.n)
        g_a = g_recursive(alpha, cfg, ctx.cache)
        gps = [gprime(b, cfg, ctx.cache) for b in down]
        coefs = [binom(alpha, b, cfg, ctx.cache, inverted=True) for b in down]
        pos = down.index(alpha)

        def reject(cand: Fraction) -> bool:
            a0 = Scalar.from_fraction(cand)
            return any(g_recursive(b, cfg, ctx.cache)
                       .evaluate(tau.scale(a0)).is_zero() for b in down)

        for a in ctx.a_values(cfg, k=weight(alpha) + 2, reject=reject):
            dens = [g_recursive(b, cfg, ctx.cache).evaluate(tau.scale(a))
                    for b in down]
            cof = _cofactor_products(dens)
            lhs = scale_all(g_a, a) * cof[pos]
            rhs = LaurentPoly.zero(ctx.n)
            for b, gp, c, w in zip(down, gps, coefs, cof):
                rhs = rhs + gp.scale((a ** weight(b)) * c * w)
            ctx.eq(f"alpha={alpha}, a={a}", lhs, rhs)


def check_binom_r(ctx: CheckContext):
    cfg = ctx.r
    rho = rho_point(ctx.n, cfg)
    for alpha in ctx.compositions():
        down = _down_set(alpha, ctx.n)
        g_a = g_recursive(alpha, cfg, ctx.cache)
        gps = [gprime(b, cfg, ctx.cache) for b in down]
        coefs = [binom(alpha, b, cfg, ctx.cache) for b in down]
        pos = down.index(alpha)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            dens = [g_recursive(b, cfg, ctx.cache).evaluate(rho.shift(a))
                    for b in down]
            cof = _cofactor_products(dens)
            lhs = shift_all(g_a, a) * cof[pos]
            rhs = LaurentPoly.zero(ctx.n)
            for b, gp, c, w in zip(down, gps, coefs, cof):
                rhs = rhs + gp.scale(c * w)
            ctx.eq(f"alpha={alpha}", lhs, rhs)


def check_binom_sym_r(ctx: CheckContext):
    cfg = ctx.r
    rho = rho_point(ctx.n, cfg)
    for lam in partitions_upto(ctx.n, ctx.d):
        down = [m for m in partitions_upto(ctx.n, weight(lam))
                if contains(lam, m)]
        r_l = r_sym(lam, cfg, ctx.cache)
        rps = [rprime(m, cfg, ctx.cache) for m in down]
        coefs = [binom_sym(lam, m, cfg, ctx.cache) for m in down]
        pos = down.index(lam)
        for a in ctx.a_values(cfg, k=weight(lam) + 2):
            dens = [r_sym(m, cfg, ctx.cache).evaluate(rho.shift(a))
                    for m in down]
            cof = _cofactor_products(dens)
            lhs = shift_all(r_l, a) * cof[pos]
            rhs = LaurentPoly.zero(ctx.n)
            for m, rp, c, w in zip(down, rps, coefs, cof):
                rhs = rhs + rp.scale(c * w)
            ctx.eq(f"lambda={lam}", lhs, rhs)


def check_cor_first(ctx: CheckContext):
    cfg = ctx.qt
    origin = tuple(cfg.zero() for _ in range(ctx.n))
    for alpha in ctx.compositions():
        down = _down_set(alpha, ctx.n)
        dens = [g_recursive(b, cfg, ctx.cache).evaluate(origin) for b in down]
        for b, v in zip(down, dens):
            ctx.true(f"nonvanishing at 0: beta={b}", not v.is_zero())
        cof = _cofactor_products(dens)
        pos = down.index(alpha)
        lhs = g_recursive(alpha, cfg, ctx.cache) * cof[pos]
        rhs = LaurentPoly.zero(ctx.n)
        for b, w in zip(down, cof):
            c = binom(alpha, b, cfg, ctx.cache, inverted=True)
            rhs = rhs + e_top(b, cfg, ctx.cache).scale(c * w)
        ctx.eq(f"alpha={alpha}", lhs, rhs)


def check_cor_gprime(ctx: CheckContext):
    cfg = ctx.qt
    tau = tau_point(ctx.n, cfg)
    for alpha in ctx.compositions():
        down = _down_set(alpha, ctx.n)
        dens = [e_top(b, cfg, ctx.cache).evaluate(tau) for b in down]
        for b, v in zip(down, dens):
            ctx.true(f"nonvanishing at tau: beta={b}", not v.is_zero())
        cof = _cofactor_products(dens)
        pos = down.index(alpha)
        lhs = e_top(alpha, cfg, ctx.cache) * cof[pos]
        rhs = LaurentPoly.zero(ctx.n)
        for b, w in zip(down, cof):
            c = binom(alpha, b, cfg, ctx.cache, inverted=True)
            rhs = rhs + gprime(b, cfg, ctx.cache).scale(c * w)
        ctx.eq(f"alpha={alpha}", lhs, rhs)


def check_cor_las(ctx: CheckContext):
    cfg = ctx.r
    ones = _ones_point(ctx.n, cfg)
    one = cfg.one()
    for alpha in ctx.compositions():
        down = _down_set(alpha, ctx.n)
        dens = [e_top(b, cfg, ctx.cache).evaluate(ones) for b in down]
        for b, v in zip(down, dens):
            ctx.true(f"nonvanishing at ones: beta={b}", not v.is_zero())
        cof = _cofactor_products(dens)
        pos = down.index(alpha)
        lhs = shift_all(e_top(alpha, cfg, ctx.cache), one) * cof[pos]
        rhs = LaurentPoly.zero(ctx.n)
        for b, w in zip(down, cof):
            c = binom(alpha, b, cfg, ctx.cache)
            rhs = rhs + e_top(b, cfg, ctx.cache).scale(c * w)
        ctx.eq(f"alpha={alpha}", lhs, rhs)


def check_cor_plus(ctx: CheckContext):
    cfg = ctx.r
    rho = rho_point(ctx.n, cfg)
    wo = Permutation.longest(ctx.n)
    for alpha in ctx.compositions():
        down = _down_set(alpha, ctx.n)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            dens = [g_recursive(b, cfg, ctx.cache).evaluate(rho.shift(a))
                    for b in down]
            cof = _cofactor_products(dens)
            pos = down.index(alpha)
            shifted = shift_all(g_recursive(alpha, cfg, ctx.cache), a)
            lhs = sigma_word(wo, shifted, cfg) * cof[pos]
            rhs = LaurentPoly.zero(ctx.n)
            for b, w in zip(down, cof):
                c = binom(alpha, b, cfg, ctx.cache)
                gp = gplus(b, cfg, ctx.cache).permute_vars(wo)
                rhs = rhs + gp.scale(c * w)
            ctx.eq(f"alpha={alpha}", lhs, rhs)


def check_cor_rel(ctx: CheckContext):
    cfg = ctx.r
    for alpha in ctx.compositions():
        lam, _ = dominant_sort(alpha)
        for mu in partitions_upto(ctx.n, ctx.d):
            total = None
            for beta in rearrangements(mu):
                term = binom(alpha, beta, cfg, ctx.cache)
                total = term if total is None else total + term
            ctx.eq(f"alpha={alpha}, mu={mu}", total,
                   binom_sym(lam, mu, cfg, ctx.cache))


def check_relate(ctx: CheckContext):
    cfg = ctx.r
    wo = Permutation.longest(ctx.n)
    shift = cfg.gen("r") * (ctx.n - 1)
    for alpha in ctx.compositions():
        g = g_recursive(alpha, cfg, ctx.cache)
        h = negate_shift_all(g, shift).permute_vars(wo)
        h = sigma_word(wo, h, cfg)
        if weight(alpha) % 2:
            h = -h
        ctx.eq(f"alpha={alpha}", gprime(alpha, cfg, ctx.cache), h)


def check_relate2(ctx: CheckContext):
    cfg = ctx.r
    shift = cfg.gen("r") * (ctx.n - 1)
    for lam in partitions_upto(ctx.n, ctx.d):
        h = negate_shift_all(r_sym(lam, cfg, ctx.cache), shift)
        if weight(lam) % 2:
            h = -h
        ctx.eq(f"lambda={lam}", rprime(lam, cfg, ctx.cache), h)


def check_dom(ctx: CheckContext):
    cfg = ctx.r
    wo = Permutation.longest(ctx.n)
    r = cfg.gen("r")
    for beta in ctx.compositions():
        neg = tuple(-x for x in reversed(beta))
        _, w_neg = dominant_sort(neg)
        _, w_b = dominant_sort(beta)
        ctx.eq(f"w-conjugation beta={beta}", w_neg.word,
               (wo * w_b * wo).word)
        tl = tilde(beta, cfg)
        lhs = tuple(-tl[ctx.n - 1 - i] for i in range(ctx.n))
        bar = spectral_r(beta, cfg)
        rhs = tuple(bar[i] + r * (ctx.n - 1) for i in range(ctx.n))
        ctx.eq(f"reflection beta={beta}", lhs, rhs)


def check_sym_lemma(ctx: CheckContext):
    cfg = ctx.r
    for fi, f in enumerate(ctx.random_polys(cfg)):
        sf = symmetrize(f, cfg)
        for i in range(1, ctx.n):
            ctx.eq(f"f#{fi}, output symmetric i={i}", sf.swap_adjacent(i), sf)
            ctx.eq(f"f#{fi}, projector i={i}",
                   symmetrize(sigma_op(i, f, cfg), cfg), sf)


def check_symm_lemma(ctx: CheckContext):
    cfg = ctx.r
    rho = rho_point(ctx.n, cfg)
    for alpha in ctx.compositions():
        lam, _ = dominant_sort(alpha)
        r_l = r_sym(lam, cfg, ctx.cache)
        rp_l = rprime(lam, cfg, ctx.cache)
        g_a = g_recursive(alpha, cfg, ctx.cache)
        gp_a = gprime(alpha, cfg, ctx.cache)
        for a in ctx.a_values(cfg, k=weight(alpha) + 2):
            val_r = r_l.evaluate(rho.shift(a))
            val_g = g_a.evaluate(rho.shift(a))
            lhs = symmetrize(shift_all(g_a, a), cfg).scale(val_r)
            rhs = shift_all(r_l, a).scale(val_g)
            ctx.eq(f"shifted: alpha={alpha}", lhs, rhs)
            lhs = symmetrize(gp_a, cfg).scale(val_r)
            rhs = rp_l.scale(val_g)
            ctx.eq(f"primed: alpha={alpha}", lhs, rhs)


def check_sym_binomial(ctx: CheckContext):
    cfg = ctx.r
    ones = _ones_point(ctx.n, cfg)
    one = cfg.one()
    for lam in partitions_upto(ctx.n, ctx.d):
        down = [m for m in partitions_upto(ctx.n, weight(lam))
                if contains(lam, m)]
        tops = [r_sym(m, cfg, ctx.cache).top_part(weight(m)) for m in down]
        dens = [p.evaluate(ones) for p in tops]
        for m, v in zip(down, dens):
            ctx.true(f"nonvanishing at ones: mu={m}", not v.is_zero())
        cof = _cofactor_products(dens)
        pos = down.index(lam)
        lhs = shift_all(tops[pos], one) * cof[pos]
        rhs = LaurentPoly.zero(ctx.n)
        for m, p, w in zip(down, tops, cof):
            c = binom_sym(lam, m, cfg, ctx.cache)
            rhs = rhs + p.scale(c * w)
        ctx.eq(f"lambda={lam}", lhs, rhs)


def check_jack_eval_one(ctx: CheckContext):
    cfg = ctx.r
    ones = _ones_point(ctx.n, cfg)
    for alpha in ctx.compositions():
        lhs = closed_d(alpha, cfg) * e_top(alpha, cfg, ctx.cache).evaluate(ones)
        ctx.eq(f"alpha={alpha}", lhs, closed_e(alpha, cfg))


def check_binom_sum_support(ctx: CheckContext):
    for alpha in ctx.compositions():
        for beta in ctx.compositions():
            if weight(beta) > weight(alpha) or contains(alpha, beta):
                continue
            ctx.zero(f"qt: alpha={alpha}, beta={beta}",
                     binom(alpha, beta, ctx.qt, ctx.cache))
            ctx.zero(f"qt-inverted: alpha={alpha}, beta={beta}",
                     binom(alpha, beta, ctx.qt, ctx.cache, inverted=True))
            ctx.zero(f"r: alpha={alpha}, beta={beta}",
                     binom(alpha, beta, ctx.r, ctx.cache))


def check_divided_difference(ctx: CheckContext):
    cfg = ctx.qt
    for fi, f in enumerate(ctx.random_polys(cfg)):
        for i in range(1, ctx.n):
            ctx.true(f"f#{fi}, i={i}",
                     exact_div_check(f, f.divided_difference(i), i))


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckDef:
    id: str
    statement: str
    formula: str
    fields: tuple  # which of qt / r the check draws on
    fn: Callable


_CATALOG_ROWS = [
    ("hecke-quadratic", "Hecke operators satisfy the quadratic relation",
     "(H_i - t)(H_i + 1) f = 0", ("qt",), check_hecke_quadratic),
    ("hecke-braid", "Hecke operators satisfy the braid relations",
     "H_i H_{i+1} H_i = H_{i+1} H_i H_{i+1}", ("qt",), check_hecke_braid),
    ("sigma-braid", "sigma operators give a symmetric-group representation",
     "sigma_i^2 = 1, sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i "
     "sigma_{i+1}, sigma(uv) = sigma(u) sigma(v)", ("r",), check_sigma_braid),
    ("eigen-qt", "interpolation polynomials are joint eigenfunctions",
     "Xi_i G_alpha = bar(alpha)_i^{-1} G_alpha", ("qt",), check_eigen_qt),
    ("eigen-r", "the r-variant eigen-equations",
     "Xi~_i G_alpha = bar(alpha)(r)_i G_alpha", ("r",), check_eigen_r),
    ("discr-qt", "operator evaluations at scaled spectral points",
     "Phi f(a v-bar) = (a v-bar_n - t^{1-n}) f(a (v#)-bar); two-term "
     "H_i evaluation rule", ("qt",), check_discr_qt),
    ("discr-r", "operator evaluations at shifted spectral points",
     "Phi~ f(a + v-bar) = (a + v-bar_n + nr - r) f(a + (v#)-bar); two-term "
     "sigma_i evaluation rule", ("r",), check_discr_r),
    ("recur-oracle-qt", "recursion equals the vanishing-condition solve",
     "G via raising/exchange recursion == G via exact linear solve",
     ("qt",), check_recur_oracle_qt),
    ("recur-oracle-r", "r-variant recursion equals the solve",
     "G via raising/exchange recursion == G via exact linear solve",
     ("r",), check_recur_oracle_r),
    ("vanish-extra", "vanishing beyond the defining degree",
     "G_alpha(beta-bar) = 0 unless alpha fits inside beta",
     ("qt",), check_vanish_extra),
    ("spectral-closed-form", "spectral coordinates in closed form",
     "bar(alpha)_i = q^{alpha_i} t^{-k_i}", ("qt",),
     check_spectral_closed_form),
    ("eval-qt", "principal evaluation in product form",
     "d_alpha G_alpha(a tau) = e_alpha phi_alpha(a)", ("qt",), check_eval_qt),
    ("eval-r", "r-variant principal evaluation",
     "d_alpha(r) G_alpha(a + rho) = e_alpha(r) phi_alpha(a; r)", ("r",),
     check_eval_r),
    ("inva", "d-weighted principal values are symmetric in the index",
     "d_{w alpha} G_{w alpha}(a tau) = d_alpha G_alpha(a tau)", ("qt",),
     check_inva),
    ("zerosp", "principal evaluation at the origin",
     "d_alpha G_alpha(0) = e_alpha phi_alpha(0)", ("qt",), check_zerosp),
    ("derecur", "scalar ratio recursions for d, e, phi",
     "d_alpha/d_{alpha#} = 1 - t^n bar(alpha)_n and companions", ("qt",),
     check_derecur),
    ("derecur2", "r-variant scalar ratio recursions",
     "d_alpha(r)/d_{alpha#}(r) = rn + bar(alpha)(r)_n = e ratio", ("r",),
     check_derecur2),
    ("oko-qt", "reciprocity: one polynomial interpolates all ratios",
     "O_alpha(beta-bar^{-1}) = G_beta(a alpha~)/G_beta(a tau) also at "
     "|beta| = |alpha|+1, |alpha|+2", ("qt",), check_oko_qt),
    ("oko-r", "r-variant reciprocity",
     "O_alpha(beta-bar) = G_beta(a + alpha~)/G_beta(a + rho) also at "
     "|beta| = |alpha|+1, |alpha|+2", ("r",), check_oko_r),
    ("binom-qt", "the binomial expansion of scaled polynomials",
     "G_alpha(ax)/G_alpha(a tau) = sum over beta inside alpha of a^{|beta|} "
     "[alpha,beta]_{1/q,1/t} G'_beta(x)/G_beta(a tau)", ("qt",),
     check_binom_qt),
    ("binom-r", "the r-variant binomial expansion",
     "G_alpha(a+x)/G_alpha(a+rho) = sum [alpha,beta]_r G'_beta(x)/"
     "G_beta(a+rho)", ("r",), check_binom_r),
    ("binom-sym-r", "the symmetric r-variant binomial expansion",
     "R_lambda(a+x)/R_lambda(a+rho) = sum (lambda,mu)_r R'_mu(x)/"
     "R_mu(a+rho)", ("r",), check_binom_sym_r),
    ("cor-first", "binomial expansion at a = 0",
     "G_alpha(x)/G_alpha(0) = sum [alpha,beta]_{1/q,1/t} E_beta(x)/"
     "G_beta(0)", ("qt",), check_cor_first),
    ("cor-gprime", "binomial expansion of the top parts",
     "E_alpha(x)/E_alpha(tau) = sum [alpha,beta]_{1/q,1/t} G'_beta(x)/"
     "E_beta(tau)", ("qt",), check_cor_gprime),
    ("cor-las", "the shifted expansion of Jack top parts",
     "E_alpha(1+x)/E_alpha(1) = sum [alpha,beta]_r E_beta(x)/E_beta(1)",
     ("r",), check_cor_las),
    ("cor-plus", "the reflected r-variant expansion",
     "sigma(w_o) G_alpha(a+x)/G_alpha(a+rho) = sum [alpha,beta]_r "
     "w_o G+_beta(x)/G_beta(a+rho)", ("r",), check_cor_plus),
    ("cor-rel", "nonsymmetric binomials sum to symmetric ones",
     "sum over rearrangements beta of mu of [alpha,beta]_r = "
     "(lambda,mu)_r", ("r",), check_cor_rel),
    ("relate", "primed family as a reflected image",
     "G'_alpha(x) = (-1)^{|alpha|} sigma(w_o) w_o G_alpha(-x-(n-1)r)",
     ("r",), check_relate),
    ("relate2", "symmetric primed family as a reflected image",
     "R'_lambda(x) = (-1)^{|lambda|} R_lambda(-x-(n-1)r)", ("r",),
     check_relate2),
    ("dom", "reflection of spectral data",
     "w_{-w_o beta} = w_o w_beta w_o and -w_o beta~ = beta-bar + (n-1)r",
     ("r",), check_dom),
    ("sym-lemma", "the averaged operator projects onto symmetric polynomials",
     "S f is symmetric and S sigma_i = S", ("r",), check_sym_lemma),
    ("symm-lemma", "symmetrization matches the symmetric family",
     "S G_alpha(a+x)/G_alpha(a+rho) = R_lambda(a+x)/R_lambda(a+rho), and "
     "primed analogue", ("r",), check_symm_lemma),
    ("sym-binomial-OO", "classical symmetric binomial formula for top parts",
     "P_lambda(1+x)/P_lambda(1) = sum (lambda,mu)_r P_mu(x)/P_mu(1)",
     ("r",), check_sym_binomial),
    ("jack-eval-one", "top parts evaluated at the all-ones point",
     "d_alpha(r) E_alpha(1) = e_alpha(r)", ("r",), check_jack_eval_one),
    ("binom-sum-support", "binomials vanish off the containment order",
     "[alpha,beta] = 0 whenever beta does not fit inside alpha", ("qt", "r"),
     check_binom_sum_support),
    ("divided-difference", "exact division by the root difference",
     "(1 - s_i) f is divisible by x_i - x_{i+1}", ("qt",),
     check_divided_difference),
]

CATALOG = {row[0]: CheckDef(*row) for row in _CATALOG_ROWS}


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

def default_fields(qt: Optional[FieldConfig] = None,
                   r: Optional[FieldConfig] = None) -> tuple:
    return (qt or qt_config(2, 3), r or r_config())


def run_check(check_id: str, n: int, d: int, cfg: Optional[FieldConfig] = None,
              seed=0, cache: Optional[FamilyCache] = None,
              qt: Optional[FieldConfig] = None,
              r: Optional[FieldConfig] = None) -> CheckReport:
    """Execute one catalog entry over every instance in range.

    cfg, when given, overrides the configuration of its own variant
    (qt-type configs steer qt checks, r-type configs steer r checks)."""
    cdef = CATALOG.get(check_id)
    if cdef is None:
        raise UsageError(f"unknown check id {check_id!r}")
    if cfg is not None:
        if cfg.variant in ("qt", "qta"):
            qt = cfg.family_config()
        else:
            r = cfg.family_config()
    qt_cfg, r_cfg = default_fields(qt, r)
    cache = cache if cache is not None else FamilyCache()
    ctx = CheckContext(check_id, n, d, qt_cfg, r_cfg, seed, cache)
    start = time.perf_counter()
    cdef.fn(ctx)
    elapsed = (time.perf_counter() - start) * 1000.0
    config = {"n": n, "deg": d, "seed": str(seed)}
    used = {}
    if "qt" in cdef.fields:
        used["qt"] = qt_cfg.describe()
    if "r" in cdef.fields:
        used["r"] = r_cfg.describe()
    config["field"] = used
    if ctx.a_certification:
        config["a_certification"] = ctx.a_certification
    return CheckReport(check_id, config, ctx.instances, ctx.failures, elapsed)


def run_all(n: int, d: int, seed=0, cache: Optional[FamilyCache] = None,
            qt: Optional[FieldConfig] = None,
            r: Optional[FieldConfig] = None, ids: Optional[list] = None):
    """Run the whole catalog (or the given ids) in stable order."""
    cache = cache if cache is not None else FamilyCache()
    for check_id in (ids or list(CATALOG)):
        yield run_check(check_id, n, d, seed=seed, cache=cache, qt=qt, r=r)
