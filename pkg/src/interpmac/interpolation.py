"""Constructors for the interpolation polynomial families, the
closed-form scalar products attached to diagrams, and the binomial
coefficients built from them.

Families (CLI spellings in parentheses):

* G      inhomogeneous interpolation polynomial, q,t or r variant
* E      its top homogeneous part
* Gprime same top part, vanishing on the reflected (tilde) points
* Gplus  r-variant reflection of G
* R      symmetric interpolation polynomial (partition index)
* Rprime symmetric analogue of Gprime
* O      reciprocity interpolation polynomial (needs the parameter a)

All linear systems are solved by exact fraction-free Gaussian
elimination with first-nonzero pivoting; each family re-checks its
defining vanishing conditions after construction.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence

from .errors import DivisionByZero, SpecializationCollision, UsageError
from .operators import hecke, phi_qt, phi_r, sigma_op
from .polyring import LaurentPoly, negate_shift_all
from .scalars import FieldConfig, Scalar, dumps_canonical
from .shapes import (SpectralPoint, diagram_stats, enumerate_compositions,
                     is_composition, is_partition, partitions_upto,
                     rearrangements, sharp, spectral, tilde,
                     reciprocal_point, weight)


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def solve_square(rows: Sequence[Sequence[Scalar]],
                 rhs_cols: Sequence[Sequence[Scalar]],
                 context: str = "linear system") -> list:
    """Solve A x = b for every right-hand column at once.

    Fraction-free (Bareiss) forward elimination with first-nonzero
    pivoting; divisions along the way are exact.  Raises
    SpecializationCollision when the matrix is singular.
    """
    m = len(rows)
    k = len(rhs_cols)
    if m == 0:
        return [[] for _ in range(k)]
    aug = [list(row) + [col[i] for col in rhs_cols]
           for i, row in enumerate(rows)]
    width = m + k
    some = aug[0][0]
    one = some.__class__.one(some.gens)
    prev = one
    for col in range(m):
        pivot_row = next((r for r in range(col, m) if not aug[r][col].is_zero()),
                         None)
        if pivot_row is None:
            raise SpecializationCollision(f"singular system in {context}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, m):
            head = aug[r][col]
            if head.is_zero():
                if prev.is_one():
                    continue
                for c in range(col + 1, width):
                    aug[r][c] = (pivot * aug[r][c]) / prev
            else:
                for c in range(col + 1, width):
                    aug[r][c] = (pivot * aug[r][c] - head * aug[col][c]) / prev
            aug[r][col] = some.__class__.zero(some.gens)
        prev = pivot
    solutions = []
    for j in range(k):
        x = [None] * m
        for i in range(m - 1, -1, -1):
            acc = aug[i][m + j]
            for c in range(i + 1, m):
                acc = acc - aug[i][c] * x[c]
            x[i] = acc / aug[i][i]
        solutions.append(x)
    return solutions


def invert_matrix(rows: Sequence[Sequence[Scalar]], context: str) -> list:
    """Columns of the inverse matrix."""
    m = len(rows)
    some = rows[0][0]
    one = some.__class__.one(some.gens)
    zero = some.__class__.zero(some.gens)
    identity = [[one if i == j else zero for i in range(m)] for j in range(m)]
    return solve_square(rows, identity, context)


def _matvec_inv(inv_cols: list, rhs: Sequence[Scalar]) -> list:
    """A^{-1} rhs given the columns of A^{-1}."""
    m = len(rhs)
    out = []
    for i in range(m):
        acc = None
        for j in range(m):
            term = inv_cols[j][i] * rhs[j]
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyKey:
    family: str
    variant: str
    index: tuple
    config: str

    def describe(self) -> dict:
        return {"family": self.family, "variant": self.variant,
                "index": list(self.index), "config": self.config}


class FamilyCache:
    """Memo for constructed polynomials and factored point systems.

    Reads are lock-free; writes take a lock so concurrent checks can
    share one cache.  Polynomials are additionally persisted to disk
    when a directory is configured (one JSON file per family key,
    content-addressed)."""

    def __init__(self, disk_dir: Optional[str] = None):
        self._mem: dict = {}
        self._lock = threading.Lock()
        self.disk_dir = Path(disk_dir) if disk_dir else None
        if self.disk_dir:
            self.disk_dir.mkdir(parents=True, exist_ok=True)

    def memo(self, key: tuple, thunk: Callable):
        got = self._mem.get(key)
        if got is None:
            got = thunk()
            with self._lock:
                self._mem.setdefault(key, got)
        return got

    # -- disk layer (polynomials only) -------------------------------------

    def _path(self, fk: FamilyKey) -> Path:
        digest = hashlib.sha256(
            dumps_canonical(fk.describe()).encode()).hexdigest()
        return self.disk_dir / f"{digest}.json"

    def poly(self, fk: FamilyKey, build: Callable) -> LaurentPoly:
        key = ("poly", fk)
        got = self._mem.get(key)
        if got is not None:
            return got
        if self.disk_dir:
            path = self._path(fk)
            if path.exists():
                data = json.loads(path.read_text())
                got = LaurentPoly.from_json(data["poly"])
                with self._lock:
                    self._mem.setdefault(key, got)
                return got
        got = build()
        with self._lock:
            self._mem.setdefault(key, got)
        if self.disk_dir:
            payload = {"key": fk.describe(), "poly": got.to_json()}
            self._path(fk).write_text(dumps_canonical(payload))
        return got


# ---------------------------------------------------------------------------
# spectral point tables and factored interpolation systems
# ---------------------------------------------------------------------------

def _point(kind: str, v: tuple, cfg: FieldConfig, cache: FamilyCache) -> SpectralPoint:
    key = ("pt", kind, cfg.cache_token(), v)
    if kind == "bar":
        return cache.memo(key, lambda: spectral(v, cfg))
    if kind == "tilde":
        return cache.memo(key, lambda: tilde(v, cfg))
    if kind == "bar-inv":
        return cache.memo(key, lambda: reciprocal_point(spectral(v, cfg)))
    raise UsageError(f"unknown point kind {kind}")


def _power_table(point: SpectralPoint, exps: Sequence[tuple]) -> list:
    cachepow: dict = {}

    def power(i, k):
        got = cachepow.get((i, k))
        if got is None:
            got = point[i] ** k
            cachepow[(i, k)] = got
        return got

    rows = []
    for e in exps:
        acc = None
        for i, k in enumerate(e):
            if k:
                p = power(i, k)
                acc = p if acc is None else acc * p
        if acc is None:
            some = point[0]
            acc = some.__class__.one(some.gens)
        rows.append(acc)
    return rows


def monomial_matrix(indices: Sequence[tuple], exps: Sequence[tuple], kind: str,
                    cfg: FieldConfig, cache: FamilyCache) -> list:
    """Rows of point^exp over the given index/exponent lists."""
    return [_power_table(_point(kind, v, cfg, cache), exps) for v in indices]


def mono_sym(n: int, mu: tuple, one: Scalar) -> LaurentPoly:
    """Monomial symmetric polynomial m_mu in n variables."""
    return LaurentPoly(n, {e: one for e in rearrangements(mu)}, _clean=True)


def _sym_matrix(indices: Sequence[tuple], basis: Sequence[tuple], kind: str,
                cfg: FieldConfig, cache: FamilyCache) -> list:
    one = cfg.one()
    n = len(indices[0]) if indices else 0
    polys = [mono_sym(n, mu, one) for mu in basis]
    rows = []
    for v in indices:
        p = _point(kind, v, cfg, cache)
        rows.append([m.evaluate(p) for m in polys])
    return rows


def _inverse_system(kind: str, n: int, deg: int, cfg: FieldConfig,
                    cache: FamilyCache, symmetric: bool = False) -> tuple:
    """(indices, inverse columns) for one interpolation point family."""
    token = cfg.cache_token()
    key = ("inv", kind, symmetric, token, n, deg)

    def build():
        if symmetric:
            indices = partitions_upto(n, deg)
            rows = _sym_matrix(indices, indices, kind, cfg, cache)
        else:
            indices = enumerate_compositions(n, deg)
            rows = monomial_matrix(indices, indices, kind, cfg, cache)
        ctx = (f"{'symmetric ' if symmetric else ''}{kind} interpolation, "
               f"n={n} degree {deg}, field {token}")
        return indices, invert_matrix(rows, ctx)

    return cache.memo(key, build)


# ---------------------------------------------------------------------------
# family constructors
# ---------------------------------------------------------------------------

def _family_cfg(cfg: FieldConfig) -> FieldConfig:
    return cfg.family_config()


def _validate_index(index: Sequence[int], partition: bool = False) -> tuple:
    index = tuple(int(x) for x in index)
    if not is_composition(index):
        raise UsageError(f"not a composition: {index}")
    if partition and not is_partition(index):
        raise UsageError(f"not a partition: {index}")
    return index


def _recheck_vanishing(poly: LaurentPoly, alpha: tuple, kind: str,
                       cfg: FieldConfig, cache: FamilyCache):
    """Defining conditions, re-verified on the freshly built polynomial."""
    deg = weight(alpha)
    if poly.total_degree() > deg:
        raise SpecializationCollision(
            f"degree bound violated for index {alpha}")
    for beta in enumerate_compositions(len(alpha), deg):
        if beta == alpha:
            continue
        if not poly.evaluate(_point(kind, beta, cfg, cache)).is_zero():
            raise SpecializationCollision(
                f"vanishing failed at {beta} for index {alpha}")


def g_recursive(alpha: Sequence[int], cfg: FieldConfig,
                cache: FamilyCache) -> LaurentPoly:
    """Interpolation polynomial for alpha via the raising/exchange
    recursion (memoized; the construction used by default)."""
    cfg = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    n = len(alpha)
    qt = cfg.variant == "qt"
    fk = FamilyKey("G", cfg.variant, alpha, cfg.cache_token())

    def build():
        if not any(alpha):
            return LaurentPoly.constant(n, cfg.one())
        if alpha[-1] > 0:
            sub = g_recursive(sharp(alpha), cfg, cache)
            if qt:
                return phi_qt(sub, cfg).scale(cfg.gen_power("q", alpha[-1] - 1))
            return phi_r(sub, cfg)
        i = max(j for j in range(1, n) if alpha[j - 1] > alpha[j])
        swapped = list(alpha)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        sub = g_recursive(tuple(swapped), cfg, cache)
        bar = spectral(alpha, cfg)
        if qt:
            d = cfg.one() - bar[i - 1] / bar[i]
            if d.is_zero():
                raise SpecializationCollision(
                    f"exchange denominator vanished at index {alpha}, i={i}")
            return hecke(i, sub, cfg) + sub.scale((cfg.one() - cfg.gen("t")) / d)
        d = bar[i - 1] - bar[i]
        if d.is_zero():
            raise SpecializationCollision(
                f"exchange denominator vanished at index {alpha}, i={i}")
        return sigma_op(i, sub, cfg) + sub.scale(cfg.gen("r") / d)

    return cache.poly(fk, build)


def g_oracle(alpha: Sequence[int], cfg: FieldConfig,
             cache: FamilyCache) -> LaurentPoly:
    """Interpolation polynomial for alpha built directly from its
    vanishing conditions by an exact linear solve; independent of the
    recursion and used to cross-check it."""
    cfg = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    n = len(alpha)
    fk = FamilyKey("G-oracle", cfg.variant, alpha, cfg.cache_token())

    def build():
        deg = weight(alpha)
        indices, inv_cols = _inverse_system("bar", n, deg, cfg, cache)
        pos = indices.index(alpha)
        u = inv_cols[pos]
        if u[pos].is_zero():
            raise SpecializationCollision(
                f"normalization impossible for index {alpha}")
        scale = u[pos].invert()
        poly = LaurentPoly(n, {e: c * scale for e, c in zip(indices, u)})
        _recheck_vanishing(poly, alpha, "bar", cfg, cache)
        one = cfg.one()
        if poly.coefficient(alpha, cfg.zero()) != one:
            raise SpecializationCollision(
                f"normalization failed for index {alpha}")
        return poly

    return cache.poly(fk, build)


def e_top(alpha: Sequence[int], cfg: FieldConfig,
          cache: FamilyCache) -> LaurentPoly:
    """Top homogeneous part of the interpolation polynomial."""
    alpha = _validate_index(alpha)
    return g_recursive(alpha, cfg, cache).top_part(weight(alpha))


def gprime(alpha: Sequence[int], cfg: FieldConfig,
           cache: FamilyCache) -> LaurentPoly:
    """Same top part as G, vanishing on the tilde points of all strictly
    smaller degrees."""
    cfg = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    n = len(alpha)
    fk = FamilyKey("Gprime", cfg.variant, alpha, cfg.cache_token())

    def build():
        deg = weight(alpha)
        top = e_top(alpha, cfg, cache)
        if deg == 0:
            return top
        indices, inv_cols = _inverse_system("tilde", n, deg - 1, cfg, cache)
        rhs = [-top.evaluate(_point("tilde", b, cfg, cache)) for b in indices]
        coeffs = _matvec_inv(inv_cols, rhs)
        poly = top + LaurentPoly(n, {e: c for e, c in zip(indices, coeffs)})
        for beta in indices:
            if not poly.evaluate(_point("tilde", beta, cfg, cache)).is_zero():
                raise SpecializationCollision(
                    f"tilde vanishing failed at {beta} for index {alpha}")
        return poly

    return cache.poly(fk, build)


def gplus(alpha: Sequence[int], cfg: FieldConfig,
          cache: FamilyCache) -> LaurentPoly:
    """(-1)^{|alpha|} G_alpha(-x - (n-1)r) in the r variant."""
    cfg = _family_cfg(cfg)
    if cfg.variant != "r":
        raise UsageError("Gplus is an r-variant family")
    alpha = _validate_index(alpha)
    fk = FamilyKey("Gplus", cfg.variant, alpha, cfg.cache_token())

    def build():
        g = g_recursive(alpha, cfg, cache)
        shift = cfg.gen("r") * (len(alpha) - 1)
        out = negate_shift_all(g, shift)
        if weight(alpha) % 2:
            out = -out
        return out

    return cache.poly(fk, build)


def r_sym(lam: Sequence[int], cfg: FieldConfig,
          cache: FamilyCache) -> LaurentPoly:
    """Symmetric interpolation polynomial for a partition index."""
    cfg = _family_cfg(cfg)
    lam = _validate_index(lam, partition=True)
    n = len(lam)
    fk = FamilyKey("R", cfg.variant, lam, cfg.cache_token())

    def build():
        deg = weight(lam)
        indices, inv_cols = _inverse_system("bar", n, deg, cfg, cache,
                                            symmetric=True)
        pos = indices.index(lam)
        u = inv_cols[pos]
        if u[pos].is_zero():
            raise SpecializationCollision(
                f"normalization impossible for index {lam}")
        scale = u[pos].invert()
        one = cfg.one()
        poly = LaurentPoly.zero(n)
        for mu, c in zip(indices, u):
            poly = poly + mono_sym(n, mu, one).scale(c * scale)
        for mu in indices:
            if mu == lam:
                continue
            if not poly.evaluate(_point("bar", mu, cfg, cache)).is_zero():
                raise SpecializationCollision(
                    f"vanishing failed at {mu} for index {lam}")
        return poly

    return cache.poly(fk, build)


def rprime(lam: Sequence[int], cfg: FieldConfig,
           cache: FamilyCache) -> LaurentPoly:
    """Symmetric polynomial with the top part of R, vanishing on the
    tilde points of smaller degree (r variant)."""
    cfg = _family_cfg(cfg)
    if cfg.variant != "r":
        raise UsageError("Rprime is an r-variant family")
    lam = _validate_index(lam, partition=True)
    n = len(lam)
    fk = FamilyKey("Rprime", cfg.variant, lam, cfg.cache_token())

    def build():
        deg = weight(lam)
        top = r_sym(lam, cfg, cache).top_part(deg)
        if deg == 0:
            return top
        indices, inv_cols = _inverse_system("tilde", n, deg - 1, cfg, cache,
                                            symmetric=True)
        rhs = [-top.evaluate(_point("tilde", mu, cfg, cache)) for mu in indices]
        coeffs = _matvec_inv(inv_cols, rhs)
        one = cfg.one()
        poly = top
        for mu, c in zip(indices, coeffs):
            poly = poly + mono_sym(n, mu, one).scale(c)
        for mu in indices:
            if not poly.evaluate(_point("tilde", mu, cfg, cache)).is_zero():
                raise SpecializationCollision(
                    f"tilde vanishing failed at {mu} for index {lam}")
        return poly

    return cache.poly(fk, build)


def okounkov(alpha: Sequence[int], cfg: FieldConfig, a: Scalar,
             cache: FamilyCache) -> LaurentPoly:
    """The reciprocity polynomial: degree <= |alpha|, interpolating the
    prescribed evaluation ratios over all indices of degree <= |alpha|.

    cfg is the base polynomial field; a is the evaluation parameter as a
    field element (symbolic generator or exact rational)."""
    base = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    n = len(alpha)
    deg = weight(alpha)
    qt = base.variant == "qt"
    kind = "bar-inv" if qt else "bar"
    indices, inv_cols = _inverse_system(kind, n, deg, base, cache)
    rhs = [okounkov_value(alpha, beta, base, a, cache) for beta in indices]
    coeffs = _matvec_inv(inv_cols, rhs)
    return LaurentPoly(n, {e: c for e, c in zip(indices, coeffs)})


def okounkov_ratio_parts(alpha: tuple, beta: tuple, cfg: FieldConfig,
                         a: Scalar, cache: FamilyCache) -> tuple:
    """(num, den) of the prescribed ratio at beta: G_beta at the
    a-shifted (or a-scaled) tilde point of alpha, and at the base point.
    Kept unreduced so that denominators stay free of a."""
    base = _family_cfg(cfg)
    g = g_recursive(beta, base, cache)
    t_alpha = _point("tilde", alpha, base, cache)
    origin = _point("bar", (0,) * len(alpha), base, cache)
    if base.variant == "qt":
        return g.evaluate(t_alpha.scale(a)), g.evaluate(origin.scale(a))
    return g.evaluate(t_alpha.shift(a)), g.evaluate(origin.shift(a))


def okounkov_value(alpha: tuple, beta: tuple, cfg: FieldConfig, a: Scalar,
                   cache: FamilyCache) -> Scalar:
    """The prescribed ratio at beta as a single field element."""
    num, den = okounkov_ratio_parts(alpha, beta, cfg, a, cache)
    if den.is_zero():
        raise SpecializationCollision(
            f"base evaluation of index {beta} vanished at a={a}")
    return num / den


# ---------------------------------------------------------------------------
# closed-form scalars and binomial coefficients
# ---------------------------------------------------------------------------

def closed_d(alpha: Sequence[int], cfg: FieldConfig) -> Scalar:
    """Product over diagram cells of the (arm, leg) hook factor."""
    cfg = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    out = cfg.one()
    if cfg.variant == "qt":
        for s in diagram_stats(alpha):
            out = out * (cfg.one() - cfg.gen_power("q", s.arm + 1)
                         * cfg.gen_power("t", s.leg + 1))
    else:
        r = cfg.gen("r")
        for s in diagram_stats(alpha):
            out = out * (cfg.scalar(s.arm + 1) + r * (s.leg + 1))
    return out


def closed_e(alpha: Sequence[int], cfg: FieldConfig) -> Scalar:
    """Product over diagram cells of the (coarm, coleg) cofactor."""
    cfg = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    n = len(alpha)
    out = cfg.one()
    if cfg.variant == "qt":
        tpow = cfg.gen_power("t", 1 - n)
        for s in diagram_stats(alpha):
            out = out * (tpow - cfg.gen_power("q", s.coarm + 1)
                         * cfg.gen_power("t", 1 - s.coleg))
    else:
        r = cfg.gen("r")
        for s in diagram_stats(alpha):
            out = out * (cfg.scalar(s.coarm + 1) + r * (n - s.coleg))
    return out


def closed_phi(alpha: Sequence[int], cfg: FieldConfig, a) -> Scalar:
    """Product over diagram cells of the evaluation factor in a."""
    base = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    if not isinstance(a, Scalar):
        a = Scalar.from_fraction(Fraction(a))
    out = base.one() * Scalar.one(a.gens)
    if base.variant == "qt":
        for s in diagram_stats(alpha):
            out = out * (a * base.gen_power("t", s.coleg)
                         - base.gen_power("q", s.coarm))
    else:
        r = base.gen("r")
        for s in diagram_stats(alpha):
            out = out * (a - s.coarm + r * s.coleg)
    return out


def binom(alpha: Sequence[int], beta: Sequence[int], cfg: FieldConfig,
          cache: FamilyCache, inverted: bool = False) -> Scalar:
    """G_beta at the spectral point of alpha over G_beta at its own
    point; inverted computes the coefficient at reciprocal q, t."""
    cfg = _family_cfg(cfg)
    alpha = _validate_index(alpha)
    beta = _validate_index(beta)
    use = cfg.with_inverted() if inverted else cfg
    key = ("binom", use.cache_token(), alpha, beta)

    def build():
        g = g_recursive(beta, use, cache)
        num = g.evaluate(_point("bar", alpha, use, cache))
        den = g.evaluate(_point("bar", beta, use, cache))
        if den.is_zero():
            raise DivisionByZero(
                f"binomial denominator vanished at index {beta}")
        return num / den

    return cache.memo(key, build)


def binom_sym(lam: Sequence[int], mu: Sequence[int], cfg: FieldConfig,
              cache: FamilyCache) -> Scalar:
    """Symmetric r-variant binomial coefficient on partition indices."""
    cfg = _family_cfg(cfg)
    if cfg.variant != "r":
        raise UsageError("symmetric binomials are r-variant")
    lam = _validate_index(lam, partition=True)
    mu = _validate_index(mu, partition=True)
    key = ("binom-sym", cfg.cache_token(), lam, mu)

    def build():
        rp = r_sym(mu, cfg, cache)
        num = rp.evaluate(_point("bar", lam, cfg, cache))
        den = rp.evaluate(_point("bar", mu, cfg, cache))
        if den.is_zero():
            raise DivisionByZero(
                f"symmetric binomial denominator vanished at index {mu}")
        return num / den

    return cache.memo(key, build)
