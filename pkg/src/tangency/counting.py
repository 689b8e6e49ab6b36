"""Exact counts of contact pairs (point, line) over prime fields.

V_k(X) is the locus of pairs (p, l) with p in X and l a line meeting X at
p to order >= k.  Writing F(p + u*v) = sum_m G_m(p, v) u^m with G_m the
divided (factorial-free) directional derivatives, contact >= k means
G_0 = ... = G_{k-1} = 0; q > d keeps that expansion faithful.

The counter enumerates p over X(F_q) and directions v over P(F_q^{n+1}/<p>)
once each: every point gets canonical projective representatives per
affine cell (first nonzero coordinate 1), and directions are taken with
v_j = 0 at p's leading index j, a complement of <p>.  The G_1 condition
is handled structurally (directions run over a parametrized kernel basis
rather than being filtered), higher G_m by vectorized evaluation.

Counts are exact integers; worker parallelism only changes the chunking,
never the sum, because chunk subtotals are combined in order.

A full brute-force route (explicit row-echelon enumeration of all lines)
exists for cross-checking at small q, and doubles as an exhaustive
line-containment oracle.
"""

from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from .fields import PrimeField
from .forms import HyperForm, LineParam, s_valuation


def pp_count(m: int, q: int) -> int:
    """Number of points of P^m(F_q)."""
    if m < 0:
        return 0
    return (q ** (m + 1) - 1) // (q - 1)


def projective_reps(m: int, q: int) -> np.ndarray:
    """Canonical representatives of P^m(F_q): first nonzero coordinate is 1.

    One affine cell per leading index; the union covers every point exactly
    once, which is what makes the pair counts exact.
    """
    blocks = []
    for lead in range(m + 1):
        free = m - lead
        if free:
            tail = np.indices((q,) * free, dtype=np.int64).reshape(free, -1).T
        else:
            tail = np.zeros((1, 0), dtype=np.int64)
        rows = np.zeros((tail.shape[0], m + 1), dtype=np.int64)
        rows[:, lead] = 1
        rows[:, lead + 1:] = tail
        blocks.append(rows)
    return np.concatenate(blocks, axis=0)


def _pow_tables(pts: np.ndarray, maxe: int, q: int) -> list:
    cols = []
    m = pts.shape[0]
    for i in range(pts.shape[1]):
        col = [np.ones(m, dtype=np.int64)]
        for _ in range(maxe):
            col.append((col[-1] * pts[:, i]) % q)
        cols.append(col)
    return cols


def _eval_terms(terms, pows, q: int, m: int) -> np.ndarray:
    acc = np.zeros(m, dtype=np.int64)
    for c, e in terms:
        t = None
        for i, ei in enumerate(e):
            if ei:
                t = pows[i][ei] if t is None else (t * pows[i][ei]) % q
        acc = (acc + c) % q if t is None else (acc + (c % q) * t) % q
    return acc


def _prime_of(F: HyperForm) -> int:
    if not isinstance(F.field, PrimeField):
        raise ValueError("finite-field counting needs a form over a prime field")
    return F.field.p


def hypersurface_points(F: HyperForm) -> np.ndarray:
    """All canonical representatives of X(F_q), X = {F = 0}."""
    q = _prime_of(F)
    reps = projective_reps(F.n, q)
    pows = _pow_tables(reps, F.d, q)
    terms = [(int(c), e) for e, c in sorted(F.terms.items())]
    vals = _eval_terms(terms, pows, q, reps.shape[0])
    return reps[vals == 0]


def rational_singular_points(F: HyperForm) -> list[tuple[int, ...]]:
    """The F_q-rational points of X where the gradient vanishes.

    This is the smoothness pre-check for the closed-form count identities;
    singular points over extensions stay invisible to it.
    """
    q = _prime_of(F)
    pts = hypersurface_points(F)
    pows = _pow_tables(pts, F.d, q)
    bad = np.ones(pts.shape[0], dtype=bool)
    for i in range(F.n + 1):
        dterms = [
            (int(c) * e[i], e[:i] + (e[i] - 1,) + e[i + 1:])
            for e, c in sorted(F.terms.items())
            if e[i]
        ]
        bad &= _eval_terms(dterms, pows, q, pts.shape[0]) == 0
    return [tuple(int(x) for x in row) for row in pts[bad]]


def _sub_exponents(e: tuple, m: int):
    # all alpha <= e with |alpha| = m
    def rec(i, remaining, prefix):
        if i == len(e):
            if remaining == 0:
                yield tuple(prefix)
            return
        for a in range(min(e[i], remaining) + 1):
            yield from rec(i + 1, remaining - a, prefix + [a])

    yield from rec(0, m, [])


def _divided_derivative_terms(terms, m: int):
    """[(alpha, term list of d^alpha F / alpha!)] for |alpha| = m."""
    out: dict[tuple, list] = {}
    for c, e in terms:
        for alpha in _sub_exponents(e, m):
            coef = c
            for ei, ai in zip(e, alpha):
                if ai:
                    coef *= comb(ei, ai)
            rest = tuple(a - b for a, b in zip(e, alpha))
            out.setdefault(alpha, []).append((coef, rest))
    return sorted(out.items())


def _count_chunk(payload) -> int:
    terms, n, d, q, k, pts = payload
    m = pts.shape[0]
    if m == 0:
        return 0
    pows = _pow_tables(pts, d, q)
    grad = np.stack(
        [
            _eval_terms(
                [(c * e[i], e[:i] + (e[i] - 1,) + e[i + 1:]) for c, e in terms if e[i]],
                pows, q, m,
            )
            for i in range(n + 1)
        ],
        axis=1,
    )
    higher = []
    for order in range(2, k):
        data = _divided_derivative_terms(terms, order)
        higher.append([(alpha, _eval_terms(tl, pows, q, m)) for alpha, tl in data])

    reps_tangent = projective_reps(n - 2, q)
    reps_all = None
    count = 0
    for r in range(m):
        p = pts[r]
        lead = int(np.flatnonzero(p)[0])
        others = [i for i in range(n + 1) if i != lead]
        g = grad[r]
        g_rest = g[others]
        if not g_rest.any():
            # singular point: every direction is tangent
            if reps_all is None:
                reps_all = projective_reps(n - 1, q)
            body = reps_all
        else:
            pos = int(np.flatnonzero(g_rest)[0])
            inv = pow(int(g_rest[pos]), q - 2, q)
            basis = np.zeros((n - 1, n), dtype=np.int64)
            rr = 0
            for cpos in range(n):
                if cpos == pos:
                    continue
                basis[rr, cpos] = 1
                basis[rr, pos] = (-(int(g_rest[cpos]) * inv)) % q
                rr += 1
            body = (reps_tangent @ basis) % q
        if k == 2:
            count += body.shape[0]
            continue
        alive = np.zeros((body.shape[0], n + 1), dtype=np.int64)
        alive[:, others] = body
        for data in higher:
            if alive.shape[0] == 0:
                break
            val = np.zeros(alive.shape[0], dtype=np.int64)
            for alpha, hv in data:
                hval = int(hv[r])
                if hval == 0:
                    continue
                t = None
                for i, ai in enumerate(alpha):
                    for _ in range(ai):
                        t = alive[:, i] if t is None else (t * alive[:, i]) % q
                val = (val + hval * t) % q
            alive = alive[val == 0]
        count += alive.shape[0]
    return count


@dataclass
class CountRecord:
    q: int
    k: int
    count: int
    n: int
    d: int
    elapsed_ms: int

    def to_json(self) -> dict:
        return {
            "q": self.q, "k": self.k, "count": self.count,
            "n": self.n, "d": self.d, "elapsedMs": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CountRecord":
        return cls(
            q=int(obj["q"]), k=int(obj["k"]), count=int(obj["count"]),
            n=int(obj["n"]), d=int(obj["d"]), elapsed_ms=int(obj.get("elapsedMs", 0)),
        )


def count_vk(F: HyperForm, k: int, workers: int = 1) -> CountRecord:
    """Exact |V_k(X)(F_q)|: pairs (p, line through p) with contact >= k."""
    q = _prime_of(F)
    if k < 1:
        raise ValueError("contact order k must be >= 1")
    t0 = time.perf_counter()
    pts = hypersurface_points(F)
    if k == 1:
        # every line through a point of X meets it: no direction condition
        count = pts.shape[0] * pp_count(F.n - 1, q)
    else:
        terms = [(int(c), e) for e, c in sorted(F.terms.items())]
        if workers <= 1:
            count = _count_chunk((terms, F.n, F.d, q, k, pts))
        else:
            chunks = np.array_split(pts, workers * 4)
            payloads = [(terms, F.n, F.d, q, k, ch) for ch in chunks]
            with multiprocessing.get_context("fork").Pool(workers) as pool:
                parts = pool.map(_count_chunk, payloads)
            count = sum(parts)
    elapsed = int(round((time.perf_counter() - t0) * 1000))
    return CountRecord(q=q, k=k, count=count, n=F.n, d=F.d, elapsed_ms=elapsed)


def closed_count_k1(F: HyperForm) -> int:
    q = _prime_of(F)
    return hypersurface_points(F).shape[0] * pp_count(F.n - 1, q)


def closed_count_k2_smooth(F: HyperForm) -> int:
    """|X| * |P^(n-2)|; valid when X has no rational singular points."""
    q = _prime_of(F)
    return hypersurface_points(F).shape[0] * pp_count(F.n - 2, q)


# ---------------------------------------------------------------------------
# brute-force route: explicit line enumeration


def _rref_lines(n: int, q: int):
    """Every line of P^n(F_q) exactly once, as a reduced row pair (r1, r2)."""
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            free1 = [c for c in range(i + 1, n + 1) if c != j]
            free2 = [c for c in range(j + 1, n + 1)]
            for vals in product(range(q), repeat=len(free1) + len(free2)):
                r1 = [0] * (n + 1)
                r2 = [0] * (n + 1)
                r1[i] = 1
                r2[j] = 1
                for c, v in zip(free1, vals):
                    r1[c] = v
                for c, v in zip(free2, vals[len(free1):]):
                    r2[c] = v
                yield tuple(r1), tuple(r2)


def line_count(n: int, q: int) -> int:
    return sum(1 for _ in _rref_lines(n, q))


def count_vk_bruteforce(F: HyperForm, k: int) -> int:
    """Same count as count_vk, by walking every line and every marked point.

    Only sensible at very small q; kept as the independent correctness
    route for the chart-based counter.
    """
    q = _prime_of(F)
    if k < 1:
        raise ValueError("contact order k must be >= 1")
    f = F.field
    count = 0
    for r1, r2 in _rref_lines(F.n, q):
        # marked points of the line: canonical P^1 combinations
        marks = [([(r1[i] + lam * r2[i]) % q for i in range(F.n + 1)], r2)
                 for lam in range(q)]
        marks.append((list(r2), r1))
        for p, u in marks:
            line = LineParam.from_point_direction(p, u, f)
            v = s_valuation(F.pullback(line), f)
            if v is None or v >= k:
                count += 1
    return count


def lines_in_hypersurface(F: HyperForm) -> int:
    """Exhaustive count of F_q-lines contained in {F = 0}."""
    q = _prime_of(F)
    f = F.field
    count = 0
    for r1, r2 in _rref_lines(F.n, q):
        line = LineParam.from_point_direction(r1, r2, f)
        if all(f.is_zero(c) for c in F.pullback(line)):
            count += 1
    return count


# ---------------------------------------------------------------------------


@dataclass
class SlopeReport:
    slope: float
    pair_slopes: list[float]
    used: list[tuple[int, int]]
    warnings: list[str]

    def to_json(self) -> dict:
        return {
            "slope": self.slope,
            "pairSlopes": self.pair_slopes,
            "used": [{"q": q, "count": c} for q, c in self.used],
            "warnings": self.warnings,
        }


def dimension_slope(records: list[CountRecord]) -> SlopeReport:
    """Least-squares slope of log(count) against log(q).

    An empirical dimension proxy: a d-dimensional count grows like c*q^d.
    Zero counts are excluded with a warning (the locus may be empty or
    irrational over small fields); at least two positive counts must
    remain.
    """
    if len(records) < 3:
        raise ValueError("need at least 3 count records")
    qs = [r.q for r in records]
    if len(set(qs)) != len(qs):
        raise ValueError("records must have distinct q")
    ks = {r.k for r in records}
    if len(ks) != 1:
        raise ValueError(f"records mix contact orders {sorted(ks)}")
    warnings = []
    used = []
    for r in sorted(records, key=lambda r: r.q):
        if r.count <= 0:
            warnings.append(
                f"excluded q={r.q}: count {r.count} (empty or irrational locus)"
            )
            continue
        used.append((r.q, r.count))
    if len(used) < 2:
        raise ValueError("fewer than two positive counts; slope undefined")
    xs = [math.log(q) for q, _ in used]
    ys = [math.log(c) for _, c in used]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    num = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    den = sum((x - xbar) ** 2 for x in xs)
    slope = num / den
    pair_slopes = [
        (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(used) - 1)
    ]
    return SlopeReport(slope=slope, pair_slopes=pair_slopes, used=used, warnings=warnings)
