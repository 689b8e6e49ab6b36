"""Contact order, truncation, and log-tangent sections along a line.

Setting: a degree-d form F, a line L(s,t) = s*u + t*p with marked point p
on X = {F = 0}.  After a linear change of coordinates A (with A*p = e0,
A*u = e1) the line becomes (t, s, 0, ..., 0) and F decomposes as
F' = sum_j y0^(d-j) f_j with f_j of degree j in y1..yn.  The order-k
truncation F_k = sum_{j=1..k} y0^(k-j) f_j carries all order-k contact
information at p; the key congruence is

    dF'/dy_i (a)  ==  a0^(d-k) * dF_k/dy_i (a)   (mod s^k)

along the line tuple a = (t, s, 0, ..., 0).  Sections of the log tangent
sheaf along L, to first order, are tuples b_i = beta_i*s + gamma_i*t with
sum_i b_i * dF_k/dy_i(a) = 0 mod s^k: a linear system over the base field
whose kernel dimension (minus the Euler redundancy) is h0.  For a general
smooth X and a line of exact contact k the expected value is 2n - k + 1.

Two independent routes are kept deliberately: the truncated route
differentiates an explicitly computed F_k, the direct route never forms
F_k and instead pulls back the partials of F itself through the chain
rule.  Tests compare them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .fields import PrimeField, kernel_basis, mat_vec, random_kernel_vector, row_reduce
from .forms import (
    HyperForm,
    LineParam,
    binary_add,
    binary_scale,
    monomials,
    pullback_of_partial,
    s_valuation,
)

CONTAINED = "contained"


def contact_order(F: HyperForm, L: LineParam):
    """s-adic valuation of F along L at the marked point; "contained" if F|_L = 0."""
    if F.n != L.n:
        raise ValueError("form and line live in different projective spaces")
    v = s_valuation(F.pullback(L), F.field)
    return CONTAINED if v is None else v


def _point_pivot(p, field) -> int:
    for i, x in enumerate(p):
        if not field.is_zero(x):
            return i
    raise ValueError("the zero vector is not a projective point")


def point_completion_matrix(p, field):
    """Invertible B with first column p, remaining columns standard vectors."""
    n1 = len(p)
    piv = _point_pivot(p, field)
    B = [[field.zero] * n1 for _ in range(n1)]
    for i in range(n1):
        B[i][0] = field.of(p[i])
    col = 1
    for j in range(n1):
        if j == piv:
            continue
        B[j][col] = field.one
        col += 1
    return B


def line_completion_matrix(L: LineParam):
    """Invertible B with columns (p, u, standard vectors); x = B*y sends the
    canonical line (t, s, 0, ..., 0) to L."""
    f = L.field
    p = L.marked_point()
    u = L.direction()
    n1 = L.n + 1
    r1 = _point_pivot(p, f)
    inv = f.inv(p[r1])
    r2 = None
    for i in range(n1):
        if i == r1:
            continue
        # u reduced against p on row r1
        red = f.sub(u[i], f.mul(f.mul(u[r1], inv), p[i]))
        if not f.is_zero(red):
            r2 = i
            break
    if r2 is None:
        raise ValueError("degenerate parametrization: rank < 2")
    B = [[f.zero] * n1 for _ in range(n1)]
    for i in range(n1):
        B[i][0] = p[i]
        B[i][1] = u[i]
    col = 2
    for j in range(n1):
        if j in (r1, r2):
            continue
        B[j][col] = f.one
        col += 1
    return B


def canonical_line(n: int, field) -> LineParam:
    rows = [(field.zero, field.one), (field.one, field.zero)]
    rows += [(field.zero, field.zero)] * (n - 1)
    return LineParam(rows, field)


def _grouped_truncation(Fp: HyperForm, k: int) -> HyperForm:
    # Fp is F in coordinates where the marked point is e0; homogenize the
    # first k graded pieces of the local equation to degree k
    f = Fp.field
    out: dict[tuple[int, ...], object] = {}
    for e, c in Fp.terms.items():
        j = Fp.d - e[0]
        if j == 0:
            raise ValueError("form does not vanish at the marked point")
        if j > k:
            continue
        out[(k - j,) + e[1:]] = c
    return HyperForm(Fp.n, k, out, f)


@dataclass
class Truncation:
    form: HyperForm       # F_k, degree k, in the new coordinates
    basis: list           # B with x = B*y; column 0 is the marked point
    k: int


def truncate(F: HyperForm, point, k: int) -> Truncation:
    """Order-k truncation of F at a point of {F = 0}."""
    f = F.field
    point = [f.of(x) for x in point]
    if not f.is_zero(F.evaluate(point)):
        raise ValueError("truncation point does not lie on the hypersurface")
    if not 1 <= k <= F.d:
        raise ValueError(f"need 1 <= k <= d = {F.d}, got k = {k}")
    B = point_completion_matrix(point, f)
    return Truncation(_grouped_truncation(F.substitute(B), k), B, k)


def _chain_rule_pullbacks(F: HyperForm, L: LineParam, B, upto=None) -> list[list]:
    # pullbacks along the canonical line of the partials of F' = F(B y):
    # dF'/dy_i = sum_j B[j][i] dF/dx_j evaluated on the original line
    f = F.field
    Q = [pullback_of_partial(F, j, L, upto) for j in range(F.n + 1)]
    width = len(Q[0])
    out = []
    for i in range(F.n + 1):
        acc = [f.zero] * width
        for j in range(F.n + 1):
            if not f.is_zero(B[j][i]):
                acc = binary_add(acc, binary_scale(Q[j], B[j][i], f), f)
        out.append(acc)
    return out


@dataclass
class CongruenceReport:
    k: int
    per_index: list[bool]
    ok: bool
    corrupted: bool


def congruence_check(F: HyperForm, L: LineParam, k: int, corrupt: bool = False) -> CongruenceReport:
    """Verify dF'/dy_i(a) == a0^(d-k) dF_k/dy_i(a) mod s^k for every i.

    The left side comes from the chain rule on F directly; the right side
    differentiates an explicitly truncated F_k.  With corrupt=True the
    truncation is deliberately damaged first, as a fault-injection control:
    the report must then fail.
    """
    f = F.field
    co = contact_order(F, L)
    if co != CONTAINED and co < k:
        raise ValueError(f"line has contact order {co} < k = {k} at the marked point")
    if not 1 <= k <= F.d:
        raise ValueError(f"need 1 <= k <= d = {F.d}, got k = {k}")
    B = line_completion_matrix(L)
    Lc = canonical_line(F.n, f)

    lhs = _chain_rule_pullbacks(F, L, B, upto=k)

    fk = _grouped_truncation(F.substitute(B), k)
    if corrupt:
        bump = (k - 1, 1) + (0,) * (F.n - 1)
        terms = dict(fk.terms)
        terms[bump] = f.add(terms.get(bump, f.zero), f.one)
        fk = HyperForm(fk.n, fk.d, terms, f)
    per = []
    for i in range(F.n + 1):
        # multiplying by a0^(d-k) = t^(d-k) shifts no s-exponents, so the
        # comparison mod s^k is coefficientwise on the first k entries
        rhs = pullback_of_partial(fk, i, Lc, upto=k)
        ok = all(f.is_zero(f.sub(a, b)) for a, b in zip(lhs[i], rhs))
        per.append(ok)
    return CongruenceReport(k, per, all(per), corrupt)


@dataclass
class DeformationSpace:
    n: int
    k: int
    contact: object            # int or "contained"
    raw_dim: int
    h0: int
    expected_h0: int | None
    matches: bool | None
    euler_in_kernel: bool
    truncated: bool
    basis: list = dc_field(repr=False, default_factory=list)


def _sections_matrix(pullbacks: list[list], n_eqs: int, field) -> list[list]:
    # unknown layout: [beta_0, gamma_0, beta_1, gamma_1, ...];
    # b_i = beta_i*s + gamma_i*t against the binary form pullbacks[i]
    n1 = len(pullbacks)
    rows = []
    for m in range(n_eqs):
        row = []
        for i in range(n1):
            w = pullbacks[i]
            row.append(w[m - 1] if 1 <= m <= len(w) else field.zero)   # beta_i
            row.append(w[m] if m < len(w) else field.zero)             # gamma_i
        rows.append(row)
    return rows


def log_sections(F: HyperForm, L: LineParam, k: int, use_truncation: bool = True) -> DeformationSpace:
    """First-order sections of the log tangent sheaf along L, mod s^k.

    Returns the kernel data of the k-equation system on tuples
    (beta_i, gamma_i); h0 discards the Euler redundancy.  For a line
    contained in the hypersurface the system instead demands the full
    identity sum b_i dF'/dy_i(a) = 0 (all s-degrees), and no expected
    h0 is attached.
    """
    f = F.field
    if k < 0:
        raise ValueError("k must be >= 0")
    co = contact_order(F, L)
    B = line_completion_matrix(L)
    Lc = canonical_line(F.n, f)
    expected: int | None = 2 * F.n - k + 1

    if co == CONTAINED:
        pb = _chain_rule_pullbacks(F, L, B)
        rows = _sections_matrix(pb, F.d + 1, f)
        expected = None
        used_truncation = False
    else:
        if co < k:
            raise ValueError(f"line has contact order {co} < k = {k} at the marked point")
        if k == 0:
            rows = []
            used_truncation = False
        elif use_truncation:
            fk = _grouped_truncation(F.substitute(B), k)
            pb = [pullback_of_partial(fk, i, Lc) for i in range(F.n + 1)]
            rows = _sections_matrix(pb, k, f)
            used_truncation = True
        else:
            pb = _chain_rule_pullbacks(F, L, B, upto=k)
            rows = _sections_matrix(pb, k, f)
            used_truncation = False

    ncols = 2 * (F.n + 1)
    kern = kernel_basis(rows, ncols, f) if rows else [
        [f.one if c == i else f.zero for c in range(ncols)] for i in range(ncols)
    ]
    raw_dim = len(kern)

    # Euler tuple in normalized coordinates: b = (t, s, 0, ..., 0)
    euler = [f.zero] * ncols
    euler[1] = f.one   # gamma_0
    euler[2] = f.one   # beta_1
    euler_ok = all(f.is_zero(v) for v in mat_vec(rows, euler, f)) if rows else True

    h0 = raw_dim - 1
    return DeformationSpace(
        n=F.n,
        k=k,
        contact=co,
        raw_dim=raw_dim,
        h0=h0,
        expected_h0=expected,
        matches=(None if expected is None else h0 == expected),
        euler_in_kernel=euler_ok,
        truncated=used_truncation,
        basis=kern,
    )


# ---------------------------------------------------------------------------
# randomized verification experiment


def sample_line(n: int, field, rng: random.Random) -> LineParam:
    while True:
        p = [field.random(rng) for _ in range(n + 1)]
        u = [field.random(rng) for _ in range(n + 1)]
        try:
            return LineParam.from_point_direction(p, u, field)
        except ValueError:
            continue


def sample_contact_form(L: LineParam, d: int, k: int, rng: random.Random,
                        max_tries: int = 400) -> HyperForm:
    """A random degree-d form with contact order exactly k along L at the
    marked point, smooth there.  Conditioning is linear: the first k
    restriction coefficients of each monomial give a k x N system and a
    random kernel vector is a random form with contact >= k."""
    f = L.field
    n = L.n
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= d, got k = {k}, d = {d}")
    monos = monomials(n, d)
    cols = []
    for e in monos:
        g = HyperForm(n, d, {e: f.one}, f)
        cols.append(g.pullback(L, upto=k))
    rows = [[col[m] for col in cols] for m in range(k)]
    p = L.marked_point()
    for _ in range(max_tries):
        c = random_kernel_vector(rows, len(monos), f, rng)
        F = HyperForm(n, d, dict(zip(monos, c)), f)
        if F.is_zero():
            continue
        w = F.pullback(L)
        if s_valuation(w, f) != k:
            continue
        if all(f.is_zero(g) for g in F.gradient(p)):
            continue
        return F
    raise RuntimeError("failed to sample a form of exact contact order")


@dataclass
class TrialRecord:
    index: int
    n: int
    d: int
    k: int
    h0: int
    expected_h0: int
    matched: bool
    euler_ok: bool
    congruence_ok: bool
    routes_agree: bool


@dataclass
class ExperimentSummary:
    trials: int
    seed: int
    prime: int
    matched: int
    euler_failures: int
    congruence_failures: int
    route_disagreements: int
    records: list[TrialRecord]

    @property
    def match_rate(self) -> float:
        return self.matched / self.trials if self.trials else 0.0


def _kernel_space_signature(basis, ncols, field):
    rref, _ = row_reduce(basis, ncols, field)
    return [tuple(r) for r in rref]


def contact_experiment(trials: int = 200, seed: int = 0, prime: int = 101) -> ExperimentSummary:
    """Randomized end-to-end run: sample (line, form) pairs of exact contact k
    and verify Euler membership, the congruence, agreement of the truncated
    and direct section systems, and the h0 = 2n-k+1 expectation."""
    gf = PrimeField(prime)
    master = random.Random(seed)
    trial_seeds = [master.getrandbits(64) for _ in range(trials)]
    records = []
    for idx, ts in enumerate(trial_seeds):
        rng = random.Random(ts)
        n = rng.choice((3, 4, 5))
        d = rng.choice((n, n + 1, n + 2))
        k = rng.choice(tuple(range(1, min(4, d) + 1)))
        L = sample_line(n, gf, rng)
        F = sample_contact_form(L, d, k, rng)

        direct = log_sections(F, L, k, use_truncation=False)
        trunc = log_sections(F, L, k, use_truncation=True)
        ncols = 2 * (n + 1)
        agree = (
            _kernel_space_signature(direct.basis, ncols, gf)
            == _kernel_space_signature(trunc.basis, ncols, gf)
        )
        cc = congruence_check(F, L, k)
        expected = 2 * n - k + 1
        records.append(TrialRecord(
            index=idx, n=n, d=d, k=k,
            h0=trunc.h0,
            expected_h0=expected,
            matched=(trunc.h0 == expected and direct.h0 == expected),
            euler_ok=(direct.euler_in_kernel and trunc.euler_in_kernel),
            congruence_ok=cc.ok,
            routes_agree=agree,
        ))
    return ExperimentSummary(
        trials=trials,
        seed=seed,
        prime=prime,
        matched=sum(r.matched for r in records),
        euler_failures=sum(not r.euler_ok for r in records),
        congruence_failures=sum(not r.congruence_ok for r in records),
        route_disagreements=sum(not r.routes_agree for r in records),
        records=records,
    )
