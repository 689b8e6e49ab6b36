"""Homogeneous forms, parametrized lines, and restriction to a line.

A HyperForm is a degree-d homogeneous polynomial in x_0..x_n over an exact
field (QQ or F_p with p > d; the bound keeps every factorial up to d
invertible, which the jet computations rely on).  A LineParam is a rank-2
parametrization L(s, t) = s*u + t*p; the marked point is p = L([0:1]).

Restriction to a line produces binary forms in (s, t), stored as plain
coefficient lists indexed by the s-exponent: form[m] is the coefficient
of s^m t^(D-m).
"""

from __future__ import annotations

from math import comb

from .fields import PrimeField


def monomials(n: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of degree d in n+1 variables, lex order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, n + 1)
    return out


# ---------------------------------------------------------------------------
# binary forms in (s, t): list indexed by s-exponent


def linear_power(cs, ct, e: int, field, upto: int | None = None) -> list:
    """Coefficients of (cs*s + ct*t)^e, optionally truncated to s-degree < upto."""
    top = e if upto is None else min(e, upto - 1)
    out = []
    for m in range(top + 1):
        c = field.mul(field.of(comb(e, m)),
                      field.mul(_pow(field, cs, m), _pow(field, ct, e - m)))
        out.append(c)
    return out


def _pow(field, x, e: int):
    acc = field.one
    for _ in range(e):
        acc = field.mul(acc, x)
    return acc


def binary_mul(a: list, b: list, field, upto: int | None = None) -> list:
    n = len(a) + len(b) - 1
    if upto is not None:
        n = min(n, upto)
    out = [field.zero] * n
    for i, ca in enumerate(a):
        if i >= n or field.is_zero(ca):
            continue
        for j, cb in enumerate(b):
            if i + j >= n:
                break
            out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return out


def binary_add(a: list, b: list, field) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return out


def binary_scale(a: list, c, field) -> list:
    return [field.mul(c, v) for v in a]


def binary_is_zero(a: list, field) -> bool:
    return all(field.is_zero(c) for c in a)


def s_valuation(a: list, field) -> int | None:
    """Least s-exponent with nonzero coefficient; None for the zero form."""
    for m, c in enumerate(a):
        if not field.is_zero(c):
            return m
    return None


# ---------------------------------------------------------------------------


class LineParam:
    """A line in P^n given by L(s, t) = s*u + t*p, rows[i] = (u_i, p_i)."""

    __slots__ = ("n", "field", "rows")

    def __init__(self, rows, field):
        rows = [tuple(field.of(c) for c in r) for r in rows]
        if any(len(r) != 2 for r in rows) or len(rows) < 2:
            raise ValueError("line parametrization needs n+1 rows of two entries")
        self.rows = rows
        self.n = len(rows) - 1
        self.field = field
        if not self._has_rank_two():
            raise ValueError("degenerate parametrization: rank < 2")

    @classmethod
    def from_point_direction(cls, p, u, field) -> "LineParam":
        return cls([(ui, pi) for ui, pi in zip(u, p)], field)

    def _has_rank_two(self) -> bool:
        f = self.field
        for i in range(self.n + 1):
            for j in range(i + 1, self.n + 1):
                det = f.sub(f.mul(self.rows[i][0], self.rows[j][1]),
                            f.mul(self.rows[i][1], self.rows[j][0]))
                if not f.is_zero(det):
                    return True
        return False

    def marked_point(self) -> list:
        """L([0:1]) = p."""
        return [r[1] for r in self.rows]

    def direction(self) -> list:
        """L([1:0]) = u."""
        return [r[0] for r in self.rows]

    def point_at(self, s, t) -> list:
        f = self.field
        return [f.add(f.mul(r[0], s), f.mul(r[1], t)) for r in self.rows]

    def is_canonical(self) -> bool:
        """True when L(s,t) = (t, s, 0, ..., 0)."""
        f = self.field
        want = [(f.zero, f.one), (f.one, f.zero)] + [(f.zero, f.zero)] * (self.n - 1)
        return self.rows == want

    def text(self) -> str:
        return "\n".join(f"{r[0]} {r[1]}" for r in self.rows)


class HyperForm:
    """A homogeneous form of degree d in x_0..x_n over an exact field."""

    __slots__ = ("n", "d", "field", "terms")

    def __init__(self, n: int, d: int, terms, field):
        if n < 1 or d < 1:
            raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
        if isinstance(field, PrimeField) and field.p <= d:
            raise ValueError(
                f"field characteristic {field.p} must exceed the degree {d}"
            )
        self.n = n
        self.d = d
        self.field = field
        clean: dict[tuple[int, ...], object] = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n + 1 or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e!r} for n={n}")
            if sum(e) != d:
                raise ValueError(f"non-homogeneous term {e!r}: degree {sum(e)} != {d}")
            c = field.of(c)
            if field.is_zero(c):
                continue
            clean[e] = c
        self.terms = clean

    @classmethod
    def fermat(cls, n: int, d: int, field) -> "HyperForm":
        terms = {}
        for i in range(n + 1):
            e = [0] * (n + 1)
            e[i] = d
            terms[tuple(e)] = field.one
        return cls(n, d, terms, field)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point) -> object:
        f = self.field
        point = [f.of(x) for x in point]
        acc = f.zero
        for e, c in self.terms.items():
            v = c
            for x, ei in zip(point, e):
                for _ in range(ei):
                    v = f.mul(v, x)
            acc = f.add(acc, v)
        return acc

    def partial(self, i: int) -> "HyperForm":
        """d/dx_i, a form of degree d-1 (zero forms kept as empty term dicts)."""
        f = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = f.mul(c, f.of(e[i]))
        if self.d == 1:
            raise ValueError("cannot differentiate a linear form to degree 0 here")
        return HyperForm(self.n, self.d - 1, out, f)

    def gradient(self, point) -> list:
        return [self.partial(i).evaluate(point) for i in range(self.n + 1)]

    def pullback(self, line: LineParam, upto: int | None = None) -> list:
        """Restriction F(L(s,t)) as a binary form; upto truncates the s-degree."""
        if line.n != self.n:
            raise ValueError(f"line in P^{line.n} cannot pull back a form on P^{self.n}")
        f = self.field
        width = self.d + 1 if upto is None else min(self.d + 1, upto)
        acc = [f.zero] * width
        for e, c in self.terms.items():
            part = [c]
            for (cs, ct), ei in zip(line.rows, e):
                if ei == 0:
                    continue
                part = binary_mul(part, linear_power(cs, ct, ei, f, upto), f, upto)
            for m, v in enumerate(part):
                if m < width:
                    acc[m] = f.add(acc[m], v)
        return acc

    def substitute(self, B) -> "HyperForm":
        """Linear change of coordinates x_i = sum_j B[i][j] * y_j."""
        f = self.field
        n1 = self.n + 1
        if len(B) != n1 or any(len(r) != n1 for r in B):
            raise ValueError("substitution matrix has wrong shape")
        B = [[f.of(c) for c in row] for row in B]
        lin = [[(j, c) for j, c in enumerate(row) if not f.is_zero(c)] for row in B]
        zero_mono = (0,) * n1
        pow_cache: dict[tuple[int, int], dict] = {}

        def linpow(i: int, e: int) -> dict:
            if e == 0:
                return {zero_mono: f.one}
            key = (i, e)
            got = pow_cache.get(key)
            if got is not None:
                return got
            prev = linpow(i, e - 1)
            r: dict = {}
            for mono, c in prev.items():
                for j, cj in lin[i]:
                    m2 = list(mono)
                    m2[j] += 1
                    m2 = tuple(m2)
                    v = f.add(r.get(m2, f.zero), f.mul(c, cj))
                    if f.is_zero(v):
                        r.pop(m2, None)
                    else:
                        r[m2] = v
            pow_cache[key] = r
            return r

        out: dict = {}
        for e, c in self.terms.items():
            part = {zero_mono: c}
            for i, ei in enumerate(e):
                if ei == 0:
                    continue
                factor = linpow(i, ei)
                nxt: dict = {}
                for m1, c1 in part.items():
                    for m2, c2 in factor.items():
                        m = tuple(a + b for a, b in zip(m1, m2))
                        v = f.add(nxt.get(m, f.zero), f.mul(c1, c2))
                        if f.is_zero(v):
                            nxt.pop(m, None)
                        else:
                            nxt[m] = v
                part = nxt
            for m, v in part.items():
                w = f.add(out.get(m, f.zero), v)
                if f.is_zero(w):
                    out.pop(m, None)
                else:
                    out[m] = w
        return HyperForm(self.n, self.d, out, f)

    def text(self) -> str:
        lines = []
        for e in sorted(self.terms, reverse=True):
            lines.append(str(self.terms[e]) + " " + " ".join(str(x) for x in e))
        return "\n".join(lines)

    def __eq__(self, other):
        if not isinstance(other, HyperForm):
            return NotImplemented
        return (self.n, self.d, self.terms) == (other.n, other.d, other.terms)

    def __repr__(self):
        return f"HyperForm(n={self.n}, d={self.d}, {len(self.terms)} terms)"


def pullback_of_partial(F: HyperForm, i: int, line: LineParam, upto: int | None = None) -> list:
    """Restriction of dF/dx_i to a line, as a binary form of degree d-1.

    Works for any d >= 1 (a linear form's partial is a constant, which a
    HyperForm cannot carry), so every jet computation routes through here.
    """
    f = F.field
    width = F.d if upto is None else min(F.d, upto)
    acc = [f.zero] * width
    for e, c in F.terms.items():
        if e[i] == 0:
            continue
        part = [f.mul(c, f.of(e[i]))]
        for j, ((cs, ct), ej) in enumerate(zip(line.rows, e)):
            ej = ej - 1 if j == i else ej
            if ej == 0:
                continue
            part = binary_mul(part, linear_power(cs, ct, ej, f, upto), f, upto)
        for m, v in enumerate(part):
            if m < width:
                acc[m] = f.add(acc[m], v)
    return acc


def parse_form(text: str, field) -> HyperForm:
    """Parse the one-term-per-line format "c m0 m1 ... mn"; '#' starts a comment."""
    terms: dict[tuple[int, ...], object] = {}
    n = None
    d = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) < 3:
            raise ValueError(f"line {lineno}: need a coefficient and n+1 exponents")
        c = _parse_scalar(toks[0], field)
        try:
            e = tuple(int(t) for t in toks[1:])
        except ValueError:
            raise ValueError(f"line {lineno}: exponents must be integers") from None
        if n is None:
            n = len(e) - 1
        elif len(e) != n + 1:
            raise ValueError(f"line {lineno}: expected {n + 1} exponents, got {len(e)}")
        if d is None:
            d = sum(e)
        terms[e] = field.add(terms.get(e, field.zero), c)
    if n is None:
        raise ValueError("empty form description")
    return HyperForm(n, d, terms, field)


def parse_line_param(text: str, field) -> LineParam:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"line {lineno}: need exactly two entries 'cs ct'")
        rows.append((_parse_scalar(toks[0], field), _parse_scalar(toks[1], field)))
    return LineParam(rows, field)


def _parse_scalar(tok: str, field):
    if "/" in tok:
        a, b = tok.split("/", 1)
        return field.mul(field.of(int(a)), field.inv(field.of(int(b))))
    return field.of(int(tok))
