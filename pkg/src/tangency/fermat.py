"""The 15 d^3 planes on the Fermat d-fold x_0^d + ... + x_5^d = 0 in P^5.

Split the six coordinates into three disjoint pairs {i, j}; for each pair
pick a d-th root mu of -1 and impose x_j = mu * x_i.  The three conditions
cut out a plane, and substituting kills the paired monomials in conjugate
pairs: x_i^d + x_j^d = (1 + mu^d) x_i^d = 0.  There are 15 pairings and
d^3 root choices.

Roots live in the exact ring Z[z]/(z^d + 1), z a formal primitive 2d-th
root of unity; the d-th roots of -1 are the odd powers z^(2e+1), e in
[0, d).  The ring can have zero divisors (z^d + 1 factors for most d), so
plane distinctness is by canonical defining data, and independence of a
spanning set is certified by exhibiting a 3x3 minor that is a unit
monomial +-z^e rather than by rank over a field.

verify_plane checks membership of an arbitrary plane (three spanning
points) in an arbitrary hypersurface by generic substitution; it works
over the prime fields and rationals too, where independence falls back
to ordinary rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fields import matrix_rank
from .forms import HyperForm


class RootRing:
    """Z[z]/(z^d + 1), elements as integer coefficient tuples of length d."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("ring degree must be >= 1")
        self.d = d
        self.zero = (0,) * d
        self.one = self.monomial(0)

    def of(self, x: int) -> tuple:
        v = [0] * self.d
        v[0] = int(x)
        return tuple(v)

    def monomial(self, e: int, coeff: int = 1) -> tuple:
        # z^e with z^d = -1
        quo, rem = divmod(e, self.d)
        v = [0] * self.d
        v[rem] = coeff * (-1) ** quo
        return tuple(v)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(-x for x in a)

    def sub(self, a: tuple, b: tuple) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a: tuple, b: tuple) -> tuple:
        out = [0] * self.d
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                quo, rem = divmod(i + j, self.d)
                out[rem] += x * y * (-1) ** quo
        return tuple(out)

    def is_zero(self, a: tuple) -> bool:
        return all(x == 0 for x in a)

    def is_unit_monomial(self, a: tuple) -> bool:
        nz = [x for x in a if x]
        return len(nz) == 1 and nz[0] in (1, -1)

    def text(self, a: tuple) -> str:
        parts = []
        for e, c in enumerate(a):
            if not c:
                continue
            base = "1" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if c == 1:
                parts.append(base)
            elif c == -1:
                parts.append(f"-{base}")
            elif e == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def pairings_of_six() -> list[tuple[tuple[int, int], ...]]:
    """The 15 ways to split {0..5} into three unordered pairs."""

    def rec(rest: tuple) -> list:
        if not rest:
            return [()]
        i = rest[0]
        out = []
        for j in rest[1:]:
            sub = tuple(x for x in rest if x not in (i, j))
            for tail in rec(sub):
                out.append(((i, j),) + tail)
        return out

    return rec(tuple(range(6)))


@dataclass(frozen=True)
class FermatPlane:
    """A plane x_j = z^(2e+1) x_i for three disjoint pairs (i, j).

    pairing: three pairs, each sorted, sorted by first entry;
    roots: the exponent e in [0, d) for each pair, in pairing order.
    """

    pairing: tuple[tuple[int, int], ...]
    roots: tuple[int, int, int]
    d: int

    def key(self) -> tuple:
        return (self.pairing, self.roots)

    def spanning_points(self, ring: RootRing) -> list[tuple]:
        pts = []
        for (i, j), e in zip(self.pairing, self.roots):
            row = [ring.zero] * 6
            row[i] = ring.one
            row[j] = ring.monomial(2 * e + 1)
            pts.append(tuple(row))
        return pts

    def to_json(self) -> dict:
        return {
            "pairing": [list(p) for p in self.pairing],
            "rootExponents": list(self.roots),
            "d": self.d,
        }


def _substituted(terms: dict, points: list, ring) -> dict:
    """F(u0*P0 + u1*P1 + u2*P2) as a dict over 3-variable exponents.

    terms maps (n+1)-variable exponent tuples to coefficients understood
    by ring.of when they are plain ints.  Only ring addition and
    multiplication are used, so any exact commutative ring works.
    """
    nvars = len(points[0])
    lin = []
    for i in range(nvars):
        row = {}
        for m, pt in enumerate(points):
            c = pt[i]
            if not ring.is_zero(c):
                exp = tuple(1 if t == m else 0 for t in range(3))
                row[exp] = c
        lin.append(row)

    def mul3(a: dict, b: dict) -> dict:
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ring.mul(ca, cb)
                out[key] = ring.add(out[key], prod) if key in out else prod
        return {e: c for e, c in out.items() if not ring.is_zero(c)}

    total: dict = {}
    for e, c in sorted(terms.items()):
        part = {(0, 0, 0): ring.of(c) if isinstance(c, int) else c}
        for i, ei in enumerate(e):
            for _ in range(ei):
                if not part:
                    break
                part = mul3(part, lin[i])
        for key, val in part.items():
            total[key] = ring.add(total[key], val) if key in total else val
    return {e: c for e, c in total.items() if not ring.is_zero(c)}


def _certify_independent(points: list, ring) -> None:
    if hasattr(ring, "inv"):
        rows = [list(p) for p in points]
        if matrix_rank(rows, len(points[0]), ring) != 3:
            raise ValueError("spanning set is dependent: not a plane")
        return
    # no division: exhibit a 3x3 minor that is a unit monomial
    ncols = len(points[0])
    for cols in combinations(range(ncols), 3):
        a, b, c = cols
        m = [[pt[a], pt[b], pt[c]] for pt in points]
        det = ring.sub(
            ring.add(
                ring.add(
                    ring.mul(m[0][0], ring.mul(m[1][1], m[2][2])),
                    ring.mul(m[0][1], ring.mul(m[1][2], m[2][0])),
                ),
                ring.mul(m[0][2], ring.mul(m[1][0], m[2][1])),
            ),
            ring.add(
                ring.add(
                    ring.mul(m[0][2], ring.mul(m[1][1], m[2][0])),
                    ring.mul(m[0][0], ring.mul(m[1][2], m[2][1])),
                ),
                ring.mul(m[0][1], ring.mul(m[1][0], m[2][2])),
            ),
        )
        if ring.is_unit_monomial(det):
            return
    raise ValueError("cannot certify the spanning set is independent over the ring")


def verify_plane(F: HyperForm, points: list) -> bool:
    """Is the plane spanned by three independent points contained in {F = 0}?

    Raises if the points do not actually span a plane.
    """
    _certify_independent(points, F.field)
    return not _substituted(F.terms, points, F.field)


def _fermat_terms(d: int) -> dict:
    return {tuple(d if t == i else 0 for t in range(6)): 1 for i in range(6)}


def fermat_planes(d: int, verify: bool = True) -> list[FermatPlane]:
    """All 15 d^3 conjugate-pair planes of the degree-d Fermat in P^5.

    With verify on, each plane is checked symbolically in Z[z]/(z^d + 1):
    the substituted form vanishes identically and the spanning points
    carry a unit-monomial minor.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    ring = RootRing(d)
    terms = _fermat_terms(d)
    out = []
    for pairing in pairings_of_six():
        for e1 in range(d):
            for e2 in range(d):
                for e3 in range(d):
                    plane = FermatPlane(pairing=pairing, roots=(e1, e2, e3), d=d)
                    if verify:
                        pts = plane.spanning_points(ring)
                        _certify_independent(pts, ring)
                        if _substituted(terms, pts, ring):
                            raise AssertionError(
                                f"plane {plane.key()} fails containment"
                            )
                    out.append(plane)
    return out
