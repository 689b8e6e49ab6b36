"""Schubert calculus on the Grassmannian of lines G(1, n) = Gr(2, n+1).

Classes live in the Chow ring with its Schubert basis sigma_{a,b}, indexed
by two-row partitions n-1 >= a >= b >= 0.  Coefficients are DPoly, so the
same machinery yields answers polynomial in a hypersurface degree d.

Products are computed by Pieri's rule for one-row factors and the
determinantal identity sigma_{a,b} = sigma_a*sigma_b - sigma_{a+1}*sigma_{b-1}
for the rest, with sigma_m = 0 once m exceeds the box width n-1.  For
two-row partitions this is a complete multiplication rule.

The degree of a top-codimension class is its coefficient on the point
class sigma_{n-1,n-1}.
"""

from __future__ import annotations

from .dpoly import DPoly

# a partition is a pair (a, b) with a >= b >= 0
Partition = tuple[int, int]

INHOMOGENEOUS = "inhomogeneous"


def check_partition(p) -> Partition:
    if (
        not isinstance(p, tuple)
        or len(p) != 2
        or not all(isinstance(x, int) for x in p)
    ):
        raise ValueError(f"partition must be a pair of ints, got {p!r}")
    a, b = p
    if a < b or b < 0:
        raise ValueError(f"invalid partition {p!r}: need a >= b >= 0")
    return p


def in_box(p: Partition, n: int) -> bool:
    """Whether sigma_p is nonzero on G(1, n): both rows at most n-1."""
    return p[0] <= n - 1


def _check_ambient(n: int):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"ambient projective dimension must be an int >= 2, got {n!r}")


class SchubertElt:
    """A Chow class on G(1, n): a DPoly combination of Schubert classes."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        _check_ambient(n)
        self.n = n
        clean: dict[Partition, DPoly] = {}
        for p, c in (terms or {}).items():
            check_partition(p)
            c = DPoly.coerce(c)
            if c.is_zero() or not in_box(p, n):
                continue
            clean[p] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "SchubertElt":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "SchubertElt":
        return cls(n, {(0, 0): DPoly.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Partition) -> DPoly:
        return self.terms.get(check_partition(p), DPoly.zero())

    def _require_same_ambient(self, other: "SchubertElt"):
        if self.n != other.n:
            raise ValueError(
                f"ambient mismatch: G(1,{self.n}) vs G(1,{other.n}) classes "
                "live in different rings"
            )

    def __add__(self, other: "SchubertElt") -> "SchubertElt":
        self._require_same_ambient(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, DPoly.zero()) + c
        return SchubertElt(self.n, out)

    def __neg__(self) -> "SchubertElt":
        return SchubertElt(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "SchubertElt") -> "SchubertElt":
        return self + (-other)

    def scale(self, c) -> "SchubertElt":
        c = DPoly.coerce(c)
        return SchubertElt(self.n, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, DPoly)):
            return self.scale(other)
        return mult(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, DPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchubertElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def codim(self):
        """Common codimension of all terms, or "inhomogeneous".

        The zero class is homogeneous of every codimension; returns None.
        """
        weights = {a + b for (a, b) in self.terms}
        if not weights:
            return None
        if len(weights) > 1:
            return INHOMOGENEOUS
        return weights.pop()

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            c = self.terms[(a, b)]
            parts.append(f"{_coeff_prefix(c)}s[{a},{b}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"SchubertElt(n={self.n}, {self.text()})"


def _coeff_prefix(c: DPoly) -> str:
    """Coefficient rendering in front of a basis symbol: "", "5*", "(d - 2)*"."""
    if c == DPoly.one():
        return ""
    txt = c.text()
    # parenthesize anything that is not a single positive monomial
    if len([x for x in c.coeffs if x != 0]) > 1 or txt.startswith("-"):
        return f"({txt})*"
    return f"{txt}*"


def sigma(n: int, a: int, b: int = 0, coeff=1) -> SchubertElt:
    """The class coeff * sigma_{a,b} on G(1, n).

    Rejects indices outside the 2 x (n-1) box: the zero class in the
    quotient is constructed honestly via SchubertElt, not by asking for a
    basis class that does not exist.
    """
    check_partition((a, b))
    _check_ambient(n)
    if not in_box((a, b), n):
        raise ValueError(f"sigma[{a},{b}] is outside the box on G(1,{n})")
    return SchubertElt(n, {(a, b): DPoly.coerce(coeff)})


def pieri(p: Partition, m: int, n: int) -> SchubertElt:
    """sigma_p * sigma_m on G(1, n) by Pieri's rule.

    Sums sigma_mu over partitions mu obtained from p by adding a horizontal
    strip of m boxes; terms leaving the width-(n-1) box vanish.
    """
    check_partition(p)
    _check_ambient(n)
    if m < 0:
        raise ValueError(f"one-row index must be >= 0, got {m}")
    if not in_box(p, n) or m > n - 1:
        return SchubertElt.zero(n)
    a, b = p
    total = a + b + m
    out: dict[Partition, DPoly] = {}
    # horizontal strip: b <= mu2 <= a and mu1 >= a, no two added boxes stacked
    for mu2 in range(b, a + 1):
        mu1 = total - mu2
        if mu1 < a or mu1 < mu2 or mu1 > n - 1:
            continue
        out[(mu1, mu2)] = DPoly.one()
    return SchubertElt(n, out)


def _times_onerow(x: SchubertElt, m: int) -> SchubertElt:
    if m == 0:
        return x
    acc = SchubertElt.zero(x.n)
    for p, c in x.terms.items():
        acc = acc + pieri(p, m, x.n).scale(c)
    return acc


def _basis_product(p: Partition, q: Partition, n: int) -> SchubertElt:
    # sigma_p * sigma_q with q = (m1, m2); reduce q via the determinantal
    # identity sigma_{m1,m2} = sigma_{m1} sigma_{m2} - sigma_{m1+1} sigma_{m2-1}
    m1, m2 = q
    if m2 == 0:
        return pieri(p, m1, n)
    unit = SchubertElt(n, {p: DPoly.one()})
    plus = _times_onerow(_times_onerow(unit, m2), m1)
    minus = _times_onerow(_times_onerow(unit, m2 - 1), m1 + 1)
    return plus - minus


def mult(x: SchubertElt, y: SchubertElt) -> SchubertElt:
    """Ring product on G(1, n)."""
    if not isinstance(x, SchubertElt) or not isinstance(y, SchubertElt):
        raise TypeError("mult takes two SchubertElt values")
    x._require_same_ambient(y)
    acc = SchubertElt.zero(x.n)
    for p, cp in x.terms.items():
        for q, cq in y.terms.items():
            acc = acc + _basis_product(p, q, x.n).scale(cp * cq)
    return acc


def degree(x: SchubertElt) -> DPoly:
    """Integral over G(1, n): the coefficient of the point class.

    Defined only for classes of top codimension 2(n-1); the zero class
    integrates to 0.
    """
    if x.is_zero():
        return DPoly.zero()
    w = x.codim()
    if w == INHOMOGENEOUS:
        raise ValueError("degree of an inhomogeneous class is undefined")
    top = 2 * (x.n - 1)
    if w != top:
        raise ValueError(
            f"not top codimension: class has codim {w}, G(1,{x.n}) needs {top}"
        )
    return x.coefficient((x.n - 1, x.n - 1))
