"""Univariate integer polynomials in the formal degree variable d.

These are the coefficients of the Schubert-basis ring: every class carries
a polynomial in d (the degree of the hypersurface being studied) rather
than a bare integer, so enumerative answers come out as closed forms.
Arithmetic is exact over arbitrary-precision ints.
"""

from __future__ import annotations


class DPoly:
    """Polynomial in d with int coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "DPoly":
        return cls((c,))

    @classmethod
    def zero(cls) -> "DPoly":
        return cls(())

    @classmethod
    def one(cls) -> "DPoly":
        return cls((1,))

    @classmethod
    def var(cls) -> "DPoly":
        """The polynomial d itself."""
        return cls((0, 1))

    @classmethod
    def coerce(cls, x) -> "DPoly":
        if isinstance(x, DPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to DPoly")

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        # degree of the zero polynomial reported as -1
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self.text()}")
        return self.coeffs[0] if self.coeffs else 0

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "DPoly":
        other = DPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "DPoly":
        return DPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "DPoly":
        return self + (-DPoly.coerce(other))

    def __rsub__(self, other) -> "DPoly":
        return DPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "DPoly":
        other = DPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return DPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "DPoly":
        if e < 0:
            raise ValueError("negative power")
        acc = DPoly.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = DPoly((other,))
        if not isinstance(other, DPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _term_strs(self, order: str, star: bool) -> list[tuple[int, str]]:
        # (coefficient, rendered monomial without sign) per nonzero term
        idx = range(len(self.coeffs))
        if order == "desc":
            idx = reversed(idx)
        sep = "*" if star else " "
        out = []
        for e in idx:
            c = self.coeffs[e]
            if c == 0:
                continue
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                dpart = "d" if e == 1 else f"d^{e}"
                body = dpart if a == 1 else f"{a}{sep}{dpart}"
            out.append((c, body))
        return out

    def text(self, order: str = "desc") -> str:
        """Render the polynomial.

        order="desc" gives the canonical form, e.g. 35*d^4 - 150*d^3 + 120*d^2.
        order="asc" gives the ascending space-separated form used for the
        replication goldens, e.g. 120 d^2 - 150 d^3 + 35 d^4.
        """
        if order not in ("asc", "desc"):
            raise ValueError(f"order must be 'asc' or 'desc', got {order!r}")
        if not self.coeffs:
            return "0"
        parts = self._term_strs(order, star=(order == "desc"))
        pieces = []
        for i, (c, body) in enumerate(parts):
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"DPoly({self.text()})"
