"""Exact coefficient fields and the small linear algebra the lab needs.

Two fields: the rationals (Fraction) and prime fields F_p (ints in [0, p)).
The elimination routines are generic over either; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """Exact rational arithmetic via Fraction."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def random(self, rng):
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p with elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def of(self, x) -> int:
        if isinstance(x, Fraction):
            return self.of(x.numerator) * self.inv(self.of(x.denominator)) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def random(self, rng):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def row_reduce(rows, ncols: int, field):
    """Reduced row echelon form.  Returns (rref rows, pivot column list).

    Input rows are not modified; zero rows are dropped from the output.
    """
    mat = [list(r) for r in rows]
    for r in mat:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = None
        for r in range(rank, len(mat)):
            if not field.is_zero(mat[r][col]):
                sel = r
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        iv = field.inv(mat[rank][col])
        mat[rank] = [field.mul(iv, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not field.is_zero(mat[r][col]):
                f = mat[r][col]
                mat[r] = [field.sub(a, field.mul(f, b)) for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def matrix_rank(rows, ncols: int, field) -> int:
    return len(row_reduce(rows, ncols, field)[0])


def kernel_basis(rows, ncols: int, field):
    """Basis of the right kernel {v : rows @ v = 0}, one vector per free column."""
    rref, pivots = row_reduce(rows, ncols, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(rref[r][free])
        basis.append(v)
    return basis


def random_kernel_vector(rows, ncols: int, field, rng):
    """A random vector in the right kernel: random values on the free columns."""
    rref, pivots = row_reduce(rows, ncols, field)
    pivot_set = set(pivots)
    v = [field.zero] * ncols
    for free in range(ncols):
        if free not in pivot_set:
            v[free] = field.random(rng)
    for r, pc in enumerate(pivots):
        acc = field.zero
        for free in range(ncols):
            if free not in pivot_set and not field.is_zero(rref[r][free]):
                acc = field.add(acc, field.mul(rref[r][free], v[free]))
        v[pc] = field.neg(acc)
    return v


def invert_matrix(rows, field):
    """Inverse of a square matrix; raises on singular input."""
    m = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(m)]
           for i, r in enumerate(rows)]
    rref, pivots = row_reduce(aug, 2 * m, field)
    if pivots[:m] != list(range(m)) or len(rref) != m:
        raise ValueError("matrix is singular")
    return [r[m:] for r in rref]


def mat_vec(rows, v, field):
    out = []
    for r in rows:
        acc = field.zero
        for a, b in zip(r, v):
            if not (field.is_zero(a) or field.is_zero(b)):
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out
