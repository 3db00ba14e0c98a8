"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`, so
there is no overflow and no rounding.  The Smith normal form is used to
realize quotients of lattices such as P/Q; the fraction-free eliminations
give exact ranks for the cohomology oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(map(int, r)) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(col) for col in zip(*self.tolist())] if self.rows
                                   else [[] for _ in range(self.cols)], self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a, b = self.tolist(), other.tolist()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix.from_rows(out, other.cols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        c = self.cols
        return tuple(sum(self.entries[i * c + j] * v[j] for j in range(c)) for i in range(self.rows))


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == diag(d)`` with ``d[i] | d[i+1]`` and U, V unimodular."""
    d: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """Smith normal form with transforms.

    Pivot rule: the entry of smallest nonzero absolute value in the active
    block, ties broken in row-major order.  The transforms are accumulated
    alongside so the result can be checked by multiplication.
    """
    m, n = A.rows, A.cols
    a = A.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row[dst] += k * row[src]
        if k:
            a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col[dst] += k * col[src]
        if k:
            for row in a:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    r = min(m, n)
    for t in range(r):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty |= a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            # row and column cleared; enforce divisibility on the rest
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    d = tuple(a[i][i] for i in range(r))
    return SmithForm(d, IntMatrix.from_rows(U, m), IntMatrix.from_rows(V, n))


def diag_matrix(d: Sequence[int], rows: int, cols: int) -> IntMatrix:
    return IntMatrix.from_rows([[d[i] if i == j and i < len(d) else 0 for j in range(cols)]
                                for i in range(rows)], cols)


def determinant(A: IntMatrix) -> int:
    if A.rows != A.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    return bareiss_determinant(A.tolist())


@dataclass(frozen=True)
class LatticeSubgroup:
    ambient_rank: int
    generators: IntMatrix

    def __post_init__(self):
        if self.generators.cols != self.ambient_rank:
            raise DimensionMismatch(
                f"generators have length {self.generators.cols}, ambient rank is {self.ambient_rank}")

    @classmethod
    def spanned_by(cls, ambient_rank: int, vectors: Iterable[Sequence[int]]) -> "LatticeSubgroup":
        rows = [list(v) for v in vectors]
        return cls(ambient_rank, IntMatrix.from_rows(rows, ambient_rank))

    @property
    def _smith(self) -> SmithForm:
        sf = _SMITH_CACHE.get(self)
        if sf is None:
            sf = _SMITH_CACHE[self] = smith_normal_form(self.generators)
        return sf


_SMITH_CACHE: dict[LatticeSubgroup, SmithForm] = {}


@dataclass(frozen=True)
class QuotientGroup:
    """Z^n modulo a subgroup, as a product of cyclic factors.

    ``invariant_factors[i] == 0`` is a free Z factor.  ``projection`` maps
    ambient coordinates to coset coordinates before reduction.
    """
    invariant_factors: tuple[int, ...]
    projection: IntMatrix

    def coset(self, v: Sequence[int]) -> tuple[int, ...]:
        raw = self.projection.apply(v)
        return tuple(x % f if f else x for x, f in zip(raw, self.invariant_factors))

    @property
    def is_finite(self) -> bool:
        return all(self.invariant_factors)

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    @property
    def nontrivial_factors(self) -> tuple[int, ...]:
        return tuple(f for f in self.invariant_factors if f != 1)

    def elements(self) -> list[tuple[int, ...]]:
        """All canonical coset coordinates (finite quotients only)."""
        if not self.is_finite:
            raise ValueError("quotient is infinite")
        out: list[tuple[int, ...]] = [()]
        for f in self.invariant_factors:
            out = [c + (k,) for c in out for k in range(f)]
        return out


def _padded_factors(sub: LatticeSubgroup) -> tuple[int, ...]:
    d = list(sub._smith.d)
    return tuple(d + [0] * (sub.ambient_rank - len(d)))


def quotient_of(sub: LatticeSubgroup) -> QuotientGroup:
    # rows of G span the subgroup; x -> x V sends it onto (+) d_i Z
    V = sub._smith.V
    return QuotientGroup(_padded_factors(sub), V.transpose())


def lattice_contains(sub: LatticeSubgroup, v: Sequence[int]) -> bool:
    if len(v) != sub.ambient_rank:
        raise DimensionMismatch(f"vector of length {len(v)} in Z^{sub.ambient_rank}")
    coords = sub._smith.V.transpose().apply(v)
    for x, f in zip(coords, _padded_factors(sub)):
        if (f == 0 and x != 0) or (f and x % f):
            return False
    return True


# ---------------------------------------------------------------------------
# ranks over Q

def _integer_rows(A: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in A:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(A: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = _integer_rows(A)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    prev = 1
    rank = 0
    for col in range(n):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            ai = a[i]
            f = ai[col]
            ai_new = [(p * ai[j] - f * a[rank][j]) // prev for j in range(n)]
            a[i] = ai_new
        prev = p
        rank += 1
    return rank


def bareiss_determinant(A: Sequence[Sequence[int]]) -> int:
    a = [list(map(int, r)) for r in A]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_image_dim(A: Sequence[Sequence]) -> int:
    return bareiss_rank(A)


def rational_kernel_dim(A: Sequence[Sequence], cols: int | None = None) -> int:
    if cols is None:
        cols = len(A[0]) if A else 0
    return cols - bareiss_rank(A)


@dataclass
class SparseEchelon:
    """Incremental fraction-free row echelon form over Z.

    Rows are dicts ``column -> int``.  Each stored pivot row keeps its
    content divided out, which keeps entries small on the structured
    systems the oracle produces.
    """
    pivots: dict[int, dict[int, int]] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Mapping[int, Fraction | int]) -> bool:
        """Reduce ``row`` against the pivots; keep it if independent."""
        r = _clear_denominators(row)
        pivots = self.pivots
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                return True
            a, b = p[c], r[c]
            g = gcd(a, b)
            ka, kb = a // g, b // g
            new = {k: ka * v for k, v in r.items()}
            for k, v in p.items():
                x = new.get(k, 0) - kb * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            r = _primitive(new)
        return False


def _clear_denominators(row: Mapping[int, Fraction | int]) -> dict[int, int]:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for k, v in row.items():
        x = int(v * den) if den != 1 or isinstance(v, Fraction) else int(v)
        if x:
            out[k] = x
    return _primitive(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def sparse_rank(rows: Iterable[Mapping[int, Fraction | int]]) -> int:
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(A: Sequence[Sequence], cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel over Q (reduced row echelon, small inputs)."""
    a = [[Fraction(x) for x in row] for row in A]
    n = cols if cols is not None else (len(a[0]) if a else 0)
    pivcols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivcols.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivcols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis
