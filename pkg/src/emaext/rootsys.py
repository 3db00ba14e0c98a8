"""Root systems of semisimple Lie algebras.

Simple roots follow Bourbaki numbering.  Weights are integer tuples in the
basis of fundamental weights; roots are stored in simple-root coordinates.
The Cartan matrix convention is ``cartan[i][j] = <alpha_i^vee, alpha_j>``,
so the simple root alpha_j in fundamental-weight coordinates is column j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .intlinalg import IntMatrix, LatticeSubgroup

Weight = tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# |Phi^+| per type, used as a consistency check on the closure
_NUM_POSITIVE = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystemSpec:
    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for letter, rank in self.components:
            ok = _RANK_OK.get(letter)
            if ok is None or not ok(rank):
                raise RootSystemError(f"invalid root system component {letter}{rank}")

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        """Parse ``"A2"``, ``"A1xA1"``, ``"B3xG2"``; the empty string is rank 0."""
        text = text.strip()
        if not text:
            return cls(())
        comps = []
        for part in text.split("x"):
            m = re.fullmatch(r"\s*([A-G])\s*(\d+)\s*", part)
            if not m:
                raise RootSystemError(f"cannot parse root system {text!r}")
            comps.append((m.group(1), int(m.group(2))))
        return cls(tuple(comps))

    def __str__(self) -> str:
        return "x".join(f"{t}{n}" for t, n in self.components)


def _simple_cartan(letter: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if letter in "ABCD":
        chain = n - 1 if letter != "D" else n - 2
        for i in range(chain):
            link(i, i + 1)
        if letter == "B":
            link(n - 2, n - 1, -1, -2)   # alpha_n short
        elif letter == "C":
            link(n - 2, n - 1, -2, -1)   # alpha_n long
        elif letter == "D":
            link(n - 3, n - 1)
    elif letter == "E":
        # 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_1, alpha_2 long
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)  # alpha_1 short
    return a


@dataclass(frozen=True)
class CartanData:
    spec: RootSystemSpec
    cartan: IntMatrix
    positive_roots: tuple[tuple[int, ...], ...]
    component_boundaries: tuple[tuple[int, int], ...]
    symmetrizer: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.cartan.rows

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def zero(self) -> Weight:
        return (0,) * self.rank

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        """alpha_j in fundamental-weight coordinates."""
        c = self.cartan
        return tuple(tuple(c[i, j] for i in range(self.rank)) for j in range(self.rank))

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        c, r = self.cartan, self.rank
        return tuple(sum(c[i, j] * root[j] for j in range(r)) for i in range(r))

    @cached_property
    def _inverse_cartan(self) -> list[list[Fraction]]:
        r = self.rank
        a = [[Fraction(self.cartan[i, j]) for j in range(r)] + [Fraction(int(i == k)) for k in range(r)]
             for i in range(r)]
        for c in range(r):
            p = next(i for i in range(c, r) if a[i][c])
            a[c], a[p] = a[p], a[c]
            inv = 1 / a[c][c]
            a[c] = [x * inv for x in a[c]]
            for i in range(r):
                if i != c and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return [row[r:] for row in a]

    def weight_to_root(self, w: Sequence[int]) -> tuple[Fraction, ...]:
        """Simple-root coordinates (rational) of a weight."""
        inv = self._inverse_cartan
        r = self.rank
        return tuple(sum(inv[i][j] * w[j] for j in range(r)) for i in range(r))

    def form_weight_root(self, w: Sequence[int], root: Sequence) -> Fraction:
        """(w, beta) for w in weight coordinates and beta in root coordinates."""
        d = self.symmetrizer
        return sum((Fraction(root[j]) * d[j] * w[j] for j in range(self.rank)), Fraction(0))

    def form_root_root(self, a: Sequence, b: Sequence) -> Fraction:
        d, c, r = self.symmetrizer, self.cartan, self.rank
        return sum((Fraction(a[i]) * d[i] * c[i, j] * b[j] for i in range(r) for j in range(r)),
                   Fraction(0))

    def form_weight_weight(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        return self.form_weight_root(u, self.weight_to_root(v))

    @cached_property
    def highest_roots(self) -> tuple[Weight, ...]:
        """Highest root of every simple component, in weight coordinates."""
        out = []
        for lo, hi in self.component_boundaries:
            best = max((rt for rt in self.positive_roots
                        if all(rt[k] == 0 for k in range(self.rank) if not lo <= k < hi)),
                       key=sum)
            out.append(self.root_to_weight(best))
        return tuple(out)

    def component_of(self, index: int) -> int:
        return next(c for c, (lo, hi) in enumerate(self.component_boundaries) if lo <= index < hi)


_BUILD_CACHE: dict[RootSystemSpec, CartanData] = {}


def build(spec: RootSystemSpec | str) -> CartanData:
    if isinstance(spec, str):
        spec = RootSystemSpec.parse(spec)
    cd = _BUILD_CACHE.get(spec)
    if cd is None:
        cd = _BUILD_CACHE[spec] = _build(spec)
    return cd


def _build(spec: RootSystemSpec) -> CartanData:
    r = spec.rank
    a = [[0] * r for _ in range(r)]
    bounds = []
    off = 0
    for letter, n in spec.components:
        block = _simple_cartan(letter, n)
        for i in range(n):
            for j in range(n):
                a[off + i][off + j] = block[i][j]
        bounds.append((off, off + n))
        off += n
    cartan = IntMatrix.from_rows(a, r)
    sym = _symmetrizer(a, bounds)
    roots = _positive_roots(a)
    for (letter, n), (lo, hi) in zip(spec.components, bounds):
        count = sum(1 for rt in roots if all(rt[k] == 0 for k in range(r) if not lo <= k < hi))
        if count != _NUM_POSITIVE[letter](n):
            raise AssertionError(f"root closure for {letter}{n} gave {count} positive roots")
    return CartanData(spec, cartan, tuple(roots), tuple(bounds), sym)


def _symmetrizer(a: list[list[int]], bounds) -> tuple[int, ...]:
    # d_i a_ij = d_j a_ji, with the short roots of each component at d = 1
    r = len(a)
    d: list[Fraction | None] = [None] * r
    for lo, hi in bounds:
        d[lo] = Fraction(1)
        stack = [lo]
        while stack:
            i = stack.pop()
            for j in range(lo, hi):
                if a[i][j] and j != i and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
        m = min(d[lo:hi])
        for k in range(lo, hi):
            d[k] = d[k] / m
    return tuple(int(x) for x in d)


def _positive_roots(a: list[list[int]]) -> list[tuple[int, ...]]:
    r = len(a)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # root string through beta in direction alpha_i: p - q = <beta, alpha_i^vee>
                pairing = sum(a[i][j] * beta[j] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
                        ordered.append(up)
        layer = nxt
    return ordered


def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


def reflect(cd: CartanData, w: Sequence[int], i: int) -> Weight:
    alpha = cd.simple_roots[i]
    k = w[i]
    return tuple(x - k * y for x, y in zip(w, alpha))


def dominant_reduce(cd: CartanData, w: Sequence[int]) -> tuple[Weight, int, bool]:
    """Walk ``w`` into the dominant chamber by simple reflections.

    Reflects at the lowest-index negative coordinate each step.  Returns the
    dominant conjugate, the parity ``(-1)^steps`` and whether the conjugate
    lies on a wall (has a zero coordinate), i.e. is fixed by some reflection.
    """
    w = tuple(w)
    if len(w) != cd.rank:
        raise RootSystemError(f"weight of length {len(w)} for rank {cd.rank}")
    sign = 1
    while True:
        i = next((k for k, x in enumerate(w) if x < 0), None)
        if i is None:
            break
        w = reflect(cd, w, i)
        sign = -sign
    return w, sign, any(x == 0 for x in w)


def longest_element_image(cd: CartanData, w: Sequence[int]) -> Weight:
    """Antidominant conjugate of w; this is w_0(w) when w is dominant."""
    w = tuple(w)
    while True:
        i = next((k for k, x in enumerate(w) if x > 0), None)
        if i is None:
            return w
        w = reflect(cd, w, i)


def dual_weight(cd: CartanData, lam: Sequence[int]) -> Weight:
    """Highest weight of V(lam)^*, that is -w_0(lam)."""
    if not is_dominant(lam):
        raise RootSystemError(f"{tuple(lam)} is not dominant")
    return tuple(-x for x in longest_element_image(cd, lam))


def root_lattice(cd: CartanData) -> LatticeSubgroup:
    return LatticeSubgroup.spanned_by(cd.rank, cd.simple_roots)


def span_of_weights(cd: CartanData, weights) -> LatticeSubgroup:
    return LatticeSubgroup.spanned_by(cd.rank, [tuple(w) for w in weights])


def weyl_orbit(cd: CartanData, w: Sequence[int]) -> set[Weight]:
    """Orbit of w under the Weyl group, by walking simple reflections."""
    start = tuple(w)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for i in range(cd.rank):
            if v[i]:
                u = reflect(cd, v, i)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return seen
