"""Finite-dimensional Lie algebras and modules over Q, and H^1 by brute force.

H^1(L, V) is computed as derivations modulo inner derivations: the
derivation condition d([x, y]) = x.d(y) - y.d(x) is a linear system in
dim(L) * dim(V) unknowns, solved exactly.

Sparse conventions: a vector is a dict index -> Fraction; a matrix is stored
by columns, ``m[c]`` being the image of basis vector c.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from ..intlinalg import SparseEchelon, nullspace

Vec = dict[int, Fraction]
Mat = dict[int, Vec]      # column index -> image vector


class InconsistentStructure(ValueError):
    pass


def _axpy(acc: dict, a, x: Mapping) -> None:
    """acc += a * x, dropping zeros."""
    for k, v in x.items():
        s = acc.get(k, 0) + a * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def mat_apply(m: Mat, v: Mapping[int, Fraction]) -> Vec:
    out: Vec = {}
    for c, a in v.items():
        col = m.get(c)
        if col:
            _axpy(out, a, col)
    return out


def mat_mul(a: Mat, b: Mat) -> Mat:
    out = {}
    for c, col in b.items():
        img = mat_apply(a, col)
        if img:
            out[c] = img
    return out


def mat_lincomb(terms: Sequence[tuple[Fraction, Mat]]) -> Mat:
    out: Mat = {}
    for coef, m in terms:
        if not coef:
            continue
        for c, col in m.items():
            acc = out.setdefault(c, {})
            _axpy(acc, coef, col)
            if not acc:
                del out[c]
    return out


def mat_commutator(a: Mat, b: Mat) -> Mat:
    return mat_lincomb([(Fraction(1), mat_mul(a, b)), (Fraction(-1), mat_mul(b, a))])


def mat_from_dense(rows: Sequence[Sequence]) -> Mat:
    out: Mat = {}
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v:
                out.setdefault(c, {})[r] = Fraction(v)
    return out


def mat_to_dense(m: Mat, n_rows: int, n_cols: int) -> list[list[Fraction]]:
    out = [[Fraction(0)] * n_cols for _ in range(n_rows)]
    for c, col in m.items():
        for r, v in col.items():
            out[r][c] = v
    return out


@dataclass
class FinDimLie:
    """Structure constants ``brackets[(i, j)]`` for i < j (missing pairs bracket to 0)."""
    dim: int
    brackets: dict[tuple[int, int], Vec]
    labels: list[str] = field(default_factory=list)
    check: bool = True

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"b{i}" for i in range(self.dim)]
        self.brackets = {k: v for k, v in self.brackets.items() if v}
        for (i, j), v in self.brackets.items():
            if not i < j < self.dim or any(not 0 <= k < self.dim for k in v):
                raise InconsistentStructure(f"bad bracket entry {(i, j)}")
        if self.check:
            self.check_jacobi()

    def bracket(self, i: int, j: int) -> Vec:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -v for k, v in self.brackets.get((j, i), {}).items()}

    def bracket_vec(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                if i != j:
                    _axpy(out, a * b, self.bracket(i, j))
        return out

    def check_jacobi(self) -> None:
        for i, j, k in combinations(range(self.dim), 3):
            acc: Vec = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                _axpy(acc, 1, self.bracket_vec(self.bracket(a, b), {c: Fraction(1)}))
            if acc:
                raise InconsistentStructure(f"Jacobi identity fails on {self.labels[i]}, "
                                            f"{self.labels[j]}, {self.labels[k]}")

    def derived_dim(self) -> int:
        ech = SparseEchelon()
        for v in self.brackets.values():
            ech.add(v)
        return ech.rank


@dataclass
class FinModule:
    dim: int
    action: list[Mat]       # one matrix per basis element of the algebra
    algebra: FinDimLie
    check: bool = True

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise InconsistentStructure("one action matrix per basis element is required")
        if self.check:
            self.check_representation()

    def act(self, x: Mapping[int, Fraction]) -> Mat:
        return mat_lincomb([(a, self.action[i]) for i, a in x.items()])

    def check_representation(self) -> None:
        L = self.algebra
        for i, j in combinations(range(L.dim), 2):
            lhs = self.act(L.bracket(i, j))
            rhs = mat_commutator(self.action[i], self.action[j])
            if lhs != rhs:
                raise InconsistentStructure(f"action does not respect [{L.labels[i]}, {L.labels[j]}]")


# ---------------------------------------------------------------------------
# constructions of modules

def trivial_module(L: FinDimLie, dim: int = 1) -> FinModule:
    return FinModule(dim, [{} for _ in range(L.dim)], L)


def one_dim_module(L: FinDimLie, lam: Sequence) -> FinModule:
    """k_lambda: basis element i acts by the scalar lam[i]."""
    return FinModule(1, [{0: {0: Fraction(v)}} if v else {} for v in lam], L)


def dual_module(V: FinModule) -> FinModule:
    acts = []
    for m in V.action:
        t: Mat = {}
        for c, col in m.items():
            for r, v in col.items():
                t.setdefault(r, {})[c] = -v
        acts.append(t)
    return FinModule(V.dim, acts, V.algebra, check=False)


def _kron_left(m: Mat, n2: int) -> Mat:
    """m (x) identity on a space of dimension n2."""
    out = {}
    for c, col in m.items():
        for b in range(n2):
            out[c * n2 + b] = {r * n2 + b: v for r, v in col.items()}
    return out


def tensor_modules(V: FinModule, W: FinModule) -> FinModule:
    """V (x) W over the same algebra, basis index a * dim(W) + b."""
    if V.algebra is not W.algebra:
        raise InconsistentStructure("tensor product needs a common algebra")
    n1, n2 = V.dim, W.dim
    acts = []
    for mv, mw in zip(V.action, W.action):
        out = _kron_left(mv, n2)
        for a in range(n1):
            for c, col in mw.items():
                acc = out.setdefault(a * n2 + c, {})
                _axpy(acc, 1, {a * n2 + r: v for r, v in col.items()})
                if not acc:
                    del out[a * n2 + c]
        acts.append(out)
    return FinModule(n1 * n2, acts, V.algebra, check=False)


def hom_module(V1: FinModule, V2: FinModule) -> FinModule:
    """Hom(V1, V2) with x.M = A2(x) M - M A1(x); basis E_ij (i in V2, j in V1) at index i*dim(V1)+j."""
    if V1.algebra is not V2.algebra:
        raise InconsistentStructure("Hom module needs a common algebra")
    d1, d2 = V1.dim, V2.dim
    acts = []
    for a1, a2 in zip(V1.action, V2.action):
        # transpose of A1 by rows: row j of A1 as {l: A1[j, l]}
        rows1: dict[int, Vec] = defaultdict(dict)
        for l, col in a1.items():
            for j, v in col.items():
                rows1[j][l] = v
        out: Mat = {}
        for i in range(d2):
            col2 = a2.get(i, {})
            for j in range(d1):
                img: Vec = {}
                for k, v in col2.items():
                    img[k * d1 + j] = v
                for l, v in rows1.get(j, {}).items():
                    key = i * d1 + l
                    s = img.get(key, 0) - v
                    if s:
                        img[key] = s
                    else:
                        img.pop(key, None)
                if img:
                    out[i * d1 + j] = img
        acts.append(out)
    return FinModule(d1 * d2, acts, V1.algebra, check=False)


def pullback(V: FinModule, L: FinDimLie, phi: Sequence[Mapping[int, Fraction]], check: bool = True) -> FinModule:
    """V viewed as an L-module through a homomorphism phi: L -> V.algebra (images of basis elements)."""
    return FinModule(V.dim, [V.act(phi[i]) for i in range(L.dim)], L, check=check)


def direct_sum(L1: FinDimLie, L2: FinDimLie) -> FinDimLie:
    n = L1.dim
    br = dict(L1.brackets)
    for (i, j), v in L2.brackets.items():
        br[(i + n, j + n)] = {k + n: c for k, c in v.items()}
    return FinDimLie(n + L2.dim, br, L1.labels + L2.labels, check=False)


def external_tensor(V1: FinModule, V2: FinModule, L: FinDimLie) -> FinModule:
    """V1 (x) V2 as a module for L = V1.algebra (+) V2.algebra."""
    n1 = V1.algebra.dim
    proj1 = [{i: Fraction(1)} if i < n1 else {} for i in range(L.dim)]
    proj2 = [{i - n1: Fraction(1)} if i >= n1 else {} for i in range(L.dim)]
    A = pullback(V1, L, proj1, check=False)
    B = pullback(V2, L, proj2, check=False)
    return tensor_modules(A, B)


# ---------------------------------------------------------------------------
# cohomology

class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        p = self.parent.setdefault(a, a)
        while p != a:
            gp = self.parent.setdefault(p, p)
            self.parent[a] = gp
            a, p = p, gp
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def block_rank(rows: Sequence[Mapping]) -> int:
    """Exact rank of a sparse system, eliminating independent blocks separately."""
    uf = _UnionFind()
    for row in rows:
        keys = iter(row)
        first = next(keys, None)
        if first is None:
            continue
        uf.find(first)
        for k in keys:
            uf.union(first, k)
    groups: dict = defaultdict(list)
    for row in rows:
        if row:
            groups[uf.find(next(iter(row)))].append(row)
    total = 0
    for grp in groups.values():
        ech = SparseEchelon()
        for row in grp:
            ech.add(row)
        total += ech.rank
    return total


def derivation_rows(L: FinDimLie, V: FinModule) -> list[Vec]:
    """Rows of the linear system saying d: L -> V is a derivation; unknown (k, r) at k*dim(V)+r."""
    n = V.dim
    rows = []
    for (i, j) in combinations(range(L.dim), 2):
        eq: dict[int, Vec] = defaultdict(dict)
        for k, c in L.bracket(i, j).items():
            for r in range(n):
                eq[r][k * n + r] = eq[r].get(k * n + r, 0) + c
        # - e_i . d(e_j)
        for c, col in V.action[i].items():
            for r, v in col.items():
                key = j * n + c
                eq[r][key] = eq[r].get(key, 0) - v
        # + e_j . d(e_i)
        for c, col in V.action[j].items():
            for r, v in col.items():
                key = i * n + c
                eq[r][key] = eq[r].get(key, 0) + v
        for row in eq.values():
            clean = {k: v for k, v in row.items() if v}
            if clean:
                rows.append(clean)
    return rows


def inner_derivation_rank(L: FinDimLie, V: FinModule) -> int:
    n = V.dim
    cols = []
    for c in range(n):
        img = {}
        for i in range(L.dim):
            for r, v in V.action[i].get(c, {}).items():
                img[i * n + r] = v
        cols.append(img)
    return block_rank(cols)


def h1_dim(L: FinDimLie, V: FinModule) -> int:
    if V.algebra is not L:
        raise InconsistentStructure("module is over a different algebra")
    z1 = L.dim * V.dim - block_rank(derivation_rows(L, V))
    return z1 - inner_derivation_rank(L, V)


def ext1_dim(L: FinDimLie, V1: FinModule, V2: FinModule) -> int:
    return h1_dim(L, hom_module(V1, V2))


def h1_onedim_via_Klam(L: FinDimLie, lam: Sequence) -> int:
    """dim K/D for K = ker(lam), D = span{lam(l) u - [l, u] : l in L, u in K}."""
    lam = [Fraction(v) for v in lam]
    if len(lam) != L.dim:
        raise InconsistentStructure("functional has the wrong length")
    for v in L.brackets.values():
        if sum(lam[k] * c for k, c in v.items()):
            raise InconsistentStructure("functional does not vanish on the derived algebra")
    kernel = [{i: x for i, x in enumerate(vec) if x} for vec in nullspace([lam], L.dim)]
    gens = []
    for i in range(L.dim):
        for u in kernel:
            w = {k: lam[i] * v for k, v in u.items() if lam[i] * v}
            _axpy(w, -1, L.bracket_vec({i: Fraction(1)}, u))
            if w:
                gens.append(w)
    return len(kernel) - block_rank(gens)
