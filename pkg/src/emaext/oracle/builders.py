"""Explicit finite-dimensional Lie algebras and modules for the oracle.

Simple algebras are realized as matrix algebras (sl2, sl3) in a basis of
weight vectors; irreducible modules are cut out of symmetric powers as the
submodule generated by a highest weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Optional, Sequence

from ..chars import IrrepLabel, dim as weyl_dim
from ..rootsys import build
from .lie import (FinDimLie, FinModule, Mat, Vec, _axpy, direct_sum, dual_module, external_tensor,
                  mat_apply, mat_from_dense, one_dim_module, pullback, tensor_modules)

MAX_MODULE_DIM = 64


class LabelTooLarge(ValueError):
    pass


# ---------------------------------------------------------------------------
# matrix Lie algebras

Dense = list[list[Fraction]]


def _mm(a: Dense, b: Dense) -> Dense:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def _comm(a: Dense, b: Dense) -> Dense:
    p, q = _mm(a, b), _mm(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(p, q)]


def _unit(n: int, i: int, j: int) -> Dense:
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(1)
    return m


def _lin(n: int, terms) -> Dense:
    m = [[Fraction(0)] * n for _ in range(n)]
    for c, e in terms:
        for i in range(n):
            for j in range(n):
                m[i][j] += c * e[i][j]
    return m


class _Coordinates:
    """Coordinates of matrices in a linearly independent family of matrices."""

    def __init__(self, basis: Sequence[Dense]):
        self.flat = [[x for row in b for x in row] for b in basis]
        n = len(self.flat[0])
        # row reduce the transpose to find pivot entries and an inverse on them
        rows = [list(v) + [Fraction(int(i == k)) for k in range(len(basis))]
                for i, v in enumerate(self.flat)]
        self.pivots = []
        r = 0
        for c in range(n):
            p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            self.pivots.append(c)
            r += 1
        if r != len(basis):
            raise ValueError("matrices are linearly dependent")
        # rows[k] = sum_i T[k][i] * flat[i] has 1 at pivot k and 0 at the other pivots
        self.T = [row[n:] for row in rows]

    def __call__(self, m: Dense) -> Vec:
        flat = [x for row in m for x in row]
        coords = [Fraction(0)] * len(self.flat)
        for k, c in enumerate(self.pivots):
            if flat[c]:
                for i, t in enumerate(self.T[k]):
                    coords[i] += flat[c] * t
        back = [sum((coords[i] * self.flat[i][p] for i in range(len(coords))), Fraction(0))
                for p in range(len(flat))]
        if back != flat:
            raise ValueError("matrix outside the span")
        return {i: c for i, c in enumerate(coords) if c}


@dataclass
class MatrixAlgebra:
    """A Lie algebra of n x n matrices with its defining module."""
    algebra: FinDimLie
    matrices: list[Dense]
    coords: _Coordinates

    @property
    def n(self) -> int:
        return len(self.matrices[0])

    def defining_module(self) -> FinModule:
        return FinModule(self.n, [mat_from_dense(m) for m in self.matrices], self.algebra)


def matrix_algebra(matrices: Sequence[Dense], labels: Sequence[str]) -> MatrixAlgebra:
    coords = _Coordinates(matrices)
    br = {}
    for i, j in combinations(range(len(matrices)), 2):
        v = coords(_comm(matrices[i], matrices[j]))
        if v:
            br[(i, j)] = v
    return MatrixAlgebra(FinDimLie(len(matrices), br, list(labels)), list(matrices), coords)


def sl_matrices(n: int) -> tuple[list[Dense], list[str]]:
    """Basis h_1..h_{n-1}, then e_ij (i < j), then e_ji; all weight vectors."""
    mats, labels = [], []
    for i in range(n - 1):
        mats.append(_lin(n, [(1, _unit(n, i, i)), (-1, _unit(n, i + 1, i + 1))]))
        labels.append(f"h{i + 1}")
    for i, j in combinations(range(n), 2):
        mats.append(_unit(n, i, j))
        labels.append(f"e{i + 1}{j + 1}")
    for i, j in combinations(range(n), 2):
        mats.append(_unit(n, j, i))
        labels.append(f"e{j + 1}{i + 1}")
    return mats, labels


_SIMPLE_CACHE: dict[str, MatrixAlgebra] = {}


def builtin_matrix_algebra(name: str) -> MatrixAlgebra:
    if name not in _SIMPLE_CACHE:
        if name == "A1":
            _SIMPLE_CACHE[name] = matrix_algebra(*sl_matrices(2))
        elif name == "A2":
            _SIMPLE_CACHE[name] = matrix_algebra(*sl_matrices(3))
        else:
            raise ValueError(f"no built-in matrix realization of {name}")
    return _SIMPLE_CACHE[name]


def builtin_simple(name: str) -> FinDimLie:
    return builtin_matrix_algebra(name).algebra


# ---------------------------------------------------------------------------
# irreducible modules

def _sym_power(defining: FinModule, a: int) -> tuple[FinModule, list[tuple[int, ...]]]:
    """Sym^a of a module, basis = exponent vectors (monomials)."""
    n = defining.dim
    monos = [m for m in product(range(a + 1), repeat=n) if sum(m) == a]
    index = {m: k for k, m in enumerate(monos)}
    acts = []
    for X in defining.action:
        out: Mat = {}
        for k, m in enumerate(monos):
            img: Vec = {}
            # X acts as a derivation: x_c -> sum_r X[r, c] x_r
            for c in range(n):
                if not m[c]:
                    continue
                for r, v in X.get(c, {}).items():
                    mm = list(m)
                    mm[c] -= 1
                    mm[r] += 1
                    key = index[tuple(mm)]
                    s = img.get(key, 0) + m[c] * v
                    if s:
                        img[key] = s
                    else:
                        img.pop(key, None)
            if img:
                out[k] = img
        acts.append(out)
    return FinModule(len(monos), acts, defining.algebra, check=False), monos


def cyclic_submodule(V: FinModule, v: Vec) -> FinModule:
    """The submodule generated by v, in a reduced echelon basis."""
    basis: list[Vec] = []       # reduced: each has a pivot, absent from the others
    pivots: list[int] = []

    def reduce(w: Vec) -> Vec:
        w = dict(w)
        for b, p in zip(basis, pivots):
            c = w.get(p)
            if c:
                _axpy(w, -c, b)
        return w

    def insert(w: Vec) -> bool:
        w = reduce(w)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        w = {k: x * inv for k, x in w.items()}
        for b in basis:
            c = b.get(p)
            if c:
                _axpy(b, -c, w)
        basis.append(w)
        pivots.append(p)
        return True

    insert(v)
    k = 0
    while k < len(basis):
        current = dict(basis[k])
        for X in V.action:
            insert(mat_apply(X, current))
        k += 1
    # coordinates in the reduced basis are the pivot entries
    acts = []
    for X in V.action:
        out: Mat = {}
        for k, b in enumerate(basis):
            img = mat_apply(X, b)
            coords = {i: img[p] for i, p in enumerate(pivots) if img.get(p)}
            if coords:
                out[k] = coords
        acts.append(out)
    return FinModule(len(basis), acts, V.algebra)


_IRREP_CACHE: dict[tuple, FinModule] = {}


def evaluation_module(name: str, label: IrrepLabel) -> FinModule:
    """Irreducible module of the built-in algebra ``name`` with the given highest weight."""
    lam = label.highest_weight
    key = (name, lam)
    if key in _IRREP_CACHE:
        return _IRREP_CACHE[key]
    cd = build(name)
    d = weyl_dim(cd, lam)
    if d > MAX_MODULE_DIM:
        raise LabelTooLarge(f"V{lam} has dimension {d} > {MAX_MODULE_DIM}")
    ma = builtin_matrix_algebra(name)
    std = ma.defining_module()
    if name == "A1":
        M, monos = _sym_power(std, lam[0])
        hw = {monos.index((lam[0], 0)): Fraction(1)}
    else:
        a, b = lam
        S1, m1 = _sym_power(std, a)
        S2, m2 = _sym_power(dual_module(std), b)
        M = tensor_modules(S1, S2)
        hw = {m1.index((a, 0, 0)) * S2.dim + m2.index((0, 0, b)): Fraction(1)}
    V = cyclic_submodule(M, hw)
    if V.dim != d:
        raise AssertionError(f"built module of dimension {V.dim}, expected {d}")
    _IRREP_CACHE[key] = V
    return V


# ---------------------------------------------------------------------------
# reductive algebras with known irreducibles

@dataclass
class ReductiveModel:
    """g = (product of built-in simple algebras) + abelian, with an irrep constructor.

    Basis: simple factors in order, then ``ab_rank`` central elements.  Labels
    are concatenated highest weights plus the charges of the central basis.
    """
    factors: tuple[str, ...]
    ab_rank: int = 0

    def __post_init__(self):
        L = None
        for f in self.factors:
            L = builtin_simple(f) if L is None else direct_sum(L, builtin_simple(f))
        ab = FinDimLie(self.ab_rank, {}, [f"z{i}" for i in range(self.ab_rank)])
        if L is None:
            L = ab
        elif self.ab_rank:
            L = direct_sum(L, ab)
        self.algebra = L

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def irrep(self, label: IrrepLabel) -> FinModule:
        L = self.algebra
        w = label.highest_weight
        mod: Optional[FinModule] = None
        offset = 0
        for f in self.factors:
            r = build(f).rank
            V = evaluation_module(f, IrrepLabel(w[offset:offset + r]))
            offset += r
            if mod is None:
                mod = V
            else:
                mod = external_tensor(mod, V, direct_sum(mod.algebra, V.algebra))
        n_ss = L.dim - self.ab_rank
        scalars = [Fraction(0)] * n_ss + list(label.charges)
        ab = one_dim_module(L, scalars)
        if mod is None:
            return ab
        phi = [{i: Fraction(1)} if i < n_ss else {} for i in range(L.dim)]
        return tensor_modules(pullback(mod, L, phi, check=False), ab)


# ---------------------------------------------------------------------------
# current algebras


def build_jet_algebra(g: FinDimLie, d: int) -> FinDimLie:
    """g (x) k[t_1..t_d]/(t)^2; basis x (x) 1 then x (x) t_k, block k."""
    n = g.dim
    br = {}
    for (i, j), v in g.brackets.items():
        br[(i, j)] = dict(v)
        for k in range(1, d + 1):
            # [x (x) 1, y (x) t] = [x, y] (x) t, in both orders
            br[(i, j + k * n)] = {a + k * n: c for a, c in v.items()}
            br[(j, i + k * n)] = {a + k * n: -c for a, c in v.items()}
    labels = list(g.labels) + [f"{s}*t{k}" for k in range(1, d + 1) for s in g.labels]
    return FinDimLie(n * (d + 1), br, labels)


def build_truncated_current(g: FinDimLie, N: int) -> FinDimLie:
    """g (x) k[t]/(t^N); basis x (x) t^i at index i*dim(g) + x."""
    if N < 1:
        raise ValueError("N must be >= 1")
    n = g.dim
    br = {}
    for a in range(N):
        for b in range(N):
            if a + b >= N:
                continue
            for (i, j), v in g.brackets.items():
                img = {k + (a + b) * n: c for k, c in v.items()}
                p, q = i + a * n, j + b * n
                if p < q:
                    br[(p, q)] = img
                else:
                    br[(q, p)] = {k: -c for k, c in img.items()}
    labels = [f"{s}*t^{a}" for a in range(N) for s in g.labels]
    return FinDimLie(n * N, br, labels)


def evaluation_at_zero(L_dim: int, g_dim: int) -> list[Vec]:
    """Evaluation t -> 0 for current algebras laid out with the constant block first."""
    return [{i: Fraction(1)} if i < g_dim else {} for i in range(L_dim)]


# ---------------------------------------------------------------------------
# exchange involution on s + s at a fixed point

def build_exchange_quotient(s: FinDimLie, fixed: bool, tangent_dim: int,
                            even_tangent: int = 0) -> tuple[FinDimLie, list[Vec]]:
    """Local model of the exchange-twisted algebra at one point, and evaluation to g^x.

    Free point: (s + s) (x) k[t]/(t)^2 with ``tangent_dim`` variables;
    g^x = s + s.  Fixed point: the tangent space splits into invariant
    (``even_tangent``) and anti-invariant directions; the algebra is
    g0 (x) (k + T+) + g1 (x) T- with g0 = {(u, u)}, g1 = {(u, -u)}; g^x = s.
    """
    n = s.dim
    if not fixed:
        ss = direct_sum(s, s)
        L = build_jet_algebra(ss, tangent_dim)
        return L, evaluation_at_zero(L.dim, ss.dim)
    if not 0 <= even_tangent <= tangent_dim:
        raise ValueError("even_tangent must lie in [0, tangent_dim]")
    ss = direct_sum(s, s)
    # blocks: 0 = g0 (x) 1, then one block per tangent direction
    parity = [0] + [0] * even_tangent + [1] * (tangent_dim - even_tangent)

    def embed(block: int, i: int) -> Vec:
        sign = -1 if parity[block] else 1
        return {i: Fraction(1), i + n: Fraction(sign)}

    def coords(block: int, v: Vec) -> tuple[int, Vec]:
        # v in s + s lying in g0 or g1; read the first copy
        return block, {k + block * n: c for k, c in v.items() if k < n}

    br = {}
    nb = len(parity)
    for b1 in range(nb):
        for b2 in range(nb):
            if b1 and b2:
                continue  # product of two tangent directions vanishes
            target = b1 + b2
            for i in range(n):
                for j in range(n):
                    p, q = i + b1 * n, j + b2 * n
                    if p >= q:
                        continue
                    v = ss.bracket_vec(embed(b1, i), embed(b2, j))
                    # sanity: the result must lie in the eigenspace of the target block
                    sign = -1 if parity[target] else 1
                    if any(v.get(k + n, 0) != sign * v.get(k, 0) for k in range(n)):
                        raise AssertionError("bracket left the eigenspace")
                    _, img = coords(target, v)
                    if img:
                        br[(p, q)] = img
    labels = [f"{lab}@{b}" for b in range(nb) for lab in s.labels]
    L = FinDimLie(n * nb, br, labels)
    return L, evaluation_at_zero(L.dim, n)


# ---------------------------------------------------------------------------
# polynomials in one variable z over Q, coefficient lists low degree first

Poly = list[Fraction]


def poly_trim(p: Poly) -> Poly:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p, q = poly_trim(p), poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    r = list(p)
    while len(r) >= len(q):
        c = r[-1] / q[-1]
        shift = len(r) - len(q)
        quot[shift] = c
        for i, b in enumerate(q):
            r[i + shift] -= c * b
        r = poly_trim(r)
    return poly_trim(quot), r


def poly_mod(p: Poly, q: Poly) -> Poly:
    return poly_divmod(p, q)[1]


def poly_gcd(p: Poly, q: Poly) -> Poly:
    p, q = poly_trim(p), poly_trim(q)
    while q:
        p, q = q, poly_mod(p, q)
    return [c / p[-1] for c in p]


def poly_eval(p: Poly, a: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * a + c
    return out


def poly_from_roots(roots: Sequence[Fraction]) -> Poly:
    out = [Fraction(1)]
    for a in roots:
        out = poly_mul(out, [-Fraction(a), Fraction(1)])
    return out


# ---------------------------------------------------------------------------
# generalized Onsager algebras

@dataclass
class SymmetricPair:
    """A simple g with an involution, given by an eigenbasis.

    The basis of g is ordered: g0,rss (``n_rss``), g0,ab (``n_ab``), g1.
    ``g0_model`` realizes g0 = g0,rss + g0,ab with the same ordering of the
    first ``n_rss + n_ab`` basis elements, so g0-labels give g0-modules.
    """
    g: FinDimLie
    n_rss: int
    n_ab: int
    g_model: ReductiveModel
    g0_model: ReductiveModel
    # g0 basis -> g0_model basis (identity if None)
    g0_embed: Optional[list[Vec]] = None
    # g basis -> g_model basis (identity if None)
    g_embed: Optional[list[Vec]] = None

    @property
    def n0(self) -> int:
        return self.n_rss + self.n_ab

    @property
    def n1(self) -> int:
        return self.g.dim - self.n0


def _sl2_chevalley_pair() -> SymmetricPair:
    # involution Ad(diag(1,-1)); basis h/2 (so g1 has charges +-1), e, f
    half = Fraction(1, 2)
    mats = [[[half, 0], [0, -half]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]
    mats = [[[Fraction(x) for x in row] for row in m] for m in mats]
    ma = matrix_algebra(mats, ["h/2", "e", "f"])
    sl2 = builtin_matrix_algebra("A1")
    g_embed = [sl2.coords(m) for m in mats]
    return SymmetricPair(ma.algebra, 0, 1, ReductiveModel(("A1",)), ReductiveModel((), 1),
                         None, g_embed)


def _sl3_so3_pair() -> SymmetricPair:
    """sl3 with X -> -J X^T J (J antidiagonal): g0 = split so3, g1 = V(4)."""
    z = Fraction(0)
    one = Fraction(1)
    H = [[one, z, z], [z, z, z], [z, z, -one]]
    E = _lin(3, [(1, _unit(3, 0, 1)), (-1, _unit(3, 1, 2))])
    F = _lin(3, [(1, _unit(3, 1, 0)), (-1, _unit(3, 2, 1))])
    # g1: the symmetric part X = J X^T J, traceless
    g1 = [
        _lin(3, [(1, _unit(3, 0, 0)), (-2, _unit(3, 1, 1)), (1, _unit(3, 2, 2))]),
        _lin(3, [(1, _unit(3, 0, 1)), (1, _unit(3, 1, 2))]),
        _lin(3, [(1, _unit(3, 1, 0)), (1, _unit(3, 2, 1))]),
        _unit(3, 0, 2),
        _unit(3, 2, 0),
    ]
    # g0 basis chosen as the sl2 Chevalley triple h = 2H, e = E, f = 2F
    g0 = [_lin(3, [(2, H)]), E, _lin(3, [(2, F)])]
    ma = matrix_algebra(g0 + g1, ["h", "e", "f", "p0", "p+1", "p-1", "p+2", "p-2"])
    sl3 = builtin_matrix_algebra("A2")
    g_embed = [sl3.coords(m) for m in g0 + g1]
    # (h, e, f) is a Chevalley triple, so it matches the built-in sl2 basis (h, e12, e21)
    return SymmetricPair(ma.algebra, 3, 0, ReductiveModel(("A2",)), ReductiveModel(("A1",)),
                         None, g_embed)


BUILTIN_SYMMETRIC_PAIRS: dict[str, Callable[[], SymmetricPair]] = {
    "sl2-chevalley": _sl2_chevalley_pair,
    "sl3-so3": _sl3_so3_pair,
}


@dataclass
class OnsagerPoint:
    t: Fraction            # t = +-1 for fixed points

    @property
    def fixed(self) -> bool:
        return self.t in (1, -1)

    @property
    def a(self) -> Fraction:
        return self.t + 1 / self.t

    @property
    def y(self) -> Fraction:
        return self.t - 1 / self.t


@dataclass
class OnsagerQuotient:
    algebra: FinDimLie
    # per point: images of the basis in g^x (g at free points, g0 at fixed points),
    # in the pair's own bases (g basis resp. first n0 elements of it)
    evaluations: list[list[Vec]]
    pair: SymmetricPair
    points: list[OnsagerPoint]


def build_onsager_quotient(pair: SymmetricPair, points: Sequence[Fraction]) -> OnsagerQuotient:
    """M/K' for M = (g (x) k[t, 1/t])^Gamma and K the joint kernel of evaluation at ``points``.

    With z = t + 1/t and y = t - 1/t (y^2 = z^2 - 4), f = prod (z - a_x) over
    all points and h the same product over free points:
        M/K' = g0,rss (x) k[z]/gcd(f^2, (z^2-4) h^2)
             + g0,ab  (x) k[z]/((z^2-4) h^2)
             + g1     (x) y k[z]/(y f h).
    """
    pts = [OnsagerPoint(Fraction(t)) for t in points]
    if len({p.a for p in pts}) != len(pts) or any(t == 0 for t in points):
        raise ValueError("points must be nonzero and in distinct orbits")
    f = poly_from_roots([p.a for p in pts])
    h = poly_from_roots([p.a for p in pts if not p.fixed])
    z2m4 = [Fraction(-4), Fraction(0), Fraction(1)]
    mod_rss = poly_gcd(poly_mul(f, f), poly_mul(z2m4, poly_mul(h, h)))
    mod_ab = poly_mul(z2m4, poly_mul(h, h))
    mod_1 = poly_mul(f, h)
    g = pair.g
    n_rss, n0 = pair.n_rss, pair.n0
    moduli = [mod_rss if i < n_rss else mod_ab if i < n0 else mod_1 for i in range(g.dim)]
    degs = [len(m) - 1 for m in moduli]
    # basis: (i, k) meaning u_i (x) z^k, times y when i is in g1
    basis = [(i, k) for i in range(g.dim) for k in range(degs[i])]
    index = {b: n for n, b in enumerate(basis)}

    def element(i: int, p: Poly) -> Vec:
        r = poly_mod(p, moduli[i])
        return {index[(i, k)]: c for k, c in enumerate(r) if c}

    br = {}
    for (p_, q_) in combinations(range(len(basis)), 2):
        (i, a), (j, b) = basis[p_], basis[q_]
        u = g.bracket(i, j)
        if not u:
            continue
        prod = [Fraction(0)] * (a + b) + [Fraction(1)]
        if i >= n0 and j >= n0:
            prod = poly_mul(prod, z2m4)       # y * y
        img: Vec = {}
        for k, c in u.items():
            _axpy(img, c, element(k, prod))
        if img:
            br[(p_, q_)] = img
    labels = [f"{g.labels[i]}*z^{k}" + ("*y" if i >= n0 else "") for i, k in basis]
    L = FinDimLie(len(basis), br, labels)

    evals = []
    for pt in pts:
        ev = []
        for i, k in basis:
            val = pt.a ** k
            if i >= n0:
                val = val * pt.y if not pt.fixed else Fraction(0)
            ev.append({i: val} if val else {})
        evals.append(ev)
    return OnsagerQuotient(L, evals, pair, pts)


def onsager_point_module(q: OnsagerQuotient, point: int, label: IrrepLabel) -> FinModule:
    """Evaluation module at ``q.points[point]`` for a g^x-label, pulled back to the quotient."""
    pair = q.pair
    pt = q.points[point]
    if pt.fixed:
        model, embed, width = pair.g0_model, pair.g0_embed, pair.n0
    else:
        model, embed, width = pair.g_model, pair.g_embed, pair.g.dim
    V = model.irrep(label)
    phi = []
    for img in q.evaluations[point]:
        out: Vec = {}
        for i, c in img.items():
            if i >= width:
                raise AssertionError("evaluation leaves g^x")
            _axpy(out, c, {i: Fraction(1)} if embed is None else embed[i])
        phi.append(out)
    return pullback(V, q.algebra, phi)
