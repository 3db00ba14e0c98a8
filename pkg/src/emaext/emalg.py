"""Equivariant map algebras, their points and evaluation representations.

The geometry is reduced to what the Ext and block formulas consume: for each
point its stabilizer (trivial or the whole order-two group), the dimension of
its tangent space and whether it is a fixed point.  Configuration documents
look like::

    algebra { family = multiloop; g = "A2"; n = 2 }
    point "p1" { tangent_dim = 2 }
    rep "V" { at "p1" weight = [1,0] }
    rep "W" { at "p1" weight = [0,1]; noneval = "" }
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .chars import IrrepLabel, weight_multiplicities
from .intlinalg import LatticeSubgroup, lattice_contains
from .rootsys import (CartanData, RootSystemError, RootSystemSpec, Weight, build,
                      dual_weight, is_dominant, root_lattice)


class Family(enum.Enum):
    UNTWISTED = "untwisted"
    MULTILOOP = "multiloop"
    EXCHANGE = "exchange"
    ONSAGER = "onsager"


@dataclass(frozen=True)
class OnsagerPair:
    """Branching data of a symmetric pair (g, g0) with g1 the (-1)-eigenspace.

    ``g0_ab_dim == 1``: g1 = (V(nu) with charge 1) + (V(nu)* with charge -1).
    ``g0_ab_dim == 0``: g1 = V(nu).
    """
    g0_spec: RootSystemSpec
    g0_ab_dim: int
    nu: Weight


# (g, pair) for the usual Onsager algebra: sl2 with the Chevalley involution
BUILTIN_PAIRS = {
    "sl2-chevalley": (RootSystemSpec.parse("A1"), OnsagerPair(RootSystemSpec(()), 1, ())),
}


@dataclass(frozen=True)
class PointSpec:
    id: str
    tangent_dim: int = 1
    fixed_point: bool = False
    stabilizer: str = "trivial"
    orbit: str = ""
    # rational coordinate of an Onsager point (only the oracle uses it)
    t: Optional[Fraction] = None

    def __post_init__(self):
        if not self.orbit:
            object.__setattr__(self, "orbit", self.id)


@dataclass(frozen=True)
class AlgebraConfig:
    family: Family
    g_spec: RootSystemSpec
    g_ab_dim: int = 0
    n: int = 1
    s_spec: Optional[RootSystemSpec] = None
    pair: Optional[OnsagerPair] = None
    points: Mapping[str, PointSpec] = field(default_factory=dict)

    def point(self, pid: str) -> PointSpec:
        try:
            return self.points[pid]
        except KeyError:
            raise ValidationError([Diagnostic("unknown-point", f"no point {pid!r}")]) from None


@dataclass(frozen=True)
class EvalRepSpec:
    support: Mapping[str, IrrepLabel]
    noneval_tag: str = ""
    name: str = ""

    def __post_init__(self):
        clean = {p: lab for p, lab in sorted(self.support.items()) if not lab.is_trivial}
        object.__setattr__(self, "support", clean)


@dataclass(frozen=True)
class SymbolicSummand:
    kind: str          # "DualOfMab" or "DualOfMabGss"
    copies: int = 1

    def __post_init__(self):
        if self.kind not in ("DualOfMab", "DualOfMabGss"):
            raise ValueError(f"unknown symbolic summand {self.kind}")

    def __str__(self) -> str:
        base = "dual(M_ab)" if self.kind == "DualOfMab" else "dual(M_ab,gss)"
        return f"{base}^{self.copies}"


@dataclass(frozen=True)
class ExtResult:
    finite_dim: int
    infinite_summands: tuple[SymbolicSummand, ...] = ()
    breakdown: tuple[tuple[str, int], ...] = ()
    # extra free-form remarks that carry no dimension
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if sum(c for _, c in self.breakdown) != self.finite_dim:
            raise AssertionError("breakdown does not sum to finite_dim")

    @classmethod
    def single(cls, description: str, value: int, **kw) -> "ExtResult":
        return cls(value, breakdown=((description, value),), **kw)

    def __str__(self) -> str:
        s = str(self.finite_dim)
        for t in self.infinite_summands:
            s += f" + {t}"
        return s


@dataclass(frozen=True)
class Document:
    config: AlgebraConfig
    reps: Mapping[str, EvalRepSpec]

    def rep(self, name: str) -> EvalRepSpec:
        try:
            return self.reps[name]
        except KeyError:
            raise ValidationError([Diagnostic("unknown-rep", f"no rep {name!r}")]) from None


# ---------------------------------------------------------------------------
# diagnostics

@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


class ValidationError(ValueError):
    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(map(str, self.diagnostics)))


# ---------------------------------------------------------------------------
# the fixed-point subalgebra

@dataclass(frozen=True)
class GxDescriptor:
    spec: RootSystemSpec
    ab_rank: int

    @property
    def cd(self) -> CartanData:
        return build(self.spec)


def _double(spec: RootSystemSpec) -> RootSystemSpec:
    return RootSystemSpec(spec.components * 2)


def g_fixed_at(config: AlgebraConfig, point: PointSpec) -> GxDescriptor:
    fam = config.family
    if fam in (Family.UNTWISTED, Family.MULTILOOP):
        return GxDescriptor(config.g_spec, config.g_ab_dim)
    if fam is Family.EXCHANGE:
        s = config.s_spec
        return GxDescriptor(s if point.fixed_point else _double(s), 0)
    if point.fixed_point:
        return GxDescriptor(config.pair.g0_spec, config.pair.g0_ab_dim)
    return GxDescriptor(config.g_spec, 0)


def g1_module(config: AlgebraConfig):
    """g1 as a module for g0 at an Onsager fixed point."""
    from .chars import ModuleExpr
    pair = config.pair
    cd = build(pair.g0_spec)
    if pair.g0_ab_dim:
        return ModuleExpr.of(IrrepLabel(pair.nu, (1,)), IrrepLabel(dual_weight(cd, pair.nu), (-1,)))
    return ModuleExpr.of(IrrepLabel(pair.nu))


def mab_dim(config: AlgebraConfig) -> Optional[int]:
    """dim of the abelianization of the algebra; None when infinite."""
    if config.g_ab_dim:
        return None
    if config.family is Family.ONSAGER:
        return 2 * config.pair.g0_ab_dim
    return 0


# ---------------------------------------------------------------------------
# validation

def _weights_span_is_root_lattice(cd: CartanData, nu: Weight) -> bool:
    """Span of wt(V(nu) (x) V(nu)*) equals Q, i.e. V(nu) is faithful."""
    wts = list(weight_multiplicities(cd, nu).weights())
    base = wts[0]
    diffs = [tuple(a - b for a, b in zip(w, base)) for w in wts[1:]]
    span = LatticeSubgroup.spanned_by(cd.rank, diffs)
    q = root_lattice(cd)
    return (all(lattice_contains(span, r) for r in cd.simple_roots)
            and all(lattice_contains(q, d) for d in diffs))


def validate(config: AlgebraConfig, reps: Mapping[str, EvalRepSpec] = ()) -> list[Diagnostic]:
    """Check a configuration (and optionally reps); returns diagnostics, empty if ok."""
    out: list[Diagnostic] = []
    try:
        _validate_config(config, out)
        if not out:
            for name, rep in dict(reps).items():
                _validate_rep(config, name, rep, out)
    except Exception as exc:  # validate never raises
        out.append(Diagnostic("internal", f"{type(exc).__name__}: {exc}"))
    return out


def _validate_config(config: AlgebraConfig, out: list[Diagnostic]) -> None:
    fam = config.family
    if config.g_ab_dim < 0:
        out.append(Diagnostic("g_ab", "g_ab must be >= 0"))
    if fam is Family.MULTILOOP and config.n < 1:
        out.append(Diagnostic("n", "n must be >= 1"))
    if fam in (Family.EXCHANGE, Family.ONSAGER) and config.g_ab_dim:
        out.append(Diagnostic("g_ab", f"{fam.value} requires g semisimple (g_ab = 0)"))
    if fam is Family.EXCHANGE:
        if config.s_spec is None or len(config.s_spec.components) != 1:
            out.append(Diagnostic("s", "exchange needs s with exactly one simple component"))
        elif config.g_spec != _double(config.s_spec):
            out.append(Diagnostic("g", "exchange requires g = s x s"))
    if fam is Family.ONSAGER:
        pair = config.pair
        if pair is None:
            out.append(Diagnostic("pair", "onsager needs g0, g0_ab and nu (or a built-in pair)"))
        else:
            if len(config.g_spec.components) != 1:
                out.append(Diagnostic("g", "onsager requires g simple"))
            if pair.g0_ab_dim not in (0, 1):
                out.append(Diagnostic("g0_ab", "g0_ab must be 0 or 1"))
            if len(pair.nu) != pair.g0_spec.rank:
                out.append(Diagnostic("nu", f"nu must have length {pair.g0_spec.rank}"))
            elif not is_dominant(pair.nu):
                out.append(Diagnostic("nu", "nu must be dominant"))
            elif pair.g0_ab_dim == 0 and not any(pair.nu):
                out.append(Diagnostic("nu", "nu must be nonzero when g0 is semisimple"))
            elif pair.g0_spec.rank and not _weights_span_is_root_lattice(build(pair.g0_spec), pair.nu):
                out.append(Diagnostic("faithful", "span of wt(V(nu) (x) V(nu)*) is not the root lattice of g0"))
    for pid, p in config.points.items():
        if pid != p.id:
            out.append(Diagnostic("point", f"point key {pid!r} does not match id {p.id!r}"))
        if p.tangent_dim < 0:
            out.append(Diagnostic("tangent_dim", f"point {p.id}: tangent_dim must be >= 0"))
        if fam is Family.MULTILOOP and p.tangent_dim != config.n:
            out.append(Diagnostic("tangent_dim", f"point {p.id}: tangent_dim must equal n"))
        if fam in (Family.UNTWISTED, Family.MULTILOOP):
            if p.fixed_point or p.stabilizer != "trivial":
                out.append(Diagnostic("stabilizer", f"point {p.id}: {fam.value} points have trivial stabilizer"))
        else:
            want = "full" if p.fixed_point else "trivial"
            if p.stabilizer != want:
                out.append(Diagnostic("stabilizer",
                                      f"point {p.id}: stabilizer must be {want} for "
                                      f"{'fixed' if p.fixed_point else 'free'} points"))
        if fam is Family.ONSAGER and p.tangent_dim != 1:
            out.append(Diagnostic("tangent_dim", f"point {p.id}: onsager points are smooth points of a curve"))
        if p.t is not None:
            if fam is not Family.ONSAGER:
                out.append(Diagnostic("t", f"point {p.id}: t is only meaningful for onsager points"))
            elif p.fixed_point and p.t not in (1, -1):
                out.append(Diagnostic("t", f"point {p.id}: a fixed point has t = 1 or t = -1"))
            elif not p.fixed_point and p.t in (0, 1, -1):
                out.append(Diagnostic("t", f"point {p.id}: a free point needs t outside 0, 1, -1"))


def _validate_rep(config: AlgebraConfig, name: str, rep: EvalRepSpec, out: list[Diagnostic]) -> None:
    seen_orbits: dict[str, str] = {}
    for pid, lab in rep.support.items():
        p = config.points.get(pid)
        if p is None:
            out.append(Diagnostic("unknown-point", f"rep {name}: no point {pid!r}"))
            continue
        if p.orbit in seen_orbits:
            out.append(Diagnostic("orbit", f"rep {name}: points {seen_orbits[p.orbit]} and {pid} "
                                            f"lie in the same orbit"))
        seen_orbits[p.orbit] = pid
        gx = g_fixed_at(config, p)
        if len(lab.highest_weight) != gx.spec.rank:
            out.append(Diagnostic("weight", f"rep {name} at {pid}: weight length "
                                            f"{len(lab.highest_weight)} != rank {gx.spec.rank}"))
        if len(lab.charges) != gx.ab_rank:
            out.append(Diagnostic("charge", f"rep {name} at {pid}: charge length "
                                            f"{len(lab.charges)} != {gx.ab_rank}"))


def check(config: AlgebraConfig, reps: Mapping[str, EvalRepSpec] = ()) -> None:
    diags = validate(config, reps)
    if diags:
        raise ValidationError(diags)


def rep_from_weights(config: AlgebraConfig, support: Mapping[str, Sequence],
                     charges: Mapping[str, Sequence] = None, noneval: str = "") -> EvalRepSpec:
    """Convenience constructor; charges default to zero of the right length."""
    charges = charges or {}
    sup = {}
    for pid, w in support.items():
        gx = g_fixed_at(config, config.point(pid))
        ch = charges.get(pid, (0,) * gx.ab_rank)
        sup[pid] = IrrepLabel(tuple(w), tuple(ch))
    return EvalRepSpec(sup, noneval)


# ---------------------------------------------------------------------------
# document parser

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) |
    (?P<comment>\#[^\n]*) |
    (?P<nl>\n) |
    (?P<string>"(?:[^"\\\n]|\\.)*") |
    (?P<number>-?\d+(?:/\d+)?) |
    (?P<ident>[A-Za-z_][A-Za-z0-9_\-]*) |
    (?P<punct>[{}\[\]=;,])
""", re.VERBOSE)


class ConfigSyntaxError(ValidationError):
    def __init__(self, message: str, line: int):
        super().__init__([Diagnostic("syntax", f"line {line}: {message}")])


@dataclass
class _Tok:
    kind: str
    text: str
    line: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line = 0, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ConfigSyntaxError(f"unexpected character {text[pos]!r}", line)
        kind = m.lastgroup
        if kind == "nl":
            toks.append(_Tok(";", "\n", line))
            line += 1
        elif kind == "punct":
            toks.append(_Tok(m.group(), m.group(), line))
        elif kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line))
        pos = m.end()
    toks.append(_Tok("eof", "", line))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> _Tok:
        t = self.next()
        if t.kind != kind:
            raise ConfigSyntaxError(f"expected {kind!r}, got {t.text!r}", t.line)
        return t

    def skip_separators(self):
        while self.peek().kind == ";":
            self.i += 1

    def value(self):
        t = self.next()
        if t.kind == "string":
            return t.text[1:-1].replace('\\"', '"').replace("\\\\", "\\")
        if t.kind == "number":
            f = Fraction(t.text)
            return int(f) if f.denominator == 1 else f
        if t.kind == "ident":
            if t.text in ("true", "false"):
                return t.text == "true"
            return t.text
        if t.kind == "[":
            items = []
            while self.peek().kind == ";" and self.peek().text == "\n":
                self.i += 1
            if self.peek().kind == "]":
                self.i += 1
                return items
            while True:
                n = self.expect("number")
                items.append(Fraction(n.text))
                t = self.next()
                if t.kind == "]":
                    return items
                if t.kind != ",":
                    raise ConfigSyntaxError(f"expected ',' or ']', got {t.text!r}", t.line)
        raise ConfigSyntaxError(f"unexpected {t.text!r}", t.line)

    def assignment(self, first: _Tok) -> tuple[str, object, int]:
        if first.kind != "ident":
            raise ConfigSyntaxError(f"expected a key, got {first.text!r}", first.line)
        self.expect("=")
        return first.text, self.value(), first.line

    def block(self):
        """Statements inside braces: list of ('kv', key, value, line) or ('at', pid, [kv], line)."""
        self.expect("{")
        stmts = []
        while True:
            self.skip_separators()
            t = self.next()
            if t.kind == "}":
                return stmts
            if t.kind == "eof":
                raise ConfigSyntaxError("unterminated block", t.line)
            if t.kind == "ident" and t.text == "at":
                pid = self.expect("string").text[1:-1]
                kvs = []
                while self.peek().kind == "ident":
                    kvs.append(self.assignment(self.next()))
                stmts.append(("at", pid, kvs, t.line))
            else:
                key, val, line = self.assignment(t)
                stmts.append(("kv", key, val, line))
            nxt = self.peek()
            if nxt.kind not in (";", "}"):
                raise ConfigSyntaxError(f"expected ';' or '}}', got {nxt.text!r}", nxt.line)

    def document(self):
        sections = []
        while True:
            self.skip_separators()
            t = self.next()
            if t.kind == "eof":
                return sections
            if t.kind != "ident" or t.text not in ("algebra", "point", "rep"):
                raise ConfigSyntaxError(f"expected a section, got {t.text!r}", t.line)
            name = None
            if t.text != "algebra":
                name = self.expect("string").text[1:-1]
            sections.append((t.text, name, self.block(), t.line))


_ALGEBRA_KEYS = {
    Family.UNTWISTED: {"g", "g_ab"},
    Family.MULTILOOP: {"g", "g_ab", "n", "orders"},
    Family.EXCHANGE: {"g", "s"},
    Family.ONSAGER: {"g", "g0", "g0_ab", "nu", "pair"},
}
_POINT_KEYS = {"tangent_dim", "fixed", "stabilizer", "orbit", "t"}


def _kv_map(stmts, allowed: set[str], where: str) -> dict:
    out = {}
    for st in stmts:
        if st[0] != "kv":
            raise ConfigSyntaxError(f"'at' is not allowed in {where}", st[3])
        _, key, val, line = st
        if key not in allowed:
            raise ValidationError([Diagnostic("unknown-key", f"line {line}: unknown key {key!r} in {where}")])
        if key in out:
            raise ValidationError([Diagnostic("duplicate-key", f"line {line}: duplicate key {key!r} in {where}")])
        out[key] = val
    return out


def _as_int(val, key: str) -> int:
    if isinstance(val, bool) or not isinstance(val, int):
        raise ValidationError([Diagnostic("type", f"{key} must be an integer")])
    return val


def _as_weight(val, key: str) -> Weight:
    if not isinstance(val, list) or any(v.denominator != 1 for v in val):
        raise ValidationError([Diagnostic("type", f"{key} must be a list of integers")])
    return tuple(int(v) for v in val)


def _as_spec(val, key: str) -> RootSystemSpec:
    if not isinstance(val, str):
        raise ValidationError([Diagnostic("type", f"{key} must be a root system string")])
    try:
        return RootSystemSpec.parse(val)
    except RootSystemError as exc:
        raise ValidationError([Diagnostic("root-system", str(exc))]) from None


def parse_document(text: str) -> Document:
    """Parse and validate a configuration document; raises ValidationError."""
    sections = _Parser(text).document()
    algebras = [s for s in sections if s[0] == "algebra"]
    if len(algebras) != 1:
        raise ValidationError([Diagnostic("algebra", "exactly one algebra section is required")])
    _, _, stmts, _ = algebras[0]
    fam_stmt = [st for st in stmts if st[0] == "kv" and st[1] == "family"]
    if not fam_stmt:
        raise ValidationError([Diagnostic("family", "algebra section needs a family")])
    try:
        family = Family(fam_stmt[0][2])
    except ValueError:
        raise ValidationError([Diagnostic("family", f"unknown family {fam_stmt[0][2]!r}")]) from None
    kv = _kv_map([st for st in stmts if not (st[0] == "kv" and st[1] == "family")],
                 _ALGEBRA_KEYS[family], "algebra")

    g_ab = _as_int(kv.get("g_ab", 0), "g_ab")
    n = _as_int(kv.get("n", 1), "n")
    s_spec = pair = None
    if family is Family.EXCHANGE:
        if "s" not in kv:
            raise ValidationError([Diagnostic("s", "exchange needs s")])
        s_spec = _as_spec(kv["s"], "s")
        g_spec = _as_spec(kv["g"], "g") if "g" in kv else _double(s_spec)
    elif family is Family.ONSAGER:
        if "pair" in kv:
            if any(k in kv for k in ("g0", "g0_ab", "nu")):
                raise ValidationError([Diagnostic("pair", "give either pair or g0/g0_ab/nu, not both")])
            if kv["pair"] not in BUILTIN_PAIRS:
                raise ValidationError([Diagnostic("pair", f"unknown built-in pair {kv['pair']!r}")])
            g_spec, pair = BUILTIN_PAIRS[kv["pair"]]
            if "g" in kv and _as_spec(kv["g"], "g") != g_spec:
                raise ValidationError([Diagnostic("g", f"pair {kv['pair']} has g = {g_spec}")])
        else:
            missing = [k for k in ("g", "g0", "g0_ab", "nu") if k not in kv]
            if missing:
                raise ValidationError([Diagnostic("pair", f"onsager needs {', '.join(missing)}")])
            g_spec = _as_spec(kv["g"], "g")
            pair = OnsagerPair(_as_spec(kv["g0"], "g0"), _as_int(kv["g0_ab"], "g0_ab"),
                               _as_weight(kv["nu"], "nu"))
    else:
        if "g" not in kv:
            raise ValidationError([Diagnostic("g", "algebra needs g")])
        g_spec = _as_spec(kv["g"], "g")

    points = {}
    for kind, name, body, line in sections:
        if kind != "point":
            continue
        if name in points:
            raise ValidationError([Diagnostic("duplicate-point", f"line {line}: point {name!r} defined twice")])
        pk = _kv_map(body, _POINT_KEYS, f"point {name}")
        fixed = pk.get("fixed", False)
        if not isinstance(fixed, bool):
            raise ValidationError([Diagnostic("type", "fixed must be true or false")])
        default_tangent = n if family is Family.MULTILOOP else 1
        t = pk.get("t")
        if t is not None and not isinstance(t, (int, Fraction)):
            raise ValidationError([Diagnostic("type", "t must be a rational number")])
        points[name] = PointSpec(
            id=name,
            tangent_dim=_as_int(pk.get("tangent_dim", default_tangent), "tangent_dim"),
            fixed_point=fixed,
            stabilizer=str(pk.get("stabilizer", "full" if fixed else "trivial")),
            orbit=str(pk.get("orbit", name)),
            t=None if t is None else Fraction(t),
        )

    config = AlgebraConfig(family, g_spec, g_ab, n, s_spec, pair, points)
    diags = validate(config)
    if diags:
        raise ValidationError(diags)

    reps = {}
    for kind, name, body, line in sections:
        if kind != "rep":
            continue
        if name in reps:
            raise ValidationError([Diagnostic("duplicate-rep", f"line {line}: rep {name!r} defined twice")])
        reps[name] = _parse_rep(config, name, body)
    diags = validate(config, reps)
    if diags:
        raise ValidationError(diags)
    return Document(config, reps)


def _parse_rep(config: AlgebraConfig, name: str, body) -> EvalRepSpec:
    tag = ""
    support = {}
    for st in body:
        if st[0] == "kv":
            _, key, val, line = st
            if key != "noneval":
                raise ValidationError([Diagnostic("unknown-key", f"line {line}: unknown key {key!r} in rep {name}")])
            if not isinstance(val, str):
                raise ValidationError([Diagnostic("type", "noneval must be a string")])
            tag = val
            continue
        _, pid, kvs, line = st
        if pid not in config.points:
            raise ValidationError([Diagnostic("unknown-point", f"line {line}: rep {name}: no point {pid!r}")])
        if pid in support:
            raise ValidationError([Diagnostic("duplicate-point", f"line {line}: rep {name} uses {pid!r} twice")])
        fields = {}
        for key, val, kline in kvs:
            if key not in ("weight", "charge") or key in fields:
                raise ValidationError([Diagnostic("unknown-key", f"line {kline}: bad key {key!r} in rep {name}")])
            fields[key] = val
        gx = g_fixed_at(config, config.points[pid])
        weight = _as_weight(fields.get("weight", []), "weight")
        charge = fields.get("charge", [0] * gx.ab_rank)
        if not isinstance(charge, list):
            raise ValidationError([Diagnostic("type", "charge must be a list of rationals")])
        if not is_dominant(weight):
            raise ValidationError([Diagnostic("weight", f"rep {name} at {pid}: {weight} is not dominant")])
        if len(weight) != gx.spec.rank or len(charge) != gx.ab_rank:
            raise ValidationError([Diagnostic("weight", f"rep {name} at {pid}: expected weight of length "
                                                        f"{gx.spec.rank} and charge of length {gx.ab_rank}")])
        support[pid] = IrrepLabel(weight, tuple(charge))
    return EvalRepSpec(support, tag, name)


def load_document(path: str) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())
