"""Constructors for the built-in groups.

Covers the imprimitive family G(de,e,r), the real (Coxeter) types A, B,
D and the dihedrals I2(m) realized inside that family, the two
supported exceptional groups (Shephard-Todd numbers 4 and 12), and
fully explicit generator matrices.  Coxeter types also carry positive
root data for the signed-permutation model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .arrangement import Arrangement, essentialize
from .cyclo import CycNum, parse_literal, sqrt_minus_two
from .linalg import Matrix, proportionality, scale_vec
from .matgroup import DEFAULT_ORDER_BOUND, GroupModel


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # "imprimitive" | "coxeter" | "exceptional" | "explicit"
    d: int | None = None
    e: int | None = None
    r: int | None = None
    coxeter_type: str | None = None
    n: int | None = None
    st: int | None = None
    dim: int | None = None
    cyclotomic_order: int | None = None
    generators: tuple = ()

    @staticmethod
    def imprimitive(d: int, e: int, r: int) -> "GroupSpec":
        return GroupSpec(kind="imprimitive", d=d, e=e, r=r)

    @staticmethod
    def coxeter(coxeter_type: str, n: int) -> "GroupSpec":
        return GroupSpec(kind="coxeter", coxeter_type=coxeter_type, n=n)

    @staticmethod
    def exceptional(st: int) -> "GroupSpec":
        return GroupSpec(kind="exceptional", st=st)

    @staticmethod
    def from_json(obj: dict) -> "GroupSpec":
        kind = obj.get("kind")
        if kind == "imprimitive":
            return GroupSpec.imprimitive(obj["d"], obj["e"], obj["r"])
        if kind == "coxeter":
            return GroupSpec.coxeter(obj["type"], obj["n"])
        if kind == "exceptional":
            return GroupSpec.exceptional(obj["st"])
        if kind == "explicit":
            return GroupSpec(
                kind="explicit",
                dim=obj["dim"],
                cyclotomic_order=obj.get("cyclotomic_order", 1),
                generators=tuple(
                    tuple(tuple(entry for entry in row) for row in g)
                    for g in obj["generators"]
                ),
            )
        raise ValueError(f"unknown group spec kind: {kind!r}")

    def label(self) -> str:
        if self.kind == "imprimitive":
            return f"G({self.d * self.e},{self.e},{self.r})"
        if self.kind == "coxeter":
            return f"{self.coxeter_type}{self.n}"
        if self.kind == "exceptional":
            return f"G{self.st}"
        return f"explicit(dim={self.dim})"


@dataclass
class BuiltGroup:
    spec: GroupSpec
    group: GroupModel
    arrangement: Arrangement
    positive_roots: tuple | None = None  # Coxeter types only
    extra: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        return self.spec.label()


def _monomial_generators(de: int, e: int, r: int):
    """Standard generators of G(de,e,r) over Q(zeta_de)."""
    m = de if de > 2 else 1
    zero, one = CycNum.zero(m), CycNum.one(m)
    z = CycNum.rational(-1) if de == 2 else (CycNum.zeta(de) if de > 2 else one)

    def monomial(perm, scalars):
        rows = [[zero] * r for _ in range(r)]
        for j in range(r):
            rows[perm[j]][j] = scalars[j]
        return Matrix(rows)

    ident_perm = list(range(r))
    gens = []
    d = de // e
    if d > 1 and r >= 1:
        # t = diag(zeta_de^e, 1, ..., 1), a reflection of order d
        scal = [z**e] + [one] * (r - 1)
        gens.append(monomial(ident_perm, scal))
    if r >= 2:
        if e > 1:
            # s0' : z1 <-> z2 twisted by zeta_de, order-2 reflection
            perm = [1, 0] + list(range(2, r))
            scal = [z, z.inverse()] + [one] * (r - 2)
            gens.append(monomial(perm, scal))
        for i in range(r - 1):
            perm = list(range(r))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append(monomial(perm, [one] * r))
    if not gens:
        raise ValueError(f"degenerate imprimitive parameters ({d},{e},{r})")
    return gens


def imprimitive_order(d: int, e: int, r: int) -> int:
    """|G(de,e,r)| = (de)^r r! / e."""
    fact = 1
    for k in range(2, r + 1):
        fact *= k
    return (d * e) ** r * fact // e


def g4_generators():
    """The order-24 rank-2 group with two order-3 generators braiding."""
    j = CycNum.zeta(3)
    third = CycNum.rational(Fraction(1, 3))
    s = Matrix([[CycNum.one(3), CycNum.zero(3)], [CycNum.zero(3), j]])
    t = Matrix(
        [
            [third * (1 + 2 * j), third * (j - 1)],
            [third * (2 * j - 2), third * (j + 2)],
        ]
    )
    return [s, t]


def g12_generators():
    """Three order-2 generators with abca = bcab = cabc, over Q(zeta_8)."""
    r = sqrt_minus_two()
    one = CycNum.one(8)
    zero = CycNum.zero(8)
    a = Matrix([[one, 1 + r], [zero, -one]])
    b = Matrix([[-one, zero], [1 - r, one]])
    c = Matrix([[r, -1 + r], [-1 - r, -r]])
    return [a, b, c]


def g12_vector_table():
    """The 12 published root vectors of the rank-2 model, keyed by the
    word in a, b, c of the reflection they belong to."""
    r = sqrt_minus_two()
    one = CycNum.one(8)
    two = CycNum.rational(2).lift(8)
    return {
        "babab": (1 + r, -two),
        "a": (one, CycNum.zero(8)),
        "b": (CycNum.zero(8), one),
        "ababa": (-two, 1 - r),
        "bcb": (one, r),
        "c": (one, -one),
        "acaca": (1 - r, 1 + r),
        "cbc": (-1 + r, -r),
        "aba": (-1 - r, one),
        "bab": (-one, 1 - r),
        "cac": (-r, 1 + r),
        "aca": (-r, one),
    }


def g12_invariant_form() -> Matrix:
    r = sqrt_minus_two()
    return Matrix([[CycNum.rational(2).lift(8), 1 + r], [1 - r, CycNum.rational(2).lift(8)]])


_COXETER_FAMILIES = {"A", "B", "D", "I2"}
SUPPORTED_EXCEPTIONALS = (4, 12)


def build(spec: GroupSpec, order_bound: int = DEFAULT_ORDER_BOUND) -> BuiltGroup:
    """Instantiate a group spec: generate the group, extract (A, d)."""
    if spec.kind == "imprimitive":
        return _build_imprimitive(spec, spec.d, spec.e, spec.r, order_bound)
    if spec.kind == "coxeter":
        return _build_coxeter(spec, order_bound)
    if spec.kind == "exceptional":
        if spec.st == 4:
            g = GroupModel.generate(g4_generators(), order_bound)
            return BuiltGroup(spec, g, Arrangement.from_group(g))
        if spec.st == 12:
            g = GroupModel.generate(g12_generators(), order_bound)
            return BuiltGroup(spec, g, Arrangement.from_group(g))
        raise ValueError(
            f"unsupported Shephard-Todd number {spec.st}; "
            f"models exist for {SUPPORTED_EXCEPTIONALS} "
            "(others are reference-table data only)"
        )
    if spec.kind == "explicit":
        m = spec.cyclotomic_order or 1
        gens = [
            Matrix([[parse_literal(x, m) for x in row] for row in gmat])
            for gmat in spec.generators
        ]
        g = GroupModel.generate(gens, order_bound)
        return BuiltGroup(spec, g, Arrangement.from_group(g))
    raise ValueError(f"unknown spec kind {spec.kind!r}")


def _build_imprimitive(spec, d, e, r, order_bound, essential=True):
    if d < 1 or e < 1 or r < 1:
        raise ValueError("imprimitive parameters must be positive")
    if d * e < 2 and r < 2:
        raise ValueError("G(1,1,1) is trivial")
    gens = _monomial_generators(d * e, e, r)
    g = GroupModel.generate(gens, order_bound)
    if d == 1 and e == 1 and essential:
        # the symmetric group fixes the diagonal; restrict to the root span
        g, arr = essentialize(g)
    else:
        arr = Arrangement.from_group(g)
    return BuiltGroup(spec, g, arr)


def _build_coxeter(spec, order_bound) -> BuiltGroup:
    t, n = spec.coxeter_type, spec.n
    if t not in _COXETER_FAMILIES:
        raise ValueError(f"unknown Coxeter type {t!r}")
    if t == "A":
        built = _build_imprimitive(spec, 1, 1, n + 1, order_bound)
    elif t == "B":
        built = _build_imprimitive(spec, 2, 1, n, order_bound)
    elif t == "D":
        built = _build_imprimitive(spec, 1, 2, n, order_bound)
    elif n in (3, 4, 6):
        # crystallographic dihedrals have integer Cartan models
        c = {3: 1, 4: 2, 6: 3}[n]
        one = CycNum.one()
        s1 = Matrix([[-one, one], [CycNum.zero(), one]])
        s2 = Matrix([[one, CycNum.zero()], [CycNum.rational(c), -one]])
        g = GroupModel.generate([s1, s2], order_bound)
        built = BuiltGroup(spec, g, Arrangement.from_group(g))
    else:  # I2(m) = G(m,m,2), irrational monomial model, no real root data
        built = _build_imprimitive(spec, 1, n, 2, order_bound)
        return built
    built.positive_roots = coxeter_positive_roots(built.group, built.arrangement)
    return built


def coxeter_positive_roots(g: GroupModel, arr: Arrangement):
    """One real root per hyperplane, orbit-transported so that every
    w maps roots to +/- roots, then signed into the lexicographic-
    positive chamber (first nonzero coordinate positive).

    Only valid for groups whose matrices are rational (the real catalog
    types); raises otherwise.
    """
    for gen in g.generators:
        for row in gen.rows:
            for x in row:
                if not x.is_rational():
                    raise ValueError("positive-root transport needs a rational model")
    n_h = len(arr.hyperplanes)
    roots: list = [None] * n_h
    for orbit in arr.orbits:
        seed = orbit[0]
        roots[seed] = arr.hyperplanes[seed].root
        frontier = [seed]
        while frontier:
            nxt = []
            for i in frontier:
                for gen in g.generators:
                    img = gen.matvec(roots[i])
                    j = arr.hyperplane_of_root(img)
                    if roots[j] is None:
                        roots[j] = img
                        nxt.append(j)
            frontier = nxt
    out = []
    for v in roots:
        lead = next(x for x in v if not x.is_zero())
        f = lead.as_fraction()
        if f < 0:
            v = scale_vec(CycNum.rational(-1), v)
        out.append(v)
    return tuple(out)
