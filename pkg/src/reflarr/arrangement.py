"""Reflection arrangements: hyperplanes with forms, roots and orders,
W-orbits, essentiality and irreducibility via the root graph, and
intersection-lattice Poincare polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cyclo import CycNum
from .linalg import (
    Matrix,
    hermitian_product,
    normalize_first_nonzero,
    proportionality,
    rank,
    rref,
    solve,
)
from .matgroup import GroupModel

POINCARE_MAX_HYPERPLANES = 12


@dataclass(frozen=True)
class Hyperplane:
    alpha: tuple  # linear form with kernel H, first nonzero coord 1
    root: tuple  # spans the F-orthogonal line, first nonzero coord 1
    d: int  # order of the pointwise fixer of H
    distinguished_reflection: int | None  # element index, None if standalone


class Arrangement:
    """A central hyperplane arrangement, possibly tied to a group."""

    def __init__(self, dim, hyperplanes, group: GroupModel | None = None, form=None):
        self.dim = dim
        self.hyperplanes = tuple(hyperplanes)
        self.group = group
        self._form = form

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def form(self) -> Matrix:
        """The hermitian form used for roots and orthogonality."""
        if self._form is not None:
            return self._form
        if self.group is not None:
            return self.group.invariant_hermitian_form
        return Matrix.identity(self.dim)

    # -- construction ------------------------------------------------

    @staticmethod
    def from_group(g: GroupModel) -> "Arrangement":
        """Extract (A, d) from the reflections of a finite group."""
        by_alpha: dict[tuple, list] = {}
        order_seen: list[tuple] = []
        for r in g.reflections:
            if r.alpha not in by_alpha:
                by_alpha[r.alpha] = []
                order_seen.append(r.alpha)
            by_alpha[r.alpha].append(r)
        hyps = []
        for alpha in order_seen:
            refs = by_alpha[alpha]
            d = len(refs) + 1
            distinguished = [r for r in refs if r.distinguished]
            hyps.append(
                Hyperplane(
                    alpha=alpha,
                    root=refs[0].root,
                    d=d,
                    distinguished_reflection=(
                        distinguished[0].element if distinguished else None
                    ),
                )
            )
        return Arrangement(g.dim, hyps, group=g)

    @staticmethod
    def from_covectors(covectors, dim=None) -> "Arrangement":
        """A standalone arrangement from linear forms (standard form, d=2)."""
        covs = [
            tuple(x if isinstance(x, CycNum) else CycNum.rational(x) for x in c)
            for c in covectors
        ]
        if dim is None:
            dim = len(covs[0])
        hyps = []
        seen = set()
        for c in covs:
            alpha = normalize_first_nonzero(c)
            if alpha is None or alpha in seen:
                raise ValueError("zero or duplicate covector")
            seen.add(alpha)
            # root of H is the standard-form orthogonal: conj(alpha)
            root = normalize_first_nonzero(tuple(x.conjugate() for x in alpha))
            hyps.append(Hyperplane(alpha=alpha, root=root, d=2, distinguished_reflection=None))
        return Arrangement(dim, hyps)

    # -- group action ------------------------------------------------

    def hyperplane_of_root(self, vec) -> int | None:
        """Index of the hyperplane whose root is proportional to vec."""
        for i, h in enumerate(self.hyperplanes):
            if proportionality(vec, h.root) is not None:
                return i
        return None

    def image_hyperplane(self, w: Matrix, i: int) -> int:
        """w(H_i) as a hyperplane index (roots map to roots)."""
        j = self.hyperplane_of_root(w.matvec(self.hyperplanes[i].root))
        if j is None:
            raise ArithmeticError("group element does not permute the arrangement")
        return j

    @cached_property
    def orbits(self) -> tuple:
        """Partition of hyperplane indices under the group action."""
        if self.group is None:
            return tuple((i,) for i in range(len(self)))
        gens = self.group.generators
        assigned = [None] * len(self)
        orbits = []
        for start in range(len(self)):
            if assigned[start] is not None:
                continue
            orb = [start]
            assigned[start] = len(orbits)
            frontier = [start]
            while frontier:
                nxt = []
                for i in frontier:
                    for g in gens:
                        j = self.image_hyperplane(g, i)
                        if assigned[j] is None:
                            assigned[j] = len(orbits)
                            orb.append(j)
                            nxt.append(j)
                frontier = nxt
            orbits.append(tuple(sorted(orb)))
        return tuple(orbits)

    def orbit_of(self, i: int) -> int:
        for k, orb in enumerate(self.orbits):
            if i in orb:
                return k
        raise IndexError(i)

    # -- essentiality and irreducibility -----------------------------

    def is_essential(self) -> bool:
        return rank([list(h.alpha) for h in self.hyperplanes]) == self.dim

    def root_orthogonal(self, i: int, j: int) -> bool:
        f = self.form
        return hermitian_product(
            f, self.hyperplanes[i].root, self.hyperplanes[j].root
        ).is_zero()

    def greedy_connected_basis(self) -> list[int]:
        """Grow a connected, linearly independent set of roots greedily.

        Ties break toward the lowest hyperplane index; for an
        irreducible essential arrangement the result has size dim.
        """
        if not self.hyperplanes:
            return []
        chosen = [0]
        span_rows = [list(self.hyperplanes[0].root)]
        changed = True
        while changed:
            changed = False
            for i in range(len(self)):
                if i in chosen:
                    continue
                if all(self.root_orthogonal(i, j) for j in chosen):
                    continue
                candidate = span_rows + [list(self.hyperplanes[i].root)]
                if rank(candidate) == len(candidate):
                    chosen.append(i)
                    span_rows = candidate
                    changed = True
                    break
        return chosen

    def irreducibility(self):
        """Verdict: irreducible, or the orthogonal parts if reducible."""
        if not self.is_essential():
            raise ValueError("irreducibility requires an essential arrangement")
        if self.dim == 0 or not self.hyperplanes:
            return IrreducibilityVerdict(True, ())
        basis = self.greedy_connected_basis()
        if len(basis) == self.dim and len(self.connected_components()) == 1:
            return IrreducibilityVerdict(True, (), certificate=tuple(basis))
        parts = self.connected_components()
        return IrreducibilityVerdict(False, tuple(tuple(p) for p in parts))

    def connected_components(self) -> list[list[int]]:
        """Components of the non-orthogonality graph on all roots."""
        n = len(self)
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if not seen[j] and not self.root_orthogonal(i, j):
                        seen[j] = True
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def sub(self, indices) -> "Arrangement":
        return Arrangement(
            self.dim,
            [self.hyperplanes[i] for i in indices],
            group=None,
            form=self._form,
        )

    # -- Poincare polynomial -----------------------------------------

    def poincare_polynomial(self) -> list[int]:
        """Ascending integer coefficients of P_A(t), via Mobius values
        of the intersection lattice."""
        if len(self) > POINCARE_MAX_HYPERPLANES:
            raise ValueError(
                f"refusing the intersection lattice beyond "
                f"{POINCARE_MAX_HYPERPLANES} hyperplanes"
            )
        alphas = [list(h.alpha) for h in self.hyperplanes]
        # lattice elements keyed by the RREF of their covector space;
        # the empty key is the ambient space V (rank 0)
        lattice = {(): 0}
        reps = [()]  # RREF row tuples
        frontier = [()]
        while frontier:
            nxt = []
            for x_rows in frontier:
                for a in alphas:
                    rows = [list(r) for r in x_rows] + [a]
                    reduced, piv = rref(rows)
                    if reduced not in lattice:
                        lattice[reduced] = len(reps)
                        reps.append(reduced)
                        nxt.append(reduced)
            frontier = nxt
        ranks = [len(r) for r in reps]
        # containment: X <= Y as subspaces iff rowspace(Y) within rowspace(X)
        def contains(big_rows, small_rows):
            # subspace(big) contains subspace(small) iff covectors of big
            # are a subset-space of covectors of small
            return all(
                solve(list(zip(*[list(r) for r in small_rows])), list(b)) is not None
                for b in big_rows
            ) if big_rows else True

        order = sorted(range(len(reps)), key=lambda i: ranks[i])
        mu = [0] * len(reps)
        for pos, i in enumerate(order):
            if ranks[i] == 0:
                mu[i] = 1
                continue
            acc = 0
            for j in order[:pos]:
                if ranks[j] < ranks[i] and contains(reps[j], reps[i]):
                    acc += mu[j]
            mu[i] = -acc
        max_rank = max(ranks)
        poly = [0] * (max_rank + 1)
        for i in range(len(reps)):
            poly[ranks[i]] += mu[i] * (-1) ** ranks[i]
        return poly


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    parts: tuple  # tuples of hyperplane indices when reducible
    certificate: tuple | None = None  # connected independent root basis


def essentialize(g: GroupModel):
    """Restrict the group to the span of its roots.

    Returns (restricted group, its arrangement); dimension drops by the
    dimension of the common intersection of the hyperplanes.
    """
    roots = [list(r.root) for r in g.reflections]
    if not roots:
        raise ValueError("group has no reflections")
    basis_rows, _ = rref(roots)
    k = len(basis_rows)
    if k == g.dim:
        return g, Arrangement.from_group(g)
    # columns of B span the root space; solve B c = w b_j for each basis vec
    bt = [list(col) for col in zip(*basis_rows)]  # dim x k, columns = basis
    new_gens = []
    for w in g.generators:
        cols = []
        for b in basis_rows:
            img = w.matvec(b)
            c = solve(bt, list(img))
            if c is None:
                raise ArithmeticError("root span is not stable under the group")
            cols.append(c)
        new_gens.append(Matrix(list(zip(*cols))))
    sub = GroupModel.generate(new_gens, g.order_bound)
    return sub, Arrangement.from_group(sub)


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_divisible(p: list[int], q: list[int]) -> bool:
    """Whether q divides p over the integers (q monic up to sign)."""
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    q = list(q)
    while q and q[-1] == 0:
        q.pop()
    if not p:
        return True
    if len(p) < len(q):
        return False
    lead = q[-1]
    while len(p) >= len(q):
        if p[-1] % lead:
            return False
        c = p[-1] // lead
        off = len(p) - len(q)
        for k in range(len(q)):
            p[off + k] -= c * q[k]
        while p and p[-1] == 0:
            p.pop()
        if not p:
            return True
    return not p
