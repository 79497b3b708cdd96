"""Surgery-quotient groups, abelianization and finite-quotient counting.

Homomorphism counts into fixed finite groups are isomorphism invariants of
finitely presented groups; differing counts certify non-isomorphism, equal
counts certify nothing.
"""
from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .fox import FreeWord, GroupPresentation

DEFAULT_BUDGET = 60 ** 2
BUDGET_ENV = "LINKSURGERY_HOM_BUDGET"
DEFAULT_TARGETS = ("S3", "S4", "A5")


class BudgetExceeded(RuntimeError):
    """The enumeration would visit more generator assignments than allowed."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


# -- finite groups -----------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group as a multiplication table on ``0..order-1``; 0 is the identity."""

    name: str
    table: tuple
    labels: tuple
    inverses: tuple = ()

    def __post_init__(self):
        n = len(self.table)
        table = tuple(tuple(row) for row in self.table)
        if any(len(row) != n for row in table):
            raise ValueError("multiplication table must be square")
        object.__setattr__(self, "table", table)
        if any(table[0][g] != g or table[g][0] != g for g in range(n)):
            raise ValueError("element 0 is not an identity")
        inv = []
        for g in range(n):
            found = [h for h in range(n) if table[g][h] == 0]
            if len(found) != 1 or table[found[0]][g] != 0:
                raise ValueError(f"element {self.labels[g]} has no two-sided inverse")
            inv.append(found[0])
        object.__setattr__(self, "inverses", tuple(inv))
        self._check_associative()

    def _check_associative(self, exhaustive_limit: int = 64, samples: int = 20000) -> None:
        n = self.order
        T = self.table
        if n <= exhaustive_limit:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(n)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
        for a, b, c in triples:
            if T[T[a][b]][c] != T[a][T[b][c]]:
                raise ValueError(f"table is not associative at {a}, {b}, {c}")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_abelian(self) -> bool:
        T = self.table
        return all(T[a][b] == T[b][a] for a in range(self.order) for b in range(a))


def _compose(p: tuple, q: tuple) -> tuple:
    # apply q first, then p
    return tuple(p[i] for i in q)


def permutation_group(name: str, generators: Sequence[tuple]) -> FiniteGroupTable:
    """Group generated by permutations (tuples of images), elements sorted."""
    n = len(generators[0]) if generators else 1
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = _compose(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    elements = sorted(seen)  # identity sorts first
    index = {g: i for i, g in enumerate(elements)}
    table = [[index[_compose(a, b)] for b in elements] for a in elements]
    return FiniteGroupTable(name, tuple(map(tuple, table)), tuple(elements))


def symmetric_group(n: int) -> FiniteGroupTable:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return permutation_group("S1", [(0,)])
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return permutation_group(f"S{n}", gens)


def alternating_group(n: int) -> FiniteGroupTable:
    if n < 3:
        return permutation_group(f"A{n}", [tuple(range(max(n, 1)))])
    gens = []
    for i in range(n - 2):
        cyc = list(range(n))
        cyc[i], cyc[i + 1], cyc[i + 2] = i + 1, i + 2, i
        gens.append(tuple(cyc))
    return permutation_group(f"A{n}", gens)


def cyclic_group(n: int) -> FiniteGroupTable:
    if n < 1:
        raise ValueError("n must be positive")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroupTable(f"C{n}", table, tuple(range(n)))


def group_by_name(name: str) -> FiniteGroupTable:
    """``S<n>``, ``A<n>`` or ``C<n>``."""
    name = name.strip()
    kind, digits = name[:1].upper(), name[1:]
    if not digits.isdigit():
        raise ValueError(f"unknown group {name!r}")
    n = int(digits)
    if kind == "S":
        return symmetric_group(n)
    if kind == "A":
        return alternating_group(n)
    if kind == "C":
        return cyclic_group(n)
    raise ValueError(f"unknown group {name!r}")


# -- surgery quotients ------------------------------------------------------

def surgery_quotient(k: GroupPresentation, p: int, component: int = 0) -> GroupPresentation:
    """Append the relator ``mu * lambda^p`` of 1/p surgery on one component."""
    if k.meridians is None or k.longitudes is None:
        raise ValueError("presentation lacks meridian/longitude words")
    mu = k.meridians[component]
    lam = k.longitudes[component]
    return k.with_relators([mu * lam ** p])


# -- abelianization ------------------------------------------------------------

def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, each dividing the next)."""
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    r = 0
    while r < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(r, m) for j in range(r, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[r], A[pi] = A[pi], A[r]
        for row in A:
            row[r], row[pj] = row[pj], row[r]
        while True:
            done = True
            piv = A[r][r]
            for i in range(r + 1, m):
                q = A[i][r] // piv
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                if A[i][r]:
                    done = False
            for j in range(r + 1, n):
                q = A[r][j] // piv
                if q:
                    for row in A:
                        row[j] -= q * row[r]
                if A[r][j]:
                    done = False
            if not done:
                # move a smaller remainder into the pivot slot and retry
                cands = [(abs(A[i][r]), i, r) for i in range(r + 1, m) if A[i][r]]
                cands += [(abs(A[r][j]), r, j) for j in range(r + 1, n) if A[r][j]]
                _, i, j = min(cands)
                if j == r:
                    A[r], A[i] = A[i], A[r]
                else:
                    for row in A:
                        row[r], row[j] = row[j], row[r]
                continue
            bad = [
                (i, j) for i in range(r + 1, m) for j in range(r + 1, n)
                if A[i][j] % piv
            ]
            if bad:
                i, _ = bad[0]
                A[r] = [a + b for a, b in zip(A[r], A[i])]
                continue
            break
        diag.append(abs(A[r][r]))
        r += 1
    return diag


def exponent_matrix(g: GroupPresentation) -> list[list[int]]:
    return [FreeWord(r).exponent_sums(g.num_generators) for r in g.relators]


def abelianization_invariants(g: GroupPresentation) -> list[int]:
    """Invariant factors of H_1 other than 1; a 0 entry is a free Z summand."""
    diag = smith_diagonal(exponent_matrix(g))
    torsion = [d for d in diag if d != 1]
    free_rank = g.num_generators - len(diag)
    return torsion + [0] * free_rank


def abelian_hom_count(invariants: Iterable[int], n: int) -> int:
    """|Hom(G, C_n)| from the abelianization invariants of G."""
    total = 1
    for d in invariants:
        total *= n if d == 0 else gcd(d, n)
    return total


# -- homomorphism counting ---------------------------------------------------

@dataclass(frozen=True)
class HomCountReport:
    presentation_id: str
    target: str
    total: int
    nonabelian_image: int

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation_id,
            "target": self.target,
            "total": self.total,
            "nonabelian_image": self.nonabelian_image,
        }


def _evaluate(word: Sequence[int], images: list[int], G: FiniteGroupTable) -> int:
    T, inv = G.table, G.inverses
    acc = 0
    for x in word:
        g = images[abs(x) - 1]
        acc = T[acc][g if x > 0 else inv[g]]
    return acc


def hom_count(
    g: GroupPresentation,
    target: FiniteGroupTable,
    budget: int | None = None,
    presentation_id: str = "",
) -> HomCountReport:
    """Count homomorphisms ``g -> target`` by backtracking over generator images.

    A relator is checked as soon as its largest generator is assigned.
    Raises :class:`BudgetExceeded` if ``order ** generators`` exceeds the budget.
    """
    if budget is None:
        budget = default_budget()
    k = g.num_generators
    size = target.order ** k
    if size > budget:
        raise BudgetExceeded(
            f"{target.order}^{k} = {size} assignments exceed the budget of {budget}"
        )
    by_level: list[list] = [[] for _ in range(k + 1)]
    for r in g.relators:
        level = max((abs(x) for x in r), default=0)
        by_level[level].append(r)
    if any(_evaluate(r, [], target) != 0 for r in by_level[0]):
        return HomCountReport(presentation_id, target.name, 0, 0)

    T = target.table
    images = [0] * k
    total = 0
    nonabelian = 0

    def commute(a: int, b: int) -> bool:
        return T[a][b] == T[b][a]

    def extend(level: int) -> None:
        nonlocal total, nonabelian
        if level == k:
            total += 1
            if any(not commute(images[i], images[j]) for i in range(k) for j in range(i)):
                nonabelian += 1
            return
        for h in range(target.order):
            images[level] = h
            if all(_evaluate(r, images, target) == 0 for r in by_level[level + 1]):
                extend(level + 1)
        images[level] = 0

    extend(0)
    return HomCountReport(presentation_id, target.name, total, nonabelian)


@dataclass(frozen=True)
class FamilyPartition:
    """Members grouped by hom-count signature.

    Members in different blocks have non-isomorphic groups. Members sharing
    a block are only "not separated by these targets".
    """

    targets: tuple
    labels: tuple
    signatures: tuple
    blocks: tuple

    def separated(self, a: int, b: int) -> bool:
        return self.signatures[a] != self.signatures[b]

    def to_dict(self) -> dict:
        return {
            "targets": list(self.targets),
            "members": [
                {"label": lab, "counts": list(sig)}
                for lab, sig in zip(self.labels, self.signatures)
            ],
            "blocks": [[self.labels[i] for i in block] for block in self.blocks],
            "note": "different blocks are certified non-isomorphic; "
                    "members of one block are not separated by these targets",
        }


def distinguish_family(
    presentations: Sequence[GroupPresentation],
    targets: Sequence[FiniteGroupTable],
    labels: Sequence[str] | None = None,
    budget: int | None = None,
) -> FamilyPartition:
    if labels is None:
        labels = [str(i) for i in range(len(presentations))]
    sigs = []
    for pres, lab in zip(presentations, labels):
        sigs.append(tuple(hom_count(pres, G, budget, lab).total for G in targets))
    blocks: dict = {}
    for i, s in enumerate(sigs):
        blocks.setdefault(s, []).append(i)
    return FamilyPartition(
        tuple(G.name for G in targets),
        tuple(labels),
        tuple(sigs),
        tuple(tuple(b) for b in blocks.values()),
    )
