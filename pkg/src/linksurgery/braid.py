"""Braid words, closure combinatorics and the curve families built from braids.

Letters are signed 1-based Artin generator indices: ``2`` is sigma_2 and
``-2`` its inverse. Strands and components are 0-based in the Python API.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands."""

    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(
                    f"generator {x} out of range for {self.strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        if n < 0:
            return self.inverse() ** (-n)
        return BraidWord(self.strands, self.letters * n)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def shifted(self, offset: int, strands: int) -> "BraidWord":
        """The same word acting on strands ``offset..``, inside a wider braid."""
        return BraidWord(strands, tuple(x + offset if x > 0 else x - offset for x in self.letters))

    def permutation(self) -> tuple[int, ...]:
        """``perm[j]`` is the bottom position of the strand starting at top position ``j``."""
        at = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        perm = [0] * self.strands
        for pos, label in enumerate(at):
            perm[label] = pos
        return tuple(perm)

    def to_text(self) -> str:
        return f"strands={self.strands}; " + " ".join(str(x) for x in self.letters)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse ``"strands=3; 1 2 -1"`` (the header may also sit on its own line).

        Without a header the strand count is one more than the largest index.
        """
        m = re.search(r"strands\s*=\s*(\d+)", text)
        body = text
        strands = None
        if m:
            strands = int(m.group(1))
            body = text[: m.start()] + text[m.end():]
        body = body.replace(";", " ").replace(",", " ")
        tokens = body.split()
        try:
            letters = tuple(int(tok) for tok in tokens)
        except ValueError as exc:
            raise ValueError(f"malformed braid word {text!r}") from exc
        if strands is None:
            strands = max((abs(x) for x in letters), default=0) + 1
        return cls(strands, letters)


@dataclass(frozen=True)
class ClosureInfo:
    """Component and linking data of a braid closure.

    ``components`` lists the strands in each cycle of the permutation;
    components are numbered by their smallest strand. ``linking`` has a zero
    diagonal; self-crossings are recorded in ``writhe``.
    """

    permutation: tuple
    components: tuple
    component_of: tuple
    linking: tuple
    writhe: tuple

    @property
    def num_components(self) -> int:
        return len(self.components)

    def strand_counts(self) -> tuple[int, ...]:
        """Number of strands per component, i.e. linking with the braid axis."""
        return tuple(len(c) for c in self.components)

    def linking_with_axis(self) -> tuple:
        """Linking matrix of the closure followed by the braid axis as last component."""
        counts = self.strand_counts()
        rows = [list(row) + [counts[i]] for i, row in enumerate(self.linking)]
        rows.append(list(counts) + [0])
        return tuple(tuple(r) for r in rows)


def _cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(tuple(sorted(cyc)))
    return cycles


def closure_info(b: BraidWord) -> ClosureInfo:
    perm = b.permutation()
    comps = _cycles(perm)  # ordered by smallest strand already
    comp_of = [0] * b.strands
    for ci, cyc in enumerate(comps):
        for s in cyc:
            comp_of[s] = ci
    n = len(comps)
    twice = [[0] * n for _ in range(n)]
    writhe = [0] * n
    at = list(range(b.strands))
    for x in b.letters:
        i = abs(x) - 1
        sign = 1 if x > 0 else -1
        ca, cb = comp_of[at[i]], comp_of[at[i + 1]]
        if ca == cb:
            writhe[ca] += sign
        else:
            twice[ca][cb] += sign
            twice[cb][ca] += sign
        at[i], at[i + 1] = at[i + 1], at[i]
    for row in twice:
        for v in row:
            # crossings between two closed components always pair up
            assert v % 2 == 0
    linking = tuple(tuple(v // 2 for v in row) for row in twice)
    return ClosureInfo(perm, tuple(comps), tuple(comp_of), linking, tuple(writhe))


# -- families ----------------------------------------------------------------

def torus_braid(p: int, q: int) -> BraidWord:
    """``(sigma_1 ... sigma_{q-1})^p`` on ``q`` strands; closes to T(p, q)."""
    if p < 1 or q < 1:
        raise ValueError("torus braid parameters must be positive")
    return BraidWord(q, tuple(range(1, q)) * p)


def borromean_block_braid(iterations: int) -> BraidWord:
    """``(sigma_1 sigma_2^-1)^(3 * iterations)`` on 3 strands.

    One block closes to the Borromean rings; ``iterations = 0`` is the
    trivial braid.
    """
    if iterations < 0:
        raise ValueError("iterations must be nonnegative")
    return BraidWord(3, (1, -2) * (3 * iterations))


def full_twist(strands: int) -> BraidWord:
    return BraidWord(strands, tuple(range(1, strands)) * strands)


def tensor(a: BraidWord, b: BraidWord) -> BraidWord:
    """Place ``b`` to the right of ``a`` (disjoint union of closures)."""
    n = a.strands + b.strands
    return BraidWord(n, a.letters + b.shifted(a.strands, n).letters)


def clasp(a: BraidWord, b: BraidWord) -> BraidWord:
    """Closures of ``a`` and ``b`` joined by a single positive clasp.

    The last strand of ``a`` and the first strand of ``b`` cross twice, so the
    two sublinks link once and are otherwise unchanged.
    """
    t = tensor(a, b)
    return BraidWord(t.strands, t.letters + (a.strands, a.strands))


def add_meridian(b: BraidWord, strand: int | None = None) -> BraidWord:
    """Append a new strand that closes to a meridian circle of ``strand``.

    ``strand`` is a 0-based top position (default: the last strand). The new
    component is unknotted and links the component of ``strand`` once.
    """
    k = b.strands
    if strand is None:
        strand = k - 1
    if not 0 <= strand < k:
        raise IndexError("strand out of range")
    # bring the chosen strand to the last position, clasp, and bring it back
    moves = tuple(range(strand + 1, k))
    letters = b.letters + moves + (k, k) + tuple(-x for x in reversed(moves))
    return BraidWord(k + 1, letters)


def cable_with_core(companion: BraidWord, p: int) -> BraidWord:
    """Braid whose closure is ``K`` together with its ``(p, 1)``-cable.

    ``companion`` must close to a knot ``K``. Each strand is replaced by a
    bundle of ``p + 1`` parallel strands (the core first). The blackboard
    framing is undone with ``-writhe`` full twists of one bundle, and the
    pattern ``sigma_1^2 sigma_2 ... sigma_p`` (the core stays fixed while the
    ``p`` outer strands rotate one click around it) is inserted there. The
    result has two components, core and cable, linking once.
    """
    info = closure_info(companion)
    if info.num_components != 1:
        raise ValueError("cabling needs a knot companion")
    if p < 1:
        raise ValueError("cable parameter must be positive")
    w = p + 1
    k = companion.strands
    n = k * w
    letters: list[int] = []
    for x in companion.letters:
        i = abs(x) - 1
        base = i * w  # bundle i occupies positions base..base+w-1
        # bundle crossing: positive generator swaps bundles i and i+1 as a ribbon
        crossing = []
        for r in range(w):
            for c in range(w):
                crossing.append(base + w + r - c)
        if x > 0:
            letters.extend(crossing)
        else:
            letters.extend(-g for g in reversed(crossing))
    twist = full_twist(w).letters
    writhe = info.writhe[0]
    correction = (tuple(-g for g in reversed(twist)) * writhe) if writhe > 0 else twist * (-writhe)
    pattern = (1, 1) + tuple(range(2, w))
    letters.extend(correction)
    letters.extend(pattern)
    return BraidWord(n, tuple(letters))


def delete_strands(b: BraidWord, strands: Iterable[int]) -> BraidWord:
    """Remove whole components (given by any set of closed-up strands).

    The deleted set must be a union of components so the remainder still
    closes up. Crossings involving removed strands are dropped and indices
    renumbered.
    """
    drop = set(strands)
    perm = b.permutation()
    for s in drop:
        if perm[s] not in drop:
            raise ValueError("deleted strands must form whole components")
    keep_n = b.strands - len(drop)
    if keep_n < 1:
        raise ValueError("cannot delete every strand")
    at = list(range(b.strands))
    letters = []
    for x in b.letters:
        i = abs(x) - 1
        a, c = at[i], at[i + 1]
        if a not in drop and c not in drop:
            # position among kept strands
            idx = sum(1 for lab in at[: i + 1] if lab not in drop)
            letters.append(idx if x > 0 else -idx)
        at[i], at[i + 1] = at[i + 1], at[i]
    return BraidWord(keep_n, tuple(letters))


def sublink(b: BraidWord, components: Iterable[int]) -> BraidWord:
    """Braid of the sublink formed by the listed (0-based) components."""
    info = closure_info(b)
    wanted = set(components)
    drop = [s for s in range(b.strands) if info.component_of[s] not in wanted]
    return delete_strands(b, drop)


# -- family descriptors --------------------------------------------------------

@dataclass(frozen=True)
class FamilyMember:
    """One curve ``gamma_p`` of a family together with its host-link data.

    ``gamma_kind`` is ``"torus"`` (``gamma_params`` = (a, b) for T(a, b)) or
    ``"cable"`` (``gamma_params`` = (p, q), a cable of the companion knot).
    ``linking`` maps host component names to ``lk(gamma_p, .)``.
    """

    family: str
    p: int
    gamma_kind: str
    gamma_params: tuple
    companion: str
    host: tuple
    linking: dict = field(default_factory=dict)

    @property
    def gamma_label(self) -> str:
        a, b = self.gamma_params
        if self.gamma_kind == "torus":
            return f"T({a},{b})"
        return f"({a},{b})-cable of {self.companion}"

    def linking_vector(self) -> tuple[int, ...]:
        return tuple(self.linking[name] for name in self.host)


FAMILIES = ("cable", "trefoil-fiber", "pure-cable")


def cable_family_descriptor(p: int, family: str = "cable", q: int = 1) -> FamilyMember:
    """Record of ``gamma_p`` for the named family.

    ``"cable"``: the circle sum of a meridian of the trefoil ``K`` with the
    fiber curve, a T(p, p+1) knot linking ``K`` once (host ``K``).
    ``"trefoil-fiber"``: the fiber curve T(p, p+1), nullhomologous in the
    trefoil complement, linking the meridian ``M`` ``q`` times (host ``K, M``).
    ``"pure-cable"``: the (p, 1)-cable of ``K``, linking ``K`` once.
    """
    if p < 1:
        raise ValueError("family index p must be positive")
    if family == "cable":
        return FamilyMember(family, p, "torus", (p, p + 1), "T(2,3)", ("K",), {"K": 1})
    if family == "trefoil-fiber":
        if q < 1:
            raise ValueError("q must be positive")
        return FamilyMember(
            family, p, "torus", (p, p + 1), "T(2,3)", ("K", "M"), {"K": 0, "M": q}
        )
    if family == "pure-cable":
        return FamilyMember(family, p, "cable", (p, 1), "T(2,3)", ("K",), {"K": 1})
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def coprime(p: int, q: int) -> bool:
    return gcd(p, q) == 1
