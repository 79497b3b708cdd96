"""Free-group words, the Artin action, closure presentations and Fox calculus.

Words are tuples of signed 1-based generator indices (``-2`` is x_2^-1).
Colorings map each generator (0-based position in the tuple) to a 0-based
link component; abelianization sends x_g to ``t_{coloring[g] + 1}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .braid import BraidWord, closure_info
from .laurent import LaurentPoly


class FreeWord(tuple):
    """A freely reduced word in the free group."""

    def __new__(cls, letters: Iterable[int] = ()):
        out: list[int] = []
        for x in letters:
            x = int(x)
            if x == 0:
                raise ValueError("generator index 0 is not allowed")
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return super().__new__(cls, out)

    def __mul__(self, other):
        return FreeWord(tuple(self) + tuple(other))

    def __rmul__(self, other):
        return FreeWord(tuple(other) + tuple(self))

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return self.inverse() ** (-n)
        return FreeWord(tuple(self) * n)

    def inverse(self) -> "FreeWord":
        return FreeWord(-x for x in reversed(self))

    def __repr__(self) -> str:
        return f"FreeWord({list(self)})"

    def exponent_sums(self, num_generators: int) -> list[int]:
        sums = [0] * num_generators
        for x in self:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return sums

    def substitute(self, images: Sequence["FreeWord"]) -> "FreeWord":
        """Image under the endomorphism ``x_g -> images[g - 1]``."""
        out: list[int] = []
        for x in self:
            im = images[abs(x) - 1]
            out.extend(im if x > 0 else (-y for y in reversed(im)))
        return FreeWord(out)


def gen(i: int) -> FreeWord:
    """The 1-based generator x_i as a word."""
    return FreeWord((i,))


@dataclass(frozen=True)
class GroupPresentation:
    """Finitely presented group with optional link-component data.

    ``meridians`` and ``longitudes`` are per-component peripheral words; they
    are present for presentations of link complements.
    """

    num_generators: int
    relators: tuple = ()
    coloring: tuple | None = None
    meridians: tuple | None = None
    longitudes: tuple | None = None

    def __post_init__(self):
        rels = tuple(FreeWord(r) for r in self.relators)
        for r in rels:
            for x in r:
                if abs(x) > self.num_generators:
                    raise ValueError(f"relator letter {x} exceeds {self.num_generators} generators")
        object.__setattr__(self, "relators", rels)
        if self.coloring is not None:
            col = tuple(int(c) for c in self.coloring)
            if len(col) != self.num_generators:
                raise ValueError("coloring must assign a component to every generator")
            if min(col, default=0) < 0:
                raise ValueError("component indices are nonnegative")
            object.__setattr__(self, "coloring", col)
        for name in ("meridians", "longitudes"):
            words = getattr(self, name)
            if words is not None:
                object.__setattr__(self, name, tuple(FreeWord(w) for w in words))

    @property
    def num_components(self) -> int:
        if self.coloring is None:
            raise ValueError("presentation has no coloring")
        return max(self.coloring, default=-1) + 1

    def with_relators(self, extra: Iterable[Sequence[int]]) -> "GroupPresentation":
        return GroupPresentation(
            self.num_generators,
            self.relators + tuple(FreeWord(r) for r in extra),
            self.coloring,
            self.meridians,
            self.longitudes,
        )

    def to_text(self) -> str:
        parts = [f"gens={self.num_generators}"]
        for r in self.relators:
            parts.append("rel= " + " ".join(str(x) for x in r))
        if self.coloring is not None:
            parts.append("color= " + " ".join(str(c + 1) for c in self.coloring))
        for label, words in (("mer", self.meridians), ("lon", self.longitudes)):
            for w in words or ():
                parts.append(f"{label}= " + " ".join(str(x) for x in w))
        return "; ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "GroupPresentation":
        """Parse ``gens=k; rel= 1 2 1 -2 -1 -2; color= 1 1``.

        ``rel=``, ``mer=`` and ``lon=`` fields may repeat; colors are 1-based.
        """
        num = None
        rels, mers, lons = [], [], []
        coloring = None
        for field_text in re.split(r"[;\n]", text):
            field_text = field_text.strip()
            if not field_text:
                continue
            if "=" not in field_text:
                raise ValueError(f"malformed presentation field {field_text!r}")
            key, _, value = field_text.partition("=")
            key = key.strip().lower()
            try:
                nums = [int(tok) for tok in value.split()]
            except ValueError as exc:
                raise ValueError(f"malformed presentation field {field_text!r}") from exc
            if key == "gens":
                if len(nums) != 1:
                    raise ValueError("gens= takes a single integer")
                num = nums[0]
            elif key == "rel":
                rels.append(nums)
            elif key == "color":
                coloring = [c - 1 for c in nums]
            elif key == "mer":
                mers.append(nums)
            elif key == "lon":
                lons.append(nums)
            else:
                raise ValueError(f"unknown presentation field {key!r}")
        if num is None:
            raise ValueError("presentation needs a gens= field")
        return cls(num, tuple(rels), coloring, tuple(mers) or None, tuple(lons) or None)


# -- Artin action --------------------------------------------------------------

def _generator_images(k: int, letter: int) -> list[FreeWord]:
    i = abs(letter)
    images = [gen(j) for j in range(1, k + 1)]
    if letter > 0:
        images[i - 1] = FreeWord((i, i + 1, -i))
        images[i] = gen(i)
    else:
        images[i - 1] = gen(i + 1)
        images[i] = FreeWord((-(i + 1), i, i + 1))
    return images


def artin_action(b: BraidWord) -> tuple[FreeWord, ...]:
    """Images of ``x_1 .. x_k`` under the automorphism of the braid.

    sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i; the word
    ``s_1 s_2 ...`` acts as the composite ``phi_{s_1} o phi_{s_2} o ...``.
    """
    k = b.strands
    images = tuple(gen(j) for j in range(1, k + 1))
    for letter in b.letters:
        step = _generator_images(k, letter)
        images = tuple(w.substitute(images) for w in step)
    return images


def _split_conjugate(w: FreeWord) -> tuple[FreeWord, int]:
    # w = c * x_m * c^-1 with c freely reduced
    n = len(w)
    if n % 2 == 0:
        raise ValueError(f"{w!r} is not a conjugate of a generator")
    h = n // 2
    c, mid, tail = FreeWord(w[:h]), w[h], FreeWord(w[h + 1:])
    if mid < 0 or tail != c.inverse():
        raise ValueError(f"{w!r} is not a conjugate of a generator")
    return c, mid


def closure_presentation(b: BraidWord) -> GroupPresentation:
    """Presentation of the complement of the braid closure.

    Generators are the meridians x_1..x_k at the top of the braid; relators
    are ``x_j^-1 beta(x_j)`` for j < k (the last is a consequence of the
    others). Each component gets its first strand's generator as meridian
    and a longitude of linking number zero with its own component.
    """
    k = b.strands
    images = artin_action(b)
    info = closure_info(b)
    relators = tuple(gen(j).inverse() * images[j - 1] for j in range(1, k))
    meridians, longitudes = [], []
    for comp in info.components:
        start = comp[0] + 1
        conj_product = FreeWord()
        j = start
        while True:
            c, m = _split_conjugate(images[j - 1])
            conj_product = conj_product * c
            j = m
            if j == start:
                break
        own = sum(
            (1 if x > 0 else -1)
            for x in conj_product
            if info.component_of[abs(x) - 1] == info.component_of[start - 1]
        )
        meridians.append(gen(start))
        longitudes.append(conj_product * gen(start) ** (-own))
    return GroupPresentation(
        k, relators, info.component_of, tuple(meridians), tuple(longitudes)
    )


def axis_presentation(b: BraidWord) -> GroupPresentation:
    """Presentation of the complement of the braid closure together with its axis.

    The complement fibers over the circle with fiber the punctured disk, so
    the group is ``<x_1..x_k, z | z x_j z^-1 = beta(x_j)>``; ``z`` (generator
    ``k + 1``) is a meridian of the axis, colored as the last component.
    """
    k = b.strands
    images = artin_action(b)
    info = closure_info(b)
    z = gen(k + 1)
    relators = tuple(z * gen(j) * z.inverse() * images[j - 1].inverse() for j in range(1, k + 1))
    coloring = info.component_of + (info.num_components,)
    return GroupPresentation(k + 1, relators, coloring)


# -- Fox calculus ----------------------------------------------------------

def fox_derivative(w: Sequence[int], j: int) -> dict[FreeWord, int]:
    """Fox derivative d w / d x_j as an element of the integral group ring.

    Returned as ``{group element (reduced word): coefficient}``.
    """
    out: dict[FreeWord, int] = {}
    prefix: list[int] = []
    for x in w:
        if x == j:
            key = FreeWord(prefix)
            out[key] = out.get(key, 0) + 1
        prefix.append(x)
        if x == -j:
            key = FreeWord(prefix)
            out[key] = out.get(key, 0) - 1
    return {g: c for g, c in out.items() if c}


def abelianize(element: dict, coloring: Sequence[int], num_components: int) -> LaurentPoly:
    """Push a group-ring element to ``Z[t_1^±1..t_n^±1]`` via the coloring."""
    terms: dict = {}
    for word, c in element.items():
        e = [0] * num_components
        for x in word:
            e[coloring[abs(x) - 1]] += 1 if x > 0 else -1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + c
    return LaurentPoly(num_components, terms)


def word_abelianization(w: Sequence[int], coloring: Sequence[int], num_components: int) -> LaurentPoly:
    e = [0] * num_components
    for x in w:
        e[coloring[abs(x) - 1]] += 1 if x > 0 else -1
    return LaurentPoly.monomial(num_components, e)


def fox_abelian(w: Sequence[int], j: int, coloring: Sequence[int], num_components: int) -> LaurentPoly:
    """Abelianized Fox derivative, accumulated in a single pass."""
    terms: dict = {}
    e = [0] * num_components
    for x in w:
        c = coloring[abs(x) - 1]
        if x == j:
            key = tuple(e)
            terms[key] = terms.get(key, 0) + 1
        e[c] += 1 if x > 0 else -1
        if x == -j:
            key = tuple(e)
            terms[key] = terms.get(key, 0) - 1
    return LaurentPoly(num_components, terms)


def alexander_matrix(p: GroupPresentation) -> list[list[LaurentPoly]]:
    """Abelianized Jacobian: entry (r, j) is d(relator_r)/d(x_{j+1})."""
    if p.coloring is None:
        raise ValueError("the Alexander matrix needs a component coloring")
    n = p.num_components
    return [
        [fox_abelian(r, j, p.coloring, n) for j in range(1, p.num_generators + 1)]
        for r in p.relators
    ]
