"""Slopes, torus homology classes and the link-surgery descriptor.

Only the combinatorial data of a link surgery manifold is modeled: the
linking matrix, the fiber class ``m`` and user-supplied relative
Seiberg-Witten polynomials. Components are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .braid import BraidWord, borromean_block_braid, closure_info
from .laurent import LaurentPoly


class FiberDisjointError(ValueError):
    """Both slope coefficients vanish: the fiber misses this boundary torus."""


@dataclass(frozen=True)
class SlopeData:
    """``d * sigma = mu_coeff * mu + lambda_coeff * lambda`` on one boundary torus."""

    component: int
    mu_coeff: int
    lambda_coeff: int
    divisibility: int
    sigma: tuple

    def to_dict(self) -> dict:
        return {
            "component": self.component,
            "mu_coeff": self.mu_coeff,
            "lambda_coeff": self.lambda_coeff,
            "d": self.divisibility,
            "sigma": list(self.sigma),
        }


def _unit_poly() -> LaurentPoly:
    return LaurentPoly.constant(1, 1)


@dataclass(frozen=True)
class LinkSurgeryDescriptor:
    linking: tuple
    fiber_class: tuple
    relative_sw: tuple = field(default=())

    def __post_init__(self):
        lk = tuple(tuple(int(x) for x in row) for row in self.linking)
        n = len(lk)
        if any(len(row) != n for row in lk):
            raise ValueError("linking matrix must be square")
        for i in range(n):
            for j in range(n):
                if lk[i][j] != lk[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        object.__setattr__(self, "linking", lk)
        m = tuple(int(x) for x in self.fiber_class)
        if len(m) != n:
            raise ValueError("fiber class needs one entry per component")
        object.__setattr__(self, "fiber_class", m)
        sw = tuple(self.relative_sw) or tuple(_unit_poly() for _ in range(n))
        if len(sw) != n:
            raise ValueError("one relative SW polynomial per component is required")
        for poly in sw:
            if not isinstance(poly, LaurentPoly) or poly.nvars != 1:
                raise ValueError("relative SW polynomials are one-variable LaurentPolys")
        object.__setattr__(self, "relative_sw", sw)

    @property
    def num_components(self) -> int:
        return len(self.linking)


def slope(desc: LinkSurgeryDescriptor, i: int) -> SlopeData:
    """Boundary slope of the fiber on component ``i``.

    When one coefficient vanishes the divisibility is the absolute value of
    the other (the gcd convention).
    """
    n = desc.num_components
    if not 0 <= i < n:
        raise IndexError(f"component {i} out of range for {n} components")
    m = desc.fiber_class
    mu = -sum(m[j] * desc.linking[i][j] for j in range(n) if j != i)
    lam = m[i]
    d = gcd(abs(mu), abs(lam))
    if d == 0:
        raise FiberDisjointError(f"fiber class {m} is disjoint from component {i}")
    return SlopeData(i, mu, lam, d, (mu // d, lam // d))


@dataclass(frozen=True)
class TorusClass:
    """Coefficients of ``[S^1 x gamma]`` over the basis ``[S^1 x mu(K_j)]``."""

    coefficients: tuple

    def is_nullhomologous(self) -> bool:
        return not any(self.coefficients)


def torus_class(gamma_linking: Sequence[int], num_components: int | None = None) -> TorusClass:
    coeffs = tuple(int(x) for x in gamma_linking)
    if num_components is not None and len(coeffs) != num_components:
        raise ValueError(
            f"expected {num_components} linking numbers, got {len(coeffs)}"
        )
    return TorusClass(coeffs)


def classes_equal(a: TorusClass, b: TorusClass) -> bool:
    if len(a.coefficients) != len(b.coefficients):
        raise ValueError("classes live over different bases")
    return a.coefficients == b.coefficients


# -- concrete hosts ------------------------------------------------------------

NECKLACE_LINKING = ((0, 1, 1), (1, 0, 0), (1, 0, 0))


def necklace_descriptor(fiber_class: Sequence[int] = (1, 0, 0)) -> LinkSurgeryDescriptor:
    """Hopf link H1 u H2 plus a 0-framed push-off H3 of H2."""
    return LinkSurgeryDescriptor(NECKLACE_LINKING, tuple(fiber_class))


def hopf_descriptor(fiber_class: Sequence[int] = (1, 0)) -> LinkSurgeryDescriptor:
    return LinkSurgeryDescriptor(((0, 1), (1, 0)), tuple(fiber_class))


def knot_descriptor() -> LinkSurgeryDescriptor:
    return LinkSurgeryDescriptor(((0,),), (1,))


@dataclass(frozen=True)
class BorromeanFamilyMember:
    """``gamma_p`` inside the necklace, read off the iterated Borromean braid.

    The braid axis is H1; closure components 1 and 2 are H2 and H3, and
    component 0 is ``gamma_p``.
    """

    p: int
    braid: BraidWord
    host_linking: tuple
    gamma_linking: tuple


def borromean_family_member(p: int) -> BorromeanFamilyMember:
    b = borromean_block_braid(p)
    info = closure_info(b)
    full = info.linking_with_axis()  # order: closure components 0,1,2 then axis
    axis = info.num_components
    host = (axis, 1, 2)
    host_linking = tuple(tuple(full[a][c] for c in host) for a in host)
    gamma_linking = tuple(full[0][c] for c in host)
    return BorromeanFamilyMember(p, b, host_linking, gamma_linking)
