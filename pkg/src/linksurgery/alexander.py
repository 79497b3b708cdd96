"""Alexander polynomials of braid closures, closed forms and Torres checks."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .braid import BraidWord, closure_info
from .fox import GroupPresentation, alexander_matrix, axis_presentation, closure_presentation
from .laurent import (
    LaurentPoly,
    det,
    equal_up_to_units,
    exact_div,
    identity_matrix,
    matrix_product,
    normalize_symmetric,
    substitute,
)

ROUTES = ("minor-division", "burau", "closed-form")


@dataclass(frozen=True)
class AlexanderResult:
    poly: LaurentPoly
    num_components: int
    route: str


def _t_minus_one(nvars: int, i: int) -> LaurentPoly:
    return LaurentPoly.var(nvars, i) - 1


def alexander_from_presentation(
    pres: GroupPresentation, column: int = 0, method: str = "auto"
) -> LaurentPoly:
    """Normalized Alexander polynomial from a deficiency-one presentation.

    Deletes generator column ``column`` (0-based), takes the determinant and,
    for links, divides exactly by ``t_c - 1`` where ``c`` is that
    generator's component.
    """
    n = pres.num_components
    if pres.num_generators - len(pres.relators) != 1:
        raise ValueError("minor-division needs a presentation of deficiency one")
    A = alexander_matrix(pres)
    minor = [row[:column] + row[column + 1:] for row in A]
    d = det(minor, nvars=n, method=method)
    if n >= 2:
        d = exact_div(d, _t_minus_one(n, pres.coloring[column]))
    return normalize_symmetric(d)


def alexander_from_braid(b: BraidWord, column: int = 0, check_columns: bool = False) -> AlexanderResult:
    """Multivariable Alexander polynomial of the closure of ``b``.

    Variables follow the component numbering of :func:`closure_info`. With
    ``check_columns`` every column choice is computed and compared.
    """
    pres = closure_presentation(b)
    poly = alexander_from_presentation(pres, column)
    if check_columns:
        for j in range(pres.num_generators):
            other = alexander_from_presentation(pres, j)
            if not equal_up_to_units(poly, other):
                raise AssertionError(
                    f"column {j} gives {other}, column {column} gives {poly}"
                )
    return AlexanderResult(poly, pres.num_components, "minor-division")


def alexander_with_axis(b: BraidWord, column: int | None = None) -> AlexanderResult:
    """Alexander polynomial of the closure together with its braid axis.

    The axis is the last variable. By default the axis column is deleted.
    """
    pres = axis_presentation(b)
    if column is None:
        column = pres.num_generators - 1
    poly = alexander_from_presentation(pres, column)
    return AlexanderResult(poly, pres.num_components, "minor-division")


# -- Burau route -----------------------------------------------------------

def _reduced_burau_block(letter: int, k: int) -> list[list[LaurentPoly]]:
    t = LaurentPoly.var(1, 0)
    tinv = LaurentPoly.var(1, 0, -1)
    one, zero = LaurentPoly.constant(1, 1), LaurentPoly.zero(1)
    if letter > 0:
        block = [[one, t, zero], [zero, -t, zero], [zero, one, one]]
    else:
        block = [[one, one, zero], [zero, -tinv, zero], [zero, tinv, one]]
    M = identity_matrix(k - 1, 1)
    i = abs(letter)  # block rows/cols i-2, i-1, i (0-based), clipped
    for r in range(3):
        for c in range(3):
            rr, cc = i - 2 + r, i - 2 + c
            if 0 <= rr < k - 1 and 0 <= cc < k - 1:
                M[rr][cc] = block[r][c]
    return M


def reduced_burau(b: BraidWord) -> list[list[LaurentPoly]]:
    """Reduced Burau matrix of the braid, size ``(k-1) x (k-1)`` over ``Z[t^±1]``."""
    k = b.strands
    M = identity_matrix(k - 1, 1)
    for letter in b.letters:
        M = matrix_product(M, _reduced_burau_block(letter, k), 1)
    return M


def alexander_burau(b: BraidWord) -> LaurentPoly:
    """Knot Alexander polynomial ``det(I - B) (t - 1) / (t^k - 1)``, normalized."""
    info = closure_info(b)
    if info.num_components != 1:
        raise ValueError("the Burau route is implemented for knot closures only")
    k = b.strands
    if k == 1:
        return LaurentPoly.constant(1, 1)
    B = reduced_burau(b)
    eye = identity_matrix(k - 1, 1)
    I_minus_B = [[eye[i][j] - B[i][j] for j in range(k - 1)] for i in range(k - 1)]
    d = det(I_minus_B, nvars=1)
    t = LaurentPoly.var(1, 0)
    return normalize_symmetric(exact_div(d * (t - 1), t ** k - 1))


# -- closed forms ------------------------------------------------------------

def torus_knot_alexander(p: int, q: int) -> LaurentPoly:
    """``(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))``, normalized."""
    if p < 1 or q < 1:
        raise ValueError("torus knot parameters must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is not a knot: parameters are not coprime")
    t = LaurentPoly.var(1, 0)
    num = (t ** (p * q) - 1) * (t - 1)
    den = (t ** p - 1) * (t ** q - 1)
    return normalize_symmetric(exact_div(num, den))


def cable_alexander(companion: LaurentPoly, p: int, q: int) -> LaurentPoly:
    """Satellite formula for the (p, q)-cable: ``companion(t^p) * Delta_T(p,q)(t)``."""
    if companion.nvars != 1:
        raise ValueError("companion must be a knot polynomial in one variable")
    if gcd(p, q) != 1:
        raise ValueError(f"({p},{q}) cable needs coprime parameters")
    t = LaurentPoly.var(1, 0)
    lifted = substitute(companion, [t ** p])
    return normalize_symmetric(lifted * torus_knot_alexander(p, abs(q) or 1))


# -- Torres --------------------------------------------------------------------

def torres_specialize(link_poly: LaurentPoly, component: int) -> LaurentPoly:
    """Set ``t_{component+1} = 1`` and drop that variable."""
    n = link_poly.nvars
    if n < 2:
        raise ValueError("Torres specialization needs at least two variables")
    if not 0 <= component < n:
        raise IndexError("component out of range")
    images = [
        LaurentPoly.constant(n - 1, 1) if i == component
        else LaurentPoly.var(n - 1, i if i < component else i - 1)
        for i in range(n)
    ]
    return substitute(link_poly, images)


def torres_prediction(sublink_poly: LaurentPoly, linking: Sequence[int]) -> LaurentPoly:
    """Right-hand side of the Torres formula after removing one component.

    ``linking[i]`` is the linking number of the removed component with the
    i-th remaining one. One remaining component gives
    ``(t^l - 1)/(t - 1) * Delta``; more give ``(prod t_i^l_i - 1) * Delta``.
    """
    m = sublink_poly.nvars
    if len(linking) != m:
        raise ValueError("one linking number per remaining component is required")
    mono = LaurentPoly.monomial(m, list(linking))
    if m == 1:
        factor = exact_div(mono - 1, LaurentPoly.var(1, 0) - 1)
    else:
        factor = mono - 1
    return factor * sublink_poly


def torres_holds(link_poly: LaurentPoly, component: int, sublink_poly: LaurentPoly, linking: Sequence[int]) -> bool:
    return equal_up_to_units(
        torres_specialize(link_poly, component), torres_prediction(sublink_poly, linking)
    )


def nonzero_term_count(p: LaurentPoly) -> int:
    return len(p)
