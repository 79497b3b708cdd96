"""Seiberg-Witten polynomials of link surgery manifolds and basic-class counts.

The SW polynomial is the product of the relative invariants of the glued
pieces with the Alexander polynomial evaluated at squared variables. Relative
invariants are inputs; a non-constant one gets its own fresh variable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .alexander import (
    alexander_from_braid,
    cable_alexander,
    nonzero_term_count,
    torres_prediction,
    torus_knot_alexander,
)
from .braid import BraidWord, FamilyMember, cable_family_descriptor, cable_with_core, torus_braid
from .laurent import LaurentPoly, substitute
from .surgery import LinkSurgeryDescriptor, hopf_descriptor

TREFOIL = BraidWord(2, (1, 1, 1))
# beyond this the braid pipeline for the pure-cable family gets slow
FULL_DELTA_PMAX = 6


@dataclass(frozen=True)
class SWPolynomial:
    poly: LaurentPoly
    variables: tuple
    descriptor: LinkSurgeryDescriptor
    delta: LaurentPoly


def sw_polynomial(desc: LinkSurgeryDescriptor, delta: LaurentPoly) -> SWPolynomial:
    n = desc.num_components
    if n < 2:
        raise ValueError("the product formula applies to links with at least two components")
    if delta.nvars != n:
        raise ValueError(f"Alexander polynomial has {delta.nvars} variables, link has {n} components")
    extra = [i for i, sw in enumerate(desc.relative_sw) if not sw.is_constant()]
    total = n + len(extra)
    squares = [LaurentPoly.var(total, i, 2) for i in range(n)]
    poly = substitute(delta, squares)
    for i, sw in enumerate(desc.relative_sw):
        if i in extra:
            poly = poly * sw.embed(total, [n + extra.index(i)])
        else:
            poly = poly * sw.evaluate_at_one()
    names = tuple(f"t{i + 1}" for i in range(n)) + tuple(f"s{i + 1}" for i in extra)
    return SWPolynomial(poly, names, desc, delta)


def basic_class_count(sw: SWPolynomial | LaurentPoly) -> int:
    poly = sw.poly if isinstance(sw, SWPolynomial) else sw
    return nonzero_term_count(poly)


# -- family sweeps -------------------------------------------------------------

def gamma_alexander(member: FamilyMember) -> LaurentPoly:
    """Alexander polynomial of ``gamma_p`` as a knot in S^3."""
    if member.gamma_kind == "torus":
        return torus_knot_alexander(*member.gamma_params)
    p, q = member.gamma_params
    return cable_alexander(torus_knot_alexander(2, 3), p, q)


def torres_reduction(member: FamilyMember, three_component: bool) -> LaurentPoly:
    """Specialization at ``t_K = 1`` of the family link's Alexander polynomial.

    Two components (``K u gamma_p``): ``(t^lk - 1)/(t - 1) Delta_gamma(t)``.
    Three components (``K u M u gamma_p`` with ``M`` a meridian of ``K``):
    ``(t_M^lk(K,M) t_gamma^lk(K,gamma) - 1) Delta_{M u gamma}``, where
    ``Delta_{M u gamma}(t_M, t_gamma) = Delta_gamma(t_gamma)`` because ``M``
    is also a meridian of ``gamma_p``.
    """
    dg = gamma_alexander(member)
    if not three_component:
        return torres_prediction(dg, [member.linking["K"]])
    pair = dg.embed(2, [1])
    return torres_prediction(pair, [1, member.linking["K"]])


def family_link_braid(member: FamilyMember) -> BraidWord | None:
    """Braid of ``K u gamma_p`` when the family's link is known exactly."""
    if member.family == "pure-cable":
        return cable_with_core(TREFOIL, member.p)
    return None


@dataclass(frozen=True)
class BetaRow:
    p: int
    gamma: str
    lower_bound: int
    beta: int | None

    def to_dict(self) -> dict:
        return {"p": self.p, "gamma": self.gamma, "lower_bound": self.lower_bound, "beta": self.beta}


@dataclass(frozen=True)
class BetaTable:
    family: str
    three_component: bool
    rows: tuple

    def lower_bounds(self) -> list[int]:
        return [r.lower_bound for r in self.rows]

    def strictly_increasing(self) -> bool:
        lb = self.lower_bounds()
        return all(a < b for a, b in zip(lb, lb[1:]))

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "components": 3 if self.three_component else 2,
            "rows": [r.to_dict() for r in self.rows],
        }


def beta_sweep(
    family: str,
    p_values: Iterable[int],
    host: LinkSurgeryDescriptor | None = None,
    three_component: bool | None = None,
) -> BetaTable:
    """Torres lower bounds (and exact counts where available) for each ``p``.

    ``three_component`` defaults to True for the trefoil-fiber family, whose
    curves are nullhomologous in the knot complement alone. ``beta`` is
    filled in only when the full link polynomial comes out of the braid
    pipeline (pure-cable family, ``p <= FULL_DELTA_PMAX``).
    """
    ps = list(p_values)
    if not ps:
        raise ValueError("p range is empty")
    if three_component is None:
        three_component = family == "trefoil-fiber"
    if host is None:
        host = hopf_descriptor()
    rows = []
    for p in ps:
        member = cable_family_descriptor(p, family)
        reduced = torres_reduction(member, three_component)
        beta = None
        b = family_link_braid(member)
        if b is not None and not three_component and p <= FULL_DELTA_PMAX:
            delta = alexander_from_braid(b).poly
            beta = basic_class_count(sw_polynomial(host, delta))
        rows.append(BetaRow(p, member.gamma_label, nonzero_term_count(reduced), beta))
    return BetaTable(family, three_component, tuple(rows))


def torus_family_term_counts(p_values: Sequence[int]) -> list[int]:
    """Term counts of the T(p, p+1) Alexander polynomials."""
    return [nonzero_term_count(torus_knot_alexander(p, p + 1)) for p in p_values]


def torus_braid_family(p: int) -> BraidWord:
    """Braid of the T(p, p+1) curve (p+1 strands)."""
    return torus_braid(p, p + 1)
