"""Command-line entry point: ``linksurgery <command> ...``.

Exit status is 0 on success, 1 on domain errors (non-coprime parameters,
enumeration budget exceeded, ...) and 2 on input that cannot be parsed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .alexander import alexander_burau, alexander_from_braid, nonzero_term_count, torus_knot_alexander
from .braid import FAMILIES, BraidWord
from .fox import GroupPresentation, closure_presentation
from .laurent import NotDivisibleError, equal_up_to_units
from .quotients import (
    DEFAULT_TARGETS,
    BudgetExceeded,
    abelianization_invariants,
    default_budget,
    distinguish_family,
    group_by_name,
    hom_count,
    surgery_quotient,
)
from .surgery import FiberDisjointError, LinkSurgeryDescriptor, slope, torus_class
from .swcount import beta_sweep

TREFOIL_TEXT = "strands=2; 1 1 1"
UNKNOT_TEXT = "strands=1;"


class InputError(ValueError):
    """Unparseable command input (exit status 2)."""


@dataclass
class RunConfig:
    command: str
    options: dict = field(default_factory=dict)
    output_format: str = "text"
    budget: int = 0

    def __post_init__(self):
        if self.budget <= 0:
            self.budget = default_budget()


# -- input helpers -------------------------------------------------------------

def _read_inline_or_file(value: str) -> str:
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def parse_braid(value: str) -> BraidWord:
    try:
        return BraidWord.parse(_read_inline_or_file(value))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_presentation(value: str) -> GroupPresentation:
    try:
        return GroupPresentation.parse(_read_inline_or_file(value))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_json_value(value: str, what: str):
    try:
        return json.loads(_read_inline_or_file(value))
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: {exc}") from exc


def parse_surgery(value: str) -> int:
    """``"1/p"`` or ``"-1/p"`` -> the integer ``p`` of the relator ``mu lambda^p``."""
    num, sep, den = value.partition("/")
    try:
        num_i = int(num)
        den_i = int(den) if sep else 1
    except ValueError as exc:
        raise InputError(f"surgery coefficient {value!r} is not of the form 1/p") from exc
    if abs(num_i) != 1:
        raise InputError(f"surgery coefficient {value!r} must have numerator 1 or -1")
    return num_i * den_i


def parse_targets(value: str):
    try:
        return [group_by_name(name) for name in value.split(",") if name.strip()]
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- commands --------------------------------------------------------------

def cmd_alex(cfg: RunConfig) -> dict:
    b = parse_braid(cfg.options["braid"])
    route = cfg.options.get("route", "minor")
    out = {"braid": b.to_text(), "routes": {}}
    minor = None
    if route in ("minor", "both"):
        res = alexander_from_braid(b)
        minor = res.poly
        out["components"] = res.num_components
        out["routes"]["minor-division"] = {"text": res.poly.to_text(), "json": res.poly.to_json_obj(),
                                           "terms": nonzero_term_count(res.poly)}
    if route in ("burau", "both"):
        poly = alexander_burau(b)
        out.setdefault("components", 1)
        out["routes"]["burau"] = {"text": poly.to_text(), "json": poly.to_json_obj(),
                                  "terms": nonzero_term_count(poly)}
        if minor is not None:
            out["routes_agree"] = equal_up_to_units(minor, poly)
    return out


def cmd_sweep(cfg: RunConfig) -> dict:
    o = cfg.options
    pmin, pmax = o.get("pmin", 1), o["pmax"]
    if pmax < pmin:
        raise ValueError("pmax must be at least pmin")
    three = True if o.get("three_component") else None
    table = beta_sweep(o["family"], range(pmin, pmax + 1), three_component=three)
    out = table.to_dict()
    out["strictly_increasing"] = table.strictly_increasing()
    return out


def cmd_slope(cfg: RunConfig) -> dict:
    o = cfg.options
    link = parse_json_value(o["link"], "--link")
    m = parse_json_value(o["m"], "--m")
    try:
        desc = LinkSurgeryDescriptor(link, m)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    comps = [o["component"] - 1] if o.get("component") else range(desc.num_components)
    return {"slopes": [slope(desc, i).to_dict() for i in comps]}


def cmd_homology(cfg: RunConfig) -> dict:
    lk = parse_json_value(cfg.options["lk"], "--lk")
    if not isinstance(lk, list) or not all(isinstance(x, int) for x in lk):
        raise InputError("--lk must be a JSON list of integers")
    cls = torus_class(lk)
    return {"class": list(cls.coefficients), "nullhomologous": cls.is_nullhomologous()}


def cmd_pi1(cfg: RunConfig) -> dict:
    o = cfg.options
    targets = parse_targets(o.get("targets") or ",".join(DEFAULT_TARGETS))
    if o.get("presentation"):
        base = parse_presentation(o["presentation"])
        source = base.to_text()
    else:
        b = parse_braid(o.get("braid") or TREFOIL_TEXT)
        base = closure_presentation(b)
        source = b.to_text()
    if o.get("family"):
        pmax = o.get("pmax") or 4
        ps = list(range(1, pmax + 1))
        groups = [surgery_quotient(base, p) for p in ps]
        part = distinguish_family(groups, targets, [f"1/{p}" for p in ps], cfg.budget)
        return {"source": source, "partition": part.to_dict()}
    g = base
    label = "complement"
    if o.get("surgery"):
        p = parse_surgery(o["surgery"])
        g = surgery_quotient(base, p)
        label = f"1/{p} surgery"
    reports = [hom_count(g, G, cfg.budget, label).to_dict() for G in targets]
    return {
        "source": source,
        "presentation": g.to_text(),
        "abelianization": abelianization_invariants(g),
        "homs": reports,
    }


def reproduce_paper(budget: int | None = None) -> dict:
    """Composite report: torus-knot growth, Torres bounds, controls, quotients."""
    budget = budget or default_budget()
    growth = []
    for p in range(1, 11):
        d = torus_knot_alexander(p, p + 1)
        growth.append({"p": p, "alexander": d.to_text(), "terms": nonzero_term_count(d)})
    two = beta_sweep("cable", range(1, 11), three_component=False)
    three = beta_sweep("trefoil-fiber", range(1, 11), three_component=True)
    bounds = [
        {"p": a.p, "two_component": a.lower_bound, "three_component": b.lower_bound}
        for a, b in zip(two.rows, three.rows)
    ]
    targets = [group_by_name(n) for n in DEFAULT_TARGETS]
    unknot = closure_presentation(BraidWord.parse(UNKNOT_TEXT))
    controls = []
    for p in range(1, 6):
        g = surgery_quotient(unknot, p)
        controls.append({
            "p": p,
            "abelianization": abelianization_invariants(g),
            "homs": {G.name: hom_count(g, G, budget).total for G in targets},
        })
    trefoil = closure_presentation(BraidWord.parse(TREFOIL_TEXT))
    quotient_rows = []
    groups = []
    for p in range(1, 5):
        g = surgery_quotient(trefoil, p)
        groups.append(g)
        quotient_rows.append({
            "p": p,
            "abelianization": abelianization_invariants(g),
            "homs": {G.name: hom_count(g, G, budget).total for G in targets},
        })
    part = distinguish_family(groups, targets, [f"1/{p}" for p in range(1, 5)], budget)
    return {
        "a_torus_growth": growth,
        "b_torres_bounds": bounds,
        "c_unknot_controls": controls,
        "d_trefoil_quotients": {"rows": quotient_rows, "partition": part.to_dict()},
    }


def cmd_reproduce(cfg: RunConfig) -> dict:
    return reproduce_paper(cfg.budget)


COMMANDS = {
    "alex": cmd_alex,
    "sweep": cmd_sweep,
    "slope": cmd_slope,
    "homology": cmd_homology,
    "pi1": cmd_pi1,
    "reproduce-paper": cmd_reproduce,
}


# -- text rendering ------------------------------------------------------------

def _render_text(command: str, data: dict) -> str:
    lines: list[str] = []
    if command == "alex":
        lines.append(f"braid: {data['braid']}  components: {data['components']}")
        for name, r in data["routes"].items():
            lines.append(f"{name}: {r['text']}  ({r['terms']} terms)")
            lines.append(f"{name} json: {json.dumps(r['json'], separators=(',', ':'))}")
        if "routes_agree" in data:
            lines.append(f"routes agree up to units: {data['routes_agree']}")
    elif command == "sweep":
        lines.append(f"family: {data['family']}  components: {data['components']}")
        lines.append(f"{'p':>3}  {'lower':>6}  {'beta':>5}  gamma")
        for r in data["rows"]:
            beta = "-" if r["beta"] is None else str(r["beta"])
            lines.append(f"{r['p']:>3}  {r['lower_bound']:>6}  {beta:>5}  {r['gamma']}")
        lines.append(f"strictly increasing: {data['strictly_increasing']}")
    elif command == "slope":
        for s in data["slopes"]:
            mu, lam = s["sigma"]
            lines.append(
                f"component {s['component'] + 1}: {s['d']} * sigma = "
                f"{s['mu_coeff']} mu + {s['lambda_coeff']} lambda;  sigma = ({mu}, {lam})"
            )
    elif command == "homology":
        lines.append(f"[S^1 x gamma] = {data['class']}  nullhomologous: {data['nullhomologous']}")
    elif command == "pi1":
        lines.append(f"source: {data['source']}")
        if "partition" in data:
            part = data["partition"]
            lines.append("targets: " + ", ".join(part["targets"]))
            for m in part["members"]:
                lines.append(f"  {m['label']:>6}: {m['counts']}")
            lines.append("blocks: " + " | ".join(", ".join(b) for b in part["blocks"]))
            lines.append(part["note"])
        else:
            lines.append(f"presentation: {data['presentation']}")
            lines.append(f"H1 invariants: {data['abelianization']}")
            for r in data["homs"]:
                lines.append(
                    f"  {r['target']:>4}: {r['total']} homomorphisms, "
                    f"{r['nonabelian_image']} with nonabelian image"
                )
    elif command == "reproduce-paper":
        lines.append("(a) Alexander polynomials of T(p,p+1)")
        for r in data["a_torus_growth"]:
            lines.append(f"  p={r['p']:<2} terms={r['terms']:<3} {r['alexander']}")
        lines.append("(b) Torres lower bounds on basic classes")
        for r in data["b_torres_bounds"]:
            lines.append(f"  p={r['p']:<2} 2-component={r['two_component']:<3} 3-component={r['three_component']}")
        lines.append("(c) unknot surgery quotients (negative control)")
        for r in data["c_unknot_controls"]:
            lines.append(f"  1/{r['p']}: H1={r['abelianization']} homs={r['homs']}")
        lines.append("(d) trefoil surgery quotients")
        for r in data["d_trefoil_quotients"]["rows"]:
            lines.append(f"  1/{r['p']}: H1={r['abelianization']} homs={r['homs']}")
        part = data["d_trefoil_quotients"]["partition"]
        lines.append("  blocks: " + " | ".join(", ".join(b) for b in part["blocks"]))
        lines.append("  " + part["note"])
    return "\n".join(lines)


def render(command: str, data: dict, output_format: str) -> str:
    if output_format == "json":
        return json.dumps(data, indent=2, sort_keys=True)
    return _render_text(command, data)


def run(cfg: RunConfig, stream=None) -> int:
    stream = stream or sys.stdout
    try:
        data = COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, FiberDisjointError, NotDivisibleError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(render(cfg.command, data, cfg.output_format), file=stream)
    return 0


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linksurgery", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--budget", type=int, default=0,
                        help="hom enumeration budget (default: $LINKSURGERY_HOM_BUDGET or 3600)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alex", help="Alexander polynomial of a braid closure")
    p.add_argument("--braid", required=True, help='file or inline word, e.g. "strands=3; 1 2 1 2"')
    p.add_argument("--route", choices=("minor", "burau", "both"), default="minor")

    p = sub.add_parser("sweep", help="basic-class lower bounds over a curve family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--pmin", type=int, default=1)
    p.add_argument("--three-component", action="store_true")

    p = sub.add_parser("slope", help="fiber slopes on the boundary tori")
    p.add_argument("--link", required=True, help="linking matrix as JSON")
    p.add_argument("--m", required=True, help="fiber class as a JSON list")
    p.add_argument("--component", type=int, help="1-based component (default: all)")

    p = sub.add_parser("homology", help="homology class of S^1 x gamma")
    p.add_argument("--lk", required=True, help="linking numbers of gamma as a JSON list")

    p = sub.add_parser("pi1", help="surgery quotients and finite-quotient counts")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--braid", help="knot braid (default: trefoil 1 1 1)")
    src.add_argument("--presentation", help='e.g. "gens=2; rel= 1 2 1 -2 -1 -2; color= 1 1"')
    p.add_argument("--surgery", help="slope 1/p")
    p.add_argument("--targets", default=",".join(DEFAULT_TARGETS))
    p.add_argument("--family", action="store_true", help="partition the 1/p quotients, p = 1..pmax")
    p.add_argument("--pmax", type=int, default=4)

    sub.add_parser("reproduce-paper", help="growth table, Torres bounds and surgery controls")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    options = {k: v for k, v in vars(args).items() if k not in ("command", "format", "budget")}
    try:
        cfg = RunConfig(args.command, options, args.format, args.budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
