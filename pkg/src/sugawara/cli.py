"""Command-line front end.

Subcommands: basis | vectors | verify | center | shift.  Output is JSON
by default (text mode prints elements in the bracketed E[i,j,r][depth]
form for side-by-side reading).  Exit codes: 0 when every check passes,
1 when a mathematical check fails, 2 on usage or parse errors, so CI
can gate on the suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .pbw import element_from_obj, element_text, element_to_obj, get_context
from .pyramid import Pyramid, bracket, form
from .reports import Report
from .shift import (
    a_chi_generators,
    apply_automorphism,
    center_generators,
    chi_from_obj,
    chi_to_obj,
    jacobian_rank,
    random_point,
    rho_chi,
    symbols,
    zseries_eval,
)
from .suga import delta_ladder, phi_table, tau_cross_check
from .verify import (
    annihilation_check,
    centrality_check,
    commutativity_check,
    raising_recursion_check,
)


@dataclass
class Config:
    pyramid: Pyramid
    command: str
    fmt: str = "json"
    chi_path: Optional[str] = None
    z: Optional[Fraction] = None
    seed: int = 0
    workers: int = 1
    s_max: Optional[int] = None
    automorphism_c: Optional[Fraction] = None


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sugawara",
        description=(
            "Exact Segal-Sugawara vectors and critical-level center for the "
            "centralizer of a nilpotent matrix given by a pyramid."
        ),
    )
    ap.add_argument(
        "--pyramid",
        required=True,
        help="comma-separated non-decreasing row lengths, e.g. 2,3,4",
    )
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--chi", help='JSON file {"E[i,j,r]": "p/q", ...}')
    ap.add_argument("--z", help="nonzero rational; evaluate the z-grading there")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--s-max", dest="s_max", type=int, default=None)
    ap.add_argument(
        "--automorphism-c",
        dest="automorphism_c",
        help="rational c for the diagonal-shift automorphism of cmd center",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for name, doc in (
        ("basis", "list the basis, nonzero brackets and form values"),
        ("vectors", "the Segal-Sugawara vector table"),
        ("verify", "run the full verification battery"),
        ("center", "generators of the center of the enveloping algebra"),
        ("shift", "shift-of-argument generators, commutativity, Jacobian rank"),
    ):
        sub.add_parser(name, help=doc)
    return ap


def parse_config(args: argparse.Namespace) -> Config:
    try:
        pyramid = Pyramid.parse(args.pyramid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    z = None
    if args.z is not None:
        try:
            z = Fraction(args.z)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse --z {args.z!r}: {exc}") from None
        if z == 0:
            raise UsageError("--z must be nonzero")
    c = None
    if args.automorphism_c is not None:
        try:
            c = Fraction(args.automorphism_c)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(
                f"cannot parse --automorphism-c {args.automorphism_c!r}: {exc}"
            ) from None
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    return Config(
        pyramid=pyramid,
        command=args.command,
        fmt=args.format,
        chi_path=args.chi,
        z=z,
        seed=args.seed,
        workers=args.workers,
        s_max=args.s_max,
        automorphism_c=c,
    )


def load_chi(cfg: Config):
    if cfg.chi_path is None:
        return {}
    try:
        with open(cfg.chi_path) as fh:
            obj = json.load(fh)
        return chi_from_obj(cfg.pyramid, obj)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot load chi from {cfg.chi_path}: {exc}") from None


# -- commands return (json-object, list-of-reports)


def cmd_basis(cfg: Config) -> Tuple[dict, List[Report]]:
    p = cfg.pyramid
    basis = p.basis()
    brackets = []
    for a in basis:
        for b in basis:
            combo = bracket(p, a, b)
            if combo.is_zero():
                continue
            brackets.append(
                {
                    "a": a.text(),
                    "b": b.text(),
                    "terms": [
                        {"gen": g.text(), "coeff": str(Fraction(c))}
                        for g, c in combo.items()
                    ],
                }
            )
    form_values = []
    for a in basis:
        for b in basis:
            v = form(p, a, b)
            if v:
                form_values.append({"a": a.text(), "b": b.text(), "value": str(v)})
    obj = {
        "pyramid": str(p),
        "dimension": p.dim(),
        "basis": [g.text() for g in basis],
        "brackets": brackets,
        "form": form_values,
    }
    return obj, []


def cmd_vectors(cfg: Config) -> Tuple[dict, List[Report]]:
    table = phi_table(cfg.pyramid)
    chosen = set(table.selected)
    vectors = [
        {
            "k": k,
            "r": r,
            "selected": (k, r) in chosen,
            "element": element_to_obj(elem),
        }
        for (k, r), elem in sorted(table.entries.items())
    ]
    return {"pyramid": str(cfg.pyramid), "vectors": vectors}, []


def cmd_verify(cfg: Config) -> Tuple[dict, List[Report]]:
    p = cfg.pyramid
    ctx = get_context(p, "affine")
    table = phi_table(p)
    labeled = [(f"phi[{k},{r}]", e) for k, r, e in table.selected_entries()]
    reports = [
        annihilation_check(p, s_max=cfg.s_max, workers=cfg.workers),
        delta_ladder(p),
        tau_cross_check(p),
        commutativity_check(labeled, ctx, workers=cfg.workers),
        raising_recursion_check(p, seed=cfg.seed, workers=cfg.workers),
    ]
    obj = {"pyramid": str(p), "reports": [r.to_obj() for r in reports]}
    return obj, reports


def cmd_center(cfg: Config) -> Tuple[dict, List[Report]]:
    p = cfg.pyramid
    gens = center_generators(p)
    c = cfg.automorphism_c
    if c is not None:
        gens = [(k, r, apply_automorphism(p, elem, c)) for k, r, elem in gens]
    labeled = [(f"Phi[{k},{r}]", elem) for k, r, elem in gens]
    report = centrality_check(p, labeled, workers=cfg.workers)
    obj = {
        "pyramid": str(p),
        "automorphism_c": None if c is None else str(c),
        "generators": [
            {"k": k, "r": r, "element": element_to_obj(elem)} for k, r, elem in gens
        ],
        "centrality": report.to_obj(),
    }
    return obj, [report]


def cmd_shift(cfg: Config) -> Tuple[dict, List[Report]]:
    p = cfg.pyramid
    fin = get_context(p, "finite")
    chi = load_chi(cfg)
    gens = a_chi_generators(p, chi)
    labeled = [(f"phi[{g.k},{g.r}]({g.m})", g.element) for g in gens]
    report = commutativity_check(labeled, fin, workers=cfg.workers)
    report.seed = cfg.seed
    point = random_point(p, cfg.seed)
    rank = jacobian_rank(p, symbols(p), point)
    obj = {
        "pyramid": str(p),
        "seed": cfg.seed,
        "chi": chi_to_obj(chi),
        "generators": [
            {"k": g.k, "r": g.r, "m": g.m, "element": element_to_obj(g.element)}
            for g in gens
        ],
        "commutativity": report.to_obj(),
        "jacobian_rank": rank,
        "z": None if cfg.z is None else str(cfg.z),
    }
    if cfg.z is not None:
        table = phi_table(p)
        evaluated = []
        for k, r, elem in table.selected_entries():
            value = zseries_eval(p, rho_chi(elem, chi), cfg.z)
            evaluated.append({"k": k, "r": r, "element": element_to_obj(value)})
        obj["evaluated"] = evaluated
    return obj, [report]


COMMANDS = {
    "basis": cmd_basis,
    "vectors": cmd_vectors,
    "verify": cmd_verify,
    "center": cmd_center,
    "shift": cmd_shift,
}


# -- text rendering


def _combo_text(terms: List[dict]) -> str:
    parts: List[str] = []
    for t in terms:
        c = Fraction(t["coeff"])
        mag = abs(c)
        body = t["gen"] if mag == 1 else f"{mag} {t['gen']}"
        if not parts:
            parts.append(body if c > 0 else f"- {body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def _render_report_text(out, robj: dict):
    counts = {"pass": 0, "fail": 0, "vacuous": 0}
    for case in robj["cases"]:
        counts[case["status"]] += 1
    status = "PASS" if counts["fail"] == 0 else "FAIL"
    out.append(
        f"[{status}] {robj['check']}: {counts['pass']} pass, "
        f"{counts['fail']} fail, {counts['vacuous']} vacuous"
    )
    for case in robj["cases"]:
        if case["status"] == "fail":
            key = {k: v for k, v in case.items() if k not in ("status", "diff")}
            out.append(f"    FAIL {key}")


def render_text(cfg: Config, obj: dict) -> str:
    p = cfg.pyramid
    ctx = get_context(p, "affine")
    fin = get_context(p, "finite")
    out: List[str] = [f"pyramid {obj['pyramid']}"]
    if cfg.command == "basis":
        out.append(f"dimension {obj['dimension']}")
        out.append("basis: " + " ".join(obj["basis"]))
        out.append("nonzero brackets:")
        for item in obj["brackets"]:
            out.append(
                f"  [{item['a']}, {item['b']}] = {_combo_text(item['terms'])}"
            )
        out.append("nonzero form values:")
        for item in obj["form"]:
            out.append(f"  <{item['a']}, {item['b']}> = {item['value']}")
    elif cfg.command == "vectors":
        for vec in obj["vectors"]:
            tag = "selected" if vec["selected"] else "extra"
            elem = element_from_obj(ctx, vec["element"])
            out.append(f"phi[k={vec['k']},r={vec['r']}] ({tag}): {element_text(elem)}")
    elif cfg.command == "verify":
        for robj in obj["reports"]:
            _render_report_text(out, robj)
    elif cfg.command == "center":
        if obj["automorphism_c"] is not None:
            out.append(f"automorphism c = {obj['automorphism_c']}")
        for item in obj["generators"]:
            elem = element_from_obj(fin, item["element"])
            out.append(f"Phi[k={item['k']},r={item['r']}]: {element_text(elem)}")
        _render_report_text(out, obj["centrality"])
    elif cfg.command == "shift":
        out.append(f"seed {obj['seed']}")
        if obj["chi"]:
            out.append(
                "chi: " + ", ".join(f"{k} -> {v}" for k, v in obj["chi"].items())
            )
        else:
            out.append("chi: 0")
        for item in obj["generators"]:
            elem = element_from_obj(fin, item["element"])
            out.append(
                f"phi[k={item['k']},r={item['r']}]({item['m']}): {element_text(elem)}"
            )
        _render_report_text(out, obj["commutativity"])
        out.append(f"jacobian rank {obj['jacobian_rank']}")
        if obj.get("evaluated") is not None:
            out.append(f"evaluated at z = {obj['z']}:")
            for item in obj["evaluated"]:
                elem = element_from_obj(fin, item["element"])
                out.append(
                    f"  phi[k={item['k']},r={item['r']}]: {element_text(elem)}"
                )
    return "\n".join(out)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = parse_config(args)
        obj, reports = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(render_text(cfg, obj))
    return 0 if all(r.passed() for r in reports) else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
