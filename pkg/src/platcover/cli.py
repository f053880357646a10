"""
Command-line front end.

    platcover info (FILE | --catalog NAME | --word "2 2" --strands 4)
    platcover specialize (FILE | --catalog NAME | --word ... --strands ...)
    platcover cover genus PLAT-SOURCE (--covering FILE | --p P --weights 1,2)
    platcover cover classify (--covering FILE | --p P --weights ...)
    platcover cover bounds --p P --bridges B [--genus G]
    platcover cover lift-check --p P --weights ... --perm "2 1 4 3"
    platcover catalog list | show NAME

Reports are JSON with sorted keys (``--text`` for key/value lines). Exit codes: 0 success,
1 usage or parse error, 2 precondition violation, 3 internal verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .braid_core import parse_braid, permutation_of, preserves_parity_classes
from .covering import (
    GCD_INTERPRETATION,
    BranchData,
    MonodromyAssignment,
    branch_data_from_special_plat,
    bridge_bound,
    classify,
    euler_characteristic,
    genus_bound,
    heegaard_genus,
    is_connected_cover,
    lift_check,
    p_star,
)
from .errors import BraidParseError, PreconditionError, VerificationError
from .link_invariants import linking_matrix
from .plat import (
    PlatPresentation,
    components,
    exists_orientation_condition2prime,
    is_condition1,
    is_condition2,
    is_condition2prime,
    is_special,
    orient,
    specialize,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def plat_json(plat: PlatPresentation, name: str | None = None) -> dict:
    out = {"strands": plat.strand_count, "word": plat.word.to_ints()}
    if name is not None:
        out["name"] = name
    return out


def parse_plat_json(text: str, source: str = "<plat>") -> tuple[str | None, PlatPresentation]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict) or "strands" not in data or "word" not in data:
        raise UsageError(f"{source}: expected an object with 'strands' and 'word'")
    strands, word = data["strands"], data["word"]
    if isinstance(word, str):
        word = word.split()
    if not isinstance(strands, int) or not isinstance(word, list):
        raise UsageError(f"{source}: 'strands' must be an integer and 'word' a list")
    try:
        braid = parse_braid(" ".join(str(x) for x in word), strands)
    except BraidParseError as exc:
        where = f" (word position {exc.position + 1})" if exc.position is not None else ""
        raise UsageError(f"{source}: {exc}{where}") from None
    return data.get("name"), PlatPresentation(braid)


def parse_seeds(text: str | None) -> dict[int, bool] | None:
    """Parse ``"1:forward,2:backward"``."""
    if not text:
        return None
    seeds = {}
    for item in text.split(","):
        comp, _, direction = item.partition(":")
        if direction not in ("forward", "backward") or not comp.strip().isdigit():
            raise UsageError(f"bad orientation seed {item!r}; use <component>:forward|backward")
        seeds[int(comp)] = direction == "forward"
    return seeds


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"{what} must be integers, got {text!r}") from None


def load_plat(args) -> tuple[str | None, PlatPresentation]:
    if args.catalog:
        try:
            entry = catalog.get(args.catalog)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        return entry.name, entry.plat()
    if args.word is not None:
        if args.strands is None:
            raise UsageError("--word needs --strands")
        try:
            return None, PlatPresentation(parse_braid(args.word, args.strands))
        except BraidParseError as exc:
            raise UsageError(f"--word: {exc}") from None
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        return parse_plat_json(text, args.file)
    raise UsageError("give a plat file, --catalog NAME or --word TEXT --strands 2N")


def load_covering(args) -> tuple[int, list[int]]:
    if args.covering:
        try:
            data = json.loads(Path(args.covering).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.covering}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.covering}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        if not isinstance(data, dict) or not isinstance(data.get("p"), int) \
                or not isinstance(data.get("weights"), list):
            raise UsageError(f"{args.covering}: expected {{\"p\": int, \"weights\": [int, ...]}}")
        return data["p"], [int(w) for w in data["weights"]]
    if args.p is None or args.weights is None:
        raise UsageError("give --covering FILE or both --p and --weights")
    return args.p, _parse_ints(args.weights, "--weights")


def info_report(plat: PlatPresentation, name: str | None = None, seeds=None) -> dict:
    part = components(plat)
    oriented = orient(plat, part, seeds)
    perm = permutation_of(plat.word)
    return {
        "plat": plat_json(plat, name),
        "mu": part.mu,
        "n_j": list(part.counts),
        "components": {"top": list(part.top), "bottom": list(part.bottom)},
        "conditions": {
            "c1": is_condition1(plat, part),
            "c2": is_condition2(plat),
            "c2prime": is_condition2prime(oriented),
            "c2prime_exists": exists_orientation_condition2prime(plat),
        },
        "orientation": {
            "seeds": ["forward" if s else "backward" for s in oriented.seeds()],
            "top_forward": list(oriented.top_forward),
            "bottom_forward": list(oriented.bottom_forward),
        },
        "permutation": list(perm.images),
        "parity_preserving": preserves_parity_classes(perm),
        "lk": linking_matrix(oriented).to_json()["lk"],
    }


def _invariants(plat: PlatPresentation) -> dict:
    oriented = orient(plat)
    return {"mu": oriented.mu, "n_j": list(oriented.partition.counts),
            "lk": linking_matrix(oriented).to_json()["lk"]}


def specialize_report(plat: PlatPresentation, name: str | None = None) -> dict:
    out, trace = specialize(plat)
    part = components(out)
    before, after = _invariants(plat), _invariants(out)
    if before != after:
        raise VerificationError(f"invariants changed: {before} -> {after}")
    return {
        "input": plat_json(plat, name),
        "output": plat_json(out, name),
        "trace": [m.to_json() for m in trace],
        "mu": part.mu,
        "n_j": list(part.counts),
        "conditions": {"c1": is_condition1(out, part), "c2": is_condition2(out)},
        "invariants": {"before": before, "after": after},
    }


def classification_report(p: int, weights) -> dict:
    a = MonodromyAssignment(p, tuple(weights))
    flags = classify(a)
    return {"p": a.p, "weights": list(a.c), "classification": flags.to_json(),
            "finest_class": flags.finest(), "interpretation": GCD_INTERPRETATION}


def bounds_report(p: int, bridges: int, genus: int | None = None) -> dict:
    bound = genus_bound(bridges, p)
    g = bound if genus is None else genus
    return {"p": p, "bridges": bridges, "genus": g,
            "bounds": {"genus_bound": bound, "bridge_bound": bridge_bound(p, g), "p_star": p_star(p)}}


def cover_report(plat: PlatPresentation, p: int, weights, name: str | None = None,
                 auto_specialize: bool = True) -> dict:
    part = components(plat)
    if len(weights) != part.mu:
        raise PreconditionError(f"{len(weights)} weights given for {part.mu} components")
    a = MonodromyAssignment(p, tuple(weights))
    notice = None
    trace = []
    special = plat
    if not is_special(plat, part):
        if not auto_specialize:
            raise PreconditionError(f"{plat} is not special (rerun without --no-specialize)")
        special, trace = specialize(plat)
        notice = "input plat is not special; it was specialized first"
        part = components(special)
    branch = branch_data_from_special_plat(special, part, a)
    surface = euler_characteristic(branch)
    top_weights = branch.weights[0::2]
    if heegaard_genus(p, top_weights) != surface.genus:
        raise VerificationError("genus from the closed formula disagrees with the Euler characteristic")
    classes: dict[str, list[int]] = {}
    for k, w in enumerate(branch.weights, start=1):
        classes.setdefault(str(w), []).append(k)
    flags = classify(a)
    return {
        "plat": plat_json(plat, name),
        "special_plat": plat_json(special, name),
        "specialized": bool(trace) or special != plat,
        "notice": notice,
        "trace": [m.to_json() for m in trace],
        "p": a.p,
        "weights": list(a.c),
        "classification": flags.to_json(),
        "finest_class": flags.finest(),
        "interpretation": GCD_INTERPRETATION,
        "branch_data": branch.to_json(),
        "connected": is_connected_cover(branch),
        "fiber_sizes": list(surface.fiber_sizes),
        "chi": surface.chi,
        "genus": surface.genus,
        "bridges": special.n,
        "bounds": {
            "genus_bound": genus_bound(special.n, a.p),
            "bridge_bound": bridge_bound(a.p, surface.genus),
            "p_star": p_star(a.p),
        },
        "lift_check": {"weight_classes": classes},
    }


def lift_check_report(p: int, weights, perm) -> dict:
    branch = BranchData(p, tuple(weights))
    return {"branch_data": branch.to_json(), "perm": list(perm),
            "lifts": lift_check(perm, branch)}


def catalog_entry_json(entry: catalog.CatalogEntry) -> dict:
    return {"name": entry.name, "strands": entry.strands, "word": list(entry.word),
            "expected_mu": entry.expected_mu,
            "expected_lk": [list(r) for r in entry.expected_lk] if entry.expected_lk else None,
            "description": entry.description}


def render(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict) and value:
            for key in sorted(value):
                walk(f"{prefix}.{key}" if prefix else key, value[key])
        else:
            lines.append(f"{prefix}: {json.dumps(value)}")

    walk("", report)
    return "\n".join(lines) + "\n"


def _add_plat_source(sub):
    sub.add_argument("file", nargs="?", help="plat JSON file")
    sub.add_argument("--catalog", metavar="NAME", help="built-in example")
    sub.add_argument("--word", help="braid word text, e.g. '2 -1 2'")
    sub.add_argument("--strands", type=int, help="strand count 2n for --word")


def _add_covering_source(sub):
    sub.add_argument("--covering", metavar="FILE", help='covering JSON {"p": int, "weights": [...]}')
    sub.add_argument("--p", type=int, help="covering degree")
    sub.add_argument("--weights", help="comma-separated weights")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="platcover", description=__doc__.split("\n\n")[0].strip())
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    parser.set_defaults(fmt="json")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    info = commands.add_parser("info", help="components, conditions and linking matrix")
    _add_plat_source(info)
    info.add_argument("--seed-orientation", metavar="J:DIR,...",
                      help="per-component direction of its lowest top arc (forward|backward)")

    spec = commands.add_parser("specialize", help="rewrite into a special plat")
    _add_plat_source(spec)

    cover = commands.add_parser("cover", help="branched cyclic covering data")
    cover_cmds = cover.add_subparsers(dest="cover_command", required=True, parser_class=_Parser)
    genus = cover_cmds.add_parser("genus", help="Heegaard genus and bounds for a plat and weights")
    _add_plat_source(genus)
    _add_covering_source(genus)
    genus.add_argument("--no-specialize", action="store_true",
                       help="fail on non-special plats instead of specializing them")
    classify_cmd = cover_cmds.add_parser("classify", help="classify component weights")
    _add_covering_source(classify_cmd)
    bounds = cover_cmds.add_parser("bounds", help="genus and bridge bounds")
    bounds.add_argument("--p", type=int, required=True)
    bounds.add_argument("--bridges", type=int, required=True)
    bounds.add_argument("--genus", type=int)
    lift = cover_cmds.add_parser("lift-check", help="does a branch point permutation lift?")
    _add_covering_source(lift)
    lift.add_argument("--perm", required=True, help="1-based images, e.g. '2 1 4 3'")

    cat = commands.add_parser("catalog", help="built-in examples")
    cat_cmds = cat.add_subparsers(dest="catalog_command", required=True, parser_class=_Parser)
    cat_cmds.add_parser("list")
    show = cat_cmds.add_parser("show")
    show.add_argument("name")
    return parser


def run(args) -> dict | list:
    if args.command == "info":
        name, plat = load_plat(args)
        return info_report(plat, name, parse_seeds(args.seed_orientation))
    if args.command == "specialize":
        name, plat = load_plat(args)
        return specialize_report(plat, name)
    if args.command == "cover":
        if args.cover_command == "genus":
            name, plat = load_plat(args)
            p, weights = load_covering(args)
            return cover_report(plat, p, weights, name, auto_specialize=not args.no_specialize)
        if args.cover_command == "classify":
            return classification_report(*load_covering(args))
        if args.cover_command == "bounds":
            return bounds_report(args.p, args.bridges, args.genus)
        p, weights = load_covering(args)
        return lift_check_report(p, weights, _parse_ints(args.perm, "--perm"))
    if args.catalog_command == "list":
        return [catalog_entry_json(e) for _, e in sorted(catalog.CATALOG.items())]
    try:
        return catalog_entry_json(catalog.get(args.name))
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except UsageError as exc:
        print(f"platcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"platcover: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"platcover: internal verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(render(report, args.fmt))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
