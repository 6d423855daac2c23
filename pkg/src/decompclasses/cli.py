"""Command-line front end: ``decompclasses <verb> ...``.

Exit codes: 0 success, 2 usage error, 3 verification mismatch,
4 inconclusive sampling.  The default seed comes from ``DECOMPCLASSES_SEED``.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from pathlib import Path

from . import engine, oracle, root_datum
from .fields import check_characteristic
from .micro import pgl2_micro
from .partitions import Partition, centralizer_dim, compositions, induce, orbit_dim, partitions_of

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INCONCLUSIVE = 0, 2, 3, 4
SEED_ENV = "DECOMPCLASSES_SEED"


class UsageError(Exception):
    pass


class Mismatch(Exception):
    def __init__(self, text: str):
        super().__init__("verification mismatch")
        self.text = text


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _positive_n(n: int) -> int:
    if n < 1:
        raise UsageError(f"--n must be a positive integer (got {n})")
    if n > engine.MAX_CLOSURE_N:
        raise UsageError(
            f"n = {n} is beyond the supported bound n <= {engine.MAX_CLOSURE_N} for the closure order"
        )
    return n


# --- parsing helpers -----------------------------------------------------------


def parse_blocks(text: str) -> list[tuple[int, Partition]]:
    """``"2:1.1,1:1"`` -> ``[(2, (1,1)), (1, (1))]``"""
    out = []
    for chunk in text.split(","):
        size_s, sep, parts_s = chunk.strip().partition(":")
        if not sep:
            raise UsageError(f"block {chunk!r} must look like size:part.part")
        try:
            size = int(size_s)
            lam = Partition(tuple(int(x) for x in parts_s.split(".")))
        except ValueError as exc:
            raise UsageError(f"bad block {chunk!r}: {exc}") from None
        if lam.size != size:
            raise UsageError(f"block {chunk!r}: partition {lam} does not have size {size}")
        out.append((size, lam))
    return out


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


# --- verbs ---------------------------------------------------------------------


def cmd_classes(args) -> str:
    n = _positive_n(args.n)
    infos = engine.group_class_infos(args.group, n)
    if args.format == "json":
        return _dumps({"group": args.group.upper(), "n": n, "classes": [c.to_json() for c in infos]})
    rows = [("class", "dim", "level", "sheet", "isolated", "nilpotent")]
    for c in infos:
        nil = str(c.sheet_nilpotent) if c.sheet_nilpotent is not None else "-"
        rows.append((str(c.datum), str(c.dim), str(c.level), "yes" if c.is_sheet_dense else "no",
                     "yes" if c.is_isolated else "no", nil))
    return _table(rows)


def _table(rows) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def cmd_hasse(args) -> str:
    diagram = engine.group_hasse(args.group, _positive_n(args.n))
    return diagram.to_dot() if args.format == "dot" else _dumps(diagram.to_json())


def cmd_sheets(args) -> str:
    n = _positive_n(args.n)
    infos = engine.group_class_infos(args.group, n)
    levels: dict[int, list] = {}
    for c in infos:
        levels.setdefault(c.level, []).append(c)
    doc = {"group": args.group.upper(), "n": n, "levels": []}
    for level in sorted(levels):
        members = levels[level]
        doc["levels"].append({
            "level": level,
            "classes": [c.to_json() for c in members],
            "sheets": [
                {"dense": c.datum.to_json(), "nilpotent": c.sheet_nilpotent.to_json(), "isolated": c.is_isolated}
                for c in members if c.is_sheet_dense
            ],
        })
    if args.format == "json":
        return _dumps(doc)
    lines = []
    for entry, level in zip(doc["levels"], sorted(levels)):
        lines.append(f"level {level}: {len(entry['classes'])} class(es)")
        for c in levels[level]:
            if c.is_sheet_dense:
                tag = " isolated" if c.is_isolated else ""
                lines.append(f"  sheet dense={c.datum} nilpotent={c.sheet_nilpotent}{tag}")
        for c in levels[level]:
            if not c.is_sheet_dense:
                lines.append(f"  member {c.datum}")
    return "\n".join(lines) + "\n"


def cmd_induce(args) -> str:
    blocks = parse_blocks(args.blocks)
    tags = [t.strip() for t in args.tags.split(",")] if args.tags else ["0"] * len(blocks)
    if len(tags) != len(blocks):
        raise UsageError(f"{len(tags)} tag(s) given for {len(blocks)} block(s)")
    induced = engine.induce_orbit(list(zip(tags, (lam for _, lam in blocks))))
    n = sum(size for size, _ in blocks)
    levi_dim = sum(size * size for size, _ in blocks)
    doc = {
        "blocks": [[size, lam.to_json()] for size, lam in blocks],
        "tags": tags,
        "induced": [{"tag": t, "partition": lam.to_json()} for t, lam in induced],
        "levi_dim": levi_dim,
        "orbit_dim": sum(orbit_dim(lam) for _, lam in blocks),
        "induced_orbit_dim": n * n - sum(centralizer_dim(lam) for _, lam in induced),
    }
    if args.format == "json":
        return _dumps(doc)
    lines = [f"{t}: {lam}" for t, lam in induced]
    lines.append(f"dim {doc['orbit_dim']} in the Levi (dim {levi_dim}) -> dim {doc['induced_orbit_dim']} in gl_{n}")
    return "\n".join(lines) + "\n"


def _levi_label(blocks) -> str:
    if len(blocks) == 1:
        return "G"
    if all(b == 1 for b in blocks):
        return "torus"
    return "levi (" + ",".join(map(str, blocks)) + ")"


def cmd_stabtype(args) -> str:
    p = args.p
    try:
        check_characteristic(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdicts = []
    if args.builtin:
        if args.datum or args.n is None:
            raise UsageError("--builtin needs --n and excludes --datum")
        try:
            datum = root_datum.build(args.builtin, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        shapes = [tuple(_parse_ints(args.levi, "--levi"))] if args.levi else [lam.parts for lam in partitions_of(args.n)]
        for shape in shapes:
            try:
                levi = root_datum.levi_from_blocks(args.n, shape)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            verdicts.append((_levi_label(shape), list(shape), levi))
    elif args.datum:
        try:
            datum = root_datum.load_root_datum(Path(args.datum).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot load {args.datum}: {exc}") from None
        if args.levi is not None:
            idx = frozenset(_parse_ints(args.levi, "--levi"))
            levis = [root_datum.LeviDescriptor(idx)]
            try:
                root_datum.validate_levi(datum, levis[0])
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        else:
            levis = root_datum.levi_subsystems(datum)
        for levi in levis:
            verdicts.append(("roots {" + ",".join(map(str, sorted(levi.root_indices))) + "}", None, levi))
    else:
        raise UsageError("stabtype needs --builtin or --datum")
    results = [(label, shape, levi, root_datum.is_stabiliser_type(datum, p, levi)) for label, shape, levi in verdicts]
    if args.format == "json":
        doc = {"datum": datum.label, "p": p, "verdicts": []}
        for label, shape, levi, ok in results:
            entry = {"levi": label, "root_indices": sorted(levi.root_indices), "stabiliser_type": ok}
            if shape is not None:
                entry["blocks"] = shape
            doc["verdicts"].append(entry)
        return _dumps(doc)
    return "".join(f"{label}: {'stabiliser-type' if ok else 'NOT stabiliser-type'}\n" for label, _, _, ok in results)


def _verify_closure(n: int, seed: int) -> tuple[int, list[str]]:
    data = sorted(engine.enumerate_classes(n))
    mismatches = []
    for d1, d2 in itertools.product(data, repeat=2):
        comb = engine.closure_leq(d1, d2)
        orc = oracle.class_closure_member_oracle(d1, d2, seed=seed)
        if comb != orc:
            mismatches.append(f"{d1} <= {d2}: combinatorial {comb}, oracle {orc}")
    return len(data) ** 2, mismatches


def _set_partitions(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _verify_induction(n: int, seed: int) -> tuple[int, list[str]]:
    mismatches = []
    cases = 0
    for comp in compositions(n):
        for lams in itertools.product(*(partitions_of(m) for m in comp)):
            cases += 1
            name = "[" + ",".join(map(str, lams)) + "]"
            expected = induce(lams)
            got = oracle.generic_induced_type([(0, lam) for lam in lams], seed=seed)[0]
            if got != expected:
                mismatches.append(f"induce {name}: formula {expected}, oracle {got}")
            law = sum(orbit_dim(lam) for lam in lams) + n * n - sum(m * m for m in comp)
            if orbit_dim(got) != law:
                mismatches.append(f"dimension law {name}: oracle orbit dim {orbit_dim(got)}, expected {law}")
            for grouping in _set_partitions(list(lams)):
                if induce([induce(g) for g in grouping]) != expected:
                    mismatches.append(f"transitivity {name}: grouping {grouping}")
    return cases, mismatches


def cmd_verify(args) -> str:
    n = _positive_n(args.n)
    seed = args.seed
    cases, mismatches = (_verify_closure if args.check == "closure" else _verify_induction)(n, seed)
    doc = {"check": args.check, "n": n, "seed": seed, "cases": cases, "mismatches": mismatches, "ok": not mismatches}
    if args.format == "json":
        text = _dumps(doc)
    else:
        text = f"{args.check} n={n} seed={seed}: {cases} cases, {len(mismatches)} mismatches\n"
        text += "".join(m + "\n" for m in mismatches)
    if mismatches:
        raise Mismatch(text)
    return text


def cmd_micro(args) -> str:
    if args.model != "pgl2":
        raise UsageError(f"unknown micro-model {args.model!r}")
    if args.k < 1:
        raise UsageError("--k must be positive")
    try:
        report = pgl2_micro(args.p, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = _dumps(report)
    else:
        lines = [f"pgl2 over F_{args.p}^{args.k}" + (" (control)" if report["control"] else "")]
        rows = [("element", "centraliser", "stabiliser", "nilpotent")]
        rows += [(r["element"], str(r["centraliser_dim"]), str(r["stabiliser_dim"]), "yes" if r["nilpotent"] else "no")
                 for r in report["rows"]]
        lines.append(_table(rows).rstrip("\n"))
        lines += [f"{name}: {'ok' if ok else 'FAILED'}" for name, ok in report["checks"].items()]
        text = "\n".join(lines) + "\n"
    if not report["ok"]:
        raise Mismatch(text)
    return text


# --- argument parser -----------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser(default_seed: int = 0) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="decompclasses", description="Decomposition classes of gl_n / pgl_n.")
    parser.add_argument("-o", "--output", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="verb", required=True)

    def group_n(p, formats, default):
        p.add_argument("--group", choices=["gl", "pgl"], default="gl")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=formats, default=default)

    group_n(sub.add_parser("classes", help="list classes with dims and levels"), ["table", "json"], "table")
    group_n(sub.add_parser("hasse", help="Hasse diagram of the closure order"), ["dot", "json"], "dot")
    group_n(sub.add_parser("sheets", help="level sets, sheets and their nilpotent orbits"), ["table", "json"], "table")

    p = sub.add_parser("induce", help="induce an orbit from a block Levi")
    p.add_argument("--blocks", required=True, help='e.g. "2:1.1,1:1"')
    p.add_argument("--tags", help='eigenvalue tags per block, e.g. "a,a,b" (default: all equal)')
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("stabtype", help="stabiliser-type test for Levi subgroups")
    p.add_argument("--builtin", choices=["gl", "sl", "pgl"])
    p.add_argument("--datum", help="root-datum file")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--levi", help="block sizes (builtin) or root indices (datum), comma-separated")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="cross-check the engine against the matrix oracle")
    p.add_argument("check", choices=["closure", "induction"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("micro", help="pgl_2 micro-model in small characteristic")
    p.add_argument("model", choices=["pgl2"])
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="json")
    return parser


COMMANDS = {
    "classes": cmd_classes,
    "hasse": cmd_hasse,
    "sheets": cmd_sheets,
    "induce": cmd_induce,
    "stabtype": cmd_stabtype,
    "verify": cmd_verify,
    "micro": cmd_micro,
}


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(_default_seed())
    except UsageError as exc:
        print(f"decompclasses: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _emit(COMMANDS[args.verb](args), args.output)
    except UsageError as exc:
        print(f"decompclasses: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Mismatch as exc:
        _emit(exc.text, args.output)
        return EXIT_MISMATCH
    except oracle.InconclusiveSampling as exc:
        print(f"decompclasses: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main() -> None:
    sys.exit(run())
