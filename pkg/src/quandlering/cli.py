"""Command-line interface: ``quandle <command> ...``.

Exit codes: 0 success, 1 a check or validation failed, 2 usage or input
error, 3 a search exceeded its resource limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import catalog as cat
from .coeffs import INTEGERS, MOD2, RATIONALS
from .idempotents import (
    SearchTooLarge,
    covering_family_r2n,
    enumerate_mod2,
    idempotent_quandle,
    in_families,
    is_quandle_under_mul,
    parametric_is_quandle,
    parse_family,
    search_bounded,
    verify_family,
)
from .links import (
    FiniteMagma,
    PresentationError,
    builtin_presentations,
    count_colorings,
    enhancement_report,
    hom_quandle,
    hom_set,
    parse_presentation,
)
from .peirce import algebra_spectrum
from .quandle import (
    AxiomViolation,
    Quandle,
    dihedral_quandle,
    format_table,
    is_commutative,
    is_involutory,
    is_isomorphic,
    is_latin,
    is_medial,
    load_quandle,
    orbits,
    quandle_from_json,
    quandle_to_json,
    trivial_quandle,
)
from .reproduce import DEFAULT_SEED, mod2_row_report, run_checks

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


# input helpers

def resolve_quandle(source: str) -> Quandle:
    """A file path, a catalog label (Q5.14), or Rn / Tn for dihedral and trivial quandles."""
    if source.startswith("catalog:"):
        source = source.split(":", 1)[1]
    if source[:1] == "Q" and "." in source and not source.endswith((".txt", ".json")):
        try:
            return cat.get_entry(source).quandle
        except KeyError:
            raise UsageError(f"no catalog entry {source}") from None
    if source[:1] in "RT" and source[1:].isdigit():
        n = int(source[1:])
        return dihedral_quandle(n) if source[0] == "R" else trivial_quandle(n)
    try:
        return load_quandle(source)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def resolve_presentation(source: str):
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        pres = builtin_presentations()
        if name not in pres:
            raise UsageError(f"unknown builtin presentation {name}; choose from {', '.join(pres)}")
        return pres[name]
    try:
        with open(source) as fh:
            return parse_presentation(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def parse_grid(text: str) -> list[int]:
    """``-1..1`` or a comma list ``-1,0,2``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad grid {text!r}; use LO..HI or a comma list") from None


def _num(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def emit(args, text: str | None = None, data=None, rows=None, header=None):
    """Write one report in the requested format."""
    fmt = args.format
    if fmt == "json":
        payload = {"command": args.command, "config": _config(args), "data": data}
        out = json.dumps(payload, indent=2, default=_num) + "\n"
    elif fmt == "csv":
        if rows is None:
            raise UsageError(f"{args.command} has no CSV form")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows)
        out = buf.getvalue()
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _config(args) -> dict:
    skip = {"func", "command", "format", "out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# commands

def cmd_validate(args) -> int:
    try:
        q = resolve_quandle(args.file)
    except AxiomViolation as exc:
        data = {"valid": False, "axiom": exc.axiom, "witness": [w + 1 for w in exc.witness],
                "valid_if_transposed": exc.transpose_valid}
        emit(args, f"invalid: {exc}", data)
        return EXIT_MISMATCH
    props = {"latin": is_latin(q), "medial": is_medial(q), "commutative": is_commutative(q),
             "involutory": is_involutory(q)}
    orbit_sizes = sorted(len(o) for o in orbits(q))
    lines = [f"valid quandle of order {q.order}"]
    lines += [f"  {k}: {'yes' if v else 'no'}" for k, v in props.items()]
    lines.append(f"  orbit sizes: {orbit_sizes}")
    emit(args, "\n".join(lines), {"valid": True, "order": q.order, **props, "orbit_sizes": orbit_sizes})
    return EXIT_OK


def cmd_catalog(args) -> int:
    entries = cat.catalog_entries(args.order)
    if args.format == "json":
        data = [{**quandle_to_json(e.quandle), "label": e.label, "z_families": list(e.z_families),
                 "z_is_quandle": e.z_is_quandle, "mod2_idempotents": list(e.mod2_idempotents),
                 "mod2_is_quandle": e.mod2_is_quandle} for e in entries]
        emit(args, data=data)
        return EXIT_OK
    rows = [[e.label, " / ".join(" ".join(str(v) for v in r) for r in e.quandle.one_based()),
             "yes" if is_latin(e.quandle) else "no", "yes" if is_medial(e.quandle) else "no"]
            for e in entries]
    text = []
    for e in entries:
        flags = [k for k, f in (("latin", is_latin), ("medial", is_medial), ("commutative", is_commutative))
                 if f(e.quandle)]
        text.append(f"{e.label}  [{', '.join(flags) or 'no special properties'}]")
        text.append(format_table(e.quandle.table))
        text.append("")
    emit(args, "\n".join(text), rows=rows, header=["label", "table", "latin", "medial"])
    return EXIT_OK


_RINGS = {"z": INTEGERS, "q": RATIONALS, "z2": MOD2}


def cmd_idem(args) -> int:
    q = resolve_quandle(args.file)
    ring = _RINGS[args.ring]
    if ring == MOD2:
        found = enumerate_mod2(q)
    else:
        found = search_bounded(q, ring, args.bound, args.denom, method=args.method, limit=args.limit)
    elements = [str(u) for u in found]
    flag = is_quandle_under_mul(found)
    aug = [str(u.augmentation()) for u in found]
    text = [f"{len(elements)} idempotents of {args.ring.upper()}[{q.name or 'X'}] ({found.note})"]
    text += [f"  {s}" for s in elements]
    text.append(f"quandle under the product: {'yes' if flag else 'no'}")
    emit(args, "\n".join(text),
         {"count": len(elements), "elements": elements, "augmentations": aug, "is_quandle": flag,
          "note": found.note},
         rows=[[s, a] for s, a in zip(elements, aug)], header=["element", "augmentation"])
    return EXIT_OK


def _table_row(entry, bound: int):
    q = entry.quandle
    fams = [parse_family(s, q) for s in entry.z_families]
    verified = all(verify_family(f) for f in fams)
    found = search_bounded(q, INTEGERS, bound)
    complete = all(in_families(u, fams) is not None for u in found)
    z_flag = parametric_is_quandle(fams, grid=(-1, 0, 1)).is_quandle
    m2 = enumerate_mod2(q)
    m2_flag = is_quandle_under_mul(m2)
    r = mod2_row_report(entry)
    return {
        "label": entry.label,
        "table": q.one_based(),
        "z_families": [str(f) for f in fams],
        "z_families_verified": verified,
        "z_complete_within_bound": complete,
        "z_is_quandle": z_flag,
        "z_is_quandle_listed": entry.z_is_quandle,
        "mod2_idempotents": [str(u) for u in m2],
        "mod2_is_quandle": m2_flag,
        "mod2_matches_listed": r["set_matches"],
        "mod2_is_quandle_listed": entry.mod2_is_quandle,
    }


def cmd_idem_table(args) -> int:
    rows = [_table_row(e, args.bound) for e in cat.catalog_entries(args.order)]
    yn = lambda b: "Yes" if b else "No"
    csv_rows = [[r["label"], "; ".join(r["z_families"]), yn(r["z_is_quandle"]),
                 "; ".join(r["mod2_idempotents"]), yn(r["mod2_is_quandle"])] for r in rows]
    text = []
    for r in rows:
        text.append(f"{r['label']}: " + " / ".join(" ".join(map(str, row)) for row in r["table"]))
        text.append(f"  I(Z[X]):  {', '.join(r['z_families'])}")
        text.append(f"            verified symbolically: {yn(r['z_families_verified'])}; "
                    f"complete within B={args.bound}: {yn(r['z_complete_within_bound'])}; "
                    f"quandle: {yn(r['z_is_quandle'])}")
        text.append(f"  I(Z2[X]): {', '.join(r['mod2_idempotents'])}")
        text.append(f"            quandle: {yn(r['mod2_is_quandle'])}; "
                    f"matches listed set: {yn(r['mod2_matches_listed'])}")
    emit(args, "\n".join(text), rows, rows=csv_rows,
         header=["quandle", "I(Z[X])", "I(Z[X]) quandle", "I(Z2[X])", "I(Z2[X]) quandle"])
    return EXIT_OK


def cmd_color(args) -> int:
    pres = resolve_presentation(args.presentation)
    q = resolve_quandle(args.target)
    target = q
    labels = [str(i + 1) for i in range(q.order)]
    if args.idempotents:
        elements = list(enumerate_mod2(q))
        target = FiniteMagma.from_elements(elements)
        labels = list(target.labels)
    homs = hom_set(pres, target)
    data = {"count": len(homs)}
    text = [str(len(homs))]
    if not args.count_only:
        data["elements"] = [[labels[v] for v in h] for h in homs]
        text = [f"{len(homs)} colorings of {pres.name or 'P'} by {q.name or 'X'}"
                + (" idempotents" if args.idempotents else "")]
        text += ["  " + ", ".join(f"{g}={labels[v]}" for g, v in zip(pres.generators, h)) for h in homs]
    hq = None
    if args.hom_table or args.compare:
        if args.idempotents:
            tq = idempotent_quandle(elements)
        else:
            tq = q
        hq = hom_quandle(pres, tq)
        data["quandle_table"] = hq.quandle.one_based()
        if args.hom_table and not args.count_only:
            text.append("Hom quandle table:")
            text.append(format_table(hq.quandle.table))
    if args.compare:
        other = hom_quandle(resolve_presentation(args.compare), hq.target)
        iso = is_isomorphic(hq.quandle, other.quandle)
        data["isomorphic_to"] = {"presentation": args.compare, "order": other.order,
                                 "bijection": [v + 1 for v in iso] if iso else None}
        text.append(f"isomorphic to Hom({args.compare}): {'yes' if iso else 'no'}")
    emit(args, "\n".join(text), data,
         rows=[[labels[v] for v in h] for h in homs], header=list(pres.generators))
    return EXIT_OK


def cmd_enhance(args) -> int:
    p1, p2 = resolve_presentation(args.p1), resolve_presentation(args.p2)
    grid = parse_grid(args.grid)
    fams = covering_family_r2n(args.n)
    rep = enhancement_report(p1, p2, fams, grid)
    summary = rep.summary()
    text = [f"{summary['values']} distinct nonzero idempotents of Z[R{2 * args.n}] from grid {grid} "
            f"(plus 0); pair (v, w) assigns v, w to the two generators"]
    rows = []
    for name, kinds in summary["presentations"].items():
        text.append(f"{name}:")
        for kind, c in kinds.items():
            text.append(f"  {kind:13s} {c['satisfy_all']:6d} of {c['pairs']:6d} pairs satisfy all relations"
                        f" (per relation: {c['satisfy_each']})")
            rows.append([name, kind, c["pairs"], c["satisfy_all"]] + c["satisfy_each"])
    z1 = summary["presentations"][rep.names[0]]["zero-first"]["satisfy_all"]
    z2 = summary["presentations"][rep.names[1]]["zero-first"]["satisfy_all"]
    text.append(f"assignments (0, u != 0): {rep.names[0]} admits {z1}, {rep.names[1]} admits {z2}")
    nrel = max(len(r) for r in rows) - 4
    emit(args, "\n".join(text), summary, rows=rows,
         header=["presentation", "kind", "pairs", "satisfy_all"] + [f"relation_{i + 1}" for i in range(nrel)])
    return EXIT_OK


def cmd_peirce(args) -> int:
    q = resolve_quandle(args.file)
    found = search_bounded(q, RATIONALS, args.bound, args.denom, method=args.method, limit=args.limit)
    result = algebra_spectrum(q, list(found))
    fmt_vals = lambda vals: "{" + ", ".join(str(v) for v in sorted(vals, key=lambda v: (abs(v), v < 0))) + "}"
    text = [f"{len(found)} rational idempotents ({found.note})"]
    for u, s in result.spectra:
        vals = ", ".join(f"{v}" + (f" (x{m})" if m > 1 else "") for v, m in s.eigenvalues)
        res = f"; residual {', '.join(str(f) for f, _ in s.residual)}" if s.residual else ""
        text.append(f"  {u}: {vals}{res}")
    text.append(f"spectrum: {fmt_vals(result.eigenvalues)}"
                + (f" plus roots of {', '.join(map(str, result.residual))}" if result.residual else ""))
    rows = [[str(u), " ".join(f"{v}:{m}" for v, m in s.eigenvalues), " ".join(str(f) for f, _ in s.residual)]
            for u, s in result.spectra]
    emit(args, "\n".join(text), result.to_dict(), rows=rows, header=["element", "eigenvalues", "residual"])
    return EXIT_OK


def _load_catalog_file(path):
    from .catalog import CatalogEntry
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read catalog {path}: {exc}") from None
    if isinstance(data, dict) and "data" in data:
        data = data["data"]
    entries = []
    for item in data:
        q = quandle_from_json({"name": item["label"], "table": item["table"]})
        entries.append(CatalogEntry(item["label"], q, tuple(item["z_families"]), bool(item["z_is_quandle"]),
                                    tuple(item["mod2_idempotents"]), bool(item["mod2_is_quandle"])))
    return entries


def cmd_reproduce(args) -> int:
    entries = _load_catalog_file(args.catalog) if args.catalog else None
    try:
        results = run_checks(args.only, entries, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = []
    for r in results:
        text.append(f"[{r.status}] {r.key:2d} {r.group}: {r.title} ({r.seconds:.2f}s)")
        text += [f"       {d}" for d in r.details if "\n" not in d]
    passed = sum(r.passed for r in results)
    text.append(f"{passed}/{len(results)} checks passed")
    emit(args, "\n".join(text), [r.to_dict() for r in results],
         rows=[[r.key, r.group, r.status, r.title] for r in results], header=["id", "group", "status", "title"])
    if any(r.status == "LIMIT" for r in results) and all(r.passed or r.status == "LIMIT" for r in results):
        return EXIT_LIMIT
    return EXIT_OK if passed == len(results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write the report here instead of standard output")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--bound", type=int, default=3, help="coefficient bound B")
    search.add_argument("--denom", type=int, default=1, help="denominator bound D")
    search.add_argument("--method", choices=("auto", "exhaustive", "dihedral"), default="auto")
    search.add_argument("--limit", type=int, default=20_000_000, help="candidate budget for exhaustive search")

    p = argparse.ArgumentParser(prog="quandle", description="Quandle rings, idempotents and colorings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a multiplication table")
    s.add_argument("file", help="table file, catalog label (Q5.14) or Rn/Tn")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("catalog", parents=[common], help="list the quandles of order 3, 4 or 5")
    s.add_argument("--order", type=int, choices=cat.SUPPORTED_ORDERS)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("idem", parents=[common, search], help="idempotents of k[X]")
    s.add_argument("file")
    s.add_argument("--ring", choices=tuple(_RINGS), default="z2")
    s.set_defaults(func=cmd_idem)

    s = sub.add_parser("idem-table", parents=[common], help="regenerate idempotent tables for an order")
    s.add_argument("--order", type=int, choices=cat.SUPPORTED_ORDERS, required=True)
    s.add_argument("--bound", type=int, default=3, help="bound for the completeness check")
    s.set_defaults(func=cmd_idem_table)

    s = sub.add_parser("color", parents=[common], help="count colorings of a presentation")
    s.add_argument("presentation", help="presentation file or builtin:NAME, NAME one of "
                   + ", ".join(builtin_presentations()))
    s.add_argument("target", help="quandle file, catalog label or Rn/Tn")
    s.add_argument("--idempotents", action="store_true", help="color by the mod-2 idempotents of the target")
    s.add_argument("--hom-table", action="store_true", help="also print the Hom quandle table")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--compare", help="second presentation; test the Hom quandles for isomorphism")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("enhance", parents=[common], help="ring-relation report over covering families")
    s.add_argument("--p1", required=True)
    s.add_argument("--p2", required=True)
    s.add_argument("--grid", default="-1..1")
    s.add_argument("--n", type=int, default=3, help="odd n; families live in Z[R_2n]")
    s.set_defaults(func=cmd_enhance)

    s = sub.add_parser("peirce", parents=[common, search], help="Peirce spectra of rational idempotents")
    s.add_argument("file")
    s.set_defaults(func=cmd_peirce)

    s = sub.add_parser("reproduce", parents=[common], help="run every reference check")
    s.add_argument("--only", action="append", help="check groups or ids, comma separated")
    s.add_argument("--catalog", help="JSON catalog (as written by 'catalog --format json') to check instead")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"quandle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchTooLarge as exc:
        print(f"quandle: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (AxiomViolation, PresentationError, ValueError) as exc:
        print(f"quandle: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
