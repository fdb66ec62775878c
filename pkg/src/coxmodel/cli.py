"""Command line front end.

Subcommands:
  lr        Littlewood-Richardson coefficients or full product expansions.
  char      The virtual character of one model index.
  verify    Check that a model (explicit or named family) is perfect.
  classify  Enumerate perfect models up to equivalence.
  oracle    Brute-force group computations: search and classes.

Exit codes: 0 success, 1 domain error, 2 verification failure or golden
mismatch, 3 resource cap exceeded.  Output is a JSON document on stdout
with "schema": 1; collections are sorted so output is byte-identical
across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classification as cl
from . import partitions as pt
from .induction import EXACT
from .lr import lr_coefficient, lr_expand
from .model_index import (
    ModelIndex,
    character_of_index,
    format_index,
    from_json,
)

SCHEMA = 1


class DomainError(ValueError):
    pass


def _emit(doc: dict) -> None:
    doc = {"schema": SCHEMA, **doc}
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _parse_partition_arg(text: str) -> tuple:
    try:
        return pt.parse_partition(text)
    except Exception as exc:
        raise DomainError(f"bad partition {text!r}: {exc}") from exc


def _cmd_lr(args) -> int:
    lam = _parse_partition_arg(args.lam)
    mu = _parse_partition_arg(args.mu)
    if args.nu is not None:
        nu = _parse_partition_arg(args.nu)
        c = lr_coefficient(lam, mu, nu)
        _emit(
            {
                "command": "lr",
                "lam": pt.format_partition(lam),
                "mu": pt.format_partition(mu),
                "nu": pt.format_partition(nu),
                "coefficient": c,
            }
        )
        return 0
    terms = lr_expand(lam, mu)
    _emit(
        {
            "command": "lr",
            "lam": pt.format_partition(lam),
            "mu": pt.format_partition(mu),
            "expansion": [
                [pt.format_partition(nu), c]
                for nu, c in sorted(terms.items(), key=lambda kv: pt.sort_key(kv[0]))
            ],
        }
    )
    return 0


def _load_index(doc) -> ModelIndex:
    try:
        return from_json(doc)
    except Exception as exc:
        raise DomainError(f"bad model index {doc!r}: {exc}") from exc


def _cmd_char(args) -> int:
    try:
        doc = json.loads(args.index)
    except json.JSONDecodeError as exc:
        raise DomainError(f"bad JSON: {exc}") from exc
    idx = _load_index(doc)
    chi = character_of_index(idx, EXACT)
    _emit({"command": "char", "index": format_index(idx), "character": chi.to_json()})
    return 0


def _load_model(text: str):
    """A model argument: either family:NAME:n or a JSON list of indexes."""
    if text.startswith("family:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"expected family:NAME:n, got {text!r}")
        name, rank = parts[1], parts[2]
        try:
            n = int(rank)
        except ValueError as exc:
            raise DomainError(f"bad rank {rank!r}") from exc
        if name in ("I2odd", "I2even"):
            return ("I2", name, n)
        if name == "H3":
            return ("H3", name, n)
        try:
            return ("index", name, cl.known_model(name, n))
        except ValueError as exc:
            raise DomainError(str(exc)) from exc
    try:
        docs = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"bad JSON: {exc}") from exc
    if not isinstance(docs, list) or not docs:
        raise DomainError("model JSON must be a nonempty list of indexes")
    return ("index", None, tuple(_load_index(d) for d in docs))


def _oracle_check_model(indices) -> bool:
    from . import oracle as oc

    ctype, n = indices[0].ctype, indices[0].rank
    kind = {"A": "symA", "B": "symB", "D": "symD"}[ctype]
    group = oc.get_group(kind, n)
    r2 = oc.sqrt_count(group)
    chars = [oc.oracle_char_of_index(group, idx) for idx in indices]
    if tuple(sum(v) for v in zip(*chars)) != r2:
        return False
    return all(oc.check_index_against_oracle(idx) for idx in indices)


def _cmd_verify(args) -> int:
    kind = _load_model(args.model)
    if kind[0] == "I2":
        _, name, m = kind
        if m < 5 or (m % 2 == 0) != (name == "I2even"):
            raise DomainError(f"{name} needs matching parity and m >= 5")
        wanted = cl.dihedral_known_models(m)
        found = {
            frozenset(str(t) for t in model)
            for model in (mm for r in [cl.classify_dihedral(m)] for mm in r["models"])
        }
        ok = all(frozenset(str(t) for t in model) in found for model in wanted)
        if ok and args.oracle:
            from . import oracle as oc

            group = oc.get_group("dihedral", m)
            ok = len(oc.oracle_search(group)) == (2 if m % 2 else 4)
        _emit({"command": "verify", "model": args.model, "status": "perfect" if ok else "not_perfect"})
        return 0 if ok else 2
    if kind[0] == "H3":
        ok = all(cl.verify_h3_model(m) for m in cl.h3_known_models())
        _emit({"command": "verify", "model": args.model, "status": "perfect" if ok else "not_perfect"})
        return 0 if ok else 2
    _, _, indices = kind
    verdict = cl.is_perfect_symbolic(indices)
    ok = verdict["status"] == "perfect"
    if ok and args.oracle:
        ok = _oracle_check_model(indices)
        if not ok:
            verdict = {"status": "oracle_mismatch"}
    payload = {
        "command": "verify",
        "model": args.model,
        "indices": [format_index(i) for i in indices],
        "status": verdict["status"],
    }
    if "witness" in verdict:
        from .char_ring import format_label

        payload["witness"] = format_label(indices[0].ctype, verdict["witness"])
        payload["multiplicity"] = verdict["multiplicity"]
    _emit(payload)
    return 0 if ok else 2


def _classify_payload(args) -> dict:
    if args.type in ("A", "B", "D"):
        r = cl.classify(args.type, args.rank, args.relation)
        return {
            "command": "classify",
            "type": r["type"],
            "rank": r["rank"],
            "relation": r["relation"],
            "count": r["count"],
            "models": [[i.to_json() for i in model] for model in r["models"]],
        }
    if args.type == "I2":
        r = cl.classify_dihedral(args.rank, args.relation)
        return {
            "command": "classify",
            "type": "I2",
            "rank": r["rank"],
            "relation": r["relation"],
            "count": r["count"],
            "models": [
                ["%s:%s" % (j, s) for j, s in model] for model in r["models"]
            ],
        }
    if args.type == "H3":
        r = cl.classify_h3()
        return {
            "command": "classify",
            "type": "H3",
            "rank": 3,
            "relation": "strong",
            "count": r["count"],
            "models": [
                [
                    {"J": list(J), "centralizer_order": len(values)}
                    for J, values in model
                ]
                for model in r["models"]
            ],
        }
    raise DomainError(f"bad type {args.type!r}")


def _cmd_classify(args) -> int:
    payload = _classify_payload(args)
    if args.golden:
        text = json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True) + "\n"
        try:
            with open(args.golden, encoding="utf-8") as fh:
                want = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read golden file: {exc}") from exc
        if text != want:
            import difflib

            diff = "".join(
                difflib.unified_diff(
                    want.splitlines(keepends=True),
                    text.splitlines(keepends=True),
                    fromfile=args.golden,
                    tofile="computed",
                )
            )
            sys.stderr.write(diff)
            return 2
    _emit(payload)
    return 0


def _cmd_oracle(args) -> int:
    from . import oracle as oc

    kinds = {"A": "symA", "B": "symB", "D": "symD", "I2": "dihedral", "H3": "h3"}
    if args.type not in kinds:
        raise DomainError(f"bad type {args.type!r}")
    if args.type == "H3":
        group = oc.get_group("h3")
    else:
        group = oc.get_group(kinds[args.type], args.rank)
    if args.action == "classes":
        classes = sorted(
            oc.perfect_classes(group),
            key=lambda c: (c["theta"], str(c["min"])),
        )
        _emit(
            {
                "command": "oracle classes",
                "type": args.type,
                "rank": args.rank,
                "count": len(classes),
                "classes": [
                    {
                        "theta": list(c["theta"]),
                        "min": list(c["min"]) if isinstance(c["min"], tuple) else c["min"],
                        "size": len(c["elements"]),
                    }
                    for c in classes
                ],
            }
        )
        return 0
    if args.action == "search":
        covers = oc.oracle_search(group)
        _emit(
            {
                "command": "oracle search",
                "type": args.type,
                "rank": args.rank,
                "count": len(covers),
                "covers": [
                    [
                        {
                            "J": list(descs[0][0]),
                            "triples": len(descs),
                        }
                        for _, descs in cover
                    ]
                    for cover in covers
                ],
            }
        )
        return 0
    raise DomainError(f"bad oracle action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxmodel")
    sub = p.add_subparsers(dest="command", required=True)

    lr = sub.add_parser("lr", help="Littlewood-Richardson coefficients")
    lr.add_argument("--lam", required=True)
    lr.add_argument("--mu", required=True)
    lr.add_argument("--nu")
    lr.set_defaults(func=_cmd_lr)

    ch = sub.add_parser("char", help="character of a model index")
    ch.add_argument("--index", required=True, help="JSON index document")
    ch.set_defaults(func=_cmd_char)

    ve = sub.add_parser("verify", help="check a model is perfect")
    ve.add_argument("--model", required=True, help="JSON list or family:NAME:n")
    ve.add_argument("--oracle", action="store_true")
    ve.set_defaults(func=_cmd_verify)

    cf = sub.add_parser("classify", help="classify perfect models")
    cf.add_argument("--type", required=True, choices=["A", "B", "D", "I2", "H3"])
    cf.add_argument("--rank", type=int, default=3)
    cf.add_argument("--relation", choices=["strong", "full"], default="strong")
    cf.add_argument("--golden", help="compare output against this file")
    cf.set_defaults(func=_cmd_classify)

    orc = sub.add_parser("oracle", help="brute-force group computations")
    orc.add_argument("action", choices=["search", "classes"])
    orc.add_argument("--type", required=True, choices=["A", "B", "D", "I2", "H3"])
    orc.add_argument("--rank", type=int, default=3)
    orc.set_defaults(func=_cmd_oracle)

    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    from .oracle import CapExceeded

    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except CapExceeded as exc:
        sys.stderr.write(f"cap exceeded: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
