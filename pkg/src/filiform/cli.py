"""Command-line front end.

Commands: check, cohomology, classify-graded, symplectic, contact, spectral,
catalog.  Algebras travel in the interchange JSON format
{"dim": n, "brackets": [[i, j, [[k, "num/den"], ...]], ...],
 "weights": [w1..wn]?} with 1-based indices; forms are serialized as
[[[i1..ip], "num/den"], ...].

Exit codes: 0 = verdict computed (a negative verdict is still a verdict),
1 = input error, 2 = internal invariant violation.  All JSON output is
canonical (sorted keys), so identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from . import catalog
from .cochain import cohomology
from .extensions import enumerate_graded_filiform
from .lie import LieAlgebra, central_series, is_filiform, jacobi_check
from .scalars import format_rat, rat
from .spectral import build_pages, symplectic_survival
from .structures import contact_exists, symplectic_exists


class InputError(Exception):
    pass


def _load_algebra(path: str) -> tuple[LieAlgebra, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
        doc = json.loads(raw)
        algebra = LieAlgebra.from_dict(doc, check=False)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read algebra from {path}: {exc}") from exc
    digest = hashlib.sha256(raw.encode()).hexdigest()[:16]
    return algebra, digest


def _emit(report: dict, human: str | None = None) -> None:
    print(json.dumps(report, sort_keys=True, indent=2))
    if human:
        print(human, file=sys.stderr)


def _form_pairs(form) -> list:
    return form.to_pairs()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    a, digest = _load_algebra(args.algebra)
    bad = jacobi_check(a)
    series = central_series(a)
    graded_1n = a.weights is not None and sorted(a.weights) == list(range(1, a.dim + 1))
    report = {
        "command": "check",
        "input": digest,
        "result": {
            "jacobi_ok": not bad,
            "jacobi_violations": [[i, j, k, {str(m): format_rat(v) for m, v in d.items()}]
                                  for i, j, k, d in bad[:10]],
            "nilpotent": series[-1].dim == 0,
            "filiform": not bad and is_filiform(a),
            "central_series_dims": [s.dim for s in series],
            "n_graded_weights_1_to_n": graded_1n,
        },
    }
    _emit(report)
    return 0 if not bad else 1


def cmd_cohomology(args) -> int:
    a, digest = _load_algebra(args.algebra)
    try:
        block = cohomology(a, args.degree, args.weight)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = {
        "command": "cohomology",
        "input": digest,
        "result": {
            "degree": args.degree,
            "weight": args.weight,
            "dim": block.dim,
            "representatives": [_form_pairs(f) for f in block.representatives],
        },
    }
    _emit(report)
    return 0


def cmd_classify(args) -> int:
    try:
        classes = enumerate_graded_filiform(args.dim)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rows = []
    for cls in classes:
        rows.append({
            "name": cls.name,
            "dimension": cls.dim,
            "family": cls.is_family,
            "excluded_parameters": [format_rat(x) for x in cls.excluded],
            "coincidences": [[format_rat(x), name] for x, name in cls.overlaps],
        })
    lines = [f"N-graded filiform Lie algebras of dimension {args.dim}",
             "-" * 56]
    for row in rows:
        tag = f"{row['name']}(alpha)" if row["family"] else f"{row['name']}({args.dim})"
        notes = []
        if row["excluded_parameters"]:
            notes.append("alpha not in {" + ", ".join(row["excluded_parameters"]) + "}")
        for x, name in row["coincidences"]:
            notes.append(f"alpha = {x} coincides with {name}({args.dim})")
        lines.append(f"  {tag:<18} {'; '.join(notes)}")
    _emit({"command": "classify-graded", "dim": args.dim, "result": rows},
          "\n".join(lines))
    return 0


def cmd_symplectic(args) -> int:
    a, digest = _load_algebra(args.algebra)
    try:
        cert = symplectic_exists(a)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = {"exists": cert.exists}
    if cert.exists:
        result["form"] = _form_pairs(cert.form)
        result["top_power"] = _form_pairs(cert.top_power)
    else:
        result["reason"] = cert.reason
        if cert.reason == "SpectralObstruction":
            v = cert.witness
            result["obstruction"] = {
                "page": v.obstruction_page,
                "class": _form_pairs(v.obstruction_source),
                "image": _form_pairs(v.obstruction_image),
            }
    _emit({"command": "symplectic", "input": digest, "result": result})
    return 0


def cmd_contact(args) -> int:
    a, digest = _load_algebra(args.algebra)
    try:
        cert = contact_exists(a)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    except RuntimeError as exc:
        raise InputError(str(exc)) from exc
    result = {"exists": cert is not None}
    if cert is not None:
        result["form"] = _form_pairs(cert.form)
        result["volume"] = _form_pairs(cert.volume)
    else:
        result["reason"] = "defining polynomial vanishes identically"
    _emit({"command": "contact", "input": digest, "result": result})
    return 0


def cmd_spectral(args) -> int:
    a, digest = _load_algebra(args.algebra)
    try:
        pages = build_pages(a)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    tables = []
    for page in pages:
        tables.append({
            "r": page.r,
            "blocks": [[-w, deg + w, dim]
                       for (w, deg), dim in sorted(page.block_dims().items())],
            "totals": {str(k): v for k, v in page.total_dims().items()},
        })
    result = {"pages": tables}
    if a.dim % 2 == 0:
        v = symplectic_survival(a)
        result["symplectic_survival"] = {"survives": v.survives}
        if v.survives:
            result["symplectic_survival"]["lift"] = _form_pairs(v.lift)
        elif v.obstruction_page is not None:
            result["symplectic_survival"]["obstruction"] = {
                "page": v.obstruction_page,
                "class": _form_pairs(v.obstruction_source),
                "image": _form_pairs(v.obstruction_image),
            }
    human = ["spectral pages (E_r block dimensions as p, q, dim):"]
    for t in tables if args.report else []:
        human.append(f"  r = {t['r']}: " + "  ".join(
            f"({p},{q})={d}" for p, q, d in t["blocks"]))
    _emit({"command": "spectral", "input": digest, "result": result},
          "\n".join(human) if args.report else None)
    return 0


def cmd_catalog(args) -> int:
    params = {}
    if args.dim is not None:
        params["n"] = args.dim
    if args.alpha is not None:
        params["alpha"] = rat(args.alpha)
    if args.t is not None:
        params["t"] = args.t
    if args.alphas:
        params["alphas"] = [rat(x) for x in args.alphas.split(",")]
    try:
        a = catalog.build(args.name, **params)
    except (catalog.GuardViolated, KeyError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    bad = jacobi_check(a)
    if bad:
        print(f"internal error: catalog algebra violates Jacobi at {bad[0][:3]}",
              file=sys.stderr)
        return 2
    doc = a.to_dict()
    payload = json.dumps(doc, sort_keys=True, indent=2)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        print(f"wrote {args.emit}", file=sys.stderr)
    else:
        print(payload)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="filiform",
        description="exact computations on nilpotent/filiform Lie algebras")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="Jacobi, nilpotency and filiform report")
    p.add_argument("algebra")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("cohomology", help="H^p, optionally one weight block")
    p.add_argument("algebra")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--weight", type=int, default=None)
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("classify-graded",
                       help="list the N-graded filiform classes of a dimension")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("symplectic", help="decide symplectic existence")
    p.add_argument("algebra")
    p.set_defaults(fn=cmd_symplectic)

    p = sub.add_parser("contact", help="search for a contact form")
    p.add_argument("algebra")
    p.set_defaults(fn=cmd_contact)

    p = sub.add_parser("spectral", help="weight-filtration spectral sequence")
    p.add_argument("algebra")
    p.add_argument("--report", action="store_true")
    p.set_defaults(fn=cmd_spectral)

    p = sub.add_parser("catalog", help="emit a named algebra as interchange JSON")
    p.add_argument("--name", required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--alpha")
    p.add_argument("--t", type=int)
    p.add_argument("--alphas", help="comma-separated rationals")
    p.add_argument("--emit")
    p.set_defaults(fn=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
