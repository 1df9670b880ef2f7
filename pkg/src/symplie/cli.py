"""Command-line front end: catalog, analysis, constructions and table reproduction."""
from __future__ import annotations

import argparse
import json
import sys

from . import reproduce as rep
from .cecoh import Module, betti_numbers, representatives
from .construct import (
    CotangentData,
    DoubleExtData,
    IncompatibleDerivation,
    NotACocycle,
    cotangent_extension,
    double_extension,
    is_solution,
)
from .exterior import KForm, parse_form
from .liealg import (
    FAMILIES,
    PARAM_NAMES,
    Ambiguous,
    CatalogId,
    InvalidParameter,
    LieAlgebra,
    NotALieAlgebra,
    UnknownAlgebra,
    abelian,
    catalog,
    fingerprint,
    identify,
)
from .linalg import Subspace
from .scalar import Q, fmt
from .symplectic import (
    admits_symplectic,
    closed_two_forms,
    exact_symplectic,
    is_symplectic_form,
    isotropic_ideals,
    lagrangian_ideal_search,
    pfaffian_on_closed,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_JACOBI = 0, 1, 2, 3

TABLES = {
    "simplecticas": lambda a: rep.reproduce_symplectic(a.grid),
    "coho": lambda a: rep.reproduce_cohomology(a.grid),
    "exact": lambda a: rep.reproduce_exact(a.grid),
    "cotangent-r2": lambda a: rep.reproduce_cotangent("r2", a.grid),
    "cotangent-aff": lambda a: rep.reproduce_cotangent("aff", a.grid),
    "obstructions": lambda a: rep.reproduce_obstructions(a.n),
    "ideals": lambda a: rep.reproduce_ideals(a.grid),
    "models": lambda a: rep.reproduce_models(),
    "double-ext": lambda a: rep.reproduce_double_extensions(a.grid),
    "automorphisms": lambda a: rep.reproduce_automorphisms(a.grid),
}


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------


def parse_params(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep or not key.strip():
            raise InputError(f"--params expects k=v, got {item!r}")
        try:
            out[key.strip()] = Q(val.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational: {val!r}") from None
    return out


def resolve_id(text: str, params: dict) -> CatalogId:
    if params:
        if ":" in text:
            raise InputError("give parameters either in the id or with --params, not both")
        names = PARAM_NAMES.get(text)
        if names is None:
            raise UnknownAlgebra(f"unknown catalog family {text!r}")
        missing = [n for n in names if n not in params]
        extra = sorted(set(params) - set(names))
        if missing or extra:
            raise InvalidParameter(f"{text} takes parameters {names}")
        return CatalogId(text, tuple(params[n] for n in names))
    return CatalogId.parse(text)


def load_algebra(text: str, params: dict | None = None) -> LieAlgebra:
    """Catalog id, ``R<n>``, ``aff``, or inline structure-constant JSON."""
    text = text.strip()
    if text.startswith("{"):
        return LieAlgebra.from_json(_loads(text, "algebra"))
    if text == "aff":
        return LieAlgebra(2, {(1, 2): [0, 1]}, name="aff")
    if text.startswith("R") and text[1:].isdigit() and text != "R4":
        return abelian(int(text[1:]))
    return catalog(resolve_id(text, params or {}))


def _loads(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {what} at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _matrix(data, what: str) -> list:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError(f"{what} must be a list of rows")
    try:
        return [[Q(x) for x in r] for r in data]
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f"{what} has a non-rational entry") from None


def _form(text: str, dim: int) -> KForm:
    text = text.strip()
    if text.startswith("["):
        return KForm.from_json(dim, _loads(text, "--omega"))
    if text.startswith('"'):
        text = _loads(text, "--omega")
    return parse_form(text, dim)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _vec(v) -> list:
    return [fmt(Q(x)) for x in v]


def _sub(s: Subspace) -> list:
    return [_vec(b) for b in s.basis]


def _id(g: LieAlgebra):
    if g.dim != 4:
        return None
    try:
        got = identify(g)
    except Ambiguous as exc:
        return "ambiguous: " + ", ".join(map(str, exc.candidates))
    return None if got is None else str(got)


def _witness(w) -> dict | None:
    if w is None:
        return None
    return {"form": str(w.form), "pfaffian": fmt(w.pfaffian_value)}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_catalog(args) -> tuple:
    if args.action == "list":
        return {"families": [{"family": f, "params": list(PARAM_NAMES[f])} for f in FAMILIES]}, EXIT_OK
    if not args.id:
        raise InputError("catalog show needs an id")
    cid = resolve_id(args.id, parse_params(args.params))
    g = catalog(cid)
    return {"id": str(cid), "algebra": g.to_json()}, EXIT_OK


def cmd_reproduce(args) -> tuple:
    if args.table == "obstructions" and args.n < 1:
        raise InputError("--n must be positive")
    if args.grid is not None and args.grid < 1:
        raise InputError("--grid must be positive")
    rows = [r.to_json() for r in TABLES[args.table](args)]
    failed = sum(r["status"] == "FAIL" for r in rows)
    status = "PASS" if not failed else "FAIL"
    out = {"table": args.table, "rows": rows, "passed": len(rows) - failed, "failed": failed, "status": status}
    return out, EXIT_OK if not failed else EXIT_FAIL


def analyze_algebra(g: LieAlgebra) -> dict:
    out = {"dim": g.dim, "jacobi": True, "fingerprint": fingerprint(g).to_json(), "betti": betti_numbers(g)}
    if g.dim % 2 == 0:
        ok, w = admits_symplectic(g)
        out["symplectic"] = ok
        out["witness"] = _witness(w)
    else:
        out["symplectic"] = False
        out["witness"] = None
    if g.dim == 4:
        out["identification"] = _id(g)
        if out["symplectic"]:
            found = lagrangian_ideal_search(g)
            out["lagrangian_ideal"] = _sub(found[1]) if found[0] == "found" else found[0]
    return out


def cmd_analyze(args) -> tuple:
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    data = _loads(text, args.file)
    if not isinstance(data, dict) or "dim" not in data:
        raise InputError("expected an object with 'dim' and 'brackets'")
    try:
        g = LieAlgebra.from_json(data)
    except NotALieAlgebra:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad structure constants: {exc}") from None
    return analyze_algebra(g), EXIT_OK


def cmd_cohomology(args) -> tuple:
    g = load_algebra(args.id, parse_params(args.params))
    reps = [[str(w) for w in representatives(g, k)] for k in range(g.dim + 1)]
    return {"algebra": args.id if not args.params else str(resolve_id(args.id, parse_params(args.params))), "betti": betti_numbers(g), "representatives": reps}, EXIT_OK


def cmd_symplectic(args) -> tuple:
    g = load_algebra(args.id, parse_params(args.params))
    if g.dim % 2:
        raise InputError("odd-dimensional algebra")
    space = closed_two_forms(g)
    ok, w = admits_symplectic(g)
    out = {
        "closed_forms": str(space.generic_element),
        "pfaffian": str(pfaffian_on_closed(g, space)),
        "symplectic": ok,
    }
    if args.witness:
        out["witness"] = _witness(w)
    if args.exact:
        e_ok, e_w = exact_symplectic(g)
        out["exact"] = {"symplectic": e_ok, "witness": _witness(e_w)}
    if args.ideals:
        if not ok:
            out["ideals"] = []
        else:
            out["ideals"] = [
                {k: (_sub(v) if isinstance(v, Subspace) else v) for k, v in r.items()} for r in isotropic_ideals(g, w.form)
            ]
            if g.dim == 4:
                found = lagrangian_ideal_search(g)
                out["lagrangian_search"] = {"result": found[0], "ideal": _sub(found[1]) if found[0] == "found" else None}
    return out, EXIT_OK


def cmd_construct(args) -> tuple:
    if args.kind == "cotangent":
        h = load_algebra(args.h)
        rho = _loads(args.rho, "--rho")
        if not isinstance(rho, list) or len(rho) != h.dim:
            raise InputError(f"--rho needs one matrix per basis element of h ({h.dim})")
        mod = Module(h, [_matrix(m, "--rho") for m in rho])
        alpha = {}
        raw = _loads(args.alpha, "--alpha") if args.alpha else {}
        if not isinstance(raw, dict):
            raise InputError('--alpha must be an object like {"1,2": ["0", "1"]}')
        for key, vec in raw.items():
            try:
                a, b = (int(x) for x in key.split(","))
            except ValueError:
                raise InputError(f"bad alpha key {key!r}") from None
            alpha[(a, b)] = [Q(x) for x in vec]
        data = CotangentData(h, mod, alpha)
        g, w0, _ = cotangent_extension(data)
        return {"algebra": g.to_json(), "omega0": str(w0), "is_solution": is_solution(data), "identification": _id(g)}, EXIT_OK
    B = load_algebra(args.B)
    data = DoubleExtData(B, _form(args.omega, B.dim), _matrix(_loads(args.delta, "--delta"), "--delta"), [Q(x) for x in _loads(args.z, "--z")])
    g, w = double_extension(data)
    return {"algebra": g.to_json(), "omega": str(w), "symplectic": is_symplectic_form(g, w), "identification": _id(g)}, EXIT_OK


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def render_text(command: str, result: dict) -> str:
    lines = []
    if command == "reproduce":
        for r in result["rows"]:
            lines.append(f"{r['status']}  {r['row']}  [{r['instance']}]")
            lines += [f"      {n}" for n in r["notes"]]
        lines.append(f"{result['table']}: {result['passed']} passed, {result['failed']} failed")
        return "\n".join(lines)
    for key, val in result.items():
        if isinstance(val, (dict, list)):
            val = json.dumps(val, sort_keys=True)
        lines.append(f"{key}: {val}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--params", nargs="*", metavar="K=V", help="family parameters")
    common.add_argument("--grid", type=int, default=None, help="sampling grid half-width for parameter families")

    p = argparse.ArgumentParser(prog="symplie", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common])
    c.add_argument("action", choices=["list", "show"])
    c.add_argument("id", nargs="?")

    r = sub.add_parser("reproduce", parents=[common])
    r.add_argument("table", choices=sorted(TABLES))
    r.add_argument("--n", type=int, default=2, help="half dimension for the obstruction families")

    a = sub.add_parser("analyze", parents=[common])
    a.add_argument("file")

    h = sub.add_parser("cohomology", parents=[common])
    h.add_argument("id")

    s = sub.add_parser("symplectic", parents=[common])
    s.add_argument("id")
    s.add_argument("--witness", action="store_true")
    s.add_argument("--exact", action="store_true")
    s.add_argument("--ideals", action="store_true")

    k = sub.add_parser("construct", parents=[common])
    ks = k.add_subparsers(dest="kind", required=True)
    kc = ks.add_parser("cotangent", parents=[common])
    kc.add_argument("--h", required=True)
    kc.add_argument("--rho", required=True)
    kc.add_argument("--alpha", default=None)
    kd = ks.add_parser("double-ext", parents=[common])
    kd.add_argument("--B", required=True)
    kd.add_argument("--omega", required=True)
    kd.add_argument("--delta", required=True)
    kd.add_argument("--z", required=True)
    return p


COMMANDS = {
    "catalog": cmd_catalog,
    "reproduce": cmd_reproduce,
    "analyze": cmd_analyze,
    "cohomology": cmd_cohomology,
    "symplectic": cmd_symplectic,
    "construct": cmd_construct,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result, code = COMMANDS[args.command](args)
    except (NotALieAlgebra, IncompatibleDerivation, NotACocycle) as exc:
        triple = getattr(exc, "triple", None)
        where = f" on basis triple {tuple(triple)}" if triple else ""
        print(f"error: Jacobi identity fails{where}", file=err)
        return EXIT_JACOBI
    except (InputError, InvalidParameter, UnknownAlgebra, ValueError, LookupError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INPUT
    if args.json:
        inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "json") and v is not None}
        report = {"command": ["symplie"] + argv, "inputs": inputs, "results": result, "status": "PASS" if code == EXIT_OK else "FAIL"}
        print(json.dumps(report, indent=2, sort_keys=True), file=out)
    else:
        print(render_text(args.command, result), file=out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
