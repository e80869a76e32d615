"""Command-line front end.

Exit codes: 0 ok, 2 invariant failure (Jacobi, failed isoclinism check),
3 parse error, 4 methods disagree, 5 unsupported request.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import _backend
from .cohomology import bogomolov_cohomological, homology_details
from .exactlinalg import Field, FieldError
from .families import FAMILY_NAMES, FamilySpec, ParameterError, class2_corpus
from .hopf import ClassTooHigh, check_five_term, hopf_details
from .isoclinism import DimMismatch, IsoclinismError, IsoclinismWitness, verify
from .liealg import (
    LieAlgebra,
    LieAlgebraError,
    NotAnIdealError,
    center,
    change_field,
    derived_subalgebra,
    ideal_closure,
    lower_central_series,
    nilpotency_class,
    validate,
)
from .varietyspan import (
    Certainty,
    ConfigError,
    EnumerationTooLarge,
    Mode,
    SaturationConfig,
    WedgeIndex,
    commuting_wedge_space,
)

OK, INVARIANT, PARSE, DISAGREE, UNSUPPORTED = 0, 2, 3, 4, 5


class ParseError(ValueError):
    pass


class Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------- algebra files

def algebra_to_json(L: LieAlgebra, ideal=None) -> dict:
    F = L.field
    out = {
        "dim": L.dim,
        "field": F.to_json(),
        "labels": list(L.labels),
        "brackets": [{"i": i, "j": j, "value": {str(k): F.fmt(c) for k, c in col.items()}}
                     for (i, j), col in L.brackets.items()],
    }
    if ideal is not None:
        out["ideal"] = [[F.fmt(x) for x in v] for v in ideal.basis]
    return out


def _field_from_json(d) -> Field:
    if not isinstance(d, dict) or "type" not in d:
        raise ParseError("field must be an object with a type")
    if d["type"] == "Q":
        return Field.rationals()
    if d["type"] == "GF":
        p = d.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError("GF field needs an integer p")
        return Field.prime(p)
    raise ParseError(f"unknown field type {d['type']!r}")


def _nat(x, what):
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise ParseError(f"{what} must be a non-negative integer")
    return x


def algebra_from_json(data) -> tuple[LieAlgebra, list | None]:
    """Parse an algebra file; returns the algebra and raw ideal generators."""
    try:
        if not isinstance(data, dict):
            raise ParseError("algebra file must be a JSON object")
        n = _nat(data.get("dim"), "dim")
        F = _field_from_json(data.get("field", {"type": "Q"}))
        brackets = {}
        for entry in data.get("brackets", []):
            i, j = _nat(entry.get("i"), "i"), _nat(entry.get("j"), "j")
            if not i < j < n:
                raise ParseError(f"bracket ({i}, {j}) needs i < j < dim")
            if (i, j) in brackets:
                raise ParseError(f"duplicate bracket ({i}, {j})")
            col = {}
            for k, v in entry.get("value", {}).items():
                k = int(k)
                if not 0 <= k < n:
                    raise ParseError(f"basis index {k} out of range")
                col[k] = F(v)
            brackets[(i, j)] = col
        L = LieAlgebra(n, F, brackets, data.get("labels"))
        ideal = None
        if "ideal" in data:
            ideal = [tuple(F(x) for x in v) for v in data["ideal"]]
            if any(len(v) != n for v in ideal):
                raise ParseError("ideal generators must have length dim")
        return L, ideal
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def read_algebra(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return algebra_from_json(json.loads(text))
    except OSError as exc:
        raise Exit(PARSE, f"cannot read {path}: {exc}") from exc
    except (json.JSONDecodeError, ParseError, FieldError, LieAlgebraError) as exc:
        raise Exit(PARSE, f"parse error in {path}: {exc}") from exc


def load_valid(path: str, field: str | None = None):
    L, ideal = read_algebra(path)
    if field:
        try:
            L = change_field(L, Field.parse(field))
            ideal = None if ideal is None else [tuple(L.field(x) for x in v) for v in ideal]
        except FieldError as exc:
            raise Exit(PARSE, str(exc)) from exc
    diag = validate(L)
    if not diag:
        raise Exit(INVARIANT, f"Jacobi identity fails on triple {list(diag.triple)}")
    return L, ideal


# ---------------------------------------------------------------- output

def emit(obj, args, lines=False):
    if lines:
        text = "".join(json.dumps(o, sort_keys=True) + "\n" for o in obj)
    elif getattr(args, "format", "json") == "table":
        text = _table(obj)
    else:
        text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(obj, prefix="") -> str:
    out = []
    for k in sorted(obj):
        v = obj[k]
        if isinstance(v, dict):
            out.append(_table(v, f"{prefix}{k}."))
        else:
            out.append(f"{prefix}{k}: {json.dumps(v) if isinstance(v, list) else v}\n")
    return "".join(out)


def config_from(args) -> SaturationConfig:
    try:
        return SaturationConfig(
            mode=Mode.EXHAUSTIVE if args.exhaustive else Mode.RANDOMIZED,
            rng_seed=args.seed,
            coefficient_bound=args.coeff_bound,
            stabilization_window=args.window,
            sample_cap=args.samples,
        )
    except ConfigError as exc:
        raise Exit(UNSUPPORTED, str(exc)) from exc


def algebra_meta(L: LieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "field": str(L.field),
        "class": nilpotency_class(L),
        "derived_dim": derived_subalgebra(L).dim,
        "center_dim": center(L).dim,
    }


# ---------------------------------------------------------------- reports

METHODS = ("cohomology", "homology", "hopf")


def multiplier_report(L: LieAlgebra, cfg: SaturationConfig, method: str = "all",
                      representatives: bool = False, timing: bool = False) -> dict:
    """Dimensions of Z², B², H², W and B₀ by the requested method(s)."""
    wanted = METHODS if method == "all" else (method,)
    clock = {}
    b0, certs, skipped = {}, [], {}
    rep = {"algebra": algebra_meta(L), "config": cfg.to_json()}
    t = time.perf_counter()
    W = commuting_wedge_space(L, cfg)
    clock["wspace"] = time.perf_counter() - t
    certs.append(W.certainty)
    dims = {"W": W.dim, "lambda2": len(WedgeIndex(L.dim))}
    if "cohomology" in wanted or representatives:
        t = time.perf_counter()
        C = bogomolov_cohomological(L, cfg, W=W)
        clock["cohomology"] = time.perf_counter() - t
        dims.update({k: v for k, v in C.dims.items() if k != "B0"})
        if "cohomology" in wanted:
            b0["cohomology"] = C.dims["B0"]
        if representatives:
            F = L.field
            rep["representatives"] = [[F.fmt(x) for x in r] for r in C.representatives]
    if "homology" in wanted:
        t = time.perf_counter()
        H = homology_details(L, cfg, W=W)
        clock["homology"] = time.perf_counter() - t
        dims["H2_homology"] = H.H2
        b0["homology"] = H.B0
    if "hopf" in wanted:
        t = time.perf_counter()
        try:
            Hd = hopf_details(L, cfg)
        except ClassTooHigh:
            if method == "hopf":
                raise
            skipped["hopf"] = "class too high"
        else:
            b0["hopf"] = Hd.B0
            certs.append(Hd.certainty)
        clock["hopf"] = time.perf_counter() - t
    rep["dims"] = dims
    rep["B0"] = b0
    rep["agree"] = len(set(b0.values())) <= 1
    rep["certainty"] = (Certainty.EXACT if all(c is Certainty.EXACT for c in certs)
                        else Certainty.MONTE_CARLO).value
    if skipped:
        rep["skipped"] = skipped
    if timing:
        rep["timing"] = {k: round(v, 6) for k, v in clock.items()}
    return rep


# ---------------------------------------------------------------- commands

def cmd_validate(args):
    L, _ = read_algebra(args.file)
    diag = validate(L)
    if not diag:
        emit({"valid": False, "triple": list(diag.triple),
              "residual": [L.field.fmt(x) for x in diag.residual]}, args)
        return INVARIANT
    emit({"valid": True, "dim": L.dim, "field": str(L.field)}, args)
    return OK


def cmd_info(args):
    L, _ = load_valid(args.file, args.field)
    meta = algebra_meta(L)
    meta["lower_central_series"] = [s.dim for s in lower_central_series(L)]
    meta["labels"] = list(L.labels)
    emit(meta, args)
    return OK


def cmd_bogomolov(args):
    L, _ = load_valid(args.file, args.field)
    rep = multiplier_report(L, config_from(args), args.method,
                            args.representatives, args.timing)
    emit(rep, args)
    return OK if rep["agree"] else DISAGREE


def cmd_family(args):
    try:
        spec = FamilySpec(args.name, tuple(args.params), Field.parse(args.field), args.seed)
        if args.parent:
            L, M = spec.build_with_ideal()
            if M is None:
                raise Exit(UNSUPPORTED, f"family {args.name} has no parent algebra")
            emit(algebra_to_json(L, M.space), args)
        else:
            emit(algebra_to_json(spec.build()), args)
    except (ParameterError, FieldError) as exc:
        raise Exit(UNSUPPORTED, str(exc)) from exc
    return OK


def cmd_wspace(args):
    L, _ = load_valid(args.file, args.field)
    cfg = config_from(args)
    W = commuting_wedge_space(L, cfg)
    rep = {"algebra": algebra_meta(L), "config": cfg.to_json(), "W": W.dim,
           "lambda2": len(WedgeIndex(L.dim)), "certainty": W.certainty.value,
           "samples_used": W.samples_used}
    if args.basis:
        rep["basis"] = [[L.field.fmt(x) for x in r] for r in W.space.basis]
    emit(rep, args)
    return OK


def cmd_five_term(args):
    L, gens = load_valid(args.file, args.field)
    if gens is None:
        raise Exit(PARSE, "five-term needs an 'ideal' entry in the algebra file")
    M = ideal_closure(L, gens)
    cfg = config_from(args)
    rep = check_five_term(L, M, cfg).to_json()
    rep.update({"algebra": algebra_meta(L), "config": cfg.to_json(), "ideal_dim": M.dim})
    emit(rep, args)
    return OK if rep["exact"] else INVARIANT


def cmd_sweep(args):
    cfg = config_from(args)
    try:
        corpus = class2_corpus(args.count, args.seed, args.max_dim, Field.parse(args.field or "Q"))
    except (ParameterError, FieldError) as exc:
        raise Exit(UNSUPPORTED, str(exc)) from exc
    reports = []
    for name, L in corpus:
        rep = multiplier_report(L, cfg, args.method)
        rep["name"] = name
        reports.append(rep)
    emit(reports, args, lines=True)
    return OK if all(r["agree"] for r in reports) else DISAGREE


def cmd_isoclinism_check(args):
    L, _ = load_valid(args.left)
    K, _ = load_valid(args.right)
    try:
        with open(args.witness, encoding="utf-8") as fh:
            w = IsoclinismWitness.from_json(json.load(fh), L.field)
    except (OSError, json.JSONDecodeError, IsoclinismError, FieldError) as exc:
        raise Exit(PARSE, f"bad witness: {exc}") from exc
    try:
        ok = verify(L, K, w)
    except DimMismatch as exc:
        emit({"isoclinic": False, "reason": str(exc)}, args)
        return INVARIANT
    emit({"isoclinic": ok}, args)
    return OK if ok else INVARIANT


# ---------------------------------------------------------------- parser

def _sat_flags(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500, help="random sample cap")
    p.add_argument("--window", type=int, default=20, help="stabilization window")
    p.add_argument("--coeff-bound", type=int, default=10)
    p.add_argument("--exhaustive", action="store_true",
                   help="enumerate every field point (GF(p) only)")


def _common(p, field=True):
    if field:
        p.add_argument("--field", default=None, help="reinterpret over Q or GF:p")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--out", default=None)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is our invariant code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bogomolov",
                                 description="Schur and Bogomolov multipliers of Lie algebras")
    ap.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({_backend.NAME} kernels)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the Jacobi identity")
    p.add_argument("file")
    _common(p, field=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="structural invariants")
    p.add_argument("file")
    _common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("bogomolov", help="H² and B₀ dimensions")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--representatives", action="store_true")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")
    _sat_flags(p)
    _common(p)
    p.set_defaults(func=cmd_bogomolov)

    p = sub.add_parser("family", help="emit a named family as an algebra file")
    p.add_argument("name", choices=FAMILY_NAMES)
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--field", default="Q")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parent", action="store_true",
                   help="emit the parent algebra with its ideal (quotient families)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_family, format="json")

    p = sub.add_parser("wspace", help="dimension of the commuting-wedge space")
    p.add_argument("file")
    p.add_argument("--basis", action="store_true")
    _sat_flags(p)
    _common(p)
    p.set_defaults(func=cmd_wspace)

    p = sub.add_parser("five-term", help="exactness of the five-term dimension sequence")
    p.add_argument("file", help="algebra file with an 'ideal' entry")
    _sat_flags(p)
    _common(p)
    p.set_defaults(func=cmd_five_term)

    p = sub.add_parser("sweep", help="JSON lines over a seeded random class-2 corpus")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-dim", type=int, default=8)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    _sat_flags(p)
    _common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("isoclinism-check", help="verify an isoclinism witness")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("witness", help="JSON with alpha and beta matrices")
    _common(p, field=False)
    p.set_defaults(func=cmd_isoclinism_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ClassTooHigh, EnumerationTooLarge, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except NotAnIdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVARIANT


if __name__ == "__main__":
    sys.exit(main())
