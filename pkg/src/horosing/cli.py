"""Command line front end: divisor documents in, JSON reports out.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 not
Q-Gorenstein, 5 failed precondition.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
import warnings
from fractions import Fraction

from .classify import classify
from .divisor import ColoredPolyhedralDivisor, ColorRecord, CurveData, degree, support, validate
from .errors import (
    InvalidRank,
    InvalidSpec,
    NoWitness,
    NotLogTerminal,
    NotQGorenstein,
    OutsideCone,
    ParseError,
    ValidationError,
)
from .geometry import Cone, Polyhedron
from .rootsys import CONVENTION, RootSystemSpec, cartan_matrix, color_coefficients
from .stringy import stringy_series
from .weight import discrepancy, omega_eval, solve_weight

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_NOT_QG, EXIT_PRECONDITION = 0, 2, 3, 4, 5

_TOP_KEYS = {"rank", "tail_cone", "curve", "coefficients", "colors"}
_REQUIRED_TOP = {"rank", "tail_cone", "curve", "coefficients"}


def _line_of(text, token):
    """Best-effort 1-based line of the first occurrence of ``token``."""
    if text is None or token is None:
        return None
    idx = text.find(token)
    return text.count("\n", 0, idx) + 1 if idx >= 0 else None


class _Reader:
    def __init__(self, text):
        self.text = text

    def fail(self, reason, token=None):
        raise ParseError(reason, _line_of(self.text, token))

    def obj(self, value, where, required, optional=()):
        if not isinstance(value, dict):
            self.fail(f"{where} must be an object")
        unknown = set(value) - set(required) - set(optional)
        if unknown:
            key = sorted(unknown)[0]
            self.fail(f"unknown key {key!r} in {where}", f'"{key}"')
        missing = set(required) - set(value)
        if missing:
            self.fail(f"missing field {sorted(missing)[0]!r} in {where}")
        return value

    def integer(self, value, where):
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(f"{where} must be an integer")
        return value

    def rational(self, value, where):
        if isinstance(value, bool):
            self.fail(f"{where}: booleans are not rationals")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            if not re.fullmatch(r"\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*", value):
                self.fail(f"{where}: {value!r} is not an integer or p/q rational", f'"{value}"')
            try:
                return Fraction(value.replace(" ", ""))
            except ZeroDivisionError:
                self.fail(f"{where}: zero denominator in {value!r}", f'"{value}"')
        self.fail(f"{where}: expected an integer or a \"p/q\" string, got {value!r}")

    def vectors(self, value, where, length, integral=False):
        if not isinstance(value, list):
            self.fail(f"{where} must be a list of vectors")
        out = []
        for k, v in enumerate(value):
            if not isinstance(v, list) or len(v) != length:
                self.fail(f"{where}[{k}] must be a list of length {length}")
            if integral:
                out.append(tuple(self.integer(x, f"{where}[{k}]") for x in v))
            else:
                out.append(tuple(self.rational(x, f"{where}[{k}]") for x in v))
        return out


def parse_divisor(text: str, check: bool = True) -> ColoredPolyhedralDivisor:
    """Parse a divisor document; validation runs afterwards unless ``check`` is false."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    r = _Reader(text)
    r.obj(doc, "document", _REQUIRED_TOP, _TOP_KEYS - _REQUIRED_TOP)
    rank = r.integer(doc["rank"], "rank")
    if rank < 1:
        r.fail("rank must be at least 1", '"rank"')
    tail_doc = r.obj(doc["tail_cone"], "tail_cone", {"rays"})
    tail = Cone(r.vectors(tail_doc["rays"], "tail_cone.rays", rank, integral=True), rank=rank)

    cdoc = r.obj(doc["curve"], "curve", {"genus", "complete", "points"})
    genus = r.integer(cdoc["genus"], "curve.genus")
    if not isinstance(cdoc["complete"], bool):
        r.fail("curve.complete must be a boolean", '"complete"')
    pts = cdoc["points"]
    if not isinstance(pts, list) or not all(isinstance(p, str) for p in pts):
        r.fail("curve.points must be a list of strings", '"points"')
    curve = CurveData(genus, cdoc["complete"], tuple(pts))

    if not isinstance(doc["coefficients"], list):
        r.fail("coefficients must be a list", '"coefficients"')
    coeffs = {}
    for k, c in enumerate(doc["coefficients"]):
        where = f"coefficients[{k}]"
        r.obj(c, where, {"point", "vertices"}, {"rays"})
        label = c["point"]
        if not isinstance(label, str):
            r.fail(f"{where}.point must be a string")
        if label in coeffs:
            r.fail(f"duplicate coefficient for point {label!r}", f'"{label}"')
        verts = r.vectors(c["vertices"], f"{where}.vertices", rank)
        if not verts:
            r.fail(f"{where}.vertices is empty")
        rec = tail
        if "rays" in c:
            rec = Cone(r.vectors(c["rays"], f"{where}.rays", rank, integral=True), rank=rank)
        coeffs[label] = Polyhedron(verts, rec)

    colors = []
    for k, c in enumerate(doc.get("colors", [])):
        where = f"colors[{k}]"
        r.obj(c, where, {"label", "vector", "a"})
        if not isinstance(c["label"], str):
            r.fail(f"{where}.label must be a string")
        vec = r.vectors([c["vector"]], f"{where}.vector", rank, integral=True)[0]
        colors.append(ColorRecord(c["label"], vec, r.integer(c["a"], f"{where}.a")))

    d = ColoredPolyhedralDivisor(rank, tail, curve, coeffs, tuple(colors))
    if check:
        validate(d)
    return d


def _q(x):
    return str(Fraction(x))


def divisor_document(d: ColoredPolyhedralDivisor) -> dict:
    coeffs = []
    for y in d.curve.points:
        if y not in d.coefficients:
            continue
        p = d.coefficients[y]
        entry = {"point": y, "vertices": [[_q(x) for x in v] for v in p.vertices]}
        if p.recession != d.tail:
            entry["rays"] = [list(g) for g in p.recession.generators]
        coeffs.append(entry)
    return {
        "rank": d.rank,
        "tail_cone": {"rays": [list(g) for g in d.tail.generators]},
        "curve": {"genus": d.curve.genus, "complete": d.curve.complete, "points": list(d.curve.points)},
        "coefficients": coeffs,
        "colors": [{"label": c.label, "vector": list(c.vector), "a": c.a} for c in d.colors],
    }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return _q(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, ColoredPolyhedralDivisor):
        return divisor_document(obj)
    if isinstance(obj, Polyhedron):
        return {"vertices": _jsonable(obj.vertices), "rays": _jsonable(obj.recession.generators)}
    if dataclasses.is_dataclass(obj):
        out = {f.name: _jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj) if f.repr}
        if hasattr(obj, "discrepancy") and not callable(obj.discrepancy):
            out["discrepancy"] = _jsonable(obj.discrepancy)
        return out
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def emit_report(report) -> str:
    """Deterministic JSON: sorted keys, rationals as ``"p/q"`` strings."""
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        d = parse_divisor(_read(path))
    return d, [str(w.message) for w in caught]


def _csv(text, conv):
    return [conv(x) for x in text.split(",") if x.strip()]


_LEVELS = {
    "lt": ["log_terminal"],
    "lc": ["log_canonical", "lc_case"],
    "canonical": ["canonical"],
    "terminal": ["terminal"],
}


def _cmd_validate(args):
    d, warns = _load(args.file)
    deg = degree(d)
    return EXIT_OK, {"valid": True, "support": support(d), "degree": deg, "warnings": warns}


def _cmd_classify(args):
    d, _ = _load(args.file)
    rep = classify(d)
    if not rep.q_gorenstein:
        return EXIT_NOT_QG, {"q_gorenstein": False, "reason": rep.reason, "conflicts": rep.conflicts}
    full = _jsonable(rep)
    if args.level == "all":
        keys = ["log_terminal", "log_canonical", "lc_case", "canonical", "terminal"]
    else:
        keys = _LEVELS[args.level]
    out = {"q_gorenstein": True}
    out.update({k: full[k] for k in keys})
    levels = {"log_terminal", "canonical", "terminal"} & set(keys)
    out["witnesses"] = {k: v for k, v in full["witnesses"].items() if k in levels}
    return EXIT_OK, out


def _cmd_omega(args):
    d, _ = _load(args.file)
    w = solve_weight(d)
    nu = _csv(args.vector, Fraction)
    ell = Fraction(args.ell)
    om = omega_eval(w, d, args.point, nu, ell)
    return EXIT_OK, {
        "point": args.point,
        "vector": nu,
        "ell": ell,
        "omega": om,
        "discrepancy": discrepancy(w, d, args.point, nu, ell),
    }


def _cmd_stringy(args):
    d, _ = _load(args.file)
    s = stringy_series(d, Fraction(args.min_exponent))
    return EXIT_OK, {
        "prefactor": s.prefactor,
        "coefficients": {"P": "[C_X - supp]", "T": "L - 1"},
        "truncation": s.truncation,
        "denominator": s.denominator,
        "terms": [{"exponent": t.exponent, "P": t.n_open, "T": t.n_special} for t in s.terms],
    }


def _cmd_roots(args):
    phi = _csv(args.phi, int)
    spec = RootSystemSpec(((args.type, args.rank),), tuple(phi))
    coeffs = color_coefficients(spec)
    return EXIT_OK, {
        "convention": CONVENTION,
        "cartan_matrix": cartan_matrix(args.type, args.rank),
        "coefficients": {f"alpha{i}": a for i, a in coeffs.items()},
    }


def _cmd_oracle(args):
    from . import toric

    d, _ = _load(args.file)
    ok, reason = toric.eligible(d)
    if not ok:
        return EXIT_PRECONDITION, {"error": "precondition", "message": f"not eligible: {reason}"}
    expected = toric.toric_verdicts(d)
    rep = classify(d)
    got = {"q_gorenstein": rep.q_gorenstein}
    if rep.q_gorenstein:
        got.update(log_terminal=rep.log_terminal, log_canonical=rep.log_canonical,
                   canonical=rep.canonical, terminal=rep.terminal)
    return EXIT_OK, {"toric": expected, "weight": got, "agree": expected == got}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="horosing", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("validate", help="check a divisor document")
    s.add_argument("file")
    s.set_defaults(func=_cmd_validate)
    s = sub.add_parser("classify", help="singularity verdicts")
    s.add_argument("file")
    s.add_argument("--level", choices=["lt", "lc", "canonical", "terminal", "all"], default="all")
    s.set_defaults(func=_cmd_classify)
    s = sub.add_parser("omega", help="evaluate the weight function")
    s.add_argument("file")
    s.add_argument("--point", required=True)
    s.add_argument("--vector", required=True, help="comma separated rationals")
    s.add_argument("--ell", required=True)
    s.set_defaults(func=_cmd_omega)
    s = sub.add_parser("stringy", help="truncated stringy series")
    s.add_argument("file")
    s.add_argument("--min-exponent", required=True)
    s.set_defaults(func=_cmd_stringy)
    s = sub.add_parser("roots", help="Cartan matrix and color coefficients")
    s.add_argument("--type", required=True)
    s.add_argument("--rank", required=True, type=int)
    s.add_argument("--phi", required=True, help="comma separated 1-based indices")
    s.set_defaults(func=_cmd_roots)
    s = sub.add_parser("oracle", help="cross-check against the toric model")
    s.add_argument("file")
    s.set_defaults(func=_cmd_oracle)
    return p


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        code, report = args.func(args)
    except ParseError as exc:
        code, report = EXIT_PARSE, {"error": "parse", "message": exc.reason, "line": exc.line}
    except (ValidationError, InvalidRank, InvalidSpec, NoWitness) as exc:
        code, report = EXIT_INVALID, {"error": "validation", "message": str(exc)}
    except NotQGorenstein as exc:
        code, report = EXIT_NOT_QG, {"error": "not_q_gorenstein", "message": exc.reason,
                                     "conflicts": exc.constraints}
    except (OutsideCone, NotLogTerminal, ValueError) as exc:
        code, report = EXIT_PRECONDITION, {"error": "precondition", "message": str(exc)}
    except OSError as exc:
        code, report = EXIT_PARSE, {"error": "parse", "message": str(exc), "line": None}
    out.write(emit_report(report))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
