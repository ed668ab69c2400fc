"""Command-line front end.

    sylvester eval --ring "GF(2)[t]/(t^3)" --rank "art(2)" --matrix "t"
    sylvester decompose --ring Z --rank "convex(1/2*ded(prime:2,k=1), 1/2*ded0)" \\
        --candidates prime:2,prime:3 --depth 3 --json

Exit codes: 0 success, 1 verification violations, 2 parse error,
3 mathematical precondition failure.
"""
from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Sequence, TextIO, Tuple

from ..axiom_verifier.checks import CHECKS, VerifierConfig, verify_suite
from ..decomposition.core import (RankOracle, decompose_artinian, decompose_global,
                                  decompose_product)
from ..ideal_structure.ideals import factor_generator, parse_descriptor
from ..ideal_structure.quotients import SkewQuotient
from ..matrix_forms.euclid import diagonalize_skew, smith_form
from ..matrix_forms.local import diagonalize_local_artinian
from ..matrix_forms.matrix import RingMatrix, parse_matrix
from ..rank_functions.grammar import parse_rank
from ..rank_functions.operations import Bounds, _ideal_candidates, extreme_set
from ..rank_functions.ranks import eval_matrix, primary_order
from ..ring_core.base import AlgebraError, ParseError, Ring, UnsupportedRing
from ..ring_core.composite import Product
from ..ring_core.fields import Integers, IntegerQuotient
from ..ring_core.parse import parse_element, parse_ring, split_top
from ..ring_core.polyrings import PolyQuotient, PolyRing
from ..ring_core.skew import SkewLaurent, SkewPoly, center

SUBCOMMANDS = ("eval", "dim", "diag", "smith", "decompose", "extremes", "center", "factor",
               "verify")

EXIT_OK, EXIT_VIOLATIONS, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class PreconditionError(AlgebraError, ValueError):
    """A well-formed command whose inputs fail a mathematical precondition."""


@dataclass(frozen=True)
class Command:
    """A parsed invocation in canonical form."""

    subcommand: str
    ring: str
    rank: Optional[str] = None
    matrix: Optional[str] = None
    element: Optional[str] = None
    candidates: Optional[Tuple[str, ...]] = None
    depth: Optional[int] = None
    seed: Optional[int] = None
    trials: Optional[int] = None
    json: bool = False

    def argv(self) -> List[str]:
        out = [self.subcommand, "--ring", self.ring]
        if self.rank is not None:
            out += ["--rank", self.rank]
        if self.matrix is not None:
            out += ["--matrix", self.matrix]
        if self.element is not None:
            out += ["--element", self.element]
        if self.candidates is not None:
            out += ["--candidates", ",".join(self.candidates)]
        for flag in ("depth", "seed", "trials"):
            v = getattr(self, flag)
            if v is not None:
                out += [f"--{flag}", str(v)]
        if self.json:
            out.append("--json")
        return out

    def text(self) -> str:
        return shlex.join(self.argv())


class _ArgParser(argparse.ArgumentParser):
    """Raise instead of printing usage and exiting."""

    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="sylvester", description="Exact Sylvester matrix rank functions.")
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--ring", required=True, help="ring spec, e.g. 'GF(2)[t]/(t^3)'")
        s.add_argument("--rank", help="rank spec, e.g. 'art(2)' or 'convex(1/2*ded0, ...)'")
        s.add_argument("--matrix", help="'a,b;c,d', JSON, or '-' for stdin")
        s.add_argument("--matrix-file", help="file holding the matrix text")
        s.add_argument("--element", help="ring element (factor)")
        s.add_argument("--candidates", help="comma-separated ideals, e.g. prime:2,prime:3")
        s.add_argument("--depth", type=int)
        s.add_argument("--seed", type=int)
        s.add_argument("--trials", type=int)
        s.add_argument("--json", action="store_true")
    return p


def parse_command(argv: Sequence[str], stdin: Optional[TextIO] = None) -> Command:
    """argv -> canonical Command; raises ParseError for malformed input."""
    parser = build_parser()
    ns = parser.parse_args(list(argv))
    R = parse_ring(ns.ring)
    rank = None
    if ns.rank is not None:
        rank = parse_rank(ns.rank, R).text()
    matrix_text = ns.matrix
    if ns.matrix_file is not None:
        if matrix_text is not None:
            raise ParseError("give --matrix or --matrix-file, not both", ns.matrix_file, 0)
        with open(ns.matrix_file) as fh:
            matrix_text = fh.read()
    elif matrix_text == "-":
        matrix_text = (stdin or sys.stdin).read()
    matrix = parse_matrix(matrix_text, R).text() if matrix_text is not None else None
    element = str(parse_element(R, ns.element)) if ns.element is not None else None
    cands = None
    if ns.candidates is not None:
        cands = tuple(parse_descriptor(c.strip(), R).text()
                      for c in split_top(ns.candidates, ",") if c.strip())
    for flag in ("depth", "trials"):
        v = getattr(ns, flag)
        if v is not None and v < 0:
            raise ParseError(f"--{flag} must be nonnegative", str(v), 0)
    return Command(ns.subcommand, str(R), rank, matrix, element, cands, ns.depth, ns.seed,
                   ns.trials, ns.json)


# -- execution -------------------------------------------------------------
def _need(cmd: Command, *fields: str):
    for f in fields:
        if getattr(cmd, f) is None:
            raise ParseError(f"{cmd.subcommand} needs --{f}", cmd.text(), 0)


def _fmt(x: Fraction) -> str:
    return str(Fraction(x))


def _table(rows: List[Tuple[str, ...]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _certificate(R: Ring, A: RingMatrix):
    if isinstance(R, (IntegerQuotient, PolyQuotient, SkewQuotient)):
        return diagonalize_local_artinian(A)
    if isinstance(R, (SkewLaurent, SkewPoly)):
        return diagonalize_skew(A)
    if isinstance(R, (Integers, PolyRing)):
        return smith_form(A)
    raise UnsupportedRing(f"no diagonal form over {R}")


def execute(cmd: Command) -> Tuple[int, str]:
    R = parse_ring(cmd.ring)
    name = cmd.subcommand
    if name in ("eval", "dim"):
        _need(cmd, "rank", "matrix")
        rk = parse_rank(cmd.rank, R)
        A = parse_matrix(cmd.matrix, R)
        v = eval_matrix(rk, A)
        if name == "dim":
            v = A.cols - v
        return EXIT_OK, json.dumps({"value": _fmt(v)}) if cmd.json else _fmt(v)
    if name in ("diag", "smith"):
        _need(cmd, "matrix")
        A = parse_matrix(cmd.matrix, R)
        if name == "smith":
            if not (isinstance(R, Integers) or (isinstance(R, PolyRing) and R.base.is_field)):
                raise PreconditionError(f"Smith form needs Z or K[x] with K a field, got {R}")
            cert = smith_form(A)
        else:
            cert = _certificate(R, A)
        if cmd.json:
            return EXIT_OK, json.dumps(cert.to_json())
        lines = ["diagonal: " + ", ".join(str(d) for d in cert.diagonal)]
        if cert.t_shift:
            lines.append(f"t_shift: {cert.t_shift}")
        lines += ["P:", str(cert.p_matrix()), "Q:", str(cert.q_matrix())]
        return EXIT_OK, "\n".join(lines)
    if name == "decompose":
        _need(cmd, "rank")
        rk = parse_rank(cmd.rank, R)
        return EXIT_OK, _decompose(R, rk, cmd)
    if name == "extremes":
        bounds = Bounds(max_k=cmd.depth) if cmd.depth else Bounds()
        if cmd.candidates is not None:
            bounds = replace(bounds, candidates=tuple(parse_descriptor(c, R)
                                                      for c in cmd.candidates))
        ex = [e.text() for e in extreme_set(R, bounds)]
        return EXIT_OK, json.dumps({"extremes": ex}) if cmd.json else "\n".join(ex)
    if name == "center":
        Z = center(R)
        info = {"center": str(Z.ring), "period": Z.period, "description": Z.description()}
        return EXIT_OK, json.dumps(info) if cmd.json else Z.description()
    if name == "factor":
        text = cmd.element
        if text is None and cmd.matrix is not None:
            A = parse_matrix(cmd.matrix, R)
            if A.shape != (1, 1):
                raise PreconditionError("factor takes one element")
            text = str(A[0, 0])
        if text is None:
            raise ParseError("factor needs --element", cmd.text(), 0)
        fac = factor_generator(parse_element(R, text), R)
        if cmd.json:
            return EXIT_OK, json.dumps({"unit": str(fac.unit),
                                        "factors": [{"ideal": d.text(), "e": e}
                                                    for d, e in fac.factors]})
        return EXIT_OK, fac.text()
    if name == "verify":
        _need(cmd, "rank")
        rk = parse_rank(cmd.rank, R)
        cfg = VerifierConfig(trials=cmd.trials if cmd.trials is not None else 500,
                             seed=cmd.seed or 0)
        res = verify_suite([rk], cfg)
        bad = res.violations
        if cmd.json:
            out = json.dumps([v.to_dict() for v in bad])
        else:
            rows = [("check", "violations")]
            for c in CHECKS:
                rows.append((c, str(sum(1 for v in bad if _check_of(v.axiom) == c))))
            out = _table(rows)
            for v in bad[:10]:
                out += f"\n{v.axiom} ({v.relation}) trial {v.trial}: {v.lhs} vs {v.rhs}"
        return (EXIT_VIOLATIONS if bad else EXIT_OK), out
    raise ParseError(f"unknown subcommand {name!r}", name, 0)


def _check_of(axiom: str) -> str:
    if axiom.startswith("SMat"):
        return "smat"
    if axiom.startswith("SMod"):
        return "smod"
    return axiom


def _decompose(R: Ring, rk, cmd: Command) -> str:
    oracle = RankOracle.of(rk)
    if isinstance(R, Product):
        lam, o1, o2 = decompose_product(oracle)
        out = {"lambda": _fmt(lam)}
        for key, o in (("left", o1), ("right", o2)):
            if o is None:
                out[key] = None
                continue
            try:
                primary_order(o.ring)
                out[key] = decompose_artinian(o).to_dict()
            except UnsupportedRing:
                out[key] = "not decomposed"
        return json.dumps(out) if cmd.json else _product_text(out)
    if isinstance(R, (IntegerQuotient, PolyQuotient, SkewQuotient)):
        res = decompose_artinian(oracle)
    else:
        if cmd.candidates is not None:
            cands = [parse_descriptor(c, R) for c in cmd.candidates]
            complete = True
        else:
            cands = _ideal_candidates(R, Bounds())
            complete = False
        res = decompose_global(oracle, cands, cmd.depth if cmd.depth is not None else 4, complete)
    if cmd.json:
        return res.to_json()
    rows = [("ideal", "k", "c")]
    for (ideal, k), c in sorted(res.coefficients.items()):
        rows.append((ideal, str(k), _fmt(c)))
    lines = [_table(rows)]
    if res.c0 is not None:
        lines.append(f"c0 in [{_fmt(res.c0[0])}, {_fmt(res.c0[1])}]")
    lines.append(f"residual {_fmt(res.residual)}")
    lines.append("exact" if res.exact else "not exact")
    return "\n".join(lines)


def _product_text(out: dict) -> str:
    lines = [f"lambda {out['lambda']}"]
    for key in ("left", "right"):
        lines.append(f"{key}: {json.dumps(out[key])}")
    return "\n".join(lines)


def _is_precondition(exc: Exception) -> bool:
    """Well-formed text that names something mathematically invalid (art(5) on (t^3))."""
    if not isinstance(exc, ParseError):
        return True
    cause = exc.__cause__
    return isinstance(cause, (AlgebraError, ValueError)) and not isinstance(cause, ParseError)


def _report(exc: Exception, err: TextIO) -> int:
    if _is_precondition(exc):
        print(f"precondition failed: {exc}", file=err)
        return EXIT_PRECONDITION
    print(f"parse error: {exc}", file=err)
    return EXIT_PARSE


def run(argv: Sequence[str], out: TextIO = None, err: TextIO = None,
        stdin: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cmd = parse_command(argv, stdin)
    except OSError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except (AlgebraError, ValueError) as exc:
        return _report(exc, err)
    try:
        code, text = execute(cmd)
    except (AlgebraError, ValueError, ArithmeticError) as exc:
        return _report(exc, err)
    if text:
        print(text, file=out)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
