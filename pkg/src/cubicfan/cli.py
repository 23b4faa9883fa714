"""Batch command-line front end.

One job per invocation; every result is a line-delimited JSON record
with a fixed field order, so identical inputs produce byte-identical
output.  Errors exit nonzero after emitting a single structured record
with a machine-readable code on stderr.

Input formats:
  curve         "p:a:b"   (decimal integers)
  point         "x,y" or "O"
  points file   one point per line; blank lines and #-comments ignored
  arrangement   JSON {"curve": "p:a:b",
                      "members": [{"P": "x,y", "pair": [k, l]}, ...]}
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrangement import (build_arrangement, parity_criterion, partition_invariant,
                          phi, phi_fibers, splitting_predicate)
from .classify import enumerate_partitions, partition_count, zariski_nple
from .curve import Curve, format_point
from .errors import BadInput, CubicfanError
from .tangent import iter_admissible_points, tangent_fan
from .verify import run_verify


def _record(**fields) -> str:
    return json.dumps(fields, separators=(", ", ": "))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(_record(error="BadInput", message=message) + "\n")
        raise SystemExit(2)


def _emit(lines, path):
    text = "".join(line + "\n" for line in lines)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)


def _read_points_file(path, curve):
    points = []
    with open(path) as handle:
        for lineno, line in enumerate(handle, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            try:
                points.append(curve.parse_point(body))
            except CubicfanError as exc:
                raise BadInput(f"{path}:{lineno}: {exc}")
    return points


def _read_arrangement_file(path):
    with open(path) as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise BadInput(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise BadInput(f"{path}: top level must be an object")
    if "curve" not in doc:
        raise BadInput(f"{path}: missing field 'curve'")
    curve = Curve.parse(str(doc["curve"]))
    members = doc.get("members")
    if not isinstance(members, list) or not members:
        raise BadInput(f"{path}: 'members' must be a non-empty list")
    choices = []
    for k, entry in enumerate(members):
        if not isinstance(entry, dict):
            raise BadInput(f"{path}: members[{k}] must be an object")
        for field in ("P", "pair"):
            if field not in entry:
                raise BadInput(f"{path}: members[{k}] missing field '{field}'")
        try:
            P = curve.parse_point(str(entry["P"]))
        except CubicfanError as exc:
            raise BadInput(f"{path}: members[{k}].P: {exc}")
        pair = entry["pair"]
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, int) for v in pair)):
            raise BadInput(f"{path}: members[{k}].pair must be two integers")
        choices.append((P, tuple(pair)))
    return curve, choices


def cmd_torsion(args):
    E = Curve.parse(args.curve)
    T = E.two_torsion()
    return [_record(curve=E.format(),
                    t1=format_point(T.t1),
                    t2=format_point(T.t2),
                    t3=format_point(T.t3))]


def cmd_tangents(args):
    E = Curve.parse(args.curve)
    P = E.parse_point(args.point)
    fan = tangent_fan(E, P)
    lines = [_record(curve=E.format(), base=format_point(P),
                     q1=format_point(fan.tangent_point(1)),
                     q2=format_point(fan.tangent_point(2)),
                     q3=format_point(fan.tangent_point(3)),
                     q4=format_point(fan.tangent_point(4)),
                     l1=fan.line(1).format(), l2=fan.line(2).format(),
                     l3=fan.line(3).format(), l4=fan.line(4).format(),
                     t1=format_point(fan.torsion.t1),
                     t2=format_point(fan.torsion.t2),
                     t3=format_point(fan.torsion.t3))]
    for pair, torsion in fan.pair_table():
        lines.append(_record(pair=list(pair),
                             torsion=format_point(torsion),
                             label=f"T{fan.torsion.label_of(torsion)}"))
    return lines


def cmd_partition(args):
    curve, choices = _read_arrangement_file(args.input)
    A = build_arrangement(curve, choices)
    fibers = phi_fibers(A)
    invariant = partition_invariant(A)
    lines = [_record(curve=curve.format(), n=A.n,
                     fibers=list(fibers),
                     partition=list(invariant.as_tuple()))]
    for i, member in enumerate(A.members):
        T = phi(A, i)
        lines.append(_record(member=i, P=format_point(member.base),
                             pair=list(member.indices),
                             torsion=format_point(T),
                             label=f"T{member.fan.torsion.label_of(T)}"))
    for i in range(A.n):
        row = [None if i == j else splitting_predicate(A, i, j)
               for j in range(A.n)]
        lines.append(_record(member=i, splitting=row))
    return lines


def cmd_yn(args):
    return [_record(n=args.n, count=partition_count(args.n))]


def cmd_enumerate(args):
    return [_record(partition=list(part.as_tuple()))
            for part in enumerate_partitions(args.n)]


def cmd_realize(args):
    E = Curve.parse(args.curve)
    points = _read_points_file(args.input, E)
    if len(points) < args.n:
        raise BadInput(f"{args.input}: need {args.n} points, found {len(points)}")
    family = zariski_nple(E, points, args.n)
    lines = []
    for A in family:
        invariant = partition_invariant(A)
        lines.append(_record(
            curve=E.format(),
            target=list(invariant.as_tuple()),
            points=[format_point(m.base) for m in A.members],
            pairs=[list(m.indices) for m in A.members],
            partition=list(invariant.as_tuple()),
            fibers=list(phi_fibers(A))))
    return lines


def cmd_verify(args):
    results = run_verify(args.seed, args.trials)
    lines = [_record(check=r.name, trials=r.trials, failures=r.failures,
                     status="pass" if r.passed else "fail",
                     detail=r.detail)
             for r in results]
    if all(r.passed for r in results):
        lines.append(_record(result="all properties passed"))
        return lines
    lines.append(_record(result="failures detected"))
    raise _VerifyFailed(lines)


class _VerifyFailed(Exception):
    def __init__(self, lines):
        self.lines = lines


def cmd_scan_points(args):
    E = Curve.parse(args.curve)
    lines = [_record(point=format_point(P)) for P in iter_admissible_points(E)]
    lines.append(_record(curve=E.format(), admissible=len(lines)))
    return lines


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubicfan",
                     description="tangent-line fans, splitting numbers and "
                                 "3-partition invariants on cubics over F_p")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **flags):
        p = sub.add_parser(name)
        for flag, spec in flags.items():
            p.add_argument(flag, **spec)
        p.add_argument("--output", default=None, help="output file (default stdout)")
        p.set_defaults(handler=handler)
        return p

    add("torsion", cmd_torsion,
        **{"--curve": dict(required=True, help="curve as p:a:b")})
    add("tangents", cmd_tangents,
        **{"--curve": dict(required=True, help="curve as p:a:b"),
           "--point": dict(required=True, help="base point as x,y")})
    add("partition", cmd_partition,
        **{"--input": dict(required=True, help="arrangement JSON file")})
    add("yn", cmd_yn,
        **{"--n": dict(required=True, type=int, help="number of base points")})
    add("enumerate", cmd_enumerate,
        **{"--n": dict(required=True, type=int, help="number of base points")})
    add("realize", cmd_realize,
        **{"--curve": dict(required=True, help="curve as p:a:b"),
           "--input": dict(required=True, help="points file, one x,y per line"),
           "--n": dict(required=True, type=int, help="family size")})
    add("verify", cmd_verify,
        **{"--seed": dict(default=1, type=int, help="random seed"),
           "--trials": dict(default=100, type=int, help="trial count")})
    add("scan-points", cmd_scan_points,
        **{"--curve": dict(required=True, help="curve as p:a:b")})
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        lines = args.handler(args)
    except _VerifyFailed as failed:
        _emit(failed.lines, args.output)
        sys.stderr.write(_record(error="VerificationFailed",
                                 message="property suite reported failures") + "\n")
        return 1
    except CubicfanError as exc:
        sys.stderr.write(_record(error=exc.code, message=str(exc)) + "\n")
        return 1
    except OSError as exc:
        sys.stderr.write(_record(error="BadInput", message=str(exc)) + "\n")
        return 1
    _emit(lines, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
