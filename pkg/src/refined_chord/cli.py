"""Command-line front end: parse degrees, compute, cross-check, tabulate.

Degree grammar accepted by every command:

* a vector list ``(a,b)^k`` with comma separators, exponent optional, e.g.
  ``"(-1,0)^2,(0,-2),(1,1)^2"`` (the Unicode minus sign is normalized);
* ``P2:d`` for the triangle degree of plane curves of degree d;
* ``P2:d:l1,l2,...`` for the same with vertical ends grouped by a partition;
* ``P1xP1:a,b`` for the rectangle degree with b horizontal and a vertical
  pairs of opposite ends.

Exit codes: 0 success, 1 cross-check mismatch (``verify``), 2 parse or
validation errors and guard violations. Results go to stdout, diagnostics
to stderr. The environment variable ``REFINED_CHORD_CACHE`` names a default
persistent memo file for ``compute``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from itertools import groupby
from typing import Dict, List, Optional, Tuple

from .chord_recursion import refined_invariant
from .direct_enumerator import (
    GenericityFailure,
    ORACLE_END_GUARD,
    TooLarge,
    oracle_invariant,
)
from .lattice import Degree, Vec, canonical_key, cp2_degree, make_degree
from .refined_poly import RefinedPolynomial

CACHE_ENV = "REFINED_CHORD_CACHE"
CACHE_VERSION = 1
TABLE_DEGREE_GUARD = 5


class ParseError(ValueError):
    """A degree spec does not match the grammar; carries the position."""

    def __init__(self, message: str, pos: Optional[int] = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class CacheVersionError(ValueError):
    """The cache file announces a format version this build cannot read."""


_VEC = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _normalize(text: str) -> str:
    return text.replace("−", "-").strip()


def parse_vector(text: str) -> Vec:
    s = _normalize(text)
    mo = _VEC.fullmatch(s)
    if not mo:
        raise ParseError(f"expected a vector '(x,y)', got {text!r}")
    return (int(mo.group(1)), int(mo.group(2)))


def parse_degree(spec: str) -> Degree:
    """Parse the degree grammar; raises :class:`ParseError` with a position,
    or the validation errors of :func:`make_degree` for bad vector lists."""
    s = _normalize(spec)
    if not s:
        raise ParseError("empty degree spec", 0)
    if s.startswith("P2:"):
        return _parse_p2(s)
    if s.startswith("P1xP1:"):
        return _parse_p1xp1(s)
    return _parse_vector_list(s)


def _parse_int(text: str, what: str, pos: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {text!r}", pos) from None


def _parse_p2(s: str) -> Degree:
    parts = s.split(":")
    if len(parts) == 2:
        d = _parse_int(parts[1], "degree", 3)
        return cp2_degree(d, [1] * d)
    if len(parts) == 3:
        d = _parse_int(parts[1], "degree", 3)
        lam = [_parse_int(x, "partition part", 3) for x in parts[2].split(",")]
        return cp2_degree(d, lam)
    raise ParseError("malformed P2 macro, expected P2:d or P2:d:l1,l2,...", 0)


def _parse_p1xp1(s: str) -> Degree:
    body = s[len("P1xP1:"):]
    nums = body.split(",")
    if len(nums) != 2:
        raise ParseError("malformed P1xP1 macro, expected P1xP1:a,b", 0)
    a = _parse_int(nums[0], "count", 6)
    b = _parse_int(nums[1], "count", 6)
    if a < 1 or b < 1:
        raise ParseError(f"P1xP1 counts must be positive, got {a},{b}", 6)
    return make_degree(
        [(-1, 0)] * b + [(1, 0)] * b + [(0, -1)] * a + [(0, 1)] * a
    )


def _parse_vector_list(s: str) -> Degree:
    vecs: List[Vec] = []
    pos = 0
    n = len(s)
    while pos < n:
        while pos < n and s[pos].isspace():
            pos += 1
        mo = _VEC.match(s, pos)
        if not mo:
            raise ParseError("expected a vector '(x,y)'", pos)
        vec = (int(mo.group(1)), int(mo.group(2)))
        pos = mo.end()
        mult = 1
        if pos < n and s[pos] == "^":
            mo2 = re.compile(r"\^(\d+)").match(s, pos)
            if not mo2 or int(mo2.group(1)) < 1:
                raise ParseError("exponent must be a positive integer", pos)
            mult = int(mo2.group(1))
            pos = mo2.end()
        vecs.extend([vec] * mult)
        while pos < n and s[pos].isspace():
            pos += 1
        if pos < n:
            if s[pos] != ",":
                raise ParseError("expected ',' between vectors", pos)
            pos += 1
    return make_degree(vecs)


def render_degree(d: Degree) -> str:
    """Vector-list form with grouped multiplicities; parses back to ``d``."""
    parts = []
    for v, grp in groupby(d.vectors):
        k = len(list(grp))
        parts.append(f"({v[0]},{v[1]})" + (f"^{k}" if k > 1 else ""))
    return ",".join(parts)


# -- persistent memo store ---------------------------------------------------


def load_cache(path: str) -> Dict[str, RefinedPolynomial]:
    """Read a JSON-lines cache file: a version header, then one entry per
    line. Unknown versions are rejected rather than guessed at."""
    cache: Dict[str, RefinedPolynomial] = {}
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().strip()
        if not first:
            return cache
        header = json.loads(first)
        if header.get("version") != CACHE_VERSION:
            raise CacheVersionError(
                f"cache version {header.get('version')!r} unsupported (want {CACHE_VERSION})"
            )
        for line in fh:
            line = line.strip()
            if not line:
                continue
            entry = json.loads(line)
            cache[entry["key"]] = RefinedPolynomial.from_json_dict(entry["poly"])
    return cache


def save_cache(path: str, cache: Dict[str, RefinedPolynomial]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"version": CACHE_VERSION}) + "\n")
        for key in sorted(cache):
            fh.write(
                json.dumps({"key": key, "poly": cache[key].to_json_dict()}) + "\n"
            )


def _render(poly: RefinedPolynomial, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(poly.to_json_dict(), separators=(",", ":"))
    return poly.to_text()


# -- commands -----------------------------------------------------------------


def cmd_compute(args) -> int:
    d = parse_degree(args.spec)
    v1 = parse_vector(args.v1) if args.v1 else None
    vm = parse_vector(args.vm) if args.vm else None
    cache_path = args.cache_path or os.environ.get(CACHE_ENV)
    cache: Dict[str, RefinedPolynomial] = {}
    if cache_path and os.path.exists(cache_path):
        cache = load_cache(cache_path)
    value = refined_invariant(d, v1=v1, vm=vm, cache=cache)
    if v1 is None and vm is None:
        cache.setdefault(canonical_key(d), value)
    print(_render(value, args.format))
    if cache_path:
        save_cache(cache_path, cache)
    return 0


def cmd_oracle(args) -> int:
    d = parse_degree(args.spec)
    value = oracle_invariant(d, seed=args.seed, max_ends=args.max_ends)
    print(_render(value, args.format))
    return 0


def cmd_verify(args) -> int:
    d = parse_degree(args.spec)
    if d.m > ORACLE_END_GUARD:
        raise TooLarge(f"degree has {d.m} ends, oracle guard is {ORACLE_END_GUARD}")
    recursion = refined_invariant(d, cache={})
    print(f"recursion: {recursion.to_text()}")
    ok = True
    for seed in range(args.seeds):
        oracle = oracle_invariant(d, seed=seed)
        agree = oracle == recursion
        ok = ok and agree
        print(f"oracle[seed={seed}]: {oracle.to_text()} "
              f"({'agree' if agree else 'MISMATCH'})")
    print("verified: all seeds agree" if ok else "FAILED: engines disagree")
    return 0 if ok else 1


def _partitions(n: int, largest: Optional[int] = None):
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def render_partition(parts: Tuple[int, ...]) -> str:
    out = []
    for p, grp in groupby(parts):
        k = len(list(grp))
        out.append(f"{p}^{k}" if k > 1 else f"{p}")
    return ",".join(out)


def cmd_table(args) -> int:
    if args.max_degree > TABLE_DEGREE_GUARD:
        raise ValueError(
            f"table guard: max degree {TABLE_DEGREE_GUARD}, got {args.max_degree}"
        )
    if args.max_degree < 1:
        raise ValueError("max degree must be at least 1")
    cache: Dict[str, RefinedPolynomial] = {}
    for d in range(1, args.max_degree + 1):
        lams = sorted(_partitions(d), key=lambda p: (-len(p), p))
        for lam in lams:
            value = refined_invariant(cp2_degree(d, list(lam)), cache=cache)
            print(f"N_{d}({render_partition(lam)}) = {value.to_text()}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="refined-chord",
        description="Refined counts of rational plane tropical curves "
        "through boundary points.",
    )
    sub = parser.add_subparsers(required=True, dest="command")

    p = sub.add_parser("compute", help="compute the invariant by the chord recursion")
    p.add_argument("spec", help="degree spec, e.g. 'P2:3' or '(-1,0),(0,-1),(1,1)'")
    p.add_argument("--v1", help="first chord end, e.g. '(-1,0)'")
    p.add_argument("--vm", help="last chord end, e.g. '(1,1)'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache-path", help=f"memo file (default ${CACHE_ENV})")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="compute the invariant by brute force")
    p.add_argument("spec")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-ends", type=int, default=ORACLE_END_GUARD,
                   help="raise the factorial-growth guard explicitly")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="cross-check recursion against the oracle")
    p.add_argument("spec")
    p.add_argument("--seeds", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print the triangle-degree invariants")
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TooLarge, GenericityFailure, ValueError) as exc:
        # ParseError, degree validation, cache version and guard failures
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    _entry()
