"""
Problem files.

A problem is a YAML (or JSON) mapping.  Rational entries must be integers
or strings such as ``"-3/4"``; floats are rejected so nothing is rounded.

    variables: 2
    rule: exterior            # exterior | skew | symmetric
    cap: 4                    # optional, needed for skew/symmetric
    names: [x, y]             # optional
    group:                    # generator matrices, row-major
      - [[0, 1], [1, 0]]
    arrangement:              # optional
      ambient: 3
      subspaces:
        - span: [[1, 0, 0]]
        - forms: [["1/2", 1, 0]]
    experiment:               # optional, for ``transfer``
      W: [[[-1]]]
      V_dims: [1, 2, 3]
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import yaml

from .algebra import EXTERIOR, SKEW, SYMMETRIC
from .arrangements import Arrangement, Subspace
from .errors import ProblemFileError
from .linalg import Matrix

RULE_ALIASES = {
    "exterior": EXTERIOR,
    "skew": SKEW,
    "skew_minus_one": SKEW,
    "symmetric": SYMMETRIC,
}

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ProblemFileError("boolean is not a rational: %r" % (x,))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.match(x):
        try:
            return Fraction(x.replace(" ", ""))
        except ZeroDivisionError:
            raise ProblemFileError("zero denominator in %r" % x) from None
    raise ProblemFileError("malformed rational %r (use an integer or a 'p/q' string)" % (x,))


def parse_matrix(M, n: int | None = None, square: bool = True) -> Matrix:
    if not isinstance(M, list) or not M or not all(isinstance(r, list) for r in M):
        raise ProblemFileError("a matrix must be a non-empty list of rows")
    rows = tuple(tuple(parse_rational(x) for x in r) for r in M)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ProblemFileError("ragged matrix")
    if square and width != len(rows):
        raise ProblemFileError("matrix is %dx%d, not square" % (len(rows), width))
    if n is not None and len(rows) != n:
        raise ProblemFileError("matrix is %dx%d, expected %dx%d" % (len(rows), width, n, n))
    return rows


def _vectors(V, m: int):
    if not isinstance(V, list):
        raise ProblemFileError("expected a list of vectors")
    out = []
    for v in V:
        if not isinstance(v, list) or len(v) != m:
            raise ProblemFileError("vector length must be %d" % m)
        out.append([parse_rational(x) for x in v])
    return out


def parse_arrangement(data) -> Arrangement:
    if not isinstance(data, dict) or "ambient" not in data:
        raise ProblemFileError("arrangement needs 'ambient' and 'subspaces'")
    m = data["ambient"]
    if not isinstance(m, int) or m < 1:
        raise ProblemFileError("ambient must be a positive integer")
    subs = []
    for entry in data.get("subspaces") or []:
        if not isinstance(entry, dict) or len(entry) != 1 or not set(entry) <= {"span", "forms"}:
            raise ProblemFileError("each subspace is {span: [...]} or {forms: [...]}")
        ((kind, vecs),) = entry.items()
        vecs = _vectors(vecs, m)
        subs.append(Subspace.from_span(vecs, m) if kind == "span" else Subspace.from_forms(vecs, m))
    if not subs:
        raise ProblemFileError("arrangement has no subspaces")
    return Arrangement(m, tuple(subs))


@dataclass
class Problem:
    n: int
    rule: str = EXTERIOR
    cap: int | None = None
    names: tuple[str, ...] = ()
    generators: list[Matrix] = field(default_factory=list)
    arrangement: Arrangement | None = None
    experiment_W: list[Matrix] | None = None
    v_dims: list[int] = field(default_factory=list)


def parse_problem(data) -> Problem:
    if not isinstance(data, dict):
        raise ProblemFileError("problem file must hold a mapping")
    n = data.get("variables")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ProblemFileError("'variables' must be a positive integer")
    rule = RULE_ALIASES.get(str(data.get("rule", "exterior")))
    if rule is None:
        raise ProblemFileError("rule must be one of exterior, skew, symmetric")
    cap = data.get("cap")
    if cap is not None and (not isinstance(cap, int) or cap < 1):
        raise ProblemFileError("cap must be a positive integer")
    names = tuple(str(x) for x in data.get("names") or ())
    if names and len(names) != n:
        raise ProblemFileError("need %d names" % n)
    gens = [parse_matrix(M, n) for M in data.get("group") or []]
    arr = parse_arrangement(data["arrangement"]) if data.get("arrangement") else None
    W = v_dims = None
    exp = data.get("experiment")
    if exp:
        if not isinstance(exp, dict):
            raise ProblemFileError("experiment must be a mapping")
        W = [parse_matrix(M) for M in exp.get("W") or []] or None
        v_dims = exp.get("V_dims") or []
        if not all(isinstance(k, int) and k >= 1 for k in v_dims):
            raise ProblemFileError("V_dims must be positive integers")
    return Problem(n, rule, cap, names, gens, arr, W, list(v_dims or []))


def load_problem(path: str | Path) -> Problem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ProblemFileError("cannot read %s: %s" % (path, e)) from None
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ProblemFileError("cannot parse %s: %s" % (path, e)) from None
    return parse_problem(data)
