"""
Command line front end.

    skewinv noether problem.yaml --method arrangement --json out.json
    skewinv examples

Every command builds one report document (printed as a table, optionally
written as JSON).  The exit status is 0 when every asserted check passes,
1 when one fails, 2 for bad input and 3 when group enumeration hits its cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .algebra import EXTERIOR, SKEW, AlgebraCtx, SkewPoly, render
from .arrangements import intersection_ideal, minimal_generators, random_arrangement
from .catalog import SIGN_LINE, SWAP, TWO_COPIES_SIGN
from .errors import EnumerationCapExceeded, SkewInvError
from .groups import DEFAULT_CAP, enumerate_group, is_signed_permutation, matrix_key
from .invariants import algebra_generators, fixed_space, molien_series, subalgebra_spans
from .pipeline import (
    ARRANGEMENT,
    DIRECT,
    bound_transference_experiment,
    check_gansub,
    invariant_generators_via_arrangement,
    noether_check,
    squarefree_invariant_dims,
    squarefree_probe,
)
from .problem import Problem, load_problem

BETA_MEANS = "largest degree in a minimal homogeneous generating set of the invariant ring (0 if it is only the constants)"

COMMANDS = ("group", "invariants", "molien", "noether", "gansub", "arrangement", "transfer", "examples")


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


class Report:
    """Ordered report document plus the asserted checks."""

    def __init__(self, command: str):
        self.data: dict = {"command": command}
        self.checks: dict[str, bool] = {}

    def __setitem__(self, key, value):
        self.data[key] = value

    def check(self, name: str, ok: bool):
        self.checks[name] = bool(ok)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def document(self) -> dict:
        doc = dict(self.data)
        doc["checks"] = dict(self.checks)
        doc["ok"] = self.ok
        return doc


def _context(p: Problem, cap: int | None, order: int) -> AlgebraCtx:
    if p.rule == EXTERIOR:
        return AlgebraCtx.exterior(p.n, p.names)
    cap = cap or p.cap or 2 * order
    return AlgebraCtx(p.n, p.rule, cap, p.names)


def _group(p: Problem, args):
    if not p.generators:
        return enumerate_group([], args.group_cap, n=p.n)
    return enumerate_group(p.generators, args.group_cap)


def _gens_doc(gens) -> list[dict]:
    return [{"degree": d, "poly": render(f)} for d, f in gens]


def cmd_group(p: Problem, args, rep: Report):
    G = _group(p, args)
    orders = [G.element_order(g) for g in G.elements]
    rep["n"] = G.n
    rep["order"] = G.order
    rep["generators"] = [matrix_key(g) for g in G.generators]
    rep["element_orders"] = orders
    rep.check("element orders divide |G|", all(G.order % k == 0 for k in orders))


def cmd_invariants(p: Problem, args, rep: Report):
    G = _group(p, args)
    ctx = _context(p, args.cap, G.order)
    if args.method == ARRANGEMENT:
        gens = invariant_generators_via_arrangement(G, ctx)
    else:
        gens = algebra_generators(G, ctx)
    fixed = [fixed_space(G, ctx, d).dim for d in range(ctx.cap + 1)]
    reached = [s.dim for s in subalgebra_spans(gens, ctx, ctx.cap)]
    rep["method"] = args.method
    rep["rule"] = ctx.rule
    rep["cap"] = ctx.cap
    rep["order"] = G.order
    rep["generators"] = _gens_doc(gens)
    rep["beta"] = gens.beta
    rep["beta_means"] = BETA_MEANS
    rep["truncated"] = gens.truncated
    rep["invariant_dims"] = fixed
    rep["generated_dims"] = reached
    rep.check("generators span every invariant degree", fixed == reached)


def cmd_molien(p: Problem, args, rep: Report):
    G = _group(p, args)
    ctx = _context(p, args.cap, G.order)
    series = molien_series(G, ctx)
    fixed = [fixed_space(G, ctx, d).dim for d in range(ctx.cap + 1)]
    rep["rule"] = ctx.rule
    rep["coefficients"] = [_q(c) for c in series]
    rep["fixed_dims"] = fixed
    rep.check("molien agrees with fixed spaces", [Fraction(k) for k in fixed] == series)


def cmd_noether(p: Problem, args, rep: Report):
    G = _group(p, args)
    ctx = _context(p, args.cap, G.order)
    r = noether_check(G, ctx, args.method)
    rep.data.update(r.to_dict())
    rep["beta_means"] = BETA_MEANS
    if ctx.rule == SKEW and all(is_signed_permutation(g) for g in G.elements):
        # findings only; nothing here is asserted
        rep["above_bound"] = [
            {"degree": d, "generator": render(f), "squarefree": sf} for d, f, sf in squarefree_probe(G, ctx)
        ]
        rep["squarefree_invariant_dims"] = {str(d): k for d, k in squarefree_invariant_dims(G, ctx).items()}
    if r.asserted:
        rep.check("beta <= |G|", r.passed)


def cmd_gansub(p: Problem, args, rep: Report):
    G = _group(p, args)
    if p.rule != EXTERIOR:
        raise SkewInvError("gansub needs the exterior rule")
    r = check_gansub(G, AlgebraCtx.exterior(p.n, p.names))
    rep.data.update(r.to_dict())
    rep.check("hilbert ideal equals eliminated arrangement ideal", r.all_equal)


def _arrangement_entry(A) -> dict:
    ctx = AlgebraCtx.exterior(A.ambient_dim)
    I = intersection_ideal(A, ctx)
    gens = minimal_generators(I)
    return {
        "ambient": A.ambient_dim,
        "subspaces": len(A),
        "subspace_dims": [W.span.dim for W in A.subspaces],
        "ideal_dims": I.dims(),
        "generators": _gens_doc(gens),
        "max_generator_degree": gens.beta,
    }


def cmd_arrangement(p: Problem | None, args, rep: Report):
    if p is not None and p.arrangement is not None:
        e = _arrangement_entry(p.arrangement)
        rep.data.update(e)
        rep.check("generated in degree <= number of subspaces", e["max_generator_degree"] <= e["subspaces"])
        return
    if args.seed is None:
        raise SkewInvError("arrangement needs a problem with an 'arrangement' section or --seed")
    rng = random.Random(args.seed)
    trials = []
    for _ in range(args.trials):
        n = rng.choice([3, 4, 5])
        t = rng.choice([2, 3, 4])
        e = _arrangement_entry(random_arrangement(rng, n, t))
        del e["generators"]
        trials.append(e)
    rep["seed"] = args.seed
    rep["trials"] = trials
    rep.check("every trial generated in degree <= t", all(e["max_generator_degree"] <= e["subspaces"] for e in trials))


def cmd_transfer(p: Problem, args, rep: Report):
    W = p.experiment_W or p.generators
    if not W:
        raise SkewInvError("transfer needs group matrices (experiment.W or group)")
    G = enumerate_group(W, args.group_cap)
    v_dims = p.v_dims or [1, 2, 3]
    r = bound_transference_experiment(G, v_dims)
    rep.data.update(r.to_dict())
    rep.check("max beta_ext <= max beta_sym", r.holds)


def builtin_examples() -> list[dict]:
    """Run the worked examples and compare with their known answers."""
    out = []

    def record(name, got, expected):
        out.append({"name": name, "got": got, "expected": expected, "ok": got == expected})

    E2 = AlgebraCtx.exterior(2, ("x", "y"))
    G = enumerate_group([SWAP])
    gens = algebra_generators(G, E2)
    record("swap on Λ(x,y)", {"generators": [render(f) for f in gens.polys()], "beta": gens.beta},
           {"generators": ["x + y"], "beta": 1})

    G = enumerate_group([SIGN_LINE])
    gens = algebra_generators(G, E2)
    record("sign line on Λ(x,y)", {"generators": [render(f) for f in gens.polys()], "beta": gens.beta},
           {"generators": ["x"], "beta": 1})

    E4 = AlgebraCtx.exterior(4, ("x1", "x2", "y1", "y2"))
    G = enumerate_group([TWO_COPIES_SIGN])
    gens = algebra_generators(G, E4)
    record("two copies of the sign action on Λ(x1,x2,y1,y2)",
           {"generators": [render(f) for f in gens.polys()], "beta": gens.beta, "order": G.order},
           {"generators": ["x1", "x2", "y1∧y2"], "beta": 2, "order": 2})

    F = AlgebraCtx.skew(2, 4, ("x", "y"))
    G = enumerate_group([SWAP])
    f1 = SkewPoly.var(F, 0) + SkewPoly.var(F, 1)
    gens = algebra_generators(G, F)
    record("swap on the (-1)-skew ring, cap 4",
           {"f1^2": render(f1 * f1), "generators": [render(f) for f in gens.polys()], "beta": gens.beta, "order": G.order},
           {"f1^2": "x^2 + y^2", "generators": ["x + y", "x^3 + y^3"], "beta": 3, "order": 2})
    return out


def cmd_examples(p, args, rep: Report):
    results = builtin_examples()
    rep["examples"] = results
    for r in results:
        rep.check(r["name"], r["ok"])


HANDLERS = {
    "group": cmd_group,
    "invariants": cmd_invariants,
    "molien": cmd_molien,
    "noether": cmd_noether,
    "gansub": cmd_gansub,
    "arrangement": cmd_arrangement,
    "transfer": cmd_transfer,
    "examples": cmd_examples,
}


def _fmt(v) -> str:
    if isinstance(v, list) and v and isinstance(v[0], dict):
        return "\n" + "\n".join("    " + ", ".join("%s=%s" % kv for kv in item.items()) for item in v)
    if isinstance(v, list) and v and isinstance(v[0], str):
        return ", ".join(v)
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    return str(v)


def print_table(doc: dict, elapsed: float | None, stream=sys.stdout):
    for k, v in doc.items():
        if k in ("checks", "ok"):
            continue
        print("%-22s %s" % (k, _fmt(v)), file=stream)
    for name, ok in doc["checks"].items():
        print("[%s] %s" % ("PASS" if ok else "FAIL", name), file=stream)
    if elapsed is not None:
        print("time                   %.3fs" % elapsed, file=stream)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewinv", description="Invariants of finite groups on exterior and skew algebras.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", nargs="?", help="problem file (YAML or JSON)")
    ap.add_argument("--method", choices=(DIRECT, ARRANGEMENT), default=DIRECT)
    ap.add_argument("--cap", type=int, help="degree cap for skew/symmetric rules")
    ap.add_argument("--group-cap", type=int, default=DEFAULT_CAP, help="maximum group order to enumerate")
    ap.add_argument("--seed", type=int, help="seed for the random arrangement battery")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--json", metavar="PATH", help="write the report document here ('-' for stdout)")
    ap.add_argument("--quiet", action="store_true", help="skip the table view")
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(args.command)
    t0 = time.perf_counter()
    try:
        problem = None
        if args.problem:
            problem = load_problem(args.problem)
        elif args.command not in ("examples", "arrangement"):
            raise SkewInvError("command %r needs a problem file" % args.command)
        HANDLERS[args.command](problem, args, rep)
    except EnumerationCapExceeded as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except (SkewInvError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - t0
    doc = rep.document()
    if args.json:
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    if not args.quiet and args.json != "-":
        print_table(doc, elapsed)
    return 0 if rep.ok else 1


def main():
    sys.exit(run())
