"""Command-line front end.

One command per process; every report echoes the command, its options and
the box/degree-bound certificates it used, and the output bytes are a
deterministic function of the input.  Exit codes: 0 success, 1 verification
failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import chem as chem_mod
from . import decompose as dec_mod
from . import games as games_mod
from . import groebner
from . import horn as horn_mod
from .errors import BinlatError, ParseError, VerificationFailed
from .schemas import (
    binomial_json,
    cyclo_json,
    fraction_str,
    ideal_json,
    parse_input,
    prime_json,
)

ORDER_NOTE = "degrevlex, identity permutation"
SCALAR_NOTE = "class scalars oriented as x^u == lambda x^v with u the order-larger exponent"


def _fractions_csv(text, what):
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ParseError("%s: expected comma-separated rationals, got %r" % (what, text))


def _ints_csv(text, what):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError("%s: expected comma-separated integers, got %r" % (what, text))


def _report(command, options, payload, verification, status="ok"):
    return {
        "command": command,
        "options": options,
        "order": ORDER_NOTE,
        "scalar_convention": SCALAR_NOTE,
        "payload": payload,
        "verification": verification,
        "status": status,
    }


# ---------------------------------------------------------------------------
# ideal subcommands
# ---------------------------------------------------------------------------

def cmd_ideal_gb(args):
    ideal = parse_input(args.file, "ideal")
    gb = groebner.reduced_groebner(ideal)
    payload = {"reduced_groebner_basis": ideal_json(gb),
               "is_unit_ideal": groebner.contains_one(gb)}
    return _report(["ideal", "gb", args.file], {}, payload, {})


def cmd_ideal_decompose(args):
    ideal = parse_input(args.file, "ideal")
    names = ideal.var_names()
    res = dec_mod.primary_decompose(ideal, degree_bound=args.degree_bound,
                                    budget=args.budget)
    comps = []
    for c in res.components:
        comps.append({
            "prime": prime_json(c.prime, names),
            "ideal": ideal_json(c.ideal),
            "cutoff_exponent": c.cutoff_exponent,
        })
    payload = {"components": comps}
    verification = dict(res.verification)
    return _report(["ideal", "decompose", args.file],
                   {"degree_bound": args.degree_bound, "budget": args.budget},
                   payload, verification)


def cmd_ideal_assoc(args):
    ideal = parse_input(args.file, "ideal")
    names = ideal.var_names()
    res = dec_mod.primary_decompose(ideal, degree_bound=args.degree_bound,
                                    budget=args.budget)
    payload = {"associated_primes": [prime_json(c.prime, names)
                                     for c in res.components]}
    return _report(["ideal", "assoc", args.file],
                   {"degree_bound": args.degree_bound, "budget": args.budget},
                   payload, dict(res.verification))


# ---------------------------------------------------------------------------
# horn subcommands
# ---------------------------------------------------------------------------

def cmd_horn_rank(args):
    b = parse_input(args.file, "matrix")
    report = horn_mod.generic_rank(b, budget=args.budget)
    a = horn_mod.grading_matrix(b)
    payload = {
        "grading_matrix": [list(r) for r in a],
        "summands": [{
            "J": sorted(s.J),
            "lattice_basis": [list(v) for v in s.lattice.vectors],
            "iota": s.iota, "mu": s.mu, "vol": s.vol, "product": s.product,
        } for s in report.summands],
        "total": report.total,
        "finite_support_count": report.finite_support_count,
        "full_support_count": report.full_support_count,
    }
    return _report(["horn", "rank", args.file], {"budget": args.budget},
                   payload, {"mu_census_stable": report.mu_certified})


def cmd_horn_andean(args):
    b = parse_input(args.file, "matrix")
    ideal = horn_mod.lattice_basis_ideal(b)
    a = horn_mod.grading_matrix(b)
    rep = horn_mod.toral_andean_analysis(ideal, a)
    payload = {
        "grading_matrix": [list(r) for r in a],
        "toral_primes": [sorted(c.prime.J) for c in rep.toral],
        "andean_primes": [sorted(c.prime.J) for c in rep.andean],
        "arrangement": [{"offset": [fraction_str(x) for x in s.offset],
                         "J": sorted(s.J)} for s in rep.arrangement],
    }
    if args.beta is not None:
        beta = _fractions_csv(args.beta, "--beta")
        system = horn_mod.HornSystem.build(b, beta)
        payload["euler_operators"] = list(system.euler_ops)
        payload["beta"] = [fraction_str(x) for x in beta]
        payload["finite_rank"] = horn_mod.finite_rank_test(system, rep)
    return _report(["horn", "andean", args.file], {"beta": args.beta},
                   payload, dict(rep.decomposition.verification))


# ---------------------------------------------------------------------------
# game subcommands
# ---------------------------------------------------------------------------

def cmd_game_solve(args):
    game = parse_input(args.file, "game")
    box = (args.box,) * game.dim
    verdict = games_mod.validate_ruleset(game.rules, box)
    table = games_mod.compute_win_loss(game, box)
    conditions = games_mod.verify_win_loss(table)
    payload = {
        "dimension": game.dim,
        "rules": [list(g) for g in sorted(game.rules.gamma)],
        "defeated": [list(p) for p in sorted(game.defeated)],
        "winning": [list(p) for p in sorted(table.winning)],
        "losing": [list(p) for p in sorted(table.losing)],
    }
    verification = {
        "box": list(box),
        "ruleset": verdict.status,
        "defining_conditions": conditions,
        "closure_size": len(table.statuses),
    }
    status = "ok" if conditions and verdict.status == "valid" else "verification_failed"
    return _report(["game", "solve", args.file], {"box": args.box},
                   payload, verification, status)


def cmd_game_move(args):
    game = parse_input(args.file, "game")
    pos = _ints_csv(args.pos, "--pos")
    box = tuple(max(args.box, p + 1) for p in pos)
    table = games_mod.compute_win_loss(game, box)
    move = games_mod.winning_move(game, table, pos)
    payload = {
        "position": list(pos),
        "is_winning": move is None,
        "move": list(move) if move is not None else None,
        "target": [a - b for a, b in zip(pos, move)] if move is not None else None,
    }
    return _report(["game", "move", args.file],
                   {"pos": args.pos, "box": args.box},
                   payload, {"box": list(box)})


def cmd_game_quotient(args):
    game = parse_input(args.file, "game")
    box = (args.box,) * game.dim
    q = games_mod.misere_quotient(game, box)
    payload = {
        "element_count": len(q.elements),
        "elements": [list(e) for e in q.elements],
        "identity": q.identity,
        "table": [[q.table.get((i, j)) for j in range(len(q.elements))]
                  for i in range(len(q.elements))],
        "finite": q.certified,
    }
    verification = {"box": list(box), "stability_certified": q.certified,
                    **{k: v for k, v in q.checks.items()}}
    status = "ok" if q.certified and all(q.checks.values()) else "verification_failed"
    return _report(["game", "quotient", args.file], {"box": args.box},
                   payload, verification, status)


def cmd_game_strategy(args):
    game = parse_input(args.file, "game")
    strat = parse_input(args.strat, "stratification")
    box = (args.box,) * game.dim
    verdict = games_mod.verify_stratification(strat, game, box)
    payload = {
        "pieces": [{"translate": list(p.translate),
                    "generators": [list(g) for g in p.generators]}
                   for p in strat.pieces],
        "verdict": verdict.status,
        "mismatch": list(verdict.mismatch) if verdict.mismatch else None,
    }
    if verdict.status == "equal":
        strategy = games_mod.rational_strategy(strat)
        payload["strategy_terms"] = [
            {"numerator": list(n), "denominators": [list(g) for g in dens]}
            for n, dens in strategy.terms]
    status = "ok" if verdict.status == "equal" else "verification_failed"
    return _report(["game", "strategy", args.file],
                   {"strat": args.strat, "box": args.box},
                   payload, {"box": list(box)}, status)


# ---------------------------------------------------------------------------
# chem subcommands
# ---------------------------------------------------------------------------

def cmd_chem_simulate(args):
    net = parse_input(args.file, "network")
    x0 = _fractions_csv(args.x0, "--x0")
    if len(x0) != net.nspecies:
        raise ParseError("--x0 must list %d concentrations" % net.nspecies)
    traj = chem_mod.simulate(net, x0, args.t, args.dt)
    stride = max(1, (len(traj.states) - 1) // 100)
    samples = [{"t": traj.times[i], "x": list(traj.states[i])}
               for i in range(0, len(traj.states), stride)]
    if samples[-1]["t"] != traj.times[-1]:
        samples.append({"t": traj.times[-1], "x": list(traj.states[-1])})
    sto = chem_mod.conserved_quantities(net)
    payload = {
        "species": list(net.species),
        "final_state": list(traj.states[-1]),
        "samples": samples,
        "conserved_basis": [list(r) for r in sto.conserved_basis],
        "conservation_drift": list(traj.conservation_drift),
    }
    verification = {"max_drift": traj.max_drift, "steps": len(traj.times) - 1}
    return _report(["chem", "simulate", args.file],
                   {"x0": args.x0, "t": args.t, "dt": args.dt},
                   payload, verification)


def cmd_chem_equilibrium(args):
    net = parse_input(args.file, "network")
    eq = chem_mod.detailed_balanced_equilibrium(net)
    if isinstance(eq, chem_mod.Infeasible):
        payload = {
            "feasible": False,
            "violated_cycle": [fraction_str(c) for c in eq.cycle],
            "prime": eq.prime,
        }
    else:
        payload = {
            "feasible": True,
            "exact": [[[p, fraction_str(e)] for p, e in entry]
                      for entry in eq.exponents],
            "approx": list(eq.approx),
        }
    return _report(["chem", "equilibrium", args.file], {}, payload, {})


def cmd_chem_boundary(args):
    net = parse_input(args.file, "network")
    traj = None
    options = {}
    if args.x0 is not None:
        x0 = _fractions_csv(args.x0, "--x0")
        traj = chem_mod.simulate(net, x0, args.t, args.dt)
        options = {"x0": args.x0, "t": args.t, "dt": args.dt}
    rep = chem_mod.boundary_equilibria(net, traj)
    payload = {"faces": [{
        "zero_species": list(f.zero_species),
        "lattice_rank": f.lattice_rank,
        "admits_positive_real_zero": f.admits_positive_real_zero,
        "min_trajectory_distance": f.min_trajectory_distance,
    } for f in rep.faces]}
    return _report(["chem", "boundary", args.file], options, payload,
                   dict(rep.verification))


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def build_parser():
    top = argparse.ArgumentParser(prog="binlat",
                                  description="lattice-point methods for binomial ideals")
    top.add_argument("--pretty", action="store_true",
                     help="human-readable rendering instead of raw JSON")
    sub = top.add_subparsers(dest="group")

    ideal = sub.add_parser("ideal").add_subparsers(dest="action")
    p = ideal.add_parser("gb")
    p.add_argument("file")
    p.set_defaults(func=cmd_ideal_gb)
    for name, func in (("decompose", cmd_ideal_decompose), ("assoc", cmd_ideal_assoc)):
        p = ideal.add_parser(name)
        p.add_argument("file")
        p.add_argument("--box", type=int, default=None)
        p.add_argument("--degree-bound", type=int, default=None)
        p.add_argument("--budget", type=int, default=10 ** 6)
        p.set_defaults(func=func)

    horn = sub.add_parser("horn").add_subparsers(dest="action")
    p = horn.add_parser("rank")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_horn_rank)
    p = horn.add_parser("andean")
    p.add_argument("file")
    p.add_argument("--beta", default=None)
    p.set_defaults(func=cmd_horn_andean)

    game = sub.add_parser("game").add_subparsers(dest="action")
    p = game.add_parser("solve")
    p.add_argument("file")
    p.add_argument("--box", type=int, default=20)
    p.set_defaults(func=cmd_game_solve)
    p = game.add_parser("move")
    p.add_argument("file")
    p.add_argument("--pos", required=True)
    p.add_argument("--box", type=int, default=12)
    p.set_defaults(func=cmd_game_move)
    p = game.add_parser("quotient")
    p.add_argument("file")
    p.add_argument("--box", type=int, default=12)
    p.set_defaults(func=cmd_game_quotient)
    p = game.add_parser("strategy")
    p.add_argument("file")
    p.add_argument("--strat", required=True)
    p.add_argument("--box", type=int, default=12)
    p.set_defaults(func=cmd_game_strategy)

    chem = sub.add_parser("chem").add_subparsers(dest="action")
    p = chem.add_parser("simulate")
    p.add_argument("file")
    p.add_argument("--x0", required=True)
    p.add_argument("--t", type=float, default=10.0)
    p.add_argument("--dt", type=float, default=1e-3)
    p.set_defaults(func=cmd_chem_simulate)
    p = chem.add_parser("equilibrium")
    p.add_argument("file")
    p.set_defaults(func=cmd_chem_equilibrium)
    p = chem.add_parser("boundary")
    p.add_argument("file")
    p.add_argument("--x0", default=None)
    p.add_argument("--t", type=float, default=10.0)
    p.add_argument("--dt", type=float, default=1e-3)
    p.set_defaults(func=cmd_chem_boundary)
    return top


def render_pretty(report) -> str:
    lines = ["# binlat " + " ".join(report["command"][0:2]),
             "status: " + report["status"]]
    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                if isinstance(v, (dict, list)) and v and not _is_scalar_list(v):
                    lines.append("%s%s:" % (pad, k))
                    walk(v, indent + 1)
                else:
                    lines.append("%s%s: %s" % (pad, k, json.dumps(v, sort_keys=True)))
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, (dict, list)) and item and not _is_scalar_list(item):
                    lines.append("%s-" % pad)
                    walk(item, indent + 1)
                else:
                    lines.append("%s- %s" % (pad, json.dumps(item, sort_keys=True)))
    walk({"payload": report["payload"], "verification": report["verification"]})
    return "\n".join(lines) + "\n"


def _is_scalar_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2, None
    try:
        report = args.func(args)
    except ParseError as exc:
        report = _report(argv[:3], {}, {"error": str(exc)}, {}, status="parse_error")
        return 2, report
    except VerificationFailed as exc:
        report = _report(argv[:3], {}, {"error": str(exc)}, {},
                         status="verification_failed")
        return 1, report
    except BinlatError as exc:
        report = _report(argv[:3], {}, {"error": str(exc),
                                        "kind": type(exc).__name__}, {},
                         status="error")
        return 1, report
    code = 0 if report["status"] == "ok" else 1
    return code, report


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pretty = "--pretty" in argv
    code, report = run(argv)
    if report is not None:
        if pretty:
            sys.stdout.write(render_pretty(report))
        else:
            sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
