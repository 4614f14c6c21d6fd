"""JSON input parsing and deterministic serialization.

Interchange formats:
  matrix   -- array of rows of decimal integers
  ideal    -- {"n", "vars"?, "zeta_order"?, "binomials": [{"u", "v", "coeff"}],
              "monomials"?: [[...]]}, coeff = list of [rational string, zeta power]
  game     -- {"d", "gamma": [[...]], "defeated"?: [[...]]} or
              {"octal": ".137", "d": 7, "misere"?: true} or {"nim": d, "misere"?}
  network  -- {"species": [...], "reactions": [{"a", "b", "k_fwd", "k_rev"}]}
  strat    -- {"pieces": [{"translate": [...], "generators": [[...], ...]}]}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .binomials import Binomial, BinomialIdeal
from .chem import Reaction, ReactionNetwork
from .errors import InvariantViolation, ParseError
from .games import AffineStratification, LatticeGame, Piece, RuleSet, build_ruleset
from .scalars import Cyclo


def _require(cond, msg):
    if not cond:
        raise ParseError(msg)


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON in %s: %s" % (path, exc))


def parse_matrix(data):
    _require(isinstance(data, list) and data, "matrix: expected a nonempty array of rows")
    width = None
    rows = []
    for i, row in enumerate(data):
        _require(isinstance(row, list) and row, "matrix: row %d must be a nonempty array" % i)
        _require(all(isinstance(x, int) for x in row),
                 "matrix: row %d must hold integers" % i)
        if width is None:
            width = len(row)
        _require(len(row) == width, "matrix: row %d has inconsistent length" % i)
        rows.append(tuple(row))
    return tuple(rows)


def parse_coeff(entry, zeta_order, where):
    if entry is None:
        return Cyclo.one(zeta_order)
    _require(isinstance(entry, list), "%s: coeff must be a list of [rational, power]" % where)
    out = Cyclo.zero(zeta_order)
    for pair in entry:
        _require(isinstance(pair, list) and len(pair) == 2,
                 "%s: coeff entries are [rational string, zeta power]" % where)
        q, k = pair
        try:
            frac = Fraction(str(q))
        except (ValueError, ZeroDivisionError):
            raise ParseError("%s: bad rational %r" % (where, q))
        _require(isinstance(k, int), "%s: zeta power must be an integer" % where)
        out = out + Cyclo.rational(frac, zeta_order) * Cyclo.zeta(zeta_order, k)
    return out


def _parse_exponent(vec, n, where):
    _require(isinstance(vec, list) and len(vec) == n,
             "%s: exponent must be a length-%d array" % (where, n))
    _require(all(isinstance(x, int) and x >= 0 for x in vec),
             "%s: exponents are nonnegative integers" % where)
    return tuple(vec)


def parse_ideal(data) -> BinomialIdeal:
    _require(isinstance(data, dict), "ideal: expected an object")
    n = data.get("n")
    _require(isinstance(n, int) and n > 0, "ideal: field 'n' must be a positive integer")
    zeta_order = data.get("zeta_order", 1)
    _require(isinstance(zeta_order, int) and zeta_order >= 1,
             "ideal: 'zeta_order' must be a positive integer")
    names = data.get("vars")
    if names is not None:
        _require(isinstance(names, list) and len(names) == n,
                 "ideal: 'vars' must list %d names" % n)
        names = tuple(str(x) for x in names)
    gens = []
    for i, b in enumerate(data.get("binomials", [])):
        where = "ideal: binomials[%d]" % i
        _require(isinstance(b, dict) and "u" in b and "v" in b,
                 "%s needs fields 'u' and 'v'" % where)
        u = _parse_exponent(b["u"], n, where + ".u")
        v = _parse_exponent(b["v"], n, where + ".v")
        lam = parse_coeff(b.get("coeff"), zeta_order, where)
        try:
            gens.append(Binomial(u, v, lam))
        except InvariantViolation as exc:
            raise ParseError("%s: %s" % (where, exc))
    for i, m in enumerate(data.get("monomials", [])):
        u = _parse_exponent(m, n, "ideal: monomials[%d]" % i)
        gens.append(Binomial.monomial(u, zeta_order))
    try:
        return BinomialIdeal.make(n, gens, zeta_order, names)
    except InvariantViolation as exc:
        raise ParseError("ideal: %s" % exc)


def parse_game(data) -> LatticeGame:
    _require(isinstance(data, dict), "game: expected an object")
    try:
        if "gamma" in data:
            d = data.get("d")
            _require(isinstance(d, int) and d > 0, "game: field 'd' must be positive")
            rules = build_ruleset({"explicit": data["gamma"], "d": d})
        else:
            rules = build_ruleset(data)
    except InvariantViolation as exc:
        raise ParseError("game: %s" % exc)
    defeated = set()
    if data.get("misere"):
        defeated.add((0,) * rules.dim)
    for i, p in enumerate(data.get("defeated", [])):
        _require(isinstance(p, list) and len(p) == rules.dim,
                 "game: defeated[%d] must be a length-%d point" % (i, rules.dim))
        _require(all(isinstance(x, int) and x >= 0 for x in p),
                 "game: defeated[%d] must be nonnegative" % i)
        defeated.add(tuple(p))
    try:
        return LatticeGame(rules, frozenset(defeated))
    except InvariantViolation as exc:
        raise ParseError("game: %s" % exc)


def parse_network(data) -> ReactionNetwork:
    _require(isinstance(data, dict), "network: expected an object")
    species = data.get("species")
    _require(isinstance(species, list) and species, "network: 'species' must be nonempty")
    n = len(species)
    reactions = []
    for i, r in enumerate(data.get("reactions", [])):
        where = "network: reactions[%d]" % i
        _require(isinstance(r, dict), "%s must be an object" % where)
        a = _parse_exponent(r.get("a"), n, where + ".a")
        b = _parse_exponent(r.get("b"), n, where + ".b")
        try:
            kf = Fraction(str(r.get("k_fwd")))
            kr = Fraction(str(r.get("k_rev")))
        except (ValueError, ZeroDivisionError):
            raise ParseError("%s: rates must be rationals" % where)
        try:
            reactions.append(Reaction(a, b, kf, kr))
        except InvariantViolation as exc:
            raise ParseError("%s: %s" % (where, exc))
    _require(reactions, "network: at least one reaction required")
    return ReactionNetwork(tuple(str(s) for s in species), tuple(reactions))


def parse_stratification(data) -> AffineStratification:
    _require(isinstance(data, dict) and isinstance(data.get("pieces"), list),
             "stratification: expected {'pieces': [...]}")
    pieces = []
    for i, p in enumerate(data["pieces"]):
        where = "stratification: pieces[%d]" % i
        _require(isinstance(p, dict) and "translate" in p, "%s needs 'translate'" % where)
        tr = tuple(int(x) for x in p["translate"])
        gens = tuple(tuple(int(x) for x in g) for g in p.get("generators", []))
        _require(all(len(g) == len(tr) for g in gens),
                 "%s: generator length mismatch" % where)
        pieces.append(Piece(translate=tr, generators=gens))
    return AffineStratification(pieces=tuple(pieces))


PARSERS = {
    "matrix": parse_matrix,
    "ideal": parse_ideal,
    "game": parse_game,
    "network": parse_network,
    "stratification": parse_stratification,
}


def parse_input(path, kind):
    """Load and validate a typed input file."""
    return PARSERS[kind](load_json(path))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def cyclo_json(c: Cyclo):
    return {"zeta_order": c.order,
            "terms": [[str(q), i] for i, q in enumerate(c.coeffs) if q != 0]}


def binomial_json(b: Binomial):
    if b.is_monomial:
        return {"monomial": list(b.u)}
    return {"u": list(b.u), "v": list(b.v), "coeff": cyclo_json(b.lam)}


def ideal_json(ideal: BinomialIdeal):
    return {
        "n": ideal.nvars,
        "vars": list(ideal.var_names()),
        "zeta_order": ideal.zeta_order,
        "generators": [binomial_json(g) for g in ideal.generators],
    }


def prime_json(p, names):
    lat = p.character.lattice
    return {
        "J": [names[i] for i in sorted(p.J)],
        "lattice_basis": [list(v) for v in lat.vectors],
        "character": [cyclo_json(v) for v in p.character.values],
    }


def fraction_str(x) -> str:
    return str(Fraction(x))
