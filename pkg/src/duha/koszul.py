"""Graded components of the bimodule-resolution complexes.

Tensoring the length-3 resolution of A by A over A^e and taking the trace
identifications gives two complexes of bigraded vector spaces:

  homology:     0 <- A <--d1-- A(x)V <--d2-- A(x)R <--d3-- A(x)Omega <- 0
  cohomology:   0 -> A --d0*-> V*(x)A --d1*-> R*(x)A --d2*-> Omega*(x)A -> 0

with V = <u, d>, R = <d^2u, du^2>, Omega = <d^2u^2> and starred duals.
Each tensor factor slot is tracked by a generator symbol carrying its own
bidegree; a chain element "a (x) g" in bidegree (s, sd) has its coefficient
a in the component of A of bidegree (s, sd) - bideg(g).  The dual
generators carry the negated bidegrees of their partners (in particular
bideg(D) = (-1, +1)); with that convention every differential below is
bidegree-homogeneous, and the assembly verifies homogeneity term by term
rather than ever truncating.

All differentials are evaluated through ordinary algebra products of the
coefficient with u and d, so a single exact engine (pbw) feeds both
complexes.
"""

from __future__ import annotations

from .linalg import ConsistencyError, Matrix
from .pbw import Monomial, graded_basis

A_UNIT = "A"
V_U = "V:u"
V_D = "V:d"
R_D2U = "R:d2u"
R_DU2 = "R:du2"
OMEGA = "O:d2u2"
VS_U = "V*:U"
VS_D = "V*:D"
RS_D2U = "R*:D2U"
RS_DU2 = "R*:DU2"
OMEGAS = "O*:D2U2"

SYMBOL_ORDER = (A_UNIT, V_U, V_D, R_D2U, R_DU2, OMEGA, VS_U, VS_D, RS_D2U, RS_DU2, OMEGAS)

SYMBOL_BIDEGREE = {
    A_UNIT: (0, 0),
    V_U: (1, 1),
    V_D: (1, -1),
    R_D2U: (3, -1),
    R_DU2: (3, 1),
    OMEGA: (4, 0),
    VS_U: (-1, -1),
    VS_D: (-1, 1),
    RS_D2U: (-3, 1),
    RS_DU2: (-3, -1),
    OMEGAS: (-4, 0),
}

HOMOLOGY_COMPONENTS = {0: (A_UNIT,), 1: (V_U, V_D), 2: (R_D2U, R_DU2), 3: (OMEGA,)}
COHOMOLOGY_COMPONENTS = {0: (A_UNIT,), 1: (VS_U, VS_D), 2: (RS_D2U, RS_DU2), 3: (OMEGAS,)}


def coefficient_bidegree(symbol, bidegree):
    """Bidegree of the A-coefficient of the `symbol` slot of a chain at `bidegree`."""
    s, sd = bidegree
    gs, gsd = SYMBOL_BIDEGREE[symbol]
    return (s - gs, sd - gsd)


def chain_basis(case, symbols, bidegree):
    """Ordered basis [(symbol, monomial), ...]: symbols in the fixed order,
    monomials lexicographic inside each block."""
    out = []
    for sym in symbols:
        for m in graded_basis(case, coefficient_bidegree(sym, bidegree)):
            out.append((sym, m))
    return out


def homology_spaces(case, bidegree):
    """Chain bases at a bidegree, keyed by homological degree 0..3."""
    return {i: chain_basis(case, HOMOLOGY_COMPONENTS[i], bidegree) for i in range(4)}


def cohomology_spaces(case, bidegree):
    return {i: chain_basis(case, COHOMOLOGY_COMPONENTS[i], bidegree) for i in range(4)}


class GradedMap:
    """One differential restricted to a bidegree, as an explicit matrix.

    rows/cols are (symbol, Monomial) pairs labelling target/source bases;
    entry [r][c] is the coefficient of row r in the image of column c.
    """

    def __init__(self, name, case, bidegree, rows, cols, matrix):
        self.name = name
        self.case = case
        self.bidegree = bidegree
        self.rows = rows
        self.cols = cols
        self.matrix = matrix
        self._rank = None

    def rank(self):
        from .linalg import rank as _rank

        if self._rank is None:
            self._rank = _rank(self.matrix)
        return self._rank

    @staticmethod
    def label(pair):
        sym, m = pair
        return "%s|%s" % (sym, m)

    def to_json(self):
        return {
            "rows": [self.label(p) for p in self.rows],
            "cols": [self.label(p) for p in self.cols],
            "entries": [[v.to_json() for v in row] for row in self.matrix.rows],
        }

    @classmethod
    def from_json(cls, name, case, bidegree, data):
        from .exactfield import FieldElement

        rows = [parse_label(s) for s in data["rows"]]
        cols = [parse_label(s) for s in data["cols"]]
        field = case.field
        matrix = Matrix(
            field,
            len(rows),
            len(cols),
            [[FieldElement.from_json(field, v) for v in row] for row in data["entries"]],
        )
        return cls(name, case, bidegree, rows, cols, matrix)

    def __repr__(self):
        return "GradedMap(%s at %r: %d x %d)" % (
            self.name,
            self.bidegree,
            len(self.rows),
            len(self.cols),
        )


def parse_monomial(text):
    """Inverse of str(Monomial): "u^2 w d^3" -> Monomial(2, 1, 3), "1" -> unit."""
    exps = {"u": 0, "w": 0, "d": 0}
    text = text.strip()
    if text != "1":
        for part in text.split():
            if "^" in part:
                name, e = part.split("^")
                exps[name] = int(e)
            else:
                exps[part] = 1
    return Monomial(exps["u"], exps["w"], exps["d"])


def parse_label(text):
    sym, mono = text.split("|")
    assert sym in SYMBOL_ORDER, "unknown generator symbol %r" % sym
    return (sym, parse_monomial(mono))


def _assemble(name, case, bidegree, src_symbols, dst_symbols, image):
    """Build the GradedMap for `image`: column pair -> [(dst symbol, element)].

    Every image element must be homogeneous of exactly the bidegree of its
    destination slot; anything else raises ConsistencyError.
    """
    rows = chain_basis(case, dst_symbols, bidegree)
    cols = chain_basis(case, src_symbols, bidegree)
    index = {pair: r for r, pair in enumerate(rows)}
    matrix = Matrix(case.field, len(rows), len(cols))
    for c, (sym, mono) in enumerate(cols):
        for dst_sym, elt in image(sym, mono):
            expected = coefficient_bidegree(dst_sym, bidegree)
            for m, coeff in elt.terms.items():
                if m.bidegree() != expected:
                    raise ConsistencyError(
                        "%s is not homogeneous: %s|%s -> %s in slot %s at %r"
                        % (name, sym, mono, m, dst_sym, bidegree)
                    )
                matrix.set_entry(index[(dst_sym, m)], c, coeff)
    return GradedMap(name, case, bidegree, rows, cols, matrix)


def _cached(case, key, build):
    cache = case._map_cache
    hit = cache.get(key)
    if hit is None:
        hit = build()
        cache[key] = hit
    return hit


def assemble_d1(case, bidegree):
    """d1(a (x) d + a' (x) u) = ad - da + a'u - ua'."""

    def image(sym, mono):
        a = case.element({tuple(mono): 1})
        u, _, d = case.gens()
        if sym == V_U:
            return [(A_UNIT, a * u - u * a)]
        return [(A_UNIT, a * d - d * a)]

    return _cached(
        case,
        ("d1", bidegree),
        lambda: _assemble("d1", case, bidegree, HOMOLOGY_COMPONENTS[1], HOMOLOGY_COMPONENTS[0], image),
    )


def assemble_d2(case, bidegree):
    """Second homology differential (gamma = 0):

    d2(a (x) d2u + a' (x) du2)
      = (dua + uad + u^2 a' - alpha(uda + adu + ua'u) - beta(dau + aud + a'u^2)) (x) d
      + (ad^2 + ua'd + a'du - alpha(dad + dua' + a'ud) - beta(d^2 a + uda' + da'u)) (x) u.
    """
    al, be = case.alpha, case.beta

    def image(sym, mono):
        a = case.element({tuple(mono): 1})
        u, _, d = case.gens()
        if sym == R_D2U:
            part_d = d * u * a + u * a * d - al * (u * d * a + a * d * u) - be * (d * a * u + a * u * d)
            part_u = a * d * d - al * (d * a * d) - be * (d * d * a)
        else:
            part_d = u * u * a - al * (u * a * u) - be * (a * u * u)
            part_u = u * a * d + a * d * u - al * (d * u * a + a * u * d) - be * (u * d * a + d * a * u)
        return [(V_D, part_d), (V_U, part_u)]

    return _cached(
        case,
        ("d2", bidegree),
        lambda: _assemble("d2", case, bidegree, HOMOLOGY_COMPONENTS[2], HOMOLOGY_COMPONENTS[1], image),
    )


def assemble_d3(case, bidegree):
    """d3(a (x) d2u2) = -(ua + beta*au) (x) d2u + (ad + beta*da) (x) du2."""
    be = case.beta

    def image(sym, mono):
        a = case.element({tuple(mono): 1})
        u, _, d = case.gens()
        return [
            (R_D2U, -(u * a + be * (a * u))),
            (R_DU2, a * d + be * (d * a)),
        ]

    return _cached(
        case,
        ("d3", bidegree),
        lambda: _assemble("d3", case, bidegree, HOMOLOGY_COMPONENTS[3], HOMOLOGY_COMPONENTS[2], image),
    )


def assemble_d0star(case, bidegree):
    """d0*(a) = U (x) (ua - au) + D (x) (da - ad)."""

    def image(sym, mono):
        a = case.element({tuple(mono): 1})
        u, _, d = case.gens()
        return [(VS_U, u * a - a * u), (VS_D, d * a - a * d)]

    return _cached(
        case,
        ("d0*", bidegree),
        lambda: _assemble(
            "d0*", case, bidegree, COHOMOLOGY_COMPONENTS[0], COHOMOLOGY_COMPONENTS[1], image
        ),
    )


def assemble_d1star(case, bidegree):
    """d1*(U (x) a + D (x) a') = D2U (x) Delta1 + DU2 (x) Delta2 with (gamma = 0)

    Delta1 = d^2 a + a'du + da'u - alpha(dad + a'ud + dua') - beta(ad^2 + ua'd + uda')
    Delta2 = dau + dua + a'u^2 - alpha(adu + uda + ua'u) - beta(aud + uad + u^2 a').
    """
    al, be = case.alpha, case.beta

    def image(sym, mono):
        a = case.element({tuple(mono): 1})
        u, _, d = case.gens()
        if sym == VS_U:
            delta1 = d * d * a - al * (d * a * d) - be * (a * d * d)
            delta2 = d * a * u + d * u * a - al * (a * d * u + u * d * a) - be * (a * u * d + u * a * d)
        else:
            delta1 = a * d * u + d * a * u - al * (a * u * d + d * u * a) - be * (u * a * d + u * d * a)
            delta2 = a * u * u - al * (u * a * u) - be * (u * u * a)
        return [(RS_D2U, delta1), (RS_DU2, delta2)]

    return _cached(
        case,
        ("d1*", bidegree),
        lambda: _assemble(
            "d1*", case, bidegree, COHOMOLOGY_COMPONENTS[1], COHOMOLOGY_COMPONENTS[2], image
        ),
    )


def assemble_d2star(case, bidegree):
    """d2*(D2U (x) a + DU2 (x) a') = D2U2 (x) (da' + beta*a'd - au - beta*ua)."""
    be = case.beta

    def image(sym, mono):
        a = case.element({tuple(mono): 1})
        u, _, d = case.gens()
        if sym == RS_D2U:
            return [(OMEGAS, -(a * u + be * (u * a)))]
        return [(OMEGAS, d * a + be * (a * d))]

    return _cached(
        case,
        ("d2*", bidegree),
        lambda: _assemble(
            "d2*", case, bidegree, COHOMOLOGY_COMPONENTS[2], COHOMOLOGY_COMPONENTS[3], image
        ),
    )


def homology_maps(case, bidegree):
    """(d1, d2, d3) at the bidegree."""
    return (
        assemble_d1(case, bidegree),
        assemble_d2(case, bidegree),
        assemble_d3(case, bidegree),
    )


def cohomology_maps(case, bidegree):
    """(d0*, d1*, d2*) at the bidegree."""
    return (
        assemble_d0star(case, bidegree),
        assemble_d1star(case, bidegree),
        assemble_d2star(case, bidegree),
    )
