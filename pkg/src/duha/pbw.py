"""PBW arithmetic in the homogeneous down-up algebra A(alpha, beta, 0).

A = K<u, d> modulo the two cubic relations

    d^2 u = alpha*dud + beta*ud^2,      d u^2 = alpha*udu + beta*u^2 d.

Writing r1, r2 for the roots of t^2 - alpha*t - beta (r1 != 0) and

    w = beta*ud + r1*du,

the monomials u^i w^j d^k form a K-basis of A.  The defining relations
become the three exchange rules

    w u = r1 * u w,        d w = r1 * w d,
    d u^e = (phi(e-1)/r1) * u^(e-1) w  +  r2^e * u^e d,

with phi(p) = sum_{i=0}^{p} r1^i r2^(p-i) and phi(-1) = 0.  Every product
is normalized through these rules alone, by structural recursion on the
exponents; no word-level rewriting is involved (see wordoracle for the
independent free-algebra route).

The algebra is bigraded: deg(u) = deg(d) = 1 (usual degree) and
sdeg(u) = +1, sdeg(d) = -1 (special degree), so u^i w^j d^k sits in
bidegree (i + 2j + k, i - k).

Case split used throughout the package:

  * F1 ("generic"):  r1^i r2^j != 1 for all (i, j) != (0, 0), checked on a
    finite exponent window, which is all the truncated computations need;
  * F2 ("Calabi-Yau", beta = -1, r2 = 1/r1), subdivided by whether r1 is a
    root of unity (of order n) or not.
"""

from __future__ import annotations

from fractions import Fraction

from .exactfield import (
    FieldElement,
    FieldError,
    FieldSpec,
    genericity_violation,
    max_root_of_unity_order,
    root_of_unity_order,
)

F1 = "F1"
F2_NONROOT = "F2-nonroot"
F2_ROOT = "F2-root"


class UnsupportedCaseError(FieldError):
    """(alpha, beta) falls in neither verified family."""


class Monomial(tuple):
    """Basis monomial u^i w^j d^k, stored as the exponent triple (i, j, k).

    Tuple identity gives hashing, equality and lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, i, j, k):
        assert i >= 0 and j >= 0 and k >= 0
        return tuple.__new__(cls, (i, j, k))

    @property
    def i(self):
        return self[0]

    @property
    def j(self):
        return self[1]

    @property
    def k(self):
        return self[2]

    @property
    def deg(self):
        return self[0] + 2 * self[1] + self[2]

    @property
    def sdeg(self):
        return self[0] - self[2]

    def bidegree(self):
        return (self.deg, self.sdeg)

    def __str__(self):
        parts = []
        for name, e in (("u", self[0]), ("w", self[1]), ("d", self[2])):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return " ".join(parts) if parts else "1"

    def __repr__(self):
        return "Monomial(%d, %d, %d)" % self


class CaseSpec:
    """A concrete algebra A(alpha, beta, 0) with its family classification.

    Built by classify_case.  Carries the field data, the family tag (F1,
    F2-nonroot or F2-root), the root-of-unity order n (0 unless F2-root),
    the genericity window actually checked, and memo tables for the
    normalization recursion.
    """

    def __init__(self, fieldspec, family, n, genericity_bound):
        self.fieldspec = fieldspec
        self.field = fieldspec.field
        self.r1 = fieldspec.r1
        self.r2 = fieldspec.r2
        self.alpha = fieldspec.alpha
        self.beta = fieldspec.beta
        self.family = family
        self.n = n
        self.genericity_bound = genericity_bound
        self.preset = None
        self._r1_pows = [self.field.one]
        self._r2_pows = [self.field.one]
        self._phi = []
        self._du_cache = {}
        self._map_cache = {}

    def r1_pow(self, n):
        while len(self._r1_pows) <= n:
            self._r1_pows.append(self._r1_pows[-1] * self.r1)
        return self._r1_pows[n]

    def r2_pow(self, n):
        while len(self._r2_pows) <= n:
            self._r2_pows.append(self._r2_pows[-1] * self.r2)
        return self._r2_pows[n]

    def phi(self, p):
        """phi(p) = sum_{i=0}^{p} r1^i r2^(p-i); phi(-1) = 0."""
        assert p >= -1
        if p == -1:
            return self.field.zero
        while len(self._phi) <= p:
            q = len(self._phi)
            total = self.field.zero
            for i in range(q + 1):
                total = total + self.r1_pow(i) * self.r2_pow(q - i)
            self._phi.append(total)
        return self._phi[p]

    def is_cy(self):
        return self.beta == -1

    def __repr__(self):
        return "CaseSpec(%s, n=%d, alpha=%r, beta=%r)" % (
            self.family,
            self.n,
            self.alpha,
            self.beta,
        )

    def to_json(self):
        data = {"preset": self.preset, "family": self.family, "n": self.n}
        data.update(self.fieldspec.to_json())
        return data

    # -- element constructors ----------------------------------------------

    def zero_element(self):
        return AlgebraElement(self, {})

    def one_element(self):
        return AlgebraElement(self, {Monomial(0, 0, 0): self.field.one})

    def monomial_element(self, i, j, k, coeff=1):
        c = coeff if isinstance(coeff, FieldElement) else self.field.from_rational(coeff)
        if c.is_zero():
            return self.zero_element()
        return AlgebraElement(self, {Monomial(i, j, k): c})

    def gens(self):
        """The elements u, w, d."""
        return (
            self.monomial_element(1, 0, 0),
            self.monomial_element(0, 1, 0),
            self.monomial_element(0, 0, 1),
        )

    def element(self, terms):
        """Element from a dict {(i, j, k): coefficient}."""
        clean = {}
        for key, coeff in terms.items():
            c = coeff if isinstance(coeff, FieldElement) else self.field.from_rational(coeff)
            if not c.is_zero():
                clean[Monomial(*key)] = c
        return AlgebraElement(self, clean)


def classify_case(fieldspec, bound=16):
    """Classify (r1, r2) into F1 / F2-nonroot / F2-root and build the CaseSpec.

    beta = -1 (equivalently r1*r2 = 1) lands in F2; the root-of-unity order
    of r1 is decided exactly, since orders are a priori bounded inside a
    fixed number field.  Otherwise genericity r1^i r2^j != 1 is checked for
    all exponents up to `bound`; a violation raises UnsupportedCaseError.
    """
    if fieldspec.beta == -1:
        n = root_of_unity_order(fieldspec.r1, max_root_of_unity_order(fieldspec.field))
        if n is None:
            return CaseSpec(fieldspec, F2_NONROOT, 0, bound)
        return CaseSpec(fieldspec, F2_ROOT, n, bound)
    hit = genericity_violation(fieldspec, bound)
    if hit is not None:
        raise UnsupportedCaseError(
            "beta != -1 and r1^%d * r2^%d = 1: neither generic nor Calabi-Yau" % hit
        )
    return CaseSpec(fieldspec, F1, 0, bound)


class AlgebraElement:
    """Finite K-linear combination of PBW monomials u^i w^j d^k."""

    __slots__ = ("case", "terms")

    def __init__(self, case, terms):
        self.case = case
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def coeff(self, m):
        if not isinstance(m, Monomial):
            m = Monomial(*m)
        return self.terms.get(m, self.case.field.zero)

    def bidegree(self):
        """(deg, sdeg) if homogeneous, None for 0 or mixed elements."""
        degs = {m.bidegree() for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    # -- linear structure ----------------------------------------------------

    def _check_case(self, other):
        assert other.case is self.case, "elements of different algebras"

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_case(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, self.case.field.zero) + c
        return AlgebraElement(self.case, out)

    def __neg__(self):
        return AlgebraElement(self.case, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, FieldElement):
            c = self.case.field.from_rational(c)
        return AlgebraElement(self.case, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        return NotImplemented

    # -- multiplication -------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_case(other)
        case = self.case
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in _mono_product(case, m1, m2).items():
                    acc = out.get(m)
                    out[m] = c12 * c if acc is None else acc + c12 * c
        return AlgebraElement(case, out)

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = self.case.one_element()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.case is other.case and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.support():
            parts.append("(%r)*%s" % (self.terms[m], m))
        return " + ".join(parts)


def _du_power(case, k, e):
    """Normal form of d^k u^e as a dict {Monomial: coefficient}.

    Recursion on k: d^k u^e = d^(k-1) (d u^e) with
    d u^e = (phi(e-1)/r1) u^(e-1) w + r2^e u^e d, then the two right
    multiplications by w and d on already-normal terms are the cheap
    exchange rules (u^a w^b d^c) w = r1^c u^a w^(b+1) d^c and
    (u^a w^b d^c) d = u^a w^b d^(c+1).
    """
    key = (k, e)
    hit = case._du_cache.get(key)
    if hit is not None:
        return hit
    field = case.field
    if k == 0:
        out = {Monomial(e, 0, 0): field.one}
    elif e == 0:
        out = {Monomial(0, 0, k): field.one}
    else:
        out = {}
        c_w = case.phi(e - 1) * case.r1.inv()
        if not c_w.is_zero():
            for (a, b, c), coeff in _du_power(case, k - 1, e - 1).items():
                m = Monomial(a, b + 1, c)
                add = coeff * c_w * case.r1_pow(c)
                acc = out.get(m)
                out[m] = add if acc is None else acc + add
        c_d = case.r2_pow(e)
        if not c_d.is_zero():
            for (a, b, c), coeff in _du_power(case, k - 1, e).items():
                m = Monomial(a, b, c + 1)
                add = coeff * c_d
                acc = out.get(m)
                out[m] = add if acc is None else acc + add
        out = {m: c for m, c in out.items() if not c.is_zero()}
    case._du_cache[key] = out
    return out


def _mono_product(case, m1, m2):
    """Normal form of (u^i1 w^j1 d^k1)(u^i2 w^j2 d^k2) as a term dict.

    Only d^k1 u^i2 needs the recursion; the flanking w-blocks then move
    into place with the exchange rules, each crossing costing a power
    of r1.
    """
    i1, j1, k1 = m1
    i2, j2, k2 = m2
    out = {}
    for (a, b, c), coeff in _du_power(case, k1, i2).items():
        scalar = coeff * case.r1_pow(j1 * a + c * j2)
        m = Monomial(i1 + a, j1 + b + j2, c + k2)
        acc = out.get(m)
        out[m] = scalar if acc is None else acc + scalar
    return out


def normal_product(x, y):
    """Product of two algebra elements in PBW normal form."""
    return x * y


def phi(case, p):
    return case.phi(p)


# ---------------------------------------------------------------------------
# graded pieces
# ---------------------------------------------------------------------------


_BASIS_CACHE = {}


def graded_basis(case, bidegree):
    """All monomials of the given (deg, sdeg), in lexicographic (i, j, k) order.

    The answer does not depend on the case; the argument is kept so call
    sites read uniformly.
    """
    deg, sdeg = bidegree
    hit = _BASIS_CACHE.get(bidegree)
    if hit is not None:
        return hit
    out = []
    if deg >= 0:
        for i in range(deg + 1):
            k = i - sdeg
            if k < 0:
                continue
            rem = deg - i - k
            if rem < 0 or rem % 2:
                continue
            out.append(Monomial(i, rem // 2, k))
    _BASIS_CACHE[bidegree] = out
    return out


def dim_bigraded(case, bidegree):
    return len(graded_basis(case, bidegree))


def dim_total(case, deg):
    """Dimension of the usual-degree-deg piece of A."""
    if deg < 0:
        return 0
    return sum(deg - 2 * j + 1 for j in range(deg // 2 + 1))


def sdeg_range(deg):
    """Special degrees with a nonzero (deg, sdeg) piece: -deg..deg, step 2."""
    return range(-deg, deg + 1, 2)


# ---------------------------------------------------------------------------
# Nakayama automorphism and word expansion
# ---------------------------------------------------------------------------


def apply_sigma(x):
    """Nakayama automorphism sigma(u) = -u/beta, sigma(d) = -beta*d.

    sigma fixes w, so on basis monomials
    sigma(u^i w^j d^k) = (-1/beta)^i (-beta)^k u^i w^j d^k.
    """
    case = x.case
    if case.beta.is_zero():
        raise FieldError("Nakayama automorphism needs beta != 0")
    nb = -case.beta
    nbi = nb.inv()
    out = {}
    for m, c in x.terms.items():
        out[m] = c * nbi ** m.i * nb ** m.k
    return AlgebraElement(case, out)


def word_expansion(case, m):
    """Expand u^i w^j d^k into free words over {u, d}: w = beta*ud + r1*du.

    Returns a dict {word string: coefficient} with 2^j entries (fewer if
    beta = 0).
    """
    out = {"u" * m.i: case.field.one}
    for _ in range(m.j):
        nxt = {}
        for word, c in out.items():
            for tail, factor in (("ud", case.beta), ("du", case.r1)):
                if factor.is_zero():
                    continue
                key = word + tail
                acc = nxt.get(key)
                add = c * factor
                nxt[key] = add if acc is None else acc + add
        out = nxt
    return {word + "d" * m.k: c for word, c in out.items() if not c.is_zero()}
