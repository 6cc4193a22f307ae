"""Exact scalar arithmetic over Q and over number fields Q[theta]/(m(theta)).

Every coefficient in this package is either a ``Rational`` (an alias for
``fractions.Fraction``: arbitrary precision, always in lowest terms) or a
``FieldElement``, a residue class in Q[theta]/(m(theta)) for a monic modulus
m.  No floating point is used anywhere.

Polynomials are dense coefficient lists, lowest degree first, so
t^2 - 5t + 6 is ``[6, -5, 1]``.  A modulus of degree 1 means the field is
plain Q (elements are constants).

The modulus is not required to be irreducible up front: inversion runs the
extended Euclidean algorithm and raises ``ReducibleModulusError`` naming the
discovered factor if a zero divisor turns up.
"""

from __future__ import annotations

from fractions import Fraction
import math

Rational = Fraction


class FieldError(Exception):
    """Base class for scalar-arithmetic errors."""


class FieldMismatchError(FieldError):
    """Operands live in different fields."""


class ReducibleModulusError(FieldError):
    """A zero divisor was found: the modulus is not irreducible.

    The offending proper factor is stored in ``factor`` (coefficient list).
    """

    def __init__(self, factor):
        self.factor = list(factor)
        super().__init__(
            "reducible modulus: discovered proper factor %s" % (poly_str(factor),)
        )


# ---------------------------------------------------------------------------
# dense polynomial helpers over Rational (lowest degree first)
# ---------------------------------------------------------------------------


def poly_trim(p):
    """Drop trailing zero coefficients; the zero polynomial becomes []."""
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_deg(p):
    """Degree, with deg(0) = -1."""
    return len(p) - 1


def poly_add(p, q):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_neg(p):
    return [-c for c in p]


def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Exact long division over Q: returns (quotient, remainder)."""
    q = poly_trim(q)
    assert q, "division by the zero polynomial"
    p = poly_trim(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    dq = poly_deg(q)
    lead = q[-1]
    while poly_deg(rem) >= dq:
        shift = poly_deg(rem) - dq
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem = poly_trim(rem)
    return poly_trim(quot), rem


def poly_monic(p):
    p = poly_trim(p)
    assert p, "the zero polynomial has no monic scaling"
    lead = p[-1]
    return [c / lead for c in p]


def poly_str(p, var="theta"):
    """Human-readable rendering, highest degree first."""
    p = poly_trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else "%s*" % abs(c)
            term = "%s%s" % (mag, var)
            if i > 1:
                term += "^%d" % i
            if c < 0:
                term = "-" + term
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)


def rational_from_string(s):
    """Parse an int, "p" or "p/q" into a Rational."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, Fraction):
        return s
    return Fraction(str(s))


def rational_to_string(q):
    return str(Fraction(q))


def poly_from_json(data):
    """Coefficient list from JSON: entries are ints or "p/q" strings."""
    return [rational_from_string(c) for c in data]


def poly_to_json(p):
    return [rational_to_string(c) for c in p]


# ---------------------------------------------------------------------------
# number fields
# ---------------------------------------------------------------------------


class NumberField:
    """Q[theta]/(m(theta)) for a monic modulus m of degree >= 1.

    Degree 1 is allowed and means the field is Q itself; the canonical
    rational field uses modulus [0, 1] (theta = 0).
    """

    def __init__(self, modulus):
        modulus = [Fraction(c) for c in poly_trim(modulus)]
        if poly_deg(modulus) < 1:
            raise FieldError("modulus must have degree >= 1")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        self.modulus = modulus

    @property
    def degree(self):
        return poly_deg(self.modulus)

    def element(self, coeffs):
        """Residue class of the given coefficient list."""
        coeffs = [Fraction(c) for c in coeffs]
        _, rem = poly_divmod(coeffs, self.modulus)
        return FieldElement(self, tuple(rem))

    def from_rational(self, q):
        return self.element([Fraction(q)])

    @property
    def zero(self):
        return FieldElement(self, ())

    @property
    def one(self):
        return self.from_rational(1)

    @property
    def theta(self):
        return self.element([0, 1])

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(tuple(self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return "NumberField(Q)"
        return "NumberField(Q[theta]/(%s))" % poly_str(self.modulus)


RATIONALS = NumberField([0, 1])


class FieldElement:
    """A residue class in a NumberField, stored as a trimmed coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(
                    "operands in different fields: %r vs %r" % (self.field, other.field)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def is_zero(self):
        return not self.coeffs

    def is_rational(self):
        return len(self.coeffs) <= 1

    def as_rational(self):
        """The element as a Rational; requires it to be constant."""
        if not self.coeffs:
            return Fraction(0)
        assert len(self.coeffs) == 1, "element is not rational: %r" % (self,)
        return self.coeffs[0]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, tuple(poly_trim(poly_add(list(self.coeffs), list(o.coeffs))))
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = poly_mul(list(self.coeffs), list(o.coeffs))
        _, rem = poly_divmod(prod, self.field.modulus)
        return FieldElement(self.field, tuple(rem))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm.

        Raises ZeroDivisionError on 0 and ReducibleModulusError if a zero
        divisor is detected (the modulus then splits).
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # Extended gcd of self.coeffs and the modulus: track only the
        # Bezout coefficient of self.
        r0, r1 = list(self.field.modulus), list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while poly_trim(r1):
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        if poly_deg(r0) > 0:
            # nontrivial common factor with the modulus
            raise ReducibleModulusError(poly_monic(r0))
        g = r0[0]
        coeffs = [c / g for c in s0]
        _, rem = poly_divmod(coeffs, self.field.modulus)
        return FieldElement(self.field, tuple(rem))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n):
        assert isinstance(n, int)
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return poly_str(list(self.coeffs))

    # -- serialization -----------------------------------------------------

    def to_json(self):
        """"p/q" string over Q, else the coefficient list as "p/q" strings."""
        if self.field.degree == 1:
            return rational_to_string(self.as_rational())
        return [rational_to_string(c) for c in self.coeffs]

    @staticmethod
    def from_json(field, data):
        if isinstance(data, (str, int)):
            return field.from_rational(rational_from_string(data))
        return field.element(poly_from_json(data))


# ---------------------------------------------------------------------------
# cyclotomic polynomials and roots of unity
# ---------------------------------------------------------------------------


def totient(n):
    """Euler's phi function."""
    assert n >= 1
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


_CYCLOTOMIC_CACHE = {}


def cyclotomic(n):
    """The n-th cyclotomic polynomial Phi_n as a coefficient list.

    Computed by exact division: Phi_n = (t^n - 1) / prod_{d|n, d<n} Phi_d.
    """
    assert n >= 1
    if n in _CYCLOTOMIC_CACHE:
        return list(_CYCLOTOMIC_CACHE[n])
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic(d))
            assert not rem, "cyclotomic division must be exact"
    _CYCLOTOMIC_CACHE[n] = list(num)
    return num


def root_of_unity_order(a, bound):
    """Smallest k in 1..bound with a^k = 1, or None if there is none.

    Raises ValueError on a = 0 (zero is no root of unity).
    """
    if a.is_zero():
        raise ValueError("order of zero is undefined")
    one = a.field.one
    power = one
    for k in range(1, bound + 1):
        power = power * a
        if power == one:
            return k
    return None


def max_root_of_unity_order(field):
    """Upper bound for orders of roots of unity inside the field.

    A root of unity of order k generates Q(zeta_k), so totient(k) must not
    exceed the field degree D; totient(k) >= sqrt(k/2) caps k at 2*D^2.
    """
    d = field.degree
    best = 1
    for k in range(1, 2 * d * d + 2):
        if totient(k) <= d:
            best = k
    return best


# ---------------------------------------------------------------------------
# the chosen-roots data (r1, r2)
# ---------------------------------------------------------------------------


class FieldSpec:
    """A number field together with the chosen roots r1, r2 of t^2 - alpha*t - beta.

    alpha = r1 + r2 and beta = -r1*r2 are derived.  Requires r1 != 0 and
    (alpha, beta) != (0, 0).
    """

    def __init__(self, field, r1, r2):
        if not isinstance(r1, FieldElement):
            r1 = field.from_rational(r1)
        if not isinstance(r2, FieldElement):
            r2 = field.from_rational(r2)
        if r1.field != field or r2.field != field:
            raise FieldMismatchError("r1, r2 must live in the given field")
        if r1.is_zero():
            raise FieldError("r1 = 0 is not allowed")
        self.field = field
        self.r1 = r1
        self.r2 = r2
        self.alpha = r1 + r2
        self.beta = -(r1 * r2)
        if self.alpha.is_zero() and self.beta.is_zero():
            raise FieldError("(alpha, beta) = (0, 0) is out of scope")

    @property
    def modulus(self):
        return self.field.modulus

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.field == other.field
            and self.r1 == other.r1
            and self.r2 == other.r2
        )

    def __hash__(self):
        return hash((self.field, self.r1, self.r2))

    def __repr__(self):
        return "FieldSpec(%r, r1=%r, r2=%r)" % (self.field, self.r1, self.r2)

    def to_json(self):
        return {
            "minpoly": poly_to_json(self.modulus),
            "r1": self.r1.to_json(),
            "r2": self.r2.to_json(),
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
        }


def genericity_violation(spec, bound):
    """First pair (i, j) != (0, 0) with 0 <= i, j <= bound and r1^i r2^j = 1.

    Returns None when no such pair exists in the window.
    """
    one = spec.field.one
    p1 = one
    for i in range(0, bound + 1):
        p12 = p1
        for j in range(0, bound + 1):
            if (i, j) != (0, 0) and p12 == one:
                return (i, j)
            p12 = p12 * spec.r2
        p1 = p1 * spec.r1
    return None


def genericity_check(spec, bound):
    """True iff r1^i r2^j != 1 for all 0 <= i, j <= bound with (i, j) != (0, 0)."""
    return genericity_violation(spec, bound) is None
