"""Free-algebra rewriting oracle for products in the down-up algebra.

This is the slow, independent route used to cross-check the PBW
normalization in pbw.py.  Elements are K-linear combinations of words over
the alphabet {u, d}, and the defining relations are applied directly as
rewrite rules on subwords:

    d d u  ->  alpha * (d u d)  +  beta * (u d d)
    d u u  ->  alpha * (u d u)  +  beta * (u u d)

Each rule replaces a factor by words with the same letter content, while
strictly decreasing the number of inverted pairs (a d before a u), so
rewriting terminates.  Words containing neither factor are exactly the
normal words u^i (du)^j d^k.

The two reduction strategies ("leftmost" / "rightmost" redex first) must
agree on the final combination; tests sample that confluence property at
random.
"""

from __future__ import annotations

from fractions import Fraction

from .exactfield import FieldElement
from .pbw import Monomial, word_expansion


class WordCombination:
    """Finite K-linear combination of words over {u, d}."""

    __slots__ = ("case", "terms")

    def __init__(self, case, terms):
        for word in terms:
            assert set(word) <= {"u", "d"}, "bad letter in %r" % word
        self.case = case
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def __add__(self, other):
        assert other.case is self.case
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, self.case.field.zero) + c
        return WordCombination(self.case, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not isinstance(c, FieldElement):
            c = self.case.field.from_rational(c)
        return WordCombination(self.case, {w: c * v for w, v in self.terms.items()})

    def concat(self, other):
        """The free (concatenation) product; no reduction is performed."""
        assert other.case is self.case
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                key = w1 + w2
                add = c1 * c2
                acc = out.get(key)
                out[key] = add if acc is None else acc + add
        return WordCombination(self.case, out)

    def __eq__(self, other):
        if not isinstance(other, WordCombination):
            return NotImplemented
        return self.case is other.case and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%r)*%s" % (self.terms[w], w or "1") for w in self.support())


def find_redex(word, strategy="leftmost"):
    """Position of the first rewritable factor ("ddu" or "duu"), or None."""
    positions = range(len(word) - 2)
    if strategy == "rightmost":
        positions = reversed(positions)
    elif strategy != "leftmost":
        raise ValueError("unknown strategy %r" % strategy)
    for p in positions:
        if word[p] == "d" and word[p + 1 : p + 3] in ("du", "uu"):
            if word[p : p + 3] in ("ddu", "duu"):
                return p
    return None


def is_normal_word(word):
    return find_redex(word) is None


def reduce_combination(combo, strategy="leftmost"):
    """Rewrite until no factor "ddu" or "duu" remains.

    Worklist algorithm: like coefficients are merged eagerly, so the
    result is a clean combination of normal words.
    """
    case = combo.case
    replacements = {
        "ddu": (("dud", case.alpha), ("udd", case.beta)),
        "duu": (("udu", case.alpha), ("uud", case.beta)),
    }
    pending = dict(combo.terms)
    done = {}
    while pending:
        word, coeff = pending.popitem()
        if coeff.is_zero():
            continue
        p = find_redex(word, strategy)
        if p is None:
            acc = done.get(word)
            done[word] = coeff if acc is None else acc + coeff
            continue
        head, factor, tail = word[:p], word[p : p + 3], word[p + 3 :]
        for repl, scalar in replacements[factor]:
            key = head + repl + tail
            add = coeff * scalar
            acc = pending.get(key)
            pending[key] = add if acc is None else acc + add
    return WordCombination(case, done)


def reduce_word(case, word, strategy="leftmost"):
    return reduce_combination(WordCombination(case, {word: case.field.one}), strategy)


def normal_word_exponents(word):
    """Parse a normal word as u^i (du)^j d^k; raises on non-normal input."""
    i = 0
    while i < len(word) and word[i] == "u":
        i += 1
    j = 0
    p = i
    while word[p : p + 2] == "du":
        j += 1
        p += 2
    k = len(word) - p
    if word[p:] != "d" * k:
        raise ValueError("word %r is not in normal form" % word)
    return i, j, k


def to_pbw_element(combo):
    """Convert a fully reduced combination into the PBW basis u^i w^j d^k.

    Each (du) block is rewritten via du = (w - beta*ud)/r1 and the pieces
    are multiplied back together with the PBW normal product.
    """
    case = combo.case
    r1_inv = case.r1.inv()
    du_elt = case.element({(0, 1, 0): r1_inv, (1, 0, 1): -case.beta * r1_inv})
    total = case.zero_element()
    for word, coeff in combo.terms.items():
        i, j, k = normal_word_exponents(word)
        elt = case.monomial_element(i, 0, 0) * du_elt**j * case.monomial_element(0, 0, k)
        total = total + elt.scale(coeff)
    return total


def expand_to_words(case, element):
    """Inverse direction: an AlgebraElement as a combination of free words."""
    out = WordCombination(case, {})
    for m, c in element.terms.items():
        out = out + WordCombination(case, word_expansion(case, m)).scale(c)
    return out


def oracle_product(x, y):
    """Product of two AlgebraElements computed entirely through words.

    Expand both factors into free words, concatenate, rewrite to normal
    words, convert back to the PBW basis.  Must agree with x * y.
    """
    assert x.case is y.case
    free = expand_to_words(x.case, x).concat(expand_to_words(y.case, y))
    return to_pbw_element(reduce_combination(free))
