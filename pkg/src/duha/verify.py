"""Verification layer: computed dimensions against closed forms and bases.

Everything here reduces to three kinds of exact statements, each of which
is checked rather than trusted:

  * dimension tables computed from ranks of the graded differentials,
    with the complex property (consecutive maps compose to zero) verified
    at every bidegree along the way;
  * per-degree comparisons of those tables against the closed-form
    catalog (or against duality / Goodwillie-derived predictions);
  * basis certificates: each claimed representative is checked to be a
    cycle (or to witness a cokernel class), counted against the computed
    dimension, and shown independent modulo the image by an explicit
    rank jump.  in_image solutions are recorded so every certificate can
    be re-verified from the report alone.

Reports serialize deterministically; notes carry context (conventions,
finite genericity window, advisory cross-checks) without affecting the
pass/fail status.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import koszul
from .linalg import ConsistencyError, mat_mul, mat_vec, in_image, rank as mat_rank, stacked_rank_jump, Matrix
from .pbw import (
    F1,
    F2_NONROOT,
    F2_ROOT,
    Monomial,
    UnsupportedCaseError,
    dim_total,
    graded_basis,
    sdeg_range,
)
from .series import (
    LaurentSeries,
    catalog_cohomology,
    catalog_homology,
    goodwillie,
    hilbert_series_algebra,
    igusa_chi,
    _hh_series_f2_root,
    _s1,
)

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"


class DimensionTable:
    """Computed dims keyed by (i, deg, sdeg); zeros are not stored."""

    def __init__(self, theory, case, window):
        self.theory = theory
        self.case = case
        self.window = window
        self._dims = {}

    def set(self, i, deg, sdeg, dim):
        assert dim >= 0
        if dim:
            self._dims[(i, deg, sdeg)] = dim

    def get(self, i, deg, sdeg):
        return self._dims.get((i, deg, sdeg), 0)

    def total(self, i, deg):
        return sum(v for (ii, dd, _), v in self._dims.items() if ii == i and dd == deg)

    def rows(self):
        return [(i, d, s, v) for (i, d, s), v in sorted(self._dims.items())]


def _bidegrees(window, theory):
    lo, hi = window
    out = []
    for deg in range(lo, hi + 1):
        top = deg if theory == HOMOLOGY else deg + 4
        for sdeg in sdeg_range(top):
            out.append((deg, sdeg))
    return out


def _require_zero(product, name, bidegree):
    if not product.is_zero():
        raise ConsistencyError("%s != 0 at bidegree %r" % (name, bidegree))


def _dims_at(case, bidegree, theory):
    if theory == HOMOLOGY:
        d1, d2, d3 = koszul.homology_maps(case, bidegree)
        _require_zero(mat_mul(d1.matrix, d2.matrix), "d1 o d2", bidegree)
        _require_zero(mat_mul(d2.matrix, d3.matrix), "d2 o d3", bidegree)
        r1, r2, r3 = d1.rank(), d2.rank(), d3.rank()
        dims = (
            len(d1.rows) - r1,
            len(d1.cols) - r1 - r2,
            len(d2.cols) - r2 - r3,
            len(d3.cols) - r3,
        )
    else:
        d0s, d1s, d2s = koszul.cohomology_maps(case, bidegree)
        _require_zero(mat_mul(d1s.matrix, d0s.matrix), "d1* o d0*", bidegree)
        _require_zero(mat_mul(d2s.matrix, d1s.matrix), "d2* o d1*", bidegree)
        r0, r1, r2 = d0s.rank(), d1s.rank(), d2s.rank()
        dims = (
            len(d0s.cols) - r0,
            len(d1s.cols) - r1 - r0,
            len(d2s.cols) - r2 - r1,
            len(d2s.rows) - r2,
        )
    if any(v < 0 for v in dims):
        raise ConsistencyError("negative dimension at bidegree %r" % (bidegree,))
    return dims


def compute_hh_dims(case, window, theory=HOMOLOGY, jobs=1):
    """Dimension table of HH_i (or HH^i) for i = 0..3 over the degree window.

    Every bidegree is processed independently (optionally in a bounded
    thread pool) and results are merged in sorted order, so the table is
    deterministic regardless of jobs.
    """
    assert theory in (HOMOLOGY, COHOMOLOGY)
    table = DimensionTable(theory, case, window)
    bidegrees = _bidegrees(window, theory)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = dict(zip(bidegrees, pool.map(lambda bd: _dims_at(case, bd, theory), bidegrees)))
    else:
        results = {bd: _dims_at(case, bd, theory) for bd in bidegrees}
    for (deg, sdeg) in sorted(results):
        for i, v in enumerate(results[(deg, sdeg)]):
            table.set(i, deg, sdeg, v)
    return table


class VerificationReport:
    """case + window + comparisons + certificates + notes, JSON-stable."""

    def __init__(self, case, window):
        self.case = case
        self.window = window
        self.comparisons = []
        self.certificates = []
        self.notes = []
        self.tables = []

    def add_comparison(self, quantity, degree, computed, predicted, sdeg=None, advisory=False):
        row = {
            "quantity": quantity,
            "degree": degree,
            "computed": computed,
            "predicted": predicted,
            "match": computed == predicted,
        }
        if sdeg is not None:
            row["sdeg"] = sdeg
        if advisory:
            row["advisory"] = True
        self.comparisons.append(row)

    def add_certificate(self, claim, status, witness):
        self.certificates.append({"claim": claim, "status": status, "witness": witness})

    def add_note(self, text):
        self.notes.append(text)

    def extend(self, other):
        self.comparisons.extend(other.comparisons)
        self.certificates.extend(other.certificates)
        self.notes.extend(other.notes)
        self.tables.extend(other.tables)

    def ok(self):
        for row in self.comparisons:
            if not row.get("advisory") and not row["match"]:
                return False
        return all(c["status"] == "certified" for c in self.certificates)

    def to_json(self):
        return {
            "case": self.case.to_json(),
            "window": {"min_deg": self.window[0], "max_deg": self.window[1]},
            "comparisons": self.comparisons,
            "certificates": self.certificates,
            "notes": self.notes,
        }


def _int_coeff(series, deg):
    c = series.coeff(deg)
    assert c.denominator == 1, "non-integer predicted dimension"
    return int(c)


def _family_notes(report, case, theory):
    label = "HH_i" if theory == HOMOLOGY else "HH^i"
    report.add_note("%s = 0 for i >= 4: the resolution has length 3" % label)
    if case.family == F1:
        report.add_note(
            "genericity r1^i r2^j != 1 verified for all 0 <= i, j <= %d, (i, j) != (0, 0);"
            " truncated computations only involve exponents inside that window"
            % case.genericity_bound
        )
    if theory == COHOMOLOGY:
        report.add_note(
            "dual generators carry the negated bidegrees of their partners"
            " (bideg(D) = (-1, +1)); assembly asserts homogeneity at every bidegree"
        )


def verify_against_catalog(case, window, theory=HOMOLOGY, jobs=1):
    """Compare computed HH dims with the closed-form catalog, degree by degree.

    For F2 cases the cohomology predictions go through 3-Calabi-Yau
    duality: HH^i at degree s is predicted by the homology catalog entry
    for HH_(3-i) at degree s + 4.
    """
    report = VerificationReport(case, window)
    table = compute_hh_dims(case, window, theory, jobs)
    report.tables.append(table)
    lo, hi = window
    if theory == HOMOLOGY:
        for i in range(4):
            predicted = catalog_homology(case, i).expand(lo, hi)
            for deg in range(lo, hi + 1):
                report.add_comparison("HH_%d" % i, deg, table.total(i, deg), _int_coeff(predicted, deg))
    else:
        if case.family == F1:
            for i in range(4):
                predicted = catalog_cohomology(case, i).expand(lo, hi)
                for deg in range(lo, hi + 1):
                    report.add_comparison(
                        "HH^%d" % i, deg, table.total(i, deg), _int_coeff(predicted, deg)
                    )
        else:
            report.add_note(
                "predicted cohomology via 3-Calabi-Yau duality:"
                " HH^i at degree s is the catalog value of HH_(3-i) at degree s + 4"
            )
            for i in range(4):
                predicted = catalog_homology(case, 3 - i).expand(lo + 4, hi + 4)
                for deg in range(lo, hi + 1):
                    report.add_comparison(
                        "HH^%d" % i, deg, table.total(i, deg), _int_coeff(predicted, deg + 4)
                    )
    _family_notes(report, case, theory)
    if theory == HOMOLOGY:
        if case.family == F2_ROOT and case.n in (1, 2):
            _alt_label_comparisons(report, table, case, window)
        elif case.family in (F2_ROOT, F2_NONROOT):
            _compact_variant_comparisons(report, table, case, window)
    return report


def _compact_variant_comparisons(report, table, case, window):
    """Advisory rows against the compact variants of the F2 closed forms.

    The compact variant drops the (1 + t^(2n)) factor (root order n >= 3)
    or keeps only even powers of w1*w2 (nonroot) and therefore
    undercounts; the certified bases and the computed ranks agree on the
    corrected series.  These rows document the difference so it stays
    visible without affecting the exit status.
    """
    lo, hi = window
    mismatches = 0
    for i in range(4):
        predicted = catalog_homology(case, i, compact=True).expand(lo, hi)
        for deg in range(lo, hi + 1):
            computed = table.total(i, deg)
            expected = _int_coeff(predicted, deg)
            if computed != expected:
                mismatches += 1
            report.add_comparison(
                "compact:HH_%d" % i, deg, computed, expected, advisory=True
            )
    if case.family == F2_ROOT:
        what = "lacking the (1 + t^%d) factor" % (2 * case.n)
    else:
        what = "counting only even powers of w1 w2 (1 - t^8 in place of 1 - t^4)"
    report.add_note(
        "advisory rows compact:HH_i compare against the variant of the closed forms"
        " %s; %d mismatches on this window are evidence that the corrected form is"
        " required, matching the certified bases" % (what, mismatches)
    )


def _alt_label_comparisons(report, table, case, window):
    """Advisory cross-check of the n = 1 and n = 2 closed forms.

    The two printed series sets are easy to mislabel, so for either case
    we also compare against the forms catalogued for the *other* n.  The
    rows are marked advisory: they document which reading fits and never
    affect the exit status.
    """
    other = 2 if case.n == 1 else 1
    lo, hi = window
    alt = _hh_series_f2_root(other)
    for i in range(4):
        predicted = alt[i].expand(lo, hi)
        for deg in range(lo, hi + 1):
            report.add_comparison(
                "alt:n=%d:HH_%d" % (other, i),
                deg,
                table.total(i, deg),
                _int_coeff(predicted, deg),
                advisory=True,
            )
    own = sum(
        1
        for row in report.comparisons
        if not row.get("advisory") and row["quantity"].startswith("HH_") and not row["match"]
    )
    mismatched = sum(
        1 for row in report.comparisons if row.get("advisory") and not row["match"]
    )
    report.add_note(
        "advisory catalog cross-check: computed dimensions for n=%d have %d mismatches"
        " against the n=%d closed forms and %d against the n=%d closed forms;"
        " advisory rows never affect the exit status" % (case.n, own, case.n, mismatched, other)
    )


# ---------------------------------------------------------------------------
# A itself: bigraded dimension table and recurrence
# ---------------------------------------------------------------------------


def dims_report(case, window):
    """Bigraded dims of A vs the four-term recurrence and the closed form.

    The bigraded Hilbert series 1/(1 - t(s + 1/s) + t^3(s + 1/s) - t^4)
    says the sdeg-layer polynomials a_n obey
    a_n = (s + 1/s) a_(n-1) - (s + 1/s) a_(n-3) + a_(n-4) with a_0 = 1.
    """
    lo, hi = max(window[0], 0), window[1]
    report = VerificationReport(case, (lo, hi))
    layers = []
    for deg in range(hi + 1):
        layers.append({sdeg: len(graded_basis(case, (deg, sdeg))) for sdeg in sdeg_range(deg)})

    def shift_sum(layer):
        out = {}
        for s, v in layer.items():
            out[s + 1] = out.get(s + 1, 0) + v
            out[s - 1] = out.get(s - 1, 0) + v
        return out

    def at(n):
        if n < 0:
            return {}
        if n == 0:
            return {0: 1}
        prev1, prev3, prev4 = shift_sum(layers[n - 1]), {}, {}
        if n >= 3:
            prev3 = shift_sum(layers[n - 3])
        if n >= 4:
            prev4 = layers[n - 4]
        out = {}
        for s in set(prev1) | set(prev3) | set(prev4):
            v = prev1.get(s, 0) - prev3.get(s, 0) + prev4.get(s, 0)
            if v:
                out[s] = v
        return out

    total_series = hilbert_series_algebra().expand(0, hi)
    for deg in range(lo, hi + 1):
        predicted_layer = at(deg)
        for sdeg in sorted(set(layers[deg]) | set(predicted_layer)):
            report.add_comparison(
                "A", deg, layers[deg].get(sdeg, 0), predicted_layer.get(sdeg, 0), sdeg=sdeg
            )
        report.add_comparison("A_total", deg, dim_total(case, deg), _int_coeff(total_series, deg))
    report.add_note("closed form: A(t) = 1/((1-t^2)(1-t)^2)")
    report.add_note("recurrence: a_n = (s+1/s)(a_(n-1) - a_(n-3)) + a_(n-4), a_0 = 1")
    return report


# ---------------------------------------------------------------------------
# claimed bases
# ---------------------------------------------------------------------------


def claimed_hh0_monomials(case, max_deg):
    """The claimed HH_0 basis monomials of degree <= max_deg for the case."""
    out = []
    n = case.n
    if case.family == F1:
        out.append(Monomial(0, 0, 0))
        for j in range(1, max_deg + 1):
            if 2 * j <= max_deg:
                out.append(Monomial(0, j, 0))
            out.append(Monomial(j, 0, 0))
            out.append(Monomial(0, 0, j))
    elif n == 1:
        for i in range(max_deg + 1):
            for k in range(max_deg + 1 - i):
                out.append(Monomial(i, 0, k))
    elif n == 2:
        for i in range(0, max_deg + 1, 2):
            for k in range(0, max_deg + 1 - i, 2):
                out.append(Monomial(i, 0, k))
        for i in range(1, max_deg + 1, 2):
            out.append(Monomial(i, 0, 0))
            out.append(Monomial(0, 0, i))
        for j in range(1, max_deg // 2 + 1, 2):
            out.append(Monomial(0, j, 0))
    else:
        # F2 with n = 0 (no root of unity) or n >= 3; "0 divides x" means x = 0
        divides = (lambda x: x == 0) if n == 0 else (lambda x: x % n == 0)
        for i in range(max_deg + 1):
            for j in range((max_deg - i) // 2 + 1):
                for k in range(max_deg + 1 - i - 2 * j):
                    if divides(j - i) and divides(j - k):
                        out.append(Monomial(i, j, k))
        for i in range(1, max_deg + 1):
            if not divides(i):
                out.append(Monomial(i, 0, 0))
        for k in range(1, max_deg + 1):
            if not divides(k):
                out.append(Monomial(0, 0, k))
        for j in range(1, max_deg // 2 + 1, 2):
            if n % 2 == 1 and j > n - 2:
                break
            out.append(Monomial(0, j, 0))
    assert len(set(out)) == len(out), "claimed HH_0 monomials overlap"
    return out


def _w2_element(case):
    """w2 = beta*ud + r2*du, written in the PBW basis via du = (w - beta*ud)/r1."""
    ratio = case.r2 * case.r1.inv()
    return case.element({(1, 0, 1): case.beta * (case.field.one - ratio), (0, 1, 0): ratio})


def _hh3_label(u_exp, w_exp, w2_exp, d_exp):
    parts = []
    for name, e in (("u", u_exp), ("w", w_exp), ("w2", w2_exp), ("d", d_exp)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append("%s^%d" % (name, e))
    return " ".join(parts) if parts else "1"


def claimed_hh3_elements(case, max_deg):
    """Claimed HH_3 coefficients (paired with the degree-4 top slot), with labels.

    Returns [(label, AlgebraElement)] with element degree <= max_deg - 4.
    """
    bound = max_deg - 4
    out = []
    if case.family == F1 or bound < 0:
        return out
    n = case.n
    if case.family == F2_ROOT and n == 1:
        for i in range(bound // 2 + 1):
            out.append((_hh3_label(0, i, 0, 0), case.monomial_element(0, i, 0)))
        return out
    if case.family == F2_ROOT and n == 2:
        for i in range(bound // 4 + 1):
            out.append((_hh3_label(0, 2 * i, 0, 0), case.monomial_element(0, 2 * i, 0)))
        return out
    w2 = _w2_element(case)
    w2_pows = [case.one_element()]
    while 2 * len(w2_pows) <= bound:
        w2_pows.append(w2_pows[-1] * w2)
    if case.family == F2_NONROOT:
        # ker d_3 is the center K[w1*w2]: one class w1^i w2^i per degree 4i
        for i in range(bound // 4 + 1):
            elt = case.monomial_element(0, i, 0) * w2_pows[i]
            out.append((_hh3_label(0, i, i, 0), elt))
        return out
    # F2-root, n >= 3: w^i w2^j u^(nk) d^(nl) with n | i - j and k*l = 0
    for i in range(bound // 2 + 1):
        for j in range((bound - 2 * i) // 2 + 1):
            if (i - j) % n:
                continue
            head = case.monomial_element(0, i, 0) * w2_pows[j]
            rest = bound - 2 * i - 2 * j
            for k in range(rest // n + 1):
                if k == 0:
                    for l in range(rest // n + 1):
                        elt = head * case.monomial_element(0, 0, n * l)
                        out.append((_hh3_label(0, i, j, n * l), elt))
                else:
                    elt = case.monomial_element(n * k, 0, 0) * head
                    out.append((_hh3_label(n * k, i, j, 0), elt))
    return out


def _coords(case, bidegree, element):
    """Coordinates of a homogeneous element in graded_basis order."""
    basis = graded_basis(case, bidegree)
    index = {m: r for r, m in enumerate(basis)}
    vec = [case.field.zero] * len(basis)
    for m, c in element.terms.items():
        if m.bidegree() != bidegree:
            raise ConsistencyError("element %r not homogeneous of %r" % (element, bidegree))
        vec[index[m]] = c
    return vec


def _chain_coords(case, symbols, bidegree, parts):
    """Coordinates of sum of (symbol, element) parts in chain_basis order."""
    basis = koszul.chain_basis(case, symbols, bidegree)
    index = {pair: r for r, pair in enumerate(basis)}
    vec = [case.field.zero] * len(basis)
    for sym, elt in parts:
        for m, c in elt.terms.items():
            vec[index[(sym, m)]] = vec[index[(sym, m)]] + c
    return vec


def certify_hh0_basis(case, window):
    """Per-bidegree certificates that the claimed monomials represent a basis
    of A / [A, A] = coker(d1): right count, independent modulo the image."""
    report = VerificationReport(case, window)
    lo, hi = window
    claimed = {}
    for m in claimed_hh0_monomials(case, hi):
        claimed.setdefault(m.bidegree(), []).append(m)
    for deg in range(max(lo, 0), hi + 1):
        for sdeg in sdeg_range(deg):
            reps = claimed.get((deg, sdeg), [])
            d1 = koszul.assemble_d1(case, (deg, sdeg))
            dim = len(d1.rows) - d1.rank()
            if not reps and not dim:
                continue
            vectors = [_coords(case, (deg, sdeg), case.element({tuple(m): 1})) for m in reps]
            jump = stacked_rank_jump(d1.matrix, vectors)
            status = "certified" if len(reps) == dim and jump == len(reps) else "failed"
            report.add_certificate(
                "HH_0 basis at bidegree (%d, %d)" % (deg, sdeg),
                status,
                {
                    "bidegree": [deg, sdeg],
                    "claimed": [str(m) for m in reps],
                    "computed_dim": dim,
                    "rank_d1": d1.rank(),
                    "rank_jump": jump,
                },
            )
    return report


def certify_hh3_basis(case, window):
    """Certificates that the claimed elements are a basis of HH_3 = ker(d3)."""
    report = VerificationReport(case, window)
    lo, hi = window
    if case.family == F1:
        checked = 0
        kernels = 0
        for deg in range(max(lo, 0), hi + 1):
            for sdeg in sdeg_range(deg):
                d3 = koszul.assemble_d3(case, (deg, sdeg))
                checked += 1
                kernels += len(d3.cols) - d3.rank()
        report.add_certificate(
            "HH_3 vanishes at every bidegree with deg <= %d" % hi,
            "certified" if kernels == 0 else "failed",
            {"bidegrees_checked": checked, "total_kernel_dim": kernels},
        )
        return report
    claimed = {}
    for label, elt in claimed_hh3_elements(case, hi):
        bd = elt.bidegree()
        if bd is None:
            raise ConsistencyError("claimed HH_3 element %s is not homogeneous" % label)
        chain_bd = (bd[0] + 4, bd[1])
        claimed.setdefault(chain_bd, []).append((label, elt))
    for deg in range(max(lo, 0), hi + 1):
        for sdeg in sdeg_range(deg):
            entries = claimed.get((deg, sdeg), [])
            d3 = koszul.assemble_d3(case, (deg, sdeg))
            kernel_dim = len(d3.cols) - d3.rank()
            if not entries and not kernel_dim:
                continue
            vectors = [_coords(case, (deg - 4, sdeg), elt) for _, elt in entries]
            killed = all(
                all(v.is_zero() for v in mat_vec(d3.matrix, vec)) for vec in vectors
            )
            indep = (
                mat_rank(Matrix(case.field, len(vectors[0]), len(vectors), [list(col) for col in zip(*vectors)]))
                if vectors
                else 0
            )
            status = (
                "certified"
                if killed and indep == len(entries) and len(entries) == kernel_dim
                else "failed"
            )
            report.add_certificate(
                "HH_3 basis at bidegree (%d, %d)" % (deg, sdeg),
                status,
                {
                    "bidegree": [deg, sdeg],
                    "claimed": [label + " | d2u2" for label, _ in entries],
                    "kernel_dim": kernel_dim,
                    "killed_by_d3": killed,
                    "independent_rank": indep,
                },
            )
    report.add_note("w2 = beta*ud + r2*du, expanded in the PBW basis before coordinatizing")
    return report


def certify_cohomology_bases(case, window):
    """Certificates for the claimed cocycle bases of HH^0..HH^3 (F1 only)."""
    report = VerificationReport(case, window)
    if case.family != F1:
        report.add_note("cohomology basis certificates cover F1 only; skipped for this case")
        return report
    lo, hi = window
    field = case.field
    u, w, d = case.gens()

    def mono(i, j, k):
        return case.monomial_element(i, j, k)

    # HH^0 = K at bidegree (0, 0)
    if lo <= 0 <= hi:
        d0s = koszul.assemble_d0star(case, (0, 0))
        vec = _coords(case, (0, 0), case.one_element())
        cocycle = all(v.is_zero() for v in mat_vec(d0s.matrix, vec))
        dim = len(d0s.cols) - d0s.rank()
        report.add_certificate(
            "HH^0 basis at bidegree (0, 0)",
            "certified" if cocycle and dim == 1 else "failed",
            {"bidegree": [0, 0], "claimed": ["1"], "computed_dim": dim, "cocycle": cocycle},
        )
        # HH^1 basis {U|u, D|d} at bidegree (0, 0)
        d1s = koszul.assemble_d1star(case, (0, 0))
        vecs = [
            _chain_coords(case, koszul.COHOMOLOGY_COMPONENTS[1], (0, 0), [(koszul.VS_U, u)]),
            _chain_coords(case, koszul.COHOMOLOGY_COMPONENTS[1], (0, 0), [(koszul.VS_D, d)]),
        ]
        cocycle = all(all(v.is_zero() for v in mat_vec(d1s.matrix, vec)) for vec in vecs)
        jump = stacked_rank_jump(d0s.matrix, vecs)
        dim = (len(d1s.cols) - d1s.rank()) - d0s.rank()
        report.add_certificate(
            "HH^1 basis at bidegree (0, 0)",
            "certified" if cocycle and jump == 2 and dim == 2 else "failed",
            {
                "bidegree": [0, 0],
                "claimed": ["V*:U|u", "V*:D|d"],
                "computed_dim": dim,
                "cocycle": cocycle,
                "rank_jump": jump,
            },
        )

    # HH^2: D2U|w^k d + DU2|u w^k (k >= 0, bidegree (2k-2, 0)) and
    #       D2U|u d^2 + DU2|u^2 d (bidegree (0, 0))
    hh2_claims = {}
    for k in range(0, (hi + 2) // 2 + 1):
        bd = (2 * k - 2, 0)
        if lo <= bd[0] <= hi:
            hh2_claims.setdefault(bd, []).append(
                (
                    "R*:D2U|%s + R*:DU2|%s" % (Monomial(0, k, 1), Monomial(1, k, 0)),
                    [(koszul.RS_D2U, mono(0, k, 1)), (koszul.RS_DU2, mono(1, k, 0))],
                )
            )
    if lo <= 0 <= hi:
        hh2_claims.setdefault((0, 0), []).append(
            (
                "R*:D2U|u d^2 + R*:DU2|u^2 d",
                [(koszul.RS_D2U, mono(1, 0, 2)), (koszul.RS_DU2, mono(2, 0, 1))],
            )
        )
    for bd in sorted(hh2_claims):
        d1s = koszul.assemble_d1star(case, bd)
        d2s = koszul.assemble_d2star(case, bd)
        entries = hh2_claims[bd]
        vecs = [
            _chain_coords(case, koszul.COHOMOLOGY_COMPONENTS[2], bd, parts)
            for _, parts in entries
        ]
        cocycle = all(all(v.is_zero() for v in mat_vec(d2s.matrix, vec)) for vec in vecs)
        jump = stacked_rank_jump(d1s.matrix, vecs)
        dim = (len(d2s.cols) - d2s.rank()) - d1s.rank()
        status = "certified" if cocycle and jump == len(entries) == dim else "failed"
        report.add_certificate(
            "HH^2 basis at bidegree (%d, %d)" % bd,
            status,
            {
                "bidegree": list(bd),
                "claimed": [label for label, _ in entries],
                "computed_dim": dim,
                "cocycle": cocycle,
                "rank_jump": jump,
            },
        )

    # HH^3 = coker(d2*): classes of w^j (j != 2) and u w d, all at sdeg 0
    hh3_claims = {}
    for j in range(0, (hi + 4) // 2 + 1):
        bd = (2 * j - 4, 0)
        if not (lo <= bd[0] <= hi):
            continue
        if j == 2:
            hh3_claims.setdefault(bd, []).append(("O*:D2U2|u w d", Monomial(1, 1, 1)))
        else:
            hh3_claims.setdefault(bd, []).append(
                ("O*:D2U2|%s" % (Monomial(0, j, 0),), Monomial(0, j, 0))
            )
    for bd in sorted(hh3_claims):
        d2s = koszul.assemble_d2star(case, bd)
        entries = hh3_claims[bd]
        vecs = [_coords(case, (bd[0] + 4, bd[1]), mono(*m)) for _, m in entries]
        jump = stacked_rank_jump(d2s.matrix, vecs)
        dim = len(d2s.rows) - d2s.rank()
        status = "certified" if jump == len(entries) == dim else "failed"
        witness = {
            "bidegree": list(bd),
            "claimed": [label for label, _ in entries],
            "computed_dim": dim,
            "rank_jump": jump,
        }
        if bd == (0, 0):
            # the omitted class: w^2 must die in the cokernel
            target = _coords(case, (4, 0), mono(0, 2, 0))
            solution = in_image(d2s.matrix, target)
            witness["omitted"] = "O*:D2U2|w^2"
            witness["omitted_in_image"] = solution is not None
            if solution is not None:
                witness["solution"] = [
                    [koszul.GradedMap.label(pair), coeff.to_json()]
                    for pair, coeff in zip(d2s.cols, solution)
                    if not coeff.is_zero()
                ]
            else:
                status = "failed"
        report.add_certificate("HH^3 basis at bidegree (%d, %d)" % bd, status, witness)
    return report


# ---------------------------------------------------------------------------
# cyclic homology and duality
# ---------------------------------------------------------------------------


def _table_series(table, i, window, reduced_at_zero=False):
    lo, hi = window
    coeffs = {}
    for deg in range(max(lo, 0), hi + 1):
        v = table.total(i, deg)
        if reduced_at_zero and deg == 0:
            v -= 1
        if v:
            coeffs[deg] = Fraction(v)
    return LaurentSeries(0, hi, coeffs)


def verify_cyclic(case, window, jobs=1):
    """Reduced cyclic homology via the Goodwillie route, fully cross-checked.

    From the computed HH_0-bar and HH_3 series the exact sequence gives
    HCbar_0..2 and re-derives HH_1, HH_2; those are compared against the
    directly computed dimensions and against the catalog, and the Euler
    characteristic HCbar_0 - HCbar_1 + HCbar_2 is compared with the
    independently computed log-series expansion.
    """
    lo, hi = max(window[0], 0), window[1]
    report = VerificationReport(case, (lo, hi))
    table = compute_hh_dims(case, (0, hi), HOMOLOGY, jobs)
    report.tables.append(table)
    hh0bar = _table_series(table, 0, (0, hi), reduced_at_zero=True)
    hh3 = _table_series(table, 3, (0, hi))
    derived = goodwillie(hh0bar, hh3)

    catalog_hh0bar = catalog_homology(case, 0) - 1
    catalog_hh3 = catalog_homology(case, 3)
    catalog_hc = {
        "HCbar_0": catalog_hh0bar,
        "HCbar_1": catalog_hh0bar + catalog_hh3 - _s1(),
        "HCbar_2": catalog_hh3,
    }
    for name in ("HCbar_0", "HCbar_1", "HCbar_2"):
        predicted = catalog_hc[name].expand(lo, hi)
        for deg in range(lo, hi + 1):
            report.add_comparison(
                name, deg, _int_coeff(derived[name], deg), _int_coeff(predicted, deg)
            )
    for i in (1, 2):
        series = derived["HH_%d" % i]
        for deg in range(lo, hi + 1):
            report.add_comparison(
                "goodwillie:HH_%d" % i, deg, table.total(i, deg), _int_coeff(series, deg)
            )
    chi = igusa_chi(hi)
    for deg in range(lo, hi + 1):
        computed = (
            derived["HCbar_0"].coeff(deg)
            - derived["HCbar_1"].coeff(deg)
            + derived["HCbar_2"].coeff(deg)
        )
        assert computed.denominator == 1
        assert chi.coeff(deg).denominator == 1
        report.add_comparison("chi", deg, int(computed), int(chi.coeff(deg)))
    report.add_note("HCbar_i = 0 for i >= 3")
    report.add_note(
        "chi is computed independently as sum_l (totient(l)/l) log A(t^l)"
        " from the algebra's Hilbert series alone"
    )
    return report


def verify_cy_duality(case, window=(-6, 8), jobs=1):
    """dim HH^i at degree s == dim HH_(3-i) at degree s + 4, both computed.

    Only meaningful for Calabi-Yau cases (beta = -1).
    """
    if not case.is_cy():
        raise UnsupportedCaseError("duality check needs beta = -1")
    lo, hi = window
    report = VerificationReport(case, window)
    cotable = compute_hh_dims(case, window, COHOMOLOGY, jobs)
    hotable = compute_hh_dims(case, (max(lo + 4, 0), hi + 4), HOMOLOGY, jobs)
    report.tables.append(cotable)
    for i in range(4):
        for s in range(lo, hi + 1):
            report.add_comparison(
                "duality:HH^%d" % i, s, cotable.total(i, s), hotable.total(3 - i, s + 4)
            )
    report.add_note("duality: HH^i(s) vs HH_(3-i)(s + 4), both sides computed from ranks")
    return report
