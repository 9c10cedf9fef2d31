"""Kernel bundles on P^n presented by matrices of linear forms.

A surjective map alpha: O(d)^{b1} -> O(d+1)^{b2} of sheaves on P^n has a
locally free kernel F of rank b1 - b2 sitting inside the exceptional pair
(O(d), O(d+1)).  Two explicit constructions are provided:

* the staircase matrix, (d+1) x (n+d+1), row i = (0^i, x_0..x_n, 0^(d-i)),
  whose kernel has rank n (for d = 0 this is the Euler presentation of
  the twisted cotangent bundle Omega(1)),
* the contraction of Sym^(d+1) of the Euler sequence with the Euler
  vector field, C(n+d,n) x C(n+d+1,n), whose kernel has rank C(n+d,n-1).

Both satisfy the balance (d+1) b1 = (n+d+1) b2, making the section-level
map H^0(alpha) square; its bijectivity plus the vanishing of the twists
H^*(F(-d-k)) for k = 2..n are exactly the conditions for F(d+2) to be an
Ulrich bundle on P^2 (w.r.t. O(d+2)), and feed the rank-n construction on
P(O(1) + O^d) over P^2.

All ranks are certified over the rationals by fraction-free elimination;
surjectivity of the sheaf map is certified exactly where possible (see
``_certify_surjective``) and honestly marked heuristic otherwise.
"""

from __future__ import annotations

import itertools
import random as _random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

from . import exactlinalg
from .cohomology import CohomologyTable
from .errors import InternalInconsistency, NotSurjective, UnsupportedVariety
from .picard import DivisorClass, ProjBundle, ProjSpace, SplitBundle


# --------------------------------------------------------------------------
# matrices of linear forms
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearFormMatrix:
    """A b2 x b1 matrix of linear forms in x_0..x_n over exact rationals,
    presenting a map O(d)^{b1} -> O(d+1)^{b2}.

    Each entry is a coefficient tuple of length n+1.
    """

    n: int
    d: int
    entries: tuple  # rows (b2 of them), each a tuple of b1 coefficient tuples

    def __post_init__(self):
        if self.n < 1 or self.d < 0:
            raise UnsupportedVariety(f"need n >= 1, d >= 0; got ({self.n}, {self.d})")
        rows = tuple(tuple(tuple(Fraction(c) for c in entry) for entry in row)
                     for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise UnsupportedVariety("empty matrix")
        if any(len(entry) != self.n + 1 for row in rows for entry in row):
            raise UnsupportedVariety("entries must have n+1 coefficients")
        if self.b1 <= self.b2:
            raise UnsupportedVariety("need more columns than rows (b1 > b2)")

    @property
    def b1(self) -> int:
        return len(self.entries[0])

    @property
    def b2(self) -> int:
        return len(self.entries)

    @property
    def kernel_rank(self) -> int:
        return self.b1 - self.b2

    def transposed_entries(self) -> tuple:
        return tuple(tuple(self.entries[i][c] for i in range(self.b2))
                     for c in range(self.b1))

    def to_json(self) -> list:
        return [[[str(c) for c in entry] for entry in row] for row in self.entries]


def _unit(n: int, v: int) -> tuple:
    return tuple(1 if i == v else 0 for i in range(n + 1))


def _zero_form(n: int) -> tuple:
    return (0,) * (n + 1)


def staircase_matrix(n: int, d: int) -> LinearFormMatrix:
    """Row i of the (d+1) x (n+d+1) matrix is x_0..x_n shifted i slots."""
    rows = []
    for i in range(d + 1):
        row = []
        for j in range(n + d + 1):
            row.append(_unit(n, j - i) if 0 <= j - i <= n else _zero_form(n))
        rows.append(tuple(row))
    return LinearFormMatrix(n, d, tuple(rows))


@lru_cache(maxsize=None)
def monomial_exponents(n: int, q: int) -> tuple:
    """Exponent vectors of the degree-q monomials in x_0..x_n."""
    if q < 0:
        return ()
    out = []

    def rec(i, left, cur):
        if i == n:
            out.append(tuple(cur) + (left,))
            return
        for a in range(left, -1, -1):
            rec(i + 1, left - a, cur + [a])

    rec(0, q, [])
    return tuple(out)


def sym_euler_matrix(n: int, d: int) -> LinearFormMatrix:
    """Contraction with the Euler vector field on degree-(d+1) monomials.

    Rows are indexed by degree-d exponent vectors beta, columns by
    degree-(d+1) vectors alpha; the (beta, alpha) entry is alpha_v * x_v
    when alpha = beta + e_v.  The kernel is the (d+1)-st symmetric power
    of the cotangent bundle twisted by 2d+1, of rank C(n+d, n-1).
    """
    rows_idx = monomial_exponents(n, d)
    cols_idx = monomial_exponents(n, d + 1)
    rows = []
    for beta in rows_idx:
        row = []
        for alpha in cols_idx:
            diff = [a - b for a, b in zip(alpha, beta)]
            if min(diff) >= 0 and sum(diff) == 1:
                v = diff.index(1)
                row.append(tuple(alpha[v] if i == v else 0 for i in range(n + 1)))
            else:
                row.append(_zero_form(n))
        rows.append(tuple(row))
    m = LinearFormMatrix(n, d, tuple(rows))
    assert m.b1 == comb(n + d + 1, n) and m.b2 == comb(n + d, n)
    assert m.kernel_rank == comb(n + d, n - 1)
    return m


def random_matrix(n: int, d: int, seed: int) -> LinearFormMatrix:
    """Seeded random matrix with the staircase dimensions (d+1) x (n+d+1)."""
    rng = _random.Random(seed)
    rows = tuple(
        tuple(tuple(rng.randint(-5, 5) for _ in range(n + 1))
              for _ in range(n + d + 1))
        for _ in range(d + 1))
    return LinearFormMatrix(n, d, rows)


# --------------------------------------------------------------------------
# surjectivity certificates
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SurjectivityCertificate:
    method: str
    exact: bool
    detail: str

    def to_json(self) -> dict:
        return {"method": self.method, "exact": self.exact, "detail": self.detail}


def _substitute_low_zero(entry: tuple, j: int) -> tuple:
    return tuple(0 if v < j else c for v, c in enumerate(entry))


def _is_pure_in(entry: tuple, j: int):
    """Return the x_j coefficient if the form is c * x_j, else None."""
    if any(c for v, c in enumerate(entry) if v != j):
        return None
    return entry[j] or None


def _min_coordinate_certificate(m: LinearFormMatrix, column_rule) -> bool:
    """Exhaustive triangularity check proving surjectivity at every point.

    For each variable index j, ``column_rule(j)`` selects b2 columns and a
    row order.  After substituting x_0 = .. = x_{j-1} = 0 the selected
    square submatrix must be upper triangular with diagonal entries that
    are pure nonzero multiples of x_j; its determinant is then a nonzero
    multiple of x_j^{b2}, which cannot vanish at any point whose least
    nonzero coordinate is j.  The charts over all j cover P^n.
    """
    for j in range(m.n + 1):
        cols, row_order = column_rule(j)
        if cols is None:
            return False
        for pos_r, i in enumerate(row_order):
            for pos_c, c in enumerate(cols):
                entry = _substitute_low_zero(m.entries[i][c], j)
                if pos_r == pos_c:
                    if _is_pure_in(entry, j) is None:
                        return False
                elif pos_r > pos_c:
                    if any(entry):
                        return False
    return True


def _staircase_rule(m: LinearFormMatrix):
    def rule(j):
        cols = list(range(j, j + m.b2))
        if cols[-1] >= m.b1:
            return None, None
        return cols, list(range(m.b2))

    return rule


def _sym_euler_rule(m: LinearFormMatrix):
    rows_idx = monomial_exponents(m.n, m.d)
    cols_idx = {alpha: i for i, alpha in enumerate(monomial_exponents(m.n, m.d + 1))}

    def rule(j):
        order = sorted(range(len(rows_idx)),
                       key=lambda i: (-rows_idx[i][j], rows_idx[i]))
        cols = []
        for i in order:
            beta = rows_idx[i]
            alpha = tuple(b + (1 if v == j else 0) for v, b in enumerate(beta))
            cols.append(cols_idx[alpha])
        return cols, order

    return rule


def _binary_forms_common_root(forms, degree: int) -> bool:
    """True iff homogeneous binary forms of the given degree share a
    projective root.  Forms are coefficient lists in t = v1/v0, low power
    first; identically zero forms vanish everywhere and impose nothing."""
    trimmed = [exactlinalg.poly_trim([Fraction(c) for c in f]) for f in forms]
    nonzero = [f for f in trimmed if f]
    if not nonzero:
        return True
    if all(len(f) < degree + 1 for f in nonzero):
        return True  # every form misses its top coefficient: root at [0:1]
    g = nonzero[0]
    for f in nonzero[1:]:
        g = exactlinalg.poly_gcd(g, f)
        if len(g) == 1:
            return False
    return len(g) > 1


def _certify_p1(m: LinearFormMatrix) -> SurjectivityCertificate | None:
    """On P^1 the maximal minors are binary forms; gcd decides exactly."""
    if m.n != 1:
        return None
    minors = []
    for combo in itertools.combinations(range(m.b1), m.b2):
        entries = [[(m.entries[i][c][0], m.entries[i][c][1]) for c in combo]
                   for i in range(m.b2)]
        minors.append(exactlinalg.binary_det(entries))
    if _binary_forms_common_root(minors, m.b2):
        raise NotSurjective("maximal minors share a zero on P^1")
    return SurjectivityCertificate("binary-minor-gcd", True,
                                   "maximal minors have no common root on P^1")


def _certify_row_span(m: LinearFormMatrix) -> SurjectivityCertificate | None:
    """For b2 = 1 the entries are linear forms; surjective iff they span."""
    if m.b2 != 1:
        return None
    coeffs = [list(entry) for entry in m.entries[0]]
    if exactlinalg.rank(coeffs) == m.n + 1:
        return SurjectivityCertificate(
            "linear-span", True, "entries span all linear forms")
    raise NotSurjective("row of linear forms has a common zero")


def _certify_cokernel_line(m: LinearFormMatrix) -> SurjectivityCertificate | None:
    """For b2 = 2: v^T alpha drops rank for some [v0:v1] iff the (n+1)-minors
    of the v-parametrised coefficient matrix share a root; exact via gcd."""
    if m.b2 != 2:
        return None
    if m.b1 < m.n + 1:
        raise NotSurjective("too few columns to be pointwise surjective")
    # row c of L(v): coefficient vector of v0*M[0][c] + v1*M[1][c]
    lv = [[(m.entries[0][c][var], m.entries[1][c][var])
           for var in range(m.n + 1)] for c in range(m.b1)]
    minors = [exactlinalg.binary_det([lv[r] for r in combo])
              for combo in itertools.combinations(range(m.b1), m.n + 1)]
    if _binary_forms_common_root(minors, m.n + 1):
        raise NotSurjective("some corank-one functional kills a fibre")
    return SurjectivityCertificate(
        "binary-form-resultant", True,
        "no functional v with v^T * alpha singular exists")


def _certify_sampling(m: LinearFormMatrix, rng_seed: int = 7) -> SurjectivityCertificate:
    """Heuristic certificate: full rank at all sign points, coordinate
    points and a few seeded rational points, plus a generic plane
    restriction of the maximal minors with constant gcd (which exactly
    rules out codimension-one degeneracy)."""
    points = [pt for pt in itertools.product((1, -1), repeat=m.n + 1)]
    points += [_unit(m.n, v) for v in range(m.n + 1)]
    rng = _random.Random(rng_seed)
    points += [tuple(rng.randint(-17, 17) for _ in range(m.n + 1))
               for _ in range(8)]
    for pt in points:
        scalar = [[sum(c * x for c, x in zip(entry, pt)) for entry in row]
                  for row in m.entries]
        if exactlinalg.rank(scalar) < m.b2:
            raise NotSurjective(f"matrix drops rank at point {pt}")
    # restrict to the pencil x = s*p + t*q for seeded p, q; minors become
    # binary forms whose constant gcd certifies no codim-1 common factor
    p = tuple(rng.randint(-9, 9) for _ in range(m.n + 1))
    q = tuple(rng.randint(-9, 9) for _ in range(m.n + 1))
    restricted = [[(sum(c * x for c, x in zip(entry, p)),
                    sum(c * x for c, x in zip(entry, q)))
                   for entry in row] for row in m.entries]
    minors = [exactlinalg.binary_det([[restricted[i][c] for c in combo]
                                      for i in range(m.b2)])
              for combo in itertools.combinations(range(m.b1), m.b2)]
    line_ok = not _binary_forms_common_root(minors, m.b2)
    detail = ("full rank at sampled points; "
              + ("pencil-restricted minor gcd constant"
                 if line_ok else "pencil restriction inconclusive"))
    return SurjectivityCertificate("point-sampling", False, detail)


def _certify_surjective(m: LinearFormMatrix, kind: str) -> SurjectivityCertificate:
    if kind == "staircase":
        if not _min_coordinate_certificate(m, _staircase_rule(m)):
            raise InternalInconsistency("staircase triangularity check failed")
        return SurjectivityCertificate(
            "min-coordinate-triangular", True,
            "each chart has a triangular minor equal to x_j^b2")
    if kind == "sym-euler":
        if not _min_coordinate_certificate(m, _sym_euler_rule(m)):
            raise InternalInconsistency("contraction triangularity check failed")
        return SurjectivityCertificate(
            "min-coordinate-triangular", True,
            "each chart has a triangular minor with diagonal (beta_j+1) x_j")
    for attempt in (_certify_row_span, _certify_p1, _certify_cokernel_line):
        cert = attempt(m)
        if cert is not None:
            return cert
    return _certify_sampling(m)


# --------------------------------------------------------------------------
# presentations and their cohomology
# --------------------------------------------------------------------------

@dataclass
class KernelBundlePresentation:
    """A certified-surjective matrix plus cached exact rank certificates."""

    matrix: LinearFormMatrix
    kind: str
    seed: int | None = None
    surjectivity: SurjectivityCertificate = None
    h0_certificates: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.surjectivity is None:
            self.surjectivity = _certify_surjective(self.matrix, self.kind)

    @property
    def rank(self) -> int:
        return self.matrix.kernel_rank

    def __str__(self) -> str:
        tag = f",seed={self.seed}" if self.seed is not None else ""
        return (f"ker({self.kind},n={self.matrix.n},d={self.matrix.d}{tag})")

    def to_json(self) -> dict:
        return {
            "n": self.matrix.n,
            "d": self.matrix.d,
            "b1": self.matrix.b1,
            "b2": self.matrix.b2,
            "rank": self.rank,
            "kind": self.kind,
            "seed": self.seed,
            "surjectivity": self.surjectivity.to_json(),
            "h0_certificates": {str(t): list(v)
                                for t, v in sorted(self.h0_certificates.items())},
            "matrix": self.matrix.to_json(),
        }


@dataclass(frozen=True)
class TwistedKernel:
    """A kernel bundle twisted by O(shift); usable as an Ulrich candidate."""

    presentation: KernelBundlePresentation
    shift: int = 0

    def lives_on(self, v) -> bool:
        return isinstance(v, ProjSpace) and v.n == self.presentation.matrix.n

    def twist(self, t: int) -> "TwistedKernel":
        return TwistedKernel(self.presentation, self.shift + t)

    def __str__(self) -> str:
        if self.shift:
            return f"{self.presentation}({self.shift:+d})"
        return str(self.presentation)


def as_twisted_kernel(obj) -> TwistedKernel:
    if isinstance(obj, TwistedKernel):
        return obj
    if isinstance(obj, KernelBundlePresentation):
        return TwistedKernel(obj, 0)
    raise UnsupportedVariety(f"not a kernel-bundle candidate: {obj!r}")


def staircase_presentation(n: int, d: int) -> KernelBundlePresentation:
    return KernelBundlePresentation(staircase_matrix(n, d), "staircase")


def sym_euler_presentation(n: int, d: int) -> KernelBundlePresentation:
    return KernelBundlePresentation(sym_euler_matrix(n, d), "sym-euler")


def random_presentation(n: int, d: int, seed: int) -> KernelBundlePresentation:
    return KernelBundlePresentation(random_matrix(n, d, seed), "random", seed=seed)


def _section_dim(n: int, q: int) -> int:
    return comb(n + q, n) if q >= 0 else 0


def _multiplication_rank(entries: tuple, n: int, src_deg: int) -> int:
    """Exact rank of the section-level map induced in degree src_deg by a
    matrix of linear forms (rows = target copies, columns = source)."""
    mons_src = monomial_exponents(n, src_deg)
    mons_tgt = monomial_exponents(n, src_deg + 1)
    if not mons_src or not mons_tgt:
        return 0
    nrows_blocks = len(entries)
    ncols_blocks = len(entries[0])
    tgt_index = {mono: i for i, mono in enumerate(mons_tgt)}
    denom = 1
    for row in entries:
        for entry in row:
            for c in entry:
                if isinstance(c, Fraction):
                    denom = denom * c.denominator // gcd(denom, c.denominator)
    rows = [[0] * (ncols_blocks * len(mons_src))
            for _ in range(nrows_blocks * len(mons_tgt))]
    for cblock in range(ncols_blocks):
        for mi, mono in enumerate(mons_src):
            col = cblock * len(mons_src) + mi
            for rblock in range(nrows_blocks):
                entry = entries[rblock][cblock]
                for var, coeff in enumerate(entry):
                    if coeff:
                        shifted = list(mono)
                        shifted[var] += 1
                        row = rblock * len(mons_tgt) + tgt_index[tuple(shifted)]
                        rows[row][col] += int(coeff * denom)
    return exactlinalg.rank(rows)


def h0_multiplication_rank(m: LinearFormMatrix, t: int):
    """(dim source, dim target, exact rank) of H^0(alpha(t)) in monomial bases."""
    src = m.b1 * _section_dim(m.n, m.d + t)
    tgt = m.b2 * _section_dim(m.n, m.d + 1 + t)
    if src == 0 or tgt == 0:
        return (src, tgt, 0)
    rk = _multiplication_rank(m.entries, m.n, m.d + t)
    return (src, tgt, rk)


def kernel_cohomology(p: KernelBundlePresentation, t: int) -> CohomologyTable:
    """Table of H^*(F(t)) for the kernel F, assembled from the long exact
    sequence of 0 -> F(t) -> O(d+t)^b1 -> O(d+1+t)^b2 -> 0.

    The middle terms only have cohomology in degrees 0 and n, so
    h^0 = ker H^0(alpha), h^1 picks up coker H^0(alpha), degrees
    2..n-1 vanish, and h^n is the kernel of the top-level map, computed
    as an exact rank of the transposed multiplication between the
    Serre-dual section spaces.  The top-level map is checked surjective
    (H^{n+1} of a sheaf on P^n vanishes); failure would be an engine bug.
    """
    if p.surjectivity is None:  # pragma: no cover - constructor guarantees it
        raise NotSurjective("presentation lacks a surjectivity certificate")
    m = p.matrix
    n, d = m.n, m.d
    key = t
    cached = p.h0_certificates.get(key)
    if cached is None:
        cached = h0_multiplication_rank(m, t)
        p.h0_certificates[key] = cached
    s0, t0, r0 = cached
    # Serre-dual side: the top-level map dualises to multiplication by the
    # transposed matrix from degree e to e+1
    sn = m.b1 * _section_dim(n, -(d + t) - n - 1)
    tn = m.b2 * _section_dim(n, -(d + 1 + t) - n - 1)
    e = -(d + 1 + t) - n - 1
    rn = _multiplication_rank(m.transposed_entries(), n, e) if tn else 0
    if tn - rn != 0:
        raise InternalInconsistency(
            f"top-level section map not surjective at twist {t}: "
            f"coker dimension {tn - rn}")
    h = [0] * (n + 1)
    h[0] = s0 - r0
    if n == 1:
        h[1] = (t0 - r0) + (sn - rn)
    else:
        h[1] += t0 - r0
        h[n] += sn - rn
    return CohomologyTable.make(h)


# --------------------------------------------------------------------------
# the two-term orthogonality conditions and the rank-n builder
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaReport:
    """Vanishing checks placing the kernel in <O(d), O(d+1)> with H^* = 0."""

    passed: bool
    tables: tuple  # (label, CohomologyTable) pairs

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "tables": [{"twist": lab, "h": list(tab.h), "ok": tab.is_zero()}
                           for lab, tab in self.tables]}


def lemma_conditions_check(p: KernelBundlePresentation) -> LemmaReport:
    """H^*(F) = 0 together with H^*(F(-d-k)) = 0 for k = 2..n, the
    right-orthogonality to O(d+2)..O(d+n) inside the exceptional sequence."""
    n, d = p.matrix.n, p.matrix.d
    tables = [("F", kernel_cohomology(p, 0))]
    for k in range(2, n + 1):
        tables.append((f"F({-d - k})", kernel_cohomology(p, -d - k)))
    passed = all(tab.is_zero() for _, tab in tables)
    return LemmaReport(passed, tuple(tables))


@dataclass(frozen=True)
class Prop61Result:
    """Outcome of the rank-n Ulrich construction on P(O(1) + O^d) over P^n."""

    report: "UlrichReport"  # noqa: F821 - imported lazily from ulrich
    presentation: KernelBundlePresentation | None
    condition_twists: tuple

    def to_json(self) -> dict:
        out = {"report": self.report.to_json(),
               "condition_twists": list(self.condition_twists)}
        out["presentation"] = (self.presentation.to_json()
                               if self.presentation is not None else None)
        return out


def _condition_twists(n: int, d: int) -> tuple:
    return tuple(sorted({d + 2 + k + j
                         for k in range(0, n - 1) for j in range(0, k + 1)}))


def _pn_bundle(n: int, d: int):
    base = ProjSpace(n)
    one = DivisorClass(base, (1,))
    zero = DivisorClass(base, (0,))
    e = SplitBundle(base, (one,) + (zero,) * d)
    return base, e, one


def _line_chi_pn(n: int, q: int) -> int:
    total = 1
    for j in range(1, n + 1):
        total *= q + j
    return total // factorial(n)


def _kernel_table_or_chi(p: KernelBundlePresentation, t: int):
    """(is_zero, evidence) with a cheap chi rejection before exact ranks."""
    m = p.matrix
    chi = (m.b1 * _line_chi_pn(m.n, m.d + t)
           - m.b2 * _line_chi_pn(m.n, m.d + 1 + t))
    if chi != 0:
        return False, f"chi = {chi}"
    table = kernel_cohomology(p, t)
    return table.is_zero(), f"h = {table.h}"


def prop61_builder(n: int, d: int, line_box: int = 8,
                   presentation_bound: int = 4) -> Prop61Result:
    """Search for rank-n Ulrich bundles pullback(F)(h + H) on P(O(1) + O^d).

    The exact obstruction set is H^*(F) = 0 together with
    H^*(F(-(d+2+k+j))) = 0 for 0 <= j <= k <= n-2.  For n = 2 the
    staircase kernel with parameter d satisfies it and the direct check
    on P(E) confirms the Ulrich verdict.  For n >= 3 the condition set is
    scanned over line bundles and staircase / symmetric-power kernels;
    absence of a hit is reported with a discrepancy note, not an error.
    """
    from .ulrich import UlrichReport, direct_ulrich_check

    if n < 2 or d < 1:
        raise UnsupportedVariety(f"builder needs n >= 2, d >= 1; got ({n}, {d})")
    base, e, one = _pn_bundle(n, d)
    pb = ProjBundle(base, e)
    twists = _condition_twists(n, d)
    if n == 2:
        pres = staircase_presentation(2, d)
        lemma = lemma_conditions_check(pres)
        if not lemma.passed:
            raise InternalInconsistency("staircase kernel fails its own "
                                        "orthogonality conditions")
        report = direct_ulrich_check(pb, TwistedKernel(pres, 0), one)
        report = UlrichReport(
            candidate=report.candidate,
            polarisation=report.polarisation,
            verdict=report.verdict,
            checks=report.checks,
            method=report.method,
            generic=report.generic,
            notes=report.notes + (
                f"kernel rank {pres.rank} from staircase parameter {d}",
                f"conditions H(F)=0 and H(F(-s))=0 for s in {list(twists)} "
                "verified from the presentation",
            ),
        )
        return Prop61Result(report, pres, twists)

    # n >= 3: exhaustive scan of the stated search class
    dead_band = set(range(-n, 0))
    line_hits = [deg for deg in range(-line_box, line_box + 1)
                 if deg in dead_band
                 and all(deg - s in dead_band for s in twists)]
    scanned = []
    pres_hits = []
    for maker, kind in ((staircase_presentation, "staircase"),
                        (sym_euler_presentation, "sym-euler")):
        for dp in range(0, presentation_bound + 1):
            pres = maker(n, dp)
            ok = True
            evidence = []
            # cheap twists first: sort by total section dimension involved
            order = sorted([0] + [-s for s in twists],
                           key=lambda t: (_section_dim(n, dp + t)
                                          + _section_dim(n, dp + 1 + t)))
            for t in order:
                good, why = _kernel_table_or_chi(pres, t)
                evidence.append(f"t={t}: {why}")
                if not good:
                    ok = False
                    break
            scanned.append(f"{kind}(n={n},d={dp}): "
                           + ("hit" if ok else evidence[-1]))
            if ok:
                pres_hits.append(pres)
    found = bool(line_hits or pres_hits)
    notes = (
        f"exact condition set: H(F)=0 and H(F(-s))=0 for s in {list(twists)}",
        f"line bundles O(e), |e| <= {line_box}: hits {line_hits}",
        f"presentations scanned with parameter <= {presentation_bound}: "
        f"hits {[str(p) for p in pres_hits]}",
        "discrepancy: a rank-n candidate inside <O(n), O(n+1)> would need "
        "D^b(P^n) = <O(n), O(n+1), ..., O(2n+1)>, a sequence of n+2 "
        "exceptional line bundles where only n+1 fit; the computed "
        "condition set above is what the twist family actually forces, "
        "and no object in the searched class satisfies it",
    )
    report = UlrichReport(
        candidate="none",
        polarisation="[1]",
        verdict=found,
        checks=(),
        method="criterion",
        generic=False,
        notes=notes + tuple(scanned),
    )
    pres_out = pres_hits[0] if pres_hits else None
    return Prop61Result(report, pres_out, twists)
