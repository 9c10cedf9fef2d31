"""Varieties, Picard-lattice arithmetic and split-bundle algebra.

Supported varieties and their divisor coordinates:

=============  =============================  =========================
variety        Picard basis                   coordinates
=============  =============================  =========================
P^n            hyperplane h                   (d)
generic curve  a point                        (degree)
F_r            fibre f, section C+ (C+^2=r)   (a, b) meaning a*f + b*C+
P^1 x P^1      the two rulings f, f'          (a, b); same as F_0
P(E) -> X      base classes, then H           base coords + (k)
=============  =============================  =========================

The section ``C-`` with square ``-r`` satisfies ``C+ = r*f + C-``; the
minus basis is accepted on input only (``parse_divisor(minus_basis=True)``)
and converted immediately, internal storage is always ``(f, C+)``.

Everything here is an immutable value; all operations are pure functions.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb
from typing import Union

from .errors import NotAmple, ParseError, UnsupportedPolarisation, UnsupportedVariety


# --------------------------------------------------------------------------
# variety descriptors
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjSpace:
    """Projective space P^n, Picard rank one."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise UnsupportedVariety(f"P^n needs n >= 1, got {self.n}")

    @property
    def dim(self) -> int:
        return self.n

    @property
    def picard_rank(self) -> int:
        return 1

    @property
    def name(self) -> str:
        return f"P{self.n}"


@dataclass(frozen=True)
class GenericCurve:
    """A general smooth projective curve of genus g.

    Cohomology answers on this variety describe a *general* line bundle of
    the given degree and are flagged as such downstream.
    """

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise UnsupportedVariety(f"curve genus must be >= 0, got {self.genus}")

    @property
    def dim(self) -> int:
        return 1

    @property
    def picard_rank(self) -> int:
        return 1

    @property
    def name(self) -> str:
        return f"C{self.genus}"


@dataclass(frozen=True)
class Hirzebruch:
    """Hirzebruch surface F_r = P(O + O(r)) over P^1; F_0 is P^1 x P^1.

    Negative r is rejected, normalise via F_r = F_{-r} before constructing.
    """

    r: int

    def __post_init__(self):
        if self.r < 0:
            raise UnsupportedVariety(
                f"Hirzebruch parameter must be >= 0 (F_r = F_-r), got {self.r}")

    @property
    def dim(self) -> int:
        return 2

    @property
    def picard_rank(self) -> int:
        return 2

    @property
    def name(self) -> str:
        return "P1xP1" if self.r == 0 else f"F{self.r}"


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinate vector in the fixed Picard basis of a variety."""

    variety: "Variety"
    coords: tuple

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.variety.picard_rank:
            raise UnsupportedVariety(
                f"{self.variety.name} divisors have {self.variety.picard_rank} "
                f"coordinates, got {coords}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_variety(other)
        return DivisorClass(self.variety,
                            tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_variety(other)
        return DivisorClass(self.variety,
                            tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.variety, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(self.variety, tuple(k * a for a in self.coords))

    def _same_variety(self, other):
        if self.variety != other.variety:
            raise UnsupportedVariety(
                f"divisor arithmetic across varieties: "
                f"{self.variety.name} vs {other.variety.name}")

    def __str__(self) -> str:
        return render_divisor(self)


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles, kept as an ordered tuple of classes."""

    variety: "Variety"
    summands: tuple

    def __post_init__(self):
        if not self.summands:
            raise UnsupportedVariety("split bundle needs at least one summand")
        summands = tuple(self.summands)
        object.__setattr__(self, "summands", summands)
        for s in summands:
            if not isinstance(s, DivisorClass) or s.variety != self.variety:
                raise UnsupportedVariety("all summands must live on the same variety")

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def c1(self) -> DivisorClass:
        total = zero_divisor(self.variety)
        for s in self.summands:
            total = total + s
        return total

    def dual(self) -> "SplitBundle":
        return SplitBundle(self.variety, tuple(-s for s in self.summands))

    def twist(self, d: DivisorClass) -> "SplitBundle":
        return SplitBundle(self.variety, tuple(s + d for s in self.summands))

    def tensor(self, other: "SplitBundle") -> "SplitBundle":
        if other.variety != self.variety:
            raise UnsupportedVariety("tensor across varieties")
        return SplitBundle(self.variety, tuple(
            a + b for a in self.summands for b in other.summands))

    def multiset(self) -> tuple:
        """Canonical (sorted) tuple of coordinate tuples."""
        return tuple(sorted(s.coords for s in self.summands))

    def same_summands(self, other: "SplitBundle") -> bool:
        return self.variety == other.variety and self.multiset() == other.multiset()

    def __str__(self) -> str:
        return render_bundle(self)


@dataclass(frozen=True)
class ProjBundle:
    """Projective bundle P(E) -> X for a split bundle E on a supported base.

    Nested projective bundles are rejected; express F_r directly as a
    Hirzebruch surface instead of P(O + O(r)) when it is the base.
    """

    base: "Variety"
    summands: SplitBundle

    def __post_init__(self):
        if isinstance(self.base, ProjBundle):
            raise UnsupportedVariety("projective bundles over projective bundles "
                                     "are not supported")
        if self.summands.variety != self.base:
            raise UnsupportedVariety("bundle summands must live on the base")
        if self.summands.rank < 2:
            raise UnsupportedVariety("P(E) needs rank(E) >= 2")

    @property
    def rank(self) -> int:
        return self.summands.rank

    @property
    def dim(self) -> int:
        return self.base.dim + self.rank - 1

    @property
    def picard_rank(self) -> int:
        return self.base.picard_rank + 1

    @property
    def name(self) -> str:
        return render_variety(self)

    def pullback(self, d: DivisorClass) -> DivisorClass:
        if d.variety != self.base:
            raise UnsupportedVariety("pullback expects a base divisor")
        return DivisorClass(self, d.coords + (0,))

    def hyperplane(self) -> DivisorClass:
        return DivisorClass(self, (0,) * self.base.picard_rank + (1,))


Variety = Union[ProjSpace, GenericCurve, Hirzebruch, ProjBundle]

P1xP1 = Hirzebruch(0)


def zero_divisor(v: Variety) -> DivisorClass:
    return DivisorClass(v, (0,) * v.picard_rank)


def line_bundle(v: Variety, coords) -> SplitBundle:
    return SplitBundle(v, (DivisorClass(v, tuple(coords)),))


# --------------------------------------------------------------------------
# canonical classes and symmetric powers
# --------------------------------------------------------------------------

def canonical_class(v: Variety) -> DivisorClass:
    """K_V in the fixed basis.

    K_{P^n} = -(n+1)h, K_{F_r} = (r-2)f - 2C+, a genus-g curve has
    deg K = 2g-2, and K_{P(E)} = pullback(K_X + c1(E)) - rank(E)*H.
    """
    if isinstance(v, ProjSpace):
        return DivisorClass(v, (-v.n - 1,))
    if isinstance(v, GenericCurve):
        return DivisorClass(v, (2 * v.genus - 2,))
    if isinstance(v, Hirzebruch):
        return DivisorClass(v, (v.r - 2, -2))
    if isinstance(v, ProjBundle):
        down = canonical_class(v.base) + v.summands.c1
        return DivisorClass(v, down.coords + (-v.rank,))
    raise UnsupportedVariety(f"no canonical class for {v!r}")


def sym_power(e: SplitBundle, k: int) -> SplitBundle:
    """k-th symmetric power of a split bundle as a multiset of sums.

    Sym^k(+O(D_i)) = +O(D_{i_1} + ... + D_{i_k}) over weakly increasing
    index tuples, so the result has C(rank+k-1, k) summands.
    """
    if k < 0:
        raise ValueError(f"symmetric power needs k >= 0, got {k}")
    v = e.variety
    if k == 0:
        return SplitBundle(v, (zero_divisor(v),))
    parts = []
    for combo in itertools.combinations_with_replacement(e.summands, k):
        total = zero_divisor(v)
        for s in combo:
            total = total + s
        parts.append(total)
    bundle = SplitBundle(v, tuple(parts))
    assert bundle.rank == comb(e.rank + k - 1, k)
    return bundle


# --------------------------------------------------------------------------
# ampleness
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AmpleVerdict:
    """Boolean verdict plus a flag for sufficiency-only criteria.

    On generic curves only the degree >= 2g+1 bound is available; a True
    verdict is then exact but a False one merely means "not established",
    and ``sufficient_only`` records that caveat.
    """

    very_ample: bool
    sufficient_only: bool = False

    def __bool__(self) -> bool:
        return self.very_ample


def is_ample(v: Variety, d: DivisorClass) -> bool:
    """Exact ampleness test.

    On the smooth toric targets ample and very ample coincide; on a curve
    a divisor is ample iff its degree is positive.  Projective bundles are
    only tested for classes of the form pullback(A) + H.
    """
    if d.variety != v:
        raise UnsupportedVariety("divisor not on the given variety")
    if isinstance(v, ProjSpace):
        return d.coords[0] >= 1
    if isinstance(v, GenericCurve):
        return d.coords[0] >= 1
    if isinstance(v, Hirzebruch):
        return d.coords[0] >= 1 and d.coords[1] >= 1
    if isinstance(v, ProjBundle):
        base_part, h_coeff = _split_pb_divisor(v, d)
        return all(is_ample(v.base, s + base_part) for s in v.summands.summands)
    raise UnsupportedVariety(f"no ampleness test for {v!r}")


def is_very_ample(v: Variety, d: DivisorClass) -> AmpleVerdict:
    """Very-ampleness test; see AmpleVerdict for the generic-curve caveat.

    On P(E) with D = pullback(A) + H the test reduces to every summand
    twist D_i + A being very ample on the base, which is exact on toric
    bases and sufficiency-flagged over generic curves.
    """
    if d.variety != v:
        raise UnsupportedVariety("divisor not on the given variety")
    if isinstance(v, ProjSpace):
        return AmpleVerdict(d.coords[0] >= 1)
    if isinstance(v, Hirzebruch):
        return AmpleVerdict(d.coords[0] >= 1 and d.coords[1] >= 1)
    if isinstance(v, GenericCurve):
        return AmpleVerdict(d.coords[0] >= 2 * v.genus + 1, sufficient_only=True)
    if isinstance(v, ProjBundle):
        base_part, _ = _split_pb_divisor(v, d)
        verdicts = [is_very_ample(v.base, s + base_part)
                    for s in v.summands.summands]
        return AmpleVerdict(all(bool(x) for x in verdicts),
                            sufficient_only=any(x.sufficient_only for x in verdicts))
    raise UnsupportedVariety(f"no very-ampleness test for {v!r}")


def _split_pb_divisor(v: ProjBundle, d: DivisorClass):
    h_coeff = d.coords[-1]
    if h_coeff != 1:
        raise UnsupportedPolarisation(
            f"only polarisations pullback(A) + H are supported on P(E); "
            f"got H-coefficient {h_coeff}")
    return DivisorClass(v.base, d.coords[:-1]), h_coeff


def very_ample_threshold(v: ProjBundle, direction: DivisorClass) -> int:
    """Least t >= 1 such that pullback(t * direction) + H is very ample."""
    if not isinstance(v, ProjBundle):
        raise UnsupportedVariety("threshold is defined for projective bundles")
    if direction.variety != v.base:
        raise UnsupportedVariety("direction must be a base divisor")
    if not is_ample(v.base, direction):
        raise NotAmple(f"direction {direction} is not ample on {v.base.name}")
    t = 1
    while True:
        cand = DivisorClass(v, tuple(t * c for c in direction.coords) + (1,))
        if is_very_ample(v, cand):
            return t
        t += 1
        if t > 10 ** 6:  # unreachable for ample directions
            raise NotAmple("no very ample multiple found")


def minimal_ample_direction(v: Variety) -> DivisorClass:
    """The lexicographically smallest ample class with all coordinates >= 1
    where applicable; used as the default search direction."""
    if isinstance(v, (ProjSpace, GenericCurve)):
        return DivisorClass(v, (1,))
    if isinstance(v, Hirzebruch):
        return DivisorClass(v, (1, 1))
    raise UnsupportedVariety(f"no canonical ample direction on {v!r}")


# --------------------------------------------------------------------------
# shared input grammar
# --------------------------------------------------------------------------
#
#   variety := "P"INT | "F"INT | "P1xP1" | "C"INT | "PB(" variety ";" divisor ("," divisor)* ")"
#   divisor := "[" INT ("," INT)* "]"
#   bundle  := divisor | "{" divisor ("," divisor)* "}"

_DIVISOR_RE = re.compile(r"\[(-?\d+(?:,-?\d+)*)\]")


def parse_variety(text: str) -> Variety:
    s = "".join(text.split())
    if not s:
        raise ParseError("empty variety expression")
    if s == "P1xP1":
        return Hirzebruch(0)
    m = re.fullmatch(r"P(-?\d+)", s)
    if m:
        return ProjSpace(int(m.group(1)))
    m = re.fullmatch(r"F(-?\d+)", s)
    if m:
        return Hirzebruch(int(m.group(1)))
    m = re.fullmatch(r"C(-?\d+)", s)
    if m:
        return GenericCurve(int(m.group(1)))
    if s.startswith("PB(") and s.endswith(")"):
        inner = s[3:-1]
        if ";" not in inner:
            raise ParseError(f"PB(...) needs 'base;divisors': {text!r}")
        base_text, rest = inner.split(";", 1)
        base = parse_variety(base_text)
        divisors = [parse_divisor(part, base) for part in _split_top(rest)]
        if not divisors:
            raise ParseError(f"PB(...) needs at least one divisor: {text!r}")
        return ProjBundle(base, SplitBundle(base, tuple(divisors)))
    raise ParseError(f"cannot parse variety {text!r}")


def _split_top(text: str):
    """Split on commas that are outside [...] groups."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return parts


def parse_divisor(text: str, v: Variety, minus_basis: bool = False) -> DivisorClass:
    s = "".join(text.split())
    m = _DIVISOR_RE.fullmatch(s)
    if not m:
        raise ParseError(f"cannot parse divisor {text!r}")
    coords = tuple(int(x) for x in m.group(1).split(","))
    if minus_basis and isinstance(v, Hirzebruch) and len(coords) == 2:
        a, b = coords
        coords = (a - v.r * b, b)  # a*f + b*C-  ->  (a - r*b)*f + b*C+
    return DivisorClass(v, coords)


def parse_bundle(text: str, v: Variety, minus_basis: bool = False) -> SplitBundle:
    s = "".join(text.split())
    if s.startswith("{") and s.endswith("}"):
        parts = _split_top(s[1:-1])
        if not parts:
            raise ParseError(f"empty bundle {text!r}")
        return SplitBundle(v, tuple(parse_divisor(p, v, minus_basis) for p in parts))
    return SplitBundle(v, (parse_divisor(s, v, minus_basis),))


def render_divisor(d: DivisorClass) -> str:
    return "[" + ",".join(str(c) for c in d.coords) + "]"


def render_bundle(e: SplitBundle) -> str:
    if e.rank == 1:
        return render_divisor(e.summands[0])
    return "{" + ",".join(render_divisor(s) for s in e.summands) + "}"


def render_variety(v: Variety) -> str:
    if isinstance(v, ProjBundle):
        return ("PB(" + render_variety(v.base) + ";"
                + ",".join(render_divisor(s) for s in v.summands.summands) + ")")
    return v.name
