"""Lattice-point counting in dilations and Ehrhart quasipolynomials.

Counting enumerates integer points of the dilation nP over the exact
vertex bounding box, tightening the feasible interval of each
coordinate from the constraint residuals before descending, and
closing the innermost coordinate as an interval length rather than a
loop.  Quasipolynomials are recovered per residue class by exact
Lagrange/Newton interpolation on enumerated counts, with spare counts
held back to cross-validate the fitted degree and period.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .linalg import format_rational, parse_rational
from .polytope import EQ, EventRegion, HPolytope

DEFAULT_BUDGET = 10**9


class BudgetExceededError(Exception):
    """A count would scan more candidate points than the ceiling allows."""

    def __init__(self, message, candidates=None, dilation=None, required_counts=None):
        super().__init__(message)
        self.candidates = candidates
        self.dilation = dilation
        self.required_counts = required_counts


class PeriodTooSmallError(ValueError):
    """Held-back counts disagreed with the interpolated polynomial."""


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for the count-and-interpolate pipeline."""

    budget: int = DEFAULT_BUDGET
    validation_points: int = 2


# ---------------------------------------------------------------------------
# counting


def _le_rows(poly: HPolytope):
    rows = []
    for coeffs, rel, rhs in poly.integer_rows():
        rows.append((coeffs, rhs))
        if rel == EQ:
            rows.append((tuple(-a for a in coeffs), -rhs))
    return rows


def count_lattice_points(poly: HPolytope, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of integer points x with x/n in P (points of the dilation nP)."""
    if n < 0:
        raise ValueError("dilation must be non-negative")
    verts = poly.enumerate_vertices()
    if not verts.vertices:
        return 0
    dim = poly.dim
    lo_f, hi_f = poly.bounding_box()
    lo = [math.ceil(n * v) for v in lo_f]
    hi = [math.floor(n * v) for v in hi_f]
    candidates = 1
    for a, b in zip(lo, hi):
        candidates *= max(0, b - a + 1)
    if candidates > budget:
        raise BudgetExceededError(
            f"dilation {n} spans {candidates} candidate points (budget {budget})",
            candidates=candidates,
            dilation=n,
        )
    if candidates == 0:
        return 0

    rows = _le_rows(poly)
    nrows = len(rows)
    rhs = [b * n for _, b in rows]
    # minrest[level][j]: least possible contribution of coordinates > level
    # to row j, given the box.
    minrest = []
    for level in range(dim):
        vals = []
        for coeffs, _ in rows:
            s = 0
            for k in range(level + 1, dim):
                a = coeffs[k]
                if a > 0:
                    s += a * lo[k]
                elif a < 0:
                    s += a * hi[k]
            vals.append(s)
        minrest.append(vals)
    deltas = [
        [(j, rows[j][0][level]) for j in range(nrows) if rows[j][0][level] != 0]
        for level in range(dim)
    ]
    last = dim - 1

    def rec(level: int, res: list[int]) -> int:
        xlo, xhi = lo[level], hi[level]
        mr = minrest[level]
        for j, a in deltas[level]:
            t = res[j] - mr[j]
            if a > 0:
                q = t // a
                if q < xhi:
                    xhi = q
            else:
                q = -(t // -a)
                if q > xlo:
                    xlo = q
            if xlo > xhi:
                return 0
        if level == last:
            return xhi - xlo + 1
        sub = res[:]
        dl = deltas[level]
        for j, a in dl:
            sub[j] -= a * xlo
        total = 0
        x = xlo
        while True:
            total += rec(level + 1, sub)
            if x == xhi:
                break
            x += 1
            for j, a in dl:
                sub[j] -= a
        return total

    return rec(0, rhs)


def region_count(region: EventRegion, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Signed inclusion-exclusion count over the region's terms."""
    return sum(s * count_lattice_points(p, n, budget) for s, p in region.terms)


# ---------------------------------------------------------------------------
# rational generating functions


def poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_pow(p: list[Fraction], k: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def expand_factors(factors) -> list[Fraction]:
    """Multiply out ``[(coeff_list, power), ...]`` (ascending coefficients)."""
    out = [Fraction(1)]
    for coeffs, power in factors:
        out = poly_mul(out, poly_pow([Fraction(c) for c in coeffs], power))
    return out


@dataclass(frozen=True)
class RationalGF:
    """F(t) = P(t)/Q(t) by ascending coefficient lists, scaled so Q(0) = 1."""

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]

    def __init__(self, numerator, denominator):
        num = [Fraction(c) for c in numerator]
        den = [Fraction(c) for c in denominator]
        if not den or den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        c0 = den[0]
        object.__setattr__(self, "numerator", tuple(c / c0 for c in num))
        object.__setattr__(self, "denominator", tuple(c / c0 for c in den))

    @classmethod
    def from_json(cls, text: str) -> "RationalGF":
        data = json.loads(text)
        return cls(
            [parse_rational(c) for c in data["num"]],
            [parse_rational(c) for c in data["den"]],
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "num": [format_rational(c) for c in self.numerator],
                "den": [format_rational(c) for c in self.denominator],
            }
        )


@dataclass(frozen=True)
class CountTable:
    """Map from dilation n to the lattice count of nP."""

    entries: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for n, c in self.entries.items():
            n, c = int(n), int(c)
            if n < 0 or c < 0:
                raise ValueError("dilations and counts must be non-negative")
            clean[n] = c
        object.__setattr__(self, "entries", clean)

    def residue_class(self, r: int, period: int) -> list[tuple[int, int]]:
        return sorted((n, c) for n, c in self.entries.items() if n % period == r)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "count"])
        for n in sorted(self.entries):
            writer.writerow([n, self.entries[n]])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "CountTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != ["n", "count"]:
            raise ValueError("expected CSV header 'n,count'")
        return cls({int(row[0]): int(row[1]) for row in reader if row})


def gf_coefficients(gf: RationalGF, upto: int) -> CountTable:
    """Maclaurin coefficients a_0..a_upto of P(t)/Q(t) by the forward
    linear recurrence a_n = b_n - sum_{k>=1} c_k a_{n-k}."""
    num, den = gf.numerator, gf.denominator
    coeffs: list[Fraction] = []
    for n in range(upto + 1):
        b = num[n] if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            b -= den[k] * coeffs[n - k]
        coeffs.append(b)
    table = {}
    for n, a in enumerate(coeffs):
        if a.denominator != 1:
            raise ValueError(f"coefficient a_{n} = {a} is not an integer")
        table[n] = int(a)
    return CountTable(table)


# ---------------------------------------------------------------------------
# quasipolynomials


@dataclass(frozen=True)
class Quasipolynomial:
    """One degree-d polynomial per residue class modulo the period.

    ``polys[r]`` holds ascending coefficients for n == r (mod period);
    classes not fitted (a restricted pipeline run) hold None.
    """

    period: int
    degree: int
    polys: tuple[tuple[Fraction, ...] | None, ...]

    def __post_init__(self):
        if self.period < 1 or len(self.polys) != self.period:
            raise ValueError("need one (possibly None) polynomial per residue class")

    def class_coefficients(self, r: int) -> tuple[Fraction, ...]:
        poly = self.polys[r % self.period]
        if poly is None:
            raise ValueError(f"residue class {r} was not fitted")
        return poly

    def evaluate(self, n: int) -> Fraction:
        poly = self.class_coefficients(n % self.period)
        acc = Fraction(0)
        for c in reversed(poly):
            acc = acc * n + c
        return acc

    def leading_coefficient(self) -> Fraction:
        leads = {p[self.degree] for p in self.polys if p is not None}
        if not leads:
            raise ValueError("no fitted residue classes")
        if len(leads) != 1:
            raise ValueError(f"leading coefficients differ between classes: {leads}")
        return leads.pop()


def _newton_fit(points: list[tuple[int, Fraction]]) -> list[Fraction]:
    """Exact interpolating polynomial through the points, ascending coeffs."""
    xs = [Fraction(x) for x, _ in points]
    divided = [Fraction(y) for _, y in points]
    for level in range(1, len(points)):
        for i in range(len(points) - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    poly = [divided[-1]]
    for k in range(len(points) - 2, -1, -1):
        # poly = poly*(x - xs[k]) + divided[k]
        poly = [Fraction(0)] + poly
        for i in range(len(poly) - 1):
            poly[i] -= poly[i + 1] * xs[k]
        poly[0] += divided[k]
    return poly


def interpolate_quasipolynomial(
    counts: CountTable, period: int, degree: int, classes=None
) -> Quasipolynomial:
    """Fit a degree-``degree`` polynomial on each residue class modulo
    ``period``; any supplied count beyond the d+1 used for fitting must
    agree with the fit or the period/degree is rejected."""
    wanted = range(period) if classes is None else sorted(set(c % period for c in classes))
    polys: list[tuple[Fraction, ...] | None] = [None] * period
    for r in wanted:
        pts = counts.residue_class(r, period)
        if len(pts) < degree + 1:
            raise ValueError(
                f"class {r} mod {period} has {len(pts)} counts, needs {degree + 1}"
            )
        fit_pts = [(n, Fraction(c)) for n, c in pts[: degree + 1]]
        coeffs = _newton_fit(fit_pts)
        coeffs += [Fraction(0)] * (degree + 1 - len(coeffs))
        poly = tuple(coeffs[: degree + 1])
        for n, c in pts[degree + 1 :]:
            acc = Fraction(0)
            for coef in reversed(poly):
                acc = acc * n + coef
            if acc != c:
                raise PeriodTooSmallError(
                    f"count at n={n} deviates from the class-{r} fit; "
                    f"period {period} or degree {degree} is too small"
                )
        polys[r] = poly
    return Quasipolynomial(period, degree, tuple(polys))


def leading_coefficient(q: Quasipolynomial) -> Fraction:
    return q.leading_coefficient()


# ---------------------------------------------------------------------------
# pipeline


def _target_parts(target) -> tuple[int, list[tuple[int, HPolytope]]]:
    if isinstance(target, HPolytope):
        return target.dim, [(1, target)]
    if isinstance(target, EventRegion):
        return target.dim, list(target.terms)
    raise TypeError("target must be an HPolytope or EventRegion")


def period_bound(target) -> int:
    """LCM of vertex-coordinate denominators across the target's terms
    (empty terms contribute nothing; an entirely empty target has period 1)."""
    _, terms = _target_parts(target)
    lcms = [
        p.enumerate_vertices().denominator_lcm()
        for _, p in terms
        if not p.is_empty()
    ]
    return lcm(*lcms) if lcms else 1


def ehrhart_pipeline(
    target,
    classes=None,
    config: PipelineConfig = PipelineConfig(),
) -> Quasipolynomial:
    """Count dilations and interpolate the counting quasipolynomial.

    The period used is the vertex-denominator lcm m (the minimal period
    always divides it); each requested residue class is fitted from d+1
    counts and cross-validated on ``config.validation_points`` fresh
    dilations that took no part in the fit.
    """
    dim, terms = _target_parts(target)
    m = period_bound(target)
    wanted = list(range(m)) if classes is None else sorted(set(c % m for c in classes))
    per_class = dim + 1 + config.validation_points
    dilations = sorted(r + m * j for r in wanted for j in range(per_class))
    worst = max(dilations)
    for _, p in terms:
        if p.is_empty():
            continue
        lo, hi = p.bounding_box()
        candidates = 1
        for a, b in zip(lo, hi):
            candidates *= max(0, math.floor(worst * b) - math.ceil(worst * a) + 1)
        if candidates > config.budget:
            raise BudgetExceededError(
                f"interpolation needs {len(dilations)} counts up to dilation "
                f"{worst}, which spans {candidates} candidate points "
                f"(budget {config.budget})",
                candidates=candidates,
                dilation=worst,
                required_counts=len(dilations),
            )
    table = {}
    for n in dilations:
        table[n] = sum(s * count_lattice_points(p, n, config.budget) for s, p in terms)
    return interpolate_quasipolynomial(CountTable(table), m, dim, classes=wanted)
