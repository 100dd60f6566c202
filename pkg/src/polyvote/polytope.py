"""Rational polytopes in halfspace representation.

An ``HPolytope`` stores closed linear constraints over ``Fraction``
coordinates, normalized to coprime integer coefficients.  Vertex
enumeration solves d-subsets of constraints as equalities with an
incremental fraction-free elimination that prunes dependent subsets
early.  Volume cones the boundary over a vertex and sums exact simplex
determinants, recursing facet by facet through the vertex/constraint
incidence structure.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .linalg import (
    DimensionError,
    QVector,
    as_vector,
    determinant,
    format_rational,
    parse_rational,
    rank,
)

LE, GE, EQ = "<=", ">=", "="
_RELATIONS = (LE, GE, EQ)


class GeometryError(Exception):
    """A geometric precondition failed."""


class UnboundedPolytopeError(GeometryError):
    """The polytope admits a recession direction."""


@dataclass(frozen=True)
class HalfSpace:
    """One closed constraint ``coeffs . x REL rhs``."""

    coeffs: QVector
    rel: str
    rhs: Fraction

    def __post_init__(self):
        if self.rel not in _RELATIONS:
            raise ValueError(f"relation must be one of {_RELATIONS}")
        object.__setattr__(self, "coeffs", as_vector(self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def evaluate(self, point) -> bool:
        if len(point) != len(self.coeffs):
            raise DimensionError("point/constraint dimension mismatch")
        lhs = sum(a * x for a, x in zip(self.coeffs, point))
        if self.rel == LE:
            return lhs <= self.rhs
        if self.rel == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


def _canonical(c: HalfSpace, dim: int) -> HalfSpace | None:
    """Scale to coprime integers, orient ``>=`` as ``<=``, fix equality
    signs, drop vacuous rows.  Returns None for rows satisfied everywhere;
    infeasible constant rows normalize to the single false row 0 <= -1."""
    if len(c.coeffs) != dim:
        raise DimensionError(f"constraint has {len(c.coeffs)} coefficients, expected {dim}")
    coeffs, rel, rhs = list(c.coeffs), c.rel, c.rhs
    if rel == GE:
        coeffs, rel, rhs = [-a for a in coeffs], LE, -rhs
    mult = lcm(*(a.denominator for a in coeffs), rhs.denominator)
    ints = [int(a * mult) for a in coeffs]
    b = int(rhs * mult)
    if all(v == 0 for v in ints):
        feasible = (b >= 0) if rel == LE else (b == 0)
        if feasible:
            return None
        return HalfSpace((Fraction(0),) * dim, LE, Fraction(-1))
    g = gcd(*ints, b)
    ints = [v // g for v in ints]
    b //= g
    if rel == EQ:
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
            b = -b
    return HalfSpace(tuple(Fraction(v) for v in ints), rel, Fraction(b))


FALSE_ROW_RHS = Fraction(-1)


@dataclass(frozen=True)
class HPolytope:
    """Intersection of closed halfspaces and hyperplanes in R^dim."""

    dim: int
    constraints: tuple[HalfSpace, ...]

    def __init__(self, dim: int, constraints):
        if dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        seen = set()
        rows = []
        for c in constraints:
            cc = _canonical(c, dim)
            if cc is None or cc in seen:
                continue
            seen.add(cc)
            rows.append(cc)
        rows.sort(key=lambda c: (c.rel, c.coeffs, c.rhs))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "constraints", tuple(rows))

    # -- basic predicates ------------------------------------------------

    def contains(self, point) -> bool:
        point = as_vector(point)
        if len(point) != self.dim:
            raise DimensionError("point dimension mismatch")
        return all(c.evaluate(point) for c in self.constraints)

    def has_false_row(self) -> bool:
        return any(
            c.rel == LE and c.rhs == FALSE_ROW_RHS and all(a == 0 for a in c.coeffs)
            for c in self.constraints
        )

    # -- constructive operations ------------------------------------------

    def intersect(self, other: "HPolytope") -> "HPolytope":
        if self.dim != other.dim:
            raise DimensionError("cannot intersect polytopes of different dimensions")
        return HPolytope(self.dim, self.constraints + other.constraints)

    def eliminate_equality(self, var_index: int) -> "HPolytope":
        """Substitute out coordinate ``var_index`` using an equality row.

        The solved variable is expressed from the first equality with a
        nonzero coefficient there and substituted into every other
        constraint, giving a polytope in dimension dim-1.  When that
        coefficient is +-1 the substitution maps lattice points of a
        dilation one-to-one, so counts in the reduced space equal counts
        in the original slice.
        """
        if not 0 <= var_index < self.dim:
            raise DimensionError("variable index out of range")
        row = next(
            (c for c in self.constraints if c.rel == EQ and c.coeffs[var_index] != 0),
            None,
        )
        if row is None:
            raise GeometryError(f"no equality constraint involves coordinate {var_index}")
        aj = row.coeffs[var_index]
        keep = [i for i in range(self.dim) if i != var_index]
        reduced = []
        for c in self.constraints:
            if c is row:
                continue
            cj = c.coeffs[var_index]
            coeffs = tuple(c.coeffs[i] - cj * row.coeffs[i] / aj for i in keep)
            rhs = c.rhs - cj * row.rhs / aj
            reduced.append(HalfSpace(coeffs, c.rel, rhs))
        return HPolytope(self.dim - 1, reduced)

    # -- derived data ------------------------------------------------------

    def integer_rows(self) -> list[tuple[tuple[int, ...], str, int]]:
        """Constraints as integer tuples (coeffs, rel, rhs)."""
        return [
            (tuple(int(a) for a in c.coeffs), c.rel, int(c.rhs))
            for c in self.constraints
        ]

    def enumerate_vertices(self) -> "VPolytope":
        return VPolytope(self.dim, _vertices(self))

    def bounding_box(self) -> tuple[QVector, QVector]:
        """Componentwise (min, max) over the vertices."""
        verts = _vertices(self)
        if not verts:
            raise GeometryError("empty polytope has no bounding box")
        lo = tuple(min(v[i] for v in verts) for i in range(self.dim))
        hi = tuple(max(v[i] for v in verts) for i in range(self.dim))
        return lo, hi

    def volume(self) -> Fraction:
        return _volume(self)

    def is_empty(self) -> bool:
        return not _vertices(self)


@dataclass(frozen=True)
class VPolytope:
    """Vertex list produced by exact enumeration."""

    dim: int
    vertices: tuple[QVector, ...]

    def denominator_lcm(self) -> int:
        """Least m such that scaling by m makes every vertex integral."""
        if not self.vertices:
            raise GeometryError("empty vertex list has no denominator lcm")
        return lcm(*(x.denominator for v in self.vertices for x in v))

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class EventRegion:
    """Signed inclusion-exclusion decomposition of a union of polytopes."""

    terms: tuple[tuple[int, HPolytope], ...]

    def __post_init__(self):
        terms = tuple((int(s), p) for s, p in self.terms)
        if not terms:
            raise ValueError("region needs at least one term")
        if any(s not in (1, -1) for s, _ in terms):
            raise ValueError("term signs must be +1 or -1")
        dims = {p.dim for _, p in terms}
        if len(dims) != 1:
            raise DimensionError("all region terms must share one dimension")
        object.__setattr__(self, "terms", terms)

    @property
    def dim(self) -> int:
        return self.terms[0][1].dim

    def volume(self) -> Fraction:
        total = sum((s * p.volume() for s, p in self.terms), Fraction(0))
        if total < 0:
            raise GeometryError("signed region volume came out negative")
        return total

    def intersect(self, other: "EventRegion") -> "EventRegion":
        terms = tuple(
            (s * t, p.intersect(q)) for s, p in self.terms for t, q in other.terms
        )
        return EventRegion(terms)

    @classmethod
    def of(cls, polytope: HPolytope) -> "EventRegion":
        return cls(((1, polytope),))


def region_volume(region: EventRegion) -> Fraction:
    return region.volume()


# ---------------------------------------------------------------------------
# vertex enumeration


def _propagate_bounds(rows, dim, sweeps):
    """Interval tightening from single constraints.

    Returns ("empty", None), ("bounded", (lo, hi)) or ("unknown", None).
    Sound but incomplete: "unknown" does not imply unbounded.
    """
    le_rows = []
    for coeffs, rel, rhs in rows:
        le_rows.append((coeffs, rhs))
        if rel == EQ:
            le_rows.append((tuple(-a for a in coeffs), -rhs))
    lo: list[Fraction | None] = [None] * dim
    hi: list[Fraction | None] = [None] * dim
    for _ in range(sweeps):
        changed = False
        for coeffs, rhs in le_rows:
            support = [i for i in range(dim) if coeffs[i] != 0]
            for i in support:
                rest = Fraction(0)
                ok = True
                for k in support:
                    if k == i:
                        continue
                    a = coeffs[k]
                    bound = lo[k] if a > 0 else hi[k]
                    if bound is None:
                        ok = False
                        break
                    rest += a * bound
                if not ok:
                    continue
                cand = Fraction(rhs - rest, coeffs[i])
                if coeffs[i] > 0:
                    if hi[i] is None or cand < hi[i]:
                        hi[i] = cand
                        changed = True
                else:
                    if lo[i] is None or cand > lo[i]:
                        lo[i] = cand
                        changed = True
        for i in range(dim):
            if lo[i] is not None and hi[i] is not None and lo[i] > hi[i]:
                return "empty", None
        if not changed:
            break
    if all(lo[i] is not None and hi[i] is not None for i in range(dim)):
        return "bounded", (lo, hi)
    return "unknown", None


def _reduce_against(echelon, row):
    """Eliminate the pivots of ``echelon`` from ``row`` (ints, rhs last).

    Returns the reduced row divided by its gcd, or None when dependent.
    Raises _Inconsistent for a dependent row with nonzero rhs (the
    tight system selected so far has no solution)."""
    width = len(row)
    for erow, pivot_col in echelon:
        f = row[pivot_col]
        if f == 0:
            continue
        p = erow[pivot_col]
        row = [r * p - e * f for r, e in zip(row, erow)]
    if all(v == 0 for v in row[: width - 1]):
        if row[-1] != 0:
            raise _Inconsistent()
        return None
    g = gcd(*row)
    if g > 1:
        row = [v // g for v in row]
    return row


class _Inconsistent(Exception):
    pass


def _back_solve(echelon, dim):
    """Solve a rank-dim echelon system; returns (numerators, denominator)."""
    x: list[Fraction | None] = [None] * dim
    for erow, pivot_col in reversed(echelon):
        s = Fraction(erow[-1])
        for j in range(dim):
            if j != pivot_col and erow[j] != 0:
                s -= erow[j] * x[j]
        x[pivot_col] = s / erow[pivot_col]
    den = lcm(*(xi.denominator for xi in x))
    return tuple(int(xi * den) for xi in x), den


def _basic_solutions(rows, dim):
    """All feasible solutions of d independent tight constraints.

    Equality rows are forced into every basis.  Returns normalized
    (numerator tuple, denominator) pairs."""
    eq_aug = []
    ineq_aug = []
    for coeffs, rel, rhs in rows:
        aug = list(coeffs) + [rhs]
        (eq_aug if rel == EQ else ineq_aug).append(aug)

    echelon: list[tuple[list[int], int]] = []
    try:
        for aug in eq_aug:
            red = _reduce_against(echelon, aug)
            if red is not None:
                pivot = next(j for j in range(dim) if red[j] != 0)
                echelon.append((red, pivot))
    except _Inconsistent:
        return []

    found: dict[tuple, tuple] = {}

    def feasible(nums, den):
        for coeffs, rel, rhs in rows:
            lhs = sum(a * p for a, p in zip(coeffs, nums))
            if rel == EQ:
                if lhs != rhs * den:
                    return False
            elif lhs > rhs * den:
                return False
        return True

    def leaf(echelon_state):
        nums, den = _back_solve(echelon_state, dim)
        key = (nums, den)
        if key not in found and feasible(nums, den):
            found[key] = (nums, den)

    def extend(echelon_state, start):
        need = dim - len(echelon_state)
        if need == 0:
            leaf(echelon_state)
            return
        for i in range(start, len(ineq_aug) - need + 1):
            try:
                red = _reduce_against(echelon_state, ineq_aug[i])
            except _Inconsistent:
                continue
            if red is None:
                continue
            pivot = next(j for j in range(dim) if red[j] != 0)
            extend(echelon_state + [(red, pivot)], i + 1)

    extend(echelon, 0)
    return list(found.values())


def _hadamard_box(rows, dim) -> int:
    """Bound exceeding any vertex coordinate of the row system (Cramer:
    coordinates are ratios of integer minors, denominators >= 1)."""
    bound = 1
    for coeffs, _, rhs in rows:
        s = sum(abs(a) for a in coeffs) + abs(rhs)
        bound *= max(1, s)
    return bound + 1


@functools.lru_cache(maxsize=4096)
def _vertices(poly: HPolytope) -> tuple[QVector, ...]:
    dim = poly.dim
    if poly.has_false_row():
        return ()
    rows = poly.integer_rows()
    status, _ = _propagate_bounds(rows, dim, sweeps=dim + 3)
    if status == "empty":
        return ()
    if status == "bounded":
        sols = _basic_solutions(rows, dim)
    else:
        big = _hadamard_box(rows, dim)
        boxed = list(rows)
        for i in range(dim):
            unit = tuple(1 if j == i else 0 for j in range(dim))
            boxed.append((unit, LE, big))
            boxed.append((tuple(-u for u in unit), LE, big))
        sols = _basic_solutions(boxed, dim)
        if any(abs(Fraction(p, q)) >= big for nums, q in sols for p in nums):
            raise UnboundedPolytopeError(
                "polytope is unbounded (recession direction reached the guard box)"
            )
    return tuple(
        tuple(Fraction(p, den) for p in nums) for nums, den in sorted(sols)
    )


# ---------------------------------------------------------------------------
# volume


def _simplex_volume(verts, apex, ids, dim) -> Fraction:
    mat = [[verts[i][k] - verts[apex][k] for k in range(dim)] for i in ids]
    return abs(determinant(mat)) / math.factorial(dim)


def _cone_triangulate(ids, tights, used, k, tight_count):
    """k-simplices (as vertex-id lists) covering the face spanned by ids."""
    if k == 0 or len(ids) == 1:
        return [[min(ids)]]
    if len(ids) == k + 1:
        return [sorted(ids)]
    apex = max(ids, key=lambda i: (tight_count[i], -i))
    pieces = []
    seen = set()
    for j, tight in enumerate(tights):
        if j in used:
            continue
        sub = ids & tight
        if not sub or apex in sub or len(sub) < k or sub == ids:
            continue
        if sub in seen:
            continue
        seen.add(sub)
        for tri in _cone_triangulate(sub, tights, used | {j}, k - 1, tight_count):
            pieces.append([apex] + tri)
    return pieces


def _volume(poly: HPolytope) -> Fraction:
    dim = poly.dim
    verts = _vertices(poly)
    if len(verts) < dim + 1:
        return Fraction(0)
    v0 = verts[0]
    diffs = [[v[k] - v0[k] for k in range(dim)] for v in verts[1:]]
    if rank(diffs) < dim:
        return Fraction(0)
    rows = poly.integer_rows()
    tights = []
    for coeffs, rel, rhs in rows:
        if rel == EQ:
            continue
        tight = frozenset(
            i
            for i, v in enumerate(verts)
            if sum(a * x for a, x in zip(coeffs, v)) == rhs
        )
        tights.append(tight)
    tight_count = [sum(i in t for t in tights) for i in range(len(verts))]
    apex = max(range(len(verts)), key=lambda i: (tight_count[i], -i))
    total = Fraction(0)
    seen = set()
    for j, tight in enumerate(tights):
        if apex in tight or len(tight) < dim or len(tight) == len(verts):
            continue
        if tight in seen:
            continue
        seen.add(tight)
        for tri in _cone_triangulate(tight, tights, {j}, dim - 1, tight_count):
            total += _simplex_volume(verts, apex, tri, dim)
    return total


# ---------------------------------------------------------------------------
# plain-text H-representation files


def parse_hrep(text: str) -> HPolytope:
    """Parse the plaintext format: first line ``dim d``, one constraint
    ``c_1 ... c_d REL rhs`` per following line, ``#`` comments ignored."""
    dim = None
    constraints = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if dim is None:
            if len(parts) != 2 or parts[0] != "dim":
                raise ValueError(f"line {lineno}: expected 'dim d' header")
            dim = int(parts[1])
            if dim < 1:
                raise ValueError(f"line {lineno}: dimension must be positive")
            continue
        if len(parts) != dim + 2:
            raise ValueError(f"line {lineno}: expected {dim} coefficients, REL, rhs")
        rel = parts[dim]
        if rel not in _RELATIONS:
            raise ValueError(f"line {lineno}: unknown relation {rel!r}")
        coeffs = tuple(parse_rational(p) for p in parts[:dim])
        rhs = parse_rational(parts[dim + 1])
        constraints.append(HalfSpace(coeffs, rel, rhs))
    if dim is None:
        raise ValueError("missing 'dim d' header line")
    return HPolytope(dim, constraints)


def format_hrep(poly: HPolytope) -> str:
    lines = [f"dim {poly.dim}"]
    for c in poly.constraints:
        coeffs = " ".join(format_rational(a) for a in c.coeffs)
        lines.append(f"{coeffs} {c.rel} {format_rational(c.rhs)}")
    return "\n".join(lines) + "\n"
