"""Localization generating series per slope, wall reports, chamber comparison.

The series assembled here is the class of the attracting locus for the
chosen slope: the sum over torus-fixed points (molten crystals), graded by
number of atoms, of y raised to the signed contracting-weight index of the
fixed point.  It coincides with the refined invariant of the whole moduli
space exactly when the action is circle-compact for that slope, which is not
decided automatically; the complement of the attracting locus is left
unevaluated and callers are warned through ``ATTRACTING_NOTE``.

The y -> 1 specialization forgets the index and counts fixed points per
size, so it is independent of the slope; the refined coefficients jump when
the slope crosses a wall where an elementary cycle changes sign.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .crystal import AtomPoset, MoltenCrystal, build_atom_poset, enumerate_crystals
from .errors import NonIsolatedFixedPointError, SlopeError
from .halflaurent import HalfLaurent, TruncatedSeries, series_mul
from .quiver import (
    CycleFunctional,
    QuiverWithPotential,
    Slope,
    disjoint_union,
    elementary_cycles,
    slope_coordinates,
    transport_slopes,
    validate_slope,
)
from .tangent import (
    complex_weight_vectors,
    jump_classes,
    require_generic,
    specialize_report,
)

ATTRACTING_NOTE = (
    "series is the class of the attracting locus for this slope; it equals the "
    "invariant of the full moduli space only if the action is circle-compact "
    "(not verified for this model)"
)


@dataclass(frozen=True)
class LocalizationSeries:
    slope: Slope
    order: int
    series: TruncatedSeries
    attracting_note: str = ATTRACTING_NOTE

    def coefficients(self) -> tuple[HalfLaurent, ...]:
        return self.series.coeffs


@dataclass(frozen=True)
class WallReport:
    cycles: tuple[tuple[CycleFunctional, int], ...]
    walls_hit: tuple[CycleFunctional, ...]
    chamber_signature: tuple[int, ...]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def localization_series(
    q: QuiverWithPotential,
    s: Slope,
    order: int,
    poset: AtomPoset | None = None,
    threads: int | None = None,
) -> LocalizationSeries:
    """Sum y**ind over fixed points of each size, up to the truncation order.

    Preconditions: the slope leaves the potential invariant and is generic
    (no zero-weight elementary cycle up to length 2*order).
    """
    violations = validate_slope(q, s)
    if violations:
        bad = "; ".join(t.render() for t in violations)
        raise SlopeError(f"slope does not leave the potential invariant: {bad}")
    require_generic(q, s, order)
    if poset is None or poset.depth_bound < order:
        poset = build_atom_poset(q, order)
    crystals = enumerate_crystals(poset, order)
    coords = slope_coordinates(q, poset.basis, s)

    def index_of(crystal: MoltenCrystal) -> tuple[int, int]:
        report = specialize_report(complex_weight_vectors(poset, crystal), coords)
        if report.d_zero != 0:
            raise NonIsolatedFixedPointError(
                f"fixed point not isolated for this slope (d_zero = {report.d_zero})"
            )
        return crystal.size, report.ind

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            contributions = list(pool.map(index_of, crystals))
    else:
        contributions = [index_of(c) for c in crystals]

    coeffs = [HalfLaurent.zero() for _ in range(order + 1)]
    for size, ind in sorted(contributions):
        coeffs[size] = coeffs[size] + HalfLaurent.monomial(ind)
    return LocalizationSeries(slope=s, order=order, series=TruncatedSeries(order, coeffs))


def euler_specialization(ls: LocalizationSeries) -> list[int]:
    """y -> 1 per degree: the fixed-point count per size, slope-independent."""
    return [c.specialize_y1() for c in ls.series.coeffs]


def wall_report(q: QuiverWithPotential, s: Slope, max_cycle_len: int) -> WallReport:
    """Sign vector of the slope on all elementary cycles; zeros are walls."""
    cycles = elementary_cycles(q, max_cycle_len)
    weighted = tuple((c, c.weight_of(s)) for c in cycles)
    walls = tuple(c for c, w in weighted if w == 0)
    signature = tuple(_sign(w) for _, w in weighted)
    return WallReport(cycles=weighted, walls_hit=walls, chamber_signature=signature)


def compare_chambers(
    q: QuiverWithPotential, s1: Slope, s2: Slope, order: int
) -> tuple[bool, int | None]:
    """Compare two localization series; report the least differing degree."""
    poset = build_atom_poset(q, order)
    a = localization_series(q, s1, order, poset=poset)
    b = localization_series(q, s2, order, poset=poset)
    for n in range(order + 1):
        if a.series.coefficient(n) != b.series.coefficient(n):
            return False, n
    return True, None


def refined_wall_normals(
    q: QuiverWithPotential, order: int, poset: AtomPoset | None = None
) -> set[tuple[int, ...]]:
    """Weight vectors cutting the walls where some bounded fixed point's index jumps.

    Beyond the elementary-cycle walls, individual fixed-point indices jump on
    finitely many extra hyperplanes (the series coefficients redistribute
    there without changing in total across a chamber).  A slope whose
    lattice-basis coordinates pair to zero with one of these normals sits on
    such a wall; slopes clear of all of them have locally constant series
    coefficient by coefficient up to the given order.
    """
    if poset is None or poset.depth_bound < order:
        poset = build_atom_poset(q, order)
    normals: set[tuple[int, ...]] = set()
    for crystal in enumerate_crystals(poset, order):
        normals |= jump_classes(poset, crystal)
    return normals


def slope_clears_refined_walls(
    q: QuiverWithPotential,
    s: Slope,
    order: int,
    poset: AtomPoset | None = None,
    normals: set[tuple[int, ...]] | None = None,
) -> bool:
    """True when the slope avoids every refined wall up to the given order."""
    if poset is None or poset.depth_bound < order:
        poset = build_atom_poset(q, order)
    coords = slope_coordinates(q, poset.basis, s)
    if normals is None:
        normals = refined_wall_normals(q, order, poset=poset)
    for w in normals:
        if sum(c * x for c, x in zip(coords, w)) == 0:
            return False
    return True


def product_law_check(
    q1: QuiverWithPotential,
    q2: QuiverWithPotential,
    s1: Slope,
    s2: Slope,
    order: int,
) -> bool:
    """Disjoint-union series equals the product of the factor series.

    The left side is computed by running the whole engine on the union quiver
    (two framings, sizes summed into one variable); the right side is the
    truncated Cauchy product of the factors.  Multiplicativity is the
    class-level shadow of the compatibility of vanishing cycles with sums of
    potentials on products of charts.
    """
    union, amap1, amap2 = disjoint_union(q1, q2)
    s_union = transport_slopes((amap1, amap2), s1, s2)
    lhs = localization_series(union, s_union, order).series
    rhs = series_mul(
        localization_series(q1, s1, order).series,
        localization_series(q2, s2, order).series,
    )
    return lhs == rhs
