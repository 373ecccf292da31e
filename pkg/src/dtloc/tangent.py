"""Torus weights of the tangent-obstruction complex at a fixed point.

At a molten crystal the framed moduli space sits inside a smooth chart (all
arrow matrices plus the framing vector, net of the free gauge action) as the
critical locus of the potential function.  The four-term deformation complex
at the fixed point is

    degree 0: End(V)                       (gauge directions)
    degree 1: arrow Homs + framing         (chart coordinates)
    degree 2: relation Homs + coframing    (one relation per arrow)
    degree 3: End(V)^dual

with degrees 2 and 3 dual to degrees 1 and 0: the obstruction pairing of the
critical-locus geometry.  Writing W(m) for the weight vector of atom m and
W(arrow) for an arrow's weight, the torus acts on the matrix entry of arrow
a: v -> v' that feeds basis atom m (at v) into basis atom m' (at v') with
weight W(m) - W(m') + W(a): conjugation by the stabilizing gauge cocharacter
contributes W(m) - W(m'), the arrow scaling contributes W(a).  The same
conjugation gives End entries weight W(m) - W(m') and framing entries weight
-W(m').  With these assignments the gauge action embeds equivariantly into
the chart directions at every stable framed data, so the net tangent
multiplicity

    T(w) = mult_degree1(w) - mult_degree0(w)

is non-negative for every weight w.  The index of a fixed point for a slope
is the signed count of contracting chart directions net of gauge,

    ind = d_plus - d_minus,   d_plus = sum_{w>0} T(w),  d_minus = sum_{w<0} T(w),

which only depends on the alternating-sign class of the complex because the
zero-weight part cancels degree against degree (d_zero below is that class
multiplicity at weight 0 and vanishes identically; a nonzero value would
mean a fixed locus that is not even isolated at class level).

The slope-specialized reports can lose information where distinct weight
vectors collapse onto the same integer: those slopes are the walls.  The
full-vector data is exposed so callers (and tests) can detect wall slopes
exactly, via the classes where T differs from its negation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crystal import AtomPoset, MoltenCrystal
from .errors import NonIsolatedFixedPointError, WallSlopeError
from .quiver import QuiverWithPotential, Slope, elementary_cycles, slope_coordinates

WeightVector = tuple[int, ...]


@dataclass(frozen=True)
class IndexReport:
    """Slope-specialized weight multisets per degree and the resulting index."""

    deg_weights: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    d_plus: int
    d_zero: int
    d_minus: int
    ind: int

    def net_tangent(self) -> dict[int, int]:
        """T(w) = multiplicity in degree 1 minus multiplicity in degree 0."""
        counts: dict[int, int] = {}
        for w in self.deg_weights[1]:
            counts[w] = counts.get(w, 0) + 1
        for w in self.deg_weights[0]:
            counts[w] = counts.get(w, 0) - 1
        return {w: c for w, c in counts.items() if c != 0}


def _vector_sub(a: WeightVector, b: WeightVector) -> WeightVector:
    return tuple(x - y for x, y in zip(a, b))


def _vector_add(a: WeightVector, b: WeightVector) -> WeightVector:
    return tuple(x + y for x, y in zip(a, b))


def _vector_neg(a: WeightVector) -> WeightVector:
    return tuple(-x for x in a)


def complex_weight_vectors(
    poset: AtomPoset, crystal: MoltenCrystal
) -> tuple[list[WeightVector], list[WeightVector], list[WeightVector], list[WeightVector]]:
    """Full-torus weight vectors of the four degrees at the fixed point.

    Degree 2 is assembled from the relation terms (the relation paired with
    an arrow runs backwards with the opposite arrow twist) and the coframing,
    not by negating degree 1; their equality as multisets is a checked
    duality invariant downstream, not an input.
    """
    q = poset.quiver
    arrow_weight = {
        a.name: tuple(b.weight(a.name) for b in poset.basis) for a in q.arrows
    }
    atoms_at: dict[str, list[WeightVector]] = {v: [] for v in q.vertices}
    for i in crystal.atom_indices:
        atom = poset.atoms[i]
        atoms_at[atom.vertex].append(atom.weight)

    deg0: list[WeightVector] = []
    for v in q.vertices:
        ws = atoms_at[v]
        for wa in ws:
            for wb in ws:
                deg0.append(_vector_sub(wa, wb))

    deg1: list[WeightVector] = []
    deg2: list[WeightVector] = []
    for a in q.arrows:
        twist = arrow_weight[a.name]
        for wa in atoms_at[a.source]:
            for wb in atoms_at[a.target]:
                deg1.append(_vector_add(_vector_sub(wa, wb), twist))
        for wa in atoms_at[a.target]:
            for wb in atoms_at[a.source]:
                deg2.append(_vector_sub(_vector_sub(wa, wb), twist))
    for v in q.framings:
        for wb in atoms_at[v]:
            deg1.append(_vector_neg(wb))
            deg2.append(wb)

    deg3 = [_vector_neg(w) for w in deg0]
    return deg0, deg1, deg2, deg3


def specialize_report(
    degrees: tuple[list[WeightVector], ...], coords: tuple[int, ...]
) -> IndexReport:
    """Pair the degree data with a slope (given in lattice-basis coordinates)."""

    def pair(vec: WeightVector) -> int:
        return sum(c * x for c, x in zip(coords, vec))

    spec = tuple(tuple(sorted(pair(v) for v in deg)) for deg in degrees)
    counts: dict[int, int] = {}
    for w in spec[1]:
        counts[w] = counts.get(w, 0) + 1
    for w in spec[0]:
        counts[w] = counts.get(w, 0) - 1
    d_plus = sum(c for w, c in counts.items() if w > 0)
    d_minus = sum(c for w, c in counts.items() if w < 0)
    net_zero = (
        sum(1 for w in spec[1] if w == 0)
        + sum(1 for w in spec[3] if w == 0)
        - sum(1 for w in spec[0] if w == 0)
        - sum(1 for w in spec[2] if w == 0)
    )
    return IndexReport(
        deg_weights=spec,
        d_plus=d_plus,
        d_zero=net_zero,
        d_minus=d_minus,
        ind=d_plus - d_minus,
    )


def tangent_complex_weights(
    poset: AtomPoset, crystal: MoltenCrystal, s: Slope
) -> IndexReport:
    """IndexReport of a fixed point for a slope; errors if it is not isolated."""
    coords = slope_coordinates(poset.quiver, poset.basis, s)
    report = specialize_report(complex_weight_vectors(poset, crystal), coords)
    if report.d_zero != 0:
        raise NonIsolatedFixedPointError(
            f"fixed point not isolated for this slope (d_zero = {report.d_zero})"
        )
    return report


def net_tangent_vectors(poset: AtomPoset, crystal: MoltenCrystal) -> dict[WeightVector, int]:
    """Full-torus net tangent multiplicities T(omega), all non-negative."""
    deg0, deg1, _, _ = complex_weight_vectors(poset, crystal)
    counts: dict[WeightVector, int] = {}
    for w in deg1:
        counts[w] = counts.get(w, 0) + 1
    for w in deg0:
        counts[w] = counts.get(w, 0) - 1
    return {w: c for w, c in counts.items() if c != 0}


def jump_classes(poset: AtomPoset, crystal: MoltenCrystal) -> set[WeightVector]:
    """Weight vectors where the alternating class of the complex is unpaired.

    A slope orthogonal to one of these vectors sits on an invisible wall for
    this fixed point: its index is not locally constant there.  Slopes off
    all jump hyperplanes of all contributing fixed points yield series that
    are constant across the chamber.
    """
    T = net_tangent_vectors(poset, crystal)
    out = set()
    for w, c in T.items():
        if any(x != 0 for x in w) and c != T.get(_vector_neg(w), 0):
            out.add(w)
    return out


def zero_weight_cycles(q: QuiverWithPotential, s: Slope, max_len: int):
    """Elementary cycles of length <= max_len on which the slope vanishes."""
    if max_len < 1:
        return []
    return [c for c in elementary_cycles(q, max_len) if c.weight_of(s) == 0]


def is_generic(
    q: QuiverWithPotential,
    s: Slope,
    max_size: int,
    poset: AtomPoset | None = None,
) -> bool:
    """No zero-weight elementary cycle up to 2*max_size, and d_zero = 0 throughout."""
    if zero_weight_cycles(q, s, 2 * max_size):
        return False
    from .crystal import build_atom_poset, enumerate_crystals  # local to avoid cycle

    if poset is None or poset.depth_bound < max_size:
        poset = build_atom_poset(q, max_size)
    try:
        for crystal in enumerate_crystals(poset, max_size):
            tangent_complex_weights(poset, crystal, s)
    except NonIsolatedFixedPointError:
        return False
    return True


def require_generic(q: QuiverWithPotential, s: Slope, max_size: int) -> None:
    """Raise WallSlopeError naming the zero-weight cycles if the slope is a wall."""
    bad = zero_weight_cycles(q, s, 2 * max_size)
    if bad:
        raise WallSlopeError(bad)
