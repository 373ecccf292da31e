"""Torus-fixed points of framed quiver moduli as molten crystals.

The framed module generated by one vector at each framed vertex has a basis
of path classes ("atoms"): words in the arrows starting at a framing, taken
modulo the relations obtained as cyclic derivatives of the potential.  The
symmetry torus acts on an atom through the multiset of arrows in any word
representing it, so each atom carries an integer weight vector, expressed in
a fixed basis of the admissible slope lattice.  Torus-fixed points of the
framed moduli space are the finite order ideals of the atom poset: the
molten crystals.

Atom identification rule: two words of the same length denote the same atom
iff they start at the same framing, end at the same vertex, have equal
weight vector, and are connected by a chain of relation rewrites.  Rewrites
come from binomial relations u = v (both sides the same length), so they
preserve length, endpoints and weight; connectivity is decided exhaustively
by closing each word class under single substitutions.  Quivers whose cyclic
derivatives are not of this binomial homogeneous shape are rejected: for
them the monomial crystal model is not certified, and enumerating would be
unsound.  Within one (framing, vertex, weight, depth) group, all words must
fall into a single rewrite class; a split group is rejected as non-confluent
because the fixed module would then have a weight space of dimension > 1.

Enumeration of order ideals is breadth first over one-atom extensions with
canonical-parent deduplication: an ideal of size n+1 is produced only from
the ideal obtained by deleting its least removable atom, so every ideal
appears exactly once and the output order is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    NonConfluentError,
    PosetDepthError,
    QuiverStructureError,
    UnsupportedPotentialError,
)
from .quiver import (
    QuiverWithPotential,
    Slope,
    slope_coordinates,
    slope_lattice_basis,
)

Word = tuple[str, ...]


@dataclass(frozen=True)
class Atom:
    """A path class: basis element of the framed module fixed by the torus."""

    index: int
    framing_index: int
    vertex: str
    weight: tuple[int, ...]
    depth: int
    word: Word  # canonical (lexicographically least) representative

    def sort_key(self):
        return (self.depth, self.framing_index, self.vertex, self.weight, self.word)


@dataclass(frozen=True)
class MoltenCrystal:
    """A finite order ideal in the atom poset: one torus-fixed point."""

    atom_indices: tuple[int, ...]  # sorted

    @property
    def size(self) -> int:
        return len(self.atom_indices)


def cyclic_derivative_relations(q: QuiverWithPotential) -> list[tuple[Word, Word]]:
    """Binomial rewrite rules u = v from the cyclic derivatives of the potential.

    For each arrow, collect sign * (rotation of the term with that arrow
    deleted from the front) over all occurrences in all terms.  The result
    must cancel down to exactly one positive and one negative word of equal
    length (or to nothing); anything else is outside the supported class.
    """
    rules: list[tuple[Word, Word]] = []
    for arrow in q.arrows:
        contributions: dict[Word, int] = {}
        for term in q.potential:
            w = term.word
            for i, n in enumerate(w):
                if n == arrow.name:
                    rest = w[i + 1 :] + w[:i]
                    contributions[rest] = contributions.get(rest, 0) + term.sign
        contributions = {w: c for w, c in contributions.items() if c != 0}
        if not contributions:
            continue
        pos = sorted(w for w, c in contributions.items() if c == 1)
        neg = sorted(w for w, c in contributions.items() if c == -1)
        extreme = [w for w, c in contributions.items() if abs(c) > 1]
        if extreme or len(pos) != 1 or len(neg) != 1:
            raise UnsupportedPotentialError(
                f"cyclic derivative along {arrow.name} is not a signed binomial; "
                "the crystal engine supports only binomial relations"
            )
        u, v = pos[0], neg[0]
        if len(u) != len(v):
            raise UnsupportedPotentialError(
                f"relation along {arrow.name} equates words of different length; "
                "only homogeneous relations are supported"
            )
        if u != v:
            rules.append((u, v))
    return rules


def _rewrite_neighbors(word: Word, rules: Sequence[tuple[Word, Word]]) -> Iterable[Word]:
    for u, v in rules:
        for a, b in ((u, v), (v, u)):
            la = len(a)
            for i in range(len(word) - la + 1):
                if word[i : i + la] == a:
                    yield word[:i] + b + word[i + la :]


def _rewrite_closure(word: Word, rules: Sequence[tuple[Word, Word]]) -> frozenset[Word]:
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for nb in _rewrite_neighbors(w, rules):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return frozenset(seen)


class AtomPoset:
    """Atoms up to a depth bound, with arrow-labeled covering relations."""

    def __init__(
        self,
        q: QuiverWithPotential,
        depth_bound: int,
        basis: Sequence[Slope],
        atoms: Sequence[Atom],
        successors: dict[tuple[int, str], int],
        predecessors: dict[int, frozenset[int]],
        word_class: dict[tuple[int, Word], int],
    ):
        self.quiver = q
        self.depth_bound = depth_bound
        self.basis = tuple(basis)
        self.atoms = tuple(atoms)
        self.successors = successors
        self.predecessors = predecessors
        self._word_class = word_class  # normal-form table: (framing, word) -> atom
        self._succ_by_atom: dict[int, tuple[int, ...]] = {}
        for (i, _), j in sorted(successors.items()):
            self._succ_by_atom[i] = self._succ_by_atom.get(i, ()) + (j,)

    def atom_of_word(self, framing_index: int, word: Word) -> int | None:
        """Normal-form lookup for a bounded-length path word."""
        return self._word_class.get((framing_index, word))

    def successors_of(self, atom_index: int) -> tuple[int, ...]:
        return self._succ_by_atom.get(atom_index, ())

    def atoms_by_depth(self) -> dict[int, list[Atom]]:
        out: dict[int, list[Atom]] = {}
        for a in self.atoms:
            out.setdefault(a.depth, []).append(a)
        return out

    def depth_counts(self) -> list[int]:
        by_depth = self.atoms_by_depth()
        return [len(by_depth.get(d, [])) for d in range(self.depth_bound + 1)]


def build_atom_poset(q: QuiverWithPotential, depth_bound: int) -> AtomPoset:
    """Enumerate atoms to the depth bound, verifying the identification rule."""
    if depth_bound < 0:
        raise ValueError("depth_bound must be non-negative")
    basis = slope_lattice_basis(q)
    rank = len(basis)
    rules = cyclic_derivative_relations(q)
    arrow_weight = {
        a.name: tuple(b.weight(a.name) for b in basis) for a in q.arrows
    }

    atoms: list[Atom] = []
    successors: dict[tuple[int, str], int] = {}
    predecessors: dict[int, set[int]] = {}
    word_class: dict[tuple[int, Word], int] = {}

    def add_atom(framing_index, vertex, weight, depth, closure) -> int:
        canon = min(closure)
        idx = len(atoms)
        atoms.append(Atom(idx, framing_index, vertex, weight, depth, canon))
        predecessors[idx] = set()
        for w in closure:
            word_class[(framing_index, w)] = idx
        return idx

    frontier: list[int] = []
    for fi, v in enumerate(q.framings):
        idx = add_atom(fi, v, (0,) * rank, 0, frozenset({()}))
        frontier.append(idx)

    for depth in range(depth_bound):
        # Generate all one-arrow extensions of the canonical representatives.
        produced: dict[tuple[int, str, tuple[int, ...]], list[tuple[Word, int, str]]] = {}
        for ai in frontier:
            atom = atoms[ai]
            for arrow in q.arrows:
                if arrow.source != atom.vertex:
                    continue
                word = atom.word + (arrow.name,)
                weight = tuple(
                    wa + wb for wa, wb in zip(atom.weight, arrow_weight[arrow.name])
                )
                key = (atom.framing_index, arrow.target, weight)
                produced.setdefault(key, []).append((word, ai, arrow.name))
        new_frontier: list[int] = []
        for key in sorted(produced):
            fi, vertex, weight = key
            entries = sorted(produced[key])
            classes: list[frozenset[Word]] = []
            membership: dict[Word, int] = {}
            for word, _, _ in entries:
                if word in membership:
                    continue
                closure = _rewrite_closure(word, rules)
                for cls_index, cls in enumerate(classes):
                    if closure & cls:
                        raise NonConfluentError(
                            f"non-confluent relations at depth {depth + 1}: "
                            f"overlapping rewrite classes at vertex {vertex}"
                        )
                classes.append(closure)
                for w in closure:
                    membership[w] = len(classes) - 1
            if len(classes) > 1:
                # Two same-weight path classes would give a weight space of
                # dimension > 1: fixed points are then not monomial crystals.
                raise NonConfluentError(
                    f"non-confluent relations at depth {depth + 1}: "
                    f"{len(classes)} distinct path classes share vertex {vertex} "
                    f"and weight {weight}"
                )
            cls_atoms: dict[int, int] = {}
            for cls_index, cls in enumerate(classes):
                idx = add_atom(fi, vertex, weight, depth + 1, cls)
                cls_atoms[cls_index] = idx
                new_frontier.append(idx)
            for word, pred, arrow_name in entries:
                idx = cls_atoms[membership[word]]
                prev = successors.get((pred, arrow_name))
                if prev is not None and prev != idx:
                    raise NonConfluentError(
                        f"non-confluent relations at depth {depth + 1}: arrow "
                        f"{arrow_name} maps one atom to two distinct atoms"
                    )
                successors[(pred, arrow_name)] = idx
                predecessors[idx].add(pred)
        frontier = new_frontier

    preds = {i: frozenset(ps) for i, ps in predecessors.items()}
    return AtomPoset(q, depth_bound, basis, atoms, successors, preds, word_class)


# ---------------------------------------------------------------------------
# Order ideal enumeration


def _removable(poset: AtomPoset, ideal: frozenset[int]) -> list[int]:
    """Atoms of the ideal with no successor inside it (deletable maximal atoms)."""
    return [i for i in ideal if not any(s in ideal for s in poset.successors_of(i))]


def enumerate_crystals(poset: AtomPoset, max_size: int) -> list[MoltenCrystal]:
    """All order ideals of size <= max_size, each once, in canonical order."""
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    if poset.depth_bound < max_size:
        raise PosetDepthError(
            f"poset depth {poset.depth_bound} insufficient for crystals of size {max_size}"
        )
    atom_key = {a.index: a.sort_key() for a in poset.atoms}
    all_indices = sorted(atom_key, key=atom_key.get)

    def least_removable(ideal: frozenset[int]) -> int:
        return min(_removable(poset, ideal), key=atom_key.get)

    levels: list[list[frozenset[int]]] = [[frozenset()]]
    result = [MoltenCrystal(())]
    for size in range(1, max_size + 1):
        next_level: list[frozenset[int]] = []
        for ideal in levels[-1]:
            for cand in all_indices:
                if cand in ideal:
                    continue
                if not poset.predecessors[cand] <= ideal:
                    continue
                child = ideal | {cand}
                # canonical parent: only the least removable atom generates it
                if least_removable(child) == cand:
                    next_level.append(child)
        next_level.sort(key=lambda I: sorted(atom_key[i] for i in I))
        levels.append(next_level)
        result.extend(
            MoltenCrystal(tuple(sorted(I))) for I in next_level
        )
    return result


def crystal_counts_by_size(poset: AtomPoset, max_size: int) -> list[int]:
    crystals = enumerate_crystals(poset, max_size)
    counts = [0] * (max_size + 1)
    for c in crystals:
        counts[c.size] += 1
    return counts


def is_order_ideal(poset: AtomPoset, indices: Iterable[int]) -> bool:
    """Independent downward-closure check: every ancestor of a member is a member."""
    ideal = set(indices)
    for i in ideal:
        stack = list(poset.predecessors[i])
        while stack:
            p = stack.pop()
            if p not in ideal:
                return False
            stack.extend(poset.predecessors[p])
    return True


def crystal_weights(
    poset: AtomPoset, crystal: MoltenCrystal, s: Slope
) -> list[tuple[str, int]]:
    """Per-atom slope weights, tagged by vertex, as a sorted multiset."""
    coords = slope_coordinates(poset.quiver, poset.basis, s)
    out = []
    for i in crystal.atom_indices:
        atom = poset.atoms[i]
        w = sum(c * t for c, t in zip(coords, atom.weight))
        out.append((atom.vertex, w))
    return sorted(out)


def check_distinct_atom_keys(poset: AtomPoset, crystal: MoltenCrystal) -> bool:
    """Whether the crystal's atoms are pairwise distinct as (vertex, weight) pairs.

    Holds for all crystals small enough that no zero-weight cycle class fits
    inside them; checked as a property at tested sizes.
    """
    keys = [
        (poset.atoms[i].vertex, poset.atoms[i].weight) for i in crystal.atom_indices
    ]
    return len(set(keys)) == len(keys)
