import pytest

from dtloc.crystal import (
    build_atom_poset,
    check_distinct_atom_keys,
    crystal_counts_by_size,
    crystal_weights,
    enumerate_crystals,
    is_order_ideal,
)
from dtloc.errors import PosetDepthError, UnsupportedPotentialError
from dtloc.quiver import builtin_quiver, parse_quiver, slope_from_values

from oracles import (
    PLANE_PARTITION_COUNTS,
    PYRAMID_PARTITION_COUNTS,
    order_ideal_counts,
    plane_partition_count,
    pyramid_partition_counts,
)


def test_c3_atom_counts_per_depth():
    poset = build_atom_poset(builtin_quiver("c3"), 3)
    assert poset.depth_counts() == [1, 3, 6, 10]


def test_single_loop_poset_is_chain():
    poset = build_atom_poset(builtin_quiver("loop1"), 4)
    assert poset.depth_counts() == [1, 1, 1, 1, 1]
    for atom in poset.atoms:
        assert len(poset.predecessors[atom.index]) == (0 if atom.depth == 0 else 1)


def test_conifold_atom_counts_follow_pyramid_layers():
    # pyramid layers grow 1, 2, 4, 6, 9, ...; the depth-3 identifications
    # merge the 8 words into 6 atoms
    poset = build_atom_poset(builtin_quiver("conifold"), 4)
    assert poset.depth_counts() == [1, 2, 4, 6, 9]


def test_conifold_relation_atoms_have_two_predecessors():
    poset = build_atom_poset(builtin_quiver("conifold"), 3)
    # atoms of depth 3 containing both a1 and a2 come from merged words
    merged = [
        a
        for a in poset.atoms
        if a.depth == 3 and len(poset.predecessors[a.index]) == 2
    ]
    assert len(merged) == 2


def test_c3_crystal_counts_match_plane_partitions():
    poset = build_atom_poset(builtin_quiver("c3"), 6)
    counts = crystal_counts_by_size(poset, 6)
    assert counts == [plane_partition_count(n) for n in range(7)]
    assert counts == PLANE_PARTITION_COUNTS[:7]


def test_single_loop_one_crystal_per_size():
    poset = build_atom_poset(builtin_quiver("loop1"), 5)
    assert crystal_counts_by_size(poset, 5) == [1] * 6


def test_conifold_crystal_counts_match_pyramid_oracle():
    poset = build_atom_poset(builtin_quiver("conifold"), 5)
    counts = crystal_counts_by_size(poset, 5)
    assert counts == pyramid_partition_counts(5)
    assert counts == PYRAMID_PARTITION_COUNTS[:6]


def test_enumeration_matches_unrestricted_ideal_search():
    for model in ("c3", "conifold"):
        poset = build_atom_poset(builtin_quiver(model), 4)
        preds = {a.index: set(poset.predecessors[a.index]) for a in poset.atoms}
        assert crystal_counts_by_size(poset, 4) == order_ideal_counts(preds, 4)


def test_enumeration_deterministic():
    q = builtin_quiver("conifold")
    a = enumerate_crystals(build_atom_poset(q, 4), 4)
    b = enumerate_crystals(build_atom_poset(q, 4), 4)
    assert [c.atom_indices for c in a] == [c.atom_indices for c in b]


def test_crystals_are_order_ideals():
    poset = build_atom_poset(builtin_quiver("conifold"), 4)
    for c in enumerate_crystals(poset, 4):
        assert is_order_ideal(poset, c.atom_indices)
        # ancestor containment, re-derived atom by atom
        for i in c.atom_indices:
            for p in poset.predecessors[i]:
                assert p in c.atom_indices


def test_monotone_growth():
    poset = build_atom_poset(builtin_quiver("c3"), 5)
    by_size = {}
    for c in enumerate_crystals(poset, 5):
        by_size.setdefault(c.size, set()).add(frozenset(c.atom_indices))
    for n in range(1, 6):
        for ideal in by_size[n]:
            parents = [
                ideal - {i}
                for i in ideal
                if not any(s in ideal for s in poset.successors_of(i))
            ]
            assert any(frozenset(p) in by_size[n - 1] for p in parents)


def test_atoms_distinct_as_vertex_weight_pairs():
    for model in ("c3", "conifold"):
        poset = build_atom_poset(builtin_quiver(model), 6)
        for c in enumerate_crystals(poset, 6):
            assert check_distinct_atom_keys(poset, c)


def test_crystal_weights_examples():
    q = builtin_quiver("c3")
    poset = build_atom_poset(q, 2)
    s = slope_from_values(q, [1, 1, -2])
    crystals = enumerate_crystals(poset, 2)
    size2 = [c for c in crystals if c.size == 2]
    weight_sets = sorted(
        tuple(w for _, w in crystal_weights(poset, c, s)) for c in size2
    )
    # the three two-atom crystals add one box along x, y or z
    assert weight_sets == [(-2, 0), (0, 1), (0, 1)]
    zero = slope_from_values(q, [0, 0, 0])
    for c in crystals:
        assert all(w == 0 for _, w in crystal_weights(poset, c, zero))


def test_crystal_weights_tag_vertices():
    q = builtin_quiver("conifold")
    poset = build_atom_poset(q, 2)
    s = slope_from_values(q, [1, 2, 3, -6])
    crystals = [c for c in enumerate_crystals(poset, 2) if c.size == 2]
    tags = sorted(crystal_weights(poset, c, s) for c in crystals)
    assert tags == [[("n1", 0), ("n2", 1)], [("n1", 0), ("n2", 2)]]


def test_insufficient_depth_rejected():
    poset = build_atom_poset(builtin_quiver("c3"), 2)
    with pytest.raises(PosetDepthError):
        enumerate_crystals(poset, 3)


def test_non_binomial_potential_rejected():
    doc = """
    vertex u
    arrow x u u ;
    arrow y u u ;
    potential + x x ;
    potential + x y ;
    framing u
    """
    with pytest.raises(UnsupportedPotentialError):
        build_atom_poset(parse_quiver(doc), 2)


def test_inhomogeneous_relation_rejected():
    # the derivative along x equates a length-2 word with a length-1 word
    doc = """
    vertex u
    arrow x u u ;
    arrow y u u ;
    arrow z u u ;
    arrow w u u ;
    potential + x y z ;
    potential - x w ;
    framing u
    """
    with pytest.raises(UnsupportedPotentialError, match="different length"):
        build_atom_poset(parse_quiver(doc), 2)


def test_free_two_loops_rejected_as_non_monomial():
    # with no relations the words xy and yx span a two-dimensional weight
    # space: fixed points are not monomial crystals, so the engine refuses
    doc = """
    vertex u
    arrow x u u ;
    arrow y u u ;
    framing u
    """
    from dtloc.errors import NonConfluentError

    q = parse_quiver(doc)
    assert build_atom_poset(q, 1).depth_counts() == [1, 2]
    with pytest.raises(NonConfluentError, match="depth 2"):
        build_atom_poset(q, 2)


def test_free_parallel_arrows_distinct_weights_ok():
    doc = """
    vertex u
    vertex w
    arrow p u w ;
    arrow r u w ;
    framing u
    """
    poset = build_atom_poset(parse_quiver(doc), 2)
    assert poset.depth_counts() == [1, 2, 0]
