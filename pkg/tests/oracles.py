"""Independent brute-force oracles used to pin down expected values.

Nothing here imports the enumeration or rewriting machinery under test:
plane partitions are enumerated as column-height arrays, pyramid partitions
as order ideals of an explicitly constructed stone arrangement, cycles by
exhaustive path search, and order ideals by unrestricted grow-and-dedupe.
"""

from __future__ import annotations

from itertools import product


def plane_partitions_of(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All plane partitions of n as weakly decreasing height arrays."""
    if n == 0:
        return [()]
    results = []

    def rows_fitting(total: int, max_row: tuple[int, ...] | None, width: int):
        # weakly decreasing rows of sum total, entrywise <= max_row when given
        def rec(remaining: int, prev: int, pos: int, row: list[int]):
            if remaining == 0:
                yield tuple(row)
                return
            if pos >= width:
                return
            cap = min(remaining, prev)
            if max_row is not None:
                cap = min(cap, max_row[pos] if pos < len(max_row) else 0)
            for v in range(cap, 0, -1):
                row.append(v)
                yield from rec(remaining - v, v, pos + 1, row)
                row.pop()

        yield from rec(total, total, 0, [])

    def build(remaining: int, above: tuple[int, ...] | None, rows: list[tuple[int, ...]]):
        if remaining == 0:
            results.append(tuple(rows))
            return
        width = remaining if above is None else len(above)
        for total in range(remaining, 0, -1):
            for row in rows_fitting(total, above, width):
                rows.append(row)
                build(remaining - total, row, rows)
                rows.pop()

    build(n, None, [])
    return results


def plane_partition_count(n: int) -> int:
    return len(plane_partitions_of(n))


def pyramid_poset(depth: int):
    """Explicit conifold pyramid: stones with coordinates and resting relations.

    Even layer 2k holds (k+1)^2 stones (i, j) with 0 <= i, j <= k; odd layer
    2k+1 holds (k+1)(k+2) stones with 0 <= i <= k, 0 <= j <= k+1.  A stone in
    an odd layer rests on the stones directly beneath it at (i, j-1) and
    (i, j); a stone in an even positive layer rests on (i-1, j) and (i, j).
    Returns (stone list, predecessor map by stone index).
    """
    stones: dict[tuple[int, int, int], int] = {}
    for layer in range(depth + 1):
        k = layer // 2
        jmax = k + 1 if layer % 2 == 1 else k
        for i in range(k + 1):
            for j in range(jmax + 1):
                stones[(layer, i, j)] = len(stones)
    preds = {idx: set() for idx in stones.values()}
    for (layer, i, j), idx in stones.items():
        if layer == 0:
            continue
        below = ((i, j - 1), (i, j)) if layer % 2 == 1 else ((i - 1, j), (i, j))
        for ii, jj in below:
            key = (layer - 1, ii, jj)
            if key in stones:
                preds[idx].add(stones[key])
    return list(stones), preds


def order_ideal_counts(preds: dict[int, set[int]], max_size: int) -> list[int]:
    """Grow ideals by any addable element, deduplicating by set equality."""
    frontier = {frozenset()}
    counts = [1]
    elements = list(preds)
    for _ in range(max_size):
        nxt = set()
        for ideal in frontier:
            for e in elements:
                if e not in ideal and preds[e] <= ideal:
                    nxt.add(ideal | {e})
        counts.append(len(nxt))
        frontier = nxt
    return counts


def pyramid_partition_counts(max_size: int) -> list[int]:
    _, preds = pyramid_poset(max_size)
    return order_ideal_counts(preds, max_size)


def simple_cycles_bruteforce(q, max_len: int) -> set[tuple[str, ...]]:
    """All vertex-simple closed paths up to rotation, by exhaustive path search."""
    arrows_by_name = {a.name: a for a in q.arrows}
    found = set()

    def canon(word):
        return min(word[i:] + word[:i] for i in range(len(word)))

    def walk(start, current, path, visited):
        for a in q.arrows:
            if a.source != current:
                continue
            if a.target == start:
                word = tuple(path + [a.name])
                verts = [arrows_by_name[n].source for n in word]
                if len(set(verts)) == len(verts):
                    found.add(canon(word))
            if len(path) + 1 < max_len and a.target != start and a.target not in visited:
                walk(start, a.target, path + [a.name], visited | {a.target})

    for v in q.vertices:
        walk(v, v, [], {v})
    return found


# Hand-checked reference values.

PLANE_PARTITION_COUNTS = [1, 1, 3, 6, 13, 24, 48, 86]
PYRAMID_PARTITION_COUNTS = [1, 1, 2, 5, 10, 18, 32, 59]
