"""Naive reference implementations the tests trust more than the package.

Everything here is written the slowest, most obvious way, with different
algorithms than the package uses: set partitions by recursive insertion
(the package generates restricted growth strings), products by breadth
first search over an explicit adjacency map (the package uses union-find),
involutions by filtering permutations.  Expected values in the tests were
computed with these and then frozen.
"""

from __future__ import annotations

from itertools import permutations

from diagmon.core import DiagramPartition


def set_partitions(items: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All set partitions of the given items, by inserting one at a time."""
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out: list[tuple[tuple[int, ...], ...]] = []
    for smaller in set_partitions(rest):
        for i, block in enumerate(smaller):
            out.append(smaller[:i] + (tuple(sorted((first,) + block)),) + smaller[i + 1 :])
        out.append(((first,),) + smaller)
    return [tuple(sorted(p)) for p in out]


def bfs_components(vertices: list[int], edges: list[tuple[int, int]]) -> list[set[int]]:
    adjacency: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    seen: set[int] = set()
    components = []
    for start in vertices:
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        component = {start}
        while queue:
            x = queue.pop()
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    component.add(y)
                    queue.append(y)
        components.append(component)
    return components


def naive_multiply(a: DiagramPartition, b: DiagramPartition) -> tuple[DiagramPartition, int]:
    """Product and middle-component count via explicit graph search.

    Same three-row construction as the package (top 0..n-1, middle n..2n-1,
    bottom 2n..3n-1) but with clique edges and breadth first search instead
    of union-find.
    """
    assert a.n == b.n
    n = a.n
    edges: list[tuple[int, int]] = []
    for blk in a.blocks:
        edges.extend((blk[0], v) for v in blk[1:])
    for blk in b.blocks:
        edges.extend((blk[0] + n, v + n) for v in blk[1:])
    middle_only = 0
    blocks = []
    for component in bfs_components(list(range(3 * n)), edges):
        trace = sorted(v if v < n else v - n for v in component if v < n or v >= 2 * n)
        if trace:
            blocks.append(tuple(trace))
        else:
            middle_only += 1
    return DiagramPartition(n, tuple(sorted(blocks))), middle_only


def naive_is_idempotent(a: DiagramPartition) -> bool:
    return naive_multiply(a, a)[0] == a


def naive_join(
    n: int,
    left: tuple[tuple[int, ...], ...],
    right: tuple[tuple[int, ...], ...],
) -> tuple[tuple[int, ...], ...]:
    """Join of two partitions of {1..n} via component search."""
    edges: list[tuple[int, int]] = []
    for blocks in (left, right):
        for blk in blocks:
            edges.extend((blk[0], v) for v in blk[1:])
    components = bfs_components(list(range(1, n + 1)), edges)
    return tuple(sorted(tuple(sorted(c)) for c in components))


def naive_e_nrs(n: int) -> dict[tuple[int, int], int]:
    """Counts of partition pairs with a one-class join, keyed by block counts."""
    everything = set_partitions(tuple(range(1, n + 1)))
    out: dict[tuple[int, int], int] = {}
    for upper in everything:
        for lower in everything:
            if len(naive_join(n, upper, lower)) == 1:
                key = (len(upper), len(lower))
                out[key] = out.get(key, 0) + 1
    return out


def naive_involutions(n: int) -> int:
    """Permutations equal to their own inverse, counted one by one."""
    return sum(
        1
        for p in permutations(range(n))
        if all(p[p[i]] == i for i in range(n))
    )


def naive_stirling2(n: int, r: int) -> int:
    return sum(1 for p in set_partitions(tuple(range(n))) if len(p) == r)
