"""Diagram partitions, their product, and their structural invariants.

An element of the partition monoid on n strands is a set partition of 2n
points: n on an upper row and n on a lower row.  We store the points as
plain integers 0..2n-1, where i < n encodes the upper point i+1 and n+i
encodes the lower point (i+1)'.  With that encoding a diagram is nothing
but a set partition, and the canonical form (each block sorted ascending,
blocks ordered by their minimum) makes equality, hashing and text output
cheap.  n = 0 is legal and denotes the empty diagram.

Multiplication stacks two diagrams: the lower row of the first is glued to
the upper row of the second, and the product blocks are read off the
connected components of the resulting three-row graph.  Components trapped
entirely in the glued middle row leave no trace in the product; their count
is returned alongside it, because the twisted variants of the diagram
algebra raise a scalar to exactly that power.

Human-readable labels (the text format, kernels, domains) are 1-based:
upper points are written 1..n and lower points 1'..n'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import (
    CoverageError,
    DimensionMismatchError,
    DomainError,
    EmptyBlockError,
    NotDecomposableError,
    NotPartialBrauerError,
    OverlapError,
    VertexRangeError,
)

Block = tuple[int, ...]


class MonoidFamily(str, Enum):
    """Selector for the monoid a computation is about.

    P is the full partition monoid, B the Brauer monoid (all blocks of size
    exactly 2), PB the partial Brauer monoid (blocks of size at most 2).
    T, I and IDUAL are the copies of the full transformation monoid, the
    symmetric inverse monoid and its dual that sit inside P: full upper
    domain with discrete lower kernel, both kernels discrete, and both
    domains full, respectively.
    """

    P = "P"
    B = "B"
    PB = "PB"
    T = "T"
    I = "I"  # noqa: E741 - the family really is called I
    IDUAL = "Idual"


@dataclass(frozen=True, slots=True)
class DiagramPartition:
    """A set partition of {0,..,2n-1} held in canonical form.

    Instances are produced by make_partition / parse_diagram / multiply and
    are assumed canonical; the constructor itself does not validate.
    """

    n: int
    blocks: tuple[Block, ...]

    def __str__(self) -> str:
        return format_diagram(self)

    def block_of(self, vertex: int) -> Block:
        for blk in self.blocks:
            if vertex in blk:
                return blk
        raise VertexRangeError(f"vertex {vertex} not on this diagram")


@dataclass(frozen=True, slots=True)
class EquivalenceRelation:
    """A partition of {1,..,n}, canonical like diagram blocks."""

    n: int
    classes: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_classes(n: int, classes: Iterable[Iterable[int]]) -> "EquivalenceRelation":
        canon = sorted(tuple(sorted(c)) for c in classes)
        seen: set[int] = set()
        for cls in canon:
            if not cls:
                raise EmptyBlockError("equivalence class with no members")
            for x in cls:
                if not 1 <= x <= n:
                    raise VertexRangeError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise OverlapError(f"point {x} in two classes")
                seen.add(x)
        if len(seen) != n:
            raise CoverageError("classes do not cover 1..n")
        return EquivalenceRelation(n, tuple(canon))

    @staticmethod
    def discrete(n: int) -> "EquivalenceRelation":
        return EquivalenceRelation(n, tuple((i,) for i in range(1, n + 1)))

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def class_index(self) -> dict[int, int]:
        """Map each point to the position of its class in the canonical list."""
        out: dict[int, int] = {}
        for i, cls in enumerate(self.classes):
            for x in cls:
                out[x] = i
        return out

    def join(self, other: "EquivalenceRelation") -> "EquivalenceRelation":
        """Smallest equivalence containing both: transitive closure of the union.

        Computed by seeding a disjoint-set structure with both class lists.
        """
        if self.n != other.n:
            raise DimensionMismatchError(f"join of relations on {self.n} and {other.n} points")
        parent = list(range(self.n + 1))
        for rel in (self, other):
            for cls in rel.classes:
                head = cls[0]
                for x in cls[1:]:
                    _union(parent, head, x)
        groups: dict[int, list[int]] = {}
        for x in range(1, self.n + 1):
            groups.setdefault(_find(parent, x), []).append(x)
        return EquivalenceRelation(self.n, tuple(sorted(tuple(g) for g in groups.values())))


@dataclass(frozen=True, slots=True)
class StructuralProfile:
    """Rank, domains and kernels of a diagram, all in 1-based point labels."""

    rank: int
    upper_domain: frozenset[int]
    lower_domain: frozenset[int]
    upper_kernel: EquivalenceRelation
    lower_kernel: EquivalenceRelation
    kernel: EquivalenceRelation


@dataclass(frozen=True, slots=True)
class LambdaGraph:
    """Two-colored, loop-decorated graph on the points 1..n of a partial
    Brauer element.

    Red records the upper row: an edge for each 2-point upper block, a loop
    at each singleton upper block.  Blue does the same for the lower row.
    A vertex with no red item is an upper transversal endpoint (likewise
    blue/lower).  Every vertex carries at most one red and at most one blue
    item; edge and loop lists are kept sorted so the graph is hashable and
    canonical.
    """

    n: int
    red_edges: tuple[tuple[int, int], ...]
    red_loops: tuple[int, ...]
    blue_edges: tuple[tuple[int, int], ...]
    blue_loops: tuple[int, ...]

    def upper_half(self) -> tuple[int, tuple[tuple[int, int], ...], tuple[int, ...]]:
        return (self.n, self.red_edges, self.red_loops)

    def lower_half(self) -> tuple[int, tuple[tuple[int, int], ...], tuple[int, ...]]:
        return (self.n, self.blue_edges, self.blue_loops)


# --------------------------------------------------------------------------
# small disjoint-set helpers (path halving + naive linking; the structures
# here are tiny and operation-local, so union by size buys nothing)

def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], x: int, y: int) -> None:
    rx, ry = _find(parent, x), _find(parent, y)
    if rx != ry:
        parent[ry] = rx


# --------------------------------------------------------------------------
# construction and text format

def make_partition(n: int, blocks: Iterable[Iterable[int]]) -> DiagramPartition:
    """Validate raw blocks as a partition of {0,..,2n-1} and canonicalize.

    Raises EmptyBlockError, VertexRangeError, OverlapError or CoverageError
    when the input is not a partition.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    seen = bytearray(2 * n)
    canon: list[Block] = []
    for raw in blocks:
        blk = tuple(sorted(set(raw)))
        if not blk:
            raise EmptyBlockError("empty block")
        for v in blk:
            if not 0 <= v < 2 * n:
                raise VertexRangeError(f"vertex {v} outside 0..{2 * n - 1}")
            if seen[v]:
                raise OverlapError(f"vertex {v} appears in two blocks")
            seen[v] = 1
        canon.append(blk)
    for v in range(2 * n):
        if not seen[v]:
            raise CoverageError(f"vertex {v} is in no block")
    canon.sort()  # blocks are disjoint, so this orders them by minimum
    return DiagramPartition(n, tuple(canon))


def identity(n: int) -> DiagramPartition:
    """The identity diagram: each upper point joined to its lower twin."""
    return DiagramPartition(n, tuple((i, n + i) for i in range(n)))


_POINT = re.compile(r"(\d+)\s*('?)")


def format_diagram(a: DiagramPartition) -> str:
    """Canonical text form, e.g. ``1,4|2,3,4',5'|5,6|1',3',6'|2'``.

    The empty diagram (n=0) formats as the empty string.
    """
    n = a.n
    return "|".join(
        ",".join(str(v + 1) if v < n else f"{v - n + 1}'" for v in blk) for blk in a.blocks
    )


def parse_diagram(text: str) -> DiagramPartition:
    """Parse the text form back into a diagram.

    Whitespace around points and separators is ignored.  n is inferred from
    the largest point label; every point 1..n and 1'..n' must occur exactly
    once, enforced by make_partition.
    """
    stripped = text.strip()
    if not stripped:
        return DiagramPartition(0, ())
    raw: list[list[tuple[int, bool]]] = []
    n = 0
    for chunk in stripped.split("|"):
        blk: list[tuple[int, bool]] = []
        for token in chunk.split(","):
            token = token.strip()
            m = _POINT.fullmatch(token)
            if not m or int(m.group(1)) < 1:
                raise DomainError(f"cannot parse point {token!r}")
            label = int(m.group(1))
            n = max(n, label)
            blk.append((label, m.group(2) == "'"))
        raw.append(blk)
    return make_partition(
        n, [[label - 1 + (n if primed else 0) for label, primed in blk] for blk in raw]
    )


# --------------------------------------------------------------------------
# the product

def multiply(a: DiagramPartition, b: DiagramPartition) -> tuple[DiagramPartition, int]:
    """Product diagram together with the number of components that the
    gluing traps entirely in the middle row.

    The three-row graph lives on 3n nodes: 0..n-1 is the top row (upper
    points of ``a``), n..2n-1 the middle row (lower points of ``a`` glued to
    upper points of ``b``), 2n..3n-1 the bottom row (lower points of ``b``).
    ``a``'s encoded vertices map to nodes unchanged; ``b``'s shift up by n.
    Product blocks are the nonempty traces of components on top and bottom.
    """
    if a.n != b.n:
        raise DimensionMismatchError(f"product of diagrams on {a.n} and {b.n} strands")
    n = a.n
    parent = list(range(3 * n))
    for blk in a.blocks:
        head = blk[0]
        for v in blk[1:]:
            _union(parent, head, v)
    for blk in b.blocks:
        head = blk[0] + n
        for v in blk[1:]:
            _union(parent, head, v + n)

    groups: dict[int, list[int]] = {}
    for v in range(3 * n):
        groups.setdefault(_find(parent, v), []).append(v)

    blocks: list[Block] = []
    swallowed = 0
    for members in groups.values():
        # members is ascending, so the trace below is already sorted:
        # top nodes keep their index (< n), bottom nodes shift to n..2n-1.
        trace = tuple(v if v < n else v - n for v in members if v < n or v >= 2 * n)
        if trace:
            blocks.append(trace)
        else:
            swallowed += 1
    blocks.sort()
    return DiagramPartition(n, tuple(blocks)), swallowed


# --------------------------------------------------------------------------
# structural invariants

def profile(a: DiagramPartition) -> StructuralProfile:
    """Rank, upper/lower domains, upper/lower kernels, and their join."""
    n = a.n
    upper_classes: list[tuple[int, ...]] = []
    lower_classes: list[tuple[int, ...]] = []
    upper_dom: list[int] = []
    lower_dom: list[int] = []
    rank = 0
    for blk in a.blocks:
        uppers = tuple(v + 1 for v in blk if v < n)
        lowers = tuple(v - n + 1 for v in blk if v >= n)
        if uppers:
            upper_classes.append(uppers)
        if lowers:
            lower_classes.append(lowers)
        if uppers and lowers:
            rank += 1
            upper_dom.extend(uppers)
            lower_dom.extend(lowers)
    upper_kernel = EquivalenceRelation(n, tuple(sorted(upper_classes)))
    lower_kernel = EquivalenceRelation(n, tuple(sorted(lower_classes)))
    return StructuralProfile(
        rank=rank,
        upper_domain=frozenset(upper_dom),
        lower_domain=frozenset(lower_dom),
        upper_kernel=upper_kernel,
        lower_kernel=lower_kernel,
        kernel=upper_kernel.join(lower_kernel),
    )


def decompose_irreducible(
    a: DiagramPartition,
) -> list[tuple[tuple[int, ...], DiagramPartition]]:
    """Split a diagram into its restrictions along the kernel classes.

    Returns (class, restriction) pairs in canonical class order, each
    restriction re-indexed to its own ground set 1..m.  Joining the pieces
    back along the classes reconstructs the input.  Raises
    NotDecomposableError when some block has points in two kernel classes,
    which happens exactly for the non-idempotent-shaped elements.
    """
    n = a.n
    classes = profile(a).kernel.classes
    class_of: dict[int, int] = {}
    position: dict[int, int] = {}
    for ci, cls in enumerate(classes):
        for j, x in enumerate(cls):
            class_of[x] = ci
            position[x] = j
    pieces: list[list[Block]] = [[] for _ in classes]
    for blk in a.blocks:
        ground = [(v + 1) if v < n else (v - n + 1) for v in blk]
        owners = {class_of[x] for x in ground}
        if len(owners) != 1:
            raise NotDecomposableError(
                f"block {{{','.join(str(v + 1) if v < n else str(v - n + 1) + chr(39) for v in blk)}}}"
                f" straddles kernel classes"
            )
        ci = owners.pop()
        m = len(classes[ci])
        pieces[ci].append(
            tuple(sorted(position[x] if v < n else m + position[x] for v, x in zip(blk, ground)))
        )
    return [
        (classes[ci], DiagramPartition(len(classes[ci]), tuple(sorted(piece))))
        for ci, piece in enumerate(pieces)
    ]


def family_check(a: DiagramPartition, f: MonoidFamily) -> bool:
    """Membership predicate for the six families."""
    if f is MonoidFamily.P:
        return True
    if f is MonoidFamily.B:
        return all(len(blk) == 2 for blk in a.blocks)
    if f is MonoidFamily.PB:
        return all(len(blk) <= 2 for blk in a.blocks)
    prof = profile(a)
    full = frozenset(range(1, a.n + 1))
    if f is MonoidFamily.T:
        return prof.upper_domain == full and prof.lower_kernel.is_discrete()
    if f is MonoidFamily.I:
        return prof.upper_kernel.is_discrete() and prof.lower_kernel.is_discrete()
    if f is MonoidFamily.IDUAL:
        return prof.upper_domain == full and prof.lower_domain == full
    raise DomainError(f"unknown family {f!r}")


def lambda_graph(a: DiagramPartition) -> LambdaGraph:
    """The two-colored graph of a partial Brauer element.

    Red edge for each 2-point upper block, red loop at each singleton upper
    block; blue likewise on the lower row.  Points sitting in transversal
    blocks get no item of that color.
    """
    n = a.n
    red_edges: list[tuple[int, int]] = []
    red_loops: list[int] = []
    blue_edges: list[tuple[int, int]] = []
    blue_loops: list[int] = []
    for blk in a.blocks:
        if len(blk) > 2:
            raise NotPartialBrauerError(
                f"block of size {len(blk)} (partial Brauer blocks have at most 2 points)"
            )
        uppers = [v + 1 for v in blk if v < n]
        lowers = [v - n + 1 for v in blk if v >= n]
        if len(uppers) == 2:
            red_edges.append((uppers[0], uppers[1]))
        elif len(blk) == 1 and uppers:
            red_loops.append(uppers[0])
        if len(lowers) == 2:
            blue_edges.append((lowers[0], lowers[1]))
        elif len(blk) == 1 and lowers:
            blue_loops.append(lowers[0])
    return LambdaGraph(
        n,
        tuple(sorted(red_edges)),
        tuple(sorted(red_loops)),
        tuple(sorted(blue_edges)),
        tuple(sorted(blue_loops)),
    )


def iter_points(a: DiagramPartition) -> Iterator[int]:
    """All encoded vertices of the diagram in ascending order."""
    return iter(range(2 * a.n))
