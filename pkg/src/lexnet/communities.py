"""Modularity and greedy agglomerative community detection.

The greedy method starts from singleton communities and repeatedly merges
the connected community pair with the largest modularity gain, maintained
incrementally in a lazily invalidated heap. Merging continues until no
connected pair remains (each weakly connected component has collapsed to
one community); the partition reported is the best-Q state encountered
along the merge path. Isolated vertices never join a merge and stay
singleton communities.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptyGraphError, PartialAssignmentError, TooLargeError
from .graph import DiGraph, UGraph


def modularity(ug: UGraph, assignment: Sequence[int]) -> float:
    """Q = sum over communities of (e_c / m - (d_c / 2m)^2).

    e_c counts internal edges and d_c sums member degrees. The assignment
    must give a community to every node.
    """
    m = ug.edge_count
    if m == 0:
        raise EmptyGraphError("modularity is undefined without edges")
    n = ug.node_count
    if len(assignment) != n:
        raise PartialAssignmentError(f"assignment covers {len(assignment)} of {n} nodes")
    internal: dict[int, int] = {}
    degree_sum: dict[int, int] = {}
    for v in ug.node_ids():
        c = assignment[v]
        degree_sum[c] = degree_sum.get(c, 0) + ug.degree(v)
    for u, v in ug.edges():
        if assignment[u] == assignment[v]:
            c = assignment[u]
            internal[c] = internal.get(c, 0) + 1
    two_m = 2.0 * m
    q = 0.0
    for c, d_c in degree_sum.items():
        q += internal.get(c, 0) / m - (d_c / two_m) ** 2
    return q


@dataclass(frozen=True)
class Partition:
    """A total assignment of nodes to dense community indices, plus its Q."""

    assignment: tuple[int, ...]
    q: float

    @property
    def community_count(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    def communities(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.community_count)]
        for v, c in enumerate(self.assignment):
            groups[c].append(v)
        return groups


@dataclass(frozen=True)
class CnmMerge:
    a: int  # smaller community index at merge time
    b: int  # larger community index at merge time
    delta_q: float
    q_after: float


@dataclass(frozen=True)
class CnmTrace:
    """Full merge history of a greedy run, for auditing and replay."""

    node_count: int
    edge_count: int
    q_initial: float
    merges: tuple[CnmMerge, ...]
    best_index: int  # number of merges applied at the best-Q state
    best_q: float


def cnm_trace(ug: UGraph) -> CnmTrace:
    """Run the greedy agglomeration and record every merge.

    Community indices are the smallest original node id in the community;
    gain ties are broken by smallest, then second-smallest index. This
    makes the run fully deterministic for a given labeling (reports are
    byte-stable), at the price that relabeling nodes can resolve a gain
    tie differently and land on another local optimum.
    """
    m = ug.edge_count
    if m == 0:
        raise EmptyGraphError("community detection needs at least one edge")
    n = ug.node_count
    inv_m = 1.0 / m
    inv_2m2 = 1.0 / (2.0 * m * m)
    two_m = 2.0 * m

    comm_deg: dict[int, int] = {}
    label: dict[int, int] = {}
    nbr: dict[int, dict[int, int]] = {}
    q = 0.0
    for v in range(n):
        d = ug.degree(v)
        comm_deg[v] = d
        label[v] = v
        nbr[v] = {}
        q -= (d / two_m) ** 2
    for u, v in ug.edges():
        nbr[u][v] = 1
        nbr[v][u] = 1

    # heap entries: (-dq, label_a, label_b, a, b, e_ab, deg_a, deg_b) with
    # label_a < label_b; an entry is stale as soon as either community's
    # degree sum changed (every merge strictly increases it).
    heap: list[tuple] = []
    for u, v in ug.edges():
        du = comm_deg[u]
        dv = comm_deg[v]
        dq = inv_m - du * dv * inv_2m2
        heap.append((-dq, u, v, u, v, 1, du, dv))
    heapq.heapify(heap)

    q_initial = q
    best_q = q
    best_index = 0
    merge_rows: list[tuple[int, int, float, float]] = []
    heappop = heapq.heappop
    heappush = heapq.heappush
    deg_of = comm_deg.get

    while heap:
        neg_dq, la, lb, a, b, e, da, db = heappop(heap)
        if deg_of(a) != da or deg_of(b) != db:
            continue
        if nbr[a].get(b) != e:
            continue
        dq = e * inv_m - da * db * inv_2m2
        q += dq

        if len(nbr[a]) <= len(nbr[b]):
            small, big = a, b
        else:
            small, big = b, a
        small_nbrs = nbr.pop(small)
        big_nbrs = nbr[big]
        del small_nbrs[big]
        del big_nbrs[small]
        for x, ex in small_nbrs.items():
            x_nbrs = nbr[x]
            del x_nbrs[small]
            merged = big_nbrs.get(x, 0) + ex
            big_nbrs[x] = merged
            x_nbrs[big] = merged
        d_big = da + db
        comm_deg[big] = d_big
        del comm_deg[small]
        label[big] = la  # la < lb by construction
        del label[small]

        merge_rows.append((la, lb, dq, q))
        if q > best_q:
            best_q = q
            best_index = len(merge_rows)

        for x, ex in big_nbrs.items():
            dx = comm_deg[x]
            lx = label[x]
            ndq = ex * inv_m - d_big * dx * inv_2m2
            if la < lx:
                heappush(heap, (-ndq, la, lx, big, x, ex, d_big, dx))
            else:
                heappush(heap, (-ndq, lx, la, x, big, ex, dx, d_big))

    merges = tuple(CnmMerge(*row) for row in merge_rows)
    return CnmTrace(n, m, q_initial, merges, best_index, best_q)


def assignment_after(n: int, merges: Sequence[CnmMerge], steps: int) -> tuple[int, ...]:
    """Replay the first ``steps`` merges and return the dense assignment.

    Communities are indexed 0..c-1 in order of their smallest member.
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(steps):
        ra, rb = find(merges[k].a), find(merges[k].b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            parent[rb] = ra
    roots = [find(v) for v in range(n)]
    index_of: dict[int, int] = {}
    for v in range(n):  # roots carry the smallest member id, so id order works
        r = roots[v]
        if r not in index_of:
            index_of[r] = len(index_of)
    return tuple(index_of[r] for r in roots)


def cnm_communities(ug: UGraph) -> Partition:
    """Greedy modularity communities: the best-Q state of the merge path."""
    trace = cnm_trace(ug)
    assignment = assignment_after(trace.node_count, trace.merges, trace.best_index)
    return Partition(assignment, modularity(ug, assignment))


# -- exhaustive oracle ----------------------------------------------------------


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of 0..n-1 as canonical strings, in lexicographic order."""
    if n == 0:
        return
    a = [0] * n

    def rec(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, mx if v <= mx else v)

    yield from rec(1, 0)


def brute_force_best_partition(ug: UGraph) -> tuple[tuple[int, ...], float]:
    """Exhaustive modularity maximum over all set partitions (n <= 12).

    On ties the lexicographically smallest restricted-growth string wins,
    so the representative is deterministic.
    """
    n = ug.node_count
    if n > 12:
        raise TooLargeError(f"exhaustive search is guarded at 12 nodes, got {n}")
    m = ug.edge_count
    if m == 0:
        raise EmptyGraphError("modularity is undefined without edges")
    deg = [ug.degree(v) for v in range(n)]
    edges = list(ug.edges())
    two_m = 2.0 * m
    best_q = -float("inf")
    best: tuple[int, ...] | None = None
    for rgs in restricted_growth_strings(n):
        c = max(rgs) + 1
        internal = [0] * c
        degree_sum = [0] * c
        for v in range(n):
            degree_sum[rgs[v]] += deg[v]
        for u, v in edges:
            if rgs[u] == rgs[v]:
                internal[rgs[u]] += 1
        q = 0.0
        for i in range(c):
            q += internal[i] / m - (degree_sum[i] / two_m) ** 2
        if q > best_q:
            best_q = q
            best = rgs
    assert best is not None
    return best, best_q


# -- the reduced-network workflow ------------------------------------------------


@dataclass(frozen=True)
class MainCommunity:
    index: int
    size: int
    members: tuple[str, ...]  # slugs, sorted


@dataclass(frozen=True)
class CommunityReport:
    """Partition of the network left after discarding the rich club."""

    partition: Partition
    slugs: tuple[str, ...]  # reduced-graph node order
    main_communities: tuple[MainCommunity, ...]
    residual: tuple[str, ...]
    min_size: int

    def assignment_by_slug(self) -> dict[str, int]:
        return {slug: self.partition.assignment[v] for v, slug in enumerate(self.slugs)}


def reduced_network_partition(
    g: DiGraph, rich_club: Iterable[int], min_size: int = 4
) -> CommunityReport:
    """Remove the rich club, project to undirected, and partition the rest.

    Communities of size >= min_size are reported as main communities,
    ordered by size descending then smallest member slug; everything else
    lands in the residual set.
    """
    club = set(rich_club)
    reduced, _ = g.remove_nodes(club)
    ug = reduced.undirected_projection()
    partition = cnm_communities(ug)
    slugs = tuple(lab.slug for lab in reduced.labels)

    groups = partition.communities()
    main = []
    residual: list[str] = []
    for index, members in enumerate(groups):
        member_slugs = tuple(sorted(slugs[v] for v in members))
        if len(members) >= min_size:
            main.append(MainCommunity(index, len(members), member_slugs))
        else:
            residual.extend(member_slugs)
    main.sort(key=lambda c: (-c.size, c.members[0]))
    return CommunityReport(
        partition=partition,
        slugs=slugs,
        main_communities=tuple(main),
        residual=tuple(sorted(residual)),
        min_size=min_size,
    )
