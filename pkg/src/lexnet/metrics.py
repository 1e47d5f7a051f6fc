"""Degree statistics, vertex roles, rich-club analysis, clustering and paths.

All statistics use the unweighted citation relation (a link exists once a
code cites another at least once); citation multiplicities only enter the
explicitly weighted variants.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import (
    BadKError,
    DegenerateGraphError,
    NullModelDegenerateError,
    UndefinedCoefficientError,
)
from .graph import DiGraph, NodeId, UGraph
from .seeding import derive_seed


class Role(str, Enum):
    """Structural role of a vertex, by precedence.

    isolated (no arcs) beats pendant (exactly one incident arc), which
    beats source_only (cites but is never cited) and sink_only (cited but
    never citing); everything else is ordinary.
    """

    ISOLATED = "isolated"
    PENDANT = "pendant"
    SOURCE_ONLY = "source_only"
    SINK_ONLY = "sink_only"
    ORDINARY = "ordinary"


def classify_role(in_degree: int, out_degree: int) -> Role:
    total = in_degree + out_degree
    if total == 0:
        return Role.ISOLATED
    if total == 1:
        return Role.PENDANT
    if in_degree == 0:
        return Role.SOURCE_ONLY
    if out_degree == 0:
        return Role.SINK_ONLY
    return Role.ORDINARY


@dataclass(frozen=True)
class NodeStats:
    node: NodeId
    in_degree: int
    out_degree: int
    total_degree: int
    role: Role


def degree_profile(g: DiGraph) -> list[NodeStats]:
    """Per-node degrees and role, indexed by node id."""
    profile = []
    for v in g.node_ids():
        ind = g.in_degree(v)
        outd = g.out_degree(v)
        profile.append(NodeStats(v, ind, outd, ind + outd, classify_role(ind, outd)))
    return profile


def density(g: DiGraph) -> float:
    """Arc density: arcs / (n * (n - 1))."""
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError("density needs at least 2 nodes")
    return g.arc_count / (n * (n - 1))


class Ranking(NamedTuple):
    nodes: list[NodeId]
    truncated_tie: bool


def _top_by_degree(g: DiGraph, k: int, degree_of) -> Ranking:
    n = g.node_count
    if not isinstance(k, int) or k < 1 or k > n:
        raise BadKError(f"k must be in 1..{n}, got {k!r}")
    order = sorted(g.node_ids(), key=lambda v: (-degree_of(v), g.slug(v)))
    tie = k < n and degree_of(order[k - 1]) == degree_of(order[k])
    return Ranking(order[:k], tie)


def top_citing(g: DiGraph, k: int) -> Ranking:
    """The k nodes of highest out-degree (most citing), ties by slug.

    The flag reports a truncated tie: the k-th value equals the (k+1)-th,
    so membership at the boundary was decided by slug order alone.
    """
    return _top_by_degree(g, k, g.out_degree)


def top_cited(g: DiGraph, k: int) -> Ranking:
    """The k nodes of highest in-degree (most cited), ties by slug."""
    return _top_by_degree(g, k, g.in_degree)


@dataclass(frozen=True)
class RichClub:
    """The union of the most-citing and most-cited nodes plus cohesion stats.

    quotation_capture is the fraction of arcs with at least one endpoint in
    the club; the weighted variant counts citation multiplicities instead
    of arcs.
    """

    members: frozenset[NodeId]
    top_citing: tuple[NodeId, ...]
    top_cited: tuple[NodeId, ...]
    internal_arcs: int
    internal_density: float
    quotation_capture: float
    quotation_capture_weighted: float

    @property
    def overlap(self) -> frozenset[NodeId]:
        return frozenset(self.top_citing) & frozenset(self.top_cited)


def rich_club_members(g: DiGraph, k_citing: int, k_cited: int) -> RichClub:
    """Select the rich club as top_citing(k_citing) union top_cited(k_cited)."""
    citing = top_citing(g, k_citing).nodes
    cited = top_cited(g, k_cited).nodes
    members = frozenset(citing) | frozenset(cited)
    size = len(members)
    internal = 0
    incident = 0
    incident_weight = 0
    for s, t, w in g.arcs():
        s_in = s in members
        t_in = t in members
        if s_in and t_in:
            internal += 1
        if s_in or t_in:
            incident += 1
            incident_weight += w
    internal_density = internal / (size * (size - 1)) if size > 1 else 0.0
    total_arcs = g.arc_count
    total_weight = g.weight_total
    return RichClub(
        members=members,
        top_citing=tuple(citing),
        top_cited=tuple(cited),
        internal_arcs=internal,
        internal_density=internal_density,
        quotation_capture=incident / total_arcs if total_arcs else 0.0,
        quotation_capture_weighted=incident_weight / total_weight if total_weight else 0.0,
    )


def rich_club_coefficient(ug: UGraph, k: int) -> float | None:
    """phi(k): edge density among nodes of degree strictly greater than k.

    Returns None (undefined) when fewer than two nodes qualify.
    """
    rich = [v for v in ug.node_ids() if ug.degree(v) > k]
    n_k = len(rich)
    if n_k < 2:
        return None
    rich_set = set(rich)
    e_k = sum(1 for u, v in ug.edges() if u in rich_set and v in rich_set)
    return 2.0 * e_k / (n_k * (n_k - 1))


class NormalizedPhi(NamedTuple):
    phi: float
    phi_null_mean: float
    phi_norm: float
    sample_stddev: float


def normalized_rich_club(
    ug: UGraph, k: int, samples: int, seed: int, swap_factor: int = 10
) -> NormalizedPhi:
    """phi(k) normalized by its mean over degree-preserving rewirings.

    Each null sample applies ``swap_factor * edge_count`` attempted double
    edge swaps under a seed derived from (seed, sample index), so results
    are reproducible and samples are independent of evaluation order.
    """
    from .nullmodels import degree_preserving_rewire

    phi = rich_club_coefficient(ug, k)
    if phi is None:
        raise UndefinedCoefficientError(f"phi({k}) undefined: fewer than 2 nodes exceed degree {k}")
    if samples < 1:
        raise ValueError("samples must be positive")
    attempts = swap_factor * ug.edge_count
    values = []
    for i in range(samples):
        null = degree_preserving_rewire(ug, attempts, derive_seed(seed, f"rewire:{i}"))
        null_phi = rich_club_coefficient(null, k)
        # the degree sequence is preserved, so phi stays defined
        values.append(0.0 if null_phi is None else null_phi)
    mean = sum(values) / samples
    if mean == 0.0:
        raise NullModelDegenerateError(f"null-model mean of phi({k}) is zero")
    if samples > 1:
        var = sum((x - mean) ** 2 for x in values) / (samples - 1)
        stddev = math.sqrt(var)
    else:
        stddev = 0.0
    return NormalizedPhi(phi, mean, phi / mean, stddev)


# -- clustering and paths -----------------------------------------------------


def triangles_per_node(ug: UGraph) -> list[int]:
    """Number of triangles each node participates in."""
    adj = ug.adjacency()
    counts = [0] * ug.node_count
    for v in range(ug.node_count):
        nbrs = sorted(adj[v])
        t = 0
        for i in range(len(nbrs)):
            a = adj[nbrs[i]]
            for j in range(i + 1, len(nbrs)):
                if nbrs[j] in a:
                    t += 1
        counts[v] = t
    return counts


class ClusteringSummary(NamedTuple):
    transitivity: float
    average_local: float


def global_clustering(ug: UGraph) -> ClusteringSummary:
    """Transitivity and the mean local clustering coefficient.

    Transitivity is 3 * triangles / connected triples; the local average
    runs over nodes of degree >= 2 only. Both are 0 on triangle-free
    graphs (and when no node has two neighbors).
    """
    tri = triangles_per_node(ug)
    triangle_total = sum(tri) // 3
    triples = 0
    local = []
    for v in ug.node_ids():
        d = ug.degree(v)
        if d >= 2:
            pairs = d * (d - 1) // 2
            triples += pairs
            local.append(tri[v] / pairs)
    transitivity = 3.0 * triangle_total / triples if triples else 0.0
    average_local = sum(local) / len(local) if local else 0.0
    return ClusteringSummary(transitivity, average_local)


class PathSummary(NamedTuple):
    average: float
    reachable_pair_fraction: float


def average_path_length(ug: UGraph) -> PathSummary:
    """Mean shortest-path distance over the largest connected component.

    Distances are averaged over unordered reachable pairs within the
    largest component (ties broken by smallest node id); the fraction of
    all node pairs that are reachable is reported alongside so smaller
    components and isolated vertices stay visible.
    """
    n = ug.node_count
    if n < 2:
        raise DegenerateGraphError("average path length needs at least 2 nodes")
    components = ug.connected_components()
    largest = max(components, key=lambda c: (len(c), -min(c)))
    reachable_pairs = sum(len(c) * (len(c) - 1) // 2 for c in components)
    fraction = reachable_pairs / (n * (n - 1) // 2)
    if len(largest) < 2:
        return PathSummary(0.0, fraction)
    adj = ug.adjacency()
    total = 0
    for source in sorted(largest):
        dist = [-1] * n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                    total += dv + 1
        # nodes outside the largest component are unreachable from it,
        # so every distance summed above is a within-component pair
    pairs = len(largest) * (len(largest) - 1) // 2
    return PathSummary(total / 2 / pairs, fraction)


# -- centrality -----------------------------------------------------------------

CENTRALITY_KINDS = ("degree", "betweenness", "closeness")


@dataclass(frozen=True)
class CentralityScores:
    kind: str
    values: tuple[float, ...]


def betweenness_scores(ug: UGraph) -> list[float]:
    """Shortest-path betweenness via per-source BFS accumulation.

    Values are the fraction of pair shortest paths passing through each
    node, i.e. the pair sums normalized by (n-1)(n-2)/2.
    """
    n = ug.node_count
    adj = [sorted(nbrs) for nbrs in ug.adjacency()]
    raw = [0.0] * n
    for s in range(n):
        stack: list[int] = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0.0] * n
        dist = [-1] * n
        sigma[s] = 1.0
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                raw[w] += delta[w]
        del preds
    if n < 3:
        return [0.0] * n
    norm = (n - 1) * (n - 2)  # raw counts ordered pairs, i.e. twice the unordered sum
    return [b / norm for b in raw]


def harmonic_closeness_scores(ug: UGraph) -> list[float]:
    """Harmonic closeness normalized by (n - 1); values lie in [0, 1]."""
    n = ug.node_count
    if n < 2:
        return [0.0] * n
    adj = ug.adjacency()
    scores = []
    for source in range(n):
        dist = [-1] * n
        dist[source] = 0
        queue = deque([source])
        total = 0.0
        while queue:
            v = queue.popleft()
            dv = dist[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                    total += 1.0 / (dv + 1)
        scores.append(total / (n - 1))
    return scores


def centrality_scores(g: DiGraph, kind: str) -> CentralityScores:
    """Degree, betweenness or closeness centrality for every node.

    Degree centrality is (in + out) / (2 (n - 1)) on the digraph; the two
    path-based measures run on the undirected projection.
    """
    if kind not in CENTRALITY_KINDS:
        raise ValueError(f"kind must be one of {CENTRALITY_KINDS}, got {kind!r}")
    n = g.node_count
    if kind == "degree":
        if n < 2:
            values = [0.0] * n
        else:
            values = [(g.in_degree(v) + g.out_degree(v)) / (2 * (n - 1)) for v in g.node_ids()]
    elif kind == "betweenness":
        values = betweenness_scores(g.undirected_projection())
    else:
        values = harmonic_closeness_scores(g.undirected_projection())
    return CentralityScores(kind, tuple(values))


def phi_table(ug: UGraph) -> dict[int, float | None]:
    """phi(k) for every k from 0 to the maximum degree."""
    max_deg = max((ug.degree(v) for v in ug.node_ids()), default=0)
    return {k: rich_club_coefficient(ug, k) for k in range(max_deg + 1)}
