"""Directed citation graphs and the primitive algorithms built on them.

Nodes are dense integers ``0..n-1``; each carries a :class:`NodeLabel`
whose slug is unique within the graph. A directed arc ``x -> y`` means
"x cites y" and stores the citation count as its weight; self-loops are
rejected at insertion. Construction mutates, after which analysis code
treats graphs as read-only values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateLabelError,
    EmptyNodeSetError,
    SelfLoopError,
    UnknownNodeError,
)

NodeId = int


@dataclass(frozen=True)
class NodeLabel:
    """Identity of a node: a unique slug plus a human-readable name."""

    slug: str
    display_name: str = ""

    def __post_init__(self):
        if not self.slug:
            raise ValueError("slug must be non-empty")
        if not self.display_name:
            object.__setattr__(self, "display_name", self.slug)


def _index_labels(labels: Sequence[NodeLabel | str]) -> tuple[tuple[NodeLabel, ...], dict[str, int]]:
    if not labels:
        raise EmptyNodeSetError("a graph needs at least one node")
    resolved = tuple(
        lab if isinstance(lab, NodeLabel) else NodeLabel(lab) for lab in labels
    )
    index: dict[str, int] = {}
    for i, lab in enumerate(resolved):
        if lab.slug in index:
            raise DuplicateLabelError(f"slug {lab.slug!r} appears twice")
        index[lab.slug] = i
    return resolved, index


class DiGraph:
    """Directed graph with weighted arcs over a fixed node set."""

    __slots__ = ("_labels", "_slug_to_id", "_succ", "_pred", "_arc_count")

    def __init__(self, labels: Sequence[NodeLabel | str]):
        self._labels, self._slug_to_id = _index_labels(labels)
        n = len(self._labels)
        self._succ: list[dict[int, int]] = [dict() for _ in range(n)]
        self._pred: list[set[int]] = [set() for _ in range(n)]
        self._arc_count = 0

    # -- identity ---------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[NodeLabel, ...]:
        return self._labels

    def node_ids(self) -> range:
        return range(len(self._labels))

    def slug(self, v: NodeId) -> str:
        self._check(v)
        return self._labels[v].slug

    def id_of(self, slug: str) -> NodeId:
        try:
            return self._slug_to_id[slug]
        except KeyError:
            raise UnknownNodeError(f"no node with slug {slug!r}") from None

    def has_slug(self, slug: str) -> bool:
        return slug in self._slug_to_id

    def _check(self, v: NodeId) -> None:
        if not isinstance(v, int) or v < 0 or v >= len(self._labels):
            raise UnknownNodeError(f"node id {v!r} outside 0..{len(self._labels) - 1}")

    # -- arcs ---------------------------------------------------------------

    @property
    def arc_count(self) -> int:
        return self._arc_count

    @property
    def weight_total(self) -> int:
        return sum(w for succ in self._succ for w in succ.values())

    def add_edge(self, source: NodeId, target: NodeId, count: int = 1) -> None:
        """Add ``count`` citations from source to target; repeats accumulate."""
        self._check(source)
        self._check(target)
        if source == target:
            raise SelfLoopError(f"self-citation on node {source} ({self.slug(source)!r})")
        if count < 1:
            raise ValueError("count must be a positive integer")
        succ = self._succ[source]
        if target in succ:
            succ[target] += count
        else:
            succ[target] = count
            self._pred[target].add(source)
            self._arc_count += 1

    def has_arc(self, source: NodeId, target: NodeId) -> bool:
        self._check(source)
        self._check(target)
        return target in self._succ[source]

    def weight(self, source: NodeId, target: NodeId) -> int:
        self._check(source)
        self._check(target)
        return self._succ[source].get(target, 0)

    def successors(self, v: NodeId) -> tuple[int, ...]:
        self._check(v)
        return tuple(sorted(self._succ[v]))

    def predecessors(self, v: NodeId) -> tuple[int, ...]:
        self._check(v)
        return tuple(sorted(self._pred[v]))

    def out_degree(self, v: NodeId) -> int:
        """Number of distinct codes cited by v."""
        self._check(v)
        return len(self._succ[v])

    def in_degree(self, v: NodeId) -> int:
        """Number of distinct codes citing v."""
        self._check(v)
        return len(self._pred[v])

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (source, target, weight) triples in sorted order."""
        for s in range(len(self._labels)):
            succ = self._succ[s]
            for t in sorted(succ):
                yield s, t, succ[t]

    # -- derived graphs -------------------------------------------------------

    def remove_nodes(self, victims: Iterable[NodeId]) -> tuple["DiGraph", dict[int, int]]:
        """Drop the victim nodes and every arc touching them.

        Returns the reduced graph (ids re-densified, label identity kept)
        plus the old->new id mapping for the surviving nodes.
        """
        victim_set = set(victims)
        for v in victim_set:
            self._check(v)
        survivors = [v for v in range(len(self._labels)) if v not in victim_set]
        mapping = {old: new for new, old in enumerate(survivors)}
        reduced = DiGraph([self._labels[v] for v in survivors])
        for s in survivors:
            ns = mapping[s]
            succ = self._succ[s]
            for t, w in succ.items():
                if t in mapping:
                    reduced.add_edge(ns, mapping[t], w)
        return reduced, mapping

    def induced_subgraph(self, keep: Iterable[NodeId]) -> tuple["DiGraph", dict[int, int]]:
        """Keep only the given nodes; arcs survive iff both endpoints are kept."""
        keep_set = set(keep)
        for v in keep_set:
            self._check(v)
        victims = set(range(len(self._labels))) - keep_set
        return self.remove_nodes(victims)

    def undirected_projection(self) -> "UGraph":
        """Forget direction and weight: {u,v} present iff u->v or v->u."""
        ug = UGraph(self._labels)
        for s in range(len(self._labels)):
            for t in self._succ[s]:
                ug.add_edge(s, t)
        return ug

    def weakly_connected_components(self) -> list[set[int]]:
        """Partition nodes into components, ignoring arc direction."""
        n = len(self._labels)
        seen = [False] * n
        components: list[set[int]] = []
        for start in range(n):
            if seen[start]:
                continue
            comp = {start}
            seen[start] = True
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self._succ[v].keys() | self._pred[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        queue.append(w)
            components.append(comp)
        return components


class UGraph:
    """Simple undirected graph used for clustering, paths and modularity."""

    __slots__ = ("_labels", "_slug_to_id", "_adj", "_edge_count")

    def __init__(self, labels: Sequence[NodeLabel | str]):
        self._labels, self._slug_to_id = _index_labels(labels)
        self._adj: list[set[int]] = [set() for _ in range(len(self._labels))]
        self._edge_count = 0

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[NodeLabel, ...]:
        return self._labels

    def node_ids(self) -> range:
        return range(len(self._labels))

    def slug(self, v: NodeId) -> str:
        self._check(v)
        return self._labels[v].slug

    def _check(self, v: NodeId) -> None:
        if not isinstance(v, int) or v < 0 or v >= len(self._labels):
            raise UnknownNodeError(f"node id {v!r} outside 0..{len(self._labels) - 1}")

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def add_edge(self, u: NodeId, v: NodeId) -> None:
        """Add the unordered pair {u,v}; adding an existing edge is a no-op."""
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoopError(f"self-loop on node {u}")
        if v not in self._adj[u]:
            self._adj[u].add(v)
            self._adj[v].add(u)
            self._edge_count += 1

    def remove_edge(self, u: NodeId, v: NodeId) -> None:
        self._check(u)
        self._check(v)
        if v not in self._adj[u]:
            raise UnknownNodeError(f"no edge {{{u},{v}}}")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._edge_count -= 1

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def degree(self, v: NodeId) -> int:
        self._check(v)
        return len(self._adj[v])

    def neighbors(self, v: NodeId) -> tuple[int, ...]:
        self._check(v)
        return tuple(sorted(self._adj[v]))

    def neighbor_set(self, v: NodeId) -> frozenset[int]:
        self._check(v)
        return frozenset(self._adj[v])

    def adjacency(self) -> list[set[int]]:
        """Snapshot of the adjacency structure (one set per node)."""
        return [set(nbrs) for nbrs in self._adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(len(self._labels)):
            for v in sorted(self._adj[u]):
                if v > u:
                    yield u, v

    def bfs_distances(self, source: NodeId) -> dict[int, int | None]:
        """Unweighted shortest-path distances from source.

        Every node appears in the result; unreachable nodes map to None.
        """
        self._check(source)
        dist: dict[int, int | None] = {v: None for v in range(len(self._labels))}
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            for w in self._adj[v]:
                if dist[w] is None:
                    dist[w] = dv + 1  # type: ignore[operator]
                    queue.append(w)
        return dist

    def connected_components(self) -> list[set[int]]:
        n = len(self._labels)
        seen = [False] * n
        components: list[set[int]] = []
        for start in range(n):
            if seen[start]:
                continue
            comp = {start}
            seen[start] = True
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        queue.append(w)
            components.append(comp)
        return components

    def copy(self) -> "UGraph":
        dup = UGraph(self._labels)
        for u, v in self.edges():
            dup.add_edge(u, v)
        return dup


def digraph_from_ugraph(ug: UGraph) -> DiGraph:
    """Embed an undirected graph as a digraph, one arc per edge (low -> high).

    This is the canonical injection used when feeding undirected baseline
    graphs (Watts-Strogatz, Erdos-Renyi) into analyses defined on digraphs:
    no reciprocal arcs are invented, so arc counts equal edge counts.
    """
    g = DiGraph(ug.labels)
    for u, v in ug.edges():
        g.add_edge(u, v)
    return g
