"""Shared builders and independent oracles used across the test suite."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from lexnet.graph import DiGraph, NodeLabel, UGraph


def make_digraph(slugs, arcs):
    """Build a DiGraph from slug names and (source, target[, count]) triples."""
    g = DiGraph([NodeLabel(s) for s in slugs])
    for arc in arcs:
        if len(arc) == 2:
            s, t = arc
            g.add_edge(g.id_of(s), g.id_of(t))
        else:
            s, t, c = arc
            g.add_edge(g.id_of(s), g.id_of(t), c)
    return g


def make_ugraph(slugs, edges):
    ug = UGraph([NodeLabel(s) for s in slugs])
    index = {ug.slug(v): v for v in ug.node_ids()}
    for u, v in edges:
        ug.add_edge(index[u] if isinstance(u, str) else u, index[v] if isinstance(v, str) else v)
    return ug


@pytest.fixture
def bridge_digraph():
    """Two directed triangles a->b->c->a and d->e->f->d joined by c->d."""
    return make_digraph(
        "abcdef",
        [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d"), ("c", "d")],
    )


@pytest.fixture
def bridge_ugraph(bridge_digraph):
    return bridge_digraph.undirected_projection()


def random_ugraph(rng: random.Random, n: int, m: int | None = None) -> UGraph:
    """Uniform random simple graph used to drive property tests."""
    pairs = list(combinations(range(n), 2))
    if m is None:
        m = rng.randint(1, len(pairs))
    ug = UGraph([f"n{i:02d}" for i in range(n)])
    for u, v in rng.sample(pairs, m):
        ug.add_edge(u, v)
    return ug


def random_digraph(rng: random.Random, n: int, arcs: int) -> DiGraph:
    g = DiGraph([f"n{i:02d}" for i in range(n)])
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for u, v in rng.sample(pairs, min(arcs, len(pairs))):
        g.add_edge(u, v, rng.randint(1, 3))
    return g


# -- independent oracles -------------------------------------------------------


def brute_force_betweenness(ug: UGraph) -> list[float]:
    """Betweenness by explicit enumeration of every shortest path.

    Simple paths are enumerated by depth-first search, filtered to the
    minimum length per pair, and interior nodes are credited with their
    fraction; the result is normalized by (n-1)(n-2)/2 like the
    implementation under test but shares no code with it.
    """
    n = ug.node_count
    acc = [0.0] * n
    for s, t in combinations(range(n), 2):
        paths = _all_simple_paths(ug, s, t)
        if not paths:
            continue
        shortest = min(len(p) for p in paths)
        best = [p for p in paths if len(p) == shortest]
        for v in range(n):
            if v in (s, t):
                continue
            through = sum(1 for p in best if v in p)
            acc[v] += through / len(best)
    if n < 3:
        return [0.0] * n
    norm = (n - 1) * (n - 2) / 2
    return [a / norm for a in acc]


def _all_simple_paths(ug: UGraph, s: int, t: int) -> list[tuple[int, ...]]:
    paths = []
    stack = [(s, (s,))]
    while stack:
        v, path = stack.pop()
        if v == t:
            paths.append(path)
            continue
        for w in ug.neighbors(v):
            if w not in path:
                stack.append((w, path + (w,)))
    return paths


def brute_force_phi(ug: UGraph, k: int) -> float | None:
    """Rich-club coefficient by direct recount of the induced subgraph."""
    rich = [v for v in ug.node_ids() if len(ug.neighbors(v)) > k]
    if len(rich) < 2:
        return None
    internal = sum(1 for u, v in combinations(rich, 2) if ug.has_edge(u, v))
    possible = len(rich) * (len(rich) - 1) // 2
    return internal / possible


def degree_multiset(ug: UGraph) -> list[int]:
    return sorted(ug.degree(v) for v in ug.node_ids())


@pytest.fixture(scope="session")
def fixture_graph():
    """The bundled 52-code fixture, run through the real extraction path."""
    from lexnet.extraction import CodeDocument, build_edge_list, load_registry
    from lexnet.fixture import fixture_corpus, fixture_registry_text
    from lexnet.report import parse_edge_list, write_node_sidecar

    registry = load_registry(fixture_registry_text())
    corpus = [CodeDocument(slug, text) for slug, text in fixture_corpus().items()]
    edge_list = build_edge_list(corpus, registry)
    return parse_edge_list(edge_list.to_tsv(), write_node_sidecar(registry.slugs()))
