"""Seeded random instance generators for property suites and experiments.

All generators are deterministic functions of the supplied Random instance,
so suites that record their seed are exactly reproducible.
"""

import random
from typing import Iterable

from .hypergraph import Hypergraph


def random_hypergraph(rng: random.Random, k: int, n: int, edge_count: int) -> Hypergraph:
    """Uniformly sampled distinct k-subsets; connectivity not guaranteed."""
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    edges: list[tuple[int, ...]] = []
    seen = set()
    attempts = 0
    while len(edges) < edge_count and attempts < 100 * (edge_count + 1):
        e = tuple(sorted(rng.sample(range(1, n + 1), k)))
        attempts += 1
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(k, n, tuple(edges))


def random_connected_hypergraph(
    rng: random.Random, k: int, n: int, extra_edges: int = 0
) -> Hypergraph:
    """Connected instance covering all n vertices.

    A chain of edges absorbs the shuffled vertex list, each new edge
    overlapping the already covered part; extra random edges are layered
    on top.
    """
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    edges = [tuple(sorted(verts[:k]))]
    covered = verts[:k]
    rest = verts[k:]
    while rest:
        fresh = rest[: k - 1]
        rest = rest[k - 1 :]
        overlap = rng.sample(covered, k - len(fresh))
        edges.append(tuple(sorted(fresh + overlap)))
        covered.extend(fresh)
    seen = set(edges)
    for _ in range(extra_edges):
        e = tuple(sorted(rng.sample(range(1, n + 1), k)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(k, n, tuple(edges))


def random_hm_bipartite(
    rng: random.Random, k: int, head_count: int, mass_count: int, extra_edges: int = 0
) -> tuple[Hypergraph, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected instance where every edge has exactly one head vertex.

    Returns the hypergraph and its (heads, masses) bipartition. Vertex ids
    are shuffled so the bipartition is not positional.
    """
    if k < 3:
        raise ValueError("head-mass construction needs k >= 3")
    if head_count < 1 or mass_count < k - 1:
        raise ValueError("need at least one head and k-1 masses")
    n = head_count + mass_count
    ids = list(range(1, n + 1))
    rng.shuffle(ids)
    heads, masses = ids[:head_count], ids[head_count:]

    edges: list[tuple[int, ...]] = []
    covered = masses[: k - 1]
    rest = masses[k - 1 :]
    edge_masses = [list(covered)]
    while rest:
        fresh = rest[: k - 2]
        rest = rest[k - 2 :]
        overlap = rng.sample(covered, k - 1 - len(fresh))
        edge_masses.append(fresh + overlap)
        covered.extend(fresh)
    seen = set()
    for i, ms in enumerate(edge_masses):
        e = tuple(sorted([heads[i % len(heads)]] + ms))
        seen.add(e)
        edges.append(e)
    # round-robin continues until every head is attached to some edge
    i = len(edge_masses)
    while i < len(heads) or extra_edges > 0:
        head = heads[i % len(heads)] if i < len(heads) else rng.choice(heads)
        for _ in range(50):
            e = tuple(sorted([head] + rng.sample(masses, k - 1)))
            if e not in seen:
                seen.add(e)
                edges.append(e)
                break
        if i >= len(heads):
            extra_edges -= 1
        i += 1
    return Hypergraph(k, n, tuple(edges)), (tuple(sorted(heads)), tuple(sorted(masses)))


def with_isolated_vertices(h: Hypergraph, count: int) -> Hypergraph:
    """Append ``count`` fresh singleton vertices after the existing ones."""
    return Hypergraph(h.k, h.n + count, h.edges)


def disjoint_union(parts: Iterable[Hypergraph]) -> Hypergraph:
    """Disjoint union with vertex ids shifted to keep blocks separate."""
    parts = list(parts)
    ks = {p.k for p in parts}
    if len(ks) != 1:
        raise ValueError("all parts must share the same uniformity")
    offset = 0
    edges: list[tuple[int, ...]] = []
    for p in parts:
        edges.extend(tuple(v + offset for v in e) for e in p.edges)
        offset += p.n
    return Hypergraph(parts[0].k, offset, tuple(edges))


def mixed_corpus(seed: int, max_assignments: int = 200_000) -> list[Hypergraph]:
    """Deterministic instance battery for exhaustive oracle comparisons.

    Covers k in {3, 4, 5} with connected and disconnected instances plus
    isolated vertices, sized so k^n never exceeds ``max_assignments`` and a
    full scan over all phase assignments stays cheap.
    """
    rng = random.Random(seed)
    out: list[Hypergraph] = []
    for k, n_max in ((3, 11), (4, 8), (5, 7)):
        for n in range(k, n_max + 1):
            if k**n > max_assignments:
                break
            out.append(random_connected_hypergraph(rng, k, n))
            if k**n <= max_assignments // 2 and n >= k + 1:
                out.append(random_connected_hypergraph(rng, k, n, extra_edges=2))
        single = Hypergraph(k, k, (tuple(range(1, k + 1)),))
        out.append(with_isolated_vertices(single, 2))
        if k ** (2 * k + 1) <= max_assignments:
            out.append(with_isolated_vertices(disjoint_union([single, single]), 1))
    out.append(Hypergraph(3, 4, ()))  # edgeless: singletons only
    return out
