"""Stable graphs of genus g with r labelled legs, up to isomorphism."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial

MAX_GENUS = 3


@dataclass(frozen=True)
class StableGraph:
    """Vertices 0..V-1 with genera; legs[i] is the vertex of leg i+1; edges are sorted pairs (u <= v)."""

    genera: tuple[int, ...]
    legs: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    automorphisms: int = 1

    @property
    def genus(self) -> int:
        return sum(self.genera) + len(self.edges) - len(self.genera) + 1

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    def valence(self, v: int) -> int:
        val = sum(1 for x in self.legs if x == v)
        for a, b in self.edges:
            val += (a == v) + (b == v)
        return val

    def is_stable(self) -> bool:
        return all(2 * g - 2 + self.valence(v) > 0 for v, g in enumerate(self.genera))

    def is_connected(self) -> bool:
        seen, stack = {0}, [0]
        while stack:
            x = stack.pop()
            for a, b in self.edges:
                for y, z in ((a, b), (b, a)):
                    if y == x and z not in seen:
                        seen.add(z)
                        stack.append(z)
        return len(seen) == len(self.genera)

    def to_json(self) -> dict:
        return {
            "genera": list(self.genera),
            "legs": list(self.legs),
            "edges": [list(e) for e in self.edges],
            "automorphisms": self.automorphisms,
        }


def _relabel(genera, legs, edges, perm):
    # perm[old] = new
    V = len(genera)
    new_genera = [0] * V
    for old, new in enumerate(perm):
        new_genera[new] = genera[old]
    new_legs = tuple(perm[x] for x in legs)
    new_edges = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
    return tuple(new_genera), new_legs, new_edges


def _canonical(genera, legs, edges):
    best = None
    for perm in permutations(range(len(genera))):
        key = _relabel(genera, legs, edges, perm)
        if best is None or key < best:
            best = key
    return best


def _automorphism_count(genera, legs, edges) -> int:
    base = (tuple(genera), tuple(legs), tuple(sorted(edges)))
    vertex_perms = sum(1 for perm in permutations(range(len(genera))) if _relabel(genera, legs, edges, perm) == base)
    mult = Counter(edges)
    out = vertex_perms
    for (a, b), m in mult.items():
        out *= factorial(m)
        if a == b:
            out *= 2**m
    return out


@lru_cache(maxsize=None)
def enumerate_stable_graphs(g: int, r: int) -> tuple[StableGraph, ...]:
    """Complete, duplicate-free list of stable graphs of type (g, r) with |Aut|."""
    if 2 * g - 2 + r <= 0:
        raise ValueError("unstable (g, r)")
    if g > MAX_GENUS:
        raise ValueError(f"genus {g} is beyond the supported tier (<= {MAX_GENUS})")
    found = {}
    for V in range(1, 2 * g - 2 + r + 1):
        pairs = [(a, b) for a in range(V) for b in range(a, V)]
        for genera in product(range(g + 1), repeat=V):
            E = g - sum(genera) + V - 1
            if E < V - 1:
                continue
            for edges in combinations_with_replacement(pairs, E):
                for legs in product(range(V), repeat=r):
                    cand = StableGraph(tuple(genera), tuple(legs), tuple(sorted(edges)))
                    if not cand.is_connected() or not cand.is_stable():
                        continue
                    key = _canonical(genera, legs, edges)
                    if key not in found:
                        found[key] = StableGraph(key[0], key[1], key[2], _automorphism_count(*key))
    return tuple(found[k] for k in sorted(found))
