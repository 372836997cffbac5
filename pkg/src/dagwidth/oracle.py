"""Brute-force reference implementations used to cross-check the sweep.

Everything here is deliberately independent of the sweep module: reachability
comes from a plain traversal, frontier antichains from exhaustive enumeration
plus pairwise filtering, and the width from a bipartite matching over the
transitive closure (minimum path cover duality). Slow but obviously correct,
and sized for small inputs except `width_via_matching`, which stretches to a
few thousand vertices.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Dag

DEFAULT_ENUM_LIMIT = 20  # 2**20 subsets is the most an exhaustive run should face


class ReachMatrix:
    """Reflexive transitive reachability as one bitmask row per vertex.

    Bit v of ``masks[u]`` is set iff u reaches v. With topological numbering
    every row only has bits at positions >= its own vertex.
    """

    __slots__ = ("masks",)

    def __init__(self, masks: list[int]):
        self.masks = masks

    @property
    def n(self) -> int:
        return len(self.masks)

    def reaches(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def proper_pairs(self) -> Iterator[tuple[int, int]]:
        """All (u, v) with u != v and u reaches v."""
        for u, mask in enumerate(self.masks):
            mask &= ~(1 << u)
            while mask:
                low = mask & -mask
                yield (u, low.bit_length() - 1)
                mask ^= low


def transitive_closure(g: Dag) -> ReachMatrix:
    """Per-vertex reachability by sweeping targets in reverse id order."""
    out = g.out_neighbors()
    masks = [0] * g.n
    for v in range(g.n - 1, -1, -1):
        mask = 1 << v
        for w in out[v]:
            mask |= masks[w]
        masks[v] = mask
    return ReachMatrix(masks)


def enumerate_antichains(g: Dag, limit: int = DEFAULT_ENUM_LIMIT) -> list[tuple[int, ...]]:
    """Every antichain of g (the empty one included), ascending members.

    Refuses graphs with more than ``limit`` vertices; the recursion only
    branches on vertices unreached by the members picked so far, so sparse
    output stays cheap even near the limit.
    """
    if g.n > limit:
        raise ValueError(f"n={g.n} exceeds enumeration limit {limit}")
    reach = transitive_closure(g).masks
    n = g.n
    out: list[tuple[int, ...]] = []
    members: list[int] = []

    def extend(start: int, blocked: int) -> None:
        out.append(tuple(members))
        for v in range(start, n):
            if not (blocked >> v) & 1:
                members.append(v)
                extend(v + 1, blocked | reach[v])
                members.pop()

    extend(0, 0)
    return out


def dominates(closure: ReachMatrix, dominator: Sequence[int], dominated: Sequence[int]) -> bool:
    """Equal sizes, and every dominator member reached from ``dominated``.

    Reaching is reflexive: a vertex reaches itself.
    """
    if len(dominator) != len(dominated):
        return False
    return all(
        any(closure.reaches(a, b) for a in dominated) for b in dominator
    )


def brute_frontiers(g: Dag, limit: int = DEFAULT_ENUM_LIMIT) -> frozenset[tuple[int, ...]]:
    """Frontier antichains by definition: maximal under same-size domination.

    Keeps an antichain iff no *other* equal-size antichain has all its members
    reached from it. Pair tests collapse to mask arithmetic: B is dominated by
    A's reach-union iff B's member mask is a subset of it.
    """
    reach = transitive_closure(g).masks
    by_size: dict[int, list[tuple[tuple[int, ...], int, int]]] = {}
    for a in enumerate_antichains(g, limit):
        member_mask = 0
        reach_union = 0
        for v in a:
            member_mask |= 1 << v
            reach_union |= reach[v]
        by_size.setdefault(len(a), []).append((a, member_mask, reach_union))
    frontiers: list[tuple[int, ...]] = []
    for group in by_size.values():
        for a, a_mask, a_reach in group:
            for b, b_mask, _ in group:
                if b_mask != a_mask and b_mask & ~a_reach == 0:
                    break  # b dominates a
            else:
                frontiers.append(a)
    return frozenset(frontiers)


def brute_rightmost_max(g: Dag, limit: int = DEFAULT_ENUM_LIMIT) -> tuple[int, ...]:
    """The unique maximum-size frontier antichain (empty graph gives ())."""
    frontiers = brute_frontiers(g, limit)
    best_size = max(len(a) for a in frontiers)
    largest = [a for a in frontiers if len(a) == best_size]
    assert len(largest) == 1, f"maximum frontier antichain not unique: {largest}"
    return largest[0]


def width_via_matching(g: Dag) -> int:
    """Width as n minus a maximum bipartite matching on proper closure pairs.

    A matching over pairs (u, v) with u properly reaching v assembles chains
    of the reachability order; n - |matching| chains cover all vertices, and
    the minimum such cover size equals the width. Simple augmenting paths
    (greedy seed, then BFS augmentation), fine for n up to a few thousand.
    """
    n = g.n
    if n == 0:
        return 0
    closure = transitive_closure(g)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in closure.proper_pairs():
        adj[u].append(v)
    match_l = [-1] * n  # left u -> right v it is matched to
    match_r = [-1] * n
    for u in range(n):
        for v in adj[u]:
            if match_r[v] == -1:
                match_l[u] = v
                match_r[v] = u
                break
    for u0 in range(n):
        if match_l[u0] != -1:
            continue
        parent = {u0: -1}
        queue = [u0]
        found = False
        while queue and not found:
            next_queue = []
            for u in queue:
                for v in adj[u]:
                    w = match_r[v]
                    if w == -1:
                        # free right endpoint: flip the alternating path
                        while True:
                            prev_v = match_l[u]
                            match_l[u] = v
                            match_r[v] = u
                            if prev_v == -1:
                                break
                            u = parent[u]
                            v = prev_v
                        found = True
                        break
                    if w not in parent:
                        parent[w] = u
                        next_queue.append(w)
                if found:
                    break
            queue = next_queue
    return n - sum(1 for v in match_l if v != -1)
