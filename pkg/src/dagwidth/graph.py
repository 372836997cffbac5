"""Directed acyclic graphs with topological vertex numbering.

Parsed or generated graphs are interned to dense integer ids and renumbered so
that id order is a topological order: every edge (u, v) satisfies u < v.
Downstream code leans on this constantly — "u cannot possibly reach v" is the
integer comparison u >= v, and the induced prefix on the first i vertices is a
slice.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CycleError(ValueError):
    """The input digraph is not acyclic.

    ``witness`` lists vertices forming a cycle: each consecutive pair, and the
    last vertex back to the first, is an input edge. A self-loop yields a
    length-1 witness.
    """

    def __init__(self, witness: Sequence):
        super().__init__("cycle: " + " ".join(str(v) for v in witness))
        self.witness = tuple(witness)


@dataclass(frozen=True, eq=False, repr=False)
class Dag:
    """Immutable DAG over vertex ids 0..n-1 in topological order.

    ``labels[v]`` is the original token of vertex ``v``; ``in_neighbors[v]``
    lists the predecessors of ``v``, each strictly smaller than ``v``,
    deduplicated and ascending. Instances are safe to share across readers;
    treat the stored sequences as read-only.
    """

    labels: Sequence[str]
    in_neighbors: Sequence[Sequence[int]]
    m: int

    @property
    def n(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Dag(n={self.n}, m={self.m})"

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) id pairs, grouped by target."""
        for v, ins in enumerate(self.in_neighbors):
            for u in ins:
                yield (u, v)

    def out_neighbors(self) -> list[list[int]]:
        """Forward adjacency, rebuilt on demand in O(n + m)."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges():
            out[u].append(v)
        return out

    def to_edge_list(self) -> str:
        """Serialize to edge-list text; isolated vertices become bare lines."""
        labels = self.labels
        lines = [f"{labels[u]} {labels[v]}" for u, v in self.edges()]
        seen = [False] * self.n
        for u, v in self.edges():
            seen[u] = True
            seen[v] = True
        lines.extend(labels[v] for v in range(self.n) if not seen[v])
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json_dict(self) -> dict:
        labels = self.labels
        return {
            "n": self.n,
            "m": self.m,
            "edges": [[labels[u], labels[v]] for u, v in self.edges()],
            "order": list(labels),
        }


def topological_order(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Kahn's algorithm over vertex ids 0..n-1.

    Returns the ids in topological order; deterministic because among the
    ready vertices the smallest id is always emitted first. Raises CycleError
    (witness in ids) when no such order exists; a self-loop counts as a cycle
    of length 1.
    """
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        out[u].append(v)
        indeg[v] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) < n:
        raise CycleError(_find_cycle(n, out, set(order)))
    return order


def _find_cycle(n: int, out: list[list[int]], emitted: set[int]) -> list[int]:
    # Every non-emitted vertex still has a non-emitted predecessor, so walking
    # predecessors (smallest id first, for determinism) must revisit a vertex.
    remaining = [v for v in range(n) if v not in emitted]
    preds: dict[int, list[int]] = {v: [] for v in remaining}
    for u in remaining:
        for w in out[u]:
            if w in preds:
                preds[w].append(u)
    walk = [min(remaining)]
    pos = {walk[0]: 0}
    while True:
        nxt = min(preds[walk[-1]])
        if nxt in pos:
            # walk[pos[nxt]:] followed by nxt closes the loop; reversing turns
            # the predecessor walk into forward edges.
            return [nxt] + walk[pos[nxt] + 1 :][::-1]
        pos[nxt] = len(walk)
        walk.append(nxt)


def build_dag(labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> Dag:
    """Renumber (labels, edge id pairs) into a canonical Dag.

    Ids are remapped so id order is topological, duplicate edges collapse, and
    in-lists come out ascending. CycleError witnesses are reported in labels.
    """
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate labels")
    edges = list(edges)
    try:
        order = topological_order(len(labels), edges)
    except CycleError as e:
        raise CycleError([labels[v] for v in e.witness]) from None
    rank = [0] * len(labels)
    for position, v in enumerate(order):
        rank[v] = position
    ins: list[set[int]] = [set() for _ in labels]
    for u, v in edges:
        ins[rank[v]].add(rank[u])
    in_neighbors = [tuple(sorted(s)) for s in ins]
    return Dag(
        labels=tuple(labels[v] for v in order),
        in_neighbors=in_neighbors,
        m=sum(len(s) for s in in_neighbors),
    )


def dag_from_topological(labels: Sequence[str], in_neighbors: Sequence[Sequence[int]]) -> Dag:
    """Wrap adjacency that is already topologically numbered.

    Used by the generators, which build graphs forward-edge by construction;
    in-lists must be strictly ascending with every predecessor below its
    target. Validated in one O(m) pass.
    """
    m = 0
    for v, ins in enumerate(in_neighbors):
        prev = -1
        for u in ins:
            if u <= prev or u >= v:
                raise ValueError(f"in-list of vertex {v} is not ascending below {v}")
            prev = u
        m += len(ins)
    return Dag(labels=labels, in_neighbors=in_neighbors, m=m)


def parse_edge_list(text: str | Iterable[str]) -> Dag:
    """Parse edge-list text into a Dag.

    One ``u v`` edge per line; a single token declares an isolated vertex;
    blank lines and lines starting with ``#`` are ignored. Labels are
    arbitrary whitespace-free tokens, interned in first-appearance order
    before the topological renumbering.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def intern(token: str) -> int:
        i = index.get(token)
        if i is None:
            i = len(labels)
            index[token] = i
            labels.append(token)
        return i

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            intern(parts[0])
        elif len(parts) == 2:
            edges.append((intern(parts[0]), intern(parts[1])))
        else:
            raise EdgeListParseError(
                line_no, f"expected 'u v' or a bare vertex, got {len(parts)} tokens"
            )
    return build_dag(labels, edges)


def induced_prefix(g: Dag, i: int) -> Dag:
    """Subgraph induced by the first ``i`` vertices in topological order.

    Because every in-neighbor of a vertex has a smaller id, this is a slice.
    """
    if not 0 <= i <= g.n:
        raise ValueError(f"prefix length {i} out of range 0..{g.n}")
    ins = g.in_neighbors[:i]
    return Dag(labels=g.labels[:i], in_neighbors=ins, m=sum(len(a) for a in ins))
