"""Width-controlled DAG generators plus small random DAGs for cross-checking.

Every family builds its adjacency directly in a fixed topological numbering
(labels are ``v0, v1, ...`` in that order), so no cycle check is needed at
generation time. Randomized families are fully determined by their seed: one
``random.Random`` (Mersenne Twister) per call, draws in a fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Dag, dag_from_topological

FAMILIES = ("chain-union", "layered", "staircase", "independent", "chain")


@dataclass(frozen=True)
class GenConfig:
    """One generator invocation; the seed fully determines the output."""

    family: str
    k: int = 1
    n: int = 0
    p: float = 0.0
    seed: int = 0


def _labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def gen_independent(k: int) -> Dag:
    """k vertices, no edges: width k with the full 2**k antichain lattice."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return dag_from_topological(_labels(k), [()] * k)


def gen_chain(n: int) -> Dag:
    """A single n-vertex chain: width 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ins = [() if i == 0 else (i - 1,) for i in range(n)]
    return dag_from_topological(_labels(n), ins)


def gen_staircase(k: int) -> Dag:
    """Independent layers of sizes k, k-1, ..., 1, each wired completely to
    the next smaller one. Width k, yet only k nonempty frontier antichains
    survive at the end — the sparse extreme of the frontier-count range."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ins: list[tuple[int, ...]] = []
    layer_start = 0
    prev: tuple[int, ...] = ()
    for size in range(k, 0, -1):
        layer = tuple(range(layer_start, layer_start + size))
        ins.extend(prev for _ in layer)
        prev = layer
        layer_start += size
    return dag_from_topological(_labels(layer_start), ins)


def gen_layered(k: int, layers: int, seed: int = 0) -> Dag:
    """``layers`` layers of k vertices, complete bipartite between
    consecutive layers: width exactly k. Deterministic; the seed parameter is
    accepted for config uniformity and unused."""
    del seed
    if k < 1 or layers < 1:
        raise ValueError("k and layers must be >= 1")
    ins: list[tuple[int, ...]] = []
    for layer in range(layers):
        start = layer * k
        prev = tuple(range(start - k, start)) if layer else ()
        ins.extend(prev for _ in range(k))
    return dag_from_topological(_labels(k * layers), ins)


def gen_chain_union(k: int, n: int, p: float, seed: int) -> Dag:
    """k near-equal chains over n vertices plus sparse forward cross-edges.

    Width is exactly k: the chains cover the graph (so at most k), and the k
    chain heads never receive an edge (cross-edges never target a chain's
    first position), so they stay a k-antichain. Each non-head vertex draws
    one extra in-edge with probability p, sourced uniformly from the earlier
    vertices of other chains, keeping m linear in n for fixed p.

    The global numbering is round-robin across chains, so vertex g sits on
    chain ``g % k`` while every chain still grows.
    """
    if k < 1 or n < k:
        raise ValueError("need n >= k >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    full_rounds = (n // k) * k  # ids below this: chain = g % k, position = g // k

    def chain_of(g: int) -> int:
        return g % k if g < full_rounds else g - full_rounds

    ins: list[tuple[int, ...]] = []
    for g in range(n):
        if g < k:
            ins.append(())  # chain head
            continue
        chain = chain_of(g)
        predecessor = g - k if g < full_rounds else full_rounds - k + chain
        cross = -1
        if k > 1 and rng.random() < p:
            cross = rng.randrange(g)
            while chain_of(cross) == chain:
                cross = rng.randrange(g)
        if cross == -1:
            ins.append((predecessor,))
        elif cross < predecessor:
            ins.append((cross, predecessor))
        else:
            ins.append((predecessor, cross))
    return dag_from_topological(_labels(n), ins)


def gen_random(n: int, density: float, seed: int) -> Dag:
    """Uniform forward-edge DAG: each pair (i, j), i < j, independently kept
    with the given probability. Oracle-scale only (quadratic in n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    ins = [
        tuple(i for i in range(j) if rng.random() < density)
        for j in range(n)
    ]
    return dag_from_topological(_labels(n), ins)


def random_corpus(count: int, max_n: int = 10, seed: int = 0) -> list[Dag]:
    """Deterministic corpus of small random DAGs spanning densities 0..0.5."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n = rng.randint(0, max_n)
        density = rng.uniform(0.0, 0.5)
        corpus.append(gen_random(n, density, rng.getrandbits(63)))
    return corpus


def dag_from_config(cfg: GenConfig) -> Dag:
    """Dispatch a GenConfig to its family generator, validating the fields
    the family actually uses (layered reads the layer count off n = k * L)."""
    family = cfg.family
    if family == "chain-union":
        return gen_chain_union(cfg.k, cfg.n, cfg.p, cfg.seed)
    if family == "layered":
        if cfg.k < 1 or cfg.n < cfg.k or cfg.n % cfg.k:
            raise ValueError("layered needs n to be a positive multiple of k")
        return gen_layered(cfg.k, cfg.n // cfg.k, cfg.seed)
    if family == "staircase":
        return gen_staircase(cfg.k)
    if family == "independent":
        return gen_independent(cfg.k)
    if family == "chain":
        return gen_chain(cfg.n)
    raise ValueError(f"unknown family {family!r} (expected one of {', '.join(FAMILIES)})")
