"""Acceptance gate: one test per shipped criterion.

Each test prints a single pass/fail line (visible under ``pytest -s``); the
heavyweight shared work — a 1000-graph corpus audited prefix by prefix
against the brute-force oracles — happens once in a module fixture. The
timing-sensitive criteria (4 and 5) measure real wall-clock runs, so this
module is slower than the unit tests by design.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from typing import NamedTuple

import pytest

from dagwidth import (
    Dag,
    FrontierSweep,
    GenConfig,
    SupportRecord,
    bench_run,
    brute_frontiers,
    brute_rightmost_max,
    decide_width_at_most,
    enumerate_antichains,
    gen_independent,
    gen_staircase,
    compute_frontiers,
    induced_prefix,
    random_corpus,
    transitive_closure,
    width_via_matching,
)

CORPUS_SIZE = 1000
CORPUS_MAX_N = 10
CORPUS_SEED = 1


@contextmanager
def reported(name: str):
    try:
        yield
    except BaseException:
        print(f"acceptance: {name}: FAIL")
        raise
    print(f"acceptance: {name}: PASS")


class GraphAudit(NamedTuple):
    g: Dag
    sweep_frontiers: list[frozenset]  # per prefix 0..n
    sweep_supports: list[tuple[int, ...]]
    brute: list[frozenset]  # per prefix 0..n
    records: tuple[SupportRecord, ...]
    width_sweep: int
    best: tuple[int, ...]
    width_matching: int
    rightmost: tuple[int, ...]


class CorpusAudit(NamedTuple):
    audits: list[GraphAudit]
    elapsed_s: float


@pytest.fixture(scope="module")
def corpus() -> CorpusAudit:
    graphs = random_corpus(CORPUS_SIZE, CORPUS_MAX_N, CORPUS_SEED)
    start = time.perf_counter()
    audits = []
    for g in graphs:
        sweep = FrontierSweep()
        sweep_frontiers = [frozenset([()])]
        sweep_supports: list[tuple[int, ...]] = [()]
        brute = [frozenset([()])]
        for i in range(1, g.n + 1):
            sweep.push(g.in_neighbors[i - 1])
            sweep_frontiers.append(sweep.frontiers)
            sweep_supports.append(sweep.support)
            brute.append(brute_frontiers(induced_prefix(g, i)))
        audits.append(
            GraphAudit(
                g=g,
                sweep_frontiers=sweep_frontiers,
                sweep_supports=sweep_supports,
                brute=brute,
                records=sweep.support_records,
                width_sweep=sweep.width,
                best=sweep.best,
                width_matching=width_via_matching(g),
                rightmost=brute_rightmost_max(g),
            )
        )
    return CorpusAudit(audits, time.perf_counter() - start)


def test_criterion_1_oracle_equivalence_on_random_corpus(corpus):
    with reported(
        "1. sweep == brute frontiers on every prefix of 1000 random DAGs, "
        "widths agree three ways, under 60 s"
    ):
        assert len(corpus.audits) == CORPUS_SIZE
        for audit in corpus.audits:
            for i in range(audit.g.n + 1):
                assert audit.sweep_frontiers[i] == audit.brute[i], (
                    f"prefix {i} of:\n{audit.g.to_edge_list()}"
                )
            assert audit.width_sweep == audit.width_matching == len(audit.rightmost)
            assert audit.best == audit.rightmost
        assert corpus.elapsed_s < 60.0, f"corpus audit took {corpus.elapsed_s:.1f}s"


def test_criterion_2_structural_bounds_hold_with_zero_violations(corpus):
    with reported(
        "2. frontier count <= 2**prefix-width, prefix widths nondecreasing <= k, "
        "no support re-entry"
    ):
        for audit in corpus.audits:
            previous_width = 0
            for i in range(audit.g.n + 1):
                prefix_width = max(len(a) for a in audit.brute[i])
                assert len(audit.sweep_frontiers[i]) <= 2**prefix_width
                assert prefix_width >= previous_width
                previous_width = prefix_width
            assert previous_width == audit.width_sweep
            memberships: dict[int, list[int]] = {}
            for i, support in enumerate(audit.sweep_supports):
                for v in support:
                    memberships.setdefault(v, []).append(i)
            for v, steps in memberships.items():
                assert steps[0] == v + 1, f"vertex {v} absent at its own step"
                assert steps == list(range(steps[0], steps[0] + len(steps))), (
                    f"vertex {v} re-entered the support"
                )


def test_criterion_3_extremal_frontier_counts():
    with reported(
        "3. final nonempty frontier count is 2**k - 1 on k independents "
        "and k on the k-staircase, k = 1..12"
    ):
        for k in range(1, 13):
            independent = compute_frontiers(gen_independent(k)).frontiers
            assert len(independent) - 1 == 2**k - 1
            staircase = compute_frontiers(gen_staircase(k)).frontiers
            assert len(staircase) - 1 == k


def test_criterion_4_linear_scaling_at_fixed_width():
    with reported(
        "4. chain-union k=3 p=0.05: 10x size gives a 5x..20x median wall-time step, "
        "n=10^6 under 30 s"
    ):
        configs = [
            GenConfig("chain-union", k=3, n=n, p=0.05, seed=1)
            for n in (10_000, 100_000, 1_000_000)
        ]
        records = bench_run(configs, repeats=5)
        for record in records:
            assert record.width_found == 3
        times = [record.wall_time_ns for record in records]
        assert times[2] < 30_000_000_000, f"n=10^6 took {times[2] / 1e9:.1f}s"
        for smaller, larger in zip(times, times[1:]):
            ratio = larger / smaller
            assert 5.0 <= ratio <= 20.0, f"wall-time ratio {ratio:.2f} outside [5, 20]"


def test_criterion_5_decision_aborts_early():
    with reported(
        "5. decide width<=3 on 10^5 independents: false in under 100 ms, "
        "max antichain size seen is exactly 4"
    ):
        g = gen_independent(100_000)
        start = time.perf_counter_ns()
        answer = decide_width_at_most(g, 3)
        elapsed_ns = time.perf_counter_ns() - start
        assert answer is False
        assert elapsed_ns < 100_000_000, f"decision took {elapsed_ns / 1e6:.2f} ms"
        sweep = FrontierSweep(max_width=3)
        for in_edges in g.in_neighbors:
            if not sweep.push(in_edges):
                break
        assert sweep.stats.max_antichain_size == 4
        assert sweep.step == 4


def _dfs_reachable(out: list[list[int]], source: int) -> set[int]:
    seen = {source}
    stack = [source]
    while stack:
        for w in out[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def test_criterion_6_stored_reach_bits_match_dfs(corpus):
    with reported("6. every stored reachability bit equals DFS reachability"):
        for audit in corpus.audits:
            out = audit.g.out_neighbors()
            for record in audit.records:
                reachable = _dfs_reachable(out, record.vertex)
                for offset in range(record.n_bits):
                    target = record.vertex + 1 + offset
                    assert record.reaches(target) == (target in reachable)


def test_criterion_7_domination_is_antisymmetric_and_frontiers_cover(corpus):
    with reported(
        "7. no mutual domination between distinct equal-size antichains; every "
        "non-frontier antichain is dominated by an equal-size frontier"
    ):
        for audit in corpus.audits:
            g = audit.g
            reach = transitive_closure(g).masks
            by_size: dict[int, list[tuple[tuple[int, ...], int, int]]] = {}
            for a in enumerate_antichains(g):
                member_mask = 0
                reach_union = 0
                for v in a:
                    member_mask |= 1 << v
                    reach_union |= reach[v]
                by_size.setdefault(len(a), []).append((a, member_mask, reach_union))
            frontiers = audit.brute[g.n]
            for group in by_size.values():
                for i, (a, a_mask, a_reach) in enumerate(group):
                    for b, b_mask, b_reach in group[i + 1 :]:
                        both = b_mask & ~a_reach == 0 and a_mask & ~b_reach == 0
                        assert not both, f"{a} and {b} dominate each other"
                for a, a_mask, a_reach in group:
                    if a in frontiers:
                        continue
                    assert any(
                        f_mask != a_mask and f_mask & ~a_reach == 0
                        for f, f_mask, f_reach in group
                        if f in frontiers
                    ), f"non-frontier {a} not dominated by any frontier"
