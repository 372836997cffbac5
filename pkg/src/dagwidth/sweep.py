"""One-pass frontier-antichain sweep: width and right-most maximum antichain.

The sweep consumes vertices in topological order and, for the processed
prefix, maintains every *frontier antichain*: an antichain that no other
antichain of the same size dominates, where B dominates A when every member
of B can be reached from A (a vertex reaches itself). Frontier antichains of
the grown prefix come from exactly two moves per incoming vertex t:

* type 1 — extend each old frontier that does not reach t by t itself;
* type 2 — keep each old frontier unless one of the new type-1 antichains of
  the same size dominates it.

Two structural facts keep this cheap. First, a prefix of width w has at most
``2**w`` frontier antichains (the empty one included), so the state stays
small whenever the width is small. Second, domination tests only ever ask for
reachability between the incoming vertex and members of the *support* — the
union of the current frontier antichains — and a vertex's stay in the support
is one contiguous interval of steps beginning right after its own step. Each
needed fact is therefore a single bit, recorded the moment its target vertex
arrives, in a per-vertex append-only sequence (`SupportRecord`).

At every step the largest frontier antichain is unique; after the last vertex
it is the right-most maximum antichain of the whole DAG and its size is the
width. Capping the sweep (`max_width`) turns it into a decision procedure
that aborts as soon as any antichain one larger than the cap appears, which
bounds the work by the cap instead of the true width.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import Dag

Antichain = tuple[int, ...]  # strictly increasing vertex ids
FrontierSet = frozenset[Antichain]


@dataclass(slots=True)
class SupportRecord:
    """Reachability bits for one vertex across its stay in the support.

    Bit ``t - vertex - 1`` of ``bits`` answers "does this vertex reach t";
    ``n_bits`` of them exist, one per step the vertex was still in the
    support when vertex t arrived. The stay is contiguous and starts right
    after the vertex's own step, so the offset arithmetic never has holes.
    Records are append-only and never reclaimed.
    """

    vertex: int
    bits: int = 0
    n_bits: int = 0

    @property
    def entry_step(self) -> int:
        """First step count at which the vertex belongs to the support."""
        return self.vertex + 1

    def covers(self, target: int) -> bool:
        return 0 <= target - self.vertex - 1 < self.n_bits

    def reaches(self, target: int) -> bool:
        offset = target - self.vertex - 1
        assert 0 <= offset < self.n_bits, (
            f"no reachability bit for vertex {self.vertex} -> {target}"
        )
        return (self.bits >> offset) & 1 == 1


@dataclass(slots=True)
class SweepStats:
    """Diagnostics accumulated over a run.

    ``max_frontier_count`` counts nonempty frontier antichains (the empty one
    is a bookkeeping member and is excluded from user-facing counts) at the
    worst step; ``max_support_size`` likewise. ``max_antichain_size`` is the
    largest antichain ever created, which for a capped run is what tripped
    the cap.
    """

    max_frontier_count: int = 0
    max_support_size: int = 0
    max_antichain_size: int = 0


class FrontierSweep:
    """Streaming sweep state; feed one vertex per ``push`` call.

    Vertex ids are implicit: the i-th push processes vertex i, and its
    in-edges must name already-pushed vertices. Each push is the pair
    ``update_reachability`` (record which support vertices reach the new
    vertex) then ``sweep_step`` (rebuild the frontier set); the two phases
    are exposed separately as well.
    """

    def __init__(self, max_width: int | None = None):
        if max_width is not None and max_width < 0:
            raise ValueError("max_width must be >= 0")
        self._step = 0
        self._frontiers: list[Antichain] = [()]
        self._support: list[int] = []
        self._support_set: set[int] = set()
        self._records: list[SupportRecord] = []
        self._best: Antichain = ()
        self._stats = SweepStats()
        self._max_width = max_width
        self._aborted = False
        self._pending: int | None = None
        self._reaching: set[int] = set()

    # -- read-only views -------------------------------------------------

    @property
    def step(self) -> int:
        """Number of vertices consumed so far."""
        return self._step

    @property
    def frontiers(self) -> FrontierSet:
        """Current frontier antichains, the empty antichain included."""
        return frozenset(self._frontiers)

    @property
    def best(self) -> Antichain:
        """Unique maximum-size frontier antichain of the current prefix."""
        return self._best

    @property
    def width(self) -> int:
        return len(self._best)

    @property
    def support(self) -> tuple[int, ...]:
        """Union of the current frontier antichains, ascending."""
        return tuple(self._support)

    @property
    def stats(self) -> SweepStats:
        return self._stats

    @property
    def aborted(self) -> bool:
        """True once the width cap was exceeded; the state is then frozen."""
        return self._aborted

    @property
    def support_records(self) -> tuple[SupportRecord, ...]:
        """One record per consumed vertex, indexed by vertex id."""
        return tuple(self._records)

    def support_record(self, vertex: int) -> SupportRecord:
        return self._records[vertex]

    # -- the two phases of a step ----------------------------------------

    def update_reachability(self, in_edges: Iterable[int]) -> None:
        """Record, for every support vertex, whether it reaches the new vertex.

        A support vertex u reaches the incoming vertex t iff some in-edge
        (j, t) has u == j, or u reaches j — and the latter is exactly u's
        stored bit for j, which exists because u sitting in today's support
        with u < j means u was still in the support when j arrived.
        """
        if self._aborted:
            raise RuntimeError("sweep aborted by width cap")
        assert self._pending is None, "sweep_step missing for previous vertex"
        t = self._step
        records = self._records
        support = self._support
        support_set = self._support_set
        reaching: set[int] = set()
        for j in in_edges:
            assert 0 <= j < t, "in-edges must point at already-pushed vertices"
            if j in support_set:
                reaching.add(j)
            for u in support:
                if u >= j:
                    break  # ascending, and u > j cannot reach j
                if u in reaching:
                    continue
                r = records[u]
                if (r.bits >> (j - u - 1)) & 1:
                    reaching.add(u)
        for u in support:
            r = records[u]
            if u in reaching:
                r.bits |= 1 << r.n_bits
            r.n_bits += 1
        records.append(SupportRecord(t))
        self._reaching = reaching
        self._pending = t

    def sweep_step(self) -> None:
        """Rebuild the frontier set around the pending vertex."""
        t = self._pending
        assert t is not None, "update_reachability must run first"
        self._pending = None
        reaching = self._reaching
        cap = self._max_width
        records = self._records
        new_frontiers: list[Antichain] = [()]
        type1_by_size: dict[int, list[Antichain]] = {}
        best: Antichain = ()
        to_check: list[Antichain] = []
        for a in self._frontiers:
            if reaching.isdisjoint(a):
                # type 1: a cannot reach t, so a + t is an antichain and a
                # frontier of the grown prefix; a itself also survives, since
                # any dominator among the type-1 antichains would need a to
                # reach t.
                b = a + (t,)
                if cap is not None and len(b) > cap:
                    self._aborted = True
                    stats = self._stats
                    if len(b) > stats.max_antichain_size:
                        stats.max_antichain_size = len(b)
                    if len(b) > len(self._best):
                        self._best = b
                    self._step = t + 1
                    return
                new_frontiers.append(b)
                type1_by_size.setdefault(len(b), []).append(b)
                if len(b) > len(best):
                    best = b
                if a:
                    new_frontiers.append(a)
            else:
                to_check.append(a)
        for a in to_check:
            # type 2: a reaches t, so an equal-size type-1 antichain may
            # dominate it. b dominates a iff a reaches every member of b;
            # the member t is covered by this branch, the rest by stored bits.
            candidates = type1_by_size.get(len(a))
            if candidates:
                dominated = False
                for b in candidates:
                    for x in b:
                        if x == t or x in a:
                            continue
                        for s in a:
                            if s < x and (records[s].bits >> (x - s - 1)) & 1:
                                break
                        else:
                            break  # x unreached: b does not dominate a
                    else:
                        dominated = True
                        break
                if dominated:
                    continue
            if a:
                new_frontiers.append(a)
                if len(a) > len(best):
                    best = a
        support_set: set[int] = set()
        for a in new_frontiers:
            support_set.update(a)
        self._frontiers = new_frontiers
        self._support = sorted(support_set)
        self._support_set = support_set
        self._best = best
        self._step = t + 1
        stats = self._stats
        nonempty = len(new_frontiers) - 1
        if nonempty > stats.max_frontier_count:
            stats.max_frontier_count = nonempty
        if len(support_set) > stats.max_support_size:
            stats.max_support_size = len(support_set)
        if len(best) > stats.max_antichain_size:
            stats.max_antichain_size = len(best)

    def push(self, in_edges: Iterable[int]) -> bool:
        """Process the next vertex; False once the width cap is exceeded."""
        self.update_reachability(in_edges)
        self.sweep_step()
        return not self._aborted


def antichain_reaches(antichain: Antichain, target: int, sweep: FrontierSweep) -> bool:
    """Does some member of ``antichain`` reach ``target``?

    A member equal to the target counts. Meaningful only while every member
    and the target sit in the current support or are the vertex being
    processed; outside that window the bits were never recorded and the call
    is a contract violation (asserted in debug runs, undefined under -O).
    """
    records = sweep._records
    for s in antichain:
        if s == target:
            return True
        if s < target and records[s].reaches(target):
            return True
    return False


def antichain_dominates(dominator: Antichain, dominated: Antichain, sweep: FrontierSweep) -> bool:
    """Equal sizes, and every member of ``dominator`` reached from ``dominated``."""
    if len(dominator) != len(dominated):
        return False
    return all(antichain_reaches(dominated, x, sweep) for x in dominator)


class FrontierResult(NamedTuple):
    frontiers: FrontierSet
    best: Antichain
    stats: SweepStats


def compute_frontiers(g: Dag) -> FrontierResult:
    """Sweep the whole DAG; final frontier set, its unique largest member
    (the right-most maximum antichain), and run diagnostics."""
    sweep = FrontierSweep()
    for in_edges in g.in_neighbors:
        sweep.push(in_edges)
    return FrontierResult(sweep.frontiers, sweep.best, sweep.stats)


def compute_width(g: Dag) -> tuple[int, Antichain]:
    """Width of g together with its right-most maximum antichain."""
    result = compute_frontiers(g)
    return len(result.best), result.best


def decide_width_at_most(g: Dag, w: int) -> bool:
    """Is width(g) <= w? Aborts on the first antichain of size w + 1, so the
    cost is bounded by w even when the true width is huge."""
    if w < 0:
        raise ValueError("width bound must be >= 0")
    sweep = FrontierSweep(max_width=w)
    for in_edges in g.in_neighbors:
        if not sweep.push(in_edges):
            return False
    return True
