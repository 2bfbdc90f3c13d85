"""Core types and the verifier for resolvable sun/matching decompositions.

A decomposition assigns every edge of a host graph to exactly one block and
groups the blocks into parallel classes, each covering every vertex of the
host exactly once.  Blocks are single edges (one-factor classes) or suns:
an h-cycle with one pendant edge hanging off each cycle vertex.

The verifier in this module is deliberately independent of the builders: it
rebuilds the host edge set from the host descriptor and compares sorted edge
lists, so any constructed design can be certified without trusting the code
that produced it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]

COMPLETE = "complete"
COMPLETE_MINUS_F = "complete_minus_f"
BLOWN_CYCLE = "blown_cycle"

ONE_FACTOR = "one_factor"
SUN_FACTOR = "sun_factor"


def edge(u: int, v: int) -> Edge:
    """Normalized undirected edge: smaller endpoint first."""
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


def _canonical_indices(seq: tuple[int, ...]) -> list[int]:
    # Index order rotating/reflecting a cycle into canonical form: start at
    # the minimum vertex, proceed towards the smaller of its two neighbours.
    # All 2h dihedral writings of one cycle share this representative.
    k = len(seq)
    m = seq.index(min(seq))
    fwd = [(m + i) % k for i in range(k)]
    bwd = [(m - i) % k for i in range(k)]
    return fwd if seq[fwd[1]] <= seq[bwd[1]] else bwd


def canonical_cycle(vertices: Iterable[int]) -> tuple[int, ...]:
    """Canonical representative of a cycle under rotation and reflection."""
    seq = tuple(vertices)
    if len(seq) < 3:
        raise ValueError("a cycle needs at least three vertices")
    if len(set(seq)) != len(seq):
        raise ValueError(f"repeated vertex in cycle {seq}")
    return tuple(seq[i] for i in _canonical_indices(seq))


@dataclass(frozen=True, order=True)
class Sun:
    """An h-cycle plus one pendant vertex per cycle position.

    ``pendants[i]`` hangs off ``cycle[i]``; the edge set is the h cycle edges
    together with the h pendant edges.  Rendered as ``(a1,..,ah; b1,..,bh)``.
    """

    cycle: tuple[int, ...]
    pendants: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.cycle)

    def __str__(self) -> str:
        return "({}; {})".format(
            ",".join(map(str, self.cycle)), ",".join(map(str, self.pendants))
        )


def canonicalize_sun(raw_cycle: Iterable[int], raw_pendants: Iterable[int]) -> Sun:
    """Canonical form of a sun; idempotent and dihedral-invariant.

    The cycle is rotated so its minimum vertex comes first and oriented so
    the second vertex is the smaller of the first vertex's two neighbours;
    pendants are permuted along with their cycle positions.
    """
    cycle = tuple(raw_cycle)
    pendants = tuple(raw_pendants)
    h = len(cycle)
    if h < 3:
        raise ValueError("a sun needs a cycle of length at least 3")
    if len(pendants) != h:
        raise ValueError("pendant count must equal cycle length")
    if len(set(cycle) | set(pendants)) != 2 * h:
        raise ValueError(f"sun vertices must be distinct: ({cycle}; {pendants})")
    order = _canonical_indices(cycle)
    return Sun(tuple(cycle[i] for i in order), tuple(pendants[i] for i in order))


def sun_edges(sun: Sun) -> set[Edge]:
    """The 2h normalized edges of a sun."""
    return set(_sun_edge_list(sun))


def _sun_edge_list(sun: Sun) -> list[Edge]:
    h = len(sun.cycle)
    out = [edge(sun.cycle[i], sun.cycle[(i + 1) % h]) for i in range(h)]
    out.extend(edge(sun.cycle[i], sun.pendants[i]) for i in range(h))
    return out


def _sun_problem(sun: Sun) -> str | None:
    """Reason a sun block is malformed, or None if it is a valid sun."""
    if len(sun.cycle) < 3:
        return "cycle shorter than 3"
    if len(sun.pendants) != len(sun.cycle):
        return "pendant count differs from cycle length"
    if len(set(sun.cycle) | set(sun.pendants)) != 2 * len(sun.cycle):
        return "repeated vertex"
    return None


@dataclass(frozen=True)
class HostGraph:
    """Host graph descriptor: K_v, K_v minus a perfect matching, or a blown
    cycle (m groups of n vertices, consecutive groups completely joined)."""

    kind: str
    order: int
    matching: tuple[Edge, ...] = ()
    groups: tuple[tuple[int, ...], ...] = ()

    @staticmethod
    def complete(v: int) -> "HostGraph":
        return HostGraph(COMPLETE, v)

    @staticmethod
    def complete_minus_f(v: int, matching: Iterable[Iterable[int]]) -> "HostGraph":
        pairs = tuple(sorted(edge(u, w) for u, w in matching))
        return HostGraph(COMPLETE_MINUS_F, v, matching=pairs)

    @staticmethod
    def blown_cycle(groups: Iterable[Iterable[int]]) -> "HostGraph":
        gs = tuple(tuple(g) for g in groups)
        order = sum(len(g) for g in gs)
        return HostGraph(BLOWN_CYCLE, order, groups=gs)


def host_vertices(host: HostGraph) -> list[int]:
    if host.kind == BLOWN_CYCLE:
        return [x for g in host.groups for x in g]
    return list(range(host.order))


def host_edges(host: HostGraph) -> list[Edge]:
    """The host edge set as a sorted list (the reference for partitioning).

    Raises ValueError on a malformed descriptor (imperfect matching,
    overlapping or unevenly sized groups, fewer than three groups).
    """
    if host.kind == COMPLETE:
        if host.order < 1:
            raise ValueError("complete host needs a positive order")
        v = host.order
        return [(u, w) for u in range(v) for w in range(u + 1, v)]
    if host.kind == COMPLETE_MINUS_F:
        v = host.order
        if v < 2 or v % 2:
            raise ValueError("complete-minus-F host needs a positive even order")
        pairs = [edge(u, w) for u, w in host.matching]
        touched = {x for e in pairs for x in e}
        if (
            len(pairs) != v // 2
            or len(touched) != v
            or any(x < 0 or x >= v for x in touched)
        ):
            raise ValueError("removed matching is not a perfect matching of the host")
        removed = set(pairs)
        return [
            (u, w)
            for u in range(v)
            for w in range(u + 1, v)
            if (u, w) not in removed
        ]
    if host.kind == BLOWN_CYCLE:
        groups = host.groups
        m = len(groups)
        if m < 3:
            raise ValueError("blown cycle needs at least three groups")
        n = len(groups[0])
        if n < 1 or any(len(g) != n for g in groups):
            raise ValueError("blown cycle groups must share one positive size")
        flat = [x for g in groups for x in g]
        if len(set(flat)) != len(flat):
            raise ValueError("blown cycle groups must be disjoint")
        out: list[Edge] = []
        for i in range(m):
            for u in groups[i]:
                for w in groups[(i + 1) % m]:
                    out.append(edge(u, w))
        return sorted(out)
    raise ValueError(f"unknown host kind {host.kind!r}")


@dataclass(frozen=True)
class ParallelClass:
    """A uniform parallel class: either a perfect matching or a sun factor."""

    kind: str
    edges: tuple[Edge, ...] = ()
    suns: tuple[Sun, ...] = ()

    @staticmethod
    def one_factor(edges: Iterable[Iterable[int]]) -> "ParallelClass":
        return ParallelClass(ONE_FACTOR, edges=tuple(tuple(e) for e in edges))

    @staticmethod
    def sun_factor(suns: Iterable[Sun]) -> "ParallelClass":
        return ParallelClass(SUN_FACTOR, suns=tuple(suns))


@dataclass(frozen=True)
class Decomposition:
    """A host graph plus an ordered list of parallel classes."""

    host: HostGraph
    classes: tuple[ParallelClass, ...]

    @property
    def r(self) -> int:
        return sum(1 for c in self.classes if c.kind == ONE_FACTOR)

    @property
    def s(self) -> int:
        return sum(1 for c in self.classes if c.kind == SUN_FACTOR)


@dataclass(frozen=True, order=True)
class Finding:
    """One structured verification violation.

    ``class_index`` is -1 for decomposition-level findings (edge partition
    defects, malformed host); ordering gives the deterministic report order.
    """

    class_index: int
    kind: str
    detail: str

    def __str__(self) -> str:
        where = "decomposition" if self.class_index < 0 else f"class {self.class_index}"
        return f"{where}: {self.kind}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    r: int
    s: int
    violations: tuple[Finding, ...]


def _fail(findings: list[Finding], r: int = 0, s: int = 0) -> VerificationReport:
    return VerificationReport(False, r, s, tuple(sorted(findings)))


def verify(dec: Decomposition, expected_h: int | None = None) -> VerificationReport:
    """Certify a claimed decomposition; all defects are reported, never raised.

    Passes iff (i) the block edges partition the host edge set exactly,
    (ii) every class covers every host vertex exactly once, (iii) every class
    is uniform, and (iv) all sun blocks are valid suns of one common cycle
    length (``expected_h`` when given, otherwise inferred from the first sun).
    The report carries the counts of one-factor and sun-factor classes and a
    deterministic list of findings (class index, then lexicographic).
    """
    findings: list[Finding] = []
    try:
        target_edges = host_edges(dec.host)
    except ValueError as exc:
        return _fail([Finding(-1, "malformed-host", str(exc))])

    vset = set(host_vertices(dec.host))
    r = sum(1 for c in dec.classes if c.kind == ONE_FACTOR)
    s = sum(1 for c in dec.classes if c.kind == SUN_FACTOR)

    sun_h = expected_h
    covered: list[Edge] = []
    for ci, cls in enumerate(dec.classes):
        hits: Counter[int] = Counter()
        if cls.kind == ONE_FACTOR:
            if cls.suns:
                findings.append(
                    Finding(ci, "non-uniform-class", "one-factor class carries sun blocks")
                )
            for u, w in cls.edges:
                hits[u] += 1
                hits[w] += 1
                if u == w:
                    findings.append(Finding(ci, "malformed-edge", f"loop at vertex {u}"))
                else:
                    covered.append(edge(u, w))
        elif cls.kind == SUN_FACTOR:
            if cls.edges:
                findings.append(
                    Finding(ci, "non-uniform-class", "sun-factor class carries edge blocks")
                )
            for sun in cls.suns:
                problem = _sun_problem(sun)
                if problem is not None:
                    findings.append(Finding(ci, "malformed-sun", f"sun {sun}: {problem}"))
                else:
                    if sun_h is None:
                        sun_h = sun.h
                    elif sun.h != sun_h:
                        findings.append(
                            Finding(
                                ci,
                                "non-uniform-class",
                                f"sun {sun} has cycle length {sun.h}, expected {sun_h}",
                            )
                        )
                    covered.extend(_sun_edge_list(sun))
                for x in sun.cycle:
                    hits[x] += 1
                for x in sun.pendants:
                    hits[x] += 1
        else:
            findings.append(
                Finding(ci, "non-uniform-class", f"unknown class kind {cls.kind!r}")
            )
        for x in sorted(vset - hits.keys()):
            findings.append(Finding(ci, "vertex-missed", f"vertex {x} not covered"))
        for x in sorted(hits):
            if x not in vset:
                findings.append(Finding(ci, "foreign-vertex", f"vertex {x} outside host"))
            elif hits[x] > 1:
                findings.append(
                    Finding(ci, "vertex-repeated", f"vertex {x} covered {hits[x]} times")
                )

    want = Counter(target_edges)
    got = Counter(covered)
    for e in sorted(set(want) | set(got)):
        g = got[e]
        if e not in want:
            findings.append(Finding(-1, "foreign-edge", f"edge {e} not in host (used {g}x)"))
        elif g == 0:
            findings.append(Finding(-1, "missing-edge", f"edge {e} never covered"))
        elif g > 1:
            findings.append(Finding(-1, "duplicated-edge", f"edge {e} covered {g} times"))

    findings.sort()
    return VerificationReport(not findings, r, s, tuple(findings))


def vertex_profile(dec: Decomposition) -> dict[int, tuple[int, int]]:
    """Per-vertex (a, b): sun classes met with degree 3 resp. degree 1.

    A vertex has degree 3 in a sun class when it sits on a cycle and degree 1
    when it is a pendant, so a + b equals the number of sun classes.  Rejects
    decompositions that do not pass verify().
    """
    report = verify(dec)
    if not report.passed:
        raise ValueError("vertex_profile requires a decomposition that passes verify")
    profile = {x: [0, 0] for x in host_vertices(dec.host)}
    for cls in dec.classes:
        if cls.kind != SUN_FACTOR:
            continue
        for sun in cls.suns:
            for x in sun.cycle:
                profile[x][0] += 1
            for x in sun.pendants:
                profile[x][1] += 1
    return {x: (a, b) for x, (a, b) in profile.items()}


def canonical_decomposition(dec: Decomposition) -> Decomposition:
    """Canonical form: suns canonicalized, blocks sorted within each class.

    Class order is preserved (it is part of the construction's presentation);
    the result is the reference form for serialization and equality tests.
    """
    classes: list[ParallelClass] = []
    for cls in dec.classes:
        if cls.kind == ONE_FACTOR:
            classes.append(
                ParallelClass.one_factor(sorted(edge(u, w) for u, w in cls.edges))
            )
        elif cls.kind == SUN_FACTOR:
            suns = sorted(canonicalize_sun(s.cycle, s.pendants) for s in cls.suns)
            classes.append(ParallelClass.sun_factor(suns))
        else:
            raise ValueError(f"unknown class kind {cls.kind!r}")
    host = dec.host
    if host.kind == COMPLETE_MINUS_F:
        host = HostGraph.complete_minus_f(host.order, host.matching)
    return Decomposition(host, tuple(classes))
