"""Cycle-factorization ingredients: direct constructions, validated seed
catalogs, and bounded exact backtracking search.

A cycle factorization splits the edges of K_n (n odd) or K_n minus a
perfect matching F (n even) into parallel classes of h-cycles.  These are
the ingredients the inflation builder consumes; every factorization handed
out by this module has been re-checked by the validator
first, regardless of how it was obtained.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, Mapping

from .core import (
    COMPLETE,
    COMPLETE_MINUS_F,
    Edge,
    Finding,
    HostGraph,
    VerificationReport,
    canonical_cycle,
    edge,
    host_edges,
)

DEFAULT_SEARCH_BUDGET = 2_000_000

FOUND = "found"
NONEXISTENT = "nonexistent"
BUDGET_EXHAUSTED = "budget-exhausted"

# Classical exceptions: K_6 - F and K_12 - F have no triangle factorization.
# Builds whose route needs one of these report the ingredient as missing
# instead of searching a space known to be empty.
NONEXISTENT_MINUS_F = {(6, 3), (12, 3)}


class IngredientUnavailable(Exception):
    """A required cycle factorization could not be supplied.

    ``outcome`` distinguishes a proven-empty search space ("nonexistent")
    from a search stopped by its node budget ("budget-exhausted").
    """

    def __init__(self, n: int, h: int, host_kind: str, outcome: str):
        self.n = n
        self.h = h
        self.host_kind = host_kind
        self.outcome = outcome
        what = f"K_{n}" if host_kind == COMPLETE else f"K_{n} minus a perfect matching"
        super().__init__(f"no {h}-cycle factorization of {what} available: {outcome}")


class SeedCatalogError(Exception):
    """A seed record failed to load or validate (message names the file)."""


@dataclass(frozen=True)
class CycleFactorization:
    """Parallel classes of h-cycles covering the host edges exactly once.

    For a complete host of odd order n there are (n-1)/2 classes; for a
    complete-minus-F host of even order, (n-2)/2 classes plus the removed
    matching carried on the host.  ``source`` records where the object came
    from (construction name, catalog file, or search).
    """

    host: HostGraph
    h: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    source: str = "unspecified"

    @property
    def removed_matching(self) -> tuple[Edge, ...]:
        return self.host.matching


def validate_cycle_factorization(cf: CycleFactorization) -> VerificationReport:
    """Certify a claimed cycle factorization; defects become findings."""
    findings: list[Finding] = []
    host = cf.host
    if host.kind not in (COMPLETE, COMPLETE_MINUS_F):
        findings.append(
            Finding(-1, "malformed-host", f"unsupported host kind {host.kind!r}")
        )
        return VerificationReport(False, 0, 0, tuple(findings))
    try:
        target_edges = host_edges(host)
    except ValueError as exc:
        return VerificationReport(
            False, 0, 0, (Finding(-1, "malformed-host", str(exc)),)
        )

    n = host.order
    h = cf.h
    if h < 3 or n % h:
        findings.append(
            Finding(-1, "bad-parameters", f"cycle length {h} must be >= 3 and divide {n}")
        )
    if host.kind == COMPLETE and n % 2 == 0:
        findings.append(
            Finding(-1, "bad-parameters", "complete host must have odd order")
        )
    expected = (n - 1) // 2 if host.kind == COMPLETE else (n - 2) // 2
    if len(cf.classes) != expected:
        findings.append(
            Finding(
                -1,
                "wrong-class-count",
                f"{len(cf.classes)} classes, expected {expected}",
            )
        )

    covered: list[Edge] = []
    vset = set(range(n))
    for ci, cycles in enumerate(cf.classes):
        hits: Counter[int] = Counter()
        for cyc in cycles:
            hits.update(cyc)
            if len(cyc) != h:
                findings.append(
                    Finding(ci, "malformed-cycle", f"cycle {cyc} has length {len(cyc)}")
                )
            elif len(set(cyc)) != len(cyc):
                findings.append(
                    Finding(ci, "malformed-cycle", f"repeated vertex in cycle {cyc}")
                )
            else:
                covered.extend(
                    edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
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
    return VerificationReport(not findings, 0, 0, tuple(findings))


# ---------------------------------------------------------------------------
# Exact backtracking search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    status: str  # found | nonexistent | budget-exhausted
    factorization: CycleFactorization | None
    nodes: int


def _iter_cycles(anchor: int, avail: list[int], free: int, h: int) -> Iterator[tuple[int, ...]]:
    """Canonical h-cycles through ``anchor`` in lexicographic order.

    Vertices are drawn from the ``free`` bitmask and consecutive pairs must
    be available edges.  Rotations are excluded by anchoring at the smallest
    vertex of the cycle, reflections by requiring the second vertex to be
    smaller than the last.
    """
    path = [anchor]

    def rec(mask: int) -> Iterator[tuple[int, ...]]:
        u = path[-1]
        if len(path) == h - 1:
            # Last vertex: must close back to the anchor and beat path[1].
            m = avail[u] & mask & avail[anchor] & (-1 << (path[1] + 1))
            while m:
                bit = m & -m
                m ^= bit
                path.append(bit.bit_length() - 1)
                yield tuple(path)
                path.pop()
            return
        m = avail[u] & mask
        while m:
            bit = m & -m
            m ^= bit
            path.append(bit.bit_length() - 1)
            yield from rec(mask ^ bit)
            path.pop()

    yield from rec(free & ~(1 << anchor))


def search_cycle_factorization(
    host: HostGraph, h: int, budget: int | None = None
) -> SearchResult:
    """Exact class-by-class backtracking search for a cycle factorization.

    Each parallel class is grown by repeatedly extending the smallest
    uncovered vertex with a canonical h-cycle (exact-cover style).  Classes
    are forced into increasing order of their cycle through vertex 0, which
    breaks the class-permutation symmetry without losing any factorization,
    so an exhausted search certifies nonexistence.  ``budget`` caps the
    number of cycle placements tried (None = unbounded); identical inputs
    and budget always produce the identical result.
    """
    if h < 3:
        raise ValueError("h must be at least 3")
    n = host.order
    if n % h:
        raise ValueError(f"cycle length {h} must divide the host order {n}")
    if host.kind == COMPLETE and n % 2 == 0:
        raise ValueError("complete host must have odd order for a cycle factorization")
    if host.kind not in (COMPLETE, COMPLETE_MINUS_F):
        raise ValueError(f"unsupported search host kind {host.kind!r}")

    target = (n - 1) // 2 if host.kind == COMPLETE else (n - 2) // 2
    avail = [0] * n
    for u, w in host_edges(host):
        avail[u] |= 1 << w
        avail[w] |= 1 << u
    full = (1 << n) - 1

    nodes = 0
    over_budget = False
    classes: list[tuple[tuple[int, ...], ...]] = []

    def toggle(cyc: tuple[int, ...], on: bool) -> None:
        for i in range(h):
            u, w = cyc[i], cyc[(i + 1) % h]
            if on:
                avail[u] &= ~(1 << w)
                avail[w] &= ~(1 << u)
            else:
                avail[u] |= 1 << w
                avail[w] |= 1 << u

    def extend(cycles: list[tuple[int, ...]], unplaced: int, floor) -> bool:
        nonlocal nodes, over_budget
        if unplaced == 0:
            classes.append(tuple(cycles))
            if len(classes) == target or extend([], full, cycles[0]):
                return True
            classes.pop()
            return False
        first_of_class = not cycles
        if first_of_class:
            # Smallest vertex first, so every class's first cycle runs through
            # vertex 0 and the inter-class ordering constraint applies.
            anchor = (unplaced & -unplaced).bit_length() - 1
        else:
            # Most-constrained vertex; any unplaced vertex needs two available
            # unplaced neighbours to sit on a cycle of this class.
            anchor = -1
            best = n + 1
            m = unplaced
            while m:
                bit = m & -m
                m ^= bit
                x = bit.bit_length() - 1
                d = (avail[x] & unplaced).bit_count()
                if d < 2:
                    return False
                if d < best:
                    best = d
                    anchor = x
        for cyc in _iter_cycles(anchor, avail, unplaced, h):
            if first_of_class and floor is not None and cyc <= floor:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                over_budget = True
                return False
            toggle(cyc, True)
            cycles.append(cyc)
            mask = 0
            for x in cyc:
                mask |= 1 << x
            done = extend(cycles, unplaced & ~mask, floor)
            cycles.pop()
            toggle(cyc, False)
            if done:
                return True
            if over_budget:
                return False
        return False

    found = extend([], full, None)
    if found:
        canon = tuple(
            tuple(sorted(canonical_cycle(c) for c in cls)) for cls in classes
        )
        cf = CycleFactorization(host, h, canon, source="search")
        return SearchResult(FOUND, cf, nodes)
    return SearchResult(BUDGET_EXHAUSTED if over_budget else NONEXISTENT, None, nodes)


# ---------------------------------------------------------------------------
# Direct constructions for the Hamiltonian shapes (h = n)
# ---------------------------------------------------------------------------


def _zigzag_path(i: int, mod: int) -> list[int]:
    # i, i+1, i-1, i+2, i-2, ... over Z_mod; consecutive differences use
    # every magnitude exactly once, so rotated copies are edge-disjoint.
    path = [i % mod]
    for k in range(1, mod):
        off = (k + 1) // 2 if k % 2 else -(k // 2)
        path.append((i + off) % mod)
    return path


def _hamiltonian_odd(n: int) -> CycleFactorization:
    """K_n (n odd) as (n-1)/2 Hamiltonian cycles: rotational zigzag scheme."""
    mod = n - 1
    classes = []
    for i in range(mod // 2):
        cyc = canonical_cycle([n - 1] + _zigzag_path(i, mod))
        classes.append((cyc,))
    return CycleFactorization(
        HostGraph.complete(n), n, tuple(classes), source="construction:zigzag-hamiltonian"
    )


def _circle_matching(i: int, n: int) -> list[Edge]:
    # Round i of the circle method on Z_{n-1} plus a fixed hub n-1.
    mod = n - 1
    pairs = [edge(n - 1, i % mod)]
    for j in range(1, n // 2):
        pairs.append(edge((i + j) % mod, (i - j) % mod))
    return pairs


def _hamiltonian_minus_f(n: int) -> CycleFactorization:
    """K_n - F (n even) as (n-2)/2 Hamiltonian cycles.

    The circle method gives n-1 perfect matchings; the union of two
    consecutive rounds is always a single Hamiltonian cycle (the two-step
    map is x -> x+2 on an odd modulus), and the unpaired last round is F.
    """
    classes = []
    for k in range((n - 2) // 2):
        union = _circle_matching(2 * k, n) + _circle_matching(2 * k + 1, n)
        nbrs: dict[int, list[int]] = {}
        for u, w in union:
            nbrs.setdefault(u, []).append(w)
            nbrs.setdefault(w, []).append(u)
        cyc = [n - 1]
        prev = None
        while True:
            nxt = [x for x in sorted(nbrs[cyc[-1]]) if x != prev]
            prev = cyc[-1]
            if nxt[0] == n - 1:
                break
            cyc.append(nxt[0])
        classes.append((canonical_cycle(cyc),))
    f = _circle_matching(n - 2, n)
    host = HostGraph.complete_minus_f(n, f)
    return CycleFactorization(
        host, n, tuple(classes), source="construction:paired-rounds-hamiltonian"
    )


# ---------------------------------------------------------------------------
# Resolution: construction, then catalog, then search
# ---------------------------------------------------------------------------


def canonical_perfect_matching(n: int) -> tuple[Edge, ...]:
    """The fixed matching {0,1}, {2,3}, ... used as F for searched hosts."""
    return tuple((2 * i, 2 * i + 1) for i in range(n // 2))


def _certified(cf: CycleFactorization) -> CycleFactorization:
    report = validate_cycle_factorization(cf)
    if not report.passed:
        head = "; ".join(str(f) for f in report.violations[:3])
        raise RuntimeError(f"internal error: factorization failed validation: {head}")
    return cf


def _catalog_get(
    catalog: Mapping | None, n: int, h: int, kind: str
) -> CycleFactorization | None:
    if not catalog:
        return None
    return catalog.get((n, h, kind))


def cycle_factorization_odd(
    n: int,
    h: int,
    *,
    catalog: Mapping | None = None,
    budget: int | None = DEFAULT_SEARCH_BUDGET,
) -> CycleFactorization:
    """An h-cycle factorization of K_n, n odd, h | n; validated before return.

    Resolution order: direct construction (Hamiltonian shape h = n), the
    seed catalog, then bounded search.
    """
    if h < 3:
        raise ValueError("h must be at least 3")
    if n % 2 == 0 or n % h:
        raise ValueError(f"order {n} must be odd and divisible by h={h}")
    if h == n:
        return _certified(_hamiltonian_odd(n))
    cf = _catalog_get(catalog, n, h, COMPLETE)
    if cf is not None:
        return _certified(cf)
    result = search_cycle_factorization(HostGraph.complete(n), h, budget)
    if result.status != FOUND:
        raise IngredientUnavailable(n, h, COMPLETE, result.status)
    return _certified(result.factorization)


def cycle_factorization_minus_f(
    n: int,
    h: int,
    *,
    catalog: Mapping | None = None,
    budget: int | None = DEFAULT_SEARCH_BUDGET,
) -> CycleFactorization:
    """An h-cycle factorization of K_n - F, n even, h | n, plus F itself.

    The two classically missing triangle cases are pre-tabled and reported
    as nonexistent without a search.
    """
    if h < 3:
        raise ValueError("h must be at least 3")
    if n % 2 or n % h:
        raise ValueError(f"order {n} must be even and divisible by h={h}")
    if (n, h) in NONEXISTENT_MINUS_F:
        raise IngredientUnavailable(n, h, COMPLETE_MINUS_F, NONEXISTENT)
    if h == n:
        return _certified(_hamiltonian_minus_f(n))
    cf = _catalog_get(catalog, n, h, COMPLETE_MINUS_F)
    if cf is not None:
        return _certified(cf)
    host = HostGraph.complete_minus_f(n, canonical_perfect_matching(n))
    result = search_cycle_factorization(host, h, budget)
    if result.status != FOUND:
        raise IngredientUnavailable(n, h, COMPLETE_MINUS_F, result.status)
    return _certified(result.factorization)


@dataclass
class IngredientSource:
    """Resolves and caches cycle-factorization ingredients for the builder.

    One source shared across builds guarantees that every build for the same
    (v, h) consumes the same ingredient; failures are cached too so a missing
    ingredient is searched for at most once.
    """

    catalog: Mapping | None = None
    budget: int | None = DEFAULT_SEARCH_BUDGET
    _cache: dict = field(default_factory=dict, repr=False)

    def odd(self, n: int, h: int) -> CycleFactorization:
        return self._get(COMPLETE, n, h, cycle_factorization_odd)

    def minus_f(self, n: int, h: int) -> CycleFactorization:
        return self._get(COMPLETE_MINUS_F, n, h, cycle_factorization_minus_f)

    def _get(self, kind: str, n: int, h: int, fn) -> CycleFactorization:
        key = (kind, n, h)
        if key not in self._cache:
            try:
                self._cache[key] = fn(n, h, catalog=self.catalog, budget=self.budget)
            except IngredientUnavailable as exc:
                self._cache[key] = exc
        value = self._cache[key]
        if isinstance(value, IngredientUnavailable):
            raise value
        return value


def load_seed_catalog(path) -> dict[tuple[int, int, str], CycleFactorization]:
    """Load and validate every seed record under ``path`` (*.json files).

    Records use the standard document schema with cycle-factor classes.
    Any unreadable file raises OSError; malformed or invalid records raise
    SeedCatalogError naming the offending file.  Keys are (n, h, host kind).
    """
    from .serialization import DocumentFormatError, loads_document

    directory = Path(path)
    catalog: dict[tuple[int, int, str], CycleFactorization] = {}
    for file in sorted(directory.glob("*.json")):
        text = file.read_text(encoding="utf-8")
        try:
            doc = loads_document(text)
        except DocumentFormatError as exc:
            raise SeedCatalogError(f"{file.name}: {exc}") from exc
        payload = doc.payload
        if not isinstance(payload, CycleFactorization):
            raise SeedCatalogError(f"{file.name}: not a cycle-factorization record")
        report = validate_cycle_factorization(payload)
        if not report.passed:
            head = "; ".join(str(f) for f in report.violations[:3])
            raise SeedCatalogError(f"{file.name}: invalid record: {head}")
        key = (payload.host.order, payload.h, payload.host.kind)
        if key in catalog:
            raise SeedCatalogError(f"{file.name}: duplicate record for {key}")
        catalog[key] = replace(payload, source=f"catalog:{file.name}")
    return catalog
