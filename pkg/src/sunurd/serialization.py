"""Bit-exact JSON interchange for designs and cycle-factorization seeds.

One schema covers both payload types: a host descriptor, the sun cycle
length h, and a list of classes typed ``one_factor``, ``sun_factor`` or
``cycle_factor`` (the last only in seed records).  Serialization is
canonical: blocks are sorted within classes, suns and cycles are written in
canonical form, field order is fixed, so equal inputs give identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import (
    BLOWN_CYCLE,
    COMPLETE,
    COMPLETE_MINUS_F,
    Decomposition,
    HostGraph,
    ONE_FACTOR,
    ParallelClass,
    SUN_FACTOR,
    Sun,
    canonical_cycle,
    canonicalize_sun,
    edge,
)
from .factorizations import CycleFactorization

FORMAT_VERSION = "1"


class DocumentFormatError(ValueError):
    """The document cannot be interpreted (bad JSON, schema, or version)."""


@dataclass(frozen=True)
class Document:
    """A parsed interchange document: payload plus its declared h."""

    h: int
    payload: "Decomposition | CycleFactorization"
    source: str | None = None


def _host_to_doc(host: HostGraph) -> dict:
    if host.kind == COMPLETE:
        return {"kind": "complete", "v": host.order}
    if host.kind == COMPLETE_MINUS_F:
        matching = sorted(edge(u, w) for u, w in host.matching)
        return {
            "kind": "complete_minus_f",
            "v": host.order,
            "matching": [list(e) for e in matching],
        }
    if host.kind == BLOWN_CYCLE:
        return {
            "kind": "blown_cycle",
            "m": len(host.groups),
            "n": len(host.groups[0]) if host.groups else 0,
            "groups": [list(g) for g in host.groups],
        }
    raise ValueError(f"unknown host kind {host.kind!r}")


def to_document(payload, h: int | None = None, source: str | None = None) -> dict:
    """Canonical document dict for a Decomposition or CycleFactorization.

    ``h`` is required for decompositions without sun classes (it cannot be
    inferred from pure matchings).
    """
    if isinstance(payload, CycleFactorization):
        classes = [
            {
                "type": "cycle_factor",
                "cycles": [list(c) for c in sorted(canonical_cycle(c) for c in cls)],
            }
            for cls in payload.classes
        ]
        doc = {
            "format_version": FORMAT_VERSION,
            "host": _host_to_doc(payload.host),
            "h": payload.h,
            "classes": classes,
            "source": source if source is not None else payload.source,
        }
        return doc

    if not isinstance(payload, Decomposition):
        raise TypeError(f"cannot serialize {type(payload).__name__}")
    if h is None:
        for cls in payload.classes:
            if cls.kind == SUN_FACTOR and cls.suns:
                h = len(cls.suns[0].cycle)
                break
    if h is None:
        raise ValueError("h is required to serialize a decomposition without suns")
    classes = []
    for cls in payload.classes:
        if cls.kind == ONE_FACTOR:
            es = sorted(edge(u, w) for u, w in cls.edges)
            classes.append({"type": "one_factor", "edges": [list(e) for e in es]})
        elif cls.kind == SUN_FACTOR:
            suns = sorted(canonicalize_sun(s.cycle, s.pendants) for s in cls.suns)
            classes.append(
                {
                    "type": "sun_factor",
                    "suns": [
                        {"cycle": list(s.cycle), "pendants": list(s.pendants)}
                        for s in suns
                    ],
                }
            )
        else:
            raise ValueError(f"unknown class kind {cls.kind!r}")
    doc = {
        "format_version": FORMAT_VERSION,
        "host": _host_to_doc(payload.host),
        "h": h,
        "classes": classes,
    }
    if source is not None:
        doc["source"] = source
    return doc


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentFormatError(message)


def _int_list(value, what: str) -> list[int]:
    _require(isinstance(value, list), f"{what} must be a list")
    out = []
    for x in value:
        _require(isinstance(x, int) and not isinstance(x, bool), f"{what} must hold integers")
        out.append(x)
    return out


def _pair_list(value, what: str) -> list[tuple[int, int]]:
    _require(isinstance(value, list), f"{what} must be a list of pairs")
    out = []
    for item in value:
        pair = _int_list(item, f"{what} entry")
        _require(len(pair) == 2, f"{what} entries must be pairs")
        out.append((pair[0], pair[1]))
    return out


def _host_from_doc(doc) -> HostGraph:
    _require(isinstance(doc, dict), "host must be an object")
    kind = doc.get("kind")
    if kind == "complete":
        v = doc.get("v")
        _require(isinstance(v, int), "host.v must be an integer")
        return HostGraph.complete(v)
    if kind == "complete_minus_f":
        v = doc.get("v")
        _require(isinstance(v, int), "host.v must be an integer")
        matching = _pair_list(doc.get("matching"), "host.matching")
        return HostGraph.complete_minus_f(v, matching)
    if kind == "blown_cycle":
        groups = doc.get("groups")
        _require(isinstance(groups, list) and groups, "host.groups must be a nonempty list")
        return HostGraph.blown_cycle(_int_list(g, "host group") for g in groups)
    raise DocumentFormatError(f"unknown host kind {kind!r}")


def from_document(doc) -> Document:
    _require(isinstance(doc, dict), "document must be a JSON object")
    version = doc.get("format_version")
    _require(
        version == FORMAT_VERSION,
        f"unsupported format_version {version!r} (expected {FORMAT_VERSION!r})",
    )
    host = _host_from_doc(doc.get("host"))
    h = doc.get("h")
    _require(isinstance(h, int) and not isinstance(h, bool), "h must be an integer")
    raw_classes = doc.get("classes")
    _require(isinstance(raw_classes, list), "classes must be a list")
    source = doc.get("source")
    _require(
        source is None or isinstance(source, str), "source must be a string when present"
    )

    kinds = {c.get("type") for c in raw_classes if isinstance(c, dict)}
    if "cycle_factor" in kinds:
        _require(
            kinds == {"cycle_factor"},
            "cycle_factor classes cannot mix with design classes",
        )
        classes = []
        for c in raw_classes:
            cycles = c.get("cycles")
            _require(isinstance(cycles, list), "cycle_factor.cycles must be a list")
            classes.append(
                tuple(tuple(_int_list(cyc, "cycle")) for cyc in cycles)
            )
        payload = CycleFactorization(
            host, h, tuple(classes), source=source or "document"
        )
        return Document(h=h, payload=payload, source=source)

    classes = []
    for c in raw_classes:
        _require(isinstance(c, dict), "each class must be an object")
        ctype = c.get("type")
        if ctype == "one_factor":
            classes.append(ParallelClass.one_factor(_pair_list(c.get("edges"), "edges")))
        elif ctype == "sun_factor":
            suns_doc = c.get("suns")
            _require(isinstance(suns_doc, list), "suns must be a list")
            suns = []
            for s in suns_doc:
                _require(isinstance(s, dict), "each sun must be an object")
                suns.append(
                    Sun(
                        tuple(_int_list(s.get("cycle"), "sun cycle")),
                        tuple(_int_list(s.get("pendants"), "sun pendants")),
                    )
                )
            classes.append(ParallelClass.sun_factor(suns))
        else:
            raise DocumentFormatError(f"unknown class type {ctype!r}")
    return Document(h=h, payload=Decomposition(host, tuple(classes)), source=source)


def dumps_document(payload, h: int | None = None, source: str | None = None) -> str:
    """Canonical JSON text (byte-stable across runs and platforms)."""
    return json.dumps(to_document(payload, h=h, source=source), indent=2) + "\n"


def loads_document(text: str) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentFormatError(f"not valid JSON: {exc}") from exc
    return from_document(doc)
