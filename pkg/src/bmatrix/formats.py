"""Flat-file readers and the machine-readable report document.

Memories file: one memory per line, whitespace-separated ``1``/``+1``/``-1``.
Proximity file: comma-separated rows of a square numeric matrix.
Both accept blank lines and ``#`` comment lines.

Reports are JSON objects tagged by ``"kind"``. :func:`decode` turns any of them
back into the library's own types.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .analysis import (
    CapacityReport,
    CapacityRow,
    MapEntry,
    OutcomeKind,
    RecallOutcome,
)
from .proximity import ActivityOrder
from .recall import RecallResult, RecallStep, RecallTrace

_BIPOLAR_TOKENS = {"1": 1, "+1": 1, "-1": -1}


class ParseError(ValueError):
    def __init__(self, source: str, line: int | None, message: str):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_memories(text: str, source: str = "<memories>") -> list[list[int]]:
    memories: list[list[int]] = []
    width = None
    for lineno, line in _data_lines(text):
        row = []
        for tok in line.split():
            if tok not in _BIPOLAR_TOKENS:
                raise ParseError(source, lineno, f"bad token {tok!r}, expected 1, +1 or -1")
            row.append(_BIPOLAR_TOKENS[tok])
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(source, lineno, f"memory has {len(row)} values, expected {width}")
        memories.append(row)
    if not memories:
        raise ParseError(source, None, "no memories found")
    return memories


def parse_proximity(text: str, source: str = "<proximity>") -> list[list[float]]:
    rows: list[list[float]] = []
    for lineno, line in _data_lines(text):
        try:
            row = [float(tok) for tok in line.split(",")]
        except ValueError:
            raise ParseError(source, lineno, f"non-numeric entry in {line!r}") from None
        if rows and len(row) != len(rows[0]):
            raise ParseError(source, lineno, f"row has {len(row)} entries, expected {len(rows[0])}")
        rows.append(row)
    if not rows:
        raise ParseError(source, None, "empty proximity matrix")
    if len(rows) != len(rows[0]):
        raise ParseError(source, None, f"matrix is {len(rows)}x{len(rows[0])}, not square")
    return rows


def read_memories(path: str | Path) -> list[list[int]]:
    return parse_memories(Path(path).read_text(), str(path))


def read_proximity(path: str | Path) -> list[list[float]]:
    return parse_proximity(Path(path).read_text(), str(path))


# --- encoding -------------------------------------------------------------


def matrix_doc(M) -> dict[str, Any]:
    M = np.asarray(M)
    return {"rows": int(M.shape[0]), "cols": int(M.shape[1]), "data": M.tolist()}


def matrix_from_doc(doc: dict[str, Any]) -> np.ndarray:
    data = doc["data"]
    dtype = np.int64 if all(isinstance(v, int) for row in data for v in row) else float
    M = np.array(data, dtype=dtype).reshape(doc["rows"], doc["cols"])
    return M


def outcome_doc(o: RecallOutcome) -> dict[str, Any]:
    return {
        "kind": o.kind.value,
        "index": o.index,
        "vector": list(o.vector),
        "fixed_point": o.fixed_point,
    }


def outcome_from_doc(doc: dict[str, Any]) -> RecallOutcome:
    return RecallOutcome(
        OutcomeKind(doc["kind"]), tuple(doc["vector"]), bool(doc["fixed_point"]), doc["index"]
    )


def trace_doc(t: RecallTrace) -> dict[str, Any]:
    return {
        "order": list(t.order),
        "seed_length": t.seed_length,
        "steps": [
            {
                "position": s.position,
                "neuron": s.neuron,
                "net_input": s.net_input,
                "bit": s.bit,
                "zero_input": s.zero_input,
            }
            for s in t.steps
        ],
        "fragments": [list(f) for f in t.fragments],
    }


def trace_from_doc(doc: dict[str, Any]) -> RecallTrace:
    return RecallTrace(
        ActivityOrder(tuple(doc["order"])),
        doc["seed_length"],
        tuple(RecallStep(**s) for s in doc["steps"]),
        tuple(tuple(f) for f in doc["fragments"]),
    )


def result_doc(r: RecallResult) -> dict[str, Any]:
    return {
        "ordered_bits": list(r.ordered_bits),
        "normative_bits": list(r.normative_bits),
        "trace": trace_doc(r.trace),
    }


def result_from_doc(doc: dict[str, Any]) -> RecallResult:
    return RecallResult(
        tuple(doc["ordered_bits"]), tuple(doc["normative_bits"]), trace_from_doc(doc["trace"])
    )


def map_entry_doc(e: MapEntry) -> dict[str, Any]:
    return {
        "neuron": e.neuron,
        "order": list(e.order),
        "polarity": e.polarity,
        "result": result_doc(e.result),
        "outcome": outcome_doc(e.outcome),
    }


def map_entry_from_doc(doc: dict[str, Any]) -> MapEntry:
    return MapEntry(
        doc["neuron"],
        ActivityOrder(tuple(doc["order"])),
        doc["polarity"],
        result_from_doc(doc["result"]),
        outcome_from_doc(doc["outcome"]),
    )


def capacity_doc(rep: CapacityReport) -> dict[str, Any]:
    return {
        "n": rep.n,
        "rng_seed": rep.rng_seed,
        "rows": [
            {
                "m": r.m,
                "trials": r.trials,
                "all_stored_fraction": r.all_stored_fraction,
                "per_memory_stored_fraction": r.per_memory_stored_fraction,
            }
            for r in rep.rows
        ],
    }


def capacity_from_doc(doc: dict[str, Any]) -> CapacityReport:
    return CapacityReport(doc["n"], doc["rng_seed"], tuple(CapacityRow(**r) for r in doc["rows"]))


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def decode(doc: dict[str, Any] | str) -> dict[str, Any]:
    """Rebuild typed values from a report document (or its JSON text).

    Returns a dict keyed like the document, with matrices as numpy arrays,
    orders as :class:`ActivityOrder` and results/outcomes/reports as their
    dataclasses.
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    kind = doc["kind"]
    out: dict[str, Any] = {"kind": kind}
    if kind == "train":
        out["weights"] = matrix_from_doc(doc["weights"])
    elif kind == "orders":
        out["symmetric"] = doc["symmetric"]
        out["proximity"] = matrix_from_doc(doc["proximity"]).astype(float)
        out["orders"] = [ActivityOrder(tuple(o)) for o in doc["orders"]]
    elif kind == "recall":
        out["start"] = doc["start"]
        out["seed"] = list(doc["seed"])
        out["result"] = result_from_doc(doc["result"])
        out["outcome"] = outcome_from_doc(doc["outcome"])
    elif kind == "map":
        out["entries"] = [map_entry_from_doc(e) for e in doc["entries"]]
    elif kind == "enumerate":
        out["n"] = doc["n"]
        out["fixed_points"] = [outcome_from_doc(o) for o in doc["fixed_points"]]
        out["counts"] = dict(doc["counts"])
    elif kind == "capacity":
        out["report"] = capacity_from_doc(doc["report"])
    else:
        raise ValueError(f"unknown report kind {kind!r}")
    return out
