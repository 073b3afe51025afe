"""Matrix and vector files, and JSON-ready analysis reports.

Every rational in a report is an exact ``"p/q"`` string (or an integer string)
so reports contain no floats and survive a JSON round trip unchanged. Indices
and cycle labels in reports are 1-based, like the coordinates people write.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .core import ReciprocalMatrix, Vector, as_matrix, is_consistent, max_dimension, to_rational
from .cycles import HCycle, enumerate_hcycles, gamma_set
from .efficiency import EfficiencyReport
from .equality import EqualityVerdict, undominated
from .errors import DimensionExceedsCap, EffmatError, ParseError
from .orders import (
    cone_unique_order,
    global_pairwise_above,
    global_unique_order,
    pairwise_above,
    partial_order_partition,
)
from .paths import cone_interval, extreme_vectors, global_bounds, path_matrix

SCHEMA = "effmat/1"


@dataclass(frozen=True)
class MatrixDocument:
    matrix: ReciprocalMatrix
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return self.matrix.n

    def to_json(self) -> dict:
        doc = {"schema": SCHEMA, "n": self.n, "entries": rationals(self.matrix.entries)}
        if self.labels:
            doc["labels"] = list(self.labels)
        return doc


def rationals(m) -> list:
    """Nested sequences of Fractions as nested lists of exact strings."""
    if isinstance(m, (Fraction, int)):
        return str(Fraction(m))
    return [rationals(x) for x in m]


def _parse_json_matrix(data) -> MatrixDocument:
    if isinstance(data, list):
        data = {"entries": data}
    if not isinstance(data, dict) or "entries" not in data:
        raise ParseError("matrix document needs an 'entries' field")
    schema = data.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ParseError(f"unsupported schema {schema!r}, expected {SCHEMA!r}")
    rows = data["entries"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'entries' must be a list of rows")
    n = len(rows)
    if "n" in data and data["n"] != n:
        raise ParseError(f"'n' is {data['n']} but {n} rows were given")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"row {i + 1} has {len(row)} entries, expected {n}")
    labels = data.get("labels")
    if labels is not None:
        if len(labels) != n or len(set(labels)) != n:
            raise ParseError("labels must be n distinct names")
        labels = tuple(str(x) for x in labels)
    return MatrixDocument(ReciprocalMatrix(as_matrix(rows)), labels)


def _parse_csv_matrix(text: str) -> MatrixDocument:
    rows = [[c.strip() for c in r] for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"row {i + 1} has {len(row)} entries, expected {n}")
    return MatrixDocument(ReciprocalMatrix(as_matrix(rows)))


def parse_matrix(text: str, fmt: str | None = None) -> MatrixDocument:
    """Parse a MatrixDocument (JSON) or a CSV grid of rationals.

    Validation failures surface as :class:`EffmatError` subclasses naming the
    offending entry.
    """
    stripped = text.lstrip()
    if fmt == "json" or (fmt is None and stripped[:1] in "[{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return _parse_json_matrix(data)
    return _parse_csv_matrix(text)


def load_matrix(path: str | Path) -> MatrixDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    fmt = "json" if path.suffix == ".json" else "csv" if path.suffix == ".csv" else None
    return parse_matrix(text, fmt)


def parse_vector(text: str) -> Vector:
    """A JSON array, or one rational per line (blank lines and ``#`` comments skipped)."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    else:
        items = [ln.strip() for ln in stripped.splitlines()]
        items = [ln for ln in items if ln and not ln.startswith("#")]
    values = tuple(to_rational(x) for x in items)
    for i, x in enumerate(values):
        if x <= 0:
            raise ParseError(f"vector entry {i + 1} is not strictly positive")
    return values


def load_vector(path: str | Path) -> Vector:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_vector(text)


# -- reports -----------------------------------------------------------------


def _pairs(pairs) -> list[list[int]]:
    return [[i + 1, j + 1] for i, j in sorted(pairs)]


def _order(order) -> list[int] | None:
    return None if order is None else [i + 1 for i in order]


def _cone_entry(a: ReciprocalMatrix, tau: HCycle, product: Fraction) -> dict:
    interval = cone_interval(a, tau)
    return {
        "cycle": tau.label(),
        "product": str(product),
        "lower": rationals(interval.lower.values),
        "upper": rationals(interval.upper),
        "extremes": rationals(extreme_vectors(a, tau)),
        "unique_order": _order(cone_unique_order(a, tau)),
        "partition": [[i + 1 for i in block] for block in partial_order_partition(a, tau).as_lists()],
        "pairwise_above": _pairs(pairwise_above(a, tau)),
    }


def _consistent_summary(a: ReciprocalMatrix) -> dict:
    return {
        "consistent": True,
        "efficient_set": "positive multiples of any column",
        "column": rationals(a.column(0)),
        "gamma": [],
    }


def analysis_report(doc: MatrixDocument, full: bool = False, max_n: int | None = None) -> dict:
    a = doc.matrix
    report = {"schema": SCHEMA, "kind": "analysis", "input": doc.to_json()}
    gamma = gamma_set(a, max_n)
    if not gamma:
        report.update(_consistent_summary(a))
        return report
    bounds = global_bounds(a, max_n)
    report.update(
        {
            "consistent": False,
            "gamma": [{"cycle": t.label(), "product": str(p)} for t, p in gamma.members],
            "cones": [_cone_entry(a, t, p) for t, p in gamma.members],
            "global": {
                "lower": rationals(bounds.lower),
                "upper": rationals(bounds.upper),
                "unique_order": _order(global_unique_order(a, max_n)),
                "pairwise_above": _pairs(global_pairwise_above(a, max_n)),
            },
        }
    )
    if full:
        report["path_matrices"] = [
            {"cycle": t.label(), "product": str(pm.cycle_product), "matrix": rationals(pm.values)}
            for t in enumerate_hcycles(a.n, max_n)
            for pm in (path_matrix(a, t),)
        ]
    return report


def bounds_report(doc: MatrixDocument, max_n: int | None = None) -> dict:
    a = doc.matrix
    report = {"schema": SCHEMA, "kind": "bounds", "input": doc.to_json()}
    gamma = gamma_set(a, max_n)
    if not gamma:
        report.update(_consistent_summary(a))
        return report
    bounds = global_bounds(a, max_n)
    report.update(
        {
            "consistent": False,
            "gamma": [{"cycle": t.label(), "product": str(p)} for t, p in gamma.members],
            "lower": rationals(bounds.lower),
            "upper": rationals(bounds.upper),
        }
    )
    return report


def orders_report(doc: MatrixDocument, max_n: int | None = None) -> dict:
    a = doc.matrix
    report = {"schema": SCHEMA, "kind": "orders", "input": doc.to_json()}
    gamma = gamma_set(a, max_n)
    if not gamma:
        report.update(_consistent_summary(a))
        return report
    report.update(
        {
            "consistent": False,
            "cones": [
                {
                    "cycle": t.label(),
                    "unique_order": _order(cone_unique_order(a, t)),
                    "partition": [[i + 1 for i in b] for b in partial_order_partition(a, t).as_lists()],
                    "pairwise_above": _pairs(pairwise_above(a, t)),
                }
                for t in gamma
            ],
            "global": {
                "unique_order": _order(global_unique_order(a, max_n)),
                "pairwise_above": _pairs(global_pairwise_above(a, max_n)),
            },
        }
    )
    return report


def extremes_report(doc: MatrixDocument, max_n: int | None = None) -> dict:
    a = doc.matrix
    report = {"schema": SCHEMA, "kind": "extremes", "input": doc.to_json()}
    gamma = gamma_set(a, max_n)
    if not gamma:
        report.update(_consistent_summary(a))
        return report
    cones = []
    for t in gamma:
        gens = extreme_vectors(a, t)
        cones.append(
            {
                "cycle": t.label(),
                "extremes": [
                    {"anchor": k + 1, "vector": rationals(g), "undominated": undominated(a, t, k)}
                    for k, g in enumerate(gens)
                ],
            }
        )
    report.update({"consistent": False, "cones": cones})
    return report


def efficiency_json(w: Sequence[Fraction], a: ReciprocalMatrix, rep: EfficiencyReport) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "efficiency",
        "matrix": rationals(a.entries),
        "vector": rationals(w),
        "consistent": is_consistent(a),
        "efficient": rep.efficient,
        "member_cones": [t.label() for t in rep.member_cones],
        "tight_positions": {
            t.label(): _pairs(rep.tight_positions[t]) for t in rep.member_cones
        },
    }


def verdict_json(a: ReciprocalMatrix, b: ReciprocalMatrix, v: EqualityVerdict) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "comparison",
        "A": rationals(a.entries),
        "B": rationals(b.entries),
        "status": str(v.status),
        "witness": None if v.witness is None else rationals(v.witness),
        "witness_efficient_for": v.witness_efficient_for,
        "evidence": [{"name": c.name, "outcome": c.outcome, "detail": c.detail} for c in v.evidence],
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def check_cap(n: int, max_n: int | None) -> None:
    cap = max_dimension(max_n)
    if n > cap:
        raise DimensionExceedsCap(n, cap)


__all__ = [
    "EffmatError",
    "MatrixDocument",
    "analysis_report",
    "bounds_report",
    "check_cap",
    "dumps",
    "efficiency_json",
    "extremes_report",
    "load_matrix",
    "load_vector",
    "orders_report",
    "parse_matrix",
    "parse_vector",
    "rationals",
    "verdict_json",
]
