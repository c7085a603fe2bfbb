"""Serialized forms of loops and analysis reports.

Structured documents are JSON. Rationals are written as ``"p/q"`` strings,
or ``"p"`` when the denominator is 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import json
from typing import Any

from .loop import VectorLoop, validate_loop
from .rotation import RotationReport, rotation_report


class DocumentError(ValueError):
    pass


def format_rat(q: Fraction) -> str:
    return str(Fraction(q))


def parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad rational {text!r}") from exc


def _pair(item: Any, where: str) -> tuple[int, int]:
    if (not isinstance(item, (list, tuple)) or len(item) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in item)):
        raise DocumentError(f"{where}: expected a pair of integers, got {item!r}")
    return item[0], item[1]


@dataclass
class LoopDocument:
    vertices: list[tuple[int, int]]
    name: str | None = None
    # (original edge, position) per vertex, only for refined loops
    provenance: list[tuple[int, int]] | None = None

    @classmethod
    def from_loop(cls, loop: VectorLoop, name: str | None = None) -> LoopDocument:
        return cls([(v.x, v.y) for v in loop], name)

    def to_loop(self) -> VectorLoop:
        return validate_loop(self.vertices)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {}
        if self.name is not None:
            out["name"] = self.name
        out["vertices"] = [list(v) for v in self.vertices]
        if self.provenance is not None:
            out["provenance"] = [list(p) for p in self.provenance]
        return out

    @classmethod
    def from_dict(cls, data: Any) -> LoopDocument:
        if not isinstance(data, dict):
            raise DocumentError("loop document must be a JSON object")
        if "vertices" not in data or not isinstance(data["vertices"], list):
            raise DocumentError("loop document needs a 'vertices' list")
        vertices = [_pair(v, f"vertex {i}") for i, v in enumerate(data["vertices"], start=1)]
        name = data.get("name")
        if name is not None and not isinstance(name, str):
            raise DocumentError("'name' must be a string")
        provenance = data.get("provenance")
        if provenance is not None:
            provenance = [_pair(p, f"provenance {i}") for i, p in enumerate(provenance, start=1)]
        return cls(vertices, name, provenance)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    def dumps_plain(self) -> str:
        return "".join(f"{x} {y}\n" for x, y in self.vertices)


def parse_structured(text: str) -> LoopDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return LoopDocument.from_dict(data)


def parse_plain(text: str) -> LoopDocument:
    """Two integers per line; blank lines and ``#`` comments are skipped."""
    vertices = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DocumentError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            vertices.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise DocumentError(f"line {lineno}: expected two integers, got {line!r}") from exc
    return LoopDocument(vertices)


def parse_loop_document(text: str, fmt: str = "structured") -> LoopDocument:
    if fmt == "structured":
        return parse_structured(text)
    if fmt == "plain":
        return parse_plain(text)
    raise DocumentError(f"unknown format {fmt!r}")


@dataclass
class EdgeRow:
    i: int
    epsilon: int
    a: Fraction
    x: int
    y: int
    l: int
    terms: list[int]

    def to_dict(self) -> dict:
        return {"i": self.i, "epsilon": self.epsilon, "a": format_rat(self.a),
                "x": self.x, "y": self.y, "l": self.l, "terms": list(self.terms)}

    @classmethod
    def from_dict(cls, d: dict) -> EdgeRow:
        return cls(d["i"], d["epsilon"], parse_rat(d["a"]), d["x"], d["y"], d["l"], list(d["terms"]))


@dataclass
class AnalysisDocument:
    name: str | None
    vertices: list[tuple[int, int]]
    edges: list[EdgeRow]
    orientation_sum: int
    a_sum: Fraction
    xy_sum: Fraction
    rotation: Fraction
    hm_on_refined: Fraction
    winding_exact: int
    winding_float: float
    refined_vertices: list[tuple[int, int]] = field(default_factory=list)

    @classmethod
    def from_report(cls, loop: VectorLoop, report: RotationReport, name: str | None = None) -> AnalysisDocument:
        f = report.formula
        return cls(
            name=name,
            vertices=[(v.x, v.y) for v in loop],
            edges=[EdgeRow(e.index, e.epsilon, e.a, e.x, e.y, e.l, list(e.terms)) for e in f.edges],
            orientation_sum=f.orientation_sum,
            a_sum=f.a_sum,
            xy_sum=f.xy_sum,
            rotation=report.rot_formula,
            hm_on_refined=report.rot_hm_on_refined,
            winding_exact=report.rot_winding,
            winding_float=report.rot_float,
            refined_vertices=[(v.x, v.y) for v in report.refinement.enlarged],
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": [list(v) for v in self.vertices],
            "edges": [e.to_dict() for e in self.edges],
            "partial_sums": {
                "orientation": self.orientation_sum,
                "a": format_rat(self.a_sum),
                "xy_over_epsilon": format_rat(self.xy_sum),
            },
            "rotation": format_rat(self.rotation),
            "oracles": {
                "hm_on_refined": format_rat(self.hm_on_refined),
                "winding_exact": self.winding_exact,
                "winding_float": self.winding_float,
            },
            "refined_vertices": [list(v) for v in self.refined_vertices],
        }

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisDocument:
        try:
            sums, oracles = d["partial_sums"], d["oracles"]
            return cls(
                name=d.get("name"),
                vertices=[tuple(v) for v in d["vertices"]],
                edges=[EdgeRow.from_dict(e) for e in d["edges"]],
                orientation_sum=sums["orientation"],
                a_sum=parse_rat(sums["a"]),
                xy_sum=parse_rat(sums["xy_over_epsilon"]),
                rotation=parse_rat(d["rotation"]),
                hm_on_refined=parse_rat(oracles["hm_on_refined"]),
                winding_exact=oracles["winding_exact"],
                winding_float=oracles["winding_float"],
                refined_vertices=[tuple(v) for v in d["refined_vertices"]],
            )
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed analysis document: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def loads(cls, text: str) -> AnalysisDocument:
        return cls.from_dict(json.loads(text))


def analyze_document(doc: LoopDocument) -> AnalysisDocument:
    loop = doc.to_loop()
    return AnalysisDocument.from_report(loop, rotation_report(loop), doc.name)
