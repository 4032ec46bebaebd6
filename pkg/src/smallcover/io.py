"""JSON file formats for polytopes, point sets, matrices, classifications and lifts."""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .combinatorics import PointSet, SimplePolytope, SimplicialFacets
from .errors import InvalidParameters, InvalidPolytope
from .gf2 import CharMatrixZ2, EnumerationReport
from .lift import CharMatrixZ
from .symmetry import AutGroup, OrbitClassification

_FLAT_LIST = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]", re.S)


def dumps(obj: Any) -> str:
    """Indented JSON with innermost lists of scalars kept on one line."""
    text = json.dumps(obj, indent=2)
    text = _FLAT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]"
                          if m.group(1).strip() else "[]", text)
    return text + "\n"


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidParameters(f"{path}: malformed JSON ({exc})") from exc


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _require(d: Any, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(d, dict):
        raise InvalidParameters(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise InvalidParameters(f"{what} is missing keys {missing}")


# -- polytopes ---------------------------------------------------------------


def polytope_to_dict(p: SimplePolytope) -> dict:
    d: dict[str, Any] = {
        "name": p.name,
        "dim": p.dim,
        "num_facets": p.num_facets,
        "vertices": [list(v) for v in p.vertices],
    }
    if p.relabel is not None:
        d["relabel"] = list(p.relabel)
    return d


def polytope_from_dict(d: Any) -> SimplePolytope:
    _require(d, ("dim", "num_facets", "vertices"), "polytope file")
    try:
        verts = [tuple(int(x) for x in v) for v in d["vertices"]]
        p = SimplePolytope(int(d["dim"]), int(d["num_facets"]), tuple(verts), str(d.get("name", "")),
                           d.get("relabel"))
    except InvalidPolytope:
        raise
    except (TypeError, ValueError) as exc:
        raise InvalidPolytope(f"polytope file: {exc}") from exc
    return p.normalized()


def load_polytope(path: str | Path) -> SimplePolytope:
    p = polytope_from_dict(read_json(path))
    if not p.name:
        p = SimplePolytope(p.dim, p.num_facets, p.vertices, Path(path).stem, p.relabel)
    return p


def facets_to_dict(sf: SimplicialFacets) -> dict:
    return {"dim": sf.dim, "num_points": sf.num_points, "facets": [list(f) for f in sf.facets]}


def points_from_dict(d: Any) -> PointSet:
    _require(d, ("dim", "points"), "points file")
    return PointSet(int(d["dim"]), tuple(tuple(p) for p in d["points"]))


# -- Z2 matrices ---------------------------------------------------------------


def matrices_to_dict(report: EnumerationReport, n: int, m: int) -> dict:
    return {
        "polytope": report.polytope,
        "ring": "Z2",
        "n": n,
        "m": m,
        "matrices": [lam.rows for lam in report.matrices],
    }


def matrices_from_dict(d: Any) -> EnumerationReport:
    _require(d, ("n", "m", "matrices"), "matrix file")
    if d.get("ring", "Z2") != "Z2":
        raise InvalidParameters(f"matrix file ring must be Z2, got {d.get('ring')!r}")
    n, m = int(d["n"]), int(d["m"])
    mats = []
    for rows in d["matrices"]:
        if len(rows) != n or any(len(r) != m or any(x not in (0, 1) for x in r) for r in rows):
            raise InvalidParameters(f"matrix file entries must be {n}x{m} arrays of 0/1")
        mats.append(CharMatrixZ2.from_rows(rows))
    return EnumerationReport(str(d.get("polytope", "")), len(mats), tuple(mats), 0)


# -- classification and lifts -------------------------------------------------------


def classification_to_dict(name: str, group: AutGroup, cls: OrbitClassification) -> dict:
    return {
        "polytope": name,
        "aut_order": group.order,
        "generators": [list(g.images) for g in group.generators],
        "orbits": [list(o) for o in cls.orbits],
        "representatives": [lam.rows for lam in cls.representatives],
    }


def lifts_to_dict(name: str, bound: int, lifts: list[CharMatrixZ | None]) -> dict:
    entries: list[dict[str, Any]] = []
    for i, lam in enumerate(lifts):
        if lam is None:
            entries.append({"source_index": i, "status": "no_lift_within_bound"})
        else:
            entries.append({"source_index": i, "matrix": [list(r) for r in lam.entries]})
    return {"polytope": name, "ring": "Z", "bound": bound, "lifts": entries}
