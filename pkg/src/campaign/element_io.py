"""JSON text form of elements: factor label, [re, im] coordinate pairs, optional label.

    {"factor": {"kind": "rectangular", "sizes": [2, 2]},
     "coords": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]],
     "label": "identity"}

Direct sums carry ``"parts"`` instead of sizes. Floats are written with
shortest round-trip precision, so reading back reproduces every bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from src.errors import BadSize, FactorMismatch, ParseError
from src.factors.registry import make_from_label
from src.triples.space import Element, FactorLabel, TripleSpace


def label_to_dict(label: FactorLabel) -> Dict[str, Any]:
    if label.parts:
        return {"kind": "direct_sum", "parts": [label_to_dict(p) for p in label.parts]}
    return {"kind": label.kind, "sizes": list(label.sizes)}


def coords_to_pairs(coords: np.ndarray) -> List[List[float]]:
    return [[float(c.real), float(c.imag)] for c in np.asarray(coords, dtype=complex)]


def element_to_dict(x: Element, label: Optional[str] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {"factor": label_to_dict(x.space.label), "coords": coords_to_pairs(x.coords)}
    if label is not None:
        data["label"] = label
    return data


def dumps_element(x: Element, label: Optional[str] = None) -> str:
    return json.dumps(element_to_dict(x, label), sort_keys=True, indent=2)


def _label_from_dict(data: Any, path: str) -> FactorLabel:
    if not isinstance(data, dict):
        raise ParseError("Factor must be an object", position=path)
    kind = data.get("kind")
    if not isinstance(kind, str):
        raise ParseError("Factor kind must be a string", position=f"{path}.kind")
    if kind == "direct_sum":
        parts = data.get("parts")
        if not isinstance(parts, list) or not parts:
            raise ParseError("Direct sum needs a nonempty parts list", position=f"{path}.parts")
        return FactorLabel(
            "direct_sum",
            parts=tuple(_label_from_dict(p, f"{path}.parts[{i}]") for i, p in enumerate(parts)),
        )
    sizes = data.get("sizes", [])
    if not isinstance(sizes, list) or not all(isinstance(s, int) and not isinstance(s, bool) for s in sizes):
        raise ParseError("Sizes must be a list of integers", position=f"{path}.sizes")
    return FactorLabel(kind, tuple(sizes))


def _real(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError("Coordinate parts must be numbers", position=path)
    if not math.isfinite(value):
        raise ParseError("Coordinate parts must be finite", position=path)
    return float(value)


def _coords_from_list(raw: Any) -> np.ndarray:
    """Pairs ``[[re, im], ...]``, or a flat interleaved list of even length."""
    if not isinstance(raw, list):
        raise ParseError("coords must be a list", position="coords")
    if raw and not isinstance(raw[0], list):
        if len(raw) % 2:
            raise ParseError(f"Odd number of interleaved coordinate parts ({len(raw)})", position="coords")
        values = [_real(v, f"coords[{i}]") for i, v in enumerate(raw)]
        return np.array(values[0::2]) + 1j * np.array(values[1::2])
    coords = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("Coordinates must be [re, im] pairs", position=f"coords[{i}]")
        coords.append(complex(_real(pair[0], f"coords[{i}][0]"), _real(pair[1], f"coords[{i}][1]")))
    return np.array(coords, dtype=complex)


def element_from_dict(data: Any, expected: Optional[TripleSpace] = None) -> Tuple[Element, Optional[str]]:
    """Element and optional label from the parsed JSON object.

    Raises:
        ParseError: On structural defects, with the field path as position.
        FactorMismatch: If ``expected`` is given and the factor differs.
    """
    if not isinstance(data, dict):
        raise ParseError("Serialized element must be an object", position="$")
    for key in ("factor", "coords"):
        if key not in data:
            raise ParseError(f"Missing field {key!r}", position=key)
    label = _label_from_dict(data["factor"], "factor")
    if expected is not None and expected.label != label:
        raise FactorMismatch(f"Expected an element of {expected.label}, got {label}")
    try:
        space = expected if expected is not None else make_from_label(label)
    except BadSize as exc:
        raise ParseError(str(exc), position="factor") from exc
    coords = _coords_from_list(data["coords"])
    if coords.shape[0] != space.dim:
        raise ParseError(f"{label} needs {space.dim} coordinates, got {coords.shape[0]}", position="coords")
    name = data.get("label")
    if name is not None and not isinstance(name, str):
        raise ParseError("label must be a string", position="label")
    return Element(space, coords), name


def loads_element(text: str, expected: Optional[TripleSpace] = None) -> Element:
    """Parse one serialized element.

    Raises:
        ParseError: With the character offset for JSON syntax errors.
        FactorMismatch: If the element belongs to another factor than ``expected``.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, position=exc.pos) from exc
    element, _ = element_from_dict(data, expected)
    return element


def read_element(path: Union[str, Path], expected: Optional[TripleSpace] = None) -> Element:
    return loads_element(Path(path).read_text(encoding="utf-8"), expected)


def write_element(path: Union[str, Path], x: Element, label: Optional[str] = None) -> None:
    Path(path).write_text(dumps_element(x, label) + "\n", encoding="utf-8")
