"""JSON document schemas and deterministic serialization.

Integers outside the 53-bit window are encoded as decimal strings so the
documents survive any JSON parser without precision loss; both encodings
are accepted on input. Serialization is byte-deterministic: fixed field
order, compact separators, newline-terminated UTF-8.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errors import DocumentError
from .simplex import LatticeSimplex, from_vertices

SCHEMA_VERSION = "1"
_SAFE = 2**53 - 1


def encode_int(value: int) -> int | str:
    return value if -_SAFE <= value <= _SAFE else str(value)


def decode_int(value: Any) -> int:
    if isinstance(value, bool):
        raise DocumentError(f"expected integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError as exc:
            raise DocumentError(f"not an integer string: {value!r}") from exc
    raise DocumentError(f"expected integer, got {value!r}")


def canonical_dumps(obj: Any) -> str:
    """Compact, field-order-preserving JSON with a trailing newline."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


@dataclass(frozen=True)
class SimplexDocument:
    ambient_dim: int
    vertices: tuple[tuple[int, ...], ...]
    name: str | None = None
    expected_hstar: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        out: dict[str, Any] = {"schema_version": SCHEMA_VERSION}
        if self.name is not None:
            out["name"] = self.name
        out["ambient_dim"] = self.ambient_dim
        out["vertices"] = [[encode_int(x) for x in v] for v in self.vertices]
        if self.expected_hstar is not None:
            out["expected_hstar"] = [encode_int(x) for x in self.expected_hstar]
        return out

    def to_simplex(self) -> LatticeSimplex:
        return from_vertices(self.ambient_dim, self.vertices)

    @classmethod
    def from_simplex(
        cls,
        simplex: LatticeSimplex,
        name: str | None = None,
        expected_hstar: tuple[int, ...] | None = None,
    ) -> "SimplexDocument":
        return cls(simplex.ambient_dim, simplex.vertices, name, expected_hstar)

    @classmethod
    def from_json_dict(cls, data: Any) -> "SimplexDocument":
        if not isinstance(data, dict):
            raise DocumentError("document must be a JSON object")
        allowed = {"schema_version", "name", "ambient_dim", "vertices", "expected_hstar"}
        unknown = set(data) - allowed
        if unknown:
            raise DocumentError(f"unknown fields: {sorted(unknown)}")
        if data.get("schema_version") != SCHEMA_VERSION:
            raise DocumentError("missing or unsupported schema_version")
        if "ambient_dim" not in data or "vertices" not in data:
            raise DocumentError("ambient_dim and vertices are required")
        name = data.get("name")
        if name is not None and not isinstance(name, str):
            raise DocumentError("name must be a string")
        ambient = decode_int(data["ambient_dim"])
        raw = data["vertices"]
        if not isinstance(raw, list) or not raw or not all(isinstance(v, list) for v in raw):
            raise DocumentError("vertices must be a nonempty list of lists")
        vertices = tuple(tuple(decode_int(x) for x in v) for v in raw)
        expected = data.get("expected_hstar")
        if expected is not None:
            if not isinstance(expected, list):
                raise DocumentError("expected_hstar must be a list")
            expected = tuple(decode_int(x) for x in expected)
        return cls(ambient, vertices, name, expected)


def parse_simplex_document(text: str) -> SimplexDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return SimplexDocument.from_json_dict(data)


def load_simplex_document(path) -> SimplexDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_simplex_document(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
