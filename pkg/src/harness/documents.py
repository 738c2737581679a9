"""JSON wire format for algebra elements.

A document is either a single matrix::

    {"rows": 2, "cols": 2, "data": [[0, 0], [1, 0], [0, 0], [0, 0]]}

or a direct sum ``{"blocks": [matrix, ...]}``. Entries are row-major
``[re, im]`` pairs; NaN and Infinity are rejected.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, ValidationError, model_validator

from ..algebra.element import AlgebraElement
from ..common.errors import ParseError, ShapeError

logger = logging.getLogger(__name__)

Entry = Tuple[FiniteFloat, FiniteFloat]


class MatrixDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    data: List[Entry]


class ElementDocument(BaseModel):
    """Either the matrix fields or ``blocks`` is present, never both."""

    model_config = ConfigDict(extra="forbid")

    rows: Optional[int] = Field(default=None, ge=1)
    cols: Optional[int] = Field(default=None, ge=1)
    data: Optional[List[Entry]] = None
    blocks: Optional[List[MatrixDocument]] = None

    @model_validator(mode="after")
    def _one_form(self) -> "ElementDocument":
        matrix_fields = (self.rows, self.cols, self.data)
        if self.blocks is not None:
            if any(f is not None for f in matrix_fields):
                raise ValueError("a document has either 'blocks' or 'rows'/'cols'/'data'")
            if not self.blocks:
                raise ValueError("'blocks' must be nonempty")
        elif any(f is None for f in matrix_fields):
            raise ValueError("a matrix document needs 'rows', 'cols' and 'data'")
        return self

    def matrices(self) -> List[MatrixDocument]:
        if self.blocks is not None:
            return list(self.blocks)
        assert self.rows is not None and self.cols is not None and self.data is not None
        return [MatrixDocument(rows=self.rows, cols=self.cols, data=self.data)]


def _reject_constant(name: str) -> Any:
    raise ParseError(f"non-finite constant {name} is not allowed")


def _field_path(loc: Tuple[Any, ...]) -> str:
    return ".".join(str(part) for part in loc)


def _to_block(doc: MatrixDocument, field: str) -> np.ndarray:
    if doc.rows != doc.cols:
        raise ShapeError(f"matrix must be square, got {doc.rows}x{doc.cols}", field=field)
    if len(doc.data) != doc.rows * doc.cols:
        raise ShapeError(
            f"expected {doc.rows * doc.cols} entries, got {len(doc.data)}", field=f"{field}data"
        )
    pairs = np.asarray(doc.data, dtype=float).reshape(doc.rows, doc.cols, 2)
    return pairs[..., 0] + 1j * pairs[..., 1]


def parse_document(text: bytes | str) -> ElementDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8: {exc.reason}") from exc
    try:
        raw = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc
    try:
        return ElementDocument.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(first["msg"], field=_field_path(first["loc"]) or None) from exc


def parse_element(text: bytes | str) -> AlgebraElement:
    """Decode a UTF-8 JSON element document."""
    doc = parse_document(text)
    if doc.blocks is not None:
        blocks = [_to_block(m, f"blocks.{i}.") for i, m in enumerate(doc.blocks)]
    else:
        blocks = [_to_block(doc.matrices()[0], "")]
    element = AlgebraElement(tuple(blocks))
    logger.debug("parsed element shape=%s digest=%s", element.shape, element.digest())
    return element


def load_element(path: str | Path) -> AlgebraElement:
    return parse_element(Path(path).read_bytes())


def _matrix_document(block: np.ndarray) -> MatrixDocument:
    n = block.shape[0]
    data = [(float(z.real), float(z.imag)) for z in block.reshape(-1)]
    return MatrixDocument(rows=n, cols=n, data=data)


def to_document(x: AlgebraElement) -> ElementDocument:
    if x.is_direct_sum:
        return ElementDocument(blocks=[_matrix_document(b) for b in x.blocks])
    m = _matrix_document(x.blocks[0])
    return ElementDocument(rows=m.rows, cols=m.cols, data=m.data)


def serialize_element(x: AlgebraElement, *, indent: int | None = None) -> bytes:
    payload = to_document(x).model_dump(exclude_none=True)
    return json.dumps(payload, indent=indent).encode("utf-8")


def save_element(x: AlgebraElement, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(serialize_element(x))
    return path


__all__ = [
    "ElementDocument",
    "MatrixDocument",
    "load_element",
    "parse_document",
    "parse_element",
    "save_element",
    "serialize_element",
    "to_document",
]
