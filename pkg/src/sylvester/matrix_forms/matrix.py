"""Rectangular matrices over a ring."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..ring_core.base import Element, ParseError, Ring, RingMismatch
from ..ring_core.parse import parse_element, parse_ring, split_top


@dataclass(frozen=True, eq=False)
class RingMatrix:
    """Row-major grid of payloads over ``ring``; 0 x n and n x 0 are allowed."""

    ring: Ring
    rows: int
    cols: int
    data: Tuple[Tuple, ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix data does not match its shape")

    # -- construction --------------------------------------------------
    @classmethod
    def from_values(cls, ring: Ring, grid: Sequence[Sequence], cols: int = None) -> "RingMatrix":
        data = tuple(tuple(r) for r in grid)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(ring, len(data), cols, data)

    @classmethod
    def from_rows(cls, ring: Ring, grid: Sequence[Sequence], cols: int = None) -> "RingMatrix":
        """Entries may be Elements, ints or element-expression strings."""
        def conv(x):
            if isinstance(x, Element):
                if not (x.ring is ring or x.ring == ring):
                    x = ring.coerce(x)
                return x.value
            return ring(x).value
        return cls.from_values(ring, [[conv(x) for x in r] for r in grid], cols)

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "RingMatrix":
        z = ring.zero_value
        return cls(ring, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        return cls.diagonal(ring, [ring.one_value] * n)

    @classmethod
    def diagonal(cls, ring: Ring, values: Sequence, rows: int = None, cols: int = None):
        n = len(values)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        z = ring.zero_value
        data = [[z] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls(ring, rows, cols, tuple(tuple(r) for r in data))

    @classmethod
    def scalar(cls, x: Element) -> "RingMatrix":
        return cls(x.ring, 1, 1, ((x.value,),))

    # -- access --------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def values(self) -> Tuple[Tuple, ...]:
        return self.data

    def __getitem__(self, ij) -> Element:
        i, j = ij
        return Element(self.ring, self.data[i][j])

    def entries(self) -> List[List[Element]]:
        return [[Element(self.ring, v) for v in r] for r in self.data]

    def __iter__(self):
        return iter(self.entries())

    def is_zero(self) -> bool:
        z = self.ring.zero_value
        return all(v == z for r in self.data for v in r)

    def is_diagonal(self) -> bool:
        z = self.ring.zero_value
        return all(v == z for i, r in enumerate(self.data) for j, v in enumerate(r) if i != j)

    def diagonal_entries(self) -> List[Element]:
        return [Element(self.ring, self.data[i][i]) for i in range(min(self.rows, self.cols))]

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "RingMatrix"):
        if not (other.ring is self.ring or other.ring == self.ring):
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        R = self.ring
        return RingMatrix(R, self.rows, self.cols, tuple(
            tuple(R.add(a, b) for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self):
        R = self.ring
        return RingMatrix(R, self.rows, self.cols,
                          tuple(tuple(R.neg(a) for a in r) for r in self.data))

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        R = self.ring
        z = R.zero_value
        cols_b = list(zip(*other.data)) if other.rows else [()] * other.cols
        out = []
        for r in self.data:
            row = []
            for c in cols_b:
                acc = z
                for a, b in zip(r, c):
                    if a != z and b != z:
                        acc = R.add(acc, R.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return RingMatrix(R, self.rows, other.cols, tuple(out))

    __mul__ = __matmul__

    def scale_left(self, x: Element) -> "RingMatrix":
        R = self.ring
        return RingMatrix(R, self.rows, self.cols,
                          tuple(tuple(R.mul(x.value, a) for a in r) for r in self.data))

    def scale_right(self, x: Element) -> "RingMatrix":
        R = self.ring
        return RingMatrix(R, self.rows, self.cols,
                          tuple(tuple(R.mul(a, x.value) for a in r) for r in self.data))

    def map(self, func, ring: Ring) -> "RingMatrix":
        """Apply a payload -> payload function entrywise, landing in ``ring``."""
        return RingMatrix(ring, self.rows, self.cols,
                          tuple(tuple(func(a) for a in r) for r in self.data))

    # -- block operations ----------------------------------------------
    def block_diag(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        z = self.ring.zero_value
        top = [r + (z,) * other.cols for r in self.data]
        bottom = [(z,) * self.cols + r for r in other.data]
        return RingMatrix(self.ring, self.rows + other.rows, self.cols + other.cols,
                          tuple(top + bottom))

    @staticmethod
    def block(blocks: Sequence[Sequence["RingMatrix"]]) -> "RingMatrix":
        """Assemble a block matrix; block rows must share heights, block columns widths."""
        ring = blocks[0][0].ring
        data = []
        widths = [b.cols for b in blocks[0]]
        for brow in blocks:
            h = brow[0].rows
            for b in brow:
                if b.rows != h:
                    raise ValueError("block heights differ")
                if not (b.ring is ring or b.ring == ring):
                    raise RingMismatch("blocks over different rings")
            if [b.cols for b in brow] != widths:
                raise ValueError("block widths differ")
            for i in range(h):
                data.append(sum((b.data[i] for b in brow), ()))
        return RingMatrix(ring, len(data), sum(widths), tuple(data))

    def hstack(self, other):
        return RingMatrix.block([[self, other]])

    def vstack(self, other):
        return RingMatrix.block([[self], [other]])

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "RingMatrix":
        rows, cols = list(rows), list(cols)
        return RingMatrix(self.ring, len(rows), len(cols),
                          tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def pad(self, extra_rows: int, extra_cols: int) -> "RingMatrix":
        z = self.ring.zero_value
        data = [r + (z,) * extra_cols for r in self.data]
        data += [(z,) * (self.cols + extra_cols)] * extra_rows
        return RingMatrix(self.ring, self.rows + extra_rows, self.cols + extra_cols, tuple(data))

    # -- comparisons and text ------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.shape == other.shape
                and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def text(self) -> str:
        R = self.ring
        return ";".join(",".join(R.format_value(v) for v in r) for r in self.data)

    def to_json(self) -> dict:
        R = self.ring
        return {"ring": str(R), "rows": [[R.format_value(v) for v in r] for r in self.data]}

    def __str__(self):
        R = self.ring
        cells = [[R.format_value(v) for v in r] for r in self.data]
        if not cells:
            return f"[] ({self.rows}x{self.cols})"
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"RingMatrix({self.ring}, {self.rows}x{self.cols}, {self.text()!r})"


def parse_matrix(text: str, ring: Ring = None) -> RingMatrix:
    """Parse ``"a,b;c,d"`` or the JSON form ``{"ring": ..., "rows": [[...]]}``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", text, exc.pos) from None
        if "rows" not in obj:
            raise ParseError("JSON matrix needs a 'rows' field", text, 0)
        jr = parse_ring(obj["ring"]) if "ring" in obj else None
        if ring is None:
            ring = jr
        elif jr is not None and jr != ring:
            raise RingMismatch(f"matrix ring {jr} differs from {ring}")
        if ring is None:
            raise ParseError("no ring given for the matrix", text, 0)
        rows = obj["rows"]
        cols = len(rows[0]) if rows else int(obj.get("cols", 0))
        grid = [[parse_element(ring, str(x)) for x in r] for r in rows]
        if any(len(r) != cols for r in grid):
            raise ParseError("ragged matrix rows", text, 0)
        return RingMatrix.from_rows(ring, grid, cols)
    if ring is None:
        raise ParseError("no ring given for the matrix", text, 0)
    if not stripped:
        raise ParseError("empty matrix", text, 0)
    grid = []
    offset = text.index(stripped)
    for row_text in split_top(stripped, ";"):
        row = []
        for cell in split_top(row_text, ","):
            try:
                row.append(parse_element(ring, cell))
            except ParseError as exc:
                raise ParseError(f"bad matrix entry {cell.strip()!r}: {exc}", text,
                                 offset + stripped.find(cell)) from None
        grid.append(row)
    if len({len(r) for r in grid}) != 1:
        raise ParseError("ragged matrix rows", text, 0)
    return RingMatrix.from_rows(ring, grid)
