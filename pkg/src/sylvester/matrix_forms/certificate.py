"""Elementary operations and replayable diagonalization certificates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..ring_core.base import Element
from .matrix import RingMatrix


@dataclass(frozen=True)
class ElementaryOp:
    """One invertible row or column operation.

    Row ops act on the left:  swap rows i, j;  row_i += c*row_j;  row_i = c*row_i.
    Column ops act on the right:  swap;  col_i += col_j*c;  col_i = col_i*c.
    For scalings ``inverse`` records c^-1.
    """

    kind: str
    i: int
    j: int = -1
    coeff: Optional[Element] = None
    inverse: Optional[Element] = None

    def text(self, side: str) -> str:
        tag = "row" if side == "row" else "col"
        if self.kind == "swap":
            return f"swap {tag} {self.i} {self.j}"
        if self.kind == "add":
            if side == "row":
                return f"row {self.i} += ({self.coeff})*row {self.j}"
            return f"col {self.i} += col {self.j}*({self.coeff})"
        return f"{tag} {self.i} *= ({self.coeff})"

    def to_json(self, side: str) -> dict:
        out = {"side": side, "kind": self.kind, "i": self.i}
        if self.kind != "scale":
            out["j"] = self.j
        if self.coeff is not None:
            out["coeff"] = str(self.coeff)
        if self.inverse is not None:
            out["inverse"] = str(self.inverse)
        return out


def apply_row_op(R, M: List[list], op: ElementaryOp) -> None:
    if op.kind == "swap":
        M[op.i], M[op.j] = M[op.j], M[op.i]
    elif op.kind == "add":
        c = op.coeff.value
        ri, rj = M[op.i], M[op.j]
        for k in range(len(ri)):
            ri[k] = R.add(ri[k], R.mul(c, rj[k]))
    elif op.kind == "scale":
        c = op.coeff.value
        M[op.i] = [R.mul(c, x) for x in M[op.i]]
    else:
        raise ValueError(f"unknown op {op.kind}")


def apply_col_op(R, M: List[list], op: ElementaryOp) -> None:
    if op.kind == "swap":
        for r in M:
            r[op.i], r[op.j] = r[op.j], r[op.i]
    elif op.kind == "add":
        c = op.coeff.value
        for r in M:
            r[op.i] = R.add(r[op.i], R.mul(r[op.j], c))
    elif op.kind == "scale":
        c = op.coeff.value
        for r in M:
            r[op.i] = R.mul(r[op.i], c)
    else:
        raise ValueError(f"unknown op {op.kind}")


@dataclass(frozen=True)
class DiagonalCertificate:
    """Replaying ``p_ops`` on the left and ``q_ops`` on the right of ``input``,
    then multiplying on the right by t^t_shift * I, gives the padded diagonal."""

    input: RingMatrix
    p_ops: Tuple[ElementaryOp, ...]
    q_ops: Tuple[ElementaryOp, ...]
    diagonal: Tuple[Element, ...]
    t_shift: int = 0

    def diagonal_matrix(self) -> RingMatrix:
        A = self.input
        return RingMatrix.diagonal(A.ring, [d.value for d in self.diagonal], A.rows, A.cols)

    def replay(self) -> RingMatrix:
        A = self.input
        R = A.ring
        M = [list(r) for r in A.data]
        for op in self.p_ops:
            apply_row_op(R, M, op)
        for op in self.q_ops:
            apply_col_op(R, M, op)
        if self.t_shift:
            tk = R.pow_value(R.generators()[R.var], self.t_shift)
            M = [[R.mul(x, tk) for x in r] for r in M]
        return RingMatrix.from_values(R, M, A.cols)

    def p_matrix(self) -> RingMatrix:
        R = self.input.ring
        M = [list(r) for r in RingMatrix.identity(R, self.input.rows).data]
        for op in self.p_ops:
            apply_row_op(R, M, op)
        return RingMatrix.from_values(R, M, self.input.rows)

    def q_matrix(self) -> RingMatrix:
        R = self.input.ring
        M = [list(r) for r in RingMatrix.identity(R, self.input.cols).data]
        for op in self.q_ops:
            apply_col_op(R, M, op)
        return RingMatrix.from_values(R, M, self.input.cols)

    def to_json(self) -> dict:
        return {
            "ring": str(self.input.ring),
            "input": self.input.to_json()["rows"],
            "diagonal": [str(d) for d in self.diagonal],
            "t_shift": self.t_shift,
            "p_ops": [op.to_json("row") for op in self.p_ops],
            "q_ops": [op.to_json("col") for op in self.q_ops],
            "verified": verify_certificate(self),
        }


def verify_certificate(cert: DiagonalCertificate) -> bool:
    """Exact replay; also checks every recorded scaling inverse."""
    R = cert.input.ring
    one = R.one_value
    n_rows, n_cols = cert.input.rows, cert.input.cols
    for ops, bound in ((cert.p_ops, n_rows), (cert.q_ops, n_cols)):
        for op in ops:
            if not (0 <= op.i < bound) or (op.kind != "scale" and not 0 <= op.j < bound):
                return False
            if op.kind == "add" and op.i == op.j:
                return False
            if op.kind == "scale":
                if op.inverse is None:
                    return False
                u, v = op.coeff.value, op.inverse.value
                if R.mul(u, v) != one or R.mul(v, u) != one:
                    return False
    if len(cert.diagonal) != min(n_rows, n_cols):
        return False
    try:
        return cert.replay() == cert.diagonal_matrix()
    except Exception:  # malformed logs count as failed verification
        return False
