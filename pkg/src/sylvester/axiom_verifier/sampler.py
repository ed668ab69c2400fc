"""Seeded random matrices of the special shapes the axiom checks need."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..matrix_forms.certificate import ElementaryOp, apply_col_op, apply_row_op
from ..matrix_forms.matrix import RingMatrix
from ..ring_core.base import AlgebraError, Element, Ring
from ..ring_core.composite import MatrixRing, Product
from ..ring_core.fields import Integers
from ..ring_core.polyrings import PolyRing
from ..ring_core.skew import SkewLaurent


@dataclass
class MatrixSampler:
    """Deterministic stream of matrices over ``ring``.

    ``max_dim`` bounds every matrix handed to a rank function, including
    block matrices assembled from sampled pieces.
    """

    ring: Ring
    max_dim: int = 4
    seed: int = 0
    degree: int = 3
    op_degree: int = 1
    coeff_size: int = 1
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    # -- elements --------------------------------------------------------
    def element(self, size: Optional[int] = None) -> Element:
        R = self.ring
        size = self.degree if size is None else size
        if isinstance(R, SkewLaurent):
            # keep base coefficients small; Q(x) coefficients otherwise swell fast
            K = R.base
            d = self.rng.randint(0, size)
            cs = [K.random_value(self.rng, self.coeff_size) for _ in range(d + 1)]
            return Element(R, R.normalize(self.rng.randint(-1, 1), cs))
        try:
            v = R.random_value(self.rng, size)
        except TypeError:
            v = R.random_value(self.rng)
        return Element(R, v)

    def unit(self) -> Element:
        """A random unit (falls back to 1 after a few misses)."""
        R = self.ring
        if isinstance(R, Integers):
            return R(self.rng.choice((1, -1)))
        if isinstance(R, SkewLaurent):
            K = R.base
            c = K.zero_value
            while c == K.zero_value:
                c = K.random_value(self.rng)
            return Element(R, R.monomial(c, self.rng.randint(-1, 1)))
        for _ in range(8):
            x = self.element(self.op_degree)
            try:
                y = x.inverse()
            except (AlgebraError, ZeroDivisionError, ArithmeticError):
                continue
            if x * y == R.one() and y * x == R.one():
                return x
        return R.one()

    def nilpotent_element(self) -> Optional[Element]:
        """c * random for a primary artinian ring with radical generator c."""
        R = self.ring
        if not hasattr(R, "radical_generator_value"):
            return None
        try:
            c = Element(R, R.radical_generator_value())
        except Exception:
            return None
        return c * self.element()

    # -- matrices --------------------------------------------------------
    def dims(self, lo: int = 1, hi: Optional[int] = None) -> int:
        return self.rng.randint(lo, hi or self.max_dim)

    def matrix(self, rows: int, cols: int) -> RingMatrix:
        R = self.ring
        vals = []
        for _ in range(rows):
            vals.append(tuple(self.element().value for _ in range(cols)))
        return RingMatrix(R, rows, cols, tuple(vals))

    def small_product(self, factors: int = 3) -> Element:
        """Product of up to ``factors`` low-degree elements; often a non-unit."""
        x = self.ring.one()
        for _ in range(self.rng.randint(0, factors)):
            x = x * self.element(1)
        return x

    def structured_matrix(self, rows: int, cols: int) -> RingMatrix:
        """Random matrix biased towards rank deficiency and non-unit divisors.

        Uniform entries are almost always of full rank; this mixes in low-rank
        products, U D V with a non-unit diagonal, and matrices scaled by a
        non-unit, so diagonal forms with interesting valuations show up.
        """
        R = self.ring
        kind = self.rng.randrange(4)
        if kind == 0:
            return self.matrix(rows, cols)
        if kind == 1:
            inner = self.rng.randint(1, max(1, min(rows, cols) - 1))
            return self.matrix(rows, inner) @ self.matrix(inner, cols)
        if kind == 2:
            D = RingMatrix.diagonal(R, [self.small_product().value
                                        for _ in range(min(rows, cols))], rows, cols)
            return self.invertible(rows) @ D @ self.invertible(cols)
        g = self.small_product().value
        M = self.matrix(rows, cols)
        return RingMatrix(R, rows, cols, tuple(tuple(R.mul(g, x) for x in r) for r in M.data))

    def _elementary_ops(self, n: int, count: int) -> List[ElementaryOp]:
        ops = []
        for _ in range(count):
            kind = self.rng.random()
            if n > 1 and kind < 0.6:
                i, j = self.rng.sample(range(n), 2)
                ops.append(ElementaryOp("add", i, j, self.element(self.op_degree)))
            elif n > 1 and kind < 0.8:
                i, j = self.rng.sample(range(n), 2)
                ops.append(ElementaryOp("swap", i, j))
            else:
                u = self.unit()
                ops.append(ElementaryOp("scale", self.rng.randrange(n), -1, u, u.inverse()))
        return ops

    def invertible_pair(self, n: int, count: Optional[int] = None) -> Tuple[RingMatrix, RingMatrix]:
        """(U, U^-1) with U = E_k ... E_1 a product of elementary matrices."""
        R = self.ring
        ops = self._elementary_ops(n, count if count is not None else n + 1)
        U = [list(r) for r in RingMatrix.identity(R, n).data]
        V = [list(r) for r in RingMatrix.identity(R, n).data]
        for op in ops:
            apply_row_op(R, U, op)
            # V <- V E^-1, a column operation
            apply_col_op(R, V, _inverse_as_column(op))
        return (RingMatrix(R, n, n, tuple(map(tuple, U))),
                RingMatrix(R, n, n, tuple(map(tuple, V))))

    def invertible(self, n: int) -> RingMatrix:
        return self.invertible_pair(n)[0]

    def nilpotent_matrix(self, n: int) -> RingMatrix:
        """U N U^-1 with N strictly upper triangular."""
        R = self.ring
        zero = R.zero_value
        rows = []
        for i in range(n):
            rows.append(tuple(self.element().value if j > i else zero for j in range(n)))
        N = RingMatrix(R, n, n, tuple(rows))
        U, Ui = self.invertible_pair(n)
        return U @ N @ Ui

    def idempotent_pair(self, n: int) -> Tuple[RingMatrix, RingMatrix]:
        """(E, I - E) with E = U diag(e_1..e_n) U^-1 for idempotents e_i of the ring."""
        R = self.ring
        es = ring_idempotents(R)
        D = RingMatrix.diagonal(R, [self.rng.choice(es) for _ in range(n)])
        U, Ui = self.invertible_pair(n)
        E = U @ D @ Ui
        return E, RingMatrix.identity(R, n) - E


def ring_idempotents(R: Ring) -> List:
    """A few idempotent payloads of R, always including 0 and 1."""
    if isinstance(R, Product):
        return [(a, b) for a in ring_idempotents(R.left) for b in ring_idempotents(R.right)]
    if isinstance(R, MatrixRing):
        K = R.base
        out = []
        for r in range(R.n + 1):
            out.append(tuple(tuple(K.one_value if i == j and i < r else K.zero_value
                                   for j in range(R.n)) for i in range(R.n)))
        return out
    if isinstance(R, PolyRing) and isinstance(R.base, MatrixRing):
        return [() if R.base.is_zero_value(e) else (e,) for e in ring_idempotents(R.base)]
    return [R.zero_value, R.one_value]


def _inverse_as_column(op: ElementaryOp) -> ElementaryOp:
    """Column operation equal to right multiplication by the inverse of row op ``op``."""
    if op.kind == "swap":
        return op
    if op.kind == "add":
        return ElementaryOp("add", op.j, op.i, -op.coeff)
    return ElementaryOp("scale", op.i, -1, op.inverse, op.coeff)
