"""Exact scalars, dense matrices, structure tensors and linear solving.

Two ground fields are supported: the rationals (elements are ``int`` or
``fractions.Fraction``, always normalised so integral values are plain
``int``) and prime fields GF(p) (elements are ``int`` in ``[0, p)``).
Nothing in the package touches floating point.

Tensor products use the Kronecker convention everywhere: the pure tensor
``e_i (x) e_j`` of spaces of dimensions ``m`` and ``n`` has index ``i*n + j``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import kernel
from .errors import DimensionError, FieldMismatchError, InputError

_RATIONAL = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """The ground field: ``Field(0)`` is QQ, ``Field(p)`` is GF(p)."""

    __slots__ = ("mod",)

    def __init__(self, mod: int = 0):
        if mod and not _is_prime(mod):
            raise InputError(f"GF({mod}): modulus is not prime")
        if mod >= 2**31:
            raise InputError("prime modulus must be below 2**31")
        self.mod = mod

    def __eq__(self, other):
        return isinstance(other, Field) and other.mod == self.mod

    def __hash__(self):
        return hash(("Field", self.mod))

    def __repr__(self):
        return f"GF({self.mod})" if self.mod else "QQ"

    @property
    def descriptor(self) -> str:
        return repr(self)

    @classmethod
    def from_descriptor(cls, text: str) -> "Field":
        if text == "QQ":
            return QQ
        m = re.fullmatch(r"GF\((\d+)\)", text)
        if not m:
            raise InputError(f"unknown field descriptor {text!r}")
        return cls(int(m.group(1)))

    zero = 0
    one = 1

    def __call__(self, x):
        """Coerce an int (or, over QQ, a Fraction) into the field."""
        if isinstance(x, bool) or isinstance(x, float):
            raise InputError(f"refusing non-exact scalar {x!r}")
        if self.mod:
            if isinstance(x, int):
                return x % self.mod
            raise FieldMismatchError(f"cannot coerce {x!r} into {self}")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        raise FieldMismatchError(f"cannot coerce {x!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.mod if self.mod else a + b

    def sub(self, a, b):
        return (a - b) % self.mod if self.mod else a - b

    def neg(self, a):
        return (-a) % self.mod if self.mod else -a

    def mul(self, a, b):
        return (a * b) % self.mod if self.mod else a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.mod:
            return pow(a, -1, self.mod)
        return self(Fraction(1) / a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def normalize(self, a):
        if self.mod:
            return a % self.mod
        if isinstance(a, Fraction) and a.denominator == 1:
            return a.numerator
        return a

    # serialisation ------------------------------------------------------
    def parse(self, token):
        if self.mod:
            if isinstance(token, bool) or not isinstance(token, int):
                raise InputError(f"{self} scalar must be an integer, got {token!r}")
            if not 0 <= token < self.mod:
                raise InputError(f"{self} scalar {token} outside [0, {self.mod})")
            return token
        if not isinstance(token, str):
            raise InputError(f"QQ scalar must be a string, got {token!r}")
        m = _RATIONAL.match(token)
        if not m:
            raise InputError(f"malformed rational {token!r}")
        sign, num, den = m.groups()
        den = int(den) if den is not None else 1
        if den == 0:
            raise InputError(f"zero denominator in {token!r}")
        value = Fraction(int(num), den)
        return self(-value if sign else value)

    def format(self, a):
        if self.mod:
            return int(a)
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def same_field(*objs) -> Field:
    fields = {o.field for o in objs}
    if len(fields) != 1:
        raise FieldMismatchError(f"mixed fields {sorted(map(repr, fields))}")
    return fields.pop()


class Matrix:
    """Immutable dense matrix over a ``Field``, row-major."""

    __slots__ = ("field", "rows", "cols", "entries", "__dict__")

    def __init__(self, field: Field, rows: int, cols: int, entries: Iterable):
        entries = tuple(field(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix given {len(entries)} entries")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(field, len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int):
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int):
        return cls(field, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_columns(cls, field: Field, rows: int, columns: Sequence[dict]):
        """Build from sparse columns ``columns[j] = {i: value}``."""
        cols = len(columns)
        data = [0] * (rows * cols)
        for j, col in enumerate(columns):
            for i, v in col.items():
                if not 0 <= i < rows:
                    raise DimensionError(f"row index {i} out of range {rows}")
                data[i * cols + j] = v
        return cls(field, rows, cols, data)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @cached_property
    def column_table(self) -> list[dict]:
        """Sparse columns: ``column_table[j] = {i: a_ij != 0}``."""
        out = [dict() for _ in range(self.cols)]
        c = self.cols
        for idx, v in enumerate(self.entries):
            if v:
                out[idx % c][idx // c] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_rows()})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        F = same_field(self, other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
        out = kernel.matmul(self.to_rows(), other.to_rows(), other.cols, F.mod)
        return Matrix(F, self.rows, other.cols, [F.normalize(x) for r in out for x in r])

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.shape} matrix")
        F = self.field
        out = []
        for i in range(self.rows):
            s = 0
            for a, x in zip(self.row(i), vec):
                if a and x:
                    s = F.add(s, F.mul(a, x))
            out.append(F.normalize(s))
        return tuple(out)

    def _zip(self, other, op):
        F = same_field(self, other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(F, self.rows, self.cols,
                      [op(a, b) for a, b in zip(self.entries, other.entries)])

    def __add__(self, other):
        return self._zip(other, self.field.add)

    def __sub__(self, other):
        return self._zip(other, self.field.sub)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        F = self.field
        c = F(c)
        return Matrix(F, self.rows, self.cols, [F.mul(c, a) for a in self.entries])

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def is_zero(self):
        return not any(self.entries)

    def is_identity(self):
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; ``(i*B.rows + k, j*B.cols + l) -> A[i,j]*B[k,l]``."""
    F = same_field(A, B)
    rows, cols = A.rows * B.rows, A.cols * B.cols
    data = [0] * (rows * cols)
    for i in range(A.rows):
        for j in range(A.cols):
            a = A[i, j]
            if not a:
                continue
            for k in range(B.rows):
                base = (i * B.rows + k) * cols + j * B.cols
                for l in range(B.cols):
                    b = B[k, l]
                    if b:
                        data[base + l] = F.mul(a, b)
    return Matrix(F, rows, cols, data)


@dataclass(frozen=True)
class LinearSolution:
    x: tuple
    nullspace: tuple  # tuple of basis vectors


def solve_sparse(rows: Sequence[dict], rhs: Sequence, ncols: int, field: Field):
    """Solve ``sum_j rows[r][j] * x_j = rhs[r]`` exactly.

    Returns a ``LinearSolution`` (particular solution with free variables set
    to zero, plus a nullspace basis), or ``None`` if the system is
    inconsistent. Rows are sparse dicts; elimination keeps the pivot rows in
    reduced form so block-diagonal systems stay cheap.
    """
    if len(rows) != len(rhs):
        raise DimensionError(f"{len(rows)} equations but {len(rhs)} right-hand sides")
    F = field
    pivots: dict[int, list] = {}  # col -> [row dict, rhs value]
    for row, b in zip(rows, rhs):
        row = {j: v for j, v in row.items() if v}
        if any(not 0 <= j < ncols for j in row):
            raise DimensionError(f"column index out of range {ncols}")
        for col in [j for j in row if j in pivots]:
            coef = row.get(col)
            if not coef:
                continue
            prow, pb = pivots[col]
            for j, v in prow.items():
                nv = F.sub(row.get(j, 0), F.mul(coef, v))
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            b = F.sub(b, F.mul(coef, pb))
        if not row:
            if b:
                return None
            continue
        col = min(row)
        inv = F.inv(row[col])
        row = {j: F.mul(inv, v) for j, v in row.items()}
        b = F.mul(inv, b)
        for other in pivots.values():
            orow = other[0]
            coef = orow.get(col)
            if coef:
                for j, v in row.items():
                    nv = F.sub(orow.get(j, 0), F.mul(coef, v))
                    if nv:
                        orow[j] = nv
                    else:
                        orow.pop(j, None)
                other[1] = F.sub(other[1], F.mul(coef, b))
        pivots[col] = [row, b]
    x = [0] * ncols
    for col, (_, b) in pivots.items():
        x[col] = F.normalize(b)
    null = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [0] * ncols
        v[free] = 1
        for col, (prow, _) in pivots.items():
            c = prow.get(free)
            if c:
                v[col] = F.normalize(F.neg(c))
        null.append(tuple(v))
    return LinearSolution(tuple(x), tuple(null))


def solve_linear(A: Matrix, b: Sequence):
    """Exact solution of ``A x = b`` with nullspace, or ``None`` if inconsistent."""
    if len(b) != A.rows:
        raise DimensionError(f"matrix has {A.rows} rows, right-hand side {len(b)}")
    F = A.field
    rows = [{j: v for j, v in enumerate(A.row(i)) if v} for i in range(A.rows)]
    return solve_sparse(rows, [F(v) for v in b], A.cols, F)


def invert(A: Matrix):
    """Exact inverse, or ``None`` if ``A`` is singular."""
    if A.rows != A.cols:
        raise DimensionError(f"cannot invert non-square {A.shape} matrix")
    n = A.rows
    F = A.field
    base = [{j: v for j, v in enumerate(A.row(i)) if v} for i in range(n)]
    cols = []
    for k in range(n):
        sol = solve_sparse([dict(r) for r in base], [1 if i == k else 0 for i in range(n)], n, F)
        if sol is None or sol.nullspace:
            return None
        cols.append({i: v for i, v in enumerate(sol.x) if v})
    return Matrix.from_columns(F, n, cols)


class StructureTensor:
    """A 3-index array ``T[i, j, k]`` over a field, stored sparsely.

    For products ``T[i, j, k]`` is the coefficient of ``e_i`` in ``e_j e_k``
    (shape ``(d_out, d_in1, d_in2)``). For coproducts the same class is used
    with ``T[j, i1, i2]`` the coefficient of ``e_i1 (x) e_i2`` in ``Delta(e_j)``.
    """

    __slots__ = ("field", "shape", "data", "__dict__")

    def __init__(self, field: Field, shape, data: dict):
        self.field = field
        self.shape = tuple(shape)
        d0, d1, d2 = self.shape
        clean = {}
        for (i, j, k), v in data.items():
            if not (0 <= i < d0 and 0 <= j < d1 and 0 <= k < d2):
                raise DimensionError(f"index {(i, j, k)} outside shape {self.shape}")
            v = field(v)
            if v:
                clean[(i, j, k)] = v
        self.data = clean

    @classmethod
    def from_dense(cls, field, shape, entries):
        d0, d1, d2 = shape
        entries = list(entries)
        if len(entries) != d0 * d1 * d2:
            raise DimensionError(f"shape {tuple(shape)} given {len(entries)} entries")
        data = {}
        for idx, v in enumerate(entries):
            if v:
                data[(idx // (d1 * d2), (idx // d2) % d1, idx % d2)] = v
        return cls(field, shape, data)

    @classmethod
    def from_product_table(cls, field, d_out, table):
        """``table[j][k] = {i: c}`` -> tensor of shape ``(d_out, len(table), ...)``."""
        d1 = len(table)
        d2 = len(table[0]) if d1 else 0
        data = {}
        for j, row in enumerate(table):
            for k, col in enumerate(row):
                for i, v in col.items():
                    data[(i, j, k)] = v
        return cls(field, (d_out, d1, d2), data)

    @classmethod
    def from_split_table(cls, field, d_out, table):
        """``table[j] = {(i1, i2): c}`` -> coproduct tensor of shape ``(len, d, d)``."""
        data = {}
        for j, col in enumerate(table):
            for (i1, i2), v in col.items():
                data[(j, i1, i2)] = v
        return cls(field, (len(table), d_out, d_out), data)

    @property
    def entries(self) -> tuple:
        d0, d1, d2 = self.shape
        out = [0] * (d0 * d1 * d2)
        for (i, j, k), v in self.data.items():
            out[(i * d1 + j) * d2 + k] = v
        return tuple(out)

    @cached_property
    def product_table(self) -> list:
        d0, d1, d2 = self.shape
        t = [[dict() for _ in range(d2)] for _ in range(d1)]
        for (i, j, k), v in self.data.items():
            t[j][k][i] = v
        return t

    @cached_property
    def split_table(self) -> list:
        t = [dict() for _ in range(self.shape[0])]
        for (j, i1, i2), v in self.data.items():
            t[j][(i1, i2)] = v
        return t

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.shape, frozenset(self.data.items())))

    def __repr__(self):
        return f"StructureTensor({self.field}, {self.shape}, nnz={len(self.data)})"

    def with_entry(self, idx, value) -> "StructureTensor":
        data = dict(self.data)
        data[tuple(idx)] = value
        return StructureTensor(self.field, self.shape, data)
