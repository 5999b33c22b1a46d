"""
Exact rational linear algebra on sympy ``DomainMatrix`` over ``QQ``.

All matrices handed out by this module are dense (DDM format). sympy's
``zeros``/``eye`` constructors return sparse matrices and ``matmul``/``add``
refuse to mix formats, so everything is built through the helpers below.
Zero-sized shapes are handled here and never reach sympy's elimination code.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Matrix = DomainMatrix

ZERO = QQ(0)
ONE = QQ(1)


def qq(value) -> "QQ.dtype":
    """
    Convert an int, "p/q" string, Fraction or QQ element to a QQ element.

    Raises:
        ValueError: If a string is not a rational literal
    """
    if isinstance(value, (int, np.integer)):
        return QQ(int(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational literal: {value!r}") from e
        return QQ(frac.numerator, frac.denominator)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    raise ValueError(f"Cannot convert {value!r} to a rational")


def fmt_q(value) -> str:
    """Canonical rational string: "p" for integers, "p/q" with q > 0 and gcd 1."""
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _dm(rows: List[List], m: int, n: int) -> Matrix:
    return DomainMatrix(rows, (m, n), QQ)


def mat(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    """Build a dense matrix from nested rows of rational-like values."""
    data = [[qq(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(data[0]) if data else 0
    for row in data:
        if len(row) != ncols:
            raise ValueError(f"Ragged matrix rows: expected {ncols} columns, got {len(row)}")
    return _dm(data, len(data), ncols)


def zeros(m: int, n: int) -> Matrix:
    return _dm([[ZERO] * n for _ in range(m)], m, n)


def eye(n: int) -> Matrix:
    return _dm([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n, n)


def unit_column(n: int, k: int) -> Matrix:
    """The k-th standard basis vector of QQ^n as an n x 1 matrix."""
    return _dm([[ONE if i == k else ZERO] for i in range(n)], n, 1)


def from_columns(columns: Sequence[Sequence], nrows: int) -> Matrix:
    """Matrix whose columns are the given vectors."""
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
    return _dm(rows, nrows, len(columns))


def rows_of(a: Matrix) -> List[List]:
    return a.to_list()


def columns_of(a: Matrix) -> List[List]:
    m, n = a.shape
    rows = a.to_list()
    return [[rows[i][j] for i in range(m)] for j in range(n)]


def flat(a: Matrix) -> List:
    """Row-major entries."""
    return [x for row in a.to_list() for x in row]


def entry(a: Matrix, i: int, j: int):
    return a.to_list()[i][j]


def encode(a: Matrix) -> Tuple[Tuple[str, ...], ...]:
    """Hashable canonical encoding of the entries."""
    return tuple(tuple(fmt_q(x) for x in row) for row in a.to_list())


def transpose(a: Matrix) -> Matrix:
    m, n = a.shape
    if m == 0 or n == 0:
        return zeros(n, m)
    return a.transpose()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    m, k = a.shape
    k2, n = b.shape
    if k != k2:
        raise ValueError(f"Cannot multiply {a.shape} by {b.shape}")
    if m == 0 or n == 0 or k == 0:
        return zeros(m, n)
    return a.matmul(b)


def chain(*mats: Matrix) -> Matrix:
    """Product m1 * m2 * ... (usual matrix order)."""
    result = mats[0]
    for m in mats[1:]:
        result = matmul(result, m)
    return result


def add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise ValueError(f"Cannot add {a.shape} and {b.shape}")
    if 0 in a.shape:
        return a
    return a + b


def sub(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise ValueError(f"Cannot subtract {b.shape} from {a.shape}")
    if 0 in a.shape:
        return a
    return a - b


def scale(a: Matrix, c) -> Matrix:
    c = qq(c) if not isinstance(c, type(ONE)) else c
    m, n = a.shape
    return _dm([[c * x for x in row] for row in a.to_list()], m, n)


def is_zero(a: Matrix) -> bool:
    if 0 in a.shape:
        return True
    return a.is_zero_matrix


def hstack(mats: Sequence[Matrix], nrows: Optional[int] = None) -> Matrix:
    """Concatenate horizontally; ``nrows`` is required when ``mats`` is empty."""
    if not mats:
        return zeros(nrows or 0, 0)
    m = mats[0].shape[0]
    rows = [[] for _ in range(m)]
    for a in mats:
        if a.shape[0] != m:
            raise ValueError("hstack of matrices with different row counts")
        for i, row in enumerate(a.to_list()):
            rows[i].extend(row)
    return _dm(rows, m, sum(a.shape[1] for a in mats))


def vstack(mats: Sequence[Matrix], ncols: Optional[int] = None) -> Matrix:
    """Concatenate vertically; ``ncols`` is required when ``mats`` is empty."""
    if not mats:
        return zeros(0, ncols or 0)
    n = mats[0].shape[1]
    rows = []
    for a in mats:
        if a.shape[1] != n:
            raise ValueError("vstack of matrices with different column counts")
        rows.extend(a.to_list())
    return _dm(rows, len(rows), n)


def block_diag(mats: Sequence[Matrix]) -> Matrix:
    m = sum(a.shape[0] for a in mats)
    n = sum(a.shape[1] for a in mats)
    rows = [[ZERO] * n for _ in range(m)]
    r0 = c0 = 0
    for a in mats:
        for i, row in enumerate(a.to_list()):
            rows[r0 + i][c0:c0 + len(row)] = row
        r0 += a.shape[0]
        c0 += a.shape[1]
    return _dm(rows, m, n)


def rref(a: Matrix) -> Tuple[List[List], Tuple[int, ...]]:
    """
    Reduced row echelon form as row lists plus pivot columns.

    Pivot rows are rescaled so every pivot equals one.
    """
    m, n = a.shape
    if m == 0 or n == 0:
        return [[ZERO] * n for _ in range(m)], ()
    reduced, pivots = a.rref()
    rows = reduced.to_list()
    for i, p in enumerate(pivots):
        lead = rows[i][p]
        if lead != ONE:
            rows[i] = [x / lead for x in rows[i]]
    return rows, tuple(pivots)


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix) -> Matrix:
    """Columns form a basis of {x : a x = 0}."""
    m, n = a.shape
    rows, pivots = rref(a)
    free = [j for j in range(n) if j not in pivots]
    columns = []
    for f in free:
        vec = [ZERO] * n
        vec[f] = ONE
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][f]
        columns.append(vec)
    return from_columns(columns, n)


def left_nullspace(a: Matrix) -> Matrix:
    """Rows form a basis of {y : y a = 0}."""
    return transpose(nullspace(transpose(a)))


def column_basis(a: Matrix) -> Matrix:
    """Linearly independent columns of ``a`` spanning its column space."""
    _, pivots = rref(a)
    cols = columns_of(a)
    return from_columns([cols[p] for p in pivots], a.shape[0])


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """
    One solution X of a X = b, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    m, n = a.shape
    k = b.shape[1]
    if b.shape[0] != m:
        raise ValueError(f"solve: {a.shape} vs right-hand side {b.shape}")
    if m == 0:
        return zeros(n, k)
    rows, pivots = rref(hstack([a, b]))
    if any(p >= n for p in pivots):
        return None
    x = [[ZERO] * k for _ in range(n)]
    for i, p in enumerate(pivots):
        x[p] = rows[i][n:]
    return _dm(x, n, k)


def solve_vector(a: Matrix, b: Sequence) -> Optional[List]:
    """Solve a x = b for a single right-hand side given as a flat list."""
    x = solve(a, _dm([[v] for v in b], len(b), 1))
    if x is None:
        return None
    return [row[0] for row in x.to_list()]


def inverse(a: Matrix) -> Matrix:
    n = a.shape[0]
    if n == 0:
        return zeros(0, 0)
    return a.inv()


def det(a: Matrix):
    if a.shape[0] == 0:
        return ONE
    return a.det()


def is_invertible(a: Matrix) -> bool:
    m, n = a.shape
    return m == n and rank(a) == n


def power(a: Matrix, k: int) -> Matrix:
    result = eye(a.shape[0])
    for _ in range(k):
        result = matmul(result, a)
    return result


def rational_eigenvalues(a: Matrix) -> List:
    """Distinct rational roots of the characteristic polynomial, sorted."""
    if a.shape[0] == 0:
        return []
    roots = set()
    for factor, _ in a.charpoly_factor_list():
        if len(factor) == 2:
            roots.add(-factor[1] / factor[0])
    return sorted(roots)


def combine(mats: Sequence[Matrix], coeffs: Iterable) -> Matrix:
    """Linear combination sum c_k * mats[k]."""
    result = None
    for a, c in zip(mats, coeffs):
        term = scale(a, c)
        result = term if result is None else add(result, term)
    return result


def span_rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a list of equal-length flat vectors."""
    if not vectors or not vectors[0]:
        return 0
    return rank(_dm([list(v) for v in vectors], len(vectors), len(vectors[0])))


def vector_matrix(vectors: Sequence[Sequence], width: int) -> Matrix:
    """Matrix with the given flat vectors as rows."""
    return _dm([list(v) for v in vectors], len(vectors), width)
