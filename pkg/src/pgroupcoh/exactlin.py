"""Exact linear algebra over Z and Z/m.

Everything here works with Python integers, so intermediate growth during
elimination never overflows.  Matrices are stored sparsely as a dict keyed
by ``(row, col)``; the Smith normal form routine works on a dense copy,
which is fine for the sizes that appear in resolution cochain complexes.
Large sparse matrices (bar-resolution oracles) go through
:func:`elementary_divisors` and :func:`rank_mod_p`, which never form the
transforming matrices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "AbelianInvariants",
    "Subquotient",
    "smith_normal_form",
    "cokernel_invariants",
    "solve_integer",
    "kernel_basis_mod",
    "kernel_lattice",
    "lattice_basis",
    "subquotient",
    "elementary_divisors",
    "elementary_divisors_rows",
    "rank_mod_p",
    "rank_mod_p_rows",
    "rank_over_q",
]


class IntMatrix:
    """Immutable sparse integer matrix.

    Zero entries are never stored.  ``entries`` maps ``(row, col)`` to a
    nonzero int.
    """

    __slots__ = ("rows", "cols", "_entries", "_by_col")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        clean = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
                if v:
                    clean[(r, c)] = int(v)
        self._entries = clean
        self._by_col = None

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        ent = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = v
        return cls(rows, cols, ent)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        ent = {}
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length mismatch")
            for i, v in enumerate(col):
                if v:
                    ent[(i, j)] = v
        return cls(rows, len(columns), ent)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        return cls(rows, cols, {(i, i): d for i, d in enumerate(diag) if d})

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        return self._entries.get(rc, 0)

    def items(self):
        return self._entries.items()

    def nnz(self) -> int:
        return len(self._entries)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def column(self, j: int) -> list[int]:
        col = [0] * self.rows
        for r, v in self._columns().get(j, ()):
            col[r] = v
        return col

    def row(self, i: int) -> list[int]:
        out = [0] * self.cols
        for (r, c), v in self._entries.items():
            if r == i:
                out[c] = v
        return out

    def _columns(self) -> dict:
        if self._by_col is None:
            by_col: dict[int, list] = {}
            for (r, c), v in self._entries.items():
                by_col.setdefault(c, []).append((r, v))
            self._by_col = by_col
        return self._by_col

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def apply(self, vec: Sequence[int]) -> list[int]:
        """Return ``self @ vec`` for a plain integer vector."""
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.rows}x{self.cols} matrix")
        out = [0] * self.rows
        for (r, c), v in self._entries.items():
            x = vec[c]
            if x:
                out[r] += v * x
        return out

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        ocols = other._columns()
        rows_of_self: dict[int, list] = {}
        for (r, c), v in self._entries.items():
            rows_of_self.setdefault(c, []).append((r, v))
        acc: dict = {}
        for k, col in ocols.items():
            for i, v in col:
                for r, w in rows_of_self.get(i, ()):
                    key = (r, k)
                    acc[key] = acc.get(key, 0) + w * v
        return IntMatrix(self.rows, other.cols, acc)

    def mod(self, m: int) -> "IntMatrix":
        if m == 0:
            return self
        return IntMatrix(self.rows, self.cols, {k: v % m for k, v in self._entries.items()})

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        ent = dict(self._entries)
        for (r, c), v in other._entries.items():
            ent[(r, c + self.cols)] = v
        return IntMatrix(self.rows, self.cols + other.cols, ent)

    def select_columns(self, cols: Sequence[int]) -> "IntMatrix":
        pos = {c: k for k, c in enumerate(cols)}
        ent = {(r, pos[c]): v for (r, c), v in self._entries.items() if c in pos}
        return IntMatrix(self.rows, len(cols), ent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            return f"IntMatrix({self.to_rows()})"
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def dump(self) -> str:
        """Plain-text dump: ``rows cols`` header then ``r c value`` lines."""
        lines = [f"{self.rows} {self.cols}"]
        for (r, c) in sorted(self._entries):
            lines.append(f"{r} {c} {self._entries[(r, c)]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "IntMatrix":
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        rows, cols = int(lines[0][0]), int(lines[0][1])
        ent = {(int(r), int(c)): int(v) for r, c, v in lines[1:]}
        return cls(rows, cols, ent)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with U, V unimodular and D in Smith form."""

    U: IntMatrix
    V: IntMatrix
    D: IntMatrix
    diagonal: tuple[int, ...]  # the nonzero invariant factors d_1 | d_2 | ...
    U_inverse: IntMatrix | None = field(default=None, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.diagonal)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion factors {self.torsion} violate divisibility")
        if any(t <= 1 for t in self.torsion):
            raise ValueError("torsion factors must exceed 1")

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def dim_mod(self, p: int) -> int:
        """F_p-dimension of the group tensored with F_p."""
        return self.free_rank + sum(1 for t in self.torsion if t % p == 0)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"C{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_string(cls, s: str) -> "AbelianInvariants":
        s = s.strip()
        if s == "0":
            return cls()
        free, tors = 0, []
        for part in s.split("+"):
            part = part.strip()
            if part == "Z":
                free += 1
            elif part.startswith("C"):
                tors.append(int(part[1:]))
            else:
                raise ValueError(f"cannot parse invariant {part!r}")
        return cls(free, tuple(sorted(tors, key=lambda t: t)))


# ---------------------------------------------------------------------------
# Smith normal form


def _ident(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _snf_dense(A, track=True):
    """In-place SNF of dense list-of-lists A.  Returns (U, V, diag, Uinv).

    Pivot rule: smallest nonzero magnitude, leftmost column, then topmost
    row.  U and V accumulate the row/column operations; Uinv is kept in
    step so callers never invert U afterwards.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    U = _ident(m) if track else None
    V = _ident(n) if track else None
    Ui = _ident(m) if track else None

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            if track:
                U[i], U[j] = U[j], U[i]
                for row in Ui:
                    row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            if track:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        rs, rd = A[src], A[dst]
        for k in range(n):
            if rs[k]:
                rd[k] += q * rs[k]
        if track:
            us, ud = U[src], U[dst]
            for k in range(m):
                if us[k]:
                    ud[k] += q * us[k]
            for row in Ui:  # inverse op: col_src -= q * col_dst
                if row[dst]:
                    row[src] -= q * row[dst]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        if track:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for j in range(t, n):
            for i in range(t, m):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        add_row(i, t, -q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        add_col(j, t, -q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t + 1, m):
                    v = A[i][t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, "r")
                for j in range(t + 1, n):
                    v = A[t][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), j, "c")
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            # pivot row and column are clear; enforce divisibility
            bad = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if track:
                U[t] = [-x for x in U[t]]
                for row in Ui:
                    row[t] = -row[t]
        diag.append(A[t][t])
        t += 1
    return U, V, diag, Ui


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms, ``U M V = D``."""
    A = M.to_rows()
    if M.rows == 0 or M.cols == 0:
        return SmithDecomposition(IntMatrix.identity(M.rows), IntMatrix.identity(M.cols),
                                  IntMatrix.zeros(M.rows, M.cols), (), IntMatrix.identity(M.rows))
    U, V, diag, Ui = _snf_dense(A)
    return SmithDecomposition(
        IntMatrix.from_rows(U, M.rows),
        IntMatrix.from_rows(V, M.cols),
        IntMatrix.diagonal(diag, M.rows, M.cols),
        tuple(diag),
        IntMatrix.from_rows(Ui, M.rows),
    )


def cokernel_invariants(M: IntMatrix, ambient_rank: int) -> AbelianInvariants:
    """Invariants of ``Z^ambient_rank / column span of M``."""
    if M.rows != ambient_rank:
        raise ValueError(f"matrix has {M.rows} rows, ambient rank is {ambient_rank}")
    diag, rank = elementary_divisors(M)
    return AbelianInvariants(ambient_rank - rank, tuple(d for d in diag if d > 1))


def solve_integer(M: IntMatrix, b: Sequence[int], snf: SmithDecomposition | None = None):
    """Integer solution of ``M x = b``, or None when no integer solution exists."""
    if len(b) != M.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {M.rows} rows")
    if M.cols == 0:
        return [] if not any(b) else None
    snf = snf or smith_normal_form(M)
    c = snf.U.apply(list(b))
    r = snf.rank
    if any(c[r:]):
        return None
    y = [0] * M.cols
    for i, d in enumerate(snf.diagonal):
        if c[i] % d:
            return None
        y[i] = c[i] // d
    return snf.V.apply(y)


def kernel_lattice(M: IntMatrix, m: int = 0) -> list[list[int]]:
    """Z-basis of ``{x in Z^cols : M x = 0 (mod m)}``; m = 0 means over Z."""
    n = M.cols
    if m == 0:
        snf = smith_normal_form(M)
        return [snf.V.column(j) for j in range(snf.rank, n)]
    big = M.hstack(IntMatrix.diagonal([m] * M.rows))
    snf = smith_normal_form(big)
    gens = [snf.V.column(j)[:n] for j in range(snf.rank, big.cols)]
    return lattice_basis(gens, n)


def lattice_basis(gens: Iterable[Sequence[int]], n: int) -> list[list[int]]:
    """A Z-basis for the span of ``gens`` inside Z^n."""
    gens = [list(g) for g in gens if any(g)]
    if not gens:
        return []
    G = IntMatrix.from_columns(gens, n)
    snf = smith_normal_form(G)
    Uinv = snf.U_inverse
    return [[d * x for x in Uinv.column(i)] for i, d in enumerate(snf.diagonal)]


def kernel_basis_mod(M: IntMatrix, m: int) -> list[list[int]]:
    """Generators of ``{x : M x = 0 mod m}``.

    m = 0 gives a Z-basis of the integer kernel; prime m gives an F_m basis
    (entries in ``0..m-1``); other m give a generating set of the Z/m-module.
    """
    n = M.cols
    if m == 0:
        return kernel_lattice(M, 0)
    if m == 1:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    if _is_prime(m):
        return _nullspace_mod_p(M, m)
    out = []
    for v in kernel_lattice(M, m):
        w = _normalize_mod(v, m)
        if any(w) and w not in out:
            out.append(w)
    return out


def _normalize_mod(v, m):
    """Scale v by a unit of Z/m so its leading entry divides m."""
    w = [x % m for x in v]
    lead = next((x for x in w if x), 0)
    if not lead:
        return w
    g = gcd(lead, m)
    mg = m // g
    u0 = pow(lead // g, -1, mg) if mg > 1 else 1
    u = next(u0 + k * mg for k in range(g + 1) if gcd(u0 + k * mg, m) == 1)
    return [(x * u) % m for x in w]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    i = 2
    while i * i <= m:
        if m % i == 0:
            return False
        i += 1
    return True


def _rref_mod_p(rows, ncols, p):
    """Reduced row echelon form mod p; returns (rows, pivot_columns)."""
    A = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(A)):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def _nullspace_mod_p(M: IntMatrix, p: int) -> list[list[int]]:
    n = M.cols
    R, pivots = _rref_mod_p(M.to_rows(), n, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = (-row[f]) % p
        basis.append(_normalize_mod(v, p))
    return basis


# ---------------------------------------------------------------------------
# subquotients L / S of lattices, with generators and a coordinate solver


@dataclass
class Subquotient:
    """The abelian group L/S for lattices S <= L <= Z^n.

    ``generators`` holds one vector of Z^n per cyclic summand, torsion
    summands first (orders given by ``orders``, 0 meaning infinite order).
    ``coordinates(z)`` returns the coordinates of ``z in L`` in that basis,
    torsion coordinates reduced into ``0..order-1``.
    """

    n: int
    invariants: AbelianInvariants
    generators: list[list[int]]
    orders: list[int]
    _basis: IntMatrix = field(repr=False)
    _basis_snf: SmithDecomposition = field(repr=False)
    _U: IntMatrix = field(repr=False)
    _keep: list[int] = field(repr=False)

    def lattice_coords(self, z: Sequence[int]) -> list[int] | None:
        return solve_integer(self._basis, z, self._basis_snf)

    def coordinates(self, z: Sequence[int]) -> list[int]:
        c = self.lattice_coords(z)
        if c is None:
            raise ValueError("vector does not lie in the ambient lattice")
        w = self._U.apply(c) if c else []
        out = []
        for k, o in zip(self._keep, self.orders):
            out.append(w[k] % o if o else w[k])
        return out

    def contains(self, z: Sequence[int]) -> bool:
        return self.lattice_coords(z) is not None


def subquotient(L: Sequence[Sequence[int]], S: Sequence[Sequence[int]], n: int) -> Subquotient:
    """Decompose L/S where L is a Z-basis of a lattice and S generates a sublattice."""
    L = [list(v) for v in L]
    k = len(L)
    B = IntMatrix.from_columns(L, n) if L else IntMatrix.zeros(n, 0)
    bsnf = smith_normal_form(B)
    coords = []
    for s in S:
        if not any(s):
            continue
        c = solve_integer(B, s, bsnf)
        if c is None:
            raise ValueError("sublattice generator not contained in lattice")
        coords.append(c)
    Sc = IntMatrix.from_columns(coords, k) if coords else IntMatrix.zeros(k, 0)
    snf = smith_normal_form(Sc)
    Uinv = snf.U_inverse
    diag = list(snf.diagonal) + [0] * (k - snf.rank)
    keep = [i for i, d in enumerate(diag) if d != 1]
    gens, orders = [], []
    for i in keep:
        col = Uinv.column(i)
        gens.append(B.apply(col))
        orders.append(diag[i])
    inv = AbelianInvariants(sum(1 for o in orders if o == 0), tuple(o for o in orders if o))
    return Subquotient(n, inv, gens, orders, B, bsnf, snf.U, keep)


# ---------------------------------------------------------------------------
# large sparse matrices: invariants and ranks without transforms


def _sparse_rows(M: IntMatrix, m: int = 0):
    rows: dict[int, dict[int, int]] = {}
    for (r, c), v in M.items():
        if m:
            v %= m
            if not v:
                continue
        rows.setdefault(r, {})[c] = v
    return rows


def _eliminate(rows: dict, m: int, unit_only: bool):
    """Sparse pivoting on unit entries.  Returns (pivot_count, remaining rows).

    Over Z (m = 0) only entries +-1 are used as pivots; mod a prime every
    nonzero entry is a unit.  Pivot choice is Markowitz-like: shortest
    column first, then shortest row, ties broken by index for determinism.
    """
    cols: dict[int, set] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    heap = [(len(s), c) for c, s in cols.items()]
    heapq.heapify(heap)
    stuck: set[int] = set()
    count = 0
    while heap:
        size, pc = heapq.heappop(heap)
        s = cols.get(pc)
        if s is None or len(s) != size or pc in stuck:
            continue
        best = None
        for r in s:
            v = rows[r][pc]
            if unit_only and v not in (1, -1):
                continue
            key = (len(rows[r]), r)
            if best is None or key < best[0]:
                best = (key, r)
        if best is None:
            stuck.add(pc)
            continue
        pr = best[1]
        prow = rows.pop(pr)
        pv = prow[pc]
        inv = pow(pv, -1, m) if m else pv  # pv = +-1 over Z, so 1/pv = pv
        for c in prow:
            cols[c].discard(pr)
        touched = set(prow)
        for r in list(cols[pc]):
            row = rows[r]
            f = (row[pc] * inv) % m if m else row[pc] * inv
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if m:
                    nv %= m
                if nv:
                    if c not in row:
                        cols[c].add(r)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            if not row:
                del rows[r]
        del cols[pc]
        touched.discard(pc)
        for c in touched:
            sc = cols[c]
            if not sc:
                del cols[c]
                stuck.discard(c)
                continue
            stuck.discard(c)
            heapq.heappush(heap, (len(sc), c))
        count += 1
    return count, rows


def elementary_divisors(M: IntMatrix) -> tuple[list[int], int]:
    """Nonzero Smith invariant factors of M (with multiplicity) and its rank.

    Unit pivots are eliminated sparsely first; the remaining block is
    small and goes through the dense Smith form.
    """
    if M.rows * M.cols <= 4096:
        diag = _snf_dense(M.to_rows(), track=False)[2] if M.rows and M.cols else []
        return list(diag), len(diag)
    return elementary_divisors_rows(_sparse_rows(M))


def elementary_divisors_rows(rows: dict) -> tuple[list[int], int]:
    """As :func:`elementary_divisors`, for a matrix given as ``{row: {col: value}}``.

    The row dicts are consumed.  This entry point lets callers stream very
    large sparse matrices without building an IntMatrix.
    """
    units, rest = _eliminate(rows, 0, unit_only=True)
    if not rest:
        return [1] * units, units
    rlist = sorted(rest)
    clist = sorted({c for row in rest.values() for c in row})
    cpos = {c: i for i, c in enumerate(clist)}
    dense = [[0] * len(clist) for _ in rlist]
    for i, r in enumerate(rlist):
        for c, v in rest[r].items():
            dense[i][cpos[c]] = v
    diag = _snf_dense(dense, track=False)[2]
    return [1] * units + list(diag), units + len(diag)


def rank_mod_p(M: IntMatrix, p: int) -> int:
    if not _is_prime(p):
        raise ValueError("rank_mod_p needs a prime modulus")
    count, _ = _eliminate(_sparse_rows(M, p), p, unit_only=False)
    return count


def rank_mod_p_rows(rows: dict, p: int) -> int:
    """Rank mod p of a matrix given as ``{row: {col: value}}`` (consumed)."""
    if not _is_prime(p):
        raise ValueError("rank_mod_p_rows needs a prime modulus")
    red = {}
    for i, row in rows.items():
        r = {c: v % p for c, v in row.items() if v % p}
        if r:
            red[i] = r
    count, _ = _eliminate(red, p, unit_only=False)
    return count


_CERT_PRIME = 2147483647


def rank_over_q(M: IntMatrix, upper_bound: int | None = None) -> int:
    """Exact rank over Q.

    A rank mod a prime is a lower bound; when it meets ``upper_bound`` the
    answer is certified without integer elimination.
    """
    if upper_bound is not None:
        r = rank_mod_p(M, _CERT_PRIME)
        if r == upper_bound:
            return r
        if r > upper_bound:
            raise ArithmeticError("rank exceeds the supplied upper bound")
    _, rank = elementary_divisors(M)
    return rank


def gcd_list(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
