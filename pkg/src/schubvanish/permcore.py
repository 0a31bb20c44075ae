"""Permutations in one-line notation, their diagrams, codes, and Bruhat order.

A permutation of {1, ..., n} is a plain tuple of ints in one-line notation,
``w = (w(1), ..., w(n))``.  All positions and values are 1-based, matching
the usual combinatorics conventions.  Everything here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Cell = tuple[int, int]


def is_permutation(word: Sequence[int]) -> bool:
    """
    True if word is a bijection on {1, ..., n}.

    >>> is_permutation((2, 1, 3)), is_permutation((1, 1, 2)), is_permutation(())
    (True, False, True)
    """
    n = len(word)
    return sorted(word) == list(range(1, n + 1))


def check_permutation(word: Iterable[int]) -> Perm:
    """Validate and normalize to a tuple, raising ValueError on bad input."""
    w = tuple(word)
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def w0(n: int) -> Perm:
    """The longest element n, n-1, ..., 2, 1.

    >>> w0(4)
    (4, 3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def length(w: Perm) -> int:
    """Number of inversions #{i < j : w(i) > w(j)}.

    >>> length((1, 2, 3, 4)), length((4, 3, 2, 1))
    (0, 6)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def code(w: Perm) -> tuple[int, ...]:
    """Entry i counts j > i with w(j) < w(i); the row counts of the diagram.

    >>> code((4, 3, 1, 2))
    (3, 2, 0, 0)
    """
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def multiply(u: Perm, v: Perm) -> Perm:
    """Composition (u*v)(i) = u(v(i)); sizes must match.

    >>> multiply((3, 1, 2), (2, 3, 1))
    (1, 2, 3)
    """
    if len(u) != len(v):
        raise ValueError("size mismatch in product")
    return tuple(u[x - 1] for x in v)


def apply_transposition(w: Perm, i: int, j: int) -> Perm:
    """Right multiplication w * t_{ij}; swaps the entries at positions i, j."""
    n = len(w)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"positions {i}, {j} out of range 1..{n}")
    lst = list(w)
    lst[i - 1], lst[j - 1] = lst[j - 1], lst[i - 1]
    return tuple(lst)


def right_mult_s(w: Perm, i: int) -> Perm:
    """w * s_i for a simple transposition, 1 <= i <= n-1."""
    if not (1 <= i < len(w)):
        raise IndexError(f"simple reflection index {i} out of range 1..{len(w) - 1}")
    return apply_transposition(w, i, i + 1)


def descents(w: Perm) -> tuple[int, ...]:
    """Positions i with w(i) > w(i+1).

    >>> descents((1, 4, 2, 3))
    (2,)
    """
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def ascents(w: Perm) -> tuple[int, ...]:
    """Positions i < n with w(i) < w(i+1)."""
    return tuple(i for i in range(1, len(w)) if w[i - 1] < w[i])


def embed(w: Perm, m: int) -> Perm:
    """Image of w under S_n -> S_m, appending fixed points n+1, ..., m."""
    if m < len(w):
        raise ValueError(f"cannot embed a word of length {len(w)} into S_{m}")
    return w + tuple(range(len(w) + 1, m + 1))


def trim(w: Perm) -> Perm:
    """Drop trailing fixed points; the stable representative of w."""
    n = len(w)
    while n > 0 and w[n - 1] == n:
        n -= 1
    return w[:n]


def common_embed(ws: Iterable[Perm]) -> list[Perm]:
    """Embed all words into S_N for N the maximum word length."""
    ws = [tuple(w) for w in ws]
    n = max((len(w) for w in ws), default=0)
    return [embed(w, n) for w in ws]


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """Bruhat order via the tableau criterion.

    For every k, the sorted set {u(1),...,u(k)} must be entrywise <= the
    sorted {v(1),...,v(k)}.  Words of different lengths are embedded first.

    >>> bruhat_leq((1, 3, 4, 2), (2, 4, 1, 3))
    False
    """
    u, v = common_embed([u, v])
    n = len(u)
    su: list[int] = []
    sv: list[int] = []
    for k in range(n):
        _insort(su, u[k])
        _insort(sv, v[k])
        if any(a > b for a, b in zip(su, sv)):
            return False
    return True


def _insort(lst: list[int], x: int) -> None:
    import bisect

    bisect.insort(lst, x)


def all_perms(n: int) -> list[Perm]:
    """All of S_n in lexicographic order."""
    import itertools

    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


@dataclass(frozen=True)
class Diagram:
    """A finite set of (row, column) cells inside an n_rows x n_cols grid.

    Cells are 1-based pairs.  Per-column sorted row lists are cached at
    construction; instances are immutable and hashable.
    """

    cells: frozenset[Cell]
    n_rows: int
    n_cols: int
    _columns: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for (r, c) in self.cells:
            if not (1 <= r <= self.n_rows and 1 <= c <= self.n_cols):
                raise ValueError(f"cell {(r, c)} outside {self.n_rows}x{self.n_cols} grid")
        cols: dict[int, list[int]] = {}
        for (r, c) in self.cells:
            cols.setdefault(c, []).append(r)
        object.__setattr__(
            self, "_columns", {c: tuple(sorted(rs)) for c, rs in cols.items()}
        )

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def column_cells(self, c: int) -> tuple[int, ...]:
        """Rows of the cells in column c, sorted increasing."""
        return self._columns.get(c, ())

    def nonempty_columns(self) -> tuple[int, ...]:
        return tuple(sorted(self._columns))

    def row_counts(self) -> tuple[int, ...]:
        counts = [0] * self.n_rows
        for (r, _) in self.cells:
            counts[r - 1] += 1
        return tuple(counts)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells


def diagram(cells: Iterable[Cell], n_rows: int, n_cols: int) -> Diagram:
    return Diagram(frozenset(cells), n_rows, n_cols)


def rothe_diagram(w: Perm) -> Diagram:
    """Cells {(i, j) : j < w(i) and i < w^{-1}(j)} in an n x n grid.

    The number of cells equals length(w) and the row counts equal code(w).
    """
    n = len(w)
    winv = inverse(w)
    cells = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, w[i - 1])
        if i < winv[j - 1]
    )
    return Diagram(cells, n, n)


def concat_diagrams(ds: Sequence[Diagram]) -> Diagram:
    """Place the diagrams side by side, left to right; row bounds must agree."""
    if not ds:
        return Diagram(frozenset(), 0, 0)
    n = ds[0].n_rows
    if any(d.n_rows != n for d in ds):
        raise ValueError("diagrams must share the same number of rows")
    cells: set[Cell] = set()
    offset = 0
    for d in ds:
        cells.update((r, c + offset) for (r, c) in d.cells)
        offset += d.n_cols
    return Diagram(frozenset(cells), n, offset)


def parse_permutation(text: str) -> Perm:
    """Parse one-line notation.

    Accepts space- or comma-separated values (``3 2 5 6 1 4 7``) or, for
    n <= 9, a contiguous digit string (``3256147``).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tok = tokens[0]
        if not tok.isdigit():
            raise ValueError(f"cannot parse permutation from {text!r}")
        if "0" in tok:
            raise ValueError(
                f"contiguous digit form only covers values 1..9: {text!r}"
            )
        return check_permutation(int(ch) for ch in tok)
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation from {text!r}") from exc
    return check_permutation(values)


def format_permutation(w: Perm) -> str:
    """Inverse of parse_permutation: digits for n <= 9, else space-separated."""
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return " ".join(str(v) for v in w)
