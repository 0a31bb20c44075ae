"""The Schubitope of a diagram: subset inequalities, fillings, and exact LP.

For a diagram D inside [n] x [m] and a row subset S, each column is read
top to bottom into a word over { ( , ) , * }:

    (   cell absent, row in S
    )   cell present, row not in S
    *   cell present, row in S

theta_D(S) adds, over all columns, the number of matched "()" pairs plus
the number of stars.  The Schubitope S_D consists of the nonnegative alpha
with sum(alpha) = #D and sum_{i in S} alpha_i <= theta_D(S) for all proper
subsets S.  Its lattice points are exactly the contents of the column-strict
flag-bounded fillings of D, and emptiness of that filling set is decided by
an exact rational LP over a 0/1-bounded matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import exactlp
from .gpermutahedron import GPermutahedron, SubmodularFn
from .permcore import Cell, Diagram

Rational = Union[int, Fraction]

LPAREN = "("
RPAREN = ")"
STAR = "*"

SUBSET_SCAN_MAX_ROWS = 22


class DegreeMismatchError(ValueError):
    """Content vector total does not match the diagram's cell count."""


def column_word(d: Diagram, c: int, rows_in_s: Iterable[int]) -> tuple[str, ...]:
    """The bracket word of column c for row subset S, read top to bottom."""
    if not (1 <= c <= d.n_cols):
        raise IndexError(f"column {c} out of range 1..{d.n_cols}")
    s = set(rows_in_s)
    word = []
    for r in range(1, d.n_rows + 1):
        in_d = (r, c) in d
        in_s = r in s
        if not in_d and in_s:
            word.append(LPAREN)
        elif in_d and not in_s:
            word.append(RPAREN)
        elif in_d and in_s:
            word.append(STAR)
    return tuple(word)


def matched_pairs_and_stars(word: Sequence[str]) -> int:
    """Stack scan: each ) consumes one pending ( as a pair; stars count as is."""
    pending = 0
    pairs = 0
    stars = 0
    for sym in word:
        if sym == LPAREN:
            pending += 1
        elif sym == RPAREN:
            if pending:
                pending -= 1
                pairs += 1
        else:
            stars += 1
    return pairs + stars


def theta_column(d: Diagram, c: int, rows_in_s: Iterable[int]) -> int:
    return matched_pairs_and_stars(column_word(d, c, rows_in_s))


def theta(d: Diagram, rows_in_s: Iterable[int]) -> int:
    """Sum of the column counts; theta over the full row set equals #D."""
    s = set(rows_in_s)
    total = 0
    for c in d.nonempty_columns():
        cells = d.column_cells(c)
        pending = 0
        pairs = 0
        stars = 0
        prev = 0
        for r in cells:
            pending += sum(1 for x in range(prev + 1, r) if x in s)
            if r in s:
                stars += 1
            elif pending:
                pending -= 1
                pairs += 1
            prev = r
        total += pairs + stars
    return total


@dataclass(frozen=True)
class InfeasibleSubset:
    """A violated Schubitope inequality: sum over rows exceeds theta."""

    rows: tuple[int, ...]
    lhs: int
    rhs: int

    def validate(self, d: Diagram, alpha: Sequence[int]) -> bool:
        """Recompute both sides from scratch."""
        rows = self.rows
        if len(set(rows)) != len(rows):
            return False
        if not all(1 <= i <= min(d.n_rows, len(alpha)) for i in rows):
            return False
        lhs = sum(alpha[i - 1] for i in rows)
        rhs = theta(d, rows)
        return lhs == self.lhs and rhs == self.rhs and lhs > rhs


class SchubitopeInequalities:
    """Precomputed theta values of one diagram over all row subsets."""

    def __init__(self, d: Diagram):
        n = d.n_rows
        if n > SUBSET_SCAN_MAX_ROWS:
            raise ValueError(
                f"subset scan needs n_rows <= {SUBSET_SCAN_MAX_ROWS}; use the LP path"
            )
        self.diagram = d
        self.n = n
        table = [0] * (1 << n)
        for mask in range(1 << n):
            table[mask] = theta(d, _mask_rows(mask))
        self.table = table

    def contains(self, alpha: Sequence[int]) -> bool:
        """alpha in S_D: degree equality plus every proper subset inequality."""
        n = self.n
        if len(alpha) != n:
            raise ValueError("content vector length must equal n_rows")
        if any(a < 0 for a in alpha):
            return False
        if sum(alpha) != self.diagram.cell_count:
            return False
        full = (1 << n) - 1
        table = self.table
        for mask in range(1, full):
            s = 0
            m = mask
            while m:
                low = m & -m
                s += alpha[low.bit_length() - 1]
                m ^= low
            if s > table[mask]:
                return False
        return True

    def first_violation(self, alpha: Sequence[int]) -> Optional[InfeasibleSubset]:
        """First violated proper subset, by cardinality then lexicographic order."""
        n = self.n
        for k in range(1, n):
            for combo in itertools.combinations(range(1, n + 1), k):
                lhs = sum(alpha[i - 1] for i in combo)
                mask = 0
                for i in combo:
                    mask |= 1 << (i - 1)
                rhs = self.table[mask]
                if lhs > rhs:
                    return InfeasibleSubset(combo, lhs, rhs)
        return None


def _mask_rows(mask: int) -> tuple[int, ...]:
    rows = []
    while mask:
        low = mask & -mask
        rows.append(low.bit_length())
        mask ^= low
    return tuple(rows)


def schubitope_membership(
    d: Diagram, alpha: Sequence[int]
) -> tuple[bool, Optional[InfeasibleSubset]]:
    """Decide alpha in S_D by the direct subset-inequality scan.

    Returns (True, None) for members.  Otherwise returns (False, cert) where
    cert is the first violated subset inequality, or (False, None) when only
    the degree equality sum(alpha) = #D fails (no single subset witnesses
    that).  Refuses diagrams with more than 22 rows; the LP path scales.
    """
    ineqs = SchubitopeInequalities(d)
    if len(alpha) != d.n_rows:
        raise ValueError("content vector length must equal n_rows")
    if any(a < 0 for a in alpha):
        raise ValueError("content entries must be nonnegative")
    violation = ineqs.first_violation(alpha)
    if violation is not None:
        return False, violation
    if sum(alpha) != d.cell_count:
        return False, None
    return True, None


def schubitope_gpermutahedron(d: Diagram) -> GPermutahedron:
    """S_D as P(z) with z(S) = theta_D(S)."""
    n = d.n_rows
    values = tuple(theta(d, _mask_rows(mask)) for mask in range(1 << n))
    return GPermutahedron(SubmodularFn(n, values))


@dataclass(frozen=True)
class Filling:
    """Labels on the cells of a diagram, stored as sorted (cell, label) pairs."""

    diagram: Diagram
    labels: tuple[tuple[Cell, int], ...]

    @classmethod
    def from_dict(cls, d: Diagram, labels: dict[Cell, int]) -> "Filling":
        return cls(d, tuple(sorted(labels.items())))

    def label_of(self, cell: Cell) -> int:
        for c, l in self.labels:
            if c == cell:
                return l
        raise KeyError(cell)

    def content(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for _, l in self.labels:
            counts[l - 1] += 1
        return tuple(counts)

    def is_valid(self, alpha: Sequence[int]) -> bool:
        """Check column strictness, the flag bound label <= row, and content."""
        d = self.diagram
        lab = dict(self.labels)
        if set(lab) != set(d.cells):
            return False
        for c in d.nonempty_columns():
            prev = 0
            for r in d.column_cells(c):
                l = lab[(r, c)]
                if l <= prev or l > r:
                    return False
                prev = l
        return self.content(len(alpha)) == tuple(alpha)


def _column_label_options(
    rows: tuple[int, ...], max_label: int
) -> list[tuple[int, ...]]:
    """Strictly increasing label tuples x with x_t <= min(rows_t, max_label)."""
    z = len(rows)
    options = []
    for combo in itertools.combinations(range(1, max_label + 1), z):
        if all(x <= r for x, r in zip(combo, rows)):
            options.append(combo)
    return options


def enumerate_tab(d: Diagram, alpha: Sequence[int]) -> list[Filling]:
    """All fillings of D with column-strict labels, label <= row, content alpha.

    Backtracking over columns, most constrained first; brute-force ground
    truth for small instances.
    """
    if len(alpha) != d.n_rows:
        raise ValueError("content vector length must equal n_rows")
    if any(a < 0 for a in alpha):
        raise ValueError("content entries must be nonnegative")
    if sum(alpha) != d.cell_count:
        return []
    n = d.n_rows
    cols = [(c, d.column_cells(c)) for c in d.nonempty_columns()]
    per_col = [(c, rows, _column_label_options(rows, n)) for c, rows in cols]
    if any(not options for _, _, options in per_col):
        return []
    per_col.sort(key=lambda item: (len(item[2]), item[0]))

    remaining = list(alpha)
    labels: dict[Cell, int] = {}
    found: list[Filling] = []

    def backtrack(k: int) -> None:
        if k == len(per_col):
            if all(x == 0 for x in remaining):
                found.append(Filling.from_dict(d, dict(labels)))
            return
        c, rows, options = per_col[k]
        for combo in options:
            taken = []
            ok = True
            for x in combo:
                if remaining[x - 1] == 0:
                    ok = False
                    break
                remaining[x - 1] -= 1
                taken.append(x)
            if ok:
                for r, x in zip(rows, combo):
                    labels[(r, c)] = x
                backtrack(k + 1)
                for r in rows:
                    del labels[(r, c)]
            for x in taken:
                remaining[x - 1] += 1

    backtrack(0)
    return found


def filling_to_relaxation_point(f: Filling) -> tuple[tuple[int, ...], ...]:
    """The 0/1 matrix with entry (i, j) = 1 iff label i sits in column j."""
    d = f.diagram
    matrix = [[0] * d.n_cols for _ in range(d.n_rows)]
    for (r, c), l in f.labels:
        matrix[l - 1][c - 1] = 1
    return tuple(tuple(row) for row in matrix)


def relaxation_point_valid(
    matrix: Sequence[Sequence[Rational]], d: Diagram, alpha: Sequence[int]
) -> bool:
    """Check constraints (I) box, (II) row sums, (III) column prefix bounds."""
    n, m = d.n_rows, d.n_cols
    if len(matrix) != n or any(len(row) != m for row in matrix):
        return False
    for row in matrix:
        for v in row:
            if v < 0 or v > 1:
                return False
    for i in range(n):
        if sum(matrix[i]) != alpha[i]:
            return False
    for j in range(1, m + 1):
        cells = d.column_cells(j)
        seen = 0
        prefix: Rational = 0
        r_prev = 0
        for r in cells:
            for i in range(r_prev, r):
                prefix += matrix[i][j - 1]
            r_prev = r
            seen += 1
            if prefix < seen:
                return False
    return True


@dataclass(frozen=True)
class FeasiblePoint:
    """A rational point of the relaxation polytope, as an n x m matrix."""

    matrix: tuple[tuple[Rational, ...], ...]

    def validate(self, d: Diagram, alpha: Sequence[int]) -> bool:
        return relaxation_point_valid(self.matrix, d, alpha)


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving the relaxation polytope empty.

    content[i-1] multiplies the row-sum equality of label i; each entry of
    prefix multiplies the column prefix inequality at (row s, column j).
    columns records which diagram columns carried variables (all of them
    unless the LP was built with empty columns compressed away).
    """

    content: tuple[Rational, ...]
    prefix: tuple[tuple[tuple[int, int], Rational], ...]
    columns: tuple[int, ...]

    def validate(self, d: Diagram, alpha: Sequence[int]) -> bool:
        """Replay the multipliers against the constraint system."""
        nvars, upper, rows, _ = _relaxation_lp(d, alpha, self.columns)
        y = list(self.content) + [mult for _, mult in self.prefix]
        if len(y) != len(rows):
            return False
        return exactlp.verify_infeasibility_certificate(nvars, upper, rows, y)


FeasibilityCertificate = Union[FeasiblePoint, FarkasCertificate, InfeasibleSubset]


def _relaxation_lp(
    d: Diagram, alpha: Sequence[int], columns: Sequence[int]
) -> tuple[int, list, list[exactlp.LinearRow], dict[tuple[int, int], int]]:
    """Build the relaxation LP over the given diagram columns.

    Variables are the matrix entries, boxed in [0, 1].  Rows come in the
    fixed order: content equalities for rows 1..n, then the column prefix
    inequalities.  Only the binding prefix rows are generated (one per cell,
    at s = that cell's row); the remaining prefix inequalities are implied,
    so the polytope is unchanged and omitted rows carry multiplier zero.
    """
    n = d.n_rows
    var_of: dict[tuple[int, int], int] = {}
    for j in columns:
        for i in range(1, n + 1):
            var_of[(i, j)] = len(var_of)
    nvars = len(var_of)
    rows: list[exactlp.LinearRow] = []
    for i in range(1, n + 1):
        coeffs = tuple((var_of[(i, j)], 1) for j in columns)
        rows.append(exactlp.LinearRow(coeffs, exactlp.EQ, alpha[i - 1]))
    for j in columns:
        cells = d.column_cells(j)
        for t, s in enumerate(cells, start=1):
            coeffs = tuple((var_of[(i, j)], 1) for i in range(1, s + 1))
            rows.append(exactlp.LinearRow(coeffs, exactlp.GE, t))
    upper = [1] * nvars
    return nvars, upper, rows, var_of


def lp_feasible(
    d: Diagram, alpha: Sequence[int], compress: bool = False
) -> Union[FeasiblePoint, FarkasCertificate]:
    """Decide whether the relaxation polytope of (D, alpha) is nonempty.

    Runs the exact phase-1 simplex.  Requires sum(alpha) = #D; anything else
    is a caller error, reported loudly rather than as a verdict.  With
    compress=True the all-empty columns are dropped first; under the degree
    precondition their entries are forced to zero, so the decision is the
    same either way.
    """
    n = d.n_rows
    if len(alpha) != n:
        raise ValueError("content vector length must equal n_rows")
    if any(a < 0 for a in alpha):
        raise ValueError("content entries must be nonnegative")
    if sum(alpha) != d.cell_count:
        raise DegreeMismatchError(
            f"sum(alpha) = {sum(alpha)} but the diagram has {d.cell_count} cells"
        )
    if compress:
        columns = d.nonempty_columns()
    else:
        columns = tuple(range(1, d.n_cols + 1))
    nvars, upper, rows, var_of = _relaxation_lp(d, alpha, columns)
    result = exactlp.solve_feasibility(nvars, upper, rows)
    if isinstance(result, exactlp.FeasibleResult):
        matrix = [[0] * d.n_cols for _ in range(n)]
        for (i, j), k in var_of.items():
            matrix[i - 1][j - 1] = result.x[k]
        return FeasiblePoint(tuple(tuple(row) for row in matrix))
    y = result.row_multipliers
    content = tuple(y[:n])
    prefix = []
    pos = n
    for j in columns:
        for s in d.column_cells(j):
            prefix.append(((s, j), y[pos]))
            pos += 1
    return FarkasCertificate(content, tuple(prefix), tuple(columns))
