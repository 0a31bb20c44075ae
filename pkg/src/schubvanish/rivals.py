"""Three comparison vanishing tests: Bruhat order, descent cycling, root games.

Each is a classical sufficient criterion for a Schubert intersection number
to vanish, implemented here so the polytope test can be benchmarked against
them on concrete problems.  All of them return the same three-valued
verdicts as the main tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import permcore
from .permcore import Perm
from .vanishing import Outcome, VanishingVerdict


class ClassSizeExceeded(RuntimeError):
    """Descent-cycling closure grew past the configured cap."""


@dataclass(frozen=True)
class Triple:
    """An ordered triple (u, v, w) with lengths summing to n(n-1)/2."""

    u: Perm
    v: Perm
    w: Perm

    def __post_init__(self) -> None:
        u, v, w = permcore.common_embed([self.u, self.v, self.w])
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)
        n = len(u)
        total = sum(map(permcore.length, (u, v, w)))
        if total != n * (n - 1) // 2:
            raise ValueError(
                f"triple lengths sum to {total}, expected {n * (n - 1) // 2}"
            )

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def factors(self) -> tuple[Perm, Perm, Perm]:
        return (self.u, self.v, self.w)


def _well_posed(ws: Sequence[Perm]) -> Optional[list[Perm]]:
    ws = permcore.common_embed(ws)
    n = len(ws[0]) if ws else 0
    if sum(permcore.length(w) for w in ws) != n * (n - 1) // 2:
        return None
    return ws


def bruhat_vanishing_test(ws: Sequence[Perm]) -> VanishingVerdict:
    """Vanishes when some factor is not below the complement of another.

    Scans ordered pairs (i, j) lexicographically and reports the first pair
    with w_i not <= w0 * w_j.
    """
    method = "bruhat"
    embedded = _well_posed(ws)
    if embedded is None:
        return VanishingVerdict(Outcome.DEGREE_MISMATCH, method)
    n = len(embedded[0])
    longest = permcore.w0(n)
    complements = [permcore.multiply(longest, w) for w in embedded]
    for i in range(len(embedded)):
        for j in range(len(embedded)):
            if i == j:
                continue
            if not permcore.bruhat_leq(embedded[i], complements[j]):
                return VanishingVerdict(
                    Outcome.VANISHES,
                    method,
                    detail=(
                        f"factor {i + 1} = {permcore.format_permutation(embedded[i])} "
                        f"is not below w0 * factor {j + 1} = "
                        f"{permcore.format_permutation(complements[j])}"
                    ),
                )
    return VanishingVerdict(Outcome.INCONCLUSIVE, method)


def dc_trivial(t: Triple) -> bool:
    """True when some position is an ascent of u, v and w simultaneously."""
    asc_u = set(permcore.ascents(t.u))
    asc_v = set(permcore.ascents(t.v))
    asc_w = set(permcore.ascents(t.w))
    return bool(asc_u & asc_v & asc_w)


def _dc_neighbors(t: Triple) -> Iterator[Triple]:
    """All descent-cycling moves from t.

    For each position i, whenever exactly one of the three words has a
    descent at i, the reflection s_i may be shuffled between that word and
    either of the other two; the intersection number is preserved.
    """
    u, v, w = t.u, t.v, t.w
    for i in range(1, t.n):
        du = u[i - 1] > u[i]
        dv = v[i - 1] > v[i]
        dw = w[i - 1] > w[i]
        us = permcore.right_mult_s(u, i)
        vs = permcore.right_mult_s(v, i)
        ws = permcore.right_mult_s(w, i)
        if not du and not dv and dw:
            yield Triple(us, v, ws)
            yield Triple(u, vs, ws)
        elif du and not dv and not dw:
            yield Triple(us, v, ws)
            yield Triple(us, vs, w)
        elif dv and not du and not dw:
            yield Triple(u, vs, ws)
            yield Triple(us, vs, w)


def dc_class(t: Triple, cap: int = 10**6) -> frozenset[Triple]:
    """Closure of t under descent-cycling moves (breadth first).

    Every member has the same intersection number.  Raises
    ClassSizeExceeded beyond the cap.
    """
    seen = {t}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for nxt in _dc_neighbors(cur):
            if nxt not in seen:
                if len(seen) >= cap:
                    raise ClassSizeExceeded(f"descent-cycling class exceeds {cap}")
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def dc_test(t: Triple, cap: int = 10**6) -> VanishingVerdict:
    """Vanishes when some member of the closure has a common ascent."""
    method = "descent_cycling"
    cls = dc_class(t, cap=cap)
    for member in sorted(cls, key=lambda m: m.factors):
        if dc_trivial(member):
            detail = (
                "dc-trivial member "
                + ",".join(permcore.format_permutation(x) for x in member.factors)
                + f" in a class of {len(cls)}"
            )
            return VanishingVerdict(Outcome.VANISHES, method, detail=detail)
    return VanishingVerdict(
        Outcome.INCONCLUSIVE, method, detail=f"class of {len(cls)}, none dc-trivial"
    )


@dataclass(frozen=True)
class RootGamePosition:
    """Token counts on the positive roots alpha_{a,b}, 1 <= a < b <= n."""

    n: int
    tokens: tuple[tuple[tuple[int, int], int], ...]

    def token_map(self) -> dict[tuple[int, int], int]:
        return dict(self.tokens)

    @property
    def total_tokens(self) -> int:
        return sum(c for _, c in self.tokens)


def root_game_initial(ws: Sequence[Perm]) -> RootGamePosition:
    """One token at alpha_{a,b} per factor with an inversion at (a, b)."""
    embedded = permcore.common_embed(ws)
    n = len(embedded[0]) if embedded else 0
    counts: dict[tuple[int, int], int] = {}
    for w in embedded:
        for a in range(1, n):
            for b in range(a + 1, n + 1):
                if w[a - 1] > w[b - 1]:
                    counts[(a, b)] = counts.get((a, b), 0) + 1
    return RootGamePosition(n, tuple(sorted(counts.items())))


def upper_order_filters(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    """All up-closed subsets of the positive-root poset of rank n - 1.

    The order is containment of intervals: alpha_{a,b} <= alpha_{a',b'} iff
    a' <= a and b <= b', with top element alpha_{1,n}.  A filter meets row a
    in a suffix {b : b >= cut_a}, and up-closure forces the cuts to be
    nondecreasing, so filters match lattice paths and are counted by the
    Catalan numbers.  Emitted in lexicographic cut order.
    """
    if n < 2:
        yield frozenset()
        return

    cuts = [0] * (n - 1)

    def rec(a: int, lo: int) -> Iterator[frozenset[tuple[int, int]]]:
        if a == n:
            yield frozenset(
                (row, b)
                for row in range(1, n)
                for b in range(cuts[row - 1], n + 1)
            )
            return
        for cut in range(max(lo, a + 1), n + 2):
            cuts[a - 1] = cut
            yield from rec(a + 1, cut)

    yield from rec(1, 2)


def is_doomed(
    pos: RootGamePosition,
) -> tuple[bool, Optional[frozenset[tuple[int, int]]]]:
    """Whether some upper order filter holds more tokens than its size.

    Returns the first witness filter in enumeration order.  The filter
    count is Catalan in n, so this refuses n > 12.
    """
    if pos.n > 12:
        raise ValueError("filter enumeration capped at n = 12")
    tokens = pos.token_map()
    for filt in upper_order_filters(pos.n):
        inside = sum(tokens.get(root, 0) for root in filt)
        if inside > len(filt):
            return True, filt
    return False, None


def root_game_test(ws: Sequence[Perm]) -> VanishingVerdict:
    """Vanishes when the initial token position is doomed."""
    method = "root_game"
    embedded = _well_posed(ws)
    if embedded is None:
        return VanishingVerdict(Outcome.DEGREE_MISMATCH, method)
    doomed, witness = is_doomed(root_game_initial(embedded))
    if doomed:
        assert witness is not None
        roots = ",".join(f"a[{a},{b}]" for a, b in sorted(witness))
        return VanishingVerdict(
            Outcome.VANISHES, method, detail=f"overloaded filter {{{roots}}}"
        )
    return VanishingVerdict(Outcome.INCONCLUSIVE, method)
