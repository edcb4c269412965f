"""Finite-poset domain theory.

Directed subsets, suprema, the way-below relation, compactness, continuity,
algebraicity and meet-continuity, all computed definitionally on explicit
boolean order matrices.  On a finite poset every directed subset contains its
maximum, so way-below collapses to the order itself; ``way_below_def``
computes the definitional quantification anyway (for small posets) and
``way_below_fast`` is the collapse.  Their agreement is asserted by the test
corpus, never assumed here.

Subsets of a poset are passed around as iterables of element ids and held
internally as Python-int bitmasks.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional, Sequence

from .core import bits

__all__ = [
    "NotAPartialOrder",
    "TooLargeForDefinitionalCheck",
    "NotAMeetSemilattice",
    "FinitePoset",
    "is_directed",
    "sup",
    "directed_subsets",
    "way_below_def",
    "way_below_fast",
    "way_below_matrix",
    "compacts",
    "is_continuous",
    "is_algebraic",
    "meet_table",
    "is_meet_continuous",
    "way_below_multiplicative",
    "covers",
    "hasse_dot",
    "order_poset",
    "sigma_poset",
]

# Definitional checks enumerate all subsets; 2^12 is the audit-friendly cap.
DEFINITIONAL_LIMIT = 12


class NotAPartialOrder(Exception):
    pass


class TooLargeForDefinitionalCheck(Exception):
    pass


class NotAMeetSemilattice(Exception):
    def __init__(self, x: int, y: int):
        self.pair = (x, y)
        super().__init__(f"elements {x} and {y} have no meet")


class FinitePoset:
    """An explicit order relation, verified reflexive/antisymmetric/transitive."""

    def __init__(self, le: Sequence[Sequence[bool]]):
        n = len(le)
        rows = tuple(tuple(bool(v) for v in row) for row in le)
        for row in rows:
            if len(row) != n:
                raise NotAPartialOrder("relation matrix must be square")
        up = [0] * n    # up[x] = mask of y with x <= y
        down = [0] * n  # down[y] = mask of x with x <= y
        for x in range(n):
            for y in range(n):
                if rows[x][y]:
                    up[x] |= 1 << y
                    down[y] |= 1 << x
        for x in range(n):
            if not rows[x][x]:
                raise NotAPartialOrder(f"not reflexive at {x}")
        for x in range(n):
            for y in bits(up[x]):
                if x != y and rows[y][x]:
                    raise NotAPartialOrder(f"not antisymmetric at ({x}, {y})")
                if up[y] & ~up[x]:
                    z = next(bits(up[y] & ~up[x]))
                    raise NotAPartialOrder(f"not transitive at ({x}, {y}, {z})")
        self.n = n
        self.le_matrix = rows
        self.up = up
        self.down = down

    @classmethod
    def from_relation(cls, n: int, leq: Callable[[int, int], bool]) -> "FinitePoset":
        return cls([[leq(x, y) for y in range(n)] for x in range(n)])

    def leq(self, x: int, y: int) -> bool:
        return self.le_matrix[x][y]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self):
        return f"FinitePoset(n={self.n})"


def _mask_of(A: Iterable[int]) -> int:
    m = 0
    for a in A:
        m |= 1 << a
    return m


def is_directed(P: FinitePoset, A: Iterable[int]) -> bool:
    """Nonempty, and every pair has an upper bound inside the subset."""
    mask = _mask_of(A)
    if mask == 0:
        return False
    members = list(bits(mask))
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if not P.up[x] & P.up[y] & mask:
                return False
    return True


def sup(P: FinitePoset, A: Iterable[int]) -> Optional[int]:
    """Least upper bound of a nonempty subset, or None."""
    mask = _mask_of(A)
    if mask == 0:
        raise ValueError("sup of the empty set is not defined here")
    ub = P.full_mask()
    for a in bits(mask):
        ub &= P.up[a]
    for u in bits(ub):
        if ub & ~P.up[u] == 0:
            return u
    return None


def _subset_count(P: FinitePoset) -> int:
    return sum(1 << (bin(P.down[m]).count("1") - 1) for m in range(P.n))


def directed_subsets(P: FinitePoset, cost_limit: int = 1 << 16):
    """Yield every directed subset as a bitmask, each exactly once.

    A directed subset of a finite poset contains its maximum, so the subsets
    are exactly ``{m} | B`` with ``B`` ranging over subsets of the strict
    down-set of ``m``; enumeration is grouped by that maximum.
    """
    if _subset_count(P) > cost_limit:
        raise TooLargeForDefinitionalCheck(
            f"directed-subset enumeration would exceed {cost_limit} subsets")
    for m in range(P.n):
        below = P.down[m] & ~(1 << m)
        rest = list(bits(below))
        k = len(rest)
        for pick in range(1 << k):
            mask = 1 << m
            for i in bits(pick):
                mask |= 1 << rest[i]
            yield mask, m


def way_below_def(P: FinitePoset, x: int, y: int) -> bool:
    """Definitional way-below: enumerate all subsets, no cleverness.

    For every directed subset D with a supremum, ``y <= sup D`` must force
    some member of D above ``x``.
    """
    if P.n > DEFINITIONAL_LIMIT:
        raise TooLargeForDefinitionalCheck(
            f"|P| = {P.n} > {DEFINITIONAL_LIMIT}")
    for mask in range(1, 1 << P.n):
        members = list(bits(mask))
        if not is_directed(P, members):
            continue
        v = sup(P, members)
        if v is None or not P.leq(y, v):
            continue
        if not any(P.leq(x, d) for d in members):
            return False
    return True


def way_below_fast(P: FinitePoset, x: int, y: int) -> bool:
    """The finite collapse of way-below to the order itself."""
    return P.leq(x, y)


def way_below_matrix(P: FinitePoset, exact: Optional[bool] = None) -> list[int]:
    """Row masks of the way-below relation: row[x] has bit y iff x << y.

    ``exact=True`` forces the definitional computation (shared across pairs,
    same quantification as ``way_below_def``); ``exact=False`` uses the
    collapse; ``None`` picks definitional exactly when the poset is within
    the definitional limit.
    """
    if exact is None:
        exact = P.n <= DEFINITIONAL_LIMIT
    if not exact:
        return list(P.up)
    if P.n > DEFINITIONAL_LIMIT:
        raise TooLargeForDefinitionalCheck(f"|P| = {P.n} > {DEFINITIONAL_LIMIT}")
    wb = list(P.up)  # way-below implies <=; start there and erase failures
    for mask in range(1, 1 << P.n):
        members = list(bits(mask))
        if not is_directed(P, members):
            continue
        v = sup(P, members)
        if v is None:
            continue
        reachable = 0
        for d in members:
            reachable |= P.down[d]
        dead = P.full_mask() & ~reachable  # x with no member above x
        # y <= v refutes x << y for every dead x; down[v] is exactly those y
        for x in bits(dead):
            wb[x] &= ~P.down[v]
    return wb


def compacts(P: FinitePoset, exact: Optional[bool] = None) -> tuple[int, ...]:
    wb = way_below_matrix(P, exact)
    return tuple(x for x in range(P.n) if (wb[x] >> x) & 1)


def is_continuous(P: FinitePoset, exact: Optional[bool] = None) -> bool:
    """Every element is the directed sup of the elements way-below it."""
    wb = way_below_matrix(P, exact)
    for s in range(P.n):
        approx = [x for x in range(P.n) if (wb[x] >> s) & 1]
        if not is_directed(P, approx):
            return False
        if sup(P, approx) != s:
            return False
    return True


def is_algebraic(P: FinitePoset, exact: Optional[bool] = None) -> bool:
    """Every element is the directed sup of the compact elements below it."""
    wb = way_below_matrix(P, exact)
    kmask = 0
    for x in range(P.n):
        if (wb[x] >> x) & 1:
            kmask |= 1 << x
    for s in range(P.n):
        below = [x for x in bits(P.down[s] & kmask)]
        if not is_directed(P, below):
            return False
        if sup(P, below) != s:
            return False
    return True


def meet_table(P: FinitePoset) -> list[list[int]]:
    """Binary meets; raises NotAMeetSemilattice at the first missing meet."""
    n = P.n
    tbl = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            lb = P.down[x] & P.down[y]
            best = -1
            for c in bits(lb):
                if lb & ~P.up[c] == 0:
                    best = c
                    break
            if best < 0:
                raise NotAMeetSemilattice(x, y)
            tbl[x][y] = best
    return tbl


def is_meet_continuous(P: FinitePoset) -> bool:
    """eps meet (sup D) = sup (eps meet D) for every directed D with a sup."""
    meets = meet_table(P)
    if P.n > DEFINITIONAL_LIMIT:
        raise TooLargeForDefinitionalCheck(f"|P| = {P.n} > {DEFINITIONAL_LIMIT}")
    for mask, _m in directed_subsets(P):
        members = list(bits(mask))
        v = sup(P, members)
        if v is None:
            continue
        for eps in range(P.n):
            translated = [meets[eps][d] for d in members]
            rhs = sup(P, translated)
            if rhs is None or rhs != meets[eps][v]:
                return False
    return True


def way_below_multiplicative(P: FinitePoset, mul: Callable[[int, int], int],
                             exact: Optional[bool] = None) -> bool:
    """x << y and x' << y' imply xx' << yy' (quantified over all 4-tuples)."""
    wb = way_below_matrix(P, exact)
    pairs = [(x, y) for x in range(P.n) for y in bits(wb[x])]
    for x, y in pairs:
        for x2, y2 in pairs:
            if not (wb[mul(x, x2)] >> mul(y, y2)) & 1:
                return False
    return True


# -- Hasse diagrams ----------------------------------------------------------


def covers(P: FinitePoset) -> list[tuple[int, int]]:
    """The transitive reduction: (x, y) with y covering x."""
    out = []
    for x in range(P.n):
        strict_up = P.up[x] & ~(1 << x)
        for y in bits(strict_up):
            between = strict_up & P.down[y] & ~(1 << y)
            if between == 0:
                out.append((x, y))
    return out


def hasse_dot(P: FinitePoset, labels: Optional[Sequence[str]] = None) -> str:
    """DOT digraph of the transitive reduction, edges pointing upward."""
    def q(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lab = [labels[i] if labels is not None else str(i) for i in range(P.n)]
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i in range(P.n):
        lines.append(f"  n{i} [label={q(lab[i])}];")
    for x, y in covers(P):
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- adapters from carriers ---------------------------------------------------


def order_poset(S) -> FinitePoset:
    """The intrinsic order of a finite inverse semigroup as a poset."""
    return FinitePoset.from_relation(S.n, S.le)


def sigma_poset(S) -> tuple[FinitePoset, tuple[int, ...]]:
    """The idempotent subposet and the id map back into the carrier."""
    idem = tuple(e for e in range(S.n) if S.is_idempotent(e))
    P = FinitePoset.from_relation(len(idem), lambda i, j: S.le(idem[i], idem[j]))
    return P, idem
