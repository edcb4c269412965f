"""Finite inverse semigroups as validated multiplication tables.

Elements are dense integer ids ``0..n-1``; ``table[s][t]`` is the product
``s*t`` (with ``t`` applied first when elements act as maps).  A carrier is
immutable after validation and every operation here is a pure function, so
values can be shared freely between threads.

Isomorphism-invariant data (the intrinsic order, the idempotent set) is
always derived from the table, never stored authoritatively.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence

__all__ = [
    "NotInverseSemigroup",
    "NotAssociative",
    "NoInverse",
    "NonUniqueInverse",
    "IdempotentsDontCommute",
    "NotIdempotent",
    "FiniteInvSemigroup",
    "validate",
    "inverse_of",
    "idempotents",
    "natural_le",
    "source",
    "sup_finite",
    "h_class",
    "is_reduced",
    "restrict",
    "to_json",
    "from_json",
    "load_carrier",
    "bits",
]

# Above this size the associativity scan switches to a vectorised (but still
# exhaustive n^3) check; the design envelope is n <= ~200.
_NUMPY_THRESHOLD = 64


class NotInverseSemigroup(Exception):
    """The multiplication table fails an inverse-semigroup axiom."""


class NotAssociative(NotInverseSemigroup):
    def __init__(self, s: int, t: int, u: int):
        self.triple = (s, t, u)
        super().__init__(f"({s}*{t})*{u} != {s}*({t}*{u})")


class NoInverse(NotInverseSemigroup):
    def __init__(self, s: int):
        self.element = s
        super().__init__(f"element {s} has no t with s*t*s = s and t*s*t = t")


class NonUniqueInverse(NotInverseSemigroup):
    def __init__(self, s: int, t1: int, t2: int):
        self.element = s
        self.witnesses = (t1, t2)
        super().__init__(f"element {s} has two inverses: {t1} and {t2}")


class IdempotentsDontCommute(NotInverseSemigroup):
    def __init__(self, e: int, f: int):
        self.pair = (e, f)
        super().__init__(f"idempotents {e} and {f} do not commute")


class NotIdempotent(ValueError):
    def __init__(self, e: int):
        self.element = e
        super().__init__(f"element {e} is not idempotent")


def bits(mask: int):
    """Yield the set bit positions of a Python-int bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_associative(table) -> None:
    n = len(table)
    if n >= _NUMPY_THRESHOLD:
        try:
            import numpy as np
        except ImportError:  # pragma: no cover - numpy is a declared dep
            np = None
        if np is not None:
            a = np.asarray(table, dtype=np.int64)
            for s in range(n):
                lhs = a[a[s]]        # lhs[t, u] = (s*t)*u
                rhs = a[s][a]        # rhs[t, u] = s*(t*u)
                if not np.array_equal(lhs, rhs):
                    t, u = (int(v) for v in np.argwhere(lhs != rhs)[0])
                    raise NotAssociative(s, t, u)
            return
    for s in range(n):
        row = table[s]
        for t in range(n):
            st = row[t]
            trow = table[t]
            for u in range(n):
                if table[st][u] != row[trow[u]]:
                    raise NotAssociative(s, t, u)


def _compute_inverses(table) -> tuple[int, ...]:
    # Exhaustive search, failing fast with the first counterexample element.
    n = len(table)
    inv = []
    for s in range(n):
        found = -1
        for t in range(n):
            if table[table[s][t]][s] == s and table[table[t][s]][t] == t:
                if found >= 0:
                    raise NonUniqueInverse(s, found, t)
                found = t
        if found < 0:
            raise NoInverse(s)
        inv.append(found)
    return tuple(inv)


class FiniteInvSemigroup:
    """A validated multiplication table with cached inverses and order."""

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        tbl = tuple(tuple(int(x) for x in row) for row in table)
        n = len(tbl)
        if n == 0:
            raise ValueError("carrier must be nonempty")
        for row in tbl:
            if len(row) != n:
                raise ValueError("multiplication table must be square")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"table entry {x} out of range [0, {n})")
        self.n = n
        self.table = tbl
        self.names = tuple(str(x) for x in names) if names is not None else None
        if self.names is not None and len(self.names) != n:
            raise ValueError("names must match the element count")

        _check_associative(tbl)
        self.inv = _compute_inverses(tbl)
        for s in range(n):
            if self.inv[self.inv[s]] != s:
                # unreachable once inverses are unique; kept as a hard guard
                raise NotInverseSemigroup(f"inv is not an involution at {s}")

        idem = tuple(s for s in range(n) if tbl[s][s] == s)
        for e in idem:
            for f in idem:
                if tbl[e][f] != tbl[f][e]:
                    raise IdempotentsDontCommute(e, f)
        self._idempotents = idem
        self._idem_mask = sum(1 << e for e in idem)

        # source map sigma(s) = s* s, always idempotent
        self.sigma = tuple(tbl[self.inv[s]][s] for s in range(n))

        self.identity = None
        for e in range(n):
            if all(tbl[e][t] == t == tbl[t][e] for t in range(n)):
                self.identity = e
                break

        self._up: Optional[list[int]] = None

    # -- basic operations -------------------------------------------------

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def star(self, s: int) -> int:
        return self.inv[s]

    def is_idempotent(self, s: int) -> bool:
        return (self._idem_mask >> s) & 1 == 1

    def le(self, s: int, t: int) -> bool:
        """Intrinsic order: s <= t iff s = t * (s* s)."""
        return self.table[t][self.sigma[s]] == s

    def up_masks(self) -> list[int]:
        """up_masks()[s] is the bitmask of all t with s <= t (cached)."""
        if self._up is None:
            up = []
            for s in range(self.n):
                sig = self.sigma[s]
                m = 0
                for t in range(self.n):
                    if self.table[t][sig] == s:
                        m |= 1 << t
                up.append(m)
            self._up = up
        return self._up

    def name_of(self, s: int) -> str:
        return self.names[s] if self.names is not None else str(s)

    def __repr__(self):
        return f"FiniteInvSemigroup(n={self.n})"


# -- spec operations -------------------------------------------------------


def validate(table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None) -> FiniteInvSemigroup:
    """Validate a multiplication table, rejecting non-inverse semigroups."""
    return FiniteInvSemigroup(table, names)


def inverse_of(S: FiniteInvSemigroup, s: int) -> int:
    return S.inv[s]


def idempotents(S: FiniteInvSemigroup) -> tuple[int, ...]:
    """The commuting idempotents of S, sorted by element id."""
    return S._idempotents


def natural_le(S: FiniteInvSemigroup, s: int, t: int) -> bool:
    return S.le(s, t)


def source(S: FiniteInvSemigroup, s: int) -> int:
    """sigma(s) = s* s, the source idempotent of s."""
    return S.sigma[s]


def sup_finite(S: FiniteInvSemigroup, A: Iterable[int]) -> Optional[int]:
    """Least upper bound of a nonempty element set, or None if there is none."""
    members = list(A)
    if not members:
        raise ValueError("sup_finite needs a nonempty set")
    up = S.up_masks()
    ub = (1 << S.n) - 1
    for a in members:
        ub &= up[a]
    for u in bits(ub):
        if ub & ~up[u] == 0:  # u is below every upper bound
            return u
    return None


def h_class(S: FiniteInvSemigroup, eps: int) -> tuple[int, ...]:
    """All s with sigma(s) = eps; eps must be idempotent."""
    if not S.is_idempotent(eps):
        raise NotIdempotent(eps)
    return tuple(s for s in range(S.n) if S.sigma[s] == eps)


def is_reduced(S: FiniteInvSemigroup) -> bool:
    """True iff every element above an idempotent is idempotent."""
    up = S.up_masks()
    for e in idempotents(S):
        if up[e] & ~S._idem_mask:
            return False
    return True


def restrict(S: FiniteInvSemigroup, subset: Sequence[int]) -> FiniteInvSemigroup:
    """The sub-carrier on a product-closed subset, revalidated from scratch."""
    sub = list(subset)
    old_to_new = {x: i for i, x in enumerate(sub)}
    tbl = []
    for s in sub:
        row = []
        for t in sub:
            p = S.table[s][t]
            if p not in old_to_new:
                raise ValueError(f"subset not closed under product: {s}*{t} = {p}")
            row.append(old_to_new[p])
        tbl.append(row)
    names = [S.name_of(x) for x in sub] if S.names is not None else None
    return FiniteInvSemigroup(tbl, names)


# -- JSON carrier format ----------------------------------------------------


def to_json(S: FiniteInvSemigroup) -> dict:
    obj: dict = {"n": S.n, "table": [list(row) for row in S.table]}
    if S.names is not None:
        obj["names"] = list(S.names)
    return obj


def from_json(obj) -> FiniteInvSemigroup:
    """Build a carrier from ``{"n": int, "table": [[int]]}`` (+ optional names)."""
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "table" not in obj:
        raise ValueError("carrier JSON must be an object with a 'table' field")
    table = obj["table"]
    if "n" in obj and int(obj["n"]) != len(table):
        raise ValueError("carrier JSON: 'n' does not match the table size")
    return FiniteInvSemigroup(table, obj.get("names"))


def load_carrier(path: str) -> FiniteInvSemigroup:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(json.load(fh))
