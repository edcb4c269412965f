"""Coset monoids of finite groups.

A coset of a group G is a set H*g for a subgroup H; any nonempty
intersection of cosets is again a coset, so every product set C*C' has a
smallest enclosing coset, and that product makes the coset collection an
inverse monoid.  The intrinsic order is reverse inclusion and the
idempotents are exactly the subgroups.

Groups are carried as validated FiniteInvSemigroup tables (a group is an
inverse semigroup whose only idempotent is the identity); constructors cover
everything needed for the order <= 8 corpus plus S4 for headroom.
"""

from __future__ import annotations

from itertools import permutations

from ..core import FiniteInvSemigroup

__all__ = [
    "NotACoset",
    "cyclic_group",
    "direct_product",
    "dihedral_group",
    "quaternion_group",
    "symmetric_group",
    "group_by_name",
    "groups_of_order_at_most",
    "subgroups",
    "all_cosets",
    "coset_product",
    "coset_monoid",
    "GROUP_NAMES",
]

_MAX_GROUP = 24


class NotACoset(Exception):
    pass


def _group_from_mul(elems, mul, name_fn=str) -> FiniteInvSemigroup:
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteInvSemigroup(table, names=[name_fn(e) for e in elems])


def cyclic_group(n: int) -> FiniteInvSemigroup:
    return _group_from_mul(list(range(n)), lambda a, b: (a + b) % n)


def direct_product(G: FiniteInvSemigroup, H: FiniteInvSemigroup) -> FiniteInvSemigroup:
    elems = [(a, b) for a in range(G.n) for b in range(H.n)]
    return _group_from_mul(
        elems, lambda x, y: (G.table[x[0]][y[0]], H.table[x[1]][y[1]]))


def dihedral_group(n: int) -> FiniteInvSemigroup:
    """Order 2n: (rotation, flip) pairs with the usual semidirect product."""
    elems = [(r, f) for f in (0, 1) for r in range(n)]

    def mul(x, y):
        r1, f1 = x
        r2, f2 = y
        r = (r1 + r2) % n if f1 == 0 else (r1 - r2) % n
        return (r, f1 ^ f2)

    return _group_from_mul(elems, mul)


def quaternion_group() -> FiniteInvSemigroup:
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    idx = {nm: i for i, nm in enumerate(names)}

    def base_mul(a: str, b: str) -> str:
        tbl = {("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
               ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
               ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"}
        if a == "1":
            return b
        if b == "1":
            return a
        return tbl[(a, b)]

    def mul(x: str, y: str) -> str:
        sign = -1 if (x.startswith("-") ^ y.startswith("-")) else 1
        r = base_mul(x.lstrip("-"), y.lstrip("-"))
        if r.startswith("-"):
            sign, r = -sign, r[1:]
        return r if sign > 0 else "-" + r

    table = [[idx[mul(a, b)] for b in names] for a in names]
    return FiniteInvSemigroup(table, names=names)


def symmetric_group(n: int) -> FiniteInvSemigroup:
    if n > 4:
        raise ValueError("symmetric groups only up to S4 here")
    elems = list(permutations(range(n)))
    return _group_from_mul(elems, lambda p, q: tuple(p[q[i]] for i in range(n)))


def _registry() -> dict[str, FiniteInvSemigroup]:
    c2 = cyclic_group(2)
    c4 = cyclic_group(4)
    reg = {
        "C1": cyclic_group(1), "C2": c2, "C3": cyclic_group(3),
        "C4": c4, "C2xC2": direct_product(c2, c2),
        "C5": cyclic_group(5), "C6": cyclic_group(6), "S3": symmetric_group(3),
        "C7": cyclic_group(7), "C8": cyclic_group(8),
        "C4xC2": direct_product(c4, c2),
        "C2xC2xC2": direct_product(direct_product(c2, c2), c2),
        "D4": dihedral_group(4), "Q8": quaternion_group(),
        "S4": symmetric_group(4),
    }
    return reg


GROUP_NAMES = tuple(_registry().keys())


def group_by_name(name: str) -> FiniteInvSemigroup:
    reg = _registry()
    for k, v in reg.items():
        if k.lower() == name.lower():
            return v
    raise KeyError(f"unknown group {name!r}; known: {', '.join(reg)}")


def groups_of_order_at_most(k: int) -> dict[str, FiniteInvSemigroup]:
    return {n: g for n, g in _registry().items() if g.n <= k}


def _identity(G: FiniteInvSemigroup) -> int:
    if G.identity is None:
        raise ValueError("not a group: no identity")
    return G.identity


def subgroups(G: FiniteInvSemigroup) -> list[frozenset[int]]:
    """All subgroups, by closing generator sets one element at a time."""
    if G.n > _MAX_GROUP:
        raise ValueError(f"group order {G.n} exceeds the limit {_MAX_GROUP}")
    e = _identity(G)

    def close(seed: frozenset[int]) -> frozenset[int]:
        cur = set(seed) | {e}
        while True:
            new = set(cur)
            for a in cur:
                new.add(G.inv[a])
                for b in cur:
                    new.add(G.table[a][b])
            if new == cur:
                return frozenset(cur)
            cur = new

    found = {close(frozenset())}
    frontier = [close(frozenset())]
    while frontier:
        H = frontier.pop()
        for x in range(G.n):
            if x not in H:
                H2 = close(H | {x})
                if H2 not in found:
                    found.add(H2)
                    frontier.append(H2)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def all_cosets(G: FiniteInvSemigroup) -> list[frozenset[int]]:
    """Every right coset H*g, deduplicated, in a deterministic order."""
    out = set()
    for H in subgroups(G):
        for g in range(G.n):
            out.add(frozenset(G.table[h][g] for h in H))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def coset_product(G: FiniteInvSemigroup, C: frozenset[int], C1: frozenset[int]) -> frozenset[int]:
    """The smallest coset containing the setwise product C*C1."""
    cosets = set(all_cosets(G))
    if frozenset(C) not in cosets:
        raise NotACoset(f"{sorted(C)} is not a coset of this group")
    if frozenset(C1) not in cosets:
        raise NotACoset(f"{sorted(C1)} is not a coset of this group")
    prod = {G.table[a][b] for a in C for b in C1}
    containing = [D for D in cosets if prod <= D]
    best = containing[0]
    for D in containing[1:]:
        best = best & D
    # a nonempty intersection of cosets is a coset, so this is the minimum
    if frozenset(best) not in cosets:
        raise NotACoset("internal error: intersection of cosets not a coset")
    return frozenset(best)


def coset_monoid(G: FiniteInvSemigroup) -> FiniteInvSemigroup:
    """The validated coset monoid; element i is ``all_cosets(G)[i]``."""
    cosets = all_cosets(G)
    index = {c: i for i, c in enumerate(cosets)}
    csets = set(cosets)

    def prod(C, C1):
        p = {G.table[a][b] for a in C for b in C1}
        containing = [D for D in csets if p <= D]
        best = containing[0]
        for D in containing[1:]:
            best = best & D
        return frozenset(best)

    table = [[index[prod(C, C1)] for C1 in cosets] for C in cosets]
    names = ["{" + ",".join(G.name_of(x) for x in sorted(C)) + "}" for C in cosets]
    return FiniteInvSemigroup(table, names=names)
