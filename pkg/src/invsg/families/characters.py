"""Character monoids of finite commutative inverse monoids.

A character is a monoid morphism into the rotation semigroup on the rational
unit disc: chi(1) = 1 and chi(s t) = chi(s) x chi(t) pointwise (compatibility
with the involution then comes for free).  Characters multiply pointwise and
form an inverse monoid themselves; a character is idempotent exactly when all
its values have angle zero.

This family only claims structure, order, reducedness and mirror evidence;
continuity classification is partial (the underlying argument is
lattice-theoretic over the cube of idempotent values), so no way-below
oracles are installed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as iproduct

from ..core import FiniteInvSemigroup
from .base import ChainWitness, SymbolicFamily, finite_list_chain
from .rotation import rot_canonical, rotation_inv, rotation_le, rotation_op

__all__ = ["NotACharacter", "is_character", "character_op",
           "enumerate_characters", "character_family", "trivial_character"]

_ONE = (Fraction(1), Fraction(0))
_ZERO = (Fraction(0), Fraction(0))


class NotACharacter(Exception):
    def __init__(self, pair, detail=""):
        self.pair = pair
        super().__init__(f"morphism law fails at the pair {pair}{detail}")


def _require_commutative_monoid(S: FiniteInvSemigroup) -> int:
    if S.identity is None:
        raise ValueError("character carrier must be a monoid")
    for a in range(S.n):
        for b in range(S.n):
            if S.table[a][b] != S.table[b][a]:
                raise ValueError("character carrier must be commutative")
    return S.identity


def _violating_pair(S: FiniteInvSemigroup, chi) -> tuple[int, int] | None:
    for s in range(S.n):
        for t in range(S.n):
            if chi[S.table[s][t]] != rotation_op(chi[s], chi[t]):
                return (s, t)
    return None


def is_character(S: FiniteInvSemigroup, chi) -> bool:
    return (len(chi) == S.n and chi[S.identity] == _ONE
            and _violating_pair(S, chi) is None)


def character_op(S: FiniteInvSemigroup, chi, psi):
    """Pointwise rotation product of two characters of S."""
    for c in (chi, psi):
        if len(c) != S.n or c[S.identity] != _ONE:
            raise NotACharacter((S.identity, S.identity), " (identity value)")
        bad = _violating_pair(S, c)
        if bad is not None:
            raise NotACharacter(bad)
    return tuple(rotation_op(a, b) for a, b in zip(chi, psi))


def trivial_character(S: FiniteInvSemigroup):
    return (_ONE,) * S.n


_PALETTE_R = (Fraction(0), Fraction(1, 2), Fraction(1))
_PALETTE_TH = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def enumerate_characters(S: FiniteInvSemigroup, radii=_PALETTE_R,
                         angles=_PALETTE_TH) -> list[tuple]:
    """All characters with values on a rational palette (brute force)."""
    e = _require_commutative_monoid(S)
    if S.n > 5:
        raise ValueError("palette enumeration is meant for carriers of order <= 5")
    values = [_ZERO] + [rot_canonical(r, th) for r in radii if r != 0 for th in angles]
    slots = [i for i in range(S.n) if i != e]
    found = []
    for pick in iproduct(values, repeat=len(slots)):
        chi = [None] * S.n
        chi[e] = _ONE
        for i, v in zip(slots, pick):
            chi[i] = v
        chi = tuple(chi)
        if _violating_pair(S, chi) is None:
            found.append(chi)
    return found


def _units(S: FiniteInvSemigroup) -> list[int]:
    return [s for s in range(S.n) if S.sigma[s] == S.identity]


def _damped(S: FiniteInvSemigroup, r: Fraction):
    """1 on the units, the radius r elsewhere; always a character."""
    units = set(_units(S))
    return tuple(_ONE if s in units else rot_canonical(r, 0) for s in range(S.n))


def character_family(S: FiniteInvSemigroup, pool=None) -> SymbolicFamily:
    """The character monoid of a finite commutative inverse monoid."""
    _require_commutative_monoid(S)
    if pool is None:
        pool = enumerate_characters(S)
    pool = list(pool)
    triv = trivial_character(S)
    if triv not in pool:
        pool.append(triv)

    def op(chi, psi):
        # pool members and their products are characters by construction, so
        # the family oracle skips the morphism re-validation character_op does
        return tuple(rotation_op(a, b) for a, b in zip(chi, psi))

    def inv(chi):
        return tuple(rotation_inv(v) for v in chi)

    def sigma(chi):
        return tuple(rotation_op(rotation_inv(v), v) for v in chi)

    def nat_le(chi, psi) -> bool:
        # chi <= psi iff chi = psi * sigma(chi); that condition is pointwise,
        # and per coordinate it collapses to the rotation-semigroup order
        return all(rotation_le(c, p) for c, p in zip(chi, psi))

    def is_idem(chi) -> bool:
        return all(v[1] == 0 for v in chi)

    def describe(chi) -> str:
        return "[" + ", ".join(f"{S.name_of(i)}:({v[0]},{v[1]})"
                               for i, v in enumerate(chi)) + "]"

    def sample(rng: random.Random):
        chi = rng.choice(pool)
        for _ in range(rng.randrange(0, 3)):
            chi = op(chi, rng.choice(pool))
        return chi

    def sample_idem(rng: random.Random):
        chi = sample(rng)
        return sigma(chi)

    def chains_to(chi) -> tuple[ChainWitness, ...]:
        idem = is_idem(chi)

        def member(k: int):
            return tuple(rotation_op(v, rot_canonical(1 - Fraction(1, 2 ** k), 0))
                         for v in chi)

        asc = ChainWitness(name="damped-chain", kind="omega-chain",
                           member=member, in_sigma=idem,
                           sup_in_sigma=chi if idem else None,
                           sup_in_s=chi, upper_bounds=(chi,))
        const = finite_list_chain("constant", [chi], in_sigma=idem,
                                  sup_in_sigma=chi if idem else None,
                                  sup_in_s=chi, upper_bounds=(chi,))
        return (asc, const)

    def sigma_chains_to(eps) -> tuple[ChainWitness, ...]:
        return chains_to(eps)

    def h_class_sample(eps, rng: random.Random, k: int) -> list:
        out = [chi for chi in pool if sigma(chi) == eps]
        return out[: max(k, 2)] if out else []

    # the unit-indicator character is the zero element whenever it absorbs
    zero_candidate = _damped(S, Fraction(0))
    is_zero = all(op(zero_candidate, chi) == zero_candidate for chi in pool)

    def main_witness() -> ChainWitness:
        def member(k: int):
            return _damped(S, 1 - Fraction(1, 2 ** k))

        return ChainWitness(name="damped-to-trivial", kind="omega-chain",
                            member=member, in_sigma=True,
                            sup_in_sigma=triv, sup_in_s=triv,
                            upper_bounds=(triv,))

    return SymbolicFamily(
        name=f"characters:{S.n}",
        op=op,
        inv=inv,
        nat_le=nat_le,
        is_idempotent=is_idem,
        describe=describe,
        sample=sample,
        sample_idempotent=sample_idem,
        witnesses=(main_witness(),) + chains_to(triv),
        chains_to=chains_to,
        sigma_chains_to=sigma_chains_to,
        h_class_sample=h_class_sample,
        wb_s=None,
        wb_sigma=None,
        wb_s_refuter=None,
        wb_sigma_refuter=None,
        zero=zero_candidate if is_zero else None,
        claimed={"reduced": True, "mirror": True, "continuous": True,
                 "algebraic": None, "stably_continuous": None},
    )
