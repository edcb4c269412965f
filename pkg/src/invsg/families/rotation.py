"""The rotation semigroup on the rational unit disc.

Elements are pairs (r, theta) with r in Q cap [0,1] and the angle theta in
Q cap [0,1) measured in turns, multiplied by

    (r, theta) x (r', theta') = (min(r, r'), theta + theta' mod 1),

with the canonical form theta = 0 whenever r = 0.  The involution is
conjugation, idempotents are the radii (theta = 0), and z <= z' iff r = 0
or (r <= r' and theta = theta').  The idempotent semilattice is [0, 1] with
the numeric order; its only compact element is 0, so the semigroup is
continuous but not algebraic.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .base import ChainWitness, SymbolicFamily, finite_list_chain

__all__ = ["OutOfRange", "rot_canonical", "rotation_op", "rotation_inv",
           "rotation_le", "rotation_wb_sigma", "rotation_family"]

_ZERO = (Fraction(0), Fraction(0))
_ONE = (Fraction(1), Fraction(0))


class OutOfRange(ValueError):
    pass


def rot_canonical(r, theta):
    if not isinstance(r, Fraction):
        r = Fraction(r)
    if not isinstance(theta, Fraction):
        theta = Fraction(theta)
    if not 0 <= r <= 1:
        raise OutOfRange(f"radius {r} outside [0, 1]")
    if theta < 0 or theta >= 1:
        theta %= 1
    return _ZERO if r == 0 else (r, theta)


def rotation_op(z, z1):
    r, t = z
    r1, t1 = z1
    return rot_canonical(min(r, r1), t + t1)


def rotation_inv(z):
    r, t = z
    return rot_canonical(r, -t)


def rotation_le(z, z1) -> bool:
    r, t = z
    r1, t1 = z1
    return r == 0 or (r <= r1 and t == t1)


def rotation_wb_sigma(eps, delta) -> bool:
    """Way-below between radii: eps << delta iff eps = 0 or eps < delta."""
    return eps == 0 or eps < delta


def _wb_s(z, z1) -> bool:
    r, t = z
    r1, t1 = z1
    return r == 0 or (r < r1 and t == t1)


def _wb_sigma(e, d) -> bool:
    # idempotents carried as full elements (radius, 0)
    return rotation_wb_sigma(e[0], d[0])


def _chains_to(z) -> tuple[ChainWitness, ...]:
    r, t = z
    if r == 0:
        return (finite_list_chain("constant-zero", [_ZERO], in_sigma=True,
                                  sup_in_sigma=_ZERO, sup_in_s=_ZERO,
                                  upper_bounds=(_ZERO,)),)

    def member(k: int):
        return rot_canonical(r * (1 - Fraction(1, 2 ** k)), t)

    asc = ChainWitness(name=f"radius-approach-({r},{t})", kind="omega-chain",
                       member=member, in_sigma=(t == 0),
                       sup_in_sigma=z if t == 0 else None,
                       sup_in_s=z, upper_bounds=(z,))
    const = finite_list_chain(f"constant-({r},{t})", [z], in_sigma=(t == 0),
                              sup_in_sigma=z if t == 0 else None,
                              sup_in_s=z, upper_bounds=(z,))
    return (asc, const)


def _sigma_chains_to(eps) -> tuple[ChainWitness, ...]:
    return _chains_to(eps)


def _refute(in_sigma: bool):
    wb = _wb_sigma if in_sigma else _wb_s
    le = rotation_le

    def refuter(x, y):
        if wb(x, y):
            return None
        if not le(x, y):
            return finite_list_chain(f"singleton-({y[0]},{y[1]})", [y],
                                     in_sigma=in_sigma,
                                     sup_in_sigma=y if in_sigma else None,
                                     sup_in_s=y, upper_bounds=(y,))
        # x <= y, not way below: forces radius(x) = radius(y) > 0, and the
        # strictly ascending radius chain to y has sup y with no member >= x
        return _chains_to(y)[0]
    return refuter


def _rand_frac(rng: random.Random) -> Fraction:
    q = rng.randrange(1, 13)
    p = rng.randrange(0, q + 1)
    return Fraction(p, q)


def _sample(rng: random.Random):
    r = _rand_frac(rng)
    q = rng.randrange(1, 13)
    theta = Fraction(rng.randrange(0, q), q)
    return rot_canonical(r, theta)


def _sample_idem(rng: random.Random):
    return rot_canonical(_rand_frac(rng), 0)


def _h_class_sample(eps, rng: random.Random, k: int) -> list:
    r = eps[0]
    if r == 0:
        return [_ZERO]
    out = [eps]
    for _ in range(k):
        q = rng.randrange(1, 13)
        out.append(rot_canonical(r, Fraction(rng.randrange(0, q), q)))
    return out


def rotation_family() -> SymbolicFamily:
    witnesses = (_chains_to(_ONE) + _chains_to((Fraction(1, 2), Fraction(0)))
                 + _chains_to((Fraction(3, 4), Fraction(1, 3))))
    return SymbolicFamily(
        name="rotation",
        op=rotation_op,
        inv=rotation_inv,
        nat_le=rotation_le,
        is_idempotent=lambda z: z[1] == 0,
        describe=lambda z: f"({z[0]},{z[1]})",
        sample=_sample,
        sample_idempotent=_sample_idem,
        witnesses=witnesses,
        chains_to=_chains_to,
        sigma_chains_to=_sigma_chains_to,
        h_class_sample=_h_class_sample,
        wb_s=_wb_s,
        wb_sigma=_wb_sigma,
        wb_s_refuter=_refute(in_sigma=False),
        wb_sigma_refuter=_refute(in_sigma=True),
        zero=_ZERO,
        claimed={"reduced": True, "mirror": True, "continuous": True,
                 "algebraic": False, "stably_continuous": True},
    )
