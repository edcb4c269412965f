"""Bicyclic monoids over the positive cones N and the nonnegative dyadics.

Elements are pairs (a, b) over the cone P with

    (a, b) + (c, d) = (a - b + max(b, c), d - c + max(b, c)),

identity (0, 0), involution (a, b)* = (b, a), idempotents the diagonal, and
(a, b) <= (c, d) iff c = d + a - b and d <= b.  The idempotent semilattice
is P with the numeric order reversed.

Over N every directed subset of the idempotents attains its supremum (the
numeric minimum exists), so way-below collapses to the order and everything
is compact.  Over the dyadics the infimum may only be approached, so
(a, a) is way below (b, b) exactly when a > b strictly and no element is
compact.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .base import ChainWitness, SymbolicFamily, finite_list_chain

__all__ = ["bicyclic_op", "bicyclic_le", "bicyclic_wb", "is_dyadic",
           "bicyclic_nat", "bicyclic_dyadic"]


def bicyclic_op(x, y):
    a, b = x
    c, d = y
    m = max(b, c)
    return (a - b + m, d - c + m)


def bicyclic_inv(x):
    a, b = x
    return (b, a)


def bicyclic_le(x, y) -> bool:
    a, b = x
    c, d = y
    return c == d + a - b and d <= b


def is_dyadic(q: Fraction) -> bool:
    return q >= 0 and (q.denominator & (q.denominator - 1)) == 0


def bicyclic_wb(cone: str, eps, delta) -> bool:
    """Way-below between idempotents (a,a) and (b,b) over the given cone."""
    from ..core import NotIdempotent

    a, aa = eps
    b, bb = delta
    if a != aa or b != bb:
        raise NotIdempotent(repr(eps if a != aa else delta))
    if cone == "nat":
        return bicyclic_le(eps, delta)  # every idempotent is compact
    if cone == "dyadic":
        return a > b
    raise ValueError(f"unknown cone {cone!r}")


def _wb_s(cone: str):
    def wb(s, t) -> bool:
        if not bicyclic_le(s, t):
            return False
        if cone == "nat":
            return True
        return s[1] > t[1]
    return wb


def _needs(cone: str, value):
    if cone == "dyadic" and not is_dyadic(Fraction(value)):
        raise ValueError(f"{value} is not a nonnegative dyadic")


def _chains_to_nat(t):
    a, b = t
    items = [(a + j, b + j) for j in (3, 2, 1, 0)]
    return (finite_list_chain(f"principal-chain-to-({a},{b})", items, in_sigma=(a == b),
                              sup_in_sigma=t if a == b else None,
                              sup_in_s=t, upper_bounds=(t,)),)


def _sigma_chains_to_nat(eps):
    return _chains_to_nat(eps)


def _chains_to_dyadic(t):
    a, b = t

    def member(k: int):
        e = Fraction(1, 2 ** k)
        return (a + e, b + e)

    asc = ChainWitness(name=f"dyadic-approach-({a},{b})", kind="omega-chain",
                       member=member, in_sigma=(a == b),
                       sup_in_sigma=t if a == b else None,
                       sup_in_s=t, upper_bounds=(t,))
    const = finite_list_chain(f"constant-({a},{b})", [t], in_sigma=(a == b),
                              sup_in_sigma=t if a == b else None,
                              sup_in_s=t, upper_bounds=(t,))
    return (asc, const)


def _refuter(cone: str, in_sigma: bool):
    """Concrete chain killing a claimed non-way-below pair."""
    chains_to = _chains_to_nat if cone == "nat" else _chains_to_dyadic

    def refute(x, y):
        wb = _wb_s(cone) if not in_sigma else (lambda e, d: bicyclic_wb(cone, e, d))
        if wb(x, y):
            return None
        if not bicyclic_le(x, y):
            return finite_list_chain(f"singleton-{y}", [y], in_sigma=in_sigma,
                                     sup_in_sigma=y if in_sigma else None,
                                     sup_in_s=y, upper_bounds=(y,))
        # x <= y but not way below: only possible over the dyadics, where the
        # strictly descending approach chain to y has sup y and never reaches x
        return chains_to(y)[0]
    return refute


def _sampler(cone: str):
    if cone == "nat":
        def sample(rng: random.Random):
            return (rng.randrange(0, 9), rng.randrange(0, 9))
    else:
        def sample(rng: random.Random):
            def coord():
                return Fraction(rng.randrange(0, 65), 2 ** rng.randrange(0, 4))
            return (coord(), coord())
    return sample


def _idem_sampler(cone: str):
    pick = _sampler(cone)

    def sample(rng: random.Random):
        a, _ = pick(rng)
        return (a, a)
    return sample


def _h_class_sample(cone: str):
    pick = _sampler(cone)

    def hs(eps, rng: random.Random, k: int) -> list:
        e = eps[0]
        out = [eps]
        for _ in range(k):
            a, _ = pick(rng)
            out.append((a, e))
        return out
    return hs


def _family(cone: str) -> SymbolicFamily:
    zero_pair = (0, 0) if cone == "nat" else (Fraction(0), Fraction(0))
    if cone == "nat":
        witnesses = _chains_to_nat(zero_pair) + _chains_to_nat((2, 2)) + _chains_to_nat((5, 3))
        chains_to, sigma_chains_to = _chains_to_nat, _sigma_chains_to_nat
    else:
        one = Fraction(1)
        witnesses = (_chains_to_dyadic((one, one)) + _chains_to_dyadic((Fraction(3), Fraction(3)))
                     + _chains_to_dyadic((Fraction(5, 2), Fraction(1, 2))))
        chains_to, sigma_chains_to = _chains_to_dyadic, _chains_to_dyadic
    claimed = {"reduced": True, "mirror": True, "continuous": True,
               "algebraic": cone == "nat", "stably_continuous": True}
    return SymbolicFamily(
        name=f"bicyclic-{cone}",
        op=bicyclic_op,
        inv=bicyclic_inv,
        nat_le=bicyclic_le,
        is_idempotent=lambda x: x[0] == x[1],
        describe=lambda x: f"({x[0]},{x[1]})",
        sample=_sampler(cone),
        sample_idempotent=_idem_sampler(cone),
        witnesses=witnesses,
        chains_to=chains_to,
        sigma_chains_to=sigma_chains_to,
        h_class_sample=_h_class_sample(cone),
        wb_s=_wb_s(cone),
        wb_sigma=lambda e, d: bicyclic_wb(cone, e, d),
        wb_s_refuter=_refuter(cone, in_sigma=False),
        wb_sigma_refuter=_refuter(cone, in_sigma=True),
        zero=None,  # the bicyclic monoid has no zero element
        claimed=claimed,
    )


def bicyclic_nat() -> SymbolicFamily:
    return _family("nat")


def bicyclic_dyadic() -> SymbolicFamily:
    return _family("dyadic")
