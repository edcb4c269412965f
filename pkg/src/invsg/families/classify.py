"""Evidence-backed classification of subjects.

Every flag is produced by the corresponding checker machinery, never
asserted bare; the evidence string records which route produced it and at
what depth/budget.  Finite carriers are classified definitionally; symbolic
families via their oracles, canonical chains and refuters.  Families without
way-below oracles get partial records (value None where no evidence exists).
"""

from __future__ import annotations

from typing import Union

from ..core import FiniteInvSemigroup, is_reduced
from .base import Classification, Flag, SymbolicFamily

__all__ = ["classify"]


def _classify_finite(S: FiniteInvSemigroup, subject_id: str, depth: int,
                     seed: int) -> Classification:
    from .. import checkers, poset

    rng = checkers._rng(seed, "classify", subject_id)
    mirror_ok, mirror_ce, n_mirror = checkers._finite_mirror(S, rng)
    PS = poset.order_poset(S)
    Psig, _sig = poset.sigma_poset(S)
    contS = poset.is_continuous(PS)
    algS = poset.is_algebraic(PS)
    mult = poset.way_below_multiplicative(PS, S.mul) if S.n <= poset.DEFINITIONAL_LIMIT \
        else _mult_via_collapse(S, PS)
    return Classification(
        subject=subject_id, depth=depth, seed=seed,
        reduced=Flag(is_reduced(S), "exhaustive over all idempotent/up-set pairs", S.n),
        mirror=Flag(mirror_ok, "definitional over directed idempotent subsets",
                    n_mirror, mirror_ce),
        continuous=Flag(contS, "definitional on the finite order poset", S.n),
        algebraic=Flag(algS, "definitional on the finite order poset", S.n),
        stably_continuous=Flag(contS and mult,
                               "continuity plus way-below multiplicativity", S.n),
    )


def _mult_via_collapse(S: FiniteInvSemigroup, PS) -> bool:
    from ..core import bits
    wb = PS.up  # the verified finite collapse
    pairs = [(s, t) for s in range(S.n) for t in bits(wb[s])]
    for s, t in pairs:
        for s2, t2 in pairs:
            if not (wb[S.mul(s, s2)] >> S.mul(t, t2)) & 1:
                return False
    return True


def _sampled_multiplicative(fam: SymbolicFamily, rng, budget: int) -> tuple[bool, int]:
    """Direct 4-tuple sampling of way-below multiplicativity (no hypotheses)."""
    pairs = []
    examined = 0
    while len(pairs) < 40 and examined < 4000:
        t = fam.sample(rng)
        s = fam.op(t, fam.sample_idempotent(rng))
        examined += 1
        if fam.wb_s(s, t):
            pairs.append((s, t))
    for _ in range(budget):
        if not pairs:
            break
        s, t = pairs[rng.randrange(len(pairs))]
        s2, t2 = pairs[rng.randrange(len(pairs))]
        examined += 1
        if not fam.wb_s(fam.op(s, s2), fam.op(t, t2)):
            return False, examined
    return True, examined


def _classify_family(fam: SymbolicFamily, depth: int, seed: int,
                     budget) -> Classification:
    from .. import checkers

    rng = checkers._rng(seed, "classify", fam.name)
    red_ok, red_ce, red_n = checkers._family_reduced(fam, rng)
    red_note = "sampled pairs (idempotent below element)"
    if fam.zero is not None:
        red_note += "; the zero element is excluded, as the mirror route requires"
    mirror_ok, mirror_ce, mir_n, _route = checkers._mirror_cached(fam, depth, seed)

    if fam.wb_s is None or fam.wb_sigma is None:
        cont_claim = fam.claimed.get("continuous")
        cont = Flag(cont_claim,
                    "partial: chain sups verified, no way-below oracle installed",
                    depth)
        alg = Flag(None, "not classified (partial family)", 0)
        stably = Flag(None, "not classified (partial family)", 0)
    else:
        contS, contE, cont_n = checkers._family_continuity(fam, rng, depth)
        algS, alg_wit, alg_n = checkers._family_algebraic(fam, rng, depth)
        mult_ok, mult_n = _sampled_multiplicative(fam, rng, budget or 2000)
        cont = Flag(contS, f"approximation chains at depth {depth}; "
                           f"sigma side agrees ({contE})", cont_n)
        alg = Flag(algS, "compact approximants sampled against the way-below oracle",
                   alg_n, alg_wit)
        stably = Flag(bool(contS) and mult_ok,
                      "continuity plus sampled way-below multiplicativity", mult_n)
    return Classification(
        subject=fam.name, depth=depth, seed=seed,
        reduced=Flag(red_ok, red_note, red_n, red_ce),
        mirror=Flag(mirror_ok, f"chain witnesses at depth {depth} + reduced route",
                    mir_n, mirror_ce),
        continuous=cont,
        algebraic=alg,
        stably_continuous=stably,
    )


def classify(subject: Union[FiniteInvSemigroup, SymbolicFamily],
             subject_id: str | None = None, *, depth: int = 64, seed: int = 0,
             budget=None) -> Classification:
    """Classification record {reduced, mirror, continuous, algebraic, stably
    continuous}, each flag carrying the evidence that produced it."""
    if isinstance(subject, FiniteInvSemigroup):
        return _classify_finite(subject, subject_id or f"carrier(n={subject.n})",
                                depth, seed)
    return _classify_family(subject, depth, seed, budget)
