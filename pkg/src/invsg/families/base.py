"""Shared machinery for symbolic (infinite) inverse-semigroup families.

A family is an oracle bundle: exact closed-form product, inversion, order,
way-below and sampling, plus canonical chain witnesses.  Elements are
canonical immutable Python values (Fractions, tuples of Fractions, a
sentinel), so equality is plain ``==`` and everything hashes.

Way-below on an infinite poset is not decidable by quantification, so each
family ships a hand-derived closed form; trust comes from the consistency
identity s << t  <=>  s <= t and sigma(s) << sigma(t) checked across big
sampled budgets, and from refutation testing against canonical chains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

__all__ = ["ChainWitness", "SymbolicFamily", "Flag", "Classification", "DEFAULT_DEPTH"]

DEFAULT_DEPTH = 64


@dataclass(frozen=True)
class ChainWitness:
    """A canonical countable directed subset with its supremum claims.

    ``member(k)`` is the k-th element (monotone in k; finite lists clamp at
    their last element).  ``sup_in_sigma``/``sup_in_s`` are the claimed
    suprema, None when the sup does not exist in that poset.  Claims are
    verified by sampling k up to the chain depth; for a missing sup the
    listed upper bounds certify the failure (an upper bound u with
    sup_in_sigma not below u refutes any supremum in S).
    """

    name: str
    kind: str  # "finite-list" | "omega-chain"
    member: Callable[[int], Any]
    in_sigma: bool
    sup_in_sigma: Any = None
    sup_in_s: Any = None
    upper_bounds: tuple = ()
    length: Optional[int] = None  # finite-list only


@dataclass
class Flag:
    """One classification flag plus the evidence that produced it."""

    value: Optional[bool]
    evidence: str
    budget: int = 0
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out: dict = {"value": self.value, "evidence": self.evidence, "budget": self.budget}
        if self.witness is not None:
            out["witness"] = {k: str(v) for k, v in self.witness.items()}
        return out


@dataclass
class Classification:
    subject: str
    depth: int
    seed: int
    reduced: Flag
    mirror: Flag
    continuous: Flag
    algebraic: Flag
    stably_continuous: Flag

    def flags(self) -> dict[str, Flag]:
        return {
            "reduced": self.reduced,
            "mirror": self.mirror,
            "continuous": self.continuous,
            "algebraic": self.algebraic,
            "stably_continuous": self.stably_continuous,
        }

    def values(self) -> dict[str, Optional[bool]]:
        return {k: f.value for k, f in self.flags().items()}

    def to_json(self) -> dict:
        out = {"subject": self.subject, "depth": self.depth, "seed": self.seed}
        out.update({k: f.to_json() for k, f in self.flags().items()})
        return out


@dataclass(frozen=True, eq=False)  # identity semantics: an oracle bundle
class SymbolicFamily:
    """Oracle bundle for one infinite parametric inverse semigroup."""

    name: str
    op: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    nat_le: Callable[[Any, Any], bool]
    is_idempotent: Callable[[Any], bool]
    describe: Callable[[Any], str]
    sample: Callable[[random.Random], Any]
    sample_idempotent: Callable[[random.Random], Any]
    witnesses: tuple[ChainWitness, ...]
    chains_to: Callable[[Any], tuple[ChainWitness, ...]]
    sigma_chains_to: Callable[[Any], tuple[ChainWitness, ...]]
    h_class_sample: Callable[[Any, random.Random, int], list]
    # way-below oracles; None when the family only supports partial evidence
    wb_s: Optional[Callable[[Any, Any], bool]] = None
    wb_sigma: Optional[Callable[[Any, Any], bool]] = None
    wb_s_refuter: Optional[Callable[[Any, Any], Optional[ChainWitness]]] = None
    wb_sigma_refuter: Optional[Callable[[Any, Any], Optional[ChainWitness]]] = None
    zero: Any = None
    # documented expectations, asserted against computed evidence in tests
    claimed: dict = field(default_factory=dict)

    def sigma(self, s) -> Any:
        return self.op(self.inv(s), s)

    def eq(self, a, b) -> bool:
        return a == b


def chain_members(cw: ChainWitness, depth: int) -> list:
    return list(iter_chain(cw, depth))


def iter_chain(cw: ChainWitness, depth: int):
    """Lazily yield members up to the depth (cheap when callers exit early)."""
    ks = range(depth + 1) if cw.length is None else range(min(cw.length, depth + 1))
    for k in ks:
        yield cw.member(k)


def finite_list_chain(name: str, items: list, in_sigma: bool,
                      sup_in_sigma=None, sup_in_s=None, upper_bounds=()) -> ChainWitness:
    items = list(items)

    def member(k: int):
        return items[min(k, len(items) - 1)]

    return ChainWitness(name=name, kind="finite-list", member=member,
                        in_sigma=in_sigma, sup_in_sigma=sup_in_sigma,
                        sup_in_s=sup_in_s, upper_bounds=tuple(upper_bounds),
                        length=len(items))
