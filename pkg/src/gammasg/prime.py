"""Prime two-sided ideals: definitional test and its characterizations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .core import ElementSet, GammaSemigroup
from .errors import NotAChain, NotAnIdeal, NotCommutative, NotPrime
from .ideals import (
    IdealKind,
    ideal_masks,
    is_ideal_mask,
    lift_mask,
    principal_mask,
    project_mask,
    restrict_to,
)

TWO = IdealKind.TWO_SIDED


@dataclass(frozen=True)
class PrimeVerdict:
    """``witness`` is a pair (E, F) with [EΓF] ⊆ Q, E ⊄ Q and F ⊄ Q."""

    is_prime: bool
    witness: tuple[ElementSet, ElementSet] | None = None

    def __bool__(self) -> bool:
        return self.is_prime


def _require_ideal(S: GammaSemigroup, Q: ElementSet) -> None:
    if not is_ideal_mask(S, Q.mask, TWO):
        raise NotAnIdeal(f"{S.format_set(Q)} is not a two-sided ideal")


def ideal_products(S: GammaSemigroup) -> tuple[np.ndarray, np.ndarray]:
    """Two-sided ideal masks and the matrix of their pairwise products."""

    def compute():
        masks = np.array(ideal_masks(S, TWO), dtype=np.int64)
        return masks, _kernels.pairwise_products(S.pm, masks)

    return S.cached("ideal-products", compute)


def _verdict_from_pairs(S: GammaSemigroup, q: int, masks: np.ndarray, prods: np.ndarray) -> PrimeVerdict:
    outside = (masks & ~q) != 0
    inside = (prods & ~q) == 0
    hits = inside & outside[:, None] & outside[None, :]
    if not hits.any():
        return PrimeVerdict(True)
    # lexicographically least pair in catalog order
    i, j = np.argwhere(hits)[0]
    return PrimeVerdict(False, (ElementSet(S.n, int(masks[i])), ElementSet(S.n, int(masks[j]))))


def is_prime_ideal(S: GammaSemigroup, Q: ElementSet) -> PrimeVerdict:
    """Quantifies over every pair of two-sided ideals (E, F)."""
    _require_ideal(S, Q)
    masks, prods = ideal_products(S)
    return _verdict_from_pairs(S, Q.mask, masks, prods)


def _principal_products(S: GammaSemigroup) -> np.ndarray:
    def compute():
        gens = np.array([principal_mask(S, a, TWO) for a in range(S.n)], dtype=np.int64)
        return gens, _kernels.pairwise_products(S.pm, gens)

    return S.cached("principal-products", compute)


def is_prime_by_elements(S: GammaSemigroup, Q: ElementSet) -> PrimeVerdict:
    """Element-pair test through principal two-sided ideals (e)Γ(f)."""
    _require_ideal(S, Q)
    gens, prods = _principal_products(S)
    q = Q.mask
    out = np.array([not (q >> e) & 1 for e in range(S.n)])
    inside = (prods & ~q) == 0
    hits = inside & out[:, None] & out[None, :]
    if not hits.any():
        return PrimeVerdict(True)
    e, f = np.argwhere(hits)[0]
    return PrimeVerdict(False, (ElementSet(S.n, int(gens[e])), ElementSet(S.n, int(gens[f]))))


def is_prime_commutative(S: GammaSemigroup, Q: ElementSet) -> PrimeVerdict:
    """Element-pair test on the bare products [eΓf]; commutative instances only."""
    if not S.is_commutative():
        raise NotCommutative("the element-product prime test needs a commutative instance")
    _require_ideal(S, Q)
    q = Q.mask
    pm = S.pm
    for e in range(S.n):
        if (q >> e) & 1:
            continue
        for f in range(S.n):
            if (q >> f) & 1:
                continue
            if int(pm[e, f]) & ~q == 0:
                # the principal ideals of e and f form a genuine witness pair
                return PrimeVerdict(
                    False,
                    (ElementSet(S.n, principal_mask(S, e, TWO)), ElementSet(S.n, principal_mask(S, f, TWO))),
                )
    return PrimeVerdict(True)


def all_prime_ideals(S: GammaSemigroup) -> list[ElementSet]:
    masks, prods = ideal_products(S)
    return [ElementSet(S.n, int(q)) for q in masks if _verdict_from_pairs(S, int(q), masks, prods)]


def prime_restricted(S: GammaSemigroup, H: ElementSet, Q: ElementSet) -> PrimeVerdict:
    """Primality of H ∩ Q as an ideal of the Gamma-semigroup induced on H.

    A witness, if any, is expressed in the parent's element indices.
    """
    if not is_ideal_mask(S, H.mask, TWO):
        raise NotAnIdeal(f"{S.format_set(H)} is not a two-sided ideal")
    _require_ideal(S, Q)
    R = restrict_to(S, H)
    sub = ElementSet(R.n, project_mask(R, H.mask & Q.mask))
    v = is_prime_ideal(R, sub)
    if v.is_prime:
        return v
    e, f = v.witness
    return PrimeVerdict(False, (ElementSet(S.n, lift_mask(R, e.mask)), ElementSet(S.n, lift_mask(R, f.mask))))


def check_chain(S: GammaSemigroup, chain: Sequence[ElementSet]) -> None:
    """Raise unless every member is prime and the members are nested."""
    if not chain:
        raise ValueError("empty chain")
    for i, Q in enumerate(chain):
        if not is_ideal_mask(S, Q.mask, TWO) or not is_prime_ideal(S, Q):
            raise NotPrime(i)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            if not (chain[i] <= chain[j] or chain[j] <= chain[i]):
                raise NotAChain(i, j)


def _combine(S: GammaSemigroup, sets: Sequence[ElementSet], union: bool) -> ElementSet:
    acc = 0 if union else S.full_mask
    for Q in sets:
        acc = acc | Q.mask if union else acc & Q.mask
    return ElementSet(S.n, acc)


def chain_union_primes(S: GammaSemigroup, chain: Sequence[ElementSet]) -> PrimeVerdict:
    check_chain(S, chain)
    return is_prime_ideal(S, _combine(S, chain, union=True))


def chain_intersection_primes(S: GammaSemigroup, chain: Sequence[ElementSet]) -> PrimeVerdict:
    check_chain(S, chain)
    return is_prime_ideal(S, _combine(S, chain, union=False))


def union_primes_unchecked(S: GammaSemigroup, family: Sequence[ElementSet]) -> PrimeVerdict:
    """Primality of the union of an arbitrary family of ideals (no chain check)."""
    return is_prime_ideal(S, _combine(S, family, union=True))


def intersection_primes_unchecked(S: GammaSemigroup, family: Sequence[ElementSet]) -> PrimeVerdict:
    return is_prime_ideal(S, _combine(S, family, union=False))


def replay_witness(S: GammaSemigroup, Q: ElementSet, verdict: PrimeVerdict) -> bool:
    """Re-verify a non-primality witness against the definition."""
    if verdict.is_prime:
        return verdict.witness is None
    E, F = verdict.witness
    return (
        is_ideal_mask(S, E.mask, TWO)
        and is_ideal_mask(S, F.mask, TWO)
        and S.prod(E.mask, F.mask) & ~Q.mask == 0
        and not E <= Q
        and not F <= Q
    )
