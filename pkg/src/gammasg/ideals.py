"""Left, right and two-sided ideals: predicates, generators, catalogs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .core import ElementSet, GammaSemigroup, bits
from .errors import CatalogTooLarge, EmptyGenerator, NoZero, NotClosed, TooLarge

DEFAULT_CATALOG_CAP = 1 << 20
BRUTE_FORCE_MAX_N = 20


class IdealKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"

    @classmethod
    def parse(cls, text: str) -> IdealKind:
        text = text.strip().lower().replace("_", "-")
        aliases = {"l": "left", "r": "right", "two": "two-sided", "both": "two-sided", "2": "two-sided"}
        return cls(aliases.get(text, text))


KINDS = (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED)


@dataclass(frozen=True)
class IdealCatalog:
    kind: IdealKind
    ideals: tuple[ElementSet, ...]

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __contains__(self, s: object) -> bool:
        return s in self.masks

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(s.mask for s in self.ideals)


class LeastIdeal(NamedTuple):
    members: ElementSet
    is_ideal: bool


def _closure_bad(S: GammaSemigroup, mask: int, kind: IdealKind) -> int:
    """Bits produced by the one-sided products of ``mask`` that fall outside it."""
    out = 0
    if kind is not IdealKind.RIGHT:
        out |= S.lprod(mask)
    if kind is not IdealKind.LEFT:
        out |= S.rprod(mask)
    return out & ~mask


def is_ideal_mask(S: GammaSemigroup, mask: int, kind: IdealKind) -> bool:
    return mask != 0 and _closure_bad(S, mask, kind) == 0


def is_left_ideal(S: GammaSemigroup, B: ElementSet) -> bool:
    return is_ideal_mask(S, B.mask, IdealKind.LEFT)


def is_right_ideal(S: GammaSemigroup, B: ElementSet) -> bool:
    return is_ideal_mask(S, B.mask, IdealKind.RIGHT)


def is_two_sided_ideal(S: GammaSemigroup, B: ElementSet) -> bool:
    return is_ideal_mask(S, B.mask, IdealKind.TWO_SIDED)


def is_ideal(S: GammaSemigroup, B: ElementSet, kind: IdealKind) -> bool:
    return is_ideal_mask(S, B.mask, kind)


def generated_mask(S: GammaSemigroup, mask: int, kind: IdealKind) -> int:
    if not mask:
        raise EmptyGenerator("the generating set must be nonempty")
    out = mask
    if kind is IdealKind.LEFT:
        return out | S.lprod(mask)
    if kind is IdealKind.RIGHT:
        return out | S.rprod(mask)
    left = S.lprod(mask)
    return out | left | S.rprod(mask) | S.rprod(left)


def generated_ideal(S: GammaSemigroup, B: ElementSet, kind: IdealKind) -> ElementSet:
    """One-step generator: ``B ∪ TΓB`` (left), ``B ∪ BΓT`` (right), or
    ``B ∪ TΓB ∪ BΓT ∪ TΓBΓT`` (two-sided).

    No iteration is performed; on associative tables the result is already
    closed.
    """
    return ElementSet(S.n, generated_mask(S, B.mask, kind))


def principal_mask(S: GammaSemigroup, a: int, kind: IdealKind) -> int:
    return S.cached(("principal", kind), lambda: [generated_mask(S, 1 << x, kind) for x in range(S.n)])[a]


def principal_ideal(S: GammaSemigroup, a: int, kind: IdealKind) -> ElementSet:
    return ElementSet(S.n, principal_mask(S, a, kind))


def _union_closure(generators: list[int], cap: int) -> list[int]:
    found: set[int] = set()
    for g in dict.fromkeys(generators):
        if g in found:
            continue
        fresh = {g}
        fresh.update(g | x for x in found)
        found |= fresh
        if len(found) > cap:
            raise CatalogTooLarge(f"more than {cap} distinct ideals")
    return list(found)


def _sorted_sets(n: int, masks) -> tuple[ElementSet, ...]:
    sets = [ElementSet(n, int(x)) for x in masks]
    sets.sort(key=ElementSet.sort_key)
    return tuple(sets)


def ideal_masks(S: GammaSemigroup, kind: IdealKind, cap: int = DEFAULT_CATALOG_CAP) -> list[int]:
    """Masks of every ideal of ``kind``, in catalog order (cached)."""

    def compute():
        gens = [principal_mask(S, a, kind) for a in range(S.n)]
        return [s.mask for s in _sorted_sets(S.n, _union_closure(gens, cap))]

    return S.cached(("ideals", kind, cap), compute)


def all_ideals(S: GammaSemigroup, kind: IdealKind, cap: int = DEFAULT_CATALOG_CAP) -> IdealCatalog:
    """Every ideal of ``kind``: unions of the principal ideals, closed to a fixpoint."""
    return IdealCatalog(kind, tuple(ElementSet(S.n, x) for x in ideal_masks(S, kind, cap)))


def brute_force_ideals(S: GammaSemigroup, kind: IdealKind) -> IdealCatalog:
    """Every ideal of ``kind`` by testing all 2**n - 1 nonempty subsets."""
    if S.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute-force subset scan limited to n <= {BRUTE_FORCE_MAX_N}")
    masks = np.arange(1 << S.n, dtype=np.int64)
    bad = np.zeros(1 << S.n, dtype=np.int64)
    if kind is not IdealKind.RIGHT:
        bad |= _kernels.subset_unions(np.array(S.col_masks, dtype=np.int64))
    if kind is not IdealKind.LEFT:
        bad |= _kernels.subset_unions(np.array(S.row_masks, dtype=np.int64))
    ok = (bad & ~masks) == 0
    ok[0] = False
    return IdealCatalog(kind, _sorted_sets(S.n, np.flatnonzero(ok)))


def is_0_minimal_mask(S: GammaSemigroup, mask: int, kind: IdealKind) -> bool:
    if S.zero is None:
        raise NoZero("0-minimal ideal test")
    z = 1 << S.zero
    if mask == z or not is_ideal_mask(S, mask, kind):
        return False
    for other in ideal_masks(S, kind):
        if other != mask and other != z and other & ~mask == 0:
            return False
    return True


def is_0_minimal_ideal(S: GammaSemigroup, B: ElementSet, kind: IdealKind) -> bool:
    """B is a nonzero ideal whose only properly contained ideal is {0}."""
    return is_0_minimal_mask(S, B.mask, kind)


def zero_minimal_masks(S: GammaSemigroup, kind: IdealKind) -> list[int]:
    if S.zero is None:
        raise NoZero("0-minimal ideals")

    def compute():
        z = 1 << S.zero
        nonzero = [x for x in ideal_masks(S, kind) if x != z]
        return [x for x in nonzero if not any(y != x and y & ~x == 0 for y in nonzero)]

    return S.cached(("0min", kind), compute)


def zero_minimal_ideals(S: GammaSemigroup, kind: IdealKind) -> list[ElementSet]:
    return [ElementSet(S.n, x) for x in zero_minimal_masks(S, kind)]


def minimal_masks(S: GammaSemigroup, kind: IdealKind) -> list[int]:
    """Ideals of ``kind`` containing no other ideal of that kind."""

    def compute():
        ids = ideal_masks(S, kind)
        return [x for x in ids if not any(y != x and y & ~x == 0 for y in ids)]

    return S.cached(("min", kind), compute)


def least_ideal(S: GammaSemigroup, kind: IdealKind) -> LeastIdeal:
    """Intersection of all ideals of ``kind``, flagged with whether it is one."""
    acc = S.full_mask
    for x in ideal_masks(S, kind):
        acc &= x
    return LeastIdeal(ElementSet(S.n, acc), is_ideal_mask(S, acc, kind))


def closure_witness(S: GammaSemigroup, mask: int) -> tuple[int, int, int] | None:
    """First (a, g, b) with a, b in the subset and [a g b] outside it."""
    t = S.table
    for a in bits(mask):
        for g in range(S.m):
            for b in bits(mask):
                if not (mask >> int(t[a, g, b])) & 1:
                    return (a, g, b)
    return None


def is_closed_mask(S: GammaSemigroup, mask: int) -> bool:
    return mask != 0 and S.prod(mask, mask) & ~mask == 0


def restrict_to(S: GammaSemigroup, sub: ElementSet) -> GammaSemigroup:
    """The Gamma-semigroup induced on a closed subset.

    Elements are renumbered in ascending order; ``result.origin`` maps each
    new index back to the old one.
    """
    if not sub:
        raise NotClosed((-1, -1, -1))
    w = closure_witness(S, sub.mask)
    if w is not None:
        raise NotClosed(w)
    origin = sub.indices()
    back = {old: new for new, old in enumerate(origin)}
    k = len(origin)
    sub_t = S.table[np.ix_(origin, range(S.m), origin)]
    t = np.vectorize(back.__getitem__, otypes=[np.int64])(sub_t).reshape(k, S.m, k)
    names = None if S.element_names is None else [S.element_names[i] for i in origin]
    zero = back.get(S.zero) if S.zero is not None else None
    R = GammaSemigroup(
        k, S.m, t, zero=zero, element_names=names, gamma_names=S.gamma_names,
        check_associativity=S.associative,
    )
    R.origin = tuple(origin)
    return R


def lift_mask(R: GammaSemigroup, mask: int) -> int:
    """Map a subset of a restriction back into the parent's indices."""
    out = 0
    for i in bits(mask):
        out |= 1 << R.origin[i]
    return out


def project_mask(R: GammaSemigroup, parent_mask: int) -> int:
    """Map a parent subset (contained in the restriction) into ``R``'s indices."""
    out = 0
    for new, old in enumerate(R.origin):
        if (parent_mask >> old) & 1:
            out |= 1 << new
    return out
