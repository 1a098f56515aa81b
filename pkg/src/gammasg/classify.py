"""Simplicity predicates, each computed two independent ways.

Route A is definitional (inspect the ideal catalog); route B is the
element-wise characterization.  Every public predicate returns route A and
logs a warning if route B disagrees; :func:`classify` collects the
disagreements instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from . import green
from .core import ElementSet, GammaSemigroup
from .errors import NoZero, NotClosed
from .ideals import IdealKind, ideal_masks, restrict_to, zero_minimal_masks

log = logging.getLogger(__name__)


def _t_gamma_t(S: GammaSemigroup) -> int:
    return S.lprod(S.full_mask)


def _only(S: GammaSemigroup, kind: IdealKind, allowed: set[int]) -> bool:
    return set(ideal_masks(S, kind)) <= allowed


def _nonzero(S: GammaSemigroup) -> list[int]:
    return [e for e in range(S.n) if e != S.zero]


def _need_zero(S: GammaSemigroup, what: str) -> int:
    if S.zero is None:
        raise NoZero(what)
    return 1 << S.zero


# -- route implementations ----------------------------------------------------


def _left_simple_a(S):
    return _only(S, IdealKind.LEFT, {S.full_mask})


def _left_simple_b(S):
    return all(c == S.full_mask for c in S.col_masks)


def _right_simple_a(S):
    return _only(S, IdealKind.RIGHT, {S.full_mask})


def _right_simple_b(S):
    return all(r == S.full_mask for r in S.row_masks)


def _simple_a(S):
    return _only(S, IdealKind.TWO_SIDED, {S.full_mask})


def _simple_b(S):
    return all(x == S.full_mask for x in S.mid_masks)


def _zero_flavour(kind: IdealKind, per_elem: Callable[[GammaSemigroup], list[int]]):
    def route_a(S):
        z = _need_zero(S, "0-simplicity")
        return _t_gamma_t(S) != z and _only(S, kind, {z, S.full_mask})

    def route_b(S):
        z = _need_zero(S, "0-simplicity")
        masks = per_elem(S)
        return _t_gamma_t(S) != z and all(masks[e] == S.full_mask for e in _nonzero(S))

    return route_a, route_b


_left_0_simple_a, _left_0_simple_b = _zero_flavour(IdealKind.LEFT, lambda S: S.col_masks)
_right_0_simple_a, _right_0_simple_b = _zero_flavour(IdealKind.RIGHT, lambda S: S.row_masks)
_0_simple_a, _0_simple_b = _zero_flavour(IdealKind.TWO_SIDED, lambda S: S.mid_masks)


def _c0s_a(S):
    return _0_simple_a(S) and bool(green.primitive_idempotents(S))


def _c0s_b(S):
    return (
        _0_simple_a(S)
        and bool(zero_minimal_masks(S, IdealKind.LEFT))
        and bool(zero_minimal_masks(S, IdealKind.RIGHT))
    )


def _group_with_zero_a(S):
    _need_zero(S, "group-with-zero test")
    return is_gamma_group_with_zero(S, S.universe)


def _group_with_zero_b(S):
    return S.n >= 2 and _left_0_simple_a(S) and _right_0_simple_a(S)


ROUTES: dict[str, tuple[Callable, Callable, bool]] = {
    "left_simple": (_left_simple_a, _left_simple_b, False),
    "right_simple": (_right_simple_a, _right_simple_b, False),
    "simple": (_simple_a, _simple_b, False),
    "left_0_simple": (_left_0_simple_a, _left_0_simple_b, True),
    "right_0_simple": (_right_0_simple_a, _right_0_simple_b, True),
    "zero_simple": (_0_simple_a, _0_simple_b, True),
    "completely_zero_simple": (_c0s_a, _c0s_b, True),
    "gamma_group_with_zero": (_group_with_zero_a, _group_with_zero_b, True),
}


def route_verdicts(S: GammaSemigroup, name: str) -> tuple[bool, bool]:
    """(route A, route B) for one predicate; raises NoZero where a zero is required."""
    a, b, _ = ROUTES[name]
    return S.cached(("routes", name), lambda: (bool(a(S)), bool(b(S))))


def _verdict(S: GammaSemigroup, name: str) -> bool:
    a, b = route_verdicts(S, name)
    if a != b:
        log.warning("%s: definitional route says %s, characterization says %s", name, a, b)
    return a


def is_left_simple(S: GammaSemigroup) -> bool:
    return _verdict(S, "left_simple")


def is_right_simple(S: GammaSemigroup) -> bool:
    return _verdict(S, "right_simple")


def is_simple(S: GammaSemigroup) -> bool:
    return _verdict(S, "simple")


def is_left_0_simple(S: GammaSemigroup) -> bool:
    return _verdict(S, "left_0_simple")


def is_right_0_simple(S: GammaSemigroup) -> bool:
    return _verdict(S, "right_0_simple")


def is_0_simple(S: GammaSemigroup) -> bool:
    return _verdict(S, "zero_simple")


def is_completely_0_simple(S: GammaSemigroup) -> bool:
    return _verdict(S, "completely_zero_simple")


def is_gamma_group_with_zero(S: GammaSemigroup, sub: ElementSet) -> bool:
    """On the restriction to ``sub``: ``[sub Γ s] = [s Γ sub] = sub`` for all nonzero s."""
    if S.zero is None:
        raise NoZero("group-with-zero test")
    if S.zero not in sub:
        raise NoZero("group-with-zero test (zero outside the subset)")
    if len(sub) < 2:
        return False
    R = restrict_to(S, sub)
    full = R.full_mask
    return all(R.col_masks[s] == full and R.row_masks[s] == full for s in range(R.n) if s != R.zero)


def gamma_group_with_zero_mask(S: GammaSemigroup, mask: int) -> bool:
    """Like :func:`is_gamma_group_with_zero` but False (not an error) when
    the subset is not closed or misses the zero."""
    sub = ElementSet(S.n, mask)
    try:
        return is_gamma_group_with_zero(S, sub)
    except (NotClosed, NoZero):
        return False


def d_class_of_nonzero_is_single(S: GammaSemigroup) -> bool:
    D = green.d_matrix(S)
    nz = _nonzero(S)
    return all(D[e, f] for e in nz for f in nz)


@dataclass(frozen=True)
class Flag:
    value: bool | None
    route: str


@dataclass
class Classification:
    flags: dict[str, Flag] = field(default_factory=dict)
    disagreements: list[tuple[str, bool, bool]] = field(default_factory=list)

    def __getitem__(self, name: str) -> bool | None:
        return self.flags[name].value


def classify(S: GammaSemigroup) -> Classification:
    out = Classification()
    for name, (_, _, needs_zero) in ROUTES.items():
        if needs_zero and S.zero is None:
            out.flags[name] = Flag(None, "n/a")
            continue
        a, b = route_verdicts(S, name)
        out.flags[name] = Flag(a, "definitional")
        if a != b:
            out.disagreements.append((name, a, b))
    return out
