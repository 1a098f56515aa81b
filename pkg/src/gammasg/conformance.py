"""Executable theorem registry, corpus runner and witness replay.

Each claim is a function from an instance to an :class:`Outcome`: not
applicable (hypotheses fail), pass, or fail with a witness dictionary.
Claims marked ``SUSPECT`` are expected to be refutable; ``MONITOR``
entries track alternative readings and side properties.  Neither kind
fails a run.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels, green
from .classify import (
    ROUTES,
    d_class_of_nonzero_is_single,
    gamma_group_with_zero_mask,
    route_verdicts,
)
from .core import ElementSet, GammaSemigroup, RegularMode, bits
from .enumeration import CorpusInstance, CorpusSpec, build_corpus
from .errors import UnknownCheck
from .ideals import (
    IdealKind,
    ideal_masks,
    is_ideal_mask,
    least_ideal,
    minimal_masks,
    principal_mask,
    project_mask,
    lift_mask,
    restrict_to,
    zero_minimal_masks,
)
from .prime import (
    PrimeVerdict,
    ideal_products,
    is_prime_by_elements,
    is_prime_commutative,
    is_prime_ideal,
    prime_restricted,
)

LEFT, RIGHT, TWO = IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED
SUBSET_SCAN_MAX_N = 12
WITNESS_CAP = 5


class Expected(enum.Enum):
    PASS = "expected-pass"
    SUSPECT = "suspect"
    MONITOR = "monitor"


@dataclass(frozen=True)
class Outcome:
    applicable: bool
    passed: bool = True
    witness: dict | None = None


NA = Outcome(False)
OK = Outcome(True)


def fail(**witness) -> Outcome:
    return Outcome(True, False, witness)


def _fmt(S: GammaSemigroup, mask: int) -> str:
    return S.format_set(ElementSet(S.n, mask))


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


def _zmask(S: GammaSemigroup) -> int:
    return 1 << S.zero


def _nonzero_bits(S: GammaSemigroup, mask: int) -> list[int]:
    return [e for e in bits(mask) if e != S.zero]


def _left_ideals_within(S: GammaSemigroup, mask: int) -> list[int]:
    return [x for x in ideal_masks(S, LEFT) if _subset(x, mask)]


def _is_0_simple(S: GammaSemigroup) -> bool:
    return route_verdicts(S, "zero_simple")[0]


def _is_c0s(S: GammaSemigroup) -> bool:
    return route_verdicts(S, "completely_zero_simple")[0]


def _has_min_left_and_right(S: GammaSemigroup) -> bool:
    return bool(zero_minimal_masks(S, LEFT)) and bool(zero_minimal_masks(S, RIGHT))


# -- claims: simplicity -------------------------------------------------------


def check_T2_1(S):
    regular = set(green.regular_elements(S))
    d = green.green_structure(S).d_class_of
    for e in sorted(regular):
        for f in range(S.n):
            if d[f] == d[e] and f not in regular:
                return fail(regular=S.element_label(e), irregular=S.element_label(f))
    return OK


def _route_pair(name):
    def check(S):
        if ROUTES[name][2] and S.zero is None:
            return NA
        a, b = route_verdicts(S, name)
        return OK if a == b else fail(definitional=a, characterization=b)

    return check


check_L3_1 = _route_pair("left_simple")
check_P3_1 = _route_pair("simple")


def check_C3_1(S):
    left_simple = route_verdicts(S, "left_simple")[0]
    # every f is some [e g h], for every e
    reach = all(r == S.full_mask for r in S.row_masks)
    if left_simple == reach:
        return OK
    return fail(left_simple=left_simple, every_e_gamma_T_is_T=reach)


def check_C3_2(S):
    if not route_verdicts(S, "simple")[0]:
        return NA
    for e in range(S.n):
        if S.col_masks[e] != S.full_mask:
            return fail(e=S.element_label(e), side="T Gamma e", got=_fmt(S, S.col_masks[e]))
        if S.row_masks[e] != S.full_mask:
            return fail(e=S.element_label(e), side="e Gamma T", got=_fmt(S, S.row_masks[e]))
    return OK


check_T3_1 = _route_pair("zero_simple")


def _gamma_images(S):
    return [S.prod(S.full_mask, S.full_mask, 1 << g) for g in range(S.m)]


def check_P3_2(S):
    if S.zero is None or not _is_0_simple(S):
        return NA
    z = _zmask(S)
    for g, img in enumerate(_gamma_images(S)):
        if img != z and img != S.full_mask:
            return fail(gamma=S.gamma_label(g), T_gamma_T=_fmt(S, img))
    return OK


def check_P3_2_all_gamma(S):
    if S.zero is None or not _is_0_simple(S):
        return NA
    for g, img in enumerate(_gamma_images(S)):
        if img != S.full_mask:
            return fail(gamma=S.gamma_label(g), T_gamma_T=_fmt(S, img))
    return OK


def check_T3_2(S):
    if S.n > SUBSET_SCAN_MAX_N:
        return NA

    def compute():
        col = _kernels.subset_unions(np.array(S.col_masks, dtype=np.int64))
        row = _kernels.subset_unions(np.array(S.row_masks, dtype=np.int64))
        mid = _kernels.subset_unions(np.array(S.mid_masks, dtype=np.int64))
        return col, row, mid

    col, row, mid = S.cached("subset-unions", compute)
    masks = np.arange(1 << S.n, dtype=np.int64)
    ideal = ((col | row) & ~masks) == 0
    contained = (mid & ~masks) == 0
    bad = np.flatnonzero(ideal != contained)
    bad = bad[bad > 0]
    if bad.size == 0:
        return OK
    E = int(bad[0])
    return fail(
        E=_fmt(S, E),
        direction="if" if contained[E] else "only-if",
        T_Gamma_E_Gamma_T=_fmt(S, int(mid[E])),
        T_Gamma_E=_fmt(S, int(col[E])),
        E_Gamma_T=_fmt(S, int(row[E])),
    )


# -- claims: minimal and 0-minimal ideals ---------------------------------------


def _single_products(S, mask):
    """(gamma, f, [mask gamma f]) for all gamma, f."""
    for g in range(S.m):
        for f in range(S.n):
            yield g, f, S.prod(mask, 1 << f, 1 << g)


def check_L4_1(S):
    least = least_ideal(S, LEFT)
    if not least.is_ideal:
        return NA
    h = least.members.mask
    for g, f, img in _single_products(S, h):
        if img != h:
            return fail(H=_fmt(S, h), gamma=S.gamma_label(g), f=S.element_label(f), H_gamma_f=_fmt(S, img))
    return OK


def check_L4_1_minimal(S):
    mins = set(minimal_masks(S, LEFT))
    for h in sorted(mins):
        for g, f, img in _single_products(S, h):
            if img not in mins:
                return fail(H=_fmt(S, h), gamma=S.gamma_label(g), f=S.element_label(f), H_gamma_f=_fmt(S, img))
    return OK


def _restricted_simple(S, mask):
    R = restrict_to(S, ElementSet(S.n, mask))
    return route_verdicts(R, "simple")[0]


def check_T4_1(S):
    least = least_ideal(S, TWO)
    if not least.is_ideal:
        return NA
    a = least.members.mask
    return OK if _restricted_simple(S, a) else fail(A=_fmt(S, a))


def check_L4_2(S):
    c = least_ideal(S, TWO).members.mask
    if not c:
        return fail(C="{}")
    for x in bits(c):
        p = principal_mask(S, x, TWO)
        if p != c:
            return fail(C=_fmt(S, c), c=S.element_label(x), principal=_fmt(S, p))
    if not _restricted_simple(S, c):
        return fail(C=_fmt(S, c), restricted_simple=False)
    return OK


def check_L4_3(S):
    if S.zero is None:
        return NA
    z = _zmask(S)
    hyps = [h for h in zero_minimal_masks(S, LEFT) if S.prod(h, h) != z]
    if not hyps:
        return NA
    for h in hyps:
        for e in _nonzero_bits(S, h):
            if S.col_masks[e] != h:
                return fail(H=_fmt(S, h), e=S.element_label(e), T_Gamma_e=_fmt(S, S.col_masks[e]))
    return OK


def check_L4_4(S):
    if S.zero is None:
        return NA
    hs = zero_minimal_masks(S, LEFT)
    if not hs:
        return NA
    z = _zmask(S)
    mins = set(hs)
    for h in hs:
        for g, f, img in _single_products(S, h):
            if img != z and img not in mins:
                return fail(H=_fmt(S, h), gamma=S.gamma_label(g), f=S.element_label(f), H_gamma_f=_fmt(S, img))
    return OK


def check_T4_2(S):
    if S.zero is None:
        return NA
    hs = zero_minimal_masks(S, TWO)
    if not hs:
        return NA
    z = _zmask(S)
    for h in hs:
        if S.prod(h, h) == z:
            continue
        R = restrict_to(S, ElementSet(S.n, h))
        if not route_verdicts(R, "zero_simple")[0]:
            return fail(H=_fmt(S, h), H_Gamma_H=_fmt(S, S.prod(h, h)))
    return OK


def _left_mins_inside(S, h):
    return [x for x in zero_minimal_masks(S, LEFT) if _subset(x, h)]


def check_T4_3(S):
    if S.zero is None:
        return NA
    hyps = [h for h in zero_minimal_masks(S, TWO) if _left_mins_inside(S, h)]
    if not hyps:
        return NA
    for h in hyps:
        u = 0
        for x in _left_mins_inside(S, h):
            u |= x
        if u != h:
            return fail(H=_fmt(S, h), union=_fmt(S, u))
    return OK


def check_L4_5(S):
    if S.zero is None:
        return NA
    z = _zmask(S)
    hyps = [h for h in zero_minimal_masks(S, TWO) if S.prod(h, h) != z]
    if not hyps:
        return NA
    for h in hyps:
        for m in _left_ideals_within(S, h):
            if m != z and S.prod(m, m) == z:
                return fail(H=_fmt(S, h), M=_fmt(S, m))
    return OK


def check_T4_4(S):
    if S.zero is None:
        return NA
    z = _zmask(S)
    hyps = [h for h in zero_minimal_masks(S, TWO) if S.prod(h, h) != z and _left_mins_inside(S, h)]
    if not hyps:
        return NA
    for h in hyps:
        R = restrict_to(S, ElementSet(S.n, h))
        for sub in ideal_masks(R, LEFT):
            lifted = lift_mask(R, sub)
            if not is_ideal_mask(S, lifted, LEFT):
                return fail(H=_fmt(S, h), left_ideal_of_H=_fmt(S, lifted))
    return OK


# -- claims: completely 0-simple ----------------------------------------------


def check_L5_1(S):
    if S.zero is None:
        return NA
    gs = green.green_structure(S)
    any_h = False
    for kind, labels in ((LEFT, gs.l_class_of), (RIGHT, gs.r_class_of)):
        for h in zero_minimal_masks(S, kind):
            any_h = True
            nz = _nonzero_bits(S, h)
            cls = {int(labels[e]) for e in nz}
            if len(cls) != 1:
                return fail(side=kind.value, H=_fmt(S, h), classes=len(cls))
            label = cls.pop()
            members = {e for e in range(S.n) if labels[e] == label}
            if members != set(nz):
                return fail(side=kind.value, H=_fmt(S, h), cls=_fmt(S, sum(1 << e for e in members)))
    return OK if any_h else NA


def _all_nonzero_regular(S, mode=RegularMode.STANDARD):
    reg = set(green.regular_elements(S, mode))
    return [e for e in range(S.n) if e != S.zero and e not in reg]


def check_T5_1(S):
    if S.zero is None or not _is_c0s(S):
        return NA
    if not d_class_of_nonzero_is_single(S):
        return fail(single_d_class=False)
    bad = _all_nonzero_regular(S)
    if bad:
        return fail(irregular=S.element_label(bad[0]))
    return OK


def check_T5_1_literal(S):
    if S.zero is None or not _is_c0s(S):
        return NA
    bad = _all_nonzero_regular(S, RegularMode.LITERAL)
    return fail(irregular=S.element_label(bad[0])) if bad else OK


def _l52_hyp(S):
    return S.zero is not None and _is_0_simple(S) and _has_min_left_and_right(S)


def check_L5_2(S):
    if not _l52_hyp(S):
        return NA
    rights = zero_minimal_masks(S, RIGHT)
    for h in zero_minimal_masks(S, LEFT):
        if not any(S.prod(h, i) == S.full_mask for i in rights):
            return fail(H=_fmt(S, h))
    return OK


def _l53(S, printed):
    if S.zero is None or not _is_0_simple(S):
        return NA
    hs = zero_minimal_masks(S, LEFT)
    if not hs:
        return NA
    for h in hs:
        for g in _nonzero_bits(S, h):
            img = S.prod(h, 1 << g) if printed else S.col_masks[g]
            if img != h:
                return fail(H=_fmt(S, h), g=S.element_label(g), image=_fmt(S, img))
    return OK


def check_L5_3(S):
    return _l53(S, printed=False)


def check_L5_3_printed(S):
    return _l53(S, printed=True)


def _hi_pairs(S):
    """0-minimal (left H, right I) pairs with [HΓI] != {0}."""
    z = _zmask(S)
    for h in zero_minimal_masks(S, LEFT):
        for i in zero_minimal_masks(S, RIGHT):
            if S.prod(h, i) != z:
                yield h, i


def check_L5_4(S):
    if S.zero is None or not _is_0_simple(S):
        return NA
    pairs = list(_hi_pairs(S))
    if not pairs:
        return NA
    for h, i in pairs:
        ih = S.prod(i, h)
        if not gamma_group_with_zero_mask(S, ih):
            return fail(H=_fmt(S, h), I=_fmt(S, i), I_Gamma_H=_fmt(S, ih), part="group-with-zero")
        if ih != h & i:
            return fail(H=_fmt(S, h), I=_fmt(S, i), I_Gamma_H=_fmt(S, ih), part="equals-intersection")
    return OK


def _identity_gammas(S, e, mask):
    """Gammas alpha with [e alpha e] = e and [e alpha s] = s = [s alpha e] for all s in mask."""
    t = S.table
    out = []
    for a in range(S.m):
        if t[e, a, e] != e:
            continue
        if all(t[e, a, s] == s and t[s, a, e] == s for s in bits(mask)):
            out.append(a)
    return out


def check_L5_5(S):
    if S.zero is None or not _is_0_simple(S):
        return NA
    applicable = False
    prims = set(green.primitive_idempotents(S))
    for h, i in _hi_pairs(S):
        ih = S.prod(i, h)
        for e in _nonzero_bits(S, ih):
            if not _identity_gammas(S, e, ih):
                continue
            applicable = True
            e_mask = 1 << e
            parts = {
                "I=e Gamma T": S.row_masks[e] == i,
                "H=T Gamma e": S.col_masks[e] == h,
                "I Gamma H=e Gamma T Gamma e": S.prod(S.row_masks[e], e_mask) == ih,
                "e primitive": e in prims,
            }
            for name, ok in parts.items():
                if not ok:
                    return fail(H=_fmt(S, h), I=_fmt(S, i), e=S.element_label(e), part=name)
    return OK if applicable else NA


def check_L5_6(S):
    if S.zero is None or not _is_c0s(S):
        return NA
    lefts = set(zero_minimal_masks(S, LEFT))
    rights = set(zero_minimal_masks(S, RIGHT))
    for e in green.primitive_idempotents(S):
        h, i = S.col_masks[e], S.row_masks[e]
        if h not in lefts:
            return fail(e=S.element_label(e), part="T Gamma e 0-minimal left", H=_fmt(S, h))
        if i not in rights:
            return fail(e=S.element_label(e), part="e Gamma T 0-minimal right", I=_fmt(S, i))
        ih = S.prod(i, h)
        if not gamma_group_with_zero_mask(S, ih):
            return fail(e=S.element_label(e), part="group-with-zero", I_Gamma_H=_fmt(S, ih))
        if not _identity_gammas(S, e, ih):
            return fail(e=S.element_label(e), part="identity", I_Gamma_H=_fmt(S, ih))
    return OK


def check_T5_2(S):
    if S.zero is None or not _is_0_simple(S):
        return NA
    a, b = route_verdicts(S, "completely_zero_simple")
    return OK if a == b else fail(primitive_idempotent_route=a, zero_minimal_route=b)


def check_T5_2_strict(S):
    if S.zero is None or not _is_0_simple(S):
        return NA
    a = bool(green.primitive_idempotents_strict(S))
    b = _has_min_left_and_right(S)
    return OK if a == b else fail(strict_primitive_route=a, zero_minimal_route=b)


def check_C5_2(S):
    if S.zero is None or not _is_c0s(S):
        return NA
    for kind in (LEFT, RIGHT):
        u = 0
        for x in zero_minimal_masks(S, kind):
            u |= x
        if u != S.full_mask:
            return fail(side=kind.value, union=_fmt(S, u))
    return OK


# -- claims: primes -------------------------------------------------------------


def _two_sided(S):
    return ideal_masks(S, TWO)


def check_T6_1(S):
    for q in _two_sided(S):
        Q = ElementSet(S.n, q)
        a = is_prime_ideal(S, Q).is_prime
        b = is_prime_by_elements(S, Q).is_prime
        if a != b:
            return fail(Q=_fmt(S, q), definitional=a, element_pairs=b)
    return OK


def check_T6_2(S):
    if not S.is_commutative():
        return NA
    for q in _two_sided(S):
        Q = ElementSet(S.n, q)
        a = is_prime_ideal(S, Q).is_prime
        b = is_prime_commutative(S, Q).is_prime
        if a != b:
            return fail(Q=_fmt(S, q), definitional=a, element_products=b)
    return OK


def _primes(S):
    return S.cached("primes", lambda: [q for q in _two_sided(S) if is_prime_ideal(S, ElementSet(S.n, q)).is_prime])


def check_T6_3(S):
    for h in _two_sided(S):
        for q in _primes(S):
            v = prime_restricted(S, ElementSet(S.n, h), ElementSet(S.n, q))
            if not v.is_prime:
                E, F = v.witness
                return fail(H=_fmt(S, h), Q=_fmt(S, q), E=_fmt(S, E.mask), F=_fmt(S, F.mask))
    return OK


def _is_prime_mask(S, mask):
    return is_ideal_mask(S, mask, TWO) and is_prime_ideal(S, ElementSet(S.n, mask)).is_prime


def check_T6_4(S):
    primes = _primes(S)
    chains = [(p, q) for p, q in itertools.combinations(primes, 2) if _subset(p, q) or _subset(q, p)]
    if all(_subset(p, q) or _subset(q, p) for p, q in itertools.combinations(primes, 2)) and len(primes) > 2:
        chains.append(tuple(primes))
    if not chains:
        return NA
    for chain in chains:
        u = 0
        x = S.full_mask
        for q in chain:
            u |= q
            x &= q
        for which, mask in (("union", u), ("intersection", x)):
            if not _is_prime_mask(S, mask):
                return fail(chain=" < ".join(_fmt(S, q) for q in chain), part=which)
    return OK


def check_T6_4_incomparable(S):
    primes = _primes(S)
    pairs = [(p, q) for p, q in itertools.combinations(primes, 2) if not (_subset(p, q) or _subset(q, p))]
    if not pairs:
        return NA
    for p, q in pairs:
        for which, mask in (("union", p | q), ("intersection", p & q)):
            if not _is_prime_mask(S, mask):
                return fail(Q1=_fmt(S, p), Q2=_fmt(S, q), part=which, result=_fmt(S, mask))
    return OK


# -- monitors on definitions ----------------------------------------------------


def check_D_lr_rl(S):
    return OK if green.green_structure(S).lr_equals_rl else fail(lr_equals_rl=False)


def check_D_order(S):
    order = green.idempotent_order(S)
    keep = [i for i, e in enumerate(order.idempotents) if e != S.zero]
    if len(keep) < 2:
        return NA
    le = order.le[np.ix_(keep, keep)]
    ids = [order.idempotents[i] for i in keep]
    for a, b in itertools.permutations(range(len(ids)), 2):
        if le[a, b] and le[b, a]:
            return fail(property="antisymmetry", e=S.element_label(ids[a]), f=S.element_label(ids[b]))
    for a, b, c in itertools.permutations(range(len(ids)), 3):
        if le[a, b] and le[b, c] and not le[a, c]:
            return fail(property="transitivity", e=S.element_label(ids[a]), f=S.element_label(ids[b]), g=S.element_label(ids[c]))
    return OK


def check_T2_1_literal(S):
    regular = set(green.regular_elements(S, RegularMode.LITERAL))
    d = green.green_structure(S).d_class_of
    for e in sorted(regular):
        for f in range(S.n):
            if d[f] == d[e] and f not in regular:
                return fail(regular=S.element_label(e), irregular=S.element_label(f))
    return OK


# -- registry ---------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    requires: str
    expected: Expected
    check: Callable[[GammaSemigroup], Outcome]
    notes: str = ""


_P, _S, _M = Expected.PASS, Expected.SUSPECT, Expected.MONITOR

_REGISTRY: tuple[TheoremCheck, ...] = (
    TheoremCheck("T2.1", "if e is regular then every member of the D-class of e is regular",
                 "-", _P, check_T2_1, "standard regularity, D = L∘R"),
    TheoremCheck("L3.1", "left simple <=> [TΓe] = T for every e", "-", _P, check_L3_1),
    TheoremCheck("C3.1", "left simple <=> for all e, f there are g in Γ, h in T with [e g h] = f",
                 "-", _S, check_C3_1, "as printed the condition says [eΓT] = T, a right-sided statement"),
    TheoremCheck("P3.1", "simple <=> [TΓeΓT] = T for every e", "-", _P, check_P3_1),
    TheoremCheck("C3.2", "simple => [TΓe] = T and [eΓT] = T for every e", "simple", _S, check_C3_2,
                 "two-sided simplicity does not force one-sided simplicity"),
    TheoremCheck("T3.1", "0-simple <=> [TΓT] != {0} and [TΓeΓT] = T for every nonzero e", "zero", _P, check_T3_1),
    TheoremCheck("P3.2", "0-simple => [TγT] = T for every gamma with [TγT] != {0}", "zero, 0-simple", _P,
                 check_P3_2, "'non-zero element of Γ' read as a gamma not acting as zero"),
    TheoremCheck("T3.2", "nonempty E is a two-sided ideal <=> [TΓEΓT] ⊆ E", "n <= 12", _S, check_T3_2,
                 "the 'if' direction fails on nilpotent tables"),
    TheoremCheck("L4.1", "H least left ideal => [H γ f] is the least left ideal for all gamma, f",
                 "least left ideal exists", _P, check_L4_1),
    TheoremCheck("T4.1", "the least two-sided ideal is a simple Γ-semigroup", "least ideal exists", _P, check_T4_1),
    TheoremCheck("L4.2", "the intersection C of all two-sided ideals satisfies (c) = C and is simple",
                 "-", _P, check_L4_2),
    TheoremCheck("L4.3", "H 0-minimal left ideal, [HΓH] != {0} => H = [TΓe] for every nonzero e in H",
                 "zero", _P, check_L4_3),
    TheoremCheck("L4.4", "H 0-minimal left ideal => [H γ f] is {0} or a 0-minimal left ideal", "zero", _P, check_L4_4),
    TheoremCheck("T4.2", "H 0-minimal two-sided ideal => [HΓH] = {0} or H is 0-simple", "zero", _P, check_T4_2,
                 "conclusion read as 0-simple on the restriction"),
    TheoremCheck("T4.3", "H 0-minimal two-sided ideal containing a 0-minimal left ideal => "
                 "H is the union of the 0-minimal left ideals inside it", "zero", _P, check_T4_3),
    TheoremCheck("L4.5", "H 0-minimal two-sided, [HΓH] != {0} => [MΓM] != {0} for nonzero left ideals M ⊆ H",
                 "zero", _P, check_L4_5),
    TheoremCheck("T4.4", "H as in L4.5 containing a 0-minimal left ideal => every left ideal of H is a left ideal of T",
                 "zero", _P, check_T4_4),
    TheoremCheck("L5.1", "H 0-minimal left (right) ideal => H minus 0 is one L-class (R-class)",
                 "zero", _P, check_L5_1),
    TheoremCheck("T5.1", "completely 0-simple => nonzero elements form one D-class and are regular",
                 "zero, completely 0-simple", _P, check_T5_1),
    TheoremCheck("L5.2", "0-simple with 0-minimal left and right ideals => each 0-minimal left H has a "
                 "0-minimal right I with [HΓI] = T", "zero, 0-simple", _P, check_L5_2),
    TheoremCheck("L5.3", "H 0-minimal left ideal of a 0-simple T, g in H minus 0 => [TΓg] = H",
                 "zero, 0-simple", _P, check_L5_3, "proof form; the printed [HΓg] = H is a monitor"),
    TheoremCheck("L5.4", "0-simple, H, I 0-minimal left/right with [HΓI] != {0} => [IΓH] is a Γ-group "
                 "with zero and equals I ∩ H", "zero, 0-simple", _P, check_L5_4),
    TheoremCheck("L5.5", "as L5.4 with e a nonzero idempotent identity of [IΓH] => I = [eΓT], H = [TΓe], "
                 "[IΓH] = [eΓTΓe], e primitive", "zero, 0-simple, identity exists", _P, check_L5_5),
    TheoremCheck("L5.6", "completely 0-simple, e primitive => [TΓe], [eΓT] are 0-minimal left/right and "
                 "[eΓTΓT Γ e] is a Γ-group with zero with identity e", "zero, completely 0-simple", _P, check_L5_6),
    TheoremCheck("T5.2", "0-simple => (completely 0-simple <=> a 0-minimal left and a 0-minimal right ideal exist)",
                 "zero, 0-simple", _P, check_T5_2, "primitive = minimal in the idempotent preorder"),
    TheoremCheck("C5.2", "completely 0-simple => T is the union of its 0-minimal left (right) ideals",
                 "zero, completely 0-simple", _P, check_C5_2),
    TheoremCheck("T6.1", "Q prime <=> (e)Γ(f) ⊆ Q implies e in Q or f in Q", "-", _P, check_T6_1),
    TheoremCheck("T6.2", "commutative: Q prime <=> [eΓf] ⊆ Q implies e in Q or f in Q", "commutative", _P, check_T6_2),
    TheoremCheck("T6.3", "H two-sided ideal, Q prime => H ∩ Q is a prime ideal of H", "-", _P, check_T6_3),
    TheoremCheck("T6.4", "union and intersection of a chain of prime ideals are prime", "a chain of primes", _P, check_T6_4,
                 "the ascending/descending chain hypothesis is read as a chain under inclusion"),
)

_MONITORS: tuple[TheoremCheck, ...] = (
    TheoremCheck("P3.2~all-gamma", "0-simple => [TγT] = T for every gamma", "zero, 0-simple", _M, check_P3_2_all_gamma),
    TheoremCheck("L4.1~minimal", "H minimal left ideal => [H γ f] is a minimal left ideal", "-", _M, check_L4_1_minimal),
    TheoremCheck("L5.3~printed", "0-simple, H 0-minimal left, g in H minus 0 => [HΓg] = H", "zero, 0-simple", _M,
                 check_L5_3_printed),
    TheoremCheck("T5.1~literal-regular", "completely 0-simple => every nonzero e has [eαe] = e for some alpha",
                 "zero, completely 0-simple", _M, check_T5_1_literal),
    TheoremCheck("T5.2~strict-primitive", "T5.2 with primitive = no other nonzero idempotent below",
                 "zero, 0-simple", _M, check_T5_2_strict),
    TheoremCheck("T2.1~literal-regular", "regularity as [eαe] = e is constant on D-classes", "-", _M,
                 check_T2_1_literal),
    TheoremCheck("T6.4~incomparable", "union and intersection of two incomparable primes are prime",
                 "two incomparable primes", _M, check_T6_4_incomparable),
    TheoremCheck("D.LR=RL", "L∘R = R∘L", "-", _M, check_D_lr_rl),
    TheoremCheck("D.order", "the idempotent order is antisymmetric and transitive on nonzero idempotents",
                 "two nonzero idempotents", _M, check_D_order),
)

_BY_ID = {c.id: c for c in _REGISTRY + _MONITORS}


def registry() -> list[TheoremCheck]:
    """Every encoded claim, in a fixed order."""
    return list(_REGISTRY)


def monitors() -> list[TheoremCheck]:
    return list(_MONITORS)


def lookup(check_id: str) -> TheoremCheck:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None


def all_ids() -> list[str]:
    return [c.id for c in _REGISTRY + _MONITORS]


# -- running ------------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    cid: str
    check_id: str
    seq: int
    family: str
    instance: GammaSemigroup
    witness: dict

    def witness_text(self) -> str:
        return json.dumps(self.witness, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


@dataclass
class Row:
    applicable: int = 0
    passed: int = 0
    failed: int = 0
    first_witness: Counterexample | None = None


@dataclass
class TheoremReport:
    checks: list[TheoremCheck]
    instances: int = 0
    rows: dict[tuple[str, str], Row] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)

    def total(self, check_id: str) -> Row:
        out = Row()
        firsts = []
        for (cid, _), row in self.rows.items():
            if cid != check_id:
                continue
            out.applicable += row.applicable
            out.passed += row.passed
            out.failed += row.failed
            if row.first_witness is not None:
                firsts.append(row.first_witness)
        if firsts:
            out.first_witness = min(firsts, key=lambda c: c.seq)
        return out

    def status(self, check: TheoremCheck) -> str:
        row = self.total(check.id)
        if row.applicable == 0:
            return "vacuous"
        if row.failed == 0:
            return "pass"
        return "FAIL" if check.expected is Expected.PASS else "refuted"

    @property
    def failures(self) -> list[str]:
        """ExpectedPass checks with at least one violation."""
        return [c.id for c in self.checks if c.expected is Expected.PASS and self.total(c.id).failed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counterexample(self, cid: str) -> Counterexample:
        for c in self.counterexamples:
            if c.cid == cid:
                return c
        raise KeyError(cid)

    def witnesses_for(self, check_id: str) -> list[Counterexample]:
        return [c for c in self.counterexamples if c.check_id == check_id]

    def to_tsv(self) -> str:
        lines = ["id\tclass\tapplicable\tpassed\tfailed\tfirst-witness\tstatus"]
        classes = sorted({k for _, k in self.rows})
        for check in self.checks:
            for klass in classes + ["*"]:
                row = self.total(check.id) if klass == "*" else self.rows.get((check.id, klass))
                if row is None:
                    continue
                w = row.first_witness
                wtext = "-" if w is None else f"{w.cid} seq={w.seq} {w.family} {w.witness_text()}"
                if klass == "*":
                    status = self.status(check)
                elif row.applicable == 0:
                    status = "vacuous"
                else:
                    status = "pass" if row.failed == 0 else (
                        "FAIL" if check.expected is Expected.PASS else "refuted")
                lines.append(
                    f"{check.id}\t{klass}\t{row.applicable}\t{row.passed}\t{row.failed}\t{wtext}\t{status}"
                )
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        out = [f"instances: {self.instances}"]
        for check in self.checks:
            row = self.total(check.id)
            out.append(
                f"{check.id:<22} {check.expected.value:<13} applicable={row.applicable:<6} "
                f"passed={row.passed:<6} failed={row.failed:<5} {self.status(check)}"
            )
        return "\n".join(out)


def select(check_ids: Iterable[str] | None = None, include_monitors: bool = True) -> list[TheoremCheck]:
    if check_ids is None:
        return registry() + (monitors() if include_monitors else [])
    return [lookup(c) for c in check_ids]


def evaluate(check: TheoremCheck, S: GammaSemigroup) -> Outcome:
    return check.check(S)


def run(
    corpus: CorpusSpec | Sequence[CorpusSpec] | Sequence[CorpusInstance],
    check_ids: Iterable[str] | None = None,
    witness_cap: int = WITNESS_CAP,
    progress: Callable[[int, int], None] | None = None,
) -> TheoremReport:
    """Evaluate the selected checks on every instance of a corpus."""
    checks = select(check_ids)
    if isinstance(corpus, CorpusSpec) or (corpus and isinstance(corpus[0], CorpusSpec)):
        corpus = build_corpus(corpus)
    report = TheoremReport(checks)
    per_check: dict[str, int] = {}
    per_row: dict[tuple[str, str], int] = {}
    for item in corpus:
        report.instances += 1
        for check in checks:
            out = check.check(item.instance)
            row = report.rows.setdefault((check.id, item.klass), Row())
            if not out.applicable:
                continue
            row.applicable += 1
            if out.passed:
                row.passed += 1
                continue
            row.failed += 1
            key = (check.id, item.klass)
            k = per_row.get(key, 0)
            if k < witness_cap:
                per_row[key] = k + 1
                n = per_check.get(check.id, 0)
                per_check[check.id] = n + 1
                cex = Counterexample(f"{check.id}#{n}", check.id, item.seq, item.family, item.instance, out.witness)
                report.counterexamples.append(cex)
                if row.first_witness is None:
                    row.first_witness = cex
        if progress is not None:
            progress(report.instances, len(corpus))
    return report


def replay(report: TheoremReport, cid: str) -> bool:
    """Re-run one stored counterexample; True iff the violation reproduces."""
    cex = report.counterexample(cid)
    return replay_instance(cex.check_id, cex.instance)


def replay_instance(check_id: str, S: GammaSemigroup) -> bool:
    out = lookup(check_id).check(S)
    return out.applicable and not out.passed
