"""Green's relations, the idempotent order and regularity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import GammaSemigroup, IdempotentMode, RegularMode


def _left_ext(S: GammaSemigroup) -> list[int]:
    # {e} ∪ [TΓe]
    return S.cached("lext", lambda: [(1 << e) | S.col_masks[e] for e in range(S.n)])


def _right_ext(S: GammaSemigroup) -> list[int]:
    return S.cached("rext", lambda: [(1 << e) | S.row_masks[e] for e in range(S.n)])


def l_related(S: GammaSemigroup, e: int, f: int) -> bool:
    ext = _left_ext(S)
    return ext[e] == ext[f]


def r_related(S: GammaSemigroup, e: int, f: int) -> bool:
    ext = _right_ext(S)
    return ext[e] == ext[f]


def _labels(keys: list[int]) -> np.ndarray:
    seen: dict[int, int] = {}
    return np.array([seen.setdefault(k, len(seen)) for k in keys], dtype=np.int64)


def _relation_matrix(labels: np.ndarray) -> np.ndarray:
    return labels[:, None] == labels[None, :]


def _compose(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    # (x, y) in first∘second iff some c has x first c and c second y
    return (first.astype(np.int64) @ second.astype(np.int64)) > 0


def d_matrix(S: GammaSemigroup) -> np.ndarray:
    """``D = L∘R`` as a boolean matrix."""

    def compute():
        L = _relation_matrix(_labels(_left_ext(S)))
        R = _relation_matrix(_labels(_right_ext(S)))
        return _compose(L, R)

    return S.cached("dmat", compute)


def d_related(S: GammaSemigroup, e: int, f: int) -> bool:
    return bool(d_matrix(S)[e, f])


@dataclass(frozen=True)
class GreenStructure:
    l_class_of: np.ndarray
    r_class_of: np.ndarray
    d_class_of: np.ndarray
    lr_equals_rl: bool
    d_is_equivalence: bool

    @property
    def l_count(self) -> int:
        return int(self.l_class_of.max()) + 1

    @property
    def r_count(self) -> int:
        return int(self.r_class_of.max()) + 1

    @property
    def d_count(self) -> int:
        return int(self.d_class_of.max()) + 1

    def classes(self, which: str) -> list[list[int]]:
        labels = {"L": self.l_class_of, "R": self.r_class_of, "D": self.d_class_of}[which]
        out: list[list[int]] = [[] for _ in range(int(labels.max()) + 1)]
        for e, c in enumerate(labels):
            out[int(c)].append(e)
        return out

    def egg_box(self, d_class: int) -> list[list[list[int]]]:
        """Rows are R-classes, columns L-classes, cells their intersections."""
        members = [e for e, c in enumerate(self.d_class_of) if c == d_class]
        rows = list(dict.fromkeys(int(self.r_class_of[e]) for e in members))
        cols = list(dict.fromkeys(int(self.l_class_of[e]) for e in members))
        grid = [[[] for _ in cols] for _ in rows]
        for e in members:
            grid[rows.index(int(self.r_class_of[e]))][cols.index(int(self.l_class_of[e]))].append(e)
        return grid


def green_structure(S: GammaSemigroup) -> GreenStructure:
    def compute():
        lab_l = _labels(_left_ext(S))
        lab_r = _labels(_right_ext(S))
        L = _relation_matrix(lab_l)
        R = _relation_matrix(lab_r)
        D = _compose(L, R)
        RL = _compose(R, L)
        # D classes from the transitive closure; d_is_equivalence records
        # whether L∘R already was one
        closure = D.copy()
        while True:
            nxt = _compose(closure, closure) | closure
            if (nxt == closure).all():
                break
            closure = nxt
        d_keys = [int(np.flatnonzero(closure[e])[0]) for e in range(S.n)]
        return GreenStructure(
            l_class_of=lab_l,
            r_class_of=lab_r,
            d_class_of=_labels(d_keys),
            lr_equals_rl=bool((D == RL).all()),
            d_is_equivalence=bool((D == D.T).all() and (closure == D).all()),
        )

    return S.cached("green", compute)


# -- idempotents ---------------------------------------------------------------


def idempotents(S: GammaSemigroup, mode: IdempotentMode = IdempotentMode.EXISTS) -> list[int]:
    return S.cached(("idem", mode), lambda: [e for e in range(S.n) if S.is_idempotent(e, mode)])


def idempotent_le(S: GammaSemigroup, e: int, f: int) -> bool:
    """``e <= f`` iff ``[e x f] = [f y e] = e`` for some x, y in Gamma."""
    t = S.table
    return bool((t[e, :, f] == e).any() and (t[f, :, e] == e).any())


@dataclass(frozen=True)
class IdempotentOrder:
    idempotents: tuple[int, ...]
    le: np.ndarray
    primitive: tuple[bool, ...]

    def is_antisymmetric(self) -> bool:
        both = self.le & self.le.T
        np.fill_diagonal(both, False)
        return not both.any()

    def is_transitive(self) -> bool:
        le = self.le.astype(np.int64)
        return not (((le @ le) > 0) & ~self.le).any()


def idempotent_order(S: GammaSemigroup) -> IdempotentOrder:
    def compute():
        ids = idempotents(S)
        k = len(ids)
        le = np.zeros((k, k), dtype=bool)
        for i, e in enumerate(ids):
            for j, f in enumerate(ids):
                le[i, j] = idempotent_le(S, e, f)
        prim = []
        for i, e in enumerate(ids):
            if e == S.zero:
                prim.append(False)
                continue
            below = [j for j in range(k) if j != i and ids[j] != S.zero and le[j, i]]
            # minimal in the preorder: everything below e is also above it
            prim.append(all(le[i, j] for j in below))
        return IdempotentOrder(tuple(ids), le, tuple(prim))

    return S.cached("idem-order", compute)


def primitive_idempotents(S: GammaSemigroup) -> list[int]:
    """Nonzero idempotents minimal among the nonzero idempotents.

    Minimality is taken in the preorder sense: ``e`` is primitive when every
    nonzero idempotent ``f <= e`` also satisfies ``e <= f``.  On instances where
    the order is antisymmetric this is the usual "no ``f != e`` below ``e``".
    """
    order = idempotent_order(S)
    return [e for e, p in zip(order.idempotents, order.primitive) if p]


def primitive_idempotents_strict(S: GammaSemigroup) -> list[int]:
    """Nonzero idempotents with no other nonzero idempotent below them."""
    order = idempotent_order(S)
    ids = order.idempotents
    out = []
    for i, e in enumerate(ids):
        if e == S.zero:
            continue
        if not any(j != i and ids[j] != S.zero and order.le[j, i] for j in range(len(ids))):
            out.append(e)
    return out


# -- regularity ----------------------------------------------------------------


def regular_elements(S: GammaSemigroup, mode: RegularMode = RegularMode.STANDARD) -> list[int]:
    return S.cached(("regular", mode), lambda: [e for e in range(S.n) if S.is_regular(e, mode)])


def is_regular_class_consistent(S: GammaSemigroup) -> bool:
    """Standard regularity is constant on every D-class."""
    regular = set(regular_elements(S))
    d = green_structure(S).d_class_of
    flag: dict[int, bool] = {}
    for e in range(S.n):
        c = int(d[e])
        if flag.setdefault(c, e in regular) != (e in regular):
            return False
    return True
