"""Finite Gamma-semigroups as ternary lookup tables, plus subset arithmetic.

A Gamma-semigroup here is a carrier ``T = {0..n-1}``, a sandwich set
``Gamma = {0..m-1}`` and a table ``t[a, g, b] = [a g b]`` satisfying
``[[a x b] y c] = [a x [b y c]]``.  Subsets of the carrier are
:class:`ElementSet` values backed by an integer bitmask.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from typing import Any, Callable

import numpy as np

from . import _kernels
from .errors import BadZero, IndexOutOfRange, NotAssociative, ShapeError


class IdempotentMode(enum.Enum):
    EXISTS = "exists"
    FORALL = "forall"


class RegularMode(enum.Enum):
    STANDARD = "standard"
    LITERAL = "literal"


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    return list(_bits(mask))


class ElementSet:
    """A subset of a carrier of size ``n``.

    Stored as a bitmask; ``members`` gives the dense boolean vector.  Sets
    combine only with sets over the same carrier size.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} has bits outside a carrier of size {n}")
        self.n = n
        self.mask = int(mask)

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> ElementSet:
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(f"element {i} outside 0..{n - 1}")
            mask |= 1 << int(i)
        return cls(n, mask)

    @classmethod
    def from_members(cls, members: Sequence[bool] | np.ndarray) -> ElementSet:
        members = np.asarray(members, dtype=bool)
        return cls.of(len(members), np.flatnonzero(members))

    @classmethod
    def full(cls, n: int) -> ElementSet:
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> ElementSet:
        return cls(n, 0)

    @property
    def members(self) -> np.ndarray:
        return np.array([(self.mask >> i) & 1 for i in range(self.n)], dtype=bool)

    def indices(self) -> list[int]:
        return bits(self.mask)

    def _same(self, other: ElementSet) -> None:
        if not isinstance(other, ElementSet):
            raise TypeError(f"expected ElementSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"sets over carriers of size {self.n} and {other.n} cannot be combined")

    def __or__(self, other: ElementSet) -> ElementSet:
        self._same(other)
        return ElementSet(self.n, self.mask | other.mask)

    def __and__(self, other: ElementSet) -> ElementSet:
        self._same(other)
        return ElementSet(self.n, self.mask & other.mask)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._same(other)
        return ElementSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: ElementSet) -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: ElementSet) -> bool:
        return other <= self

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ElementSet) and self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __contains__(self, i: object) -> bool:
        return isinstance(i, (int, np.integer)) and 0 <= i < self.n and bool((self.mask >> int(i)) & 1)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Catalog order: cardinality first, then the ascending index list."""
        return (len(self), tuple(self))

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"


class GammaSemigroup:
    """An immutable finite Gamma-semigroup.

    Parameters
    ----------
    n, m:
        Sizes of the carrier ``T`` and of ``Gamma``.
    table:
        ``n*m*n`` entries, row-major in ``(a, gamma, b)``.
    zero:
        Index of the designated zero, or ``None``.
    check_associativity:
        Run the full associativity scan (the default).  Passing ``False``
        admits non-associative tables, e.g. to study a published table that
        fails the law; :attr:`associative` then reports the truth lazily.
    """

    def __init__(
        self,
        n: int,
        m: int,
        table: Sequence[int] | np.ndarray,
        zero: int | None = None,
        element_names: Sequence[str] | None = None,
        gamma_names: Sequence[str] | None = None,
        *,
        check_associativity: bool = True,
    ):
        if n < 1 or m < 1:
            raise ShapeError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
        if n > _kernels.MAX_MASK_BITS:
            raise ShapeError(f"carrier size {n} exceeds the supported maximum {_kernels.MAX_MASK_BITS}")
        flat = np.asarray(table, dtype=np.int64).reshape(-1)
        if flat.size != n * m * n:
            raise ShapeError(f"table has {flat.size} entries, expected n*m*n = {n * m * n}")
        bad = np.flatnonzero((flat < 0) | (flat >= n))
        if bad.size:
            pos = int(bad[0])
            raise IndexOutOfRange(pos, int(flat[pos]), n)
        t = flat.reshape(n, m, n).copy()
        t.flags.writeable = False
        self.n = int(n)
        self.m = int(m)
        self.table = t
        if element_names is not None:
            element_names = tuple(str(x) for x in element_names)
            if len(element_names) != n:
                raise ShapeError(f"{len(element_names)} element names for {n} elements")
        if gamma_names is not None:
            gamma_names = tuple(str(x) for x in gamma_names)
            if len(gamma_names) != m:
                raise ShapeError(f"{len(gamma_names)} gamma names for {m} gammas")
        self.element_names = element_names
        self.gamma_names = gamma_names
        self._cache: dict[Any, Any] = {}
        if zero is not None:
            zero = int(zero)
            if not 0 <= zero < n:
                raise IndexOutOfRange(-1, zero, n)
            rows = t[zero] != zero
            cols = t[:, :, zero] != zero
            if rows.any() or cols.any():
                # report the first offending (element, gamma) in index order
                hits = np.argwhere(rows.T | cols)
                e, g = (int(x) for x in hits[0])
                raise BadZero(zero, e, g)
        self.zero = zero
        if check_associativity:
            w = _kernels.assoc_witness(t)
            if w[0] >= 0:
                raise NotAssociative(tuple(int(x) for x in w))
            self._cache["assoc"] = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def new(cls, n: int, m: int, table: Sequence[int], zero: int | None = None) -> GammaSemigroup:
        return cls(n, m, table, zero)

    @classmethod
    def trivial(cls, m: int = 1) -> GammaSemigroup:
        return cls(1, m, [0] * m)

    def replace(self, **changes: Any) -> GammaSemigroup:
        """A copy with some constructor fields changed (re-validated)."""
        fields = dict(
            n=self.n,
            m=self.m,
            table=self.table,
            zero=self.zero,
            element_names=self.element_names,
            gamma_names=self.gamma_names,
        )
        fields.update(changes)
        return GammaSemigroup(**fields, check_associativity=self.associative)

    # -- identity -------------------------------------------------------------

    def _key(self):
        return (self.n, self.m, self.table.tobytes(), self.zero, self.element_names, self.gamma_names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GammaSemigroup) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        z = "" if self.zero is None else f", zero={self.zero}"
        return f"GammaSemigroup(n={self.n}, m={self.m}{z})"

    def cached(self, key: Any, compute: Callable[[], Any]) -> Any:
        """Memoise a derived quantity; instances are immutable so this is safe."""
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    # -- labels ---------------------------------------------------------------

    def element_label(self, i: int) -> str:
        if self.element_names is not None:
            return self.element_names[i]
        return str(i)

    def gamma_label(self, g: int) -> str:
        if self.gamma_names is not None:
            return self.gamma_names[g]
        return str(g)

    def element_index(self, label: str | int) -> int:
        if isinstance(label, (int, np.integer)):
            return int(label)
        if self.element_names is not None and label in self.element_names:
            return self.element_names.index(label)
        return int(label)

    def format_set(self, s: ElementSet) -> str:
        return "{" + ",".join(self.element_label(i) for i in s) + "}"

    def elements(self, labels: Iterable[str | int] | str) -> ElementSet:
        """Build a set from labels; a plain string is split into characters
        when every element name is a single character."""
        if isinstance(labels, str):
            if self.element_names and all(len(x) == 1 for x in self.element_names):
                labels = list(labels)
            else:
                labels = labels.split()
        return ElementSet.of(self.n, (self.element_index(x) for x in labels))

    # -- sets -----------------------------------------------------------------

    @property
    def universe(self) -> ElementSet:
        return ElementSet.full(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def all_gammas(self) -> int:
        return (1 << self.m) - 1

    def singleton(self, a: int) -> ElementSet:
        return ElementSet(self.n, 1 << a)

    def zero_set(self) -> ElementSet:
        from .errors import NoZero

        if self.zero is None:
            raise NoZero("zero_set")
        return self.singleton(self.zero)

    # -- products -------------------------------------------------------------

    def triple_product(self, a: int, gamma: int, b: int) -> int:
        return int(self.table[a, gamma, b])

    @property
    def pm(self) -> np.ndarray:
        """``pm[a, b]`` = bitmask of {[a g b] : g in Gamma}."""
        return self.cached("pm", lambda: _kernels.product_masks(self.table))

    @property
    def col_masks(self) -> list[int]:
        """``col_masks[b]`` = bitmask of [T Gamma b]."""

        def compute():
            return [int(np.bitwise_or.reduce(self.pm[:, b])) for b in range(self.n)]

        return self.cached("col", compute)

    @property
    def row_masks(self) -> list[int]:
        """``row_masks[a]`` = bitmask of [a Gamma T]."""

        def compute():
            return [int(np.bitwise_or.reduce(self.pm[a, :])) for a in range(self.n)]

        return self.cached("row", compute)

    @property
    def mid_masks(self) -> list[int]:
        """``mid_masks[e]`` = bitmask of [T Gamma e Gamma T]."""

        def compute():
            return [self.rprod(self.col_masks[e]) for e in range(self.n)]

        return self.cached("mid", compute)

    def prod(self, a_mask: int, b_mask: int, gammas: int | None = None) -> int:
        """Bitmask form of :meth:`subset_product`."""
        if not a_mask or not b_mask:
            return 0
        if gammas is None or gammas == self.all_gammas:
            pm = self.pm
            out = 0
            for a in _bits(a_mask):
                row = pm[a]
                for b in _bits(b_mask):
                    out |= int(row[b])
            return out
        t = self.table
        out = 0
        gs = bits(gammas)
        for a in _bits(a_mask):
            for b in _bits(b_mask):
                for g in gs:
                    out |= 1 << int(t[a, g, b])
        return out

    def lprod(self, b_mask: int) -> int:
        """[T Gamma B]."""
        out = 0
        col = self.col_masks
        for b in _bits(b_mask):
            out |= col[b]
        return out

    def rprod(self, b_mask: int) -> int:
        """[B Gamma T]."""
        out = 0
        row = self.row_masks
        for b in _bits(b_mask):
            out |= row[b]
        return out

    def subset_product(
        self, A: ElementSet, G: Iterable[int] | None, B: ElementSet
    ) -> ElementSet:
        """``{[a g b] : a in A, g in G, b in B}``; ``G=None`` means all of Gamma."""
        if G is None:
            gammas = None
        else:
            gammas = 0
            for g in G:
                if not 0 <= g < self.m:
                    raise IndexError(f"gamma {g} outside 0..{self.m - 1}")
                gammas |= 1 << g
        return ElementSet(self.n, self.prod(A.mask, B.mask, gammas))

    # -- associativity --------------------------------------------------------

    def associativity_witness(self) -> tuple[int, int, int, int, int] | None:
        w = _kernels.assoc_witness(self.table)
        if w[0] < 0:
            return None
        return tuple(int(x) for x in w)

    @property
    def associative(self) -> bool:
        return self.cached("assoc", self.associativity_witness) is None

    # -- element predicates ---------------------------------------------------

    def is_zero_element(self, e: int) -> bool:
        t = self.table
        return bool((t[e] == e).all() and (t[:, :, e] == e).all())

    def find_zero(self) -> int | None:
        for e in range(self.n):
            if self.is_zero_element(e):
                return e
        return None

    def is_commutative(self) -> bool:
        return bool((self.table == self.table.transpose(2, 1, 0)).all())

    def is_idempotent(self, e: int, mode: IdempotentMode = IdempotentMode.EXISTS) -> bool:
        diag = self.table[e, :, e] == e
        if mode is IdempotentMode.FORALL:
            return bool(diag.all())
        return bool(diag.any())

    def is_regular(self, e: int, mode: RegularMode = RegularMode.STANDARD) -> bool:
        if mode is RegularMode.LITERAL:
            return bool((self.table[e, :, e] == e).any())
        # e in [e Gamma T Gamma e]
        return bool((self.prod(self.row_masks[e], 1 << e) >> e) & 1)

    def idempotent_gammas(self, e: int) -> list[int]:
        return [g for g in range(self.m) if self.table[e, g, e] == e]

    # -- constructions --------------------------------------------------------

    def adjoin_zero(self) -> GammaSemigroup:
        """Add a fresh absorbing element with index ``n``; it becomes the zero."""
        n, m = self.n, self.m
        t = np.full((n + 1, m, n + 1), n, dtype=np.int64)
        t[:n, :, :n] = self.table
        names = None
        if self.element_names is not None:
            label = "0"
            while label in self.element_names:
                label += "'"
            names = self.element_names + (label,)
        return GammaSemigroup(
            n + 1,
            m,
            t,
            zero=n,
            element_names=names,
            gamma_names=self.gamma_names,
            check_associativity=self.associative,
        )

    def with_detected_zero(self) -> GammaSemigroup:
        """Designate the table's zero element, if it has one and none is set."""
        if self.zero is not None:
            return self
        z = self.find_zero()
        if z is None:
            return self
        return self.replace(zero=z)
