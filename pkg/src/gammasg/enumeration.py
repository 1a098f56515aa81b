"""Corpus construction: exhaustive, seeded-random and structured instances.

Random mode draws tables from numpy's PCG64 generator seeded with
``SeedSequence([seed])`` (single instances) or ``SeedSequence([seed, k])``
(the k-th instance of a corpus), in batches of ``RANDOM_BATCH`` tables, each
entry ``integers(0, n)``.  Given the same arguments the output is
bit-identical on every platform numpy supports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .core import GammaSemigroup
from .errors import (
    ExhaustedTries,
    NotAssociativeBinary,
    TooLarge,
    TooLargeForCanonicalization,
)

DEFAULT_CELL_CAP = 12
RANDOM_BATCH = 64
EXHAUSTIVE_CHUNK = 1 << 15
CANON_MAX_N = 4
CANON_MAX_M = 3


# -- exhaustive ---------------------------------------------------------------


def _candidate_chunk(n: int, cells: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((idx.size, cells), dtype=np.int64)
    for pos in range(cells - 1, -1, -1):
        digits[:, pos] = idx % n
        idx //= n
    return digits


def associative_tables(n: int, m: int, cell_cap: int = DEFAULT_CELL_CAP) -> np.ndarray:
    """All associative tables of shape (n, m), flattened, in lexicographic order."""
    cells = n * m * n
    if cells > cell_cap:
        raise TooLarge(f"shape n={n}, m={m} has {cells} cells, above the cap of {cell_cap}")
    total = n**cells
    found = []
    for start in range(0, total, EXHAUSTIVE_CHUNK):
        chunk = _candidate_chunk(n, cells, start, min(total, start + EXHAUSTIVE_CHUNK))
        ok = _kernels.assoc_filter(chunk.reshape(-1, n, m, n))
        found.append(chunk[ok])
    return np.concatenate(found) if found else np.empty((0, cells), dtype=np.int64)


def enumerate_exhaustive(n: int, m: int, cell_cap: int = DEFAULT_CELL_CAP) -> Iterator[GammaSemigroup]:
    """Every associative table of the given shape, lexicographic order."""
    for row in associative_tables(n, m, cell_cap):
        # the filter already ran the full scan
        S = GammaSemigroup(n, m, row, check_associativity=False)
        S._cache["assoc"] = None
        yield S


def exhaustive_count(n: int, m: int, cell_cap: int = DEFAULT_CELL_CAP) -> int:
    return len(associative_tables(n, m, cell_cap))


# -- random -------------------------------------------------------------------


def _sample(n: int, m: int, rng: np.random.Generator, max_tries: int) -> GammaSemigroup:
    cells = n * m * n
    tried = 0
    while tried < max_tries:
        batch = min(RANDOM_BATCH, max_tries - tried)
        tables = rng.integers(0, n, size=(batch, cells), dtype=np.int64)
        ok = _kernels.assoc_filter(tables.reshape(batch, n, m, n))
        hit = np.flatnonzero(ok)
        if hit.size:
            return GammaSemigroup(n, m, tables[hit[0]])
        tried += batch
    raise ExhaustedTries(f"no associative table of shape n={n}, m={m} in {max_tries} tries")


def random_instance(n: int, m: int, seed: int, max_tries: int = 100_000) -> GammaSemigroup:
    """Rejection-sample uniform tables until one is associative."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed])))
    return _sample(n, m, rng, max_tries)


# -- binary semigroups --------------------------------------------------------


def binary_assoc_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    t = np.asarray(table, dtype=np.int64)
    left = t[t[:, :, None], np.arange(len(t))[None, None, :]]
    right = t[np.arange(len(t))[:, None, None], t[None, :, :]]
    bad = np.argwhere(left != right)
    return None if bad.size == 0 else tuple(int(x) for x in bad[0])


def from_semigroup(
    sg_table: Sequence[Sequence[int]] | np.ndarray,
    gamma: Sequence[int],
    element_names: Sequence[str] | None = None,
    zero: int | None = None,
) -> GammaSemigroup:
    """``[a g b] = (a·g)·b`` for a binary semigroup and a subset ``gamma`` of it."""
    t = np.asarray(sg_table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError("binary table must be square")
    gamma = list(gamma)
    if not gamma:
        raise ValueError("gamma must be nonempty")
    w = binary_assoc_witness(t)
    if w is not None:
        raise NotAssociativeBinary(w)
    n = len(t)
    tern = t[t[:, gamma], :]  # (a, g) -> a·g, then · b
    gnames = None
    if element_names is not None:
        gnames = [element_names[g] for g in gamma]
    return GammaSemigroup(n, len(gamma), tern, zero=zero, element_names=element_names, gamma_names=gnames)


def cyclic_group(k: int) -> np.ndarray:
    i = np.arange(k)
    return (i[:, None] + i[None, :]) % k


def modular_mult(k: int) -> np.ndarray:
    i = np.arange(k)
    return (i[:, None] * i[None, :]) % k


def left_zero_band(k: int) -> np.ndarray:
    return np.repeat(np.arange(k)[:, None], k, axis=1)


def right_zero_band(k: int) -> np.ndarray:
    return np.repeat(np.arange(k)[None, :], k, axis=0)


def rectangular_band(p: int, q: int) -> np.ndarray:
    # element i*q + j stands for (i, j); (i, j)(k, l) = (i, l)
    k = p * q
    out = np.empty((k, k), dtype=np.int64)
    for x in range(k):
        for y in range(k):
            out[x, y] = (x // q) * q + (y % q)
    return out


def rees_matrix_trivial(rows: int, cols: int, sandwich: Sequence[Sequence[int]]) -> np.ndarray:
    """Rees matrix semigroup over the trivial group; index 0 is the zero.

    Element ``1 + i*cols + l`` stands for (i, l);
    (i, l)(j, r) = (i, r) when ``sandwich[l][j]`` is nonzero, else 0.
    """
    k = rows * cols + 1
    out = np.zeros((k, k), dtype=np.int64)
    for x in range(1, k):
        i, l = divmod(x - 1, cols)
        for y in range(1, k):
            j, r = divmod(y - 1, cols)
            if sandwich[l][j]:
                out[x, y] = 1 + i * cols + r
    return out


def with_zero_binary(table: np.ndarray) -> np.ndarray:
    """Adjoin an absorbing element as the last index."""
    k = len(table)
    out = np.full((k + 1, k + 1), k, dtype=np.int64)
    out[:k, :k] = table
    return out


def direct_product_binary(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ka, kb = len(a), len(b)
    out = np.empty((ka * kb, ka * kb), dtype=np.int64)
    for x in range(ka * kb):
        for y in range(ka * kb):
            out[x, y] = a[x // kb, y // kb] * kb + b[x % kb, y % kb]
    return out


# -- structured families ------------------------------------------------------


def zero_multiplication(n: int, m: int = 1) -> GammaSemigroup:
    return GammaSemigroup(n, m, np.zeros(n * m * n, dtype=np.int64), zero=0)


def nilpotent(n: int = 3, m: int = 1, gammas: Sequence[int] | None = None) -> GammaSemigroup:
    """Elements 0, a=1, b=2, ...; [a g a] = b for the chosen gammas, all else 0."""
    if n < 3:
        raise ValueError("nilpotent family needs n >= 3")
    t = np.zeros((n, m, n), dtype=np.int64)
    for g in range(m) if gammas is None else gammas:
        t[1, g, 1] = 2
    names = ["0", "a", "b"] + [f"c{i}" for i in range(3, n)]
    return GammaSemigroup(n, m, t, zero=0, element_names=names)


def with_null_gamma(S: GammaSemigroup) -> GammaSemigroup:
    """Append a gamma whose every product is the zero."""
    if S.zero is None:
        raise ValueError("null gamma needs a designated zero")
    t = np.concatenate([S.table, np.full((S.n, 1, S.n), S.zero, dtype=np.int64)], axis=1)
    gn = None if S.gamma_names is None else S.gamma_names + ("null",)
    return GammaSemigroup(S.n, S.m + 1, t, zero=S.zero, element_names=S.element_names, gamma_names=gn)


def matrix_family(q: int, rows_first: bool = True) -> GammaSemigroup:
    """T = 1x2 (or 2x1) matrices over Z/q, Gamma = the transposed shape; usual product."""
    vecs = list(itertools.product(range(q), repeat=2))
    n = len(vecs)
    t = np.empty((n, n, n), dtype=np.int64)
    index = {v: i for i, v in enumerate(vecs)}
    for ai, a in enumerate(vecs):
        for gi, g in enumerate(vecs):
            for bi, b in enumerate(vecs):
                if rows_first:
                    # (1x2)(2x1) is a scalar, times the 1x2 b
                    s = (a[0] * g[0] + a[1] * g[1]) % q
                    t[ai, gi, bi] = index[((s * b[0]) % q, (s * b[1]) % q)]
                else:
                    # a (2x1) times scalar (g b)
                    s = (g[0] * b[0] + g[1] * b[1]) % q
                    t[ai, gi, bi] = index[((a[0] * s) % q, (a[1] * s) % q)]
    names = ["".join(map(str, v)) for v in vecs]
    S = GammaSemigroup(n, n, t, element_names=names, gamma_names=names)
    return S.with_detected_zero()


def _nonempty_subsets(k: int, max_size: int) -> Iterator[tuple[int, ...]]:
    for r in range(1, min(k, max_size) + 1):
        yield from itertools.combinations(range(k), r)


def structured_families(max_n: int = 8) -> Iterator[tuple[str, GammaSemigroup]]:
    """Labelled instances from parameterized families, all with ``n <= max_n``."""

    def emit(label, S):
        if S.n <= max_n:
            yield label, S.with_detected_zero()

    for n in range(1, max_n + 1):
        for m in (1, 2):
            yield from emit(f"zero-mult(n={n},m={m})", zero_multiplication(n, m))
    for n in range(3, max_n + 1):
        yield from emit(f"nilpotent(n={n},m=1)", nilpotent(n, 1))
        yield from emit(f"nilpotent(n={n},m=2,all)", nilpotent(n, 2))
        yield from emit(f"nilpotent(n={n},m=2,one)", nilpotent(n, 2, gammas=[0]))
    for k in range(1, max_n + 1):
        for name, tab in (("left-zero", left_zero_band(k)), ("right-zero", right_zero_band(k))):
            for g in _nonempty_subsets(k, 2):
                yield from emit(f"{name}({k}) gamma={list(g)}", from_semigroup(tab, g))
            if k + 1 <= max_n:
                z = with_zero_binary(tab)
                yield from emit(f"{name}({k})+0", from_semigroup(z, list(range(k))))
    for p, q in ((1, 2), (2, 1), (2, 2), (2, 3), (3, 2)):
        tab = rectangular_band(p, q)
        for g in _nonempty_subsets(len(tab), 2):
            yield from emit(f"rect-band({p}x{q}) gamma={list(g)}", from_semigroup(tab, g))
        if p * q + 1 <= max_n:
            yield from emit(f"rect-band({p}x{q})+0", from_semigroup(with_zero_binary(tab), list(range(p * q))))
    for k in range(1, max_n + 1):
        grp = cyclic_group(k)
        for g in _nonempty_subsets(k, 3):
            yield from emit(f"cyclic({k}) gamma={list(g)}", from_semigroup(grp, g))
            if k + 1 <= max_n:
                S = from_semigroup(with_zero_binary(grp), g, zero=k)
                yield from emit(f"cyclic({k})+0 gamma={list(g)}", S)
                yield from emit(f"cyclic({k})+0 gamma={list(g)}+null", with_null_gamma(S))
    for k in range(2, max_n + 1):
        tab = modular_mult(k)
        for g in _nonempty_subsets(k, 2):
            yield from emit(f"Z{k}-mult gamma={list(g)}", from_semigroup(tab, g))
    sandwiches = [
        (r, c, P)
        for r in (1, 2)
        for c in (1, 2)
        for P in itertools.product(itertools.product((0, 1), repeat=r), repeat=c)
    ]
    for r, c, P in sandwiches:
        tab = rees_matrix_trivial(r, c, P)
        label = f"rees({r}x{c},P={[list(row) for row in P]})"
        for g in _nonempty_subsets(len(tab), 2):
            yield from emit(f"{label} gamma={list(g)}", from_semigroup(tab, g, zero=0))
    small = {
        "Z2-mult": modular_mult(2),
        "Z3-mult": modular_mult(3),
        "left-zero(2)": left_zero_band(2),
        "nil3": np.array([[0, 0, 0], [0, 2, 0], [0, 0, 0]]),
        "C2": cyclic_group(2),
    }
    for (na, ta), (nb, tb) in itertools.combinations(small.items(), 2):
        tab = direct_product_binary(ta, tb)
        for g in _nonempty_subsets(len(tab), 1):
            yield from emit(f"{na}x{nb} gamma={list(g)}", from_semigroup(tab, g))
    for q in (2,):
        yield from emit(f"matrix(Z{q},1x2|2x1)", matrix_family(q, True))
        yield from emit(f"matrix(Z{q},2x1|1x2)", matrix_family(q, False))
    sg3 = associative_tables(3, 1)
    for idx, row in enumerate(sg3):
        tab = row.reshape(3, 3)
        for g in _nonempty_subsets(3, 3):
            yield from emit(f"semigroup3#{idx} gamma={list(g)}", from_semigroup(tab, g))


# -- isomorphism reduction ----------------------------------------------------


def _perms(k: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(k))), dtype=np.int64).reshape(-1, k)


def canonical_form(
    S: GammaSemigroup, max_n: int = CANON_MAX_N, max_m: int = CANON_MAX_M
) -> GammaSemigroup:
    """The least relabelling of ``S`` over all carrier and Gamma permutations.

    Relabellings are compared by the flattened table, then by the image of
    the designated zero.  Names are dropped.
    """
    if S.n > max_n or S.m > max_m:
        raise TooLargeForCanonicalization(
            f"canonical form limited to n <= {max_n}, m <= {max_m}; got n={S.n}, m={S.m}"
        )
    zero = -1 if S.zero is None else S.zero
    flat, z = _kernels.canonical_form(S.table, zero, _perms(S.n), _perms(S.m))
    C = GammaSemigroup(S.n, S.m, flat, zero=None if z < 0 else int(z), check_associativity=False)
    if "assoc" in S._cache:
        C._cache["assoc"] = S._cache["assoc"]
    return C


def iso_reduce(stream: Iterable[GammaSemigroup]) -> Iterator[GammaSemigroup]:
    """Keep the first instance of each isomorphism class."""
    seen: set[GammaSemigroup] = set()
    for S in stream:
        key = canonical_form(S)
        if key not in seen:
            seen.add(key)
            yield S


# -- corpus specifications ----------------------------------------------------


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class Random:
    seed: int
    count: int
    max_tries: int = 20_000


@dataclass(frozen=True)
class Structured:
    families: tuple[str, ...] = ()  # empty means every family
    max_n: int = 8


@dataclass(frozen=True)
class CorpusSpec:
    strategy: Exhaustive | Random | Structured
    n_range: tuple[int, int] = (1, 3)
    m_range: tuple[int, int] = (1, 12)
    adjoin_zero: bool = False
    iso_reduce: bool = False
    cell_cap: int = DEFAULT_CELL_CAP
    designate_zero: bool = True

    def __post_init__(self):
        if isinstance(self.strategy, Exhaustive) and not self.exhaustive_shapes():
            raise TooLarge(f"no shape in the ranges fits the cell cap {self.cell_cap}")

    def exhaustive_shapes(self) -> list[tuple[int, int]]:
        return [
            (n, m)
            for n in range(self.n_range[0], self.n_range[1] + 1)
            for m in range(self.m_range[0], self.m_range[1] + 1)
            if n * m * n <= self.cell_cap
        ]

    def label(self) -> str:
        s = self.strategy
        if isinstance(s, Exhaustive):
            base = f"exhaustive(cap={self.cell_cap})"
        elif isinstance(s, Random):
            base = f"random(seed={s.seed},count={s.count})"
        else:
            base = "structured"
        return base + ("+0" if self.adjoin_zero else "")


@dataclass(frozen=True)
class CorpusInstance:
    seq: int
    instance: GammaSemigroup
    strategy: str
    family: str
    seed: int | None = None

    @property
    def klass(self) -> str:
        """Coarse class used to group report rows."""
        return self.strategy + ("+0" if self.family.endswith("+0") else "")


def _instances(spec: CorpusSpec) -> Iterator[tuple[str, str, int | None, GammaSemigroup]]:
    s = spec.strategy
    if isinstance(s, Exhaustive):
        for n, m in spec.exhaustive_shapes():
            for k, S in enumerate(enumerate_exhaustive(n, m, spec.cell_cap)):
                yield "exhaustive", f"exhaustive(n={n},m={m})#{k}", None, S
    elif isinstance(s, Random):
        shapes = [
            (n, m)
            for n in range(spec.n_range[0], spec.n_range[1] + 1)
            for m in range(spec.m_range[0], spec.m_range[1] + 1)
        ]
        for k in range(s.count):
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([s.seed, k])))
            n, m = shapes[int(rng.integers(0, len(shapes)))]
            try:
                S = _sample(n, m, rng, s.max_tries)
            except ExhaustedTries:
                continue
            yield "random", f"random(n={n},m={m})#{k}", s.seed, S
    else:
        for label, S in structured_families(s.max_n):
            if s.families and not any(label.startswith(f) for f in s.families):
                continue
            yield "structured", label, None, S


def build_corpus(specs: CorpusSpec | Sequence[CorpusSpec]) -> list[CorpusInstance]:
    """Materialise one or more specs into a sequence-numbered instance list."""
    if isinstance(specs, CorpusSpec):
        specs = [specs]
    out: list[CorpusInstance] = []
    for spec in specs:
        stream = _instances(spec)
        if spec.iso_reduce:
            stream = _iso_reduce_tagged(stream)
        for strategy, family, seed, S in stream:
            if spec.adjoin_zero:
                S = S.adjoin_zero()
                family += "+0"
            elif spec.designate_zero:
                S = S.with_detected_zero()
            out.append(CorpusInstance(len(out), S, strategy, family, seed))
    return out


def _iso_reduce_tagged(stream):
    seen = set()
    for item in stream:
        key = canonical_form(item[3])
        if key not in seen:
            seen.add(key)
            yield item


def standard_corpus(seed: int = 20240601, random_count: int = 400) -> list[CorpusSpec]:
    """Exhaustive small shapes (plain and zero-adjoined), structured families, random tables."""
    return [
        CorpusSpec(Exhaustive()),
        CorpusSpec(Exhaustive(), adjoin_zero=True),
        CorpusSpec(Structured()),
        CorpusSpec(Random(seed, random_count), n_range=(2, 3), m_range=(1, 2)),
    ]


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    return int(lo), int(hi or lo)


def parse_corpus_spec(text: str) -> list[CorpusSpec]:
    """Comma-separated corpus terms.

    ``standard``; ``exhaustive[:N[:M]]``; ``exhaustive0[:N[:M]]`` (zero
    adjoined); ``structured[:PREFIX]``; ``random:SEED:COUNT[:N[:M]]``.
    ``N`` and ``M`` are single sizes or ranges such as ``2-3``.
    """
    specs: list[CorpusSpec] = []
    for term in filter(None, (t.strip() for t in text.split(","))):
        kind, *args = term.split(":")
        try:
            if kind == "standard" and not args:
                specs.extend(standard_corpus())
            elif kind in ("exhaustive", "exhaustive0") and len(args) <= 2:
                n = _range(args[0]) if args else (1, 3)
                m = _range(args[1]) if len(args) > 1 else (1, 12)
                specs.append(CorpusSpec(Exhaustive(), n, m, adjoin_zero=kind == "exhaustive0"))
            elif kind == "structured" and len(args) <= 1:
                specs.append(CorpusSpec(Structured(tuple(args))))
            elif kind == "random" and 2 <= len(args) <= 4:
                n = _range(args[2]) if len(args) > 2 else (2, 3)
                m = _range(args[3]) if len(args) > 3 else (1, 2)
                specs.append(CorpusSpec(Random(int(args[0]), int(args[1])), n, m))
            else:
                raise ValueError(term)
        except TooLarge:
            raise
        except ValueError:
            raise ValueError(f"bad corpus term {term!r}") from None
    if not specs:
        raise ValueError("empty corpus specification")
    return specs
