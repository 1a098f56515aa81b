"""Hot inner loops, in two interchangeable implementations.

``GAMMASG_BACKEND=numba`` (the default when numba imports) compiles the loop
kernels with ``@njit``; ``GAMMASG_BACKEND=numpy`` selects the vectorised
pure-numpy versions.  Both produce identical results, including witness
order, so the backend never changes observable behaviour.

Element subsets are ``int64`` bitmasks, which caps the carrier at 62 elements.
"""

from __future__ import annotations

import os

import numpy as np

MAX_MASK_BITS = 62

_requested = os.environ.get("GAMMASG_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"GAMMASG_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

try:
    if _requested != "numba":
        raise ImportError
    from numba import njit

    BACKEND = "numba"
except ImportError:
    njit = None
    BACKEND = "numpy"


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _np_assoc_witness(t):
    n, m, _ = t.shape
    for a in range(n):
        # rows fixed at a keep peak memory at m²n² entries
        ab = t[a]  # [alpha, b] -> a alpha b
        left = t[ab[:, :, None, None], np.arange(m)[None, None, :, None], np.arange(n)[None, None, None, :]]
        right = t[a][np.arange(m)[:, None, None, None], t[None, :, :, :]]
        bad = left != right
        if bad.any():
            alpha, b, beta, c = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return np.array([a, alpha, b, beta, c], dtype=np.int64)
    return np.full(5, -1, dtype=np.int64)


def _np_assoc_filter(tables):
    k, n, m, _ = tables.shape
    ok = np.ones(k, dtype=np.bool_)
    idx = np.arange(k)[:, None, None, None, None, None]
    al = np.arange(m)[None, None, :, None, None, None]
    be = np.arange(m)[None, None, None, None, :, None]
    a = np.arange(n)[None, :, None, None, None, None]
    b = np.arange(n)[None, None, None, :, None, None]
    c = np.arange(n)[None, None, None, None, None, :]
    ab = tables[idx, a, al, b]
    left = tables[idx, ab, be, c]
    bc = tables[idx, b, be, c]
    right = tables[idx, a, al, bc]
    ok &= (left == right).reshape(k, -1).all(axis=1)
    return ok


def _np_product_masks(t):
    bits = np.left_shift(np.int64(1), t.astype(np.int64))
    return np.bitwise_or.reduce(bits, axis=1)


def _np_subset_unions(per_elem):
    n = per_elem.shape[0]
    out = np.zeros(1 << n, dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    for i in range(n):
        has = (masks >> i) & 1 == 1
        out[has] |= per_elem[i]
    return out


def _np_pairwise_products(pm, masks):
    n = pm.shape[0]
    k = masks.shape[0]
    member = ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int64)
    out = np.zeros((k, k), dtype=np.int64)
    for bit in range(n):
        pk = ((pm >> bit) & 1).astype(np.int64)
        hit = member @ pk @ member.T
        out |= np.where(hit > 0, np.int64(1) << bit, np.int64(0))
    return out


def _np_canonical_form(t, zero, perms_n, perms_m):
    n, m, _ = t.shape
    best = None
    best_zero = -1
    flat_t = t.reshape(-1)
    a = np.repeat(np.arange(n), m * n)
    g = np.tile(np.repeat(np.arange(m), n), n)
    b = np.tile(np.arange(n), n * m)
    for pn in perms_n:
        inv = np.empty(n, dtype=np.int64)
        inv[pn] = np.arange(n)
        for pm_ in perms_m:
            ginv = np.empty(m, dtype=np.int64)
            ginv[pm_] = np.arange(m)
            # relabelled[pn[a], pm[g], pn[b]] = pn[t[a, g, b]]
            cand = pn[flat_t.reshape(n, m, n)[inv[a], ginv[g], inv[b]]]
            z = pn[zero] if zero >= 0 else -1
            if best is None or _lex_less(cand, z, best, best_zero):
                best = cand
                best_zero = z
    return best.astype(np.int64), np.int64(best_zero)


def _lex_less(cand, z, best, best_zero):
    diff = np.nonzero(cand != best)[0]
    if diff.size:
        i = diff[0]
        return cand[i] < best[i]
    return z < best_zero


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if BACKEND == "numba":

    @njit(cache=True)
    def _nb_assoc_witness(t):
        n, m, _ = t.shape
        out = np.full(5, -1, dtype=np.int64)
        for a in range(n):
            for alpha in range(m):
                for b in range(n):
                    ab = t[a, alpha, b]
                    for beta in range(m):
                        for c in range(n):
                            if t[ab, beta, c] != t[a, alpha, t[b, beta, c]]:
                                out[0] = a
                                out[1] = alpha
                                out[2] = b
                                out[3] = beta
                                out[4] = c
                                return out
        return out

    @njit(cache=True)
    def _nb_assoc_filter(tables):
        k, n, m, _ = tables.shape
        ok = np.ones(k, dtype=np.bool_)
        for i in range(k):
            t = tables[i]
            done = False
            for a in range(n):
                for alpha in range(m):
                    for b in range(n):
                        ab = t[a, alpha, b]
                        for beta in range(m):
                            for c in range(n):
                                if t[ab, beta, c] != t[a, alpha, t[b, beta, c]]:
                                    ok[i] = False
                                    done = True
                                    break
                            if done:
                                break
                        if done:
                            break
                    if done:
                        break
                if done:
                    break
        return ok

    @njit(cache=True)
    def _nb_product_masks(t):
        n, m, _ = t.shape
        out = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            for g in range(m):
                for b in range(n):
                    out[a, b] |= np.int64(1) << t[a, g, b]
        return out

    @njit(cache=True)
    def _nb_subset_unions(per_elem):
        n = per_elem.shape[0]
        size = 1 << n
        out = np.zeros(size, dtype=np.int64)
        for mask in range(1, size):
            low = mask & (-mask)
            i = 0
            while (np.int64(1) << i) != low:
                i += 1
            out[mask] = out[mask ^ low] | per_elem[i]
        return out

    @njit(cache=True)
    def _nb_pairwise_products(pm, masks):
        n = pm.shape[0]
        k = masks.shape[0]
        # row[e, j] = union of pm[e, f] over f in masks[j]
        row = np.zeros((n, k), dtype=np.int64)
        for e in range(n):
            for j in range(k):
                acc = np.int64(0)
                mj = masks[j]
                for f in range(n):
                    if (mj >> f) & 1:
                        acc |= pm[e, f]
                row[e, j] = acc
        out = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            mi = masks[i]
            for j in range(k):
                acc = np.int64(0)
                for e in range(n):
                    if (mi >> e) & 1:
                        acc |= row[e, j]
                out[i, j] = acc
        return out

    @njit(cache=True)
    def _nb_canonical_form(t, zero, perms_n, perms_m):
        n, m, _ = t.shape
        size = n * m * n
        best = np.empty(size, dtype=np.int64)
        cand = np.empty(size, dtype=np.int64)
        best_zero = np.int64(-1)
        have = False
        for pi in range(perms_n.shape[0]):
            pn = perms_n[pi]
            inv = np.empty(n, dtype=np.int64)
            for x in range(n):
                inv[pn[x]] = x
            for gi in range(perms_m.shape[0]):
                pg = perms_m[gi]
                ginv = np.empty(m, dtype=np.int64)
                for x in range(m):
                    ginv[pg[x]] = x
                pos = 0
                for a in range(n):
                    for g in range(m):
                        for b in range(n):
                            cand[pos] = pn[t[inv[a], ginv[g], inv[b]]]
                            pos += 1
                z = pn[zero] if zero >= 0 else np.int64(-1)
                better = not have
                if have:
                    decided = False
                    for p in range(size):
                        if cand[p] != best[p]:
                            better = cand[p] < best[p]
                            decided = True
                            break
                    if not decided:
                        better = z < best_zero
                if better:
                    best[:] = cand
                    best_zero = z
                    have = True
        return best, best_zero


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def _pick(name):
    if BACKEND == "numba":
        return globals()["_nb_" + name]
    return globals()["_np_" + name]


def assoc_witness(t: np.ndarray) -> np.ndarray:
    """First failing (a, alpha, b, beta, c) in lexicographic order, or all -1."""
    return _pick("assoc_witness")(np.ascontiguousarray(t, dtype=np.int64))


def assoc_filter(tables: np.ndarray) -> np.ndarray:
    """Boolean mask of the associative tables in a (k, n, m, n) stack."""
    return _pick("assoc_filter")(np.ascontiguousarray(tables, dtype=np.int64))


def product_masks(t: np.ndarray) -> np.ndarray:
    """``out[a, b]`` = bitmask of {[a g b] : g in Gamma}."""
    return _pick("product_masks")(np.ascontiguousarray(t, dtype=np.int64))


def subset_unions(per_elem: np.ndarray) -> np.ndarray:
    """``out[mask]`` = OR of ``per_elem[i]`` over the bits i of ``mask``, for all 2**n masks."""
    return _pick("subset_unions")(np.ascontiguousarray(per_elem, dtype=np.int64))


def pairwise_products(pm: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """``out[i, j]`` = bitmask of [masks[i] Gamma masks[j]] given product masks ``pm``."""
    return _pick("pairwise_products")(
        np.ascontiguousarray(pm, dtype=np.int64), np.ascontiguousarray(masks, dtype=np.int64)
    )


def canonical_form(t: np.ndarray, zero: int, perms_n: np.ndarray, perms_m: np.ndarray):
    """Lexicographically least relabelling of ``t`` (flattened) and the image of ``zero``."""
    return _pick("canonical_form")(
        np.ascontiguousarray(t, dtype=np.int64),
        np.int64(zero),
        np.ascontiguousarray(perms_n, dtype=np.int64),
        np.ascontiguousarray(perms_m, dtype=np.int64),
    )
