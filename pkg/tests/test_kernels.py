"""The numba and numpy backends must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from gammasg import _kernels as K
from gammasg.enumeration import _perms

needs_numba = pytest.mark.skipif(K.BACKEND != "numba", reason="numba backend not active")


@st.composite
def tables(draw, max_n=4, max_m=3):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    return draw(hnp.arrays(np.int64, (n, m, n), elements=st.integers(0, n - 1)))


@needs_numba
@given(tables())
def test_assoc_witness_agrees(t):
    assert K._np_assoc_witness(t).tolist() == K._nb_assoc_witness(t).tolist()


@needs_numba
@given(st.integers(1, 3), st.integers(1, 2), st.integers(0, 2**31))
def test_assoc_filter_agrees(n, m, seed):
    stack = np.random.default_rng(seed).integers(0, n, size=(50, n, m, n))
    a = K._np_assoc_filter(stack)
    assert a.tolist() == K._nb_assoc_filter(stack).tolist()
    assert a.tolist() == [K._np_assoc_witness(x)[0] < 0 for x in stack]


@needs_numba
@given(tables(max_n=6))
def test_product_masks_agree(t):
    assert K._np_product_masks(t).tolist() == K._nb_product_masks(t).tolist()


@needs_numba
@given(hnp.arrays(np.int64, st.integers(1, 10), elements=st.integers(0, 2**10 - 1)))
def test_subset_unions_agree(per_elem):
    a = K._np_subset_unions(per_elem)
    assert a.tolist() == K._nb_subset_unions(per_elem).tolist()
    for mask in range(len(a)):
        want = 0
        for i in range(len(per_elem)):
            if mask >> i & 1:
                want |= int(per_elem[i])
        assert a[mask] == want


@needs_numba
@given(tables(max_n=5), st.data())
def test_pairwise_products_agree(t, data):
    n = t.shape[0]
    pm = K._np_product_masks(t)
    masks = np.array(data.draw(st.lists(st.integers(1, 2**n - 1), min_size=1, max_size=8)), dtype=np.int64)
    assert K._np_pairwise_products(pm, masks).tolist() == K._nb_pairwise_products(pm, masks).tolist()


@needs_numba
@given(tables(max_n=3, max_m=2), st.booleans())
def test_canonical_form_agrees(t, with_zero):
    n, m, _ = t.shape
    zero = 0 if with_zero else -1
    a = K._np_canonical_form(t, zero, _perms(n), _perms(m))
    b = K._nb_canonical_form(t, zero, _perms(n), _perms(m))
    assert a[0].tolist() == b[0].tolist() and int(a[1]) == int(b[1])


SCRIPT = (
    "from gammasg import conformance as C, _kernels as K;"
    "from gammasg.enumeration import parse_corpus_spec, build_corpus;"
    "import sys; assert K.BACKEND == sys.argv[1];"
    "print(C.run(build_corpus(parse_corpus_spec('exhaustive:1-2,random:3:20:2-3:1-2,structured:nilpotent'))).to_tsv())"
)


def _report(backend):
    env = dict(os.environ, GAMMASG_BACKEND=backend)
    proc = subprocess.run([sys.executable, "-c", SCRIPT, backend], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


@needs_numba
def test_backends_give_identical_reports():
    assert _report("numpy") == _report("numba")


def test_bad_backend_name_is_rejected():
    env = dict(os.environ, GAMMASG_BACKEND="fortran")
    proc = subprocess.run([sys.executable, "-c", "import gammasg"], env=env, capture_output=True, text=True)
    assert proc.returncode != 0 and "GAMMASG_BACKEND" in proc.stderr
