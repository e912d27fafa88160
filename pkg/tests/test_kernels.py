"""Backend agreement and correctness of the scan kernels against a direct
itertools enumeration (the reference stays independent of the kernels)."""

import itertools
import random

import numpy as np
import pytest

from ca_rigidity import (
    CircularOrder,
    LinearOrder,
    canonical_circular,
    canonical_linear,
    is_arc_ordering,
    is_interval_ordering,
    is_tight_arc_ordering,
    is_tight_interval_ordering,
)
from ca_rigidity import kernels
from ca_rigidity.enumeration import tight_pairs

from conftest import random_ca_instance


def naive_circular(h, tight):
    out = set()
    for perm in itertools.permutations(range(h.n)):
        o = CircularOrder(perm)
        if not is_arc_ordering(h, o):
            continue
        if tight and not is_tight_arc_ordering(h, o):
            continue
        out.add(canonical_circular(o))
    return out


def naive_linear(h, tight):
    out = set()
    for perm in itertools.permutations(range(h.n)):
        o = LinearOrder(perm)
        if not is_interval_ordering(h, o):
            continue
        if tight and not is_tight_interval_ordering(h, o):
            continue
        out.add(canonical_linear(o))
    return out


def test_both_backends_available():
    # the environment ships numba; the numpy fallback must always exist
    assert "numpy" in kernels.available_backends()
    assert kernels.backend() in kernels.available_backends()


@pytest.mark.parametrize("tight", [False, True])
def test_kernels_match_naive_reference(tight):
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(1, 6)
        h = random_ca_instance(rng, n, max_edges=6)
        pairs_c = tight_pairs(h, circular=True) if tight else ()
        pairs_l = tight_pairs(h, circular=False) if tight else ()
        expect_c = naive_circular(h, tight)
        expect_l = naive_linear(h, tight)
        for be in kernels.available_backends():
            keys_c = kernels.scan_circular(n, h.edges, pairs_c, tight, backend=be)
            got_c = {
                canonical_circular(CircularOrder(kernels.decode_key(k, n)))
                for k in keys_c.tolist()
            }
            assert got_c == expect_c and len(keys_c) == len(expect_c)
            keys_l = kernels.scan_linear(n, h.edges, pairs_l, tight, backend=be)
            got_l = {
                canonical_linear(LinearOrder(kernels.decode_key(k, n)))
                for k in keys_l.tolist()
            }
            assert got_l == expect_l and len(keys_l) == len(expect_l)


def test_backends_agree_key_for_key():
    backends = kernels.available_backends()
    if len(backends) < 2:
        pytest.skip("single backend environment")
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(1, 7)
        h = random_ca_instance(rng, n)
        for tight in (False, True):
            pairs = tight_pairs(h, circular=True) if tight else ()
            results = [
                kernels.scan_circular(n, h.edges, pairs, tight, backend=be)
                for be in backends
            ]
            for other in results[1:]:
                assert np.array_equal(results[0], other)


def test_quilliot_backends_agree_with_direct_scan():
    from ca_rigidity.hypergraph import strictly_overlaps

    rng = random.Random(17)
    for _ in range(80):
        n = rng.randint(4, 7)
        h = random_ca_instance(rng, n)
        full = (1 << n) - 1
        direct = -1
        for x in range(1, full):
            k = bin(x).count("1")
            if not 1 < k < n - 1:
                continue
            if not any(strictly_overlaps(e, x, n) for e in h.edges):
                direct = x
                break
        for be in kernels.available_backends():
            assert kernels.quilliot_witness(n, h.edges, backend=be) == direct


def test_decode_key_inverts_packing():
    seq = (0, 3, 1, 4, 2)
    key = 0
    for v in seq:
        key = (key << 4) | v
    assert kernels.decode_key(key, 5) == seq


def test_scan_caps():
    with pytest.raises(ValueError):
        kernels.scan_circular(12, (1,), (), False)
    with pytest.raises(ValueError):
        kernels.scan_linear(11, (1,), (), False)
    with pytest.raises(ValueError):
        kernels.quilliot_witness(21, (1,))
