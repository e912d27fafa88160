"""Hot enumeration kernels with two interchangeable backends.

The numba backend JIT-compiles the permutation scans; the numpy backend
vectorizes the same logic.  Selection: environment variable
``CA_RIGIDITY_BACKEND`` set to ``numba``, ``numpy`` or ``auto`` (default;
numba when importable).  Both backends are importable side by side so tests
and the benchmark can compare them directly.

Contract shared by both backends:

* ``scan_circular(n, edges, pairs, tight_only)`` visits every circular order
  with vertex 0 fixed at position 0 and ``seq[1] < seq[n-1]`` (one
  representative per rotation+reflection class), keeps those under which all
  edge masks are circularly consecutive (and, in tight mode, all inclusion
  pairs share an arc endpoint), and returns one int64 key per kept order.
  Keys pack the vertex sequence in 4-bit digits, so the number of keys *is*
  the number of symmetry classes and each key decodes to a representative.
* ``scan_linear`` is the segment analogue: all n! orders filtered by
  ``seq[0] < seq[n-1]`` (one representative per reflection class).
* ``quilliot_witness(n, edges)`` scans all vertex subsets X with
  1 < |X| < n-1 and returns the first X strictly overlapped by no hyperedge,
  or -1 when every X has a witness hyperedge.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

MAX_CIRCULAR_N = 11
MAX_LINEAR_N = 10
MAX_QUILLIOT_N = 20

_ENV_BACKEND = os.environ.get("CA_RIGIDITY_BACKEND", "auto").strip().lower()
if _ENV_BACKEND not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"CA_RIGIDITY_BACKEND must be auto, numba or numpy, got {_ENV_BACKEND!r}"
    )

_HAVE_NUMBA = False
if _ENV_BACKEND in ("auto", "numba"):
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        if _ENV_BACKEND == "numba":
            raise

if _ENV_BACKEND == "numpy":
    _DEFAULT = "numpy"
else:
    _DEFAULT = "numba" if _HAVE_NUMBA else "numpy"


def backend() -> str:
    """Name of the backend used when no explicit one is requested."""
    return _DEFAULT


def decode_key(key: int, n: int) -> tuple[int, ...]:
    """Inverse of the 4-bit packing used for scan keys."""
    seq = [0] * n
    k = int(key)
    for i in range(n - 1, -1, -1):
        seq[i] = k & 0xF
        k >>= 4
    return tuple(seq)


def _as_edge_array(edges) -> np.ndarray:
    return np.asarray(list(edges), dtype=np.int64)


def _as_pair_arrays(pairs) -> tuple[np.ndarray, np.ndarray]:
    pa = np.asarray([p[0] for p in pairs], dtype=np.int64)
    pb = np.asarray([p[1] for p in pairs], dtype=np.int64)
    return pa, pb


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------


def _perm_matrix(n: int, fixed_zero: bool) -> np.ndarray:
    if fixed_zero:
        tail = np.array(
            list(itertools.permutations(range(1, n))), dtype=np.int64
        ).reshape(-1, n - 1)
        head = np.zeros((tail.shape[0], 1), dtype=np.int64)
        perms = np.hstack([head, tail])
        if n >= 3:
            perms = perms[perms[:, 1] < perms[:, -1]]
    else:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
        perms = perms.reshape(-1, n)
        if n >= 2:
            perms = perms[perms[:, 0] < perms[:, -1]]
    return perms


def _edge_membership(edge: int, n: int, perms: np.ndarray) -> np.ndarray:
    bits = np.array([(edge >> v) & 1 for v in range(n)], dtype=bool)
    return bits[perms]


def _encode_rows(perms: np.ndarray) -> np.ndarray:
    n = perms.shape[1]
    powers = np.left_shift(np.int64(1), 4 * np.arange(n - 1, -1, -1, dtype=np.int64))
    return perms @ powers


def scan_circular_numpy(n, edges, pairs, tight_only) -> np.ndarray:
    if n > MAX_CIRCULAR_N:
        raise ValueError(f"circular scan supports n <= {MAX_CIRCULAR_N}")
    edges = _as_edge_array(edges)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    perms = _perm_matrix(n, fixed_zero=True)
    full = (1 << n) - 1
    valid = np.ones(perms.shape[0], dtype=bool)
    boundaries: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    for e in edges.tolist():
        if e == 0 or e == full:
            continue
        b = _edge_membership(e, n, perms)
        starts = b & ~np.roll(b, 1, axis=1)
        ends = b & ~np.roll(b, -1, axis=1)
        valid &= starts.sum(axis=1) == 1
        boundaries[e] = (starts.argmax(axis=1), ends.argmax(axis=1))
    if tight_only:
        for ia, ib in zip(*(p.tolist() for p in _as_pair_arrays(pairs))):
            ea, eb = int(edges[ia]), int(edges[ib])
            sa, za = boundaries[ea]
            sb, zb = boundaries[eb]
            valid &= (sa == sb) | (za == zb)
    return _encode_rows(perms[valid])


def scan_linear_numpy(n, edges, pairs, tight_only) -> np.ndarray:
    if n > MAX_LINEAR_N:
        raise ValueError(f"linear scan supports n <= {MAX_LINEAR_N}")
    edges = _as_edge_array(edges)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    perms = _perm_matrix(n, fixed_zero=False)
    valid = np.ones(perms.shape[0], dtype=bool)
    pad = np.zeros((perms.shape[0], 1), dtype=bool)
    boundaries: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    for e in edges.tolist():
        if e == 0:
            continue
        b = _edge_membership(e, n, perms)
        starts = b & ~np.hstack([pad, b[:, :-1]])
        ends = b & ~np.hstack([b[:, 1:], pad])
        valid &= starts.sum(axis=1) == 1
        boundaries[e] = (starts.argmax(axis=1), ends.argmax(axis=1))
    if tight_only:
        for ia, ib in zip(*(p.tolist() for p in _as_pair_arrays(pairs))):
            ea, eb = int(edges[ia]), int(edges[ib])
            sa, za = boundaries[ea]
            sb, zb = boundaries[eb]
            valid &= (sa == sb) | (za == zb)
    return _encode_rows(perms[valid])


def quilliot_witness_numpy(n, edges) -> int:
    if n > MAX_QUILLIOT_N:
        raise ValueError(f"subset scan supports n <= {MAX_QUILLIOT_N}")
    edges = _as_edge_array(edges)
    full = (1 << n) - 1
    x = np.arange(1, full, dtype=np.int64)
    size = np.zeros_like(x)
    for shift in range(n):
        size += (x >> shift) & 1
    x = x[(size >= 2) & (size <= n - 2)]
    if x.size == 0:
        return -1
    has_witness = np.zeros(x.shape[0], dtype=bool)
    for e in edges.tolist():
        inter = x & e
        has_witness |= (inter != 0) & (inter != e) & (inter != x) & ((x | e) != full)
    missing = np.flatnonzero(~has_witness)
    return int(x[missing[0]]) if missing.size else -1


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True)
    def _order_valid(n, edges, pa, pb, tight_only, seq, inv, pmask, circular):
        full = (1 << n) - 1
        m = edges.shape[0]
        for t in range(m):
            e = edges[t]
            p = 0
            for v in range(n):
                if (e >> v) & 1:
                    p |= 1 << inv[v]
            pmask[t] = p
            if p != 0 and p != full:
                if circular:
                    q = ((p << 1) | (p >> (n - 1))) & full
                else:
                    q = (p << 1) & full
                s = p & ~q
                cnt = 0
                while s:
                    s &= s - 1
                    cnt += 1
                if cnt != 1:
                    return False
        if tight_only:
            for idx in range(pa.shape[0]):
                p1 = pmask[pa[idx]]
                p2 = pmask[pb[idx]]
                if circular:
                    r1 = ((p1 << 1) | (p1 >> (n - 1))) & full
                    r2 = ((p2 << 1) | (p2 >> (n - 1))) & full
                else:
                    r1 = (p1 << 1) & full
                    r2 = (p2 << 1) & full
                if (p1 & ~r1) != (p2 & ~r2):
                    if circular:
                        t1 = ((p1 >> 1) | ((p1 & 1) << (n - 1))) & full
                        t2 = ((p2 >> 1) | ((p2 & 1) << (n - 1))) & full
                    else:
                        t1 = p1 >> 1
                        t2 = p2 >> 1
                    if (p1 & ~t1) != (p2 & ~t2):
                        return False
        return True

    @njit(cache=True)
    def _consider(n, edges, pa, pb, tight_only, seq, inv, pmask, out, cnt, circular):
        if _order_valid(n, edges, pa, pb, tight_only, seq, inv, pmask, circular):
            k = 0
            for i in range(n):
                k = (k << 4) | seq[i]
            out[cnt] = k
            cnt += 1
        return cnt

    @njit(cache=True)
    def _scan_perms(n, edges, pa, pb, tight_only, circular):
        # Heap's algorithm over the free positions; vertex 0 stays at
        # position 0 in circular mode.
        k_items = n - 1 if circular else n
        half = 1
        for i in range(2, k_items + 1):
            half *= i
        half = half // 2 + 2
        out = np.empty(half, dtype=np.int64)
        seq = np.zeros(n, dtype=np.int64)
        inv = np.zeros(n, dtype=np.int64)
        pmask = np.zeros(max(edges.shape[0], 1), dtype=np.int64)
        arr = np.empty(k_items, dtype=np.int64)
        for i in range(k_items):
            arr[i] = i + 1 if circular else i
        cnt = 0

        def load(seq, inv, arr):
            if circular:
                seq[0] = 0
                inv[0] = 0
                for i in range(k_items):
                    seq[i + 1] = arr[i]
                    inv[arr[i]] = i + 1
            else:
                for i in range(k_items):
                    seq[i] = arr[i]
                    inv[arr[i]] = i

        load(seq, inv, arr)
        if n < 2 or seq[1 if circular else 0] < seq[n - 1] or (circular and n == 2):
            cnt = _consider(n, edges, pa, pb, tight_only, seq, inv, pmask, out, cnt, circular)
        c = np.zeros(k_items, dtype=np.int64)
        i = 0
        while i < k_items:
            if c[i] < i:
                if i % 2 == 0:
                    tmp = arr[0]
                    arr[0] = arr[i]
                    arr[i] = tmp
                else:
                    tmp = arr[c[i]]
                    arr[c[i]] = arr[i]
                    arr[i] = tmp
                load(seq, inv, arr)
                if n < 2 or seq[1 if circular else 0] < seq[n - 1] or (circular and n == 2):
                    cnt = _consider(
                        n, edges, pa, pb, tight_only, seq, inv, pmask, out, cnt, circular
                    )
                c[i] += 1
                i = 0
            else:
                c[i] = 0
                i += 1
        return out[:cnt]

    @njit(cache=True)
    def _quilliot_numba(n, edges):
        full = (1 << n) - 1
        m = edges.shape[0]
        for x in range(1, full):
            size = 0
            t = x
            while t:
                t &= t - 1
                size += 1
            if size < 2 or size > n - 2:
                continue
            found = False
            for j in range(m):
                e = edges[j]
                inter = e & x
                if inter != 0 and inter != e and inter != x and (e | x) != full:
                    found = True
                    break
            if not found:
                return x
        return -1

    def scan_circular_numba(n, edges, pairs, tight_only) -> np.ndarray:
        if n > MAX_CIRCULAR_N:
            raise ValueError(f"circular scan supports n <= {MAX_CIRCULAR_N}")
        if n == 1:
            return np.zeros(1, dtype=np.int64)
        pa, pb = _as_pair_arrays(pairs)
        return _scan_perms(n, _as_edge_array(edges), pa, pb, tight_only, True)

    def scan_linear_numba(n, edges, pairs, tight_only) -> np.ndarray:
        if n > MAX_LINEAR_N:
            raise ValueError(f"linear scan supports n <= {MAX_LINEAR_N}")
        if n == 1:
            return np.zeros(1, dtype=np.int64)
        pa, pb = _as_pair_arrays(pairs)
        return _scan_perms(n, _as_edge_array(edges), pa, pb, tight_only, False)

    def quilliot_witness_numba(n, edges) -> int:
        if n > MAX_QUILLIOT_N:
            raise ValueError(f"subset scan supports n <= {MAX_QUILLIOT_N}")
        return int(_quilliot_numba(n, _as_edge_array(edges)))


_IMPL = {
    "numpy": (scan_circular_numpy, scan_linear_numpy, quilliot_witness_numpy),
}
if _HAVE_NUMBA:
    _IMPL["numba"] = (scan_circular_numba, scan_linear_numba, quilliot_witness_numba)


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_IMPL))


def _pick(which: str | None) -> tuple:
    name = _DEFAULT if which is None else which
    if name not in _IMPL:
        raise ValueError(f"backend {name!r} not available (have {sorted(_IMPL)})")
    return _IMPL[name]


def scan_circular(n, edges, pairs, tight_only, backend: str | None = None) -> np.ndarray:
    keys = _pick(backend)[0](n, edges, pairs, tight_only)
    return np.sort(keys)


def scan_linear(n, edges, pairs, tight_only, backend: str | None = None) -> np.ndarray:
    keys = _pick(backend)[1](n, edges, pairs, tight_only)
    return np.sort(keys)


def quilliot_witness(n, edges, backend: str | None = None) -> int:
    return _pick(backend)[2](n, edges)
