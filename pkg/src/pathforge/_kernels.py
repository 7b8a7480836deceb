"""Bulk kernels over bit-encoded words.

A word of length ``t = 2n`` is packed into a ``uint64``: bit ``t - 1 - j``
is set iff step ``j`` (0-based) is a down-step.  With this packing numeric
order is the canonical word order (U < D).

Each kernel has a numba implementation and a pure-numpy one.  The numba
path is used unless ``PATHFORGE_DISABLE_NUMBA`` is set to a non-empty value
other than ``0`` (``NUMBA_DISABLE_JIT`` is honoured too), or numba cannot be
imported.
"""
from __future__ import annotations

import os

import numpy as np

MAX_PACKED_N = 32


def _env_disabled() -> bool:
    flag = os.environ.get("PATHFORGE_DISABLE_NUMBA", "")
    jit_off = os.environ.get("NUMBA_DISABLE_JIT", "")
    return flag not in ("", "0") or jit_off not in ("", "0")


try:
    if _env_disabled():
        raise ImportError("numba disabled by environment")
    import numba

    njit = numba.njit(cache=True, nogil=True)
    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False

DEFAULT_BACKEND = "numba" if HAVE_NUMBA else "numpy"


def backends() -> list[str]:
    return ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]


# --------------------------------------------------------------------------
# numpy implementations

def _np_expand(state, depth, n, dyck):
    """Extend every prefix in ``state`` by one step, keeping canonical order."""
    mask, h, ups, evu, pks, last_up = state
    downs = depth - ups
    can_u = ups < n
    can_d = downs < n
    if dyck:
        can_d &= h > 0
    odd_pos = depth % 2  # 1-based position depth+1 is even
    d_peak = (pks + 1) if depth == 0 else (pks + last_up)
    pairs = (
        np.stack([mask << np.uint64(1), (mask << np.uint64(1)) | np.uint64(1)], axis=1),
        np.stack([h + 1, h - 1], axis=1),
        np.stack([ups + 1, ups], axis=1),
        np.stack([evu + odd_pos, evu], axis=1),
        np.stack([pks, d_peak], axis=1),
        np.stack([np.ones_like(last_up), np.zeros_like(last_up)], axis=1),
    )
    keep = np.stack([can_u, can_d], axis=1).ravel()
    return tuple(a.ravel()[keep] for a in pairs)


def _np_root():
    z = np.zeros(1, dtype=np.int16)
    return (np.zeros(1, dtype=np.uint64), z, z.copy(), z.copy(), z.copy(), np.zeros(1, dtype=np.int16))


def _np_grow(n, dyck, chunk=1 << 16):
    """Yield final-depth state blocks, partitioned by word prefix."""
    t = 2 * n
    split = min(t, 12)
    state = _np_root()
    for d in range(split):
        state = _np_expand(state, d, n, dyck)
    total = len(state[0])
    for lo in range(0, total, chunk):
        block = tuple(a[lo:lo + chunk] for a in state)
        for d in range(split, t):
            block = _np_expand(block, d, n, dyck)
        yield block


def np_enumerate_masks(n, dyck):
    blocks = [b[0] for b in _np_grow(n, dyck)]
    return np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.uint64)


def np_weight_counts(n, dyck):
    bib = np.zeros(n + 1, dtype=np.int64)
    peaks = np.zeros(n + 2, dtype=np.int64)
    total = 0
    for mask, h, ups, evu, pks, last_up in _np_grow(n, dyck, chunk=1 << 10):
        bib += np.bincount(evu, minlength=n + 1)[: n + 1]
        peaks += np.bincount(pks + last_up, minlength=n + 2)[: n + 2]
        total += len(mask)
    return bib, peaks, total


def _np_bits(masks, t):
    """(N, t) array of 0/1, 1 = down-step."""
    shifts = np.arange(t - 1, -1, -1, dtype=np.uint64)
    return ((masks[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int8)


def _np_pack(bits):
    t = bits.shape[1]
    weights = np.left_shift(np.uint64(1), np.arange(t - 1, -1, -1, dtype=np.uint64))
    return (bits.astype(np.uint64) * weights[None, :]).sum(axis=1, dtype=np.uint64)


def _np_walk(nw, sw, n):
    """Vectorised reconstitution walk; returns (N, t) down-step bits."""
    t = 2 * n
    count = nw.shape[0]
    rows = np.arange(count)
    nw_pad = np.concatenate([nw, np.zeros((count, 1), dtype=bool)], axis=1)
    # sw_pad[:, k] is label k (1-based); column 0 and n are sentinels
    sw_pad = np.concatenate(
        [np.zeros((count, 1), dtype=bool), sw, np.zeros((count, 1), dtype=bool)], axis=1
    )
    h = np.zeros(count, dtype=np.int64)
    up = np.ones(count, dtype=bool)
    out = np.zeros((count, t), dtype=np.int8)
    for i in range(t):
        d = i + h
        e = i - h
        turn_down = up & ((d == t) | nw_pad[rows, np.minimum(d // 2, n)])
        turn_up = ~up & ((e == t) | sw_pad[rows, np.clip(e // 2, 0, n)])
        up = (up & ~turn_down) | turn_up
        out[:, i] = ~up
        h += np.where(up, 1, -1)
    return out


def np_phi(masks, n):
    t = 2 * n
    bits = _np_bits(np.asarray(masks, dtype=np.uint64), t)
    nw = bits[:, 0::2].astype(bool)  # toggled odd letters: arrow where down
    sw = ~bits[:, 1::2][:, :-1].astype(bool)
    return _np_pack(_np_walk(nw, sw, n))


def np_phi_inverse(masks, n):
    t = 2 * n
    masks = np.asarray(masks, dtype=np.uint64)
    count = len(masks)
    bits = _np_bits(masks, t).astype(bool)
    h = np.zeros((count, t + 1), dtype=np.int64)
    h[:, 1:] = np.cumsum(np.where(bits, -1, 1), axis=1)
    into_up = np.concatenate([np.ones((count, 1), dtype=bool), ~bits], axis=1)
    out_up = np.concatenate([~bits, np.zeros((count, 1), dtype=bool)], axis=1)
    idx = np.arange(t + 1)[None, :]
    peak = into_up & ~out_up
    valley = ~into_up & out_up
    d = idx + h
    e = idx - h
    nw = np.zeros((count, n + 1), dtype=bool)
    sw = np.zeros((count, n + 1), dtype=bool)
    r, c = np.nonzero(peak & (d < t))
    nw[r, d[r, c] // 2] = True
    r, c = np.nonzero(valley & (e < t))
    sw[r, e[r, c] // 2] = True
    out = np.zeros((count, t), dtype=np.int8)
    out[:, 0::2] = nw[:, :n]  # down where arrow
    out[:, 1:t - 1:2] = ~sw[:, 1:n]
    ups = (out[:, : t - 1] == 0).sum(axis=1)
    out[:, t - 1] = (ups == n).astype(np.int8)
    return _np_pack(out)


def np_path_stats(masks, n):
    """Per word: (even-indexed ups, peak count, is_dyck)."""
    t = 2 * n
    bits = _np_bits(np.asarray(masks, dtype=np.uint64), t).astype(bool)
    evu = (~bits[:, 1::2]).sum(axis=1)
    into_up = np.concatenate([np.ones((len(bits), 1), dtype=bool), ~bits], axis=1)
    out_up = np.concatenate([~bits, np.zeros((len(bits), 1), dtype=bool)], axis=1)
    pks = (into_up & ~out_up).sum(axis=1)
    h = np.cumsum(np.where(bits, -1, 1), axis=1)
    return evu.astype(np.int64), pks.astype(np.int64), (h.min(axis=1) >= 0)


# --------------------------------------------------------------------------
# numba implementations

if HAVE_NUMBA:

    @njit
    def _nb_dfs(n, dyck, record, masks_out):
        """Depth-first walk over all words; returns (bib, peaks, total)."""
        t = 2 * n
        bib = np.zeros(n + 1, dtype=np.int64)
        peaks = np.zeros(n + 2, dtype=np.int64)
        choice = np.full(t, -1, dtype=np.int8)
        h = np.zeros(t + 1, dtype=np.int64)
        ups = np.zeros(t + 1, dtype=np.int64)
        evu = np.zeros(t + 1, dtype=np.int64)
        pks = np.zeros(t + 1, dtype=np.int64)
        mask = np.zeros(t + 1, dtype=np.uint64)
        total = 0
        depth = 0
        while depth >= 0:
            if depth == t:
                p = pks[t] + (1 if choice[t - 1] == 0 else 0)
                bib[evu[t]] += 1
                peaks[p] += 1
                if record:
                    masks_out[total] = mask[t]
                total += 1
                depth -= 1
                continue
            s = choice[depth] + 1
            while s <= 1:
                if s == 0:
                    if ups[depth] < n:
                        break
                else:
                    if depth - ups[depth] < n and (not dyck or h[depth] > 0):
                        break
                s += 1
            if s > 1:
                choice[depth] = -1
                depth -= 1
                continue
            choice[depth] = s
            if s == 0:
                h[depth + 1] = h[depth] + 1
                ups[depth + 1] = ups[depth] + 1
                evu[depth + 1] = evu[depth] + (depth % 2)
                pks[depth + 1] = pks[depth]
                mask[depth + 1] = mask[depth] << np.uint64(1)
            else:
                h[depth + 1] = h[depth] - 1
                ups[depth + 1] = ups[depth]
                evu[depth + 1] = evu[depth]
                if depth == 0 or choice[depth - 1] == 0:
                    pks[depth + 1] = pks[depth] + 1
                else:
                    pks[depth + 1] = pks[depth]
                mask[depth + 1] = (mask[depth] << np.uint64(1)) | np.uint64(1)
            depth += 1
        return bib, peaks, total

    @njit
    def _nb_walk_mask(nw, sw, n):
        t = 2 * n
        h = 0
        up = True
        out = np.uint64(0)
        for i in range(t):
            if up:
                d = i + h
                if d == t or nw[d // 2]:
                    up = False
            else:
                e = i - h
                if e == t or (e >= 2 and sw[e // 2 - 1]):
                    up = True
            out = out << np.uint64(1)
            if up:
                h += 1
            else:
                out |= np.uint64(1)
                h -= 1
        return out

    @njit
    def _nb_phi(masks, n):
        t = 2 * n
        res = np.empty(len(masks), dtype=np.uint64)
        nw = np.zeros(n, dtype=np.bool_)
        sw = np.zeros(max(n - 1, 1), dtype=np.bool_)
        for r in range(len(masks)):
            m = masks[r]
            for j in range(t):
                down = (m >> np.uint64(t - 1 - j)) & np.uint64(1)
                if j % 2 == 0:
                    nw[j // 2] = down == 1
                elif j // 2 < n - 1:
                    sw[j // 2] = down == 0
            res[r] = _nb_walk_mask(nw, sw, n)
        return res

    @njit
    def _nb_phi_inverse(masks, n):
        t = 2 * n
        res = np.empty(len(masks), dtype=np.uint64)
        nw = np.zeros(n, dtype=np.bool_)
        sw = np.zeros(max(n - 1, 1), dtype=np.bool_)
        for r in range(len(masks)):
            m = masks[r]
            nw[:] = False
            sw[:] = False
            h = 0
            prev_up = True  # virtual up-step into v_0
            for i in range(t + 1):
                if i < t:
                    cur_up = ((m >> np.uint64(t - 1 - i)) & np.uint64(1)) == 0
                else:
                    cur_up = False
                if prev_up and not cur_up and i + h < t:
                    nw[(i + h) // 2] = True
                elif not prev_up and cur_up and i - h < t:
                    sw[(i - h) // 2 - 1] = True
                if i < t:
                    h += 1 if cur_up else -1
                prev_up = cur_up
            out = np.uint64(0)
            ups = 0
            for k in range(n):
                out = out << np.uint64(1)
                if nw[k]:
                    out |= np.uint64(1)
                else:
                    ups += 1
                out = out << np.uint64(1)
                if k < n - 1:
                    if sw[k]:
                        ups += 1
                    else:
                        out |= np.uint64(1)
                elif ups == n:
                    out |= np.uint64(1)
            res[r] = out
        return res

    @njit
    def _nb_path_stats(masks, n):
        t = 2 * n
        count = len(masks)
        evu = np.zeros(count, dtype=np.int64)
        pks = np.zeros(count, dtype=np.int64)
        dyck = np.ones(count, dtype=np.bool_)
        for r in range(count):
            m = masks[r]
            h = 0
            prev_up = True
            for i in range(t + 1):
                if i < t:
                    cur_up = ((m >> np.uint64(t - 1 - i)) & np.uint64(1)) == 0
                else:
                    cur_up = False
                if prev_up and not cur_up:
                    pks[r] += 1
                if i < t:
                    if cur_up and i % 2 == 1:
                        evu[r] += 1
                    h += 1 if cur_up else -1
                    if h < 0:
                        dyck[r] = False
                prev_up = cur_up
        return evu, pks, dyck


# --------------------------------------------------------------------------
# dispatch

def _check(n: int) -> None:
    if not 1 <= n <= MAX_PACKED_N:
        raise ValueError(f"packed kernels need 1 <= n <= {MAX_PACKED_N}, got {n}")


def _pick(backend: str | None) -> str:
    backend = backend or DEFAULT_BACKEND
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend unavailable")
    return backend


def weight_counts(n: int, dyck: bool, backend: str | None = None):
    """Histogram of (even-indexed ups) and (peak count) over all words.

    Returns ``(bib, peaks, total)`` where ``bib[v]`` counts words with ``v``
    even-indexed up-steps and ``peaks[k]`` counts words with ``k`` peaks.
    """
    _check(n)
    if _pick(backend) == "numba":
        return _nb_dfs(n, dyck, False, np.zeros(1, dtype=np.uint64))
    return np_weight_counts(n, dyck)


def enumerate_masks(n: int, dyck: bool, backend: str | None = None) -> np.ndarray:
    """All packed words in canonical order."""
    _check(n)
    if _pick(backend) == "numba":
        from math import comb

        size = comb(2 * n, n) // (n + 1) if dyck else comb(2 * n, n)
        out = np.zeros(size, dtype=np.uint64)
        _, _, total = _nb_dfs(n, dyck, True, out)
        assert total == size
        return out
    return np_enumerate_masks(n, dyck)


def phi_masks(masks, n: int, backend: str | None = None) -> np.ndarray:
    _check(n)
    masks = np.ascontiguousarray(masks, dtype=np.uint64)
    if _pick(backend) == "numba":
        return _nb_phi(masks, n)
    return np_phi(masks, n)


def phi_inverse_masks(masks, n: int, backend: str | None = None) -> np.ndarray:
    _check(n)
    masks = np.ascontiguousarray(masks, dtype=np.uint64)
    if _pick(backend) == "numba":
        return _nb_phi_inverse(masks, n)
    return np_phi_inverse(masks, n)


def path_stats(masks, n: int, backend: str | None = None):
    _check(n)
    masks = np.ascontiguousarray(masks, dtype=np.uint64)
    if _pick(backend) == "numba":
        return _nb_path_stats(masks, n)
    return np_path_stats(masks, n)


def pack_word(word) -> int:
    """Pack a word (iterable of steps with ``.value`` 'U'/'D') into an int."""
    out = 0
    for s in word:
        out = (out << 1) | (s.value == "D")
    return out


def unpack_word(mask: int, n: int) -> str:
    t = 2 * n
    return "".join("D" if (int(mask) >> (t - 1 - j)) & 1 else "U" for j in range(t))
