"""Numerical evaluation of alternating Euler sums by truncated nested series.

The nested sum over ``n_1 > ... > n_d >= 1`` is computed in one streaming
pass over ``k = 1..N``: level ``i`` keeps the running sum of its terms over
indices ``< k``, so the cost is O(d N) and memory O(d).  All running sums
use Neumaier compensation.  Error estimates come from differencing the
truncations at ``N`` and ``2N``; they are heuristic, not bounds.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from numba import njit

from .words import EulerWord, compositions, restricted_words, xi_word

N0 = 2**16
N_MAX = 2**24


@dataclass(frozen=True)
class NumericResult:
    value: float
    error_estimate: float
    terms_used: int


@njit(cache=True, nogil=True)
def _advance(exps, bars, run, comp, k_start, k_end):  # pragma: no cover - compiled
    # run[i] + comp[i]: compensated sum of level-i terms over indices < k;
    # run[d] is the constant 1 closing the innermost level
    d = exps.shape[0]
    vals = np.zeros(d)
    top = 0
    for i in range(d):
        top = max(top, exps[i])
    pw = np.ones(top + 1)
    for k in range(k_start, k_end + 1):
        inv = 1.0 / k
        odd = k & 1
        for j in range(1, top + 1):
            pw[j] = pw[j - 1] * inv
        for i in range(d):
            t = pw[exps[i]]
            if bars[i] and odd:
                t = -t
            vals[i] = t * (run[i + 1] + comp[i + 1])
        for i in range(d):
            x = vals[i]
            s = run[i]
            tot = s + x
            if abs(s) >= abs(x):
                comp[i] += (s - tot) + x
            else:
                comp[i] += (x - tot) + s
            run[i] = tot
    return run[0] + comp[0]


class _Stream:
    """Resumable truncated evaluation of one word."""

    def __init__(self, w: EulerWord):
        w.check_admissible()
        self.exps = np.array(w.exponents, dtype=np.int64)
        self.bars = np.array([b for _, b in w.entries], dtype=np.bool_)
        self.run = np.zeros(w.depth + 1)
        self.comp = np.zeros(w.depth + 1)
        self.run[w.depth] = 1.0
        self.n = 0
        self.value = 0.0

    def advance_to(self, n: int) -> float:
        if n > self.n:
            self.value = float(_advance(self.exps, self.bars, self.run, self.comp, self.n + 1, n))
            self.n = n
        return self.value


def eval_word(w: EulerWord, N: int) -> float:
    """Truncated sum with ``n_1 <= N``."""
    if N < w.depth:
        raise ValueError(f"truncation N={N} smaller than depth {w.depth}")
    return _Stream(w).advance_to(N)


def default_tol(w: EulerWord) -> float:
    # slow 1/N tails of unbarred low-weight words cannot reach 1e-8 by N_MAX
    if w.bars == 0 and w.weight <= 4:
        return 1e-5
    return 1e-8


def eval_word_refined(
    w: EulerWord, tol: Optional[float] = None, n0: int = N0, n_max: int = N_MAX
) -> NumericResult:
    """Double N from ``n0`` until ``|S_2N - S_N| < tol`` or ``2N`` reaches ``n_max``.

    When the tolerance is not reached the last result is returned with
    ``error_estimate >= tol``; the caller decides what to do with it.
    """
    if tol is None:
        tol = default_tol(w)
    if tol < 1e-12:
        raise ValueError("tolerance below 1e-12 is not supported in double precision")
    stream = _Stream(w)
    n = n0
    s_n = stream.advance_to(n)
    while True:
        s_2n = stream.advance_to(2 * n)
        est = abs(s_2n - s_n)
        if est < tol or 2 * n >= n_max:
            return NumericResult(s_2n, est, 2 * n)
        n *= 2
        s_n = s_2n


def _reduce(words: list[EulerWord], tol, workers: Optional[int]) -> NumericResult:
    ordered = sorted(words)
    if workers is None:
        workers = min(8, os.cpu_count() or 1)
    if workers > 1 and len(ordered) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda w: eval_word_refined(w, tol), ordered))
    else:
        results = [eval_word_refined(w, tol) for w in ordered]
    # fsum over sorted members: bit-identical regardless of scheduling
    return NumericResult(
        math.fsum(r.value for r in results),
        math.fsum(r.error_estimate for r in results),
        max((r.terms_used for r in results), default=0),
    )


def restricted_sum_numeric(
    n: int,
    d: int,
    alpha: Optional[int] = None,
    *,
    xi: bool = False,
    tol: Optional[float] = None,
    workers: Optional[int] = None,
) -> NumericResult:
    """Sum of refined member evaluations over the Xi words (``xi=True``) or the
    words with exactly ``alpha`` bars (``alpha=None`` means every bar pattern)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    if xi:
        words = [xi_word(c) for c in compositions(n, d)]
    elif alpha is None:
        words = [w for a in range(d + 1) for w in restricted_words(n, d, a)]
    else:
        if not 0 <= alpha <= d:
            raise ValueError(f"need 0 <= alpha <= d, got alpha={alpha}")
        words = list(restricted_words(n, d, alpha))
    return _reduce(words, tol, workers)


def sum_words(words: Iterable[EulerWord], tol=None, workers=None) -> NumericResult:
    return _reduce(list(words), tol, workers)
