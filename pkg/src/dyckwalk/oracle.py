"""Three independent ways to count height-bounded Dyck paths.

Ground truth for the closed-form extraction in genfunc:

  * count_paths_bruteforce -- backtracking enumeration of every up/down
    sequence that stays nonnegative and returns to zero, filtering on
    peak height.  Exponential; guarded to order <= 14.
  * count_paths_dp -- transfer-matrix dynamic program over
    (step, height) states with a rolling row of exact ints.
  * count_by_contfrac -- truncated power-series convergents
    G_0 = 1, G_h = 1 / (1 - z * G_{h-1}); the coefficients of G_n count
    paths of height <= n.

This module is deliberately self-contained: it shares no code with the
generating-function route it is used to check.
"""

from __future__ import annotations

import math
from functools import lru_cache

BRUTEFORCE_MAX_ORDER = 14


def catalan(k: int) -> int:
    """The kth Catalan number, C(2k, k) / (k+1)."""
    if k < 0:
        raise ValueError(f"order must be nonnegative, got {k}")
    return math.comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _maxima_histograms(k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Enumerate all Dyck paths of order k; histogram two per-path maxima.

    Returns (by_height, by_peak): entry h of by_height counts paths whose
    maximum node height is h, entry h of by_peak counts paths whose
    highest peak is at height h (0 for the empty path, which has no
    peaks).  The walk tracks both quantities independently so their
    agreement is an observation, not an assumption.
    """
    by_height = [0] * (k + 1)
    by_peak = [0] * (k + 1)
    if k == 0:
        by_height[0] = by_peak[0] = 1
        return tuple(by_height), tuple(by_peak)
    steps = 2 * k

    def descend(pos: int, h: int, maxh: int, maxpeak: int, last_up: bool) -> None:
        if pos == steps:
            by_height[maxh] += 1
            by_peak[maxpeak] += 1
            return
        rem = steps - pos
        # up step, unless the walk could no longer return to zero
        if h + 1 <= rem - 1:
            descend(pos + 1, h + 1, max(maxh, h + 1), maxpeak, True)
        # down step; an up step immediately before makes node h a peak
        if h > 0:
            descend(pos + 1, h - 1, maxh, max(maxpeak, h) if last_up else maxpeak, False)

    descend(0, 0, 0, 0, False)
    return tuple(by_height), tuple(by_peak)


def count_paths_bruteforce(k: int, n: int) -> int:
    """Number of Dyck paths of order k with every peak height <= n.

    Exhaustive enumeration; refuses k > BRUTEFORCE_MAX_ORDER.  The count
    under the peak-height filter is compared against the count under the
    max-node-height filter on every call, since a Dyck path attains its
    maximum at a peak; disagreement would falsify that equivalence.
    """
    if k < 0 or n < 0:
        raise ValueError(f"order and bound must be nonnegative, got k={k}, n={n}")
    if k > BRUTEFORCE_MAX_ORDER:
        raise ValueError(
            f"order {k} exceeds brute-force guard {BRUTEFORCE_MAX_ORDER} "
            f"(2**{2 * k} sequences)"
        )
    by_height, by_peak = _maxima_histograms(k)
    cap = min(n, k)
    peak_count = sum(by_peak[: cap + 1])
    height_count = sum(by_height[: cap + 1])
    if peak_count != height_count:
        raise AssertionError(
            f"peak-height filter ({peak_count}) and max-height filter "
            f"({height_count}) disagree at k={k}, n={n}"
        )
    return peak_count


def count_paths_dp(k: int, n: int) -> int:
    """Transfer-matrix count of order-k Dyck paths with height <= n.

    Propagates exact path counts over heights 0..min(n, k) through 2k
    steps; O(k * min(n, k)) big-int additions.
    """
    if k < 0 or n < 0:
        raise ValueError(f"order and bound must be nonnegative, got k={k}, n={n}")
    hmax = min(n, k)
    ways = [0] * (hmax + 1)
    ways[0] = 1
    for _ in range(2 * k):
        new = [0] * (hmax + 1)
        for h, w in enumerate(ways):
            if w:
                if h + 1 <= hmax:
                    new[h + 1] += w
                if h > 0:
                    new[h - 1] += w
        ways = new
    return ways[0]


def count_by_contfrac(n: int, kmax: int) -> list[int]:
    """Counts A(n, 0..kmax) via truncated continued-fraction convergents.

    Iterates G_0 = 1, G_h = 1 / (1 - z * G_{h-1}) as integer power
    series mod z**(kmax+1); after n iterations the coefficients count
    Dyck paths of height <= n.
    """
    if n < 0 or kmax < 0:
        raise ValueError(f"bound and kmax must be nonnegative, got n={n}, kmax={kmax}")
    conv = [1] + [0] * kmax
    for _ in range(n):
        # denominator D = 1 - z * conv, truncated; invert (D_0 is 1)
        den = [1] + [-c for c in conv[:kmax]]
        inv = [0] * (kmax + 1)
        inv[0] = 1
        for k in range(1, kmax + 1):
            acc = 0
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * inv[k - j]
            inv[k] = acc
        conv = inv
    return conv
