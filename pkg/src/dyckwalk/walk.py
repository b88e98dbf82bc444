"""Absorbing random walk on 0..m: exact formulas and Monte Carlo.

The walk starts at node m-1, steps right with probability p and left
with probability 1-p, and stops on hitting either absorbing end, 0 or
m.  Two exact quantities are computed for p in (0, 1), p != 1/2:

  * hit_probability(m, p)       -- chance of absorption at m rather
                                   than 0 (the classic ruin formula).
  * conditional_hit_time(m, p)  -- expected number of steps to reach m,
                                   conditional on never hitting 0.

Every successful walk has odd length 2k+1 (one more right step than
left), and its middle portion is a Dyck path of order k with peak
height at most m-2; walk_length_to_order converts lengths to orders.
Through that correspondence the product

    hit_probability(m, p) / p * conditional_hit_time(m, p)

equals the bounded-path series sum_k (2k+1) A(m-2, k) x^k evaluated at
x = p*(1-p), and path_series_closed computes it directly from the
closed-form rational function, giving an independent route to the same
number.

simulate() estimates both quantities empirically.  Trial t draws its
steps from its own splitmix64 stream seeded by mixing (seed, t), so
results are a pure function of the configuration and independent of
execution order or batching; trials are advanced in lockstep with
numpy for speed.  Trials still unresolved after max_steps are counted
as truncated and excluded from the estimators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .heightpoly import (
    check_step_probability,
    height_poly,
    power_diff_ratio,
)
from .poly import add, eval_at, mul, shift

_U64 = np.uint64
_STREAM_STEP = _U64(0x9E3779B97F4A7C15)
# A different odd constant for per-trial seeding keeps trial streams from
# being shifted copies of one another.
_TRIAL_KEY = _U64(0xD1B54A32D192ED03)
_INV53 = 2.0 ** -53
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class WalkConfig:
    """Parameters of one Monte Carlo run.

    p may be a Fraction or a float; the simulator always steps at
    binary64 resolution (u < float(p) against 53-bit uniforms), so give
    p as a Fraction only to document intent - exact comparisons are done
    by the callers via the exact routes.
    """

    m: int
    p: Fraction | float
    trials: int
    seed: int
    max_steps: int = 10 ** 7

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if not 0 < float(self.p) < 1:
            raise ValueError(f"p must lie in (0, 1), got {self.p}")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.max_steps < 1:
            raise ValueError(f"max_steps must be positive, got {self.max_steps}")


@dataclass(frozen=True)
class WalkStats:
    """Outcome counts and estimators of one run.

    hit_prob estimates absorption at m conditional on absorption
    (truncated trials are excluded); its standard error is binomial.
    mean_hit_len averages the lengths of right-absorbed walks, with the
    sample-standard-deviation standard error.  Estimators that have no
    supporting trials are NaN.
    """

    trials_run: int
    hits_right: int
    hits_left: int
    truncated: int
    hit_prob: float
    hit_prob_se: float
    mean_hit_len: float
    mean_hit_len_se: float


def hit_probability(m: int, p: Fraction) -> Fraction:
    """Exact probability that the walk from m-1 reaches m before 0.

    Equals p * power_diff(m-1, p) / power_diff(m, p).
    """
    return p * power_diff_ratio(m, p)


def conditional_hit_time(m: int, p: Fraction) -> Fraction:
    """Exact expected steps from m-1 to m, given 0 is never hit.

    Built from the base case T_2 = 1 by the renewal recurrence
    T_i = r_i + T_{i-1} * (r_i - 1) with r_i = power_diff_ratio(i, p).
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    check_step_probability(p)
    t = Fraction(1)
    for i in range(3, m + 1):
        r = power_diff_ratio(i, p)
        t = r + t * (r - 1)
    return t


def path_series_closed(m: int, p: Fraction) -> Fraction:
    """Value of sum_k (2k+1) A(m-2, k) x^k at x = p*(1-p), closed form.

    Evaluates the rational function

        [x**(m-1) * (1-2m) + P_{2m-1}(x)] / [(1-4x) * P_m(x)**2]

    exactly; it equals hit_probability(m,p)/p * conditional_hit_time(m,p).
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    check_step_probability(p)
    x = p * (1 - p)
    num = add(shift((1 - 2 * m,), m - 1), height_poly(2 * m - 1))
    hm = height_poly(m)
    den = mul((1, -4), mul(hm, hm))
    return eval_at(num, x) / eval_at(den, x)


def renewal_identity_holds(m: int, p: Fraction) -> bool:
    """Check the first-step decomposition of the conditional hit time.

    With H = hit_probability(m, p) and T_i = conditional_hit_time(i, p):
    a successful walk either steps right immediately (probability p,
    one step) or steps left yet still succeeds (probability H - p,
    costing the step plus a return to m-1 plus a fresh passage to m), so

        H * T_m == p + (H - p) * (1 + T_{m-1} + T_m)

    must hold exactly.
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    hit = hit_probability(m, p)
    t_prev = conditional_hit_time(m - 1, p)
    t_cur = conditional_hit_time(m, p)
    return hit * t_cur == p + (hit - p) * (1 + t_prev + t_cur)


def walk_length_to_order(length: int) -> int:
    """Order k of the Dyck path carried by a successful walk of 2k+1 steps."""
    if length < 1 or length % 2 == 0:
        raise ValueError(f"successful walk lengths are odd and positive, got {length}")
    return (length - 1) // 2


def _mix64(z: np.ndarray) -> np.ndarray:
    """splitmix64 output function, vectorized over uint64 states."""
    z = (z ^ (z >> _U64(30))) * _U64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> _U64(27))) * _U64(0x94D049BB133111EB)
    return z ^ (z >> _U64(31))


def simulate(cfg: WalkConfig) -> WalkStats:
    """Run cfg.trials independent walks and return outcome statistics.

    Deterministic for a fixed configuration: trial t consumes the
    splitmix64 stream with initial state seed + (t+1) * key (mod 2**64),
    one draw per step, regardless of how trials are batched.
    """
    p_step = float(cfg.p)
    seed = _U64(cfg.seed & _MASK64)
    trial_ids = np.arange(1, cfg.trials + 1, dtype=np.uint64)
    states = seed + trial_ids * _TRIAL_KEY
    pos = np.full(cfg.trials, cfg.m - 1, dtype=np.int64)

    hits_right = hits_left = 0
    len_sum = len_sqsum = 0  # exact int accumulation over right-absorbed trials
    step = 0
    while pos.size and step < cfg.max_steps:
        step += 1
        states = states + _STREAM_STEP
        uniforms = (_mix64(states) >> _U64(11)) * _INV53
        pos = pos + np.where(uniforms < p_step, 1, -1)
        right = pos == cfg.m
        left = pos == 0
        n_right = int(right.sum())
        n_left = int(left.sum())
        if n_right:
            if step % 2 == 0:
                raise AssertionError(f"even-length success at step {step}")
            hits_right += n_right
            len_sum += n_right * step
            len_sqsum += n_right * step * step
        if n_left:
            hits_left += n_left
        if n_right or n_left:
            keep = ~(right | left)
            pos = pos[keep]
            states = states[keep]
    truncated = int(pos.size)

    absorbed = hits_right + hits_left
    if absorbed:
        hit_prob = hits_right / absorbed
        hit_prob_se = math.sqrt(hit_prob * (1.0 - hit_prob) / absorbed)
    else:
        hit_prob = hit_prob_se = math.nan
    if hits_right:
        mean_len = len_sum / hits_right
        if hits_right > 1:
            var = (len_sqsum - len_sum * mean_len) / (hits_right - 1)
            mean_len_se = math.sqrt(max(var, 0.0) / hits_right)
        else:
            mean_len_se = math.nan
    else:
        mean_len = mean_len_se = math.nan

    return WalkStats(
        trials_run=cfg.trials,
        hits_right=hits_right,
        hits_left=hits_left,
        truncated=truncated,
        hit_prob=hit_prob,
        hit_prob_se=hit_prob_se,
        mean_hit_len=mean_len,
        mean_hit_len_se=mean_len_se,
    )
