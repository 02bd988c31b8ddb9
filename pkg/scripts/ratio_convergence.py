"""Measure how fast a_{r+1}/a_r approaches 1/rho_1 for eventually
positive quotients.

A simple pole (k=1) converges geometrically, so the window average of
|a_{r+1}/a_r - 1/rho_1| sits near machine precision.  A pole of order
k >= 2 carries a polynomial factor r^(k-1) in the coefficients, which
leaves a slow (k-1)/(r*rho_1)-sized offset; the table prints both the
measured error and that prediction so the two regimes are visible side
by side.
"""

import argparse
import sys
from dataclasses import dataclass

from chebflag.chebpoly import Partition, roots_of_pm
from chebflag.quotient import classify, expand, make_spec


@dataclass(frozen=True)
class WindowConfig:
    lo: int = 80
    hi: int = 120


CASES = [
    # (xi, m, mu): four simple poles, then higher-order poles
    ((1,), 2, 1),
    ((2,), 3, 2),
    ((3, 2), 4, 1),
    ((3, 3), 4, 2),
    ((), 2, 2),
    ((1, 1), 3, 5),
    ((2, 2, 2), 3, 6),
    ((), 4, 11),
]


def measure(parts, m, mu, win: WindowConfig):
    sp = make_spec(Partition(parts), m, mu)
    if classify(sp).kind != "eventually_positive":
        raise ValueError(f"{parts}, m={m}, mu={mu} is not eventually positive")
    cs = expand(sp, win.hi + 1).coeffs.coeffs
    target = 1.0 / roots_of_pm(m).rho1
    errs = [abs(cs[r + 1] / cs[r] - target) for r in range(win.lo, win.hi + 1)]
    avg = sum(errs) / len(errs)
    mid = (win.lo + win.hi) // 2
    # a pole of order k carries r^(k-1): step-to-step that drifts the
    # ratio by about (k-1)/(r*rho1)
    predicted = (sp.k - 1) / (mid * roots_of_pm(m).rho1) if sp.k >= 2 else 0.0
    return sp, avg, predicted


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=80)
    ap.add_argument("--hi", type=int, default=120)
    ns = ap.parse_args(argv)
    win = WindowConfig(lo=ns.lo, hi=ns.hi)
    print(f"window r in [{win.lo}, {win.hi}]")
    print(f"{'xi':>12} {'m':>2} {'mu':>3} {'k':>2} {'avg error':>12} {'predicted':>12}")
    for parts, m, mu in CASES:
        sp, avg, predicted = measure(parts, m, mu, win)
        print(
            f"{str(list(parts)):>12} {m:>2} {mu:>3} {sp.k:>2} "
            f"{avg:>12.3e} {predicted:>12.3e}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
