"""Scan the fairest mafia size: exact optimum vs the square-root formula.

For each n in [--min-n, --max-n], print the m whose exact win chance sits
closest to 1/2, the parity-aware approximation (1/2)(pi/2)^(1/2 - n mod 2)
sqrt(n), and their gap.  The summary line reports the largest gap and the
share of n where the formula lands within one seat of the exact optimum;
the odd-n rows are where the formula drifts.
"""

import argparse

from mafia_odds import optimal_mafia_approx, optimal_mafia_numeric


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=10)
    parser.add_argument("--max-n", type=int, default=200)
    args = parser.parse_args()

    print("n,m_opt,approx,diff")
    diffs = []
    for n in range(args.min_n, args.max_n + 1):
        numeric = optimal_mafia_numeric(n)
        approx = optimal_mafia_approx(n)
        diffs.append(abs(approx - numeric))
        print(f"{n},{numeric},{approx:.4f},{diffs[-1]:.4f}")

    within_one = sum(d <= 1.0 for d in diffs)
    print(
        f"# max diff {max(diffs):.4f}; within one seat "
        f"{within_one}/{len(diffs)} = {within_one / len(diffs):.1%}"
    )


if __name__ == "__main__":
    main()
