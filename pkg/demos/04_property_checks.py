"""Run the seeded verification suites at desk scale.

Each suite Monte Carlo checks one structural fact: the polygon inequality
(plain, squared, and Schmidt-weight form), the no-area theorem, the
monotone ratio of the Schmidt-weight map, agreement of the two 3-tangle
routes, and local-unitary invariance.  A failure count of zero means no
counterexample was found at the suite's tolerance.

Reports print as the same JSON lines the command-line `verify` emits.
"""

import trifill as tf

N = 20_000
SEED = 12345


def main():
    print(f"running all suites with n = {N}, seed = {SEED}\n")
    total = 0
    for name in tf.SUITE_NAMES:
        report = tf.run_suite(name, N, SEED)
        print(report.json_line())
        if isinstance(report, tf.InequivalenceScan):
            total += 0 if report.forced_pair_disagrees else 1
        else:
            total += report.failures
        print(f"  ... {name} took {report.elapsed:.2f}s")
    print()
    print("total failures:", total)

    print()
    print("The no-area theorem, hand-checked on shapes:")
    line_no_short_edge = tf.ConcurrenceTriangle(0.3, 0.3, 0.6)
    print(f"  (0.3, 0.3, 0.6) colinear, no short edge -> forbidden for states: "
          f"{tf.violates_no_area(line_no_short_edge)}")
    bisep = tf.concurrence_triangle(tf.named_state("BellTimesKet0"))
    print(f"  Bell(x)|0> triangle {tuple(round(e, 6) for e in bisep.edges)} "
          f"-> zero area via a zero edge, allowed: {not tf.violates_no_area(bisep)}")


if __name__ == "__main__":
    main()
