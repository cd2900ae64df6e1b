from dotenv import load_dotenv
import argparse
from fractions import Fraction
import os
import random
from pyquartet.geometry import Point, concyclic_det
from pyquartet.oracle import DegenerateTuple, apex


load_dotenv()


def same_arc_root(m, n, big_m):
    # N solving MN(n+m) - mn(M+N) + M + N - m - n = 0
    return (m * n * big_m - big_m + m + n) / (big_m * (m + n) - m * n + 1)


def opposite_arc_root(m, n, big_m):
    # N solving (MN-1)(mn-1) + (M+N)(n+m) = 0
    return ((m * n - 1) - big_m * (m + n)) / (big_m * (m * n - 1) + m + n)


def concyclic_value(m, n, big_m, big_n) -> Fraction:
    a, d = Point.of(0, 0), Point.of(1, 0)
    b, c = (Point.of(*apex(u, v)) for u, v in ((m, n), (big_m, big_n)))
    return concyclic_det(a, b, c, d).constant_value


def run_experiment(trials: int, seed: int, bound: int):
    rng = random.Random(seed)
    counts = {"same arc": 0, "opposite arc": 0, "random N": 0}
    done = 0
    while done < trials:
        m, n, big_m = (Fraction(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(3))
        try:
            roots = {
                "same arc": same_arc_root(m, n, big_m),
                "opposite arc": opposite_arc_root(m, n, big_m),
                "random N": Fraction(rng.randint(1, bound), rng.randint(1, bound)),
            }
            values = {label: concyclic_value(m, n, big_m, big_n) for label, big_n in roots.items()}
        except (DegenerateTuple, ZeroDivisionError):
            continue
        for label, value in values.items():
            counts[label] += value == 0
        done += 1

    print(f"{trials} random (m, n, M), seed {seed}: concyclic determinant of ABCD vanishes")
    for label, count in counts.items():
        print(f"  N on the {label} factor: {count}/{trials}" if label != "random N"
              else f"  N drawn at random: {count}/{trials}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Compare the radius denominator factors with concyclicity")
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=int(os.getenv("QUARTET_SEED", "20160700")))
    parser.add_argument("--bound", type=int, default=int(os.getenv("QUARTET_BOUND", "1000")))
    args = parser.parse_args()

    run_experiment(args.trials, args.seed, args.bound)
