from dotenv import load_dotenv
import argparse
from itertools import combinations
import os
import random
from pyquartet.oracle import DegenerateTuple, rebuild_scene, reflect_point
from pyquartet.ratfield import random_point
from pyquartet.scene import BASE_POINTS, STARRED_POINTS, display_name


load_dotenv()

# every pair of conjugates against every line through two vertices; the opposite line is the
# one through the two vertices that are not starred in the pair


def run_experiment(trials: int, seed: int, bound: int):
    rng = random.Random(seed)
    lines = list(combinations(BASE_POINTS, 2))
    pairs = list(combinations(STARRED_POINTS, 2))
    holds = {(pair, line): 0 for pair in pairs for line in lines}
    done = 0
    while done < trials:
        tangents = list(random_point(rng, ["m", "n", "M", "N"], bound).values())
        try:
            points = rebuild_scene(*tangents)
        except (DegenerateTuple, ZeroDivisionError):
            continue
        for pair in pairs:
            for line in lines:
                mirrored = reflect_point(points[pair[0]], points[line[0]], points[line[1]])
                holds[pair, line] += mirrored == points[pair[1]]
        done += 1

    print(f"{trials} random tuples, seed {seed}")
    for pair in pairs:
        for line in lines:
            if holds[pair, line]:
                first, second = (display_name(name) for name in pair)
                print(f"  {first},{second} across {''.join(line)}: {holds[pair, line]}/{trials}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Which conjugate pairs are mirror images across which lines")
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=int(os.getenv("QUARTET_SEED", "20160700")))
    parser.add_argument("--bound", type=int, default=int(os.getenv("QUARTET_BOUND", "1000")))
    args = parser.parse_args()

    run_experiment(args.trials, args.seed, args.bound)
