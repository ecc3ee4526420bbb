"""Randomized property-suite runner behind the check command."""

import random

from .forward import check_forward_inequalities, validate_forward
from .reverse import check_reverse_inequalities, validate_reverse


def random_forward(n: int, bound: int, rng: random.Random):
    cols = [sorted(rng.randint(0, bound) for _ in range(n - j + 1))
            for j in range(1, n + 1)]
    return validate_forward(cols, n)


def random_reverse(n: int, bound: int, rng: random.Random):
    cols = [sorted((rng.randint(0, bound) for _ in range(n - j + 1)), reverse=True)
            for j in range(1, n + 1)]
    return validate_reverse(cols, n)


def run_suites(ns, bound: int, samples: int, seed: int = 0) -> dict:
    """Sample triangles per side across the given ranks and collect violations.

    The sample budget is split evenly over the ranks; each triangle runs the
    full inequality suite of its side.
    """
    rng = random.Random(seed)
    violations = []
    rows = []
    ns = list(ns)
    for side in ("forward", "reverse"):
        for idx, n in enumerate(ns):
            quota = samples // len(ns) + (1 if idx < samples % len(ns) else 0)
            bad = 0
            for _ in range(quota):
                if side == "forward":
                    found = check_forward_inequalities(random_forward(n, bound, rng))
                else:
                    found = check_reverse_inequalities(random_reverse(n, bound, rng))
                if found:
                    bad += 1
                    for item in found:
                        violations.append(dict(item, side=side, n=n))
            rows.append({"side": side, "n": n, "samples": quota, "bad_samples": bad})
    return {
        "bound": bound,
        "seed": seed,
        "rows": rows,
        "violations": violations,
    }
