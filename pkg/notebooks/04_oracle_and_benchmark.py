"""
Checking the solver against brute force
=======================================

Run the correctness-and-timing harness on part of the built-in corpus,
then look at how enumeration time grows with framework size.
"""

import time

import numpy as np

from dungsolve import Semantics, brute_force_extensions, enumerate_extensions
from dungsolve.bench import corpus_instances, run_harness
from dungsolve.generate import GeneratorConfig, generate

report = run_harness(corpus_instances(100))
print(report.summary())
print(report.jsonl().splitlines()[0])

# Solver vs oracle on a dozen larger random frameworks.
for seed in range(12):
    af = generate(GeneratorConfig(14, 0.15, seed=seed))
    for sem in Semantics:
        assert enumerate_extensions(af, sem) == brute_force_extensions(af, sem)
print("n=14: solver matches oracle")

# EE-PR time against size, well past the oracle's reach.
for n in (20, 40, 80, 160):
    times = []
    for seed in range(5):
        af = generate(GeneratorConfig(n, 2.0 / n, seed=seed))
        t0 = time.perf_counter()
        exts = enumerate_extensions(af, "PR")
        times.append(time.perf_counter() - t0)
    print(f"n={n:4d}  median EE-PR {np.median(times) * 1e3:8.2f} ms  last had {len(exts)} extensions")
