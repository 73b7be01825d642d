"""Seeded random and structured framework generators.

Random draws come from numpy's PCG64 bit generator, read as raw 64-bit
words so the output does not depend on numpy's distribution code. An
ordered pair (i, j) is an attack iff its word is below ``p * 2**64``.
Pairs are drawn row-major, self-pairs included.
"""

from __future__ import annotations

import enum
import string
from dataclasses import dataclass

import numpy as np

from .framework import Framework

__all__ = ["Shape", "GeneratorConfig", "generate", "argument_name", "corpus_configs", "corpus"]


class Shape(str, enum.Enum):
    ERDOS_RENYI = "erdos_renyi"
    CHAIN = "chain"
    K_CYCLE = "k_cycle"


@dataclass(frozen=True)
class GeneratorConfig:
    argument_count: int
    attack_probability: float = 0.0
    seed: int = 0
    shape: Shape = Shape.ERDOS_RENYI

    def __post_init__(self):
        if self.argument_count < 0:
            raise ValueError("argument_count must be non-negative")
        if not 0.0 <= self.attack_probability <= 1.0:
            raise ValueError("attack_probability must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        object.__setattr__(self, "shape", Shape(self.shape))


def argument_name(i: int) -> str:
    """Spreadsheet-style names: a..z, aa, ab, ..."""
    letters = string.ascii_lowercase
    out = []
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        out.append(letters[r])
    return "".join(reversed(out))


def generate(config: GeneratorConfig) -> Framework:
    n = config.argument_count
    names = [argument_name(i) for i in range(n)]
    if config.shape is Shape.CHAIN:
        return Framework(names, [(i, i + 1) for i in range(n - 1)])
    if config.shape is Shape.K_CYCLE:
        attacks = [(i, i + 1) for i in range(n - 1)]
        if n:
            attacks.append((n - 1, 0))
        return Framework(names, attacks)
    p = config.attack_probability
    if n == 0 or p == 0.0:
        return Framework(names, [])
    if p == 1.0:
        return Framework(names, [(i, j) for i in range(n) for j in range(n)])
    words = np.random.PCG64(config.seed).random_raw(n * n)
    hits = np.flatnonzero(words < np.uint64(int(p * 2**64)))
    return Framework(names, [(int(k) // n, int(k) % n) for k in hits])


PROBABILITIES = (0.1, 0.25, 0.5)


def corpus_configs(count: int = 500) -> list[GeneratorConfig]:
    """The fixed test corpus: n cycles 1..10, p cycles through PROBABILITIES every 10, seed = position."""
    return [
        GeneratorConfig(1 + k % 10, PROBABILITIES[(k // 10) % 3], seed=k)
        for k in range(count)
    ]


def corpus(count: int = 500) -> list[Framework]:
    return [generate(c) for c in corpus_configs(count)]
