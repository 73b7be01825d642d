"""Brute-force semantics by sweeping every subset of arguments.

Deliberately shares nothing with :mod:`dungsolve.semantics` or the
framework predicates: it reads only ``argument_count`` and the raw attack
pairs, and rebuilds its own bit masks. Use it to check the solver, never
to answer queries.
"""

from __future__ import annotations

from .errors import TooLarge
from .framework import ArgumentSet, Framework
from .semantics import Semantics

MAX_ARGUMENTS = 20


def _sweep(n: int, attacks) -> tuple[list[int], list[int]]:
    """Return (complete, stable) subsets as bit masks, ascending numerically."""
    out_mask = [0] * n
    in_mask = [0] * n
    for a, b in attacks:
        out_mask[a] |= 1 << b
        in_mask[b] |= 1 << a
    full = (1 << n) - 1
    # attacked[s] = union of out_mask over members of s, built from s minus its lowest bit
    attacked = [0] * (1 << n)
    complete: list[int] = []
    stable: list[int] = []
    for s in range(1, 1 << n):
        low = s & -s
        attacked[s] = attacked[s ^ low] | out_mask[low.bit_length() - 1]
    for s in range(1 << n):
        hit = attacked[s]
        if s & hit:
            continue
        defended = 0
        for x in range(n):
            if in_mask[x] & ~hit == 0:
                defended |= 1 << x
        if defended == s:
            complete.append(s)
        if s | hit == full:
            stable.append(s)
    return complete, stable


def brute_force_extensions(f: Framework, sem: Semantics | str) -> list[ArgumentSet]:
    """All ``sem``-extensions of ``f`` by exhaustive enumeration.

    Raises :class:`TooLarge` above ``MAX_ARGUMENTS`` arguments.
    """
    sem = Semantics(sem)
    n = f.argument_count
    if n > MAX_ARGUMENTS:
        raise TooLarge(n, MAX_ARGUMENTS)
    complete, stable = _sweep(n, f.attacks)
    if sem is Semantics.CO:
        chosen = complete
    elif sem is Semantics.ST:
        chosen = stable
    elif sem is Semantics.PR:
        chosen = [s for s in complete if not any(s != t and s & t == s for t in complete)]
    else:
        minimal = [s for s in complete if all(s & t == s for t in complete)]
        assert len(minimal) == 1, "grounded extension must be unique"
        chosen = minimal
    exts = [ArgumentSet.from_bits(s) for s in chosen]
    return sorted(exts, key=ArgumentSet.sort_key)
