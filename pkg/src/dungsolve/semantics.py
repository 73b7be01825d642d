"""Extension computation and acceptance decisions for CO, GR, PR and ST.

Everything starts from the grounded labelling, computed by a linear-time
worklist. Arguments the grounded labelling leaves undecided form the
*residual* framework; the remaining semantics are answered by a
backtracking search over three-valued labellings of the residual part with
domain propagation of the complete-labelling rules::

    x is IN   iff every attacker of x is OUT
    x is OUT  iff some attacker of x is IN
    x is UNDEC otherwise

Stable labellings are the complete labellings without UNDEC, so the stable
search simply starts with UNDEC removed from every domain.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator, Union

from .errors import UnknownArgument
from .framework import ArgumentSet, Framework, characteristic_function, is_conflict_free

__all__ = [
    "Label",
    "Semantics",
    "Task",
    "SingleExtension",
    "ExtensionSet",
    "Decision",
    "NoExtension",
    "SolverAnswer",
    "grounded_labelling",
    "grounded_extension",
    "enumerate_extensions",
    "some_extension",
    "decide_credulous",
    "decide_skeptical",
    "solve",
    "is_complete_extension",
    "is_stable_extension",
    "is_preferred_extension",
    "is_complete_labelling",
    "sort_extensions",
]


class Label(enum.IntEnum):
    IN = 1
    OUT = 2
    UNDEC = 4


class Semantics(str, enum.Enum):
    CO = "CO"
    GR = "GR"
    PR = "PR"
    ST = "ST"


class Task(str, enum.Enum):
    SE = "SE"
    EE = "EE"
    DC = "DC"
    DS = "DS"


@dataclass(frozen=True)
class SingleExtension:
    extension: ArgumentSet


@dataclass(frozen=True)
class ExtensionSet:
    extensions: tuple[ArgumentSet, ...]


@dataclass(frozen=True)
class Decision:
    value: bool


@dataclass(frozen=True)
class NoExtension:
    pass


SolverAnswer = Union[SingleExtension, ExtensionSet, Decision, NoExtension]

_IN, _OUT, _UNDEC = 1, 2, 4
_ALL = _IN | _OUT | _UNDEC
_SINGLETON = (False, True, True, False, True, False, False, False)


def sort_extensions(exts) -> list[ArgumentSet]:
    """Deduplicate and order lexicographically by ascending member indices."""
    return sorted(set(exts), key=ArgumentSet.sort_key)


# -- grounded ---------------------------------------------------------------


def grounded_labelling(f: Framework) -> list[Label]:
    """Grounded labelling via counters of not-yet-OUT attackers; O(n + m)."""
    n = len(f)
    attackers_of = f.attackers_of
    attacked_by = f.attacked_by
    live = [len(a) for a in attackers_of]
    label = [0] * n
    queue = [x for x in range(n) if live[x] == 0]
    for x in queue:
        label[x] = _IN
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for t in attacked_by[x]:
            if label[t]:
                continue
            label[t] = _OUT
            for u in attacked_by[t]:
                live[u] -= 1
                if live[u] == 0 and not label[u]:
                    label[u] = _IN
                    queue.append(u)
    return [Label(v) if v else Label.UNDEC for v in label]


def _grounded_in_indices(labels: list[Label]) -> list[int]:
    return [i for i, v in enumerate(labels) if v is Label.IN]


def grounded_extension(f: Framework) -> ArgumentSet:
    """Least fixpoint of the characteristic function."""
    return ArgumentSet(_grounded_in_indices(grounded_labelling(f)))


# -- residual labelling search ----------------------------------------------


class _Residual:
    """Search state over the arguments the grounded labelling leaves UNDEC.

    Only residual attackers matter inside the residual: grounded-OUT attackers
    never help and never hinder, and no residual argument has a grounded-IN
    attacker.
    """

    def __init__(self, f: Framework, labels: list[Label]):
        self.framework = f
        self.base_bits = ArgumentSet(_grounded_in_indices(labels)).bits
        glob = [i for i, v in enumerate(labels) if v is Label.UNDEC]
        local = {g: k for k, g in enumerate(glob)}
        self.globals = glob
        self.local = local
        self.attackers = [[local[a] for a in f.attackers_of[g] if a in local] for g in glob]
        self.targets = [[local[b] for b in f.attacked_by[g] if b in local] for g in glob]
        degree = [len(a) + len(t) for a, t in zip(self.attackers, self.targets)]
        self.order = sorted(range(len(glob)), key=lambda k: (-degree[k], k))

    def __len__(self) -> int:
        return len(self.globals)

    def to_global(self, local_in: list[int]) -> ArgumentSet:
        bits = self.base_bits
        g = self.globals
        for k in local_in:
            bits |= 1 << g[k]
        return ArgumentSet.from_bits(bits)

    def labellings(
        self,
        stable: bool = False,
        forced: dict[int, int] | None = None,
        accept: Callable[[list[int]], bool] | None = None,
    ) -> Iterator[list[int]]:
        """Yield the domain vector of every complete (or stable) labelling.

        ``forced`` maps local ids to domain masks intersected in before
        search. ``accept`` filters leaves; rejected leaves are skipped.
        Leaves come out in depth-first order, branching on the undecided
        argument of highest residual degree and trying IN, OUT, UNDEC.
        """
        k = len(self.globals)
        dom = [(_IN | _OUT) if stable else _ALL] * k
        if forced:
            for v, mask in forced.items():
                dom[v] &= mask
                if not dom[v]:
                    return
        trail: list[tuple[int, int]] = []
        if not self._propagate(dom, trail, range(k)):
            return
        order = self.order
        # frame: [var, values still to try, trail length before the var was set]
        stack: list[list] = []
        while True:
            var = -1
            for v in order:
                if not _SINGLETON[dom[v]]:
                    var = v
                    break
            if var < 0:
                assert self._leaf_is_legal(dom)
                if accept is None or accept(dom):
                    yield dom
            else:
                d = dom[var]
                stack.append([var, [b for b in (_IN, _OUT, _UNDEC) if d & b], len(trail)])
            # advance to the next consistent branch
            while stack:
                frame = stack[-1]
                v, values, mark = frame
                while len(trail) > mark:
                    u, old = trail.pop()
                    dom[u] = old
                if not values:
                    stack.pop()
                    continue
                b = values.pop(0)
                trail.append((v, dom[v]))
                dom[v] = b
                if self._propagate(dom, trail, (v,)):
                    break
            else:
                return

    def _propagate(self, dom: list[int], trail: list, changed) -> bool:
        attackers = self.attackers
        targets = self.targets
        queue = deque()
        queued = [False] * len(dom)

        def push(v):
            if not queued[v]:
                queued[v] = True
                queue.append(v)

        for v in changed:
            push(v)
            for t in targets[v]:
                push(t)

        def restrict(v: int, mask: int) -> bool:
            old = dom[v]
            new = old & mask
            if new == old:
                return True
            if not new:
                return False
            trail.append((v, old))
            dom[v] = new
            push(v)
            for t in targets[v]:
                push(t)
            return True

        while queue:
            x = queue.popleft()
            queued[x] = False
            att = attackers[x]
            all_out_possible = True
            all_out_forced = True
            some_in_possible = False
            some_in_forced = False
            for a in att:
                d = dom[a]
                if not d & _OUT:
                    all_out_possible = False
                if d != _OUT:
                    all_out_forced = False
                if d & _IN:
                    some_in_possible = True
                    if d == _IN:
                        some_in_forced = True
            allowed = 0
            if all_out_possible:
                allowed |= _IN
            if some_in_possible:
                allowed |= _OUT
            if not all_out_forced and not some_in_forced:
                allowed |= _UNDEC
            if not restrict(x, allowed):
                return False
            dx = dom[x]
            if dx == _IN:
                for a in att:
                    if not restrict(a, _OUT):
                        return False
            elif not dx & _OUT:
                # IN or UNDEC: no attacker may be IN
                for a in att:
                    if not restrict(a, _OUT | _UNDEC):
                        return False
            if dx == _OUT:
                cands = [a for a in att if dom[a] & _IN]
                if not cands:
                    return False
                if len(cands) == 1 and not restrict(cands[0], _IN):
                    return False
            elif not dx & _IN:
                # OUT or UNDEC: some attacker must be other than OUT
                cands = [a for a in att if dom[a] & (_IN | _UNDEC)]
                if not cands:
                    return False
                if len(cands) == 1 and not restrict(cands[0], _IN | _UNDEC):
                    return False
        return True

    def _leaf_is_legal(self, dom: list[int]) -> bool:
        for x, att in enumerate(self.attackers):
            labels = [dom[a] for a in att]
            if dom[x] == _IN:
                ok = all(d == _OUT for d in labels)
            elif dom[x] == _OUT:
                ok = any(d == _IN for d in labels)
            else:
                ok = not any(d == _IN for d in labels) and not all(d == _OUT for d in labels)
            if not ok:
                return False
        return True


def _in_locals(dom: list[int]) -> list[int]:
    return [k for k, d in enumerate(dom) if d == _IN]


def _in_bits(dom: list[int]) -> int:
    bits = 0
    for k, d in enumerate(dom):
        if d == _IN:
            bits |= 1 << k
    return bits


def _maximal(bitsets: list[int]) -> list[int]:
    """Keep the sets not strictly contained in another; input assumed distinct."""
    kept: list[int] = []
    for b in sorted(bitsets, key=lambda b: -b.bit_count()):
        if not any(b & ~k == 0 for k in kept):
            kept.append(b)
    return kept


def _maximize(res: _Residual, start: list[int]) -> list[int]:
    """Grow a complete labelling's IN-set until no complete strict superset exists."""
    current = _in_bits(start)
    while True:
        forced = {k: _IN for k in range(len(res)) if (current >> k) & 1}
        bigger = next(res.labellings(forced=forced, accept=lambda d: _in_bits(d) != current), None)
        if bigger is None:
            return [k for k in range(len(res)) if (current >> k) & 1]
        current = _in_bits(bigger)


def _setup(f: Framework) -> tuple[list[Label], _Residual]:
    labels = grounded_labelling(f)
    return labels, _Residual(f, labels)


def enumerate_extensions(f: Framework, sem: Semantics | str) -> list[ArgumentSet]:
    """Every ``sem``-extension of ``f``, deduplicated and lexicographically ordered."""
    sem = Semantics(sem)
    labels, res = _setup(f)
    if sem is Semantics.GR or len(res) == 0:
        return [ArgumentSet.from_bits(res.base_bits)]
    if sem is Semantics.ST:
        found = [res.to_global(_in_locals(d)) for d in res.labellings(stable=True)]
    else:
        in_sets = {_in_bits(d) for d in res.labellings()}
        if sem is Semantics.PR:
            in_sets = _maximal(list(in_sets))
        found = [res.to_global([k for k in range(len(res)) if (b >> k) & 1]) for b in in_sets]
    return sort_extensions(found)


def some_extension(f: Framework, sem: Semantics | str) -> SingleExtension | NoExtension:
    """One ``sem``-extension, or :class:`NoExtension` when none exists (ST only)."""
    sem = Semantics(sem)
    labels, res = _setup(f)
    if sem in (Semantics.GR, Semantics.CO) or len(res) == 0:
        return SingleExtension(ArgumentSet.from_bits(res.base_bits))
    if sem is Semantics.ST:
        dom = next(res.labellings(stable=True), None)
        if dom is None:
            return NoExtension()
        return SingleExtension(res.to_global(_in_locals(dom)))
    first = next(res.labellings())
    return SingleExtension(res.to_global(_maximize(res, list(first))))


def _query_index(f: Framework, x: int | str) -> int:
    if isinstance(x, str):
        if x not in f:
            raise UnknownArgument(f"argument {x!r} not in framework")
        return f.index(x)
    if not 0 <= x < len(f):
        raise UnknownArgument(f"argument id {x} out of range")
    return x


def decide_credulous(f: Framework, x: int | str, sem: Semantics | str) -> bool:
    """Does some ``sem``-extension contain ``x``? ``x`` is an id or a name."""
    sem = Semantics(sem)
    x = _query_index(f, x)
    labels, res = _setup(f)
    if labels[x] is not Label.UNDEC:
        if sem is Semantics.ST and labels[x] is Label.IN:
            return next(res.labellings(stable=True), None) is not None
        return labels[x] is Label.IN
    if sem is Semantics.GR:
        return False
    # CO and PR coincide: any complete extension containing x sits inside a preferred one
    k = res.local[x]
    return next(res.labellings(stable=sem is Semantics.ST, forced={k: _IN}), None) is not None


def decide_skeptical(f: Framework, x: int | str, sem: Semantics | str) -> bool:
    """Does every ``sem``-extension contain ``x``?

    With no stable extensions the answer under ST is ``True``.
    """
    sem = Semantics(sem)
    x = _query_index(f, x)
    labels, res = _setup(f)
    if labels[x] is Label.IN:
        return True
    if sem is Semantics.ST:
        if labels[x] is Label.OUT:
            return next(res.labellings(stable=True), None) is None
        k = res.local[x]
        return next(res.labellings(stable=True, forced={k: _OUT}), None) is None
    if sem is not Semantics.PR or labels[x] is Label.OUT:
        return False
    return not _preferred_excluding(res, res.local[x])


def _preferred_excluding(res: _Residual, k: int) -> bool:
    """Is there a preferred labelling with local argument ``k`` not IN?

    Counterexample loop: look for a complete IN-set without ``k`` that is not
    inside any preferred set found so far, grow it to a preferred set, stop
    when the grown set still excludes ``k``.
    """
    blocked: list[int] = []

    def fresh(dom):
        b = _in_bits(dom)
        return all(b & ~p for p in blocked)

    while True:
        dom = next(res.labellings(forced={k: _OUT | _UNDEC}, accept=fresh), None)
        if dom is None:
            return False
        grown = _maximize(res, list(dom))
        if k not in grown:
            return True
        blocked.append(sum(1 << i for i in grown))


def solve(f: Framework, task: Task | str, sem: Semantics | str, query: int | str | None = None) -> SolverAnswer:
    """Dispatch one of the sixteen task/semantics pairs."""
    task = Task(task)
    sem = Semantics(sem)
    if task in (Task.DC, Task.DS):
        if query is None:
            raise ValueError(f"{task.value} requires a query argument")
        decide = decide_credulous if task is Task.DC else decide_skeptical
        return Decision(decide(f, query, sem))
    if query is not None:
        raise ValueError(f"{task.value} takes no query argument")
    if task is Task.SE:
        return some_extension(f, sem)
    return ExtensionSet(tuple(enumerate_extensions(f, sem)))


# -- reference predicates (used by tests) -----------------------------------


def is_complete_extension(f: Framework, s: ArgumentSet) -> bool:
    return is_conflict_free(f, s) and characteristic_function(f, s) == s


def is_stable_extension(f: Framework, s: ArgumentSet) -> bool:
    if not is_conflict_free(f, s):
        return False
    hit = set(s)
    for a in s:
        hit.update(f.attacked_by[a])
    return len(hit) == len(f)


def is_preferred_extension(f: Framework, s: ArgumentSet) -> bool:
    if not is_complete_extension(f, s):
        return False
    return not any(s < e for e in enumerate_extensions(f, Semantics.CO))


def is_complete_labelling(f: Framework, labels: list[Label]) -> bool:
    for x, v in enumerate(labels):
        att = [labels[a] for a in f.attackers_of[x]]
        if v is Label.IN and not all(a is Label.OUT for a in att):
            return False
        if v is Label.OUT and not any(a is Label.IN for a in att):
            return False
        if v is Label.UNDEC and (any(a is Label.IN for a in att) or all(a is Label.OUT for a in att)):
            return False
    return True
