"""Correctness-and-timing harness plus the ``dungsolve-bench`` command.

    dungsolve-bench generate --shape erdos_renyi -n 8 -p 0.25 --seed 1 --count 20 -o corpus/
    dungsolve-bench harness --count 500 --records report.jsonl
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .formats import InputFormat, serialize, serialize_answer
from .framework import Framework
from .generate import GeneratorConfig, Shape, corpus, generate
from .oracle import MAX_ARGUMENTS, brute_force_extensions
from .semantics import Decision, ExtensionSet, NoExtension, Semantics, SingleExtension, Task, solve


@dataclass(frozen=True)
class Instance:
    framework: Framework
    task: Task
    semantics: Semantics
    query: Optional[int] = None

    @property
    def pair(self) -> str:
        return f"{Task(self.task).value}-{Semantics(self.semantics).value}"


@dataclass(frozen=True)
class Record:
    instance_id: int
    pair: str
    micros: int
    digest: str
    agrees: Optional[bool]
    timed_out: bool = False

    def to_json(self) -> str:
        return json.dumps(
            {"id": self.instance_id, "pair": self.pair, "us": self.micros,
             "digest": self.digest, "agree": self.agrees, "timeout": self.timed_out},
            separators=(",", ":"),
        )


@dataclass
class HarnessReport:
    records: list[Record] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def timeout(self) -> int:
        return sum(r.timed_out for r in self.records)

    @property
    def correct(self) -> int:
        return sum(not r.timed_out and r.agrees is True for r in self.records)

    @property
    def incorrect(self) -> int:
        return sum(not r.timed_out and r.agrees is False for r in self.records)

    @property
    def unchecked(self) -> int:
        return sum(not r.timed_out and r.agrees is None for r in self.records)

    def digests(self) -> list[str]:
        return [r.digest for r in self.records]

    def jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)

    def summary(self) -> str:
        by_pair: dict[str, list[Record]] = {}
        for r in self.records:
            by_pair.setdefault(r.pair, []).append(r)
        lines = [f"{'pair':<6} {'n':>6} {'ok':>6} {'bad':>5} {'t/o':>5} {'mean us':>9} {'max us':>9}"]
        for pair in sorted(by_pair):
            rs = by_pair[pair]
            us = [r.micros for r in rs]
            lines.append(
                f"{pair:<6} {len(rs):>6} {sum(r.agrees is True and not r.timed_out for r in rs):>6} "
                f"{sum(r.agrees is False and not r.timed_out for r in rs):>5} "
                f"{sum(r.timed_out for r in rs):>5} {sum(us) // len(us):>9} {max(us):>9}"
            )
        lines.append(
            f"total {self.total}: correct {self.correct}, incorrect {self.incorrect}, "
            f"timeout {self.timeout}, unchecked {self.unchecked}"
        )
        return "\n".join(lines) + "\n"


def expected_answer(inst: Instance, cache: dict | None = None):
    """Answer to ``inst`` derived purely from the brute-force oracle."""
    f = inst.framework
    sem = Semantics(inst.semantics)
    key = (id(f), sem)
    if cache is not None and key in cache:
        exts = cache[key]
    else:
        exts = brute_force_extensions(f, sem)
        if cache is not None:
            cache[key] = exts
    task = Task(inst.task)
    if task is Task.EE:
        return ExtensionSet(tuple(exts))
    if task is Task.DC:
        return Decision(any(inst.query in e for e in exts))
    if task is Task.DS:
        return Decision(all(inst.query in e for e in exts))
    return exts  # SE: any member is acceptable


def _agrees(inst: Instance, got, expected) -> bool:
    if Task(inst.task) is Task.SE:
        if isinstance(got, NoExtension):
            return not expected
        return isinstance(got, SingleExtension) and got.extension in expected
    if isinstance(got, ExtensionSet):
        return set(got.extensions) == set(expected.extensions)
    return got == expected


def run_harness(instances: Iterable[Instance], timeout: float = 10.0, check: bool = True) -> HarnessReport:
    """Solve every instance, time it, and compare against the oracle.

    ``timeout`` is in seconds and is applied after the fact: a solve that
    ran longer is recorded as a timeout whatever its answer. Instances over
    the oracle's size cap are recorded with ``agrees=None``.
    """
    report = HarnessReport()
    cache: dict = {}
    for i, inst in enumerate(instances):
        t0 = time.perf_counter()
        try:
            got = solve(inst.framework, inst.task, inst.semantics, inst.query)
            digest = serialize_answer(got, inst.framework).rstrip("\n")
        except Exception as err:  # recorded, never raised
            got, digest = None, f"ERROR {type(err).__name__}"
        elapsed = time.perf_counter() - t0
        agrees: Optional[bool] = None
        if check and inst.framework.argument_count <= MAX_ARGUMENTS:
            agrees = got is not None and _agrees(inst, got, expected_answer(inst, cache))
        report.records.append(
            Record(i, inst.pair, int(elapsed * 1e6), digest, agrees, elapsed > timeout)
        )
    return report


def all_pairs(f: Framework, queries: Sequence[int] | None = None) -> list[Instance]:
    """Every task/semantics pair on ``f``; decision tasks once per query argument."""
    if queries is None:
        queries = range(f.argument_count)
    out = []
    for task in Task:
        for sem in Semantics:
            if task in (Task.DC, Task.DS):
                out.extend(Instance(f, task, sem, q) for q in queries)
            else:
                out.append(Instance(f, task, sem))
    return out


def corpus_instances(count: int = 500) -> list[Instance]:
    out = []
    for f in corpus(count):
        out.extend(all_pairs(f))
    return out


# -- command line -----------------------------------------------------------


def _cmd_generate(ns) -> int:
    out = Path(ns.output)
    out.mkdir(parents=True, exist_ok=True)
    for k in range(ns.count):
        cfg = GeneratorConfig(ns.n, ns.p, seed=ns.seed + k, shape=ns.shape)
        f = generate(cfg)
        path = out / f"{cfg.shape.value}_n{cfg.argument_count}_p{cfg.attack_probability:g}_s{cfg.seed}.{ns.format}"
        path.write_text(serialize(f, ns.format), encoding="utf-8")
        print(path)
    return 0


def _cmd_harness(ns) -> int:
    report = run_harness(corpus_instances(ns.count), timeout=ns.timeout)
    if ns.records:
        Path(ns.records).write_text(report.jsonl(), encoding="utf-8")
    else:
        sys.stdout.write(report.jsonl())
    sys.stderr.write(report.summary())
    return 0 if report.incorrect == 0 and report.timeout == 0 else 1


def main(argv: Sequence[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="dungsolve-bench")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write generated frameworks to a directory")
    g.add_argument("--shape", choices=[s.value for s in Shape], default=Shape.ERDOS_RENYI.value)
    g.add_argument("-n", type=int, required=True, help="number of arguments")
    g.add_argument("-p", type=float, default=0.25, help="attack probability (erdos_renyi only)")
    g.add_argument("--seed", type=int, default=0, help="seed of the first framework; later ones use seed+1, ...")
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--format", choices=[f.value for f in InputFormat], default="apx")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_generate)

    h = sub.add_parser("harness", help="solve the built-in corpus and check it against the oracle")
    h.add_argument("--count", type=int, default=500)
    h.add_argument("--timeout", type=float, default=10.0, help="seconds per instance")
    h.add_argument("--records", help="write JSON-lines records here instead of stdout")
    h.set_defaults(func=_cmd_harness)

    ns = p.parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
