"""Competition-style command line interface.

    dungsolve                                   # banner
    dungsolve --formats                         # [apx,tgf]
    dungsolve --problems                        # the sixteen TASK-SEM pairs
    dungsolve -p DC-PR -f af.tgf -fo tgf -a a   # solve one problem
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from . import __author__, __version__
from .errors import ArgumentationError
from .formats import InputFormat, parse, serialize_answer
from .framework import Framework
from .semantics import Semantics, Task, solve

NAME = "dungsolve"
FORMATS = sorted(f.value for f in InputFormat)
PROBLEMS = [f"{t.value}-{s.value}" for t in sorted(Task, key=lambda t: t.value)
            for s in sorted(Semantics, key=lambda s: s.value)]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog=NAME, add_help=False, allow_abbrev=False)
    p.add_argument("--formats", action="store_true")
    p.add_argument("--problems", action="store_true")
    p.add_argument("-p", dest="problem")
    p.add_argument("-f", dest="file")
    p.add_argument("-fo", dest="fmt")
    p.add_argument("-a", dest="query")
    return p


@dataclass
class ProblemInstance:
    task: Task
    semantics: Semantics
    framework: Framework
    query: Optional[int] = None


def parse_problem(problem: str) -> tuple[Task, Semantics]:
    if problem not in PROBLEMS:
        raise UsageError(f"unsupported problem {problem!r}")
    task, sem = problem.split("-")
    return Task(task), Semantics(sem)


def _instance(ns: argparse.Namespace) -> ProblemInstance:
    if ns.problem is None or ns.file is None or ns.fmt is None:
        raise UsageError("-p, -f and -fo are required")
    task, sem = parse_problem(ns.problem)
    if ns.fmt not in FORMATS:
        raise UsageError(f"unsupported format {ns.fmt!r}")
    needs_query = task in (Task.DC, Task.DS)
    if needs_query and ns.query is None:
        raise UsageError(f"{ns.problem} requires -a")
    if not needs_query and ns.query is not None:
        raise UsageError(f"{ns.problem} takes no -a")
    try:
        with open(ns.file, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as err:
        raise UsageError(f"cannot read {ns.file}: {err}") from None
    f = parse(text, ns.fmt)
    query = None
    if needs_query:
        if ns.query not in f:
            raise UsageError(f"argument {ns.query!r} not in framework")
        query = f.index(ns.query)
    return ProblemInstance(task, sem, f, query)


def run(argv: Sequence[str], stderr: TextIO | None = None) -> tuple[int, str]:
    """Execute one invocation; returns ``(exit_code, stdout_text)``.

    Diagnostics go to ``stderr`` (default ``sys.stderr``); on error the
    returned output is empty.
    """
    stderr = sys.stderr if stderr is None else stderr
    argv = list(argv)
    try:
        if not argv:
            return 0, f"{NAME} v{__version__}\n{__author__}\n"
        ns = _parser().parse_args(argv)
        if ns.formats and ns.problems:
            raise UsageError("--formats and --problems are exclusive")
        if (ns.formats or ns.problems) and any(
            v is not None for v in (ns.problem, ns.file, ns.fmt, ns.query)
        ):
            raise UsageError("--formats/--problems take no other options")
        if ns.formats:
            return 0, "[" + ",".join(FORMATS) + "]\n"
        if ns.problems:
            return 0, "[" + ",".join(PROBLEMS) + "]\n"
        inst = _instance(ns)
        ans = solve(inst.framework, inst.task, inst.semantics, inst.query)
        return 0, serialize_answer(ans, inst.framework)
    except (UsageError, ArgumentationError) as err:
        print(f"{NAME}: error: {err}", file=stderr)
        return 1, ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
