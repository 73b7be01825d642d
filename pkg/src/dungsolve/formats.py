"""Reading and writing the tgf and apx framework formats, and answer text.

tgf::

    a
    b
    #
    a b

apx::

    arg(a). arg(b).
    att(a,b).
"""

from __future__ import annotations

import enum
import re

from .errors import (
    ApxSyntaxError,
    FrameworkError,
    MalformedArgumentLine,
    MalformedAttackLine,
    MissingSeparator,
    UnknownArgumentInAttack,
)
from .framework import ArgumentSet, Framework, build_framework, gc_paused
from .semantics import Decision, ExtensionSet, NoExtension, SingleExtension, SolverAnswer

__all__ = [
    "InputFormat",
    "parse_tgf",
    "parse_apx",
    "parse",
    "serialize_tgf",
    "serialize_apx",
    "serialize",
    "serialize_answer",
]


class InputFormat(str, enum.Enum):
    TGF = "tgf"
    APX = "apx"


def _with_line(err: FrameworkError, line: int) -> FrameworkError:
    return type(err)(str(err), err.name, line)


def parse_tgf(text: str) -> Framework:
    with gc_paused():
        return _parse_tgf(text)


def _parse_tgf(text: str) -> Framework:
    lines = [raw.strip() for raw in text.splitlines()]
    try:
        sep = lines.index("#")
    except ValueError:
        raise MissingSeparator("no '#' line separating arguments from attacks") from None

    names = [x for x in lines[:sep] if x]
    if any(len(x.split()) != 1 for x in names):
        i = next(i for i in range(sep) if len(lines[i].split()) > 1)
        raise MalformedArgumentLine(f"expected one argument name, got {lines[i]!r}", line=i + 1)
    pairs = [x.split() for x in lines[sep + 1:] if x]
    if any(len(p) != 2 for p in pairs):
        i = next(i for i in range(sep + 1, len(lines)) if lines[i] and len(lines[i].split()) != 2)
        raise MalformedAttackLine(f"expected 'attacker target', got {lines[i]!r}", line=i + 1)

    try:
        return build_framework(names, pairs)
    except FrameworkError as err:
        name_lines = [i + 1 for i in range(sep) if lines[i]]
        pair_lines = [i + 1 for i in range(sep + 1, len(lines)) if lines[i]]
        raise _locate(err, names, name_lines, pairs, pair_lines) from None


def _locate(err, names, name_lines, pairs, pair_lines):
    if isinstance(err, UnknownArgumentInAttack):
        for (a, b), ln in zip(pairs, pair_lines):
            if err.name in (a, b):
                return _with_line(err, ln)
    else:
        seen = set()
        for name, ln in zip(names, name_lines):
            if name == err.name and name in seen:
                return _with_line(err, ln)
            seen.add(name)
    return err


_NAME = r"[A-Za-z0-9_]+"
_FACT = re.compile(
    rf"\s*(?:arg\s*\(\s*(?P<arg>{_NAME})\s*\)|att\s*\(\s*(?P<src>{_NAME})\s*,\s*(?P<dst>{_NAME})\s*\))\s*\."
)
_TRAILING_WS = re.compile(r"\s*")


def _line_of(text: str, offset: int) -> int:
    return text.count("\n", 0, offset) + 1


def parse_apx(text: str) -> Framework:
    names: list[str] = []
    name_pos: list[int] = []
    pairs: list[tuple[str, str]] = []
    pair_pos: list[int] = []
    pos = 0
    end = len(text)
    while True:
        pos = _TRAILING_WS.match(text, pos).end()
        if pos >= end:
            break
        m = _FACT.match(text, pos)
        if m is None:
            snippet = text[pos:pos + 20].split("\n")[0]
            raise ApxSyntaxError(f"expected arg(..). or att(..,..). near {snippet!r}",
                                 line=_line_of(text, pos), offset=pos)
        if m.group("arg") is not None:
            names.append(m.group("arg"))
            name_pos.append(pos)
        else:
            pairs.append((m.group("src"), m.group("dst")))
            pair_pos.append(pos)
        pos = m.end()
    try:
        return build_framework(names, pairs)
    except FrameworkError as err:
        lines = [_line_of(text, p) for p in name_pos]
        plines = [_line_of(text, p) for p in pair_pos]
        raise _locate(err, names, lines, pairs, plines) from None


def parse(text: str, fmt: InputFormat | str) -> Framework:
    fmt = InputFormat(fmt)
    return parse_tgf(text) if fmt is InputFormat.TGF else parse_apx(text)


def serialize_tgf(f: Framework) -> str:
    out = [name + "\n" for name in f.names]
    out.append("#\n")
    names = f.names
    out.extend(f"{names[a]} {names[b]}\n" for a, b in f.sorted_attacks())
    return "".join(out)


def serialize_apx(f: Framework) -> str:
    names = f.names
    out = [f"arg({name}).\n" for name in names]
    out.extend(f"att({names[a]},{names[b]}).\n" for a, b in f.sorted_attacks())
    return "".join(out)


def serialize(f: Framework, fmt: InputFormat | str) -> str:
    fmt = InputFormat(fmt)
    return serialize_tgf(f) if fmt is InputFormat.TGF else serialize_apx(f)


def _ext_text(ext: ArgumentSet, f: Framework) -> str:
    return "[" + ",".join(f.names_of(ext)) + "]"


def serialize_answer(ans: SolverAnswer, f: Framework) -> str:
    """Render an answer as one newline-terminated line: ``[a,c]``, ``[[a],[b]]``, ``YES``, ``NO``."""
    if isinstance(ans, SingleExtension):
        body = _ext_text(ans.extension, f)
    elif isinstance(ans, ExtensionSet):
        exts = sorted(set(ans.extensions), key=ArgumentSet.sort_key)
        body = "[" + ",".join(_ext_text(e, f) for e in exts) + "]"
    elif isinstance(ans, Decision):
        body = "YES" if ans.value else "NO"
    elif isinstance(ans, NoExtension):
        body = "NO"
    else:
        raise TypeError(f"not a solver answer: {ans!r}")
    return body + "\n"
