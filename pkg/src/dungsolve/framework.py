"""Argumentation frameworks and the set-level predicates semantics are built from.

Arguments are interned to dense indices ``0..n-1`` in declaration order.
Sets of arguments are :class:`ArgumentSet` values, thin immutable wrappers
around a Python ``int`` used as a bit vector (bit ``i`` set means argument
``i`` is a member).
"""

from __future__ import annotations

import gc
import re
from contextlib import contextmanager
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateArgument, EmptyName, InvalidName, UnknownArgumentInAttack

__all__ = [
    "ArgumentSet",
    "Framework",
    "build_framework",
    "is_conflict_free",
    "defends",
    "characteristic_function",
]

_WHITESPACE = re.compile(r"\s")


@contextmanager
def gc_paused():
    """Suspend cyclic GC; bulk-allocating adjacency tuples otherwise triggers repeated full scans."""
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def _bits_to_indices(bits: int) -> list[int]:
    # bin() is linear in the bit length; peeling low bits off a wide int is quadratic.
    if not bits:
        return []
    digits = bin(bits)[:1:-1]
    return [i for i, ch in enumerate(digits) if ch == "1"]


def _indices_to_bits(indices: Iterable[int]) -> int:
    idx = list(indices)
    if not idx:
        return 0
    if len(idx) < 64:
        bits = 0
        for i in idx:
            bits |= 1 << i
        return bits
    buf = bytearray(b"0" * (max(idx) + 1))
    for i in idx:
        buf[i] = 49  # ord("1")
    buf.reverse()
    return int(buf, 2)


class ArgumentSet:
    """Immutable set of argument indices backed by an integer bit vector.

    Supports the usual set algebra (``|``, ``&``, ``-``, ``<=``, ``<``),
    membership tests and iteration in ascending index order.
    """

    __slots__ = ("bits",)

    def __init__(self, members: Iterable[int] = ()):
        self.bits = _indices_to_bits(members)

    @classmethod
    def from_bits(cls, bits: int) -> "ArgumentSet":
        if bits < 0:
            raise ValueError("bit vector must be non-negative")
        s = cls.__new__(cls)
        s.bits = bits
        return s

    @classmethod
    def full(cls, n: int) -> "ArgumentSet":
        return cls.from_bits((1 << n) - 1)

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 0 and (self.bits >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(_bits_to_indices(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "ArgumentSet") -> "ArgumentSet":
        return ArgumentSet.from_bits(self.bits | other.bits)

    def __and__(self, other: "ArgumentSet") -> "ArgumentSet":
        return ArgumentSet.from_bits(self.bits & other.bits)

    def __sub__(self, other: "ArgumentSet") -> "ArgumentSet":
        return ArgumentSet.from_bits(self.bits & ~other.bits)

    def __le__(self, other: "ArgumentSet") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "ArgumentSet") -> bool:
        return self.bits != other.bits and self <= other

    def __ge__(self, other: "ArgumentSet") -> bool:
        return other <= self

    def __gt__(self, other: "ArgumentSet") -> bool:
        return other < self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ArgumentSet):
            return self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bits)

    def union(self, other: "ArgumentSet") -> "ArgumentSet":
        return self | other

    def intersection(self, other: "ArgumentSet") -> "ArgumentSet":
        return self & other

    def difference(self, other: "ArgumentSet") -> "ArgumentSet":
        return self - other

    def issubset(self, other: "ArgumentSet") -> bool:
        return self <= other

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key over the ascending member indices."""
        return tuple(self)

    def __repr__(self) -> str:
        return f"ArgumentSet({list(self)})"


class Framework:
    """Immutable attack graph over interned arguments.

    Attributes
    ----------
    names : tuple of str
        Argument names indexed by argument id.
    attacks : frozenset of (int, int)
        Deduplicated (attacker, target) pairs. Self-attacks are allowed.
    attackers_of, attacked_by : tuple of tuple of int
        Incoming and outgoing adjacency, each sorted ascending.
    """

    __slots__ = ("names", "attacks", "attackers_of", "attacked_by", "_index")

    def __init__(self, names: Sequence[str], attacks: Iterable[tuple[int, int]]):
        with gc_paused():
            self._build(names, attacks)

    def _build(self, names, attacks):
        names = tuple(names)
        attacks = frozenset(attacks)
        n = len(names)
        ins: list[list[int]] = [[] for _ in range(n)]
        outs: list[list[int]] = [[] for _ in range(n)]
        ordered = sorted(attacks)
        if ordered:
            targets = [b for _, b in ordered]
            if ordered[0][0] < 0 or ordered[-1][0] >= n or min(targets) < 0 or max(targets) >= n:
                raise ValueError(f"attack out of range for {n} arguments")
        # row-major order leaves both adjacency lists sorted
        for a, b in ordered:
            outs[a].append(b)
            ins[b].append(a)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "attackers_of", tuple(map(tuple, ins)))
        object.__setattr__(self, "attacked_by", tuple(map(tuple, outs)))
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    def __setattr__(self, key, value):
        raise AttributeError("Framework is immutable")

    @property
    def argument_count(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        """Id of the argument called ``name``; raises ``KeyError`` if absent."""
        return self._index[name]

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def arguments(self) -> ArgumentSet:
        return ArgumentSet.full(len(self.names))

    def names_of(self, s: ArgumentSet | Iterable[int]) -> list[str]:
        return [self.names[i] for i in s]

    def set_of(self, names: Iterable[str]) -> ArgumentSet:
        return ArgumentSet(self._index[x] for x in names)

    def sorted_attacks(self) -> list[tuple[int, int]]:
        return sorted(self.attacks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Framework):
            return NotImplemented
        return self.names == other.names and self.attacks == other.attacks

    def __hash__(self) -> int:
        return hash((self.names, self.attacks))

    def __repr__(self) -> str:
        return f"Framework({len(self.names)} arguments, {len(self.attacks)} attacks)"


def build_framework(names: Sequence[str], attack_pairs: Iterable[tuple[str, str]]) -> Framework:
    """Intern ``names`` in order and resolve ``attack_pairs`` against them.

    Duplicate attacks collapse silently; duplicate names, empty names, names
    containing whitespace and attacks on undeclared names are errors.
    """
    with gc_paused():
        return _build_framework(names, attack_pairs)


def _build_framework(names, attack_pairs):
    names = list(names)
    index = {name: i for i, name in enumerate(names)}
    if len(index) != len(names) or "" in index or _WHITESPACE.search("".join(names)):
        seen: set[str] = set()
        for name in names:
            if not name:
                raise EmptyName("empty argument name")
            if _WHITESPACE.search(name):
                raise InvalidName(f"argument name {name!r} contains whitespace", name)
            if name in seen:
                raise DuplicateArgument(f"argument {name!r} declared twice", name)
            seen.add(name)
    try:
        attacks = {(index[a], index[b]) for a, b in attack_pairs}
    except KeyError as err:
        x = err.args[0]
        raise UnknownArgumentInAttack(f"attack mentions undeclared argument {x!r}", x) from None
    return Framework(names, attacks)


def is_conflict_free(f: Framework, s: ArgumentSet) -> bool:
    """True iff no member of ``s`` attacks a member of ``s`` (itself included)."""
    bits = s.bits
    attacked_by = f.attacked_by
    for a in s:
        for b in attacked_by[a]:
            if (bits >> b) & 1:
                return False
    return True


def _attacked_bits(f: Framework, s: ArgumentSet) -> int:
    hit = set()
    for a in s:
        hit.update(f.attacked_by[a])
    return _indices_to_bits(hit)


def defends(f: Framework, s: ArgumentSet, x: int) -> bool:
    """True iff every attacker of ``x`` is attacked by some member of ``s``."""
    bits = s.bits
    for y in f.attackers_of[x]:
        if not any((bits >> z) & 1 for z in f.attackers_of[y]):
            return False
    return True


def characteristic_function(f: Framework, s: ArgumentSet) -> ArgumentSet:
    """The set of arguments defended by ``s``."""
    hit = _attacked_bits(f, s)
    out = [x for x in range(len(f)) if all((hit >> y) & 1 for y in f.attackers_of[x])]
    return ArgumentSet(out)
