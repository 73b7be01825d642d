import random

import pytest
from hypothesis import given, settings

from dungsolve import (
    ArgumentSet,
    Decision,
    ExtensionSet,
    Label,
    NoExtension,
    Semantics,
    SingleExtension,
    UnknownArgument,
    brute_force_extensions,
    decide_credulous,
    decide_skeptical,
    enumerate_extensions,
    grounded_extension,
    grounded_labelling,
    is_complete_extension,
    is_preferred_extension,
    is_stable_extension,
    solve,
    some_extension,
)
from dungsolve.framework import Framework
from dungsolve.semantics import is_complete_labelling

from conftest import F0, F3, F4, F5, F6, frameworks

SEMANTICS = list(Semantics)


def names(f, exts):
    return [f.names_of(e) for e in exts]


def S(f, *xs):
    return f.set_of(xs)


# -- canonical fixtures -----------------------------------------------------


@pytest.mark.parametrize(
    "f, expected",
    [(F0, []), (F3, ["a", "c"]), (F4, []), (F5, []), (F6, [])],
)
def test_grounded_extension(f, expected):
    assert f.names_of(grounded_extension(f)) == expected


@pytest.mark.parametrize(
    "f, sem, expected",
    [
        (F4, "CO", [[], ["a"], ["b"]]),
        (F4, "PR", [["a"], ["b"]]),
        (F4, "ST", [["a"], ["b"]]),
        (F4, "GR", [[]]),
        (F5, "CO", [[]]),
        (F5, "PR", [[]]),
        (F5, "ST", []),
        (F6, "CO", [[]]),
        (F6, "ST", []),
        (F0, "ST", [[]]),
        (F0, "PR", [[]]),
    ]
    + [(F3, sem, [["a", "c"]]) for sem in "CO GR PR ST".split()],
)
def test_enumerate_extensions(f, sem, expected):
    assert names(f, enumerate_extensions(f, sem)) == expected


def test_some_extension():
    assert some_extension(F3, "GR") == SingleExtension(S(F3, "a", "c"))
    assert some_extension(F5, "ST") == NoExtension()
    assert some_extension(F0, "CO") == SingleExtension(ArgumentSet())
    assert some_extension(F4, "PR").extension in (S(F4, "a"), S(F4, "b"))


@pytest.mark.parametrize(
    "f, x, sem, expected",
    [(F4, "a", "PR", True), (F6, "a", "CO", False), (F3, "b", "CO", False), (F4, "a", "ST", True)],
)
def test_decide_credulous(f, x, sem, expected):
    assert decide_credulous(f, x, sem) is expected


@pytest.mark.parametrize(
    "f, x, sem, expected",
    [(F3, "c", "PR", True), (F4, "a", "PR", False), (F5, "a", "ST", True), (F6, "a", "ST", True)],
)
def test_decide_skeptical(f, x, sem, expected):
    assert decide_skeptical(f, x, sem) is expected


def test_unknown_query_argument():
    with pytest.raises(UnknownArgument):
        decide_credulous(F3, "z", "CO")
    with pytest.raises(UnknownArgument):
        decide_skeptical(F3, 7, "PR")


def test_extension_predicates():
    assert is_complete_extension(F4, S(F4, "a")) and is_stable_extension(F4, S(F4, "a"))
    assert is_complete_extension(F5, S(F5)) and not is_stable_extension(F5, S(F5))
    assert not is_complete_extension(F3, S(F3, "a"))
    assert is_preferred_extension(F4, S(F4, "b"))
    assert not is_preferred_extension(F4, S(F4))


def test_solve_dispatch():
    assert solve(F4, "EE", "PR") == ExtensionSet((S(F4, "a"), S(F4, "b")))
    assert solve(F4, "DS", "CO", 0) == Decision(False)
    with pytest.raises(ValueError):
        solve(F4, "DC", "CO")
    with pytest.raises(ValueError):
        solve(F4, "SE", "CO", 0)


def test_grounded_labelling_shape():
    labels = grounded_labelling(F3)
    assert labels == [Label.IN, Label.OUT, Label.IN]
    assert grounded_labelling(F4) == [Label.UNDEC, Label.UNDEC]


def test_grounded_on_long_chain():
    n = 10_001
    f = Framework([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])
    assert list(grounded_extension(f)) == list(range(0, n, 2))


# -- properties ---------------------------------------------------------------


def set_of_sets(exts):
    return {e.bits for e in exts}


@settings(max_examples=300, deadline=None)
@given(frameworks())
def test_matches_oracle(f):
    for sem in SEMANTICS:
        assert enumerate_extensions(f, sem) == brute_force_extensions(f, sem)


def test_matches_oracle_up_to_twelve_arguments():
    rng = random.Random(20151001)
    for _ in range(60):
        n = rng.randint(9, 12)
        p = rng.choice([0.05, 0.1, 0.2, 0.3])
        f = Framework([str(i) for i in range(n)],
                      [(i, j) for i in range(n) for j in range(n) if rng.random() < p])
        for sem in SEMANTICS:
            assert set_of_sets(enumerate_extensions(f, sem)) == set_of_sets(brute_force_extensions(f, sem))


@settings(max_examples=200, deadline=None)
@given(frameworks())
def test_lattice_inclusions(f):
    co = enumerate_extensions(f, "CO")
    pr = enumerate_extensions(f, "PR")
    st = enumerate_extensions(f, "ST")
    gr = enumerate_extensions(f, "GR")
    assert gr == [grounded_extension(f)]
    assert co and pr
    assert set(st) <= set(pr) <= set(co)
    g = gr[0]
    assert g in co and all(g <= e for e in co)
    meet = f.arguments()
    for e in co:
        meet = meet & e
    assert meet == g
    assert all(is_complete_extension(f, e) for e in co)
    assert all(is_stable_extension(f, e) for e in st)


@settings(max_examples=200, deadline=None)
@given(frameworks(max_arguments=7))
def test_decisions_match_enumeration(f):
    for sem in SEMANTICS:
        exts = enumerate_extensions(f, sem)
        for x in range(len(f)):
            assert decide_credulous(f, x, sem) == any(x in e for e in exts)
            assert decide_skeptical(f, x, sem) == all(x in e for e in exts)


@settings(max_examples=200, deadline=None)
@given(frameworks(max_arguments=7))
def test_fast_paths(f):
    g = grounded_extension(f)
    for x in range(len(f)):
        assert decide_credulous(f, x, "CO") == decide_credulous(f, x, "PR")
        assert decide_skeptical(f, x, "CO") == (x in g)


@settings(max_examples=200, deadline=None)
@given(frameworks())
def test_some_extension_is_an_extension(f):
    for sem in SEMANTICS:
        exts = enumerate_extensions(f, sem)
        ans = some_extension(f, sem)
        if exts:
            assert ans.extension in exts
        else:
            assert ans == NoExtension()


@given(frameworks())
def test_grounded_labelling_is_complete(f):
    assert is_complete_labelling(f, grounded_labelling(f))


@given(frameworks())
def test_deterministic(f):
    for sem in SEMANTICS:
        a = enumerate_extensions(f, sem)
        assert a == enumerate_extensions(f, sem)
        assert [e.sort_key() for e in a] == sorted(e.sort_key() for e in a)
        assert len(set(a)) == len(a)
