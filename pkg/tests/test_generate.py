import pytest

from dungsolve import GeneratorConfig, Shape, generate, serialize_apx, serialize_tgf
from dungsolve.generate import argument_name, corpus_configs

from conftest import F3, F5


def test_chain_and_cycle():
    assert generate(GeneratorConfig(3, shape=Shape.CHAIN)) == F3
    assert generate(GeneratorConfig(3, shape=Shape.K_CYCLE)) == F5
    assert generate(GeneratorConfig(1, shape=Shape.K_CYCLE)).attacks == {(0, 0)}
    assert len(generate(GeneratorConfig(0, shape="chain"))) == 0


def test_probability_extremes():
    f = generate(GeneratorConfig(5, 0.0, seed=7))
    assert len(f) == 5 and not f.attacks
    assert len(generate(GeneratorConfig(4, 1.0, seed=7)).attacks) == 16


def test_probability_ignored_for_structured_shapes():
    assert generate(GeneratorConfig(3, 0.9, seed=3, shape="chain")) == F3


def test_deterministic():
    cfg = GeneratorConfig(9, 0.3, seed=12345)
    assert serialize_tgf(generate(cfg)) == serialize_tgf(generate(cfg))
    assert generate(cfg) != generate(GeneratorConfig(9, 0.3, seed=12346))


def test_frozen_output():
    # regression pin for the PCG64 raw-word threshold scheme
    f = generate(GeneratorConfig(4, 0.5, seed=1))
    assert serialize_apx(f) == (
        "arg(a).\narg(b).\narg(c).\narg(d).\n"
        "att(a,c).\natt(b,a).\natt(b,b).\natt(b,d).\n"
        "att(c,b).\natt(d,a).\natt(d,c).\natt(d,d).\n"
    )


def test_threshold_rule_on_raw_words():
    import numpy as np

    words = np.random.PCG64(1).random_raw(16)
    expected = {(k // 4, k % 4) for k in range(16) if int(words[k]) < 2**63}
    assert generate(GeneratorConfig(4, 0.5, seed=1)).attacks == expected


def test_density_roughly_p():
    f = generate(GeneratorConfig(60, 0.25, seed=99))
    assert abs(len(f.attacks) / 3600 - 0.25) < 0.03


def test_names():
    assert [argument_name(i) for i in (0, 1, 25, 26, 27, 701, 702)] == ["a", "b", "z", "aa", "ab", "zz", "aaa"]


def test_config_validation():
    with pytest.raises(ValueError):
        GeneratorConfig(-1)
    with pytest.raises(ValueError):
        GeneratorConfig(3, 1.5)
    with pytest.raises(ValueError):
        GeneratorConfig(3, 0.5, seed=-1)
    with pytest.raises(ValueError):
        GeneratorConfig(3, shape="star")


def test_corpus_schedule():
    cfgs = corpus_configs()
    assert len(cfgs) == 500
    assert {c.argument_count for c in cfgs} == set(range(1, 11))
    assert {c.attack_probability for c in cfgs} == {0.1, 0.25, 0.5}
    assert len({(c.argument_count, c.attack_probability, c.seed) for c in cfgs}) == 500
