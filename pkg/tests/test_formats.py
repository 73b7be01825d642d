import pytest
from hypothesis import given, strategies as st

from dungsolve import (
    ApxSyntaxError,
    ArgumentSet,
    Decision,
    DuplicateArgument,
    ExtensionSet,
    MalformedArgumentLine,
    MalformedAttackLine,
    MissingSeparator,
    NoExtension,
    ParseError,
    SingleExtension,
    UnknownArgumentInAttack,
    parse,
    parse_apx,
    parse_tgf,
    serialize_answer,
    serialize_apx,
    serialize_tgf,
)
from dungsolve.errors import ArgumentationError
from dungsolve.framework import Framework

from conftest import F0, F3, F4, frameworks


def test_parse_tgf_chain():
    assert parse_tgf("a\nb\nc\n#\na b\nb c\n") == F3


def test_parse_tgf_tolerates_blank_lines_and_padding():
    assert parse_tgf("\n a \nb\n\nc\n # \n a  b\n\nb c") == F3


def test_parse_tgf_empty():
    assert parse_tgf("#\n") == F0


def test_parse_tgf_missing_separator():
    with pytest.raises(MissingSeparator):
        parse_tgf("a\nb\na b c\n")


def test_parse_tgf_malformed_attack_line_number():
    with pytest.raises(MalformedAttackLine) as exc:
        parse_tgf("a\nb\n#\na b\na b c\n")
    assert exc.value.line == 5


def test_parse_tgf_malformed_argument_line():
    with pytest.raises(MalformedArgumentLine) as exc:
        parse_tgf("a\nb c\n#\n")
    assert exc.value.line == 2


def test_parse_tgf_unknown_argument_carries_line():
    with pytest.raises(UnknownArgumentInAttack) as exc:
        parse_tgf("a\n#\na a\na z\n")
    assert exc.value.line == 4


def test_parse_tgf_duplicate_argument_carries_line():
    with pytest.raises(DuplicateArgument) as exc:
        parse_tgf("a\nb\na\n#\n")
    assert exc.value.line == 3


def test_parse_apx_chain():
    assert parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).") == F3


def test_parse_apx_whitespace_insensitive():
    assert parse_apx("arg( a ) .\narg(b).arg(c).\n att ( a , b ).att(b,c).\n") == F3


def test_parse_apx_attack_before_declaration():
    assert parse_apx("att(a,b). arg(a). arg(b).") == build_ab()


def build_ab():
    return Framework(["a", "b"], [(0, 1)])


def test_parse_apx_empty():
    assert parse_apx("") == F0
    assert parse_apx("  \n") == F0


def test_parse_apx_undeclared():
    with pytest.raises(UnknownArgumentInAttack):
        parse_apx("att(a,b).")


def test_parse_apx_duplicate():
    with pytest.raises(DuplicateArgument):
        parse_apx("arg(a).\narg(a).")


@pytest.mark.parametrize(
    "text, offset",
    [("arg(a). junk", 8), ("arg(a)", 0), ("arg(a-b).", 0), ("arg(a).\natt(a).", 8)],
)
def test_parse_apx_syntax_errors_carry_position(text, offset):
    with pytest.raises(ApxSyntaxError) as exc:
        parse_apx(text)
    assert exc.value.offset == offset
    assert exc.value.line == text.count("\n", 0, offset) + 1


def test_parse_dispatch():
    assert parse("#\n", "tgf") == F0
    assert parse("", "apx") == F0
    with pytest.raises(ValueError):
        parse("", "xml")


def test_serialize_canonical():
    assert serialize_tgf(F0) == "#\n"
    assert serialize_tgf(F3) == "a\nb\nc\n#\na b\nb c\n"
    assert serialize_apx(F3) == "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\n"


@given(frameworks())
def test_round_trip(f):
    assert parse_tgf(serialize_tgf(f)) == f
    assert parse_apx(serialize_apx(f)) == f
    assert parse_tgf(serialize_tgf(f)).names == f.names


def test_answer_text():
    assert serialize_answer(SingleExtension(ArgumentSet([0, 2])), F3) == "[a,c]\n"
    assert serialize_answer(ExtensionSet(()), F3) == "[]\n"
    assert serialize_answer(ExtensionSet((ArgumentSet([1]), ArgumentSet(), ArgumentSet([0]))), F4) == "[[],[a],[b]]\n"
    assert serialize_answer(Decision(True), F3) == "YES\n"
    assert serialize_answer(Decision(False), F3) == "NO\n"
    assert serialize_answer(NoExtension(), F3) == "NO\n"


@pytest.mark.parametrize("text", ["a\nb", "a\n#\nb\n", "#\n a", "arg(", "att(a,b)", "\x00"])
def test_errors_are_library_errors(text):
    for fmt in ("tgf", "apx"):
        try:
            parse(text, fmt)
        except ArgumentationError as err:
            assert isinstance(err, (ParseError, ArgumentationError))


@given(st.text(alphabet="ab #\n()._,argt \t", max_size=60))
def test_fuzzed_input_raises_only_library_errors(text):
    for fmt in ("tgf", "apx"):
        try:
            parse(text, fmt)
        except ArgumentationError as err:
            assert isinstance(err, MissingSeparator) or err.line is not None
