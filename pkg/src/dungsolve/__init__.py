"""Abstract argumentation solver: complete, grounded, preferred and stable semantics."""

__version__ = "0.1.0"
__author__ = "dungsolve contributors"

from .errors import *  # noqa: F401,F403
from .framework import (
    ArgumentSet,
    Framework,
    build_framework,
    characteristic_function,
    defends,
    is_conflict_free,
)
from .semantics import (
    Decision,
    ExtensionSet,
    Label,
    NoExtension,
    Semantics,
    SingleExtension,
    Task,
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
from .formats import (
    InputFormat,
    parse,
    parse_apx,
    parse_tgf,
    serialize,
    serialize_answer,
    serialize_apx,
    serialize_tgf,
)
from .generate import GeneratorConfig, Shape, generate
from .oracle import brute_force_extensions
from .bench import HarnessReport, Instance, run_harness
