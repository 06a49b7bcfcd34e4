"""qdecomp: a runtime for prompting programs.

A complex question is decomposed, one step at a time, into sub-questions
that are routed to modular handlers (few-shot prompts, symbolic functions,
nested programs, retrieval), with answers threaded back through ``#i``
references until the end-of-questions marker.
"""

from .answers import (
    AnswerValue,
    ListAnswer,
    Pair,
    Text,
    parse_answer_literal,
    serialize_answer,
)
from .controller import ExecutionResult, ExecutionState, Executor, Limits, Step, execute
from .programs import ProgramConfig, load_program

__all__ = [
    "AnswerValue",
    "Text",
    "Pair",
    "ListAnswer",
    "parse_answer_literal",
    "serialize_answer",
    "ExecutionResult",
    "ExecutionState",
    "Executor",
    "Limits",
    "Step",
    "execute",
    "ProgramConfig",
    "load_program",
]

__version__ = "0.1.0"
