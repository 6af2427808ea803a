"""Finite neighborhood frames: evaluation, closure operators, filtrations and bounded search.

Subsets of worlds are integer bitmasks (world i is bit i). Frames are box
tables indexed by bitmask.
"""

from ._core import (
    DEFAULT_SEED,
    ConfigError,
    Error,
    FormatError,
    Formula,
    Frame,
    FrameError,
    GuardError,
    InternalError,
    Model,
    ParseError,
    PreconditionError,
    axiom_report,
    bounded_sat,
    filtrate,
    frame_from_json,
    frame_to_json,
    hat_closure,
    holds_at,
    intersection_closure,
    is_monotonic,
    is_reflexive,
    is_regular,
    is_transitive,
    is_variable_free,
    kripke_to_neighborhood,
    model_from_json,
    model_to_json,
    parse,
    render,
    rm_closure,
    run_lemmas,
    satisfies_class,
    supplement,
    truth_set,
    valid_on_frame,
)


def properties(frame):
    """The four frame properties as a dict."""
    return {
        "reflexive": is_reflexive(frame),
        "transitive": is_transitive(frame),
        "monotonic": is_monotonic(frame),
        "regular": is_regular(frame),
    }


def countermodel(formula, frame_class, **kwargs):
    """bounded_sat of the negation; a satisfiable outcome refutes validity."""
    if isinstance(formula, str):
        formula = parse(formula)
    return bounded_sat(parse("~(" + render(formula) + ")"), frame_class, **kwargs)


__all__ = [name for name in dir() if not name.startswith("_")]
