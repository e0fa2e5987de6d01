"""Python front end for the acm assurance-case toolkit."""

from ._acm import (
    AcmError,
    Model,
    cae_to_sacm,
    check,
    dumps,
    evaluate,
    gsn_to_sacm,
    instantiate,
    load,
    loads,
    render,
    resolve_citation,
    root_claims,
    save,
    verify_instantiation,
)

__all__ = [
    "AcmError",
    "Model",
    "cae_to_sacm",
    "check",
    "dumps",
    "evaluate",
    "gsn_to_sacm",
    "instantiate",
    "load",
    "loads",
    "render",
    "resolve_citation",
    "root_claims",
    "save",
    "verify_instantiation",
]
