"""Bounded-exhaustive analysis of variadic string functions.

The heavy lifting lives in the C++ extension; this package re-exports
its surface: alphabets, domains, the function catalogue, the class
checkers, factorization and hierarchy profiling.
"""

from ._varfn import (
    Alphabet,
    ConfigError,
    DomainSet,
    VariadicFn,
    catalogue,
    check,
    compose,
    default_alphabet,
    degree,
    factorize,
    instantiate,
    make_domain,
    patch,
    profile,
    run_cli,
)

__all__ = [
    "Alphabet",
    "ConfigError",
    "DomainSet",
    "VariadicFn",
    "catalogue",
    "check",
    "compose",
    "default_alphabet",
    "degree",
    "factorize",
    "instantiate",
    "make_domain",
    "patch",
    "profile",
    "run_cli",
]
