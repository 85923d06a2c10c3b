"""Exception types shared across the toolkit."""

from __future__ import annotations


class HycliqueError(Exception):
    """Base class for all toolkit errors."""


class InputError(HycliqueError):
    """Malformed input, or a parameter outside its documented domain."""


class PropertyViolation(HycliqueError):
    """A checked structural property failed on the given input.

    Raised when an input that claims (or is required to have) some
    structure fails the corresponding exact check: a non-clique fed to a
    clique-only operation, a chromatic-number-3 hypothesis that does not
    hold, or an asserted inequality that fails.
    """


class NotAClique(PropertyViolation):
    """Some pair of edges is disjoint; carries the first such pair."""

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"edges {witness[0]} and {witness[1]} are disjoint")
