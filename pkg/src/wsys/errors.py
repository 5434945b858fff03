"""Error types shared across the package.

Two failure modes are distinguished everywhere:

* :class:`ParseError` -- the input text could not be understood at all
  (malformed notation, non-bijective one-line image, out-of-range point).
* :class:`DomainError` -- the input was well-formed but violates a
  precondition of the requested operation (pivoting non-interlacing
  cycles, deleting a coloop, exceeding the reduction cap, ...).

The command line maps them to distinct exit codes.
"""


class ParseError(ValueError):
    """Malformed input text."""


class DomainError(ValueError):
    """Structurally valid input outside an operation's domain."""
