"""Shared exception types.

ValidationError: structural data fails an invariant (bad lattice, bad
complex, bad perversity).  DomainError: an operation is undefined on the
given value (non-palindromic input to rule C, unsolvable fit, ...).
Both are ValueErrors so callers can catch the family at once; the CLI
maps them to exit code 1 and anything else to exit code 2.
"""


class ValidationError(ValueError):
    pass


class DomainError(ValueError):
    pass
