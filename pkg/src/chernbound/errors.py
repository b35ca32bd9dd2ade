"""Exception types; the CLI maps each to a distinct exit status."""


class SchemaError(ValueError):
    """Input does not parse against a documented JSON schema."""


class PreconditionError(ValueError):
    """Arguments violate an operation's precondition."""


class InvariantError(RuntimeError):
    """An internal or structural invariant failed."""
