"""Exception types shared across the package."""


class ImagoError(Exception):
    pass


class ParseError(ImagoError, ValueError):
    """Raised on malformed input text; ``pos`` is the 0-based offset."""

    def __init__(self, msg, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            msg = f"{msg} at position {pos}"
        super().__init__(msg)


class CapExceeded(ImagoError, RuntimeError):
    """A computation would exhaust more than the configured limit."""

    def __init__(self, what, required, cap):
        self.what = what
        self.required = required
        self.cap = cap
        super().__init__(f"{what}: {required} required, cap is {cap}")


class PreconditionError(ImagoError, ValueError):
    pass
