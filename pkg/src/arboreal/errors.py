class CapacityError(RuntimeError):
    """A configured size budget (degree cap, digit budget, group order) was exceeded."""


class UnsupportedInput(ValueError):
    """Input outside what an algorithm handles (e.g. irrational critical points)."""


class IntegralityAnomaly(ArithmeticError):
    """A product expected to be integral (Moebius primitive part) was not."""
