"""Exceptions shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands act on different numbers of qubits."""


class PauliFormatError(ValueError):
    """A Pauli text string could not be parsed."""


class NonHermitianError(ValueError):
    """An operation required a Hermitian operator (phase exponent 0 or 2)."""


class SignConflictError(RuntimeError):
    """Group closure derived the same operator with two different signs.

    This would falsify closure of the sign-decorated group and is always a
    hard error, never a report entry.
    """


class NonCommutingGeneratorsError(ValueError):
    """Stabilizer generators must commute pairwise."""


class BudgetExceededError(RuntimeError):
    """A bounded search ran out of its node budget before completing.

    Raised instead of returning a silent partial result; maps to exit
    code 3 in the command-line interface.
    """
