"""Exact verification of quantum-codeword local-realism contradictions.

The package rebuilds, at exact dyadic-rational arithmetic, the stabilizer
groups of three small quantum codes and the chain of no-hidden-variables
arguments they support: element-of-reality enumerations, parity
contradictions, a multiplicative operator-array contradiction, and a
104-projector additive Kochen-Specker set with an exhaustive
non-colorability search.
"""

__version__ = "0.1.0"

from .codes import five_qubit_code, mermin_code, steane_code  # noqa: E402
from .dyadic import Dyadic  # noqa: E402
from .pauli import PauliString, parse  # noqa: E402
from .statevector import Projector, StateVector  # noqa: E402

__all__ = [
    "__version__",
    "Dyadic",
    "PauliString",
    "parse",
    "Projector",
    "StateVector",
    "five_qubit_code",
    "mermin_code",
    "steane_code",
]
