"""Exact symbolic kernel for the quantum Lie algebra (sl_{n+1}^+)_q.

Scalars are Laurent polynomials in ``q`` with integer coefficients; nothing
is ever evaluated numerically.
"""

__version__ = "0.1.0"

from .scalars import LScalar, QScalar  # noqa: E402
from .basis import Element, Gen, UNIT, parse_element, render  # noqa: E402
from .structure import TLieStructure, quantum_sl_plus  # noqa: E402

__all__ = ["Element", "Gen", "LScalar", "QScalar", "TLieStructure", "UNIT",
           "__version__", "parse_element", "quantum_sl_plus", "render"]
