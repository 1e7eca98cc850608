"""Monomial ideals: linear quotients, lexsegments, explicit resolutions,
Alexander duality, subword complexes, and a brute-force Betti oracle."""

__version__ = "0.1.0"

from .monomial import Monomial, TermOrder, compare, parse_monomial, format_monomial  # noqa: F401
from .ideal import MonomialIdeal, minimalize  # noqa: F401
from .kernels import BACKEND  # noqa: F401
