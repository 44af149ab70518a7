"""Exact Jack derangement sums and the spectra of derangement graphs."""
from .errors import ConsistencyError, DomainError, JackdError, SingularParameterError, SizeError
from .exactalg import ALPHA, AlphaPoly, XPoly
from .partitions import Partition, partitions_of
from .colored import colored_derangement_counts, jack_derangement_number
from .spectra import eta, eta_value, spectrum_table
from .graphcheck import verify_spectrum

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "AlphaPoly",
    "ConsistencyError",
    "DomainError",
    "JackdError",
    "Partition",
    "SingularParameterError",
    "SizeError",
    "XPoly",
    "colored_derangement_counts",
    "eta",
    "eta_value",
    "jack_derangement_number",
    "partitions_of",
    "spectrum_table",
    "verify_spectrum",
]
