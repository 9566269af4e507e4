"""zetalab: computable zeta functions, at desk scale.

Subpackages cover point counting on curves over finite fields, splitting
fingerprints of number fields, the finite-level multiplicative dynamical
system over Q with its Gibbs states, Dirichlet L-series, and the spectral
zeta machinery of flat 2-tori.
"""

from zetalab.errors import ConsistencyError, DomainError, SizeError

__version__ = "0.1.0"

__all__ = ["ConsistencyError", "DomainError", "SizeError", "__version__"]
