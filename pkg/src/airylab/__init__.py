"""airylab: spectral laboratory for the 1-d anharmonic oscillator -d2/dx2 + |x|.

Eigenvalues and eigenfunctions come from the negative zeros of the Airy
function and its derivative; on top of that the package assembles restricted
Gram matrices over measurable sets, Toeplitz sections with their Szego limits,
time-observability Gramians, and a finite-difference cross-validation oracle.
"""

from ._kernels import BACKEND as kernel_backend

__all__ = ["kernel_backend", "__version__"]
__version__ = "0.1.0"
