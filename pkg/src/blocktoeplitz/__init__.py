"""Block Toeplitz random matrices: patterned ensembles, exact circuit counts, moments."""
__version__ = "0.1.0"
