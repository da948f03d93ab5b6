"""
parkhedron Package.
Exact combinatorics of parking spaces, their shift quotients, Lyndon-word
transversals and the trimmed standard permutahedron.
"""

from parkhedron.config import PARKHEDRON_VERSION

__version__ = PARKHEDRON_VERSION

__all__ = ['__version__']
