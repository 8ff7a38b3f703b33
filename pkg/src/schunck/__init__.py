"""Schunck classes and saturated formations of solvable Lie algebras and groups over F_p."""

from .algebra import FiniteGroup, LieAlgebra
from .classes import ClassSpec, LambdaSpec, check_closure, member
from .errors import BoundedSearchError, InputError, ResourceCapError, ValidationError
from .modules import Module

__version__ = "0.1.0"
