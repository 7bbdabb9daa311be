"""Simplicial complexes and graphs defined on finite groups."""
from .group import FiniteGroup, GroupSpec, build_group, direct_product
from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["FiniteGroup", "GroupSpec", "build_group", "direct_product", "BACKEND"]
