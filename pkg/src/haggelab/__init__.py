"""Exact-arithmetic laboratory for Hagge circles and indirectly similar triangles in perspective."""

__version__ = "0.1.0"
