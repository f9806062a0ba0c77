"""Exact cohomology of small p-groups from explicit free resolutions."""

__version__ = "0.1.0"
