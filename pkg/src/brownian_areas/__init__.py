"""Brownian excursion, bridge, motion and meander areas."""

__version__ = "0.1.0"
