"""
Symperiod -- Betti-level 4-periodicity obstructions for symmetric spaces,
with the GF(2) coding arguments and symmetry-rank thresholds behind them.
"""

__version__ = "0.1.0"
