"""Tree polynomials, leading trees and the Stanley-Reisner complex of the slope variety."""

__version__ = "0.1.0"
