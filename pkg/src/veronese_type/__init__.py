"""Equidimensionality, unmixedness and Cohen-Macaulayness of ideals of Veronese type."""

__version__ = "0.1.0"
