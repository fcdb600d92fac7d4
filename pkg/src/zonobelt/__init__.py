"""Belt and dual diameters of graphical zonotopes."""

__version__ = "0.1.0"
