"""Normal edge-colorings of cubic graphs."""

__version__ = "0.1.0"
