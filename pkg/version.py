"""rackit version information."""

__version__ = "0.1.0"
__author__ = "Jack Cs"
