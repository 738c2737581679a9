"""
Common utilities shared across the toolkit
"""

__version__ = "0.1.0"
