"""Shared collector for the acceptance summary lines.

The acceptance tests append one line per criterion; the conftest hook
prints them after the test run so they survive output capture.
"""

LINES: list = []
