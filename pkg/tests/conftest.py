"""Shared test configuration.

Every suite must be deterministic: hypothesis runs derandomized so a red
test reproduces bit-for-bit on any machine.
"""

from hypothesis import settings

settings.register_profile("exact", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("exact")
