"""Exact certificates for arboreal Galois images of trinomial families."""

import sys

__version__ = "0.1.0"

# Orbit values and report digests routinely exceed CPython's default
# 4300-digit int<->str conversion limit.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
