"""Exact upper bounds on binary error-correcting codes.

The package computes rigorous upper bounds on A(n, d), the maximum number of
binary strings of length n with pairwise Hamming distance at least d, using
exact rational arithmetic end to end:

- `lpbound.cube` — Krawtchouk tables and exact Fourier analysis on the cube;
- `lpbound.walks` — closed walk counts between levels of the cube;
- `lpbound.certificates` — dual-feasible witness functions built from walk
  counts, with certified bounds;
- `lpbound.lp` — the full linear program, solved with an exact rational
  simplex;
- `lpbound.codes` — an exhaustive small-n oracle giving true values of A(n, d);
- `lpbound.cli` — command-line reports (CSV/JSON, optional figures).
"""

from lpbound.cube import (
    DenseFunction,
    KrawtchoukTable,
    LevelProfile,
    binary_entropy,
    binomial,
    dense_convolve,
    dense_transform,
    krawtchouk_table,
    radial_sum,
    radial_transform,
    radialize,
    to_dense,
)

__all__ = [
    "DenseFunction",
    "KrawtchoukTable",
    "LevelProfile",
    "binary_entropy",
    "binomial",
    "dense_convolve",
    "dense_transform",
    "krawtchouk_table",
    "radial_sum",
    "radial_transform",
    "radialize",
    "to_dense",
]

__version__ = "0.1.0"
