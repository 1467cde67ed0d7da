"""Toolkit for generating and benchmarking grammatically erroneous Bangla sentences.

The package covers the full loop: cleaning and tokenizing Bangla text,
injecting one of twelve kinds of grammatical errors into correct sentences,
assembling a quota-driven labeled corpus, scoring classifier predictions with
macro-F1, and running the human-annotation server used to validate and
benchmark the generated data.
"""

__version__ = "0.1.0"
