"""Semantic exceptions shared across the package."""


class CutChooseError(Exception):
    """Base class for all package errors."""


class NegativeProbability(CutChooseError, ValueError):
    """A probability input is below zero."""


class NotNormalized(CutChooseError, ValueError):
    """Probabilities fail their normalization contract beyond repair tolerance."""


class OutOfRange(CutChooseError, ValueError):
    """A scalar input lies outside its documented domain."""


class InvalidPermutation(CutChooseError, ValueError):
    """A food relabeling is not a bijection on {0, 1, 2}."""


class GridTooLarge(CutChooseError, ValueError):
    """A requested brute-force grid exceeds the evaluation budget."""


class DuplicateLabel(CutChooseError, ValueError):
    """Candidate labels for the election view are not distinct."""
