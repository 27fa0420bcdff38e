"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""

from __future__ import annotations


class BranchlabError(Exception):
    code = "error"


class ParseError(BranchlabError, ValueError):
    code = "parse"


class UnsupportedTypeError(BranchlabError, ValueError):
    code = "unsupported-type"


class DimensionMismatchError(BranchlabError, ValueError):
    code = "dimension-mismatch"


class NonDominantWeightError(BranchlabError, ValueError):
    code = "non-dominant"


class ResourceLimitError(BranchlabError, RuntimeError):
    code = "resource-limit"


class InconsistentEmbeddingError(BranchlabError, ValueError):
    code = "inconsistent-embedding"


class ValidationError(BranchlabError, ValueError):
    code = "validation"


class NotInteriorError(BranchlabError, ValueError):
    code = "not-interior"


class SequenceTooShortError(BranchlabError, ValueError):
    code = "k-too-small"
