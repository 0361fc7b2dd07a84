"""Exception types shared across the package."""


class GramnetError(Exception):
    """Base class for all gramnet errors."""


class EmptyWord(GramnetError):
    """No alphabet characters remain after cleaning an input string."""


class TooLong(GramnetError):
    """Word exceeds the maximum modelled length."""


class EmptyVocab(GramnetError):
    """No N-gram survived the frequency threshold."""


class EmptyLexicon(GramnetError):
    """Lexicon-constrained decoding called with no candidate words."""


class ShapeMismatch(GramnetError):
    """Tensor or table dimensions disagree with the active configuration."""


class StaleActivations(GramnetError):
    """Backward pass given activations that do not match the parameters."""


class NoHypothesis(GramnetError):
    """Beam search invoked with an empty beam (width < 1)."""


class StateSpaceTooLarge(GramnetError):
    """Exact decoding state space exceeds the configured limit."""


class BadMagic(GramnetError):
    """File does not start with the expected magic bytes."""


class VersionMismatch(GramnetError):
    """File format version is not supported."""


class TruncatedFile(GramnetError):
    """File ended before the declared content was read."""


class LengthMismatch(GramnetError):
    """Paired sequences have different lengths."""


class DegenerateGroundTruth(GramnetError):
    """Metric undefined because the ground truth has no positive labels."""


class IoError(GramnetError):
    """Dataset or artifact could not be written or read."""


class ConfigError(GramnetError):
    """Run configuration contains unknown keys or invalid values."""
