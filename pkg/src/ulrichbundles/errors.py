"""Exception hierarchy shared by all engine modules.

Every error carries a short machine-readable ``code`` that the CLI maps
onto its exit-code contract (parse errors -> 1, unsupported input -> 2,
internal consistency failures -> 3).
"""


class EngineError(Exception):
    code = "engine-error"


class ParseError(EngineError):
    code = "parse-error"


class UnsupportedVariety(EngineError):
    code = "unsupported-variety"


class UnsupportedPolarisation(EngineError):
    code = "unsupported-polarisation"


class NotAmple(EngineError):
    code = "not-ample"


class NotVeryAmple(EngineError):
    code = "not-very-ample"


class GenericModeUnsupported(EngineError):
    code = "generic-mode-unsupported"


class BoxTooLarge(EngineError):
    code = "box-too-large"


class BadTwist(EngineError):
    code = "bad-twist"


class NotSurjective(EngineError):
    code = "not-surjective"


class ScanBoxTooSmall(EngineError):
    """The character scan box was provably too small; a boundary shell
    character contributed nonzero cohomology."""

    code = "scan-box-too-small"


class InternalInconsistency(EngineError):
    """Two independent computation routes disagreed.  This always signals
    a bug in the engine, never a mathematical fact."""

    code = "internal-inconsistency"
