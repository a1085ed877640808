"""Domain errors. All of them map to CLI exit code 3."""


class GasledgerError(Exception):
    """Base class for every domain-level failure."""


class TooManyParameters(GasledgerError):
    """Function signature exceeds the 16-parameter compiler limit."""


class TypeMismatch(GasledgerError):
    """Argument value does not fit its declared ABI type."""


class TooManyIndexed(GasledgerError):
    """Event declares more indexed parameters than the EVM allows."""


class NoDispatchTarget(GasledgerError):
    """No function selector matches and the contract has no fallback."""


class ChunkTooLarge(GasledgerError):
    """Chunk payload exceeds the 4096-byte BMT capacity."""


class BadDigestLength(GasledgerError):
    """CID digests must be exactly 32 bytes."""
