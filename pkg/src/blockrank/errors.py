"""Exception types shared across the package."""


class BlockRankError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeModulus(BlockRankError):
    def __init__(self, modulus):
        super().__init__(f"modulus {modulus} is not prime")
        self.modulus = modulus


class FieldMismatch(BlockRankError):
    pass


class DivisionByZero(BlockRankError):
    pass


class NonSquare(BlockRankError):
    pass


class NonSquareBlock(BlockRankError):
    def __init__(self, index, rows, cols):
        super().__init__(f"block {index} is {rows}x{cols}, expected square")
        self.index = index


class RankTooLarge(BlockRankError):
    pass


class OddRank(BlockRankError):
    pass


class IndexOutOfRange(BlockRankError):
    pass


class ZeroScale(BlockRankError):
    pass


class SizeMismatch(BlockRankError):
    pass


class SingularTransform(BlockRankError):
    pass


class NotSymmetric(BlockRankError):
    pass


class NotAntisymmetric(BlockRankError):
    pass


class CharacteristicTwo(BlockRankError):
    pass


class EmptyBlockList(BlockRankError):
    pass


class StructureViolation(BlockRankError):
    def __init__(self, message, block_index=None):
        super().__init__(message)
        self.block_index = block_index


class CertificateError(BlockRankError):
    """A constructed completion failed its own soundness checks."""


class UnsupportedTarget(BlockRankError):
    pass


class NonFiniteField(BlockRankError):
    pass


class BudgetExceeded(BlockRankError):
    def __init__(self, required, budget):
        super().__init__(f"enumeration needs {required} completions, budget is {budget}")
        self.required = required
        self.budget = budget


class ParseError(BlockRankError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
