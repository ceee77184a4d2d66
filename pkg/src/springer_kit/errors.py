"""Exception hierarchy shared by all modules."""


class SpringerKitError(Exception):
    """Base class for every error raised by the package."""


class BoundExceeded(SpringerKitError):
    pass


# partitions

class PartitionError(SpringerKitError, ValueError):
    pass


class NotSorted(PartitionError):
    pass


class NonPositivePart(PartitionError):
    pass


# symbols

class SymbolError(SpringerKitError, ValueError):
    pass


class GapViolation(SymbolError):
    pass


class BottomEntryTooSmall(SymbolError):
    pass


class NegativeRank(SymbolError):
    pass


class NotReducible(SymbolError):
    pass


class ParameterMismatch(SymbolError):
    pass


class DefectMismatch(SymbolError):
    pass


class WrongParameters(SymbolError):
    pass


# springer map

class NotInImage(SymbolError):
    pass


class RepeatedEntries(SymbolError):
    """Merged symbol entries are not pairwise distinct; the simple
    wave-front rule does not apply."""


# weyl labels

class RankExceeded(SpringerKitError, ValueError):
    pass


# cli

class UsageError(SpringerKitError):
    pass
