"""Exception hierarchy shared by every ranklab module."""


class RanklabError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class SentenceSyntaxError(RanklabError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class UnboundAtomError(RanklabError, LookupError):
    pass


class SupportCapExceeded(RanklabError):
    pass


class OrdinalSyntaxError(RanklabError, ValueError):
    pass


class OrdinalBoundError(RanklabError):
    pass


class SupportOverflow(RanklabError):
    """A sentence mentions an atom outside a finite family's language."""


class FamilySyntaxError(RanklabError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class NotInClosureError(RanklabError):
    pass


class NotEClosedError(RanklabError):
    pass


class OracleBoundError(RanklabError):
    pass


class NonStabilizingFamily(RanklabError):
    pass


class SearchBudgetExceeded(RanklabError):
    """A bounded structural search ran past its depth budget."""
