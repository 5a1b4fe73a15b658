"""Exception types shared across the package."""


class LoadError(ValueError):
    """An input file or record stream could not be parsed or validated."""


class UnknownDocumentError(LookupError):
    """A document id was looked up that the corpus does not contain."""


class EmptySetError(ValueError):
    """An operation received a predication set with no members."""
