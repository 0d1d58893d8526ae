"""Exception hierarchy shared by the library and the command line."""


class HirzebruchError(Exception):
    """Base class for every domain error raised by this package."""


class NotAmple(HirzebruchError):
    pass


class InvalidBundle(HirzebruchError):
    """Extension data violating the invariants of an :class:`ExtensionBundle`."""


class AmbiguousInvariants(HirzebruchError):
    """Both factors of the extension have the same fiber degree."""


class UnsupportedFiberType(HirzebruchError):
    pass


class UnsupportedBundle(HirzebruchError):
    pass


class EmptyChamber(HirzebruchError):
    pass


class InconsistencyError(HirzebruchError):
    """An identity that must hold by construction has failed."""


class CornerArgumentError(InconsistencyError):
    pass
