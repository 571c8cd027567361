class QbcError(Exception):
    pass

class InvalidArgumentError(QbcError, ValueError):
    pass

class InvalidModelError(QbcError):
    pass

class FormatError(QbcError):
    pass

class ResourceLimitError(QbcError):
    pass

class ReportIOError(QbcError, IOError):
    pass
