"""Exception hierarchy. Every error carries a stable ``code`` string."""


class CreditRiskError(Exception):
    code = "E_GENERIC"

    def __init__(self, message="", **context):
        super().__init__(message)
        self.context = context

    def __str__(self):
        return super().__str__() or self.code


class ParseError(CreditRiskError, ValueError):
    code = "E_PARSE"

    def __init__(self, row, column, message=""):
        super().__init__(
            f"row {row}, column {column}: {message}" if message else f"row {row}, column {column}",
            row=row,
            column=column,
        )
        self.row = row
        self.column = column


class SchemaError(CreditRiskError, ValueError):
    code = "E_SCHEMA"


class LabelError(CreditRiskError, ValueError):
    code = "E_LABEL"


class UnlabeledError(CreditRiskError, ValueError):
    code = "E_UNLABELED"


class ConfigError(CreditRiskError, ValueError):
    code = "E_CONFIG"


class EmptyError(CreditRiskError, ValueError):
    code = "E_EMPTY"


class AllMissingError(CreditRiskError, ValueError):
    code = "E_ALL_MISSING"

    def __init__(self, feature):
        super().__init__(f"feature {feature} has no present values", feature=feature)
        self.feature = feature


class DegenerateError(CreditRiskError, ValueError):
    code = "E_DEGENERATE"


class SingleClassError(CreditRiskError, ValueError):
    code = "E_SINGLE_CLASS"


class DimensionError(CreditRiskError, ValueError):
    code = "E_DIMENSION"


class SpecError(CreditRiskError, ValueError):
    code = "E_SPEC"


class LengthError(CreditRiskError, ValueError):
    code = "E_LENGTH"


class EmptyReportError(CreditRiskError, ValueError):
    code = "E_EMPTY_REPORT"


class FormatVersionError(CreditRiskError, ValueError):
    code = "E_FORMAT"


class CellError(CreditRiskError):
    """Wraps a module error raised while evaluating one grid cell."""

    def __init__(self, cell, cause):
        super().__init__(f"cell {cell}: {cause}", cell=cell)
        self.cell = cell
        self.cause = cause
        self.code = getattr(cause, "code", "E_GENERIC")
