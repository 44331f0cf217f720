"""Exception hierarchy shared by every layer of the engine."""


class BMWError(Exception):
    """Base class for all engine errors."""


class PoleAtSpecialization(BMWError, ZeroDivisionError):
    pass


class HalfPowerSign(BMWError, ValueError):
    """An odd power of alpha^(1/2) met a specialization that fixes only alpha."""


class CellOutsideDiagram(BMWError, ValueError):
    pass


class StrandMismatch(BMWError, ValueError):
    pass


class ShapeMismatch(BMWError, ValueError):
    pass


class RowBound(BMWError, ValueError):
    pass


class SizeBound(BMWError, ValueError):
    pass


class NonInvertibleQuantumInteger(BMWError, ZeroDivisionError):
    pass


class NormalizationVanishes(BMWError, ZeroDivisionError):
    pass


class ZeroQuantumDimension(BMWError, ZeroDivisionError):
    pass


class MissingCertificate(BMWError, ValueError):
    pass


class FeasibilityViolated(BMWError, ValueError):
    def __init__(self, report):
        self.report = report
        failed = [b.name for b in report.bullets if not b.passed]
        super().__init__(f"feasibility bullets failed for {report.shape}: {', '.join(failed)}")
