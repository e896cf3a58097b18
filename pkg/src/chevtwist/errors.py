"""Typed errors shared across the kernel; each carries a stable code the CLI
maps into JSON error reports."""


class KernelError(Exception):
    code = "KernelError"
    exit_code = 2


class FieldMismatch(KernelError):
    code = "FieldMismatch"


class DivisionByZero(KernelError):
    code = "DivisionByZero"


class ZeroArgument(KernelError):
    code = "ZeroArgument"


class FactorBoundExceeded(KernelError):
    code = "FactorBoundExceeded"


class ConstantFunction(KernelError):
    code = "ConstantFunction"


class PoleHit(KernelError):
    code = "PoleHit"


class UnsupportedType(KernelError):
    code = "UnsupportedType"


class ForeignRoot(KernelError):
    code = "ForeignRoot"


class BasisMismatch(KernelError):
    code = "BasisMismatch"


class ZeroParameter(KernelError):
    code = "ZeroParameter"


class ZeroCharacterValue(KernelError):
    code = "ZeroCharacterValue"


class RelationViolation(KernelError):
    code = "RelationViolation"


class SignObstruction(KernelError):
    code = "SignObstruction"


class NoSolution(KernelError):
    code = "NoSolution"


class BudgetExceeded(KernelError):
    code = "BudgetExceeded"
    exit_code = 3


class NotEnumerated(KernelError):
    code = "NotEnumerated"


class AutomorphismEscapesGroup(KernelError):
    code = "AutomorphismEscapesGroup"


class InfiniteOrderFieldPart(KernelError):
    code = "InfiniteOrderFieldPart"


class FiniteFieldRejected(KernelError):
    code = "FiniteFieldRejected"


class CertificateFailure(KernelError):
    code = "CertificateFailure"


class NotDiagonal(KernelError):
    code = "NotDiagonal"


class NotRational(KernelError):
    code = "NotRational"


class NotStable(KernelError):
    code = "NotStable"


class NotCentral(KernelError):
    code = "NotCentral"


class ConstancyViolation(KernelError):
    code = "ConstancyViolation"


class ParseError(KernelError):
    code = "ParseError"
    exit_code = 1
