"""Exception types shared across the package.

Every error carries a stable machine-readable ``code`` so the HTTP layer and
the CLI can classify failures without string matching.
"""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class FieldMismatch(AlgebraError):
    code = "field_mismatch"


class DivisionByZero(AlgebraError, ZeroDivisionError):
    code = "division_by_zero"


class ParseError(AlgebraError, ValueError):
    code = "parse_error"


class DenominatorDivisibleByP(ParseError):
    code = "denominator_divisible_by_p"


class InvalidParams(AlgebraError, ValueError):
    code = "invalid_params"


class DimensionMismatch(AlgebraError):
    code = "dimension_mismatch"


class IndexOutOfRange(AlgebraError):
    code = "index_out_of_range"


class LeibnizIdentityViolation(AlgebraError):
    """First basis triple (1-based) where x(yz) = (xy)z + y(xz) fails."""

    code = "leibniz_identity_violation"

    def __init__(self, i, j, k, lhs, rhs):
        self.i, self.j, self.k = i, j, k
        self.lhs, self.rhs = lhs, rhs
        super().__init__(
            "left Leibniz identity fails on basis triple "
            f"({i},{j},{k}): lhs={lhs} rhs={rhs}"
        )


class NotASubalgebra(AlgebraError):
    code = "not_a_subalgebra"


class NotAnIdeal(AlgebraError):
    code = "not_an_ideal"


class NotADerivation(AlgebraError):
    code = "not_a_derivation"


class SubspaceNotInAmbient(AlgebraError):
    code = "subspace_not_in_ambient"


class CharTwoDimTooLarge(AlgebraError):
    code = "char_two_dim_too_large"


class UnsupportedField(AlgebraError):
    code = "unsupported_field"


class UnsupportedCharacteristic(AlgebraError):
    code = "unsupported_characteristic"


class UnsupportedP(AlgebraError):
    code = "unsupported_p"


class DimTooLargeForEnumeration(AlgebraError):
    code = "dim_too_large_for_enumeration"


class ScopeExceeded(AlgebraError):
    code = "scope_exceeded"


class VerificationFailed(AlgebraError):
    """A computed structural object failed its definitional post-check."""

    code = "verification_failed"


class MaximalityInconclusive(AlgebraError):
    """The nilradical maximality sweep found a larger nilpotent ideal."""

    code = "maximality_inconclusive"


class CartanSearchExhausted(AlgebraError):
    code = "cartan_search_exhausted"

    def __init__(self, attempts):
        self.attempts = attempts
        super().__init__(f"no Cartan subalgebra found after {attempts} attempts")


class NotSubinvariantInput(AlgebraError):
    code = "not_subinvariant_input"


class TheoremViolation(AlgebraError):
    """A statement that is a theorem in characteristic 0 evaluated false."""

    code = "theorem_violation"


class NonzeroLeftCenter(AlgebraError):
    code = "nonzero_left_center"


class CenterAppearedMidTower(AlgebraError):
    code = "center_appeared_mid_tower"


class StageBudgetExceeded(AlgebraError):
    code = "stage_budget_exceeded"


class SumNotSolvable(AlgebraError):
    code = "sum_not_solvable"


class SumNotNilpotent(AlgebraError):
    code = "sum_not_nilpotent"
