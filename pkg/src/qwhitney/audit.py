"""Identity registry and erratum engine.

Each registered check evaluates one identity of the triangle families as
an exact polynomial equality over a parameter grid, reporting pass/fail
per grid point with the lexicographically first counterexample.  Checks
whose commonly printed form differs from the derivation-consistent form
run in both variants; a check counts as an erratum when its verbatim
variant fails somewhere on the grid while its corrected variant passes
everywhere.  Verbatim failures of those checks are expected findings and
do not make a report unclean.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable

from .qalg import LaurentPoly, ONE, ZERO, lp_eval, q_bracket, q_power
from .triangles import (
    FamilyId,
    Params,
    dowling,
    invert_unit_triangular,
    lah,
    whitney1_falling,
    whitney2,
    whitney2_scaled,
    whitney2_verbatim,
)
from .upoly import UPoly, falling_factorial_u, rising_factorial_u, upoly_coeff
from .formulas import (
    Variant,
    bracket_power,
    dowling_qi,
    lah_egf_coeff,
    lah_explicit,
    lah_horizontal,
    lah_vertical,
    lah_via_composition,
    newton_lah_coefficients,
    rising_bracket_product,
    whitney2_egf_coeff,
    whitney2_explicit,
    whitney2_horizontal,
    whitney2_rational_gf,
    whitney2_vertical,
    whitney_from_lah,
)


class UnknownCheckIdError(KeyError):
    """A check id not present in the registry was requested."""


@dataclass(frozen=True)
class ParamGrid:
    """The (m, r) grid and row bound a run covers; values iterate sorted."""

    m_values: tuple[int, ...]
    r_values: tuple[int, ...]
    nmax: int

    def __post_init__(self) -> None:
        if not self.m_values or not self.r_values:
            raise ValueError("grid must have at least one m and one r value")
        if any(m < 1 for m in self.m_values):
            raise ValueError("all m values must be >= 1")
        if self.nmax < 2:
            raise ValueError("nmax must be >= 2")
        object.__setattr__(self, "m_values", tuple(sorted(set(self.m_values))))
        object.__setattr__(self, "r_values", tuple(sorted(set(self.r_values))))

    def points(self) -> Iterable[Params]:
        for m in self.m_values:
            for r in self.r_values:
                yield Params(m, r)


DEFAULT_GRID = ParamGrid((1, 2, 3), tuple(range(-2, 4)), 10)


@dataclass(frozen=True)
class Counterexample:
    n: int
    k: int
    lhs: LaurentPoly
    rhs: LaurentPoly


@dataclass(frozen=True)
class CheckResult:
    check: str
    variant: Variant
    m: int
    r: int
    status: str  # "pass" | "fail"
    counterexample: Counterexample | None = None

    def to_json_dict(self) -> dict:
        doc: dict = {
            "id": self.check,
            "variant": self.variant.value,
            "m": self.m,
            "r": self.r,
            "status": self.status,
        }
        if self.counterexample is not None:
            ce = self.counterexample
            doc["counterexample"] = {
                "n": ce.n,
                "k": ce.k,
                "lhs": str(ce.lhs),
                "rhs": str(ce.rhs),
            }
        return doc


CheckFn = Callable[[Variant, Params, int], Counterexample | None]


@dataclass(frozen=True)
class CheckDef:
    id: str
    summary: str
    variants: tuple[Variant, ...]
    fn: CheckFn


def _first_upoly_mismatch(n: int, got: UPoly, want: UPoly) -> Counterexample:
    top = max(got.degree(), want.degree())
    for i in range(top + 1):
        if got.coeff(i) != want.coeff(i):
            return Counterexample(n, i, got.coeff(i), want.coeff(i))
    raise AssertionError("mismatch reported for equal polynomials")


# -- check functions ------------------------------------------------------
# Convention: a counterexample's lhs is the value asserted by the statement
# under test, rhs is the reference value from the canonical triangle.


def _check_w_horiz_gf(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        acc = UPoly.zero()
        for k in range(n + 1):
            acc = acc + falling_factorial_u(p.m, p.r, k) * whitney2(p, n, k)
        want = UPoly.u_power(n)
        if acc != want:
            return _first_upoly_mismatch(n, acc, want)
    return None


def _check_w_forms_scaling(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            w = whitney2(p, n, k)
            star = whitney2_scaled(2, p, n, k)
            tilde = whitney2_scaled(3, p, n, k)
            want_star = q_power(-k * p.r - p.m * comb(k, 2)) * w
            if star != want_star:
                return Counterexample(n, k, star, want_star)
            if tilde != q_power(k * p.r) * star:
                return Counterexample(n, k, tilde, q_power(k * p.r) * star)
            if tilde != q_power(-p.m * comb(k, 2)) * w:
                return Counterexample(n, k, tilde, q_power(-p.m * comb(k, 2)) * w)
    return None


def _check_w_recurrence_sign(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            want = whitney2(p, n, k)
            if variant is Variant.VERBATIM:
                got = whitney2_verbatim(p, n, k)
            elif n == 0:
                got = want
            else:
                got = q_power(p.m * (k - 1) + p.r) * whitney2(p, n - 1, k - 1) + q_bracket(
                    p.m * k + p.r
                ) * whitney2(p, n - 1, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_w_vertical(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax):
        for k in range(n + 1):
            got = whitney2_vertical(p, n, k)
            want = whitney2(p, n + 1, k + 1)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_w_horizontal(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            got = whitney2_horizontal(p, n, k)
            want = whitney2(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_w_explicit(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            got = whitney2_explicit(p, n, k)
            want = whitney2(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_w_egf(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            got = whitney2_egf_coeff(p, n, k)
            want = whitney2(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_w_rational_gf(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    series = [whitney2_rational_gf(p, k, nmax) for k in range(nmax + 1)]
    for n in range(nmax + 1):
        for k in range(nmax + 1):
            got = upoly_coeff(series[k], n)
            want = whitney2(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_dowling_forms(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        sums = [ZERO, ZERO, ZERO]
        for k in range(n + 1):
            w = whitney2(p, n, k)
            sums[0] = sums[0] + w
            sums[1] = sums[1] + q_power(-k * p.r - p.m * comb(k, 2)) * w
            sums[2] = sums[2] + q_power(-p.m * comb(k, 2)) * w
        for form in (1, 2, 3):
            got = dowling(p, form, n)
            if got != sums[form - 1]:
                return Counterexample(n, 0, got, sums[form - 1])
    return None


def _check_lah_triangular(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    m, r = p.m, p.r
    for n in range(1, nmax + 1):
        for k in range(n + 1):
            got = q_power(2 * r + m * (k - 1) + m * (n - 1)) * lah(p, n - 1, k - 1) + q_bracket(
                2 * r + k * m + (n - 1) * m
            ) * lah(p, n - 1, k)
            want = lah(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_lah_vertical(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax):
        for k in range(n + 1):
            got = lah_vertical(variant, p, n, k)
            want = lah(p, n + 1, k + 1)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_lah_horizontal(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            got = lah_horizontal(p, n, k)
            want = lah(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_orthogonality(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for j in range(n + 1):
            want = ONE if n == j else ZERO
            left = ZERO
            right = ZERO
            for k in range(j, n + 1):
                left = left + whitney1_falling(p, n, k) * whitney2(p, k, j)
                right = right + whitney2(p, n, k) * whitney1_falling(p, k, j)
            if left != want:
                return Counterexample(n, j, left, want)
            if right != want:
                return Counterexample(n, j, right, want)
    return None


def _check_inverse_relations(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    inv_first = invert_unit_triangular(FamilyId.W1_FALLING, p, nmax)
    inv_second = invert_unit_triangular(FamilyId.W2, p, nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            got = inv_first.value(n, k)
            want = whitney2(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
            got = inv_second.value(n, k)
            want = whitney1_falling(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_lah_composition(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for j in range(n + 1):
            got = lah_via_composition(variant, p, n, j)
            want = lah(p, n, j)
            if got != want:
                return Counterexample(n, j, got, want)
    return None


def _check_w_from_lah(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for j in range(n + 1):
            got = whitney_from_lah(variant, p, n, j)
            want = whitney2(p, n, j)
            if got != want:
                return Counterexample(n, j, got, want)
    return None


def _check_dowling_qi(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        got = dowling_qi(variant, p, n)
        want = dowling(p, 1, n)
        if got != want:
            return Counterexample(n, 0, got, want)
    return None


def _check_lah_horiz_gf(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        acc = UPoly.zero()
        for k in range(n + 1):
            acc = acc + falling_factorial_u(p.m, 0, k) * lah(p, n, k)
        want = rising_factorial_u(p.m, 2 * p.r, n)
        if acc != want:
            return _first_upoly_mismatch(n, acc, want)
    return None


def _check_lah_diagonal(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        claimed = ONE if variant is Variant.VERBATIM else q_power(
            2 * p.r * n + p.m * n * (n - 1)
        )
        got = lah(p, n, n)
        if claimed != got:
            return Counterexample(n, n, claimed, got)
    return None


def _check_lah_column_zero(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        if variant is Variant.VERBATIM:
            claimed = bracket_power(2 * p.r + (n - 1) * p.m, n)
        else:
            claimed = rising_bracket_product(2 * p.r, p.m, n)
        got = lah(p, n, 0)
        if claimed != got:
            return Counterexample(n, 0, claimed, got)
    return None


def _check_lah_explicit(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            got = lah_explicit(p, n, k)
            want = lah(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_lah_newton(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        row = newton_lah_coefficients(p, n)
        for k in range(n + 1):
            want = lah(p, n, k)
            if row[k] != want:
                return Counterexample(n, k, row[k], want)
    return None


def _check_lah_egf(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        for k in range(n + 1):
            got = lah_egf_coeff(p, n, k)
            want = lah(p, n, k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_w1_recurrence(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    for n in range(nmax + 1):
        fall = falling_factorial_u(p.m, p.r, n)
        for k in range(n + 1):
            got = whitney1_falling(p, n, k)
            want = fall.coeff(k)
            if got != want:
                return Counterexample(n, k, got, want)
    return None


def _check_w1_boundary(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    m, r = p.m, p.r
    for n in range(1, nmax + 1):
        if variant is Variant.VERBATIM:
            claimed = q_power(-r - (n - 1) * m) * q_bracket(r + (n - 1) * m)
        else:
            claimed = q_power(-n * r - m * comb(n, 2)) * rising_bracket_product(r, m, n)
        if n % 2:
            claimed = -claimed
        got = whitney1_falling(p, n, 0)
        if claimed != got:
            return Counterexample(n, 0, claimed, got)
    return None


def _check_w1_table(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    m, r = p.m, p.r
    if variant is Variant.VERBATIM:
        w20 = q_power(-(r + m)) * q_bracket(r + m)
    else:
        w20 = q_power(-(2 * r + m)) * q_bracket(r) * q_bracket(r + m)
    cells = [
        (1, 0, -(q_power(-r) * q_bracket(r))),
        (1, 1, q_power(-r)),
        (2, 0, w20),
        (2, 1, -(q_power(-(2 * r + m)) * (q_bracket(r) + q_bracket(r + m)))),
        (2, 2, q_power(-(2 * r + m))),
    ]
    for n, k, claimed in cells:
        got = whitney1_falling(p, n, k)
        if claimed != got:
            return Counterexample(n, k, claimed, got)
    return None


# -- integer oracles for the q -> 1 limits ---------------------------------


def _bell_numbers(top: int) -> list[int]:
    bells = [1]
    row = [1]
    for _ in range(top):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        bells.append(row[0])
    return bells


def _stirling2_rows(top: int) -> list[list[int]]:
    rows = [[1]]
    for n in range(1, top + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            left = prev[k - 1] if 0 <= k - 1 < n else 0
            right = prev[k] if k < n else 0
            row.append(left + k * right)
        rows.append(row)
    return rows


def _cheon_jung_rows(m: int, r: int, top: int) -> list[list[int]]:
    rows = [[1]]
    for n in range(1, top + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            left = prev[k - 1] if 0 <= k - 1 < n else 0
            right = prev[k] if k < n else 0
            row.append(left + (2 * r + k * m + (n - 1) * m) * right)
        rows.append(row)
    return rows


def _classical_lah(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if k < 1 or k > n:
        return 0
    return factorial(n) // factorial(k) * comb(n - 1, k - 1)


def _check_classical_limits(variant: Variant, p: Params, nmax: int) -> Counterexample | None:
    top = min(nmax, 10)
    cj = _cheon_jung_rows(p.m, p.r, top)
    special = p.m == 1 and p.r == 0
    if special:
        bells = _bell_numbers(top)
        stirling = _stirling2_rows(top)
    for n in range(top + 1):
        if special:
            got = lp_eval(dowling(p, 1, n))
            if got != bells[n]:
                return Counterexample(n, 0, LaurentPoly.const(int(got)), LaurentPoly.const(bells[n]))
        for k in range(n + 1):
            got = lp_eval(lah(p, n, k))
            if got != cj[n][k]:
                return Counterexample(n, k, LaurentPoly.const(int(got)), LaurentPoly.const(cj[n][k]))
            if special:
                if got != _classical_lah(n, k):
                    return Counterexample(
                        n, k, LaurentPoly.const(int(got)), LaurentPoly.const(_classical_lah(n, k))
                    )
                got_w = lp_eval(whitney2(p, n, k))
                if got_w != stirling[n][k]:
                    return Counterexample(
                        n, k, LaurentPoly.const(int(got_w)), LaurentPoly.const(stirling[n][k])
                    )
    return None


_BOTH = (Variant.VERBATIM, Variant.CORRECTED)
_SINGLE = (Variant.VERBATIM,)

REGISTRY: dict[str, CheckDef] = {
    c.id: c
    for c in [
        CheckDef("C01_W_HORIZ_GF", "second-kind rows expand u^n in the shifted falling basis", _SINGLE, _check_w_horiz_gf),
        CheckDef("C02_W_FORMS_SCALING", "form-2/form-3 triangles are monomial rescales of the first form", _SINGLE, _check_w_forms_scaling),
        CheckDef("C03_W_RECURRENCE_SIGN", "sign of r in the second-kind triangular recurrence weights", _BOTH, _check_w_recurrence_sign),
        CheckDef("C04_W_VERTICAL", "second-kind vertical recurrence", _SINGLE, _check_w_vertical),
        CheckDef("C05_W_HORIZONTAL", "second-kind horizontal recurrence", _SINGLE, _check_w_horizontal),
        CheckDef("C06_W_EXPLICIT", "second-kind explicit alternating-sum formula", _SINGLE, _check_w_explicit),
        CheckDef("C07_W_EGF", "second-kind exponential generating function coefficients", _SINGLE, _check_w_egf),
        CheckDef("C08_W_RATIONAL_GF", "second-kind rational column generating series", _SINGLE, _check_w_rational_gf),
        CheckDef("C09_DOWLING_FORMS", "row-sum sequences of the three second-kind forms", _SINGLE, _check_dowling_forms),
        CheckDef("C10_LAH_TRIANGULAR", "Lah-type triangular recurrence from the single corner seed", _SINGLE, _check_lah_triangular),
        CheckDef("C11_LAH_VERTICAL", "Lah-type vertical recurrence", _BOTH, _check_lah_vertical),
        CheckDef("C12_ORTHOGONALITY", "first-kind and second-kind triangles are mutually orthogonal", _SINGLE, _check_orthogonality),
        CheckDef("C13_INVERSE_RELATIONS", "forward-substitution inverses equal the partner triangles", _SINGLE, _check_inverse_relations),
        CheckDef("C14_LAH_COMPOSITION", "Lah-type entries as a first-kind/second-kind matrix product", _BOTH, _check_lah_composition),
        CheckDef("C15_W_FROM_LAH", "second-kind entries recovered from the Lah-type triangle", _BOTH, _check_w_from_lah),
        CheckDef("C16_DOWLING_QI", "row-sum sequence assembled from Lah-type row sums", _BOTH, _check_dowling_qi),
        CheckDef("C17_LAH_HORIZ_GF", "Lah-type rows expand the shifted rising product in the falling basis", _SINGLE, _check_lah_horiz_gf),
        CheckDef("C18_LAH_DIAGONAL", "Lah-type diagonal entries against the unit-diagonal boundary claim", _BOTH, _check_lah_diagonal),
        CheckDef("C19_LAH_COLUMN_ZERO", "Lah-type column zero closed form", _BOTH, _check_lah_column_zero),
        CheckDef("C20_LAH_EXPLICIT", "Lah-type explicit alternating-sum formula", _SINGLE, _check_lah_explicit),
        CheckDef("C21_LAH_NEWTON", "Lah-type rows as interpolation coefficients on the step-m node grid", _SINGLE, _check_lah_newton),
        CheckDef("C22_LAH_EGF", "Lah-type exponential generating function coefficients", _SINGLE, _check_lah_egf),
        CheckDef("C23_W1_RECURRENCE", "first-kind recurrence matches the falling-product coefficients", _SINGLE, _check_w1_recurrence),
        CheckDef("C24_W1_BOUNDARY", "first-kind column zero closed form", _BOTH, _check_w1_boundary),
        CheckDef("C25_W1_TABLE", "first-kind low-order table values", _BOTH, _check_w1_table),
        CheckDef("C26_CLASSICAL_LIMITS", "q -> 1 limits against integer oracles", _SINGLE, _check_classical_limits),
    ]
}


def run_check(check_id: str, grid: ParamGrid) -> list[CheckResult]:
    """Evaluate one registered check over the whole grid, both variants."""
    check = REGISTRY.get(check_id)
    if check is None:
        raise UnknownCheckIdError(check_id)
    results = []
    for params in grid.points():
        for variant in check.variants:
            ce = check.fn(variant, params, grid.nmax)
            results.append(
                CheckResult(
                    check=check.id,
                    variant=variant,
                    m=params.m,
                    r=params.r,
                    status="pass" if ce is None else "fail",
                    counterexample=ce,
                )
            )
    return results


def classical_limit_check(grid: ParamGrid) -> list[CheckResult]:
    """The q -> 1 oracle comparisons as grid results."""
    return run_check("C26_CLASSICAL_LIMITS", grid)


class AuditReport:
    """All check results over a grid, with summary counts and the erratum list."""

    def __init__(self, grid: ParamGrid, results: list[CheckResult]):
        self.grid = grid
        self.results = results

    @property
    def errata(self) -> list[str]:
        """Checks whose verbatim variant fails somewhere while corrected passes."""
        out = []
        for check_id, check in REGISTRY.items():
            if len(check.variants) < 2:
                continue
            mine = [res for res in self.results if res.check == check_id]
            if not mine:
                continue
            verbatim_fails = any(
                res.status == "fail" for res in mine if res.variant is Variant.VERBATIM
            )
            corrected_ok = all(
                res.status == "pass" for res in mine if res.variant is Variant.CORRECTED
            )
            if verbatim_fails and corrected_ok:
                out.append(check_id)
        return out

    @property
    def counts(self) -> dict[str, int]:
        passed = sum(1 for res in self.results if res.status == "pass")
        return {"total": len(self.results), "pass": passed, "fail": len(self.results) - passed}

    @property
    def clean(self) -> bool:
        """True when every corrected and every single-variant result passes."""
        for res in self.results:
            if res.status == "fail":
                if res.variant is Variant.CORRECTED or len(REGISTRY[res.check].variants) < 2:
                    return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "grid": {
                "m": list(self.grid.m_values),
                "r": list(self.grid.r_values),
                "nmax": self.grid.nmax,
            },
            "checks": [res.to_json_dict() for res in self.results],
            "summary": self.counts,
            "errata": self.errata,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1) + "\n"

    def render_table(self) -> str:
        lines = []
        width = max(len(cid) for cid in REGISTRY)
        lines.append(f"{'check':<{width}}  {'variant':<9}  pass  fail  first counterexample")
        seen = [res.check for res in self.results]
        for check_id in REGISTRY:
            if check_id not in seen:
                continue
            for variant in REGISTRY[check_id].variants:
                mine = [
                    res
                    for res in self.results
                    if res.check == check_id and res.variant is variant
                ]
                if not mine:
                    continue
                passed = sum(1 for res in mine if res.status == "pass")
                failed = len(mine) - passed
                note = ""
                for res in mine:
                    if res.status == "fail":
                        ce = res.counterexample
                        note = (
                            f"(m={res.m}, r={res.r}) n={ce.n} k={ce.k}: "
                            f"{ce.lhs} != {ce.rhs}"
                        )
                        break
                lines.append(
                    f"{check_id:<{width}}  {variant.value:<9}  {passed:>4}  {failed:>4}  {note}"
                )
        lines.append("")
        lines.append(f"summary: {self.counts['pass']} pass, {self.counts['fail']} fail")
        errata = self.errata
        if errata:
            lines.append("errata (fail as stated, pass corrected):")
            for check_id in errata:
                lines.append(f"  {check_id}: {REGISTRY[check_id].summary}")
        lines.append(f"verdict: {'clean' if self.clean else 'NOT CLEAN'}")
        return "\n".join(lines) + "\n"


def run_all(grid: ParamGrid = DEFAULT_GRID, check_ids: list[str] | None = None) -> AuditReport:
    """Run every registered check (or a named subset) over the grid."""
    ids = list(REGISTRY) if check_ids is None else list(check_ids)
    for check_id in ids:
        if check_id not in REGISTRY:
            raise UnknownCheckIdError(check_id)
    results: list[CheckResult] = []
    for check_id in ids:
        results.extend(run_check(check_id, grid))
    return AuditReport(grid, results)
