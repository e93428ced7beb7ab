"""Memoized number-triangle families driven by two-term recurrences.

Seven related families are produced over a common parameter pair (m, r):
three forms of the second-kind triangle plus a sign-variant of its
recurrence, two first-kind triangles (falling and rising basis), and the
Lah-type triangle.  Entries are exact Laurent polynomials; each triangle
is filled row-major on demand and entries are never recomputed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .qalg import LaurentPoly, ONE, ZERO, q_bracket, q_power
from .upoly import rising_factorial_u


class NonUnitDiagonalError(ArithmeticError):
    """Triangular inversion requires every diagonal entry to be +-q^e."""


class CacheInvalidError(ValueError):
    """An on-disk triangle document failed validation and must not be trusted."""


@dataclass(frozen=True)
class Params:
    """The parameter pair (m, r); m >= 1, r any integer."""

    m: int
    r: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be an integer >= 1, got {self.m!r}")
        if not isinstance(self.r, int):
            raise ValueError(f"r must be an integer, got {self.r!r}")


class FamilyId(Enum):
    """The closed set of triangle families, keyed by their stable CLI names."""

    W2 = "w2"
    W2_VERBATIM = "w2-verbatim"
    W2_FORM2 = "w2-star"
    W2_FORM3 = "w2-tilde"
    W1_FALLING = "w1"
    W1_RISING = "w1-rising"
    LAH = "lah"


class Triangle:
    """A lazily filled, memoized triangle T[n, k] for one (family, params)."""

    def __init__(self, family: FamilyId, params: Params):
        self.family = family
        self.params = params
        self._rows: list[list[LaurentPoly]] = [[ONE]]

    def value(self, n: int, k: int) -> LaurentPoly:
        if n < 0 or k < 0 or k > n:
            return ZERO
        self._ensure(n)
        return self._rows[n][k]

    def row(self, n: int) -> tuple[LaurentPoly, ...]:
        if n < 0:
            raise ValueError("row index must be >= 0")
        self._ensure(n)
        return tuple(self._rows[n])

    def rows(self, nmax: int) -> list[list[LaurentPoly]]:
        self._ensure(nmax)
        return [list(r) for r in self._rows[: nmax + 1]]

    def __getitem__(self, nk: tuple[int, int]) -> LaurentPoly:
        return self.value(*nk)

    def _ensure(self, n: int) -> None:
        while len(self._rows) <= n:
            self._rows.append(self._next_row(len(self._rows)))

    def _next_row(self, n: int) -> list[LaurentPoly]:
        m, r = self.params.m, self.params.r
        prev = self._rows[n - 1]

        def p(k: int) -> LaurentPoly:
            return prev[k] if 0 <= k <= n - 1 else ZERO

        fam = self.family
        if fam is FamilyId.W2:
            return [
                q_power(m * (k - 1) + r) * p(k - 1) + q_bracket(m * k + r) * p(k)
                for k in range(n + 1)
            ]
        if fam is FamilyId.W2_VERBATIM:
            return [
                q_power(m * (k - 1) - r) * p(k - 1) + q_bracket(m * k - r) * p(k)
                for k in range(n + 1)
            ]
        if fam is FamilyId.W2_FORM2:
            # Rescaling the canonical recurrence by q^(-kr - m*binom(k,2))
            # cancels the diagonal weight entirely.
            return [p(k - 1) + q_bracket(m * k + r) * p(k) for k in range(n + 1)]
        if fam is FamilyId.W2_FORM3:
            return [
                q_power(r) * p(k - 1) + q_bracket(m * k + r) * p(k)
                for k in range(n + 1)
            ]
        if fam is FamilyId.W1_FALLING:
            scale = q_power(-(r + (n - 1) * m))
            fall = q_bracket(r + (n - 1) * m)
            return [scale * (p(k - 1) - fall * p(k)) for k in range(n + 1)]
        if fam is FamilyId.W1_RISING:
            rising = rising_factorial_u(m, r, n)
            return [rising.coeff(k) for k in range(n + 1)]
        if fam is FamilyId.LAH:
            return [
                q_power(2 * r + m * (k - 1) + m * (n - 1)) * p(k - 1)
                + q_bracket(2 * r + k * m + (n - 1) * m) * p(k)
                for k in range(n + 1)
            ]
        raise AssertionError(f"unhandled family {fam}")


_TRIANGLES: dict[tuple[FamilyId, int, int], Triangle] = {}


def get_triangle(family: FamilyId, params: Params) -> Triangle:
    """The process-wide shared triangle for (family, params)."""
    key = (family, params.m, params.r)
    tri = _TRIANGLES.get(key)
    if tri is None:
        tri = _TRIANGLES[key] = Triangle(family, params)
    return tri


def clear_registry() -> None:
    """Drop all memoized triangles and inverses (test isolation hook)."""
    _TRIANGLES.clear()
    _INVERSES.clear()


def whitney2(params: Params, n: int, k: int) -> LaurentPoly:
    """Second-kind triangle entry from the canonical (+r weight) recurrence."""
    return get_triangle(FamilyId.W2, params).value(n, k)


def whitney2_verbatim(params: Params, n: int, k: int) -> LaurentPoly:
    """Second-kind triangle generated with the -r weights (kept for the audit)."""
    return get_triangle(FamilyId.W2_VERBATIM, params).value(n, k)


def whitney2_scaled(form: int, params: Params, n: int, k: int) -> LaurentPoly:
    """Second (form=2) or third (form=3) rescaled second-kind triangle entry."""
    if form == 2:
        return get_triangle(FamilyId.W2_FORM2, params).value(n, k)
    if form == 3:
        return get_triangle(FamilyId.W2_FORM3, params).value(n, k)
    raise ValueError(f"form must be 2 or 3, got {form!r}")


def whitney1_falling(params: Params, n: int, k: int) -> LaurentPoly:
    """First-kind triangle entry: coefficient of u^k in the falling product."""
    return get_triangle(FamilyId.W1_FALLING, params).value(n, k)


def whitney1_rising(params: Params, n: int, k: int) -> LaurentPoly:
    """Rising-kind first-kind entry: coefficient of u^k in the rising product."""
    return get_triangle(FamilyId.W1_RISING, params).value(n, k)


def lah(params: Params, n: int, k: int) -> LaurentPoly:
    """Lah-type triangle entry, seeded by the single corner value 1."""
    return get_triangle(FamilyId.LAH, params).value(n, k)


_DOWLING_FAMILY = {1: FamilyId.W2, 2: FamilyId.W2_FORM2, 3: FamilyId.W2_FORM3}


def dowling(params: Params, form: int, n: int) -> LaurentPoly:
    """Row sum of the requested second-kind form (form in {1, 2, 3})."""
    family = _DOWLING_FAMILY.get(form)
    if family is None:
        raise ValueError(f"form must be 1, 2 or 3, got {form!r}")
    row = get_triangle(family, params).row(n)
    total = ZERO
    for entry in row:
        total = total + entry
    return total


def lah_row_sum(params: Params, n: int) -> LaurentPoly:
    """Sum of the Lah-type triangle row n."""
    total = ZERO
    for entry in get_triangle(FamilyId.LAH, params).row(n):
        total = total + entry
    return total


class InverseMatrix:
    """Lower-triangular inverse of a triangle, filled row by row on demand.

    Rows satisfy sum_k M[n,k] T[k,j] = delta(n,j); because both matrices are
    lower triangular with unit-monomial diagonals, the same entries also give
    the right-sided identity.
    """

    def __init__(self, source: Triangle):
        self.source = source
        self._rows: list[list[LaurentPoly]] = []

    def value(self, n: int, k: int) -> LaurentPoly:
        if n < 0 or k < 0 or k > n:
            return ZERO
        self._ensure(n)
        return self._rows[n][k]

    def __getitem__(self, nk: tuple[int, int]) -> LaurentPoly:
        return self.value(*nk)

    def _ensure(self, n: int) -> None:
        t = self.source
        while len(self._rows) <= n:
            i = len(self._rows)
            diag = t.value(i, i)
            if not diag.is_unit_monomial():
                raise NonUnitDiagonalError(
                    f"diagonal entry at n={i} is {diag}, not a unit monomial"
                )
            row = [ZERO] * (i + 1)
            row[i] = diag.unit_inverse()
            for j in range(i - 1, -1, -1):
                acc = ZERO
                for k in range(j + 1, i + 1):
                    acc = acc + row[k] * t.value(k, j)
                pivot = t.value(j, j)
                if not pivot.is_unit_monomial():
                    raise NonUnitDiagonalError(
                        f"diagonal entry at n={j} is {pivot}, not a unit monomial"
                    )
                row[j] = -(acc * pivot.unit_inverse())
            self._rows.append(row)


_INVERSES: dict[tuple[FamilyId, int, int], InverseMatrix] = {}


def invert_unit_triangular(family: FamilyId, params: Params, nmax: int) -> InverseMatrix:
    """Forward-substitution inverse of a family triangle, filled up to nmax."""
    key = (family, params.m, params.r)
    inv = _INVERSES.get(key)
    if inv is None:
        inv = _INVERSES[key] = InverseMatrix(get_triangle(family, params))
    inv._ensure(nmax)
    return inv


# -- optional on-disk row cache ------------------------------------------------


def cache_filename(family: FamilyId, params: Params) -> str:
    return f"{family.value}_m{params.m}_r{params.r}.json"


def save_rows(family: FamilyId, params: Params, nmax: int, directory: str | Path) -> Path:
    """Write rows 0..nmax of a triangle as one JSON document; returns the path."""
    tri = get_triangle(family, params)
    doc = {
        "family": family.value,
        "m": params.m,
        "r": params.r,
        "rows": [[c.to_json_dict() for c in row] for row in tri.rows(nmax)],
    }
    path = Path(directory) / cache_filename(family, params)
    path.write_text(json.dumps(doc, indent=1) + "\n")
    return path


def load_rows(family: FamilyId, params: Params, directory: str | Path) -> list[list[LaurentPoly]]:
    """Load and validate cached rows; raises CacheInvalidError on any defect."""
    path = Path(directory) / cache_filename(family, params)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheInvalidError(f"unreadable cache document {path}: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"family", "m", "r", "rows"}:
        raise CacheInvalidError(f"malformed cache document {path}")
    if doc["family"] != family.value or doc["m"] != params.m or doc["r"] != params.r:
        raise CacheInvalidError(f"cache document {path} describes a different triangle")
    rows_json = doc["rows"]
    if not isinstance(rows_json, list) or not rows_json:
        raise CacheInvalidError(f"cache document {path} has no rows")
    rows: list[list[LaurentPoly]] = []
    for n, row in enumerate(rows_json):
        if not isinstance(row, list) or len(row) != n + 1:
            raise CacheInvalidError(f"row {n} of {path} has the wrong shape")
        try:
            rows.append([LaurentPoly.from_json_dict(cell) for cell in row])
        except (ValueError, TypeError) as exc:
            raise CacheInvalidError(f"row {n} of {path} is not canonical: {exc}") from exc
    if rows[0][0] != ONE:
        raise CacheInvalidError(f"corner entry of {path} is not 1")
    return rows


def rows_for(
    family: FamilyId,
    params: Params,
    nmax: int,
    cache_dir: str | Path | None = None,
) -> list[list[LaurentPoly]]:
    """Rows 0..nmax, via the validated cache when available, else recomputed.

    A stale, short or invalid cache file is ignored and overwritten; loaded
    rows are never installed into the in-process registry.
    """
    if cache_dir is not None:
        try:
            cached = load_rows(family, params, cache_dir)
            if len(cached) >= nmax + 1:
                return cached[: nmax + 1]
        except CacheInvalidError:
            pass
    rows = get_triangle(family, params).rows(nmax)
    if cache_dir is not None:
        save_rows(family, params, nmax, cache_dir)
    return rows
