"""Exhaustive path generation, weight polynomials and their closed forms."""
from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

from . import _kernels
from .errors import ArithmeticOverflow, LimitExceeded
from .path import Lattice, Path, Step, Word
from .weighting import bibanded_monomial, format_ab, format_m, peak_monomial

DEFAULT_MAX_N = 14
# below this many paths, array setup costs more than walking the paths
SMALL_ENUMERATION = 256
INT64_MAX = 2**63 - 1


class Scheme(enum.Enum):
    BIBANDED = "bibanded"
    PEAKS = "peaks"

    @classmethod
    def parse(cls, value: str | Scheme) -> Scheme:
        if isinstance(value, Scheme):
            return value
        key = value.lower().replace("-", "").replace("_", "")
        aliases = {"bibanded": cls.BIBANDED, "peaks": cls.PEAKS,
                   "peak": cls.PEAKS, "peakcounting": cls.PEAKS}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown scheme {value!r}") from None


def max_n() -> int:
    """Enumeration limit, overridable through ``PATHFORGE_MAX_N``."""
    raw = os.environ.get("PATHFORGE_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _guard(n: int, limit: int | None) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    limit = max_n() if limit is None else limit
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the limit {limit}")


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def path_count(n: int, lattice: Lattice) -> int:
    return catalan(n) if lattice is Lattice.DYCK else comb(2 * n, n)


def narayana(n: int, v: int) -> int:
    if not 0 <= v <= n:
        raise ValueError(f"need 0 <= v <= n, got n={n}, v={v}")
    num = comb(n, v) * comb(n - 1, v)
    q, r = divmod(num, v + 1)
    assert r == 0
    return q


def bilateral_coeff(n: int, v: int) -> int:
    if not 0 <= v <= n:
        raise ValueError(f"need 0 <= v <= n, got n={n}, v={v}")
    return comb(n, v) ** 2


def enumerate_paths(n: int, lattice: Lattice | str = Lattice.BILATERAL,
                    limit: int | None = None) -> Iterator[Path]:
    """Yield every path of length ``2n`` in canonical order (U < D).

    Dyck enumeration prunes a prefix as soon as it would dip below the axis.
    """
    lattice = Lattice.parse(lattice)
    _guard(n, limit)
    dyck = lattice is Lattice.DYCK
    t = 2 * n
    steps: list[Step] = []
    hs = [0]

    def rec(ups: int) -> Iterator[Path]:
        depth = len(steps)
        if depth == t:
            yield Path(Word(tuple(steps)), tuple(hs))
            return
        h = hs[-1]
        if ups < n:
            steps.append(Step.UP)
            hs.append(h + 1)
            yield from rec(ups + 1)
            steps.pop()
            hs.pop()
        if depth - ups < n and (not dyck or h > 0):
            steps.append(Step.DOWN)
            hs.append(h - 1)
            yield from rec(ups)
            steps.pop()
            hs.pop()

    yield from rec(0)


@dataclass(frozen=True)
class WeightPolynomial:
    """Exact coefficients keyed by ``v``.

    ``v`` stands for ``a^(2n-2v) b^(2v)`` under the bi-banded scheme and for
    ``m^(v+1)`` under peak counting.  Zero coefficients are not stored.
    """

    scheme: Scheme
    lattice: Lattice
    n: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {int(k): int(c) for k, c in sorted(self.coeffs.items()) if c}
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, v: int) -> int:
        return self.coeffs.get(v, 0)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def same_coefficients(self, other: WeightPolynomial) -> bool:
        return self.n == other.n and self.coeffs == other.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightPolynomial):
            return NotImplemented
        return (self.scheme, self.lattice, self.n, self.coeffs) == (
            other.scheme, other.lattice, other.n, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.scheme, self.lattice, self.n, tuple(self.coeffs.items())))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lattice": self.lattice.value,
            "scheme": self.scheme.value,
            "coeffs": {str(k): c for k, c in self.coeffs.items()},
        }

    def to_text(self) -> str:
        """Human form: descending powers of ``a`` or of ``m``."""
        if self.scheme is Scheme.BIBANDED:
            keys = sorted(self.coeffs)
            terms = [(self.coeffs[v], format_ab(2 * self.n - 2 * v, 2 * v)) for v in keys]
        else:
            keys = sorted(self.coeffs, reverse=True)
            terms = [(self.coeffs[v], format_m(v + 1)) for v in keys]
        if not terms:
            return "0"
        return " + ".join(mono if c == 1 else f"{c}{mono}" for c, mono in terms)

    def __str__(self) -> str:
        return self.to_text()


def monomial_key(path: Path, scheme: Scheme) -> int:
    if scheme is Scheme.BIBANDED:
        return bibanded_monomial(path).exp_b // 2
    return peak_monomial(path).exp_m - 1


def weight_polynomial(n: int, lattice: Lattice | str, scheme: Scheme | str,
                      backend: str | None = None,
                      limit: int | None = None) -> WeightPolynomial:
    """Sum the monomials of every path of length ``2n`` on ``lattice``.

    ``backend`` is ``"python"`` (per-path objects), ``"numba"`` or
    ``"numpy"`` (packed kernels).  By default small cases walk the paths and
    larger ones use the kernel picked at import time.
    """
    lattice = Lattice.parse(lattice)
    scheme = Scheme.parse(scheme)
    _guard(n, limit)
    if backend is None and path_count(n, lattice) <= SMALL_ENUMERATION:
        backend = "python"
    if backend == "python":
        coeffs: dict[int, int] = {}
        for p in enumerate_paths(n, lattice, limit=n):
            k = monomial_key(p, scheme)
            coeffs[k] = coeffs.get(k, 0) + 1
        return WeightPolynomial(scheme, lattice, n, coeffs)

    if n > _kernels.MAX_PACKED_N or path_count(n, lattice) > INT64_MAX:
        raise ArithmeticOverflow(
            f"n = {n} exceeds the 64-bit packed-word kernels; use backend='python'"
        )
    bib, peaks, total = _kernels.weight_counts(n, lattice is Lattice.DYCK, backend)
    if scheme is Scheme.BIBANDED:
        coeffs = {v: int(c) for v, c in enumerate(bib)}
    else:
        coeffs = {k - 1: int(c) for k, c in enumerate(peaks) if k >= 1}
        if peaks[0]:
            raise AssertionError("a path with no peaks was counted")
    result = WeightPolynomial(scheme, lattice, n, coeffs)
    if result.total() != int(total):
        raise ArithmeticOverflow("accumulated counts disagree with the path total")
    return result


def closed_form_polynomial(n: int, lattice: Lattice | str, scheme: Scheme | str,
                           stated_range: bool = False) -> WeightPolynomial:
    """Closed-form coefficients.

    Dyck paths use Narayana numbers for ``v = 0 .. n-1``.  Bilateral paths
    use ``C(n, v)^2`` for ``v = 0 .. n``; ``stated_range=True`` stops at
    ``n - 1`` instead, which omits the all-``b`` path ``DUDU...DU``.
    """
    lattice = Lattice.parse(lattice)
    scheme = Scheme.parse(scheme)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if lattice is Lattice.DYCK:
        coeffs = {v: narayana(n, v) for v in range(n)}
    else:
        top = n - 1 if stated_range else n
        coeffs = {v: bilateral_coeff(n, v) for v in range(top + 1)}
    return WeightPolynomial(scheme, lattice, n, coeffs)


@dataclass
class VerifyReport:
    n: int
    lattice: Lattice
    scheme: Scheme
    enumerated: WeightPolynomial | None
    closed_form: WeightPolynomial | None
    match: bool
    path_count: int
    elapsed: float
    stated_closed_form: WeightPolynomial | None = None
    stated_match: bool | None = None
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "lattice": self.lattice.value,
            "scheme": self.scheme.value,
            "match": self.match,
            "path_count": self.path_count,
            "elapsed": round(self.elapsed, 6),
            "enumerated": self.enumerated.to_json()["coeffs"] if self.enumerated else None,
            "closed_form": self.closed_form.to_json()["coeffs"] if self.closed_form else None,
        }
        if self.stated_closed_form is not None:
            out["stated_closed_form"] = self.stated_closed_form.to_json()["coeffs"]
            out["stated_match"] = self.stated_match
        if self.error is not None:
            out["error"] = self.error
        return out


def verify(n_values: Iterable[int], lattice: Lattice | str, scheme: Scheme | str,
           backend: str | None = None, limit: int | None = None) -> list[VerifyReport]:
    """Compare enumerated and closed-form polynomials for every ``n``.

    Errors for one ``n`` are recorded in its report; the sweep continues.
    """
    lattice = Lattice.parse(lattice)
    scheme = Scheme.parse(scheme)
    reports = []
    for n in n_values:
        start = time.perf_counter()
        try:
            enumerated = weight_polynomial(n, lattice, scheme, backend=backend, limit=limit)
        except (LimitExceeded, ArithmeticOverflow) as exc:
            reports.append(VerifyReport(n, lattice, scheme, None, None, False, 0,
                                        time.perf_counter() - start,
                                        error=f"{type(exc).__name__}: {exc}"))
            continue
        elapsed = time.perf_counter() - start
        closed = closed_form_polynomial(n, lattice, scheme)
        report = VerifyReport(n, lattice, scheme, enumerated, closed,
                              enumerated.same_coefficients(closed),
                              enumerated.total(), elapsed)
        stated = closed_form_polynomial(n, lattice, scheme, stated_range=True)
        if stated != closed:
            report.stated_closed_form = stated
            report.stated_match = enumerated.same_coefficients(stated)
        reports.append(report)
    return reports
