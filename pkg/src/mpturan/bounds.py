"""Closed-form bounds for the multipartite clique-free minimum-degree problem.

Throughout, ``f(n, r, t)`` denotes the largest minimum degree among
r-partite graphs with parts of size n and no clique on t + 1 vertices, and
``d(n, r, t)`` the same maximum restricted to graphs of chromatic number at
most t. Functions here evaluate the known closed forms and certified
bounds on these quantities. Everything is exact: values are Python ints,
intermediate ratios are ``fractions.Fraction``. No floats anywhere, so
razor-edge condition checks compare rationals literally.

The residue decomposition r = m*t - a with m = ceil(r/t) and
0 <= a <= t - 1 organizes the case analysis and recurs in most signatures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, NotApplicableError

__all__ = [
    "ceil_div",
    "decompose",
    "turan_sandwich",
    "exact_value_cases",
    "transversal_clique_value",
    "sliced_value",
    "apex_value",
    "residue_bounds",
    "transfer_large_r",
    "transfer_large_n",
    "aes_threshold",
    "chromatic_upper",
    "composition_bound",
    "best_known_bounds",
    "improves_on_blowup",
    "odd_t_gap",
    "Bound",
    "BoundReport",
]


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a / b for integers, b > 0."""
    return -(-a // b)


def _check_instance(n: int, r: int, t: int) -> None:
    if n < 1:
        raise DomainError(f"part size n must be >= 1, got {n}")
    if t < 2:
        raise DomainError(f"forbidden-clique parameter t must be >= 2, got {t}")
    if r <= t:
        raise DomainError(f"need more parts than colors, got r={r} <= t={t}")


def decompose(r: int, t: int) -> tuple[int, int]:
    """Residue decomposition r = m*t - a with m = ceil(r/t), 0 <= a <= t - 1."""
    if t < 2:
        raise DomainError(f"t must be >= 2, got {t}")
    if r <= t:
        raise DomainError(f"need r > t, got r={r}, t={t}")
    m = ceil_div(r, t)
    return m, m * t - r


def turan_sandwich(n: int, r: int, t: int) -> tuple[int, Fraction]:
    """Unconditional envelope: (r - ceil(r/t)) * n <= f <= (r - r/t) * n.

    The lower bound is attained by the n-fold blow-up of the balanced
    t-partition of the parts; the upper bound is the classical edge-count
    barrier and is returned as an exact rational.
    """
    _check_instance(n, r, t)
    lower = (r - ceil_div(r, t)) * n
    upper = Fraction((r * t - r) * n, t)
    return lower, upper


def exact_value_cases(n: int, r: int, t: int) -> int | None:
    """The settled cases, or None when no closed form pins the value.

    Settled: every instance with t = 2; divisible r (t | r); and
    r = -1 (mod t) for t >= 3.
    """
    _check_instance(n, r, t)
    if t == 2:
        return (r // 2) * n
    if r % t == 0:
        return (r - r // t) * n
    if r % t == t - 1:
        return (r - ceil_div(r, t)) * n
    return None


def transversal_clique_value(n: int, r: int) -> int:
    """f(n, r, r - 1): no clique meeting every part, r parts of size n.

    For even r the value is (r - 1) * n - ceil(r * n / (2 * (r - 1)));
    odd r reduces to the preceding even case plus n.
    """
    if n < 1:
        raise DomainError(f"part size n must be >= 1, got {n}")
    if r < 2:
        raise DomainError(f"need r >= 2, got {r}")
    if r % 2 == 0:
        return (r - 1) * n - ceil_div(r * n, 2 * (r - 1))
    return transversal_clique_value(n, r - 1) + n


def sliced_value(n: int, r: int, t: int) -> int:
    """Minimum degree achieved by the sliced blow-up, a certified lower bound.

    Requires m * (t - 1) <= r <= m * t - 1 for m = ceil(r/t), equivalently
    1 <= a <= m. The value is
    (r - 1) * n - (m - 1) * ceil((r - 1) * n / (m * t - 2)).
    """
    _check_instance(n, r, t)
    m, a = decompose(r, t)
    if not 1 <= a <= m:
        raise NotApplicableError(
            f"sliced blow-up needs m*(t-1) <= r <= m*t - 1, got r={r}, t={t}"
        )
    return (r - 1) * n - (m - 1) * ceil_div((r - 1) * n, m * t - 2)


def apex_value(n: int, r: int, t: int) -> int:
    """Minimum degree achieved by the apex blow-up, a certified lower bound.

    Covers the residues the sliced blow-up misses: 2 <= m < a < t. Writing
    t' = t - a + m and r' = m * (t' - 1), the value is
    (r - 1) * n - (m - 1) * ceil((r' - 1) * n / (m * t' - 2)).
    """
    _check_instance(n, r, t)
    m, a = decompose(r, t)
    if not 2 <= m < a < t:
        raise NotApplicableError(
            f"apex blow-up needs 2 <= m < a < t, got m={m}, a={a}, t={t}"
        )
    t2 = t - a + m
    r2 = m * (t2 - 1)
    return (r - 1) * n - (m - 1) * ceil_div((r2 - 1) * n, m * t2 - 2)


def transfer_large_r(r: int, t: int, a: int) -> bool:
    """Many-parts condition under which the optimum is t-chromatic.

    For r = -a (mod t), r >= a * (3t - 1) forces f(n, r, t) = d(n, r, t)
    for every n, so chromatic upper bounds transfer to f.
    """
    if t < 2 or a < 0 or a > t - 1:
        raise DomainError(f"need t >= 2 and 0 <= a <= t - 1, got t={t}, a={a}")
    return r >= a * (3 * t - 1)


def transfer_large_n(n: int, r: int, t: int) -> bool:
    """Large-parts condition under which the optimum is t-chromatic.

    With (m, a) = decompose(r, t) and 2 <= a <= min(m, t - 1), the test is

        r / (t * (3t - 1) * (m - 1)) - a / (t * (m - 1)) + (a - 1) / (mt - 2)
            >= 1 / n,

    evaluated in exact rational arithmetic. Monotone nondecreasing in n.
    """
    if n < 1:
        raise DomainError(f"part size n must be >= 1, got {n}")
    m, a = decompose(r, t)
    if not 2 <= a <= min(m, t - 1):
        raise NotApplicableError(
            f"large-parts transfer needs 2 <= a <= min(m, t-1), got m={m}, a={a}"
        )
    lhs = (
        Fraction(r, t * (3 * t - 1) * (m - 1))
        - Fraction(a, t * (m - 1))
        + Fraction(a - 1, m * t - 2)
    )
    return lhs >= Fraction(1, n)


def residue_bounds(n: int, r: int, t: int) -> tuple[int, int, bool]:
    """Two-sided bounds for the residue case r = m*t - a, 2 <= a <= min(m, t-1).

    Returns (lower, upper, applicable) where

        lower = (r-1)n - (m-1) * ceil((r-1)n / (mt-2))
        upper = (r-1)n - ceil((m-1)(r-1)n / (mt-2))

    and ``applicable`` records whether one of the chromatic-transfer
    conditions certifies the upper bound for f at this n. The lower bound
    is constructive and holds regardless.
    """
    _check_instance(n, r, t)
    if t < 3:
        raise DomainError(f"residue bounds need t >= 3, got t={t}")
    m, a = decompose(r, t)
    if not 2 <= a <= min(m, t - 1):
        raise NotApplicableError(
            f"residue bounds need 2 <= a <= min(m, t-1), got m={m}, a={a}"
        )
    lower = sliced_value(n, r, t)
    upper = (r - 1) * n - ceil_div((m - 1) * (r - 1) * n, m * t - 2)
    applicable = transfer_large_r(r, t, a) or transfer_large_n(n, r, t)
    return lower, upper, applicable


def aes_threshold(t: int, total_vertices: int) -> Fraction:
    """Degree threshold (3t - 4) * N / (3t - 1) of the chromatic threshold
    theorem for clique-free graphs, as an exact rational.

    A graph on N vertices with no clique on t + 1 vertices and minimum
    degree strictly above this value is t-colorable.
    """
    if t < 2:
        raise DomainError(f"need t >= 2, got {t}")
    if total_vertices < 1:
        raise DomainError(f"need at least one vertex, got {total_vertices}")
    return Fraction((3 * t - 4) * total_vertices, 3 * t - 1)


def chromatic_upper(n: int, r: int, t: int) -> int:
    """Upper bound on d(n, r, t), the t-chromatic relaxation of f.

    Valid whenever t does not divide r; with m = ceil(r/t) the bound is
    (r - 1) * n - ceil((m - 1) * (r - 1) * n / (m * t - 2)). It bounds f
    itself only where a transfer condition certifies f = d.
    """
    _check_instance(n, r, t)
    m, a = decompose(r, t)
    if a == 0:
        raise NotApplicableError(
            f"chromatic upper bound needs t to not divide r, got r={r}, t={t}"
        )
    return (r - 1) * n - ceil_div((m - 1) * (r - 1) * n, m * t - 2)


def composition_bound(
    n: int, r0: int, t0: int, k: int, delta0: Fraction | int
) -> int:
    """Max-degree guarantee of the block composition on r0 * k parts.

    Given a family of r0-partite graphs with no crossing independent set of
    size t0 and max degree at most delta0 * (part size), the composition on
    k blocks yields parts of size n, no crossing independent set of size
    k + t0, and max degree at most

        (r0 - 1) * ceil((delta0 + (k - 1) * r0) * n / (delta0 + k * r0 - 1)).
    """
    delta0 = Fraction(delta0)
    if not 2 <= t0 <= r0:
        raise DomainError(f"need 2 <= t0 <= r0, got t0={t0}, r0={r0}")
    if k < 2:
        raise DomainError(f"need k >= 2 blocks, got {k}")
    if n < 2:
        raise DomainError(f"need part size n >= 2, got {n}")
    if delta0 < 0:
        raise DomainError(f"delta0 must be >= 0, got {delta0}")
    numer = (delta0 + (k - 1) * r0) * n
    denom = delta0 + k * r0 - 1
    return (r0 - 1) * math.ceil(numer / denom)


def improves_on_blowup(n: int, r: int, t: int) -> bool:
    """Whether the sliced blow-up strictly beats the balanced blow-up.

    Guaranteed true once n >= (m*t - 2) / (a - 1); at small n the two can
    coincide. Requires the residue range 2 <= a <= min(m, t - 1).
    """
    _check_instance(n, r, t)
    m, a = decompose(r, t)
    if not 2 <= a <= min(m, t - 1):
        raise NotApplicableError(
            f"comparison needs 2 <= a <= min(m, t-1), got m={m}, a={a}"
        )
    return sliced_value(n, r, t) > (r - ceil_div(r, t)) * n


def odd_t_gap(n: int, t: int) -> bool:
    """Whether f(n, t+1, t) provably exceeds its t-chromatic relaxation.

    For odd t the transversal-clique value gives f(n, t+1, t) exactly,
    while the chromatic upper bound caps d(n, t+1, t); a strict gap shows
    the clique-free optimum on t + 1 parts is not t-chromatic at this n.
    """
    if t < 3 or t % 2 == 0:
        raise DomainError(f"gap check is for odd t >= 3, got {t}")
    return transversal_clique_value(n, t + 1) > chromatic_upper(n, t + 1, t)


# -- aggregation -------------------------------------------------------


@dataclass(frozen=True)
class Bound:
    """One bound with its provenance tag.

    ``conditions_met`` is False for values recorded for explanation only,
    such as a chromatic upper bound whose transfer condition fails at this
    n. Only condition-satisfied bounds enter the best-known envelope.
    """

    value: int
    source: str
    conditions_met: bool = True


@dataclass(frozen=True)
class BoundReport:
    """Everything known about one instance (n, r, t).

    ``status`` is "exact" when the best certified lower and upper bounds
    coincide and "bounded" otherwise; "open" is reserved for instances no
    recorded statement reaches, which does not currently occur. Dominated
    bounds are kept so callers can explain where each number comes from.
    """

    n: int
    r: int
    t: int
    lower_bounds: tuple[Bound, ...]
    upper_bounds: tuple[Bound, ...]
    exact: int | None
    status: str
    notes: tuple[str, ...] = field(default=())

    @property
    def best_lower(self) -> int:
        return max(b.value for b in self.lower_bounds if b.conditions_met)

    @property
    def best_upper(self) -> int:
        return min(b.value for b in self.upper_bounds if b.conditions_met)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "t": self.t,
            "status": self.status,
            "exact": self.exact,
            "lower": self.best_lower,
            "upper": self.best_upper,
            "lower_bounds": [
                {"value": b.value, "source": b.source, "conditions_met": b.conditions_met}
                for b in self.lower_bounds
            ],
            "upper_bounds": [
                {"value": b.value, "source": b.source, "conditions_met": b.conditions_met}
                for b in self.upper_bounds
            ],
            "notes": list(self.notes),
        }


_OPEN_CASE_NOTE = (
    "f(n, 7, 3) is open: no recorded statement closes the gap. Unproven "
    "estimates place the value between 30n/7 and roughly 4.31n; only the "
    "interval reported here is machine-checked."
)


def best_known_bounds(n: int, r: int, t: int) -> BoundReport:
    """Aggregate every applicable bound on f(n, r, t) with provenance.

    Lower bounds are all constructive and unconditional. The chromatic
    upper bound is listed always but counts toward the envelope only when
    a transfer condition certifies f = d at this instance.
    """
    _check_instance(n, r, t)
    m, a = decompose(r, t)
    lowers: list[Bound] = []
    uppers: list[Bound] = []

    exact_case = exact_value_cases(n, r, t)
    if exact_case is not None:
        if t == 2:
            tag = "pair-split"
        elif a == 0:
            tag = "divisible"
        else:
            tag = "near-divisible"
        lowers.append(Bound(exact_case, tag))
        uppers.append(Bound(exact_case, tag))

    sandwich_lower, sandwich_upper = turan_sandwich(n, r, t)
    lowers.append(Bound(sandwich_lower, "balanced-blowup"))
    uppers.append(Bound(math.floor(sandwich_upper), "edge-count"))

    if 1 <= a <= min(m, t - 1):
        lowers.append(Bound(sliced_value(n, r, t), "sliced-blowup"))
    if 2 <= m < a < t:
        lowers.append(Bound(apex_value(n, r, t), "apex-blowup"))

    if a >= 1:
        transfers = transfer_large_r(r, t, a)
        if not transfers and t >= 3 and 2 <= a <= min(m, t - 1):
            transfers = transfer_large_n(n, r, t)
        uppers.append(
            Bound(chromatic_upper(n, r, t), "chromatic-transfer", transfers)
        )

    best_lower = max(b.value for b in lowers if b.conditions_met)
    best_upper = min(b.value for b in uppers if b.conditions_met)
    exact = best_lower if best_lower == best_upper else None
    status = "exact" if exact is not None else "bounded"
    notes: tuple[str, ...] = ((_OPEN_CASE_NOTE,) if (r, t) == (7, 3) else ())
    return BoundReport(
        n=n,
        r=r,
        t=t,
        lower_bounds=tuple(lowers),
        upper_bounds=tuple(uppers),
        exact=exact,
        status=status,
        notes=notes,
    )
