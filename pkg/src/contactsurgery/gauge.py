"""Reducibility criteria, eta-type correction terms, and d3 certificates.

Everything here concerns the family M(g, n; (alpha, 1)) with n >= 2g >= 2
and a contact structure xi^sign_r labelled by an admissible rotation
parameter r (see `homology.check_admissible`).

Two independent formulas compute the reducible-solution correction term
omega_red: a long form assembled from Dedekind-type sums S(1, alpha),
S_rho, F_rho and the fractional part data (l, rho, gamma), and a closed
form in (g, n, alpha, r) alone.  Their exact agreement on the whole
admissible grid is the central self-check of the package.  The d3
invariants of the contact structure and of the canonical plane field of
its Spin^c structure come out of the two routes respectively, and their
difference, always exactly 2g + 1, certifies that the contact structure
is not homotopic to that canonical field: the fillability obstruction.

moy_check implements the arithmetic criteria on orbifold line bundle
degrees: the moduli space contains only reducible solutions when no
degree in the coset k/alpha + (n + 1/alpha) Z lands in [0, deg K] away
from deg K / 2, and all Dirac kernels vanish when alpha is even or
deg K / 2 avoids the coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConditionViolation
from .homology import check_admissible

__all__ = [
    "DedekindContext",
    "MoyVerdict",
    "D3Invariant",
    "dedekind_context",
    "omega_red_long",
    "omega_red_closed",
    "d3_contact",
    "d3_canonical",
    "moy_check",
    "degree_representative",
    "fillability_verdict",
]


@dataclass(frozen=True)
class DedekindContext:
    """The exact rational ingredients of the long omega_red formula."""

    l: Fraction
    rho: Fraction
    gamma: Fraction
    S: Fraction
    S_rho: Fraction
    F_rho: Fraction


@dataclass(frozen=True)
class MoyVerdict:
    """Outcome of the reducibility and Dirac-kernel criteria.

    witness_degrees lists the members of the degree coset that land in
    the window [0, deg K]; reducibles_only holds exactly when none of
    them differs from deg K / 2.
    """

    reducibles_only: bool
    dirac_kernels_trivial: bool
    witness_degrees: tuple[Fraction, ...]


@dataclass(frozen=True)
class D3Invariant:
    """A d3 invariant value tagged by which plane field it belongs to."""

    value: Fraction
    of: str  # "contact" or "canonical"


def dedekind_context(g: int, n: int, alpha: int, sign: int, r: int) -> DedekindContext:
    """Assemble (l, rho, gamma, S, S_rho, F_rho) for an admissible input.

    l = n + 1/alpha, rho = (alpha*(n -+ (n-2g)) - r + 1) / (2n*alpha + 2)
    (upper sign for sign = +1), gamma = (r + alpha - 2)/2,
    S = (alpha^2 + 2)/(12 alpha) - 1/4, F_rho = (gamma + rho)/alpha, and
    S_rho = (alpha^2 - 3 alpha (1 + 2 gamma) + 2 (1 + 3 gamma + 3 gamma^2))
    / (12 alpha).  rho always lands strictly inside (0, 1) on the
    admissible range; that is asserted rather than extrapolated.
    """
    check_admissible(g, n, alpha, sign, r)
    l = n + Fraction(1, alpha)
    rho = Fraction(alpha * (n - sign * (n - 2 * g)) - r + 1, 2 * n * alpha + 2)
    if not (0 < rho < 1):
        raise ConditionViolation(f"rho = {rho} outside (0, 1)")
    gamma = Fraction(r + alpha - 2, 2)
    s = Fraction(alpha * alpha + 2, 12 * alpha) - Fraction(1, 4)
    f_rho = (gamma + rho) / alpha
    s_rho = (
        alpha * alpha - 3 * alpha * (1 + 2 * gamma) + 2 * (1 + 3 * gamma + 3 * gamma * gamma)
    ) / Fraction(12 * alpha)
    return DedekindContext(l=l, rho=rho, gamma=gamma, S=s, S_rho=s_rho, F_rho=f_rho)


def omega_red_long(g: int, n: int, alpha: int, sign: int, r: int) -> Fraction:
    """The correction term via the Dedekind-sum route.

    (2g-1)/2 - (l-1)/4 + l rho (1-rho) - rho + (1-alpha)/(2 alpha) (1-2 rho)
    + S + F_rho + 2 S_rho, with every ingredient from dedekind_context.
    The -(l-1)/4 term uses sign(l) = 1, valid since l = n + 1/alpha > 0.
    """
    c = dedekind_context(g, n, alpha, sign, r)
    return (
        Fraction(2 * g - 1, 2)
        - (c.l - 1) / 4
        + c.l * c.rho * (1 - c.rho)
        - c.rho
        + Fraction(1 - alpha, 2 * alpha) * (1 - 2 * c.rho)
        + c.S
        + c.F_rho
        + 2 * c.S_rho
    )


def omega_red_closed(g: int, n: int, alpha: int, sign: int, r: int) -> Fraction:
    """The correction term in closed form.

    -((n-2g)^2 alpha - r^2 n + sign * 2 (n-2g) r) / (4 (n alpha + 1))
    + (2g-1)/2; must agree with omega_red_long exactly.
    """
    check_admissible(g, n, alpha, sign, r)
    numerator = (n - 2 * g) ** 2 * alpha - r * r * n + sign * 2 * (n - 2 * g) * r
    return -Fraction(numerator, 4 * (n * alpha + 1)) + Fraction(2 * g - 1, 2)


def d3_contact(g: int, n: int, alpha: int, sign: int, r: int) -> D3Invariant:
    """d3 of the contact structure xi^sign_r: -omega_red_closed + (2g-1)."""
    value = -omega_red_closed(g, n, alpha, sign, r) + (2 * g - 1)
    return D3Invariant(value=value, of="contact")


def d3_canonical(g: int, n: int, alpha: int, sign: int, r: int) -> D3Invariant:
    """d3 of the canonical plane field of t_{xi^sign_r}: -omega_red - 2.

    Deliberately computed through the long (Dedekind-sum) form so that
    the downstream gap check exercises the closed-form identity.
    """
    value = -omega_red_long(g, n, alpha, sign, r) - 2
    return D3Invariant(value=value, of="canonical")


def _canonical_degree(g: int, alpha: int) -> Fraction:
    # deg K for one (alpha, 1) fiber: 2g - 2 + (alpha-1)/alpha
    return Fraction((2 * g - 1) * alpha - 1, alpha)


def degree_representative(g: int, n: int, alpha: int, k: int) -> Fraction:
    """Canonical representative of the degree coset k/alpha + (n + 1/alpha) Z.

    The representative lands in the half-open interval
    (deg K, deg K + n + 1/alpha]; for central framing n = 2g it always
    satisfies the sharper sandwich deg K < representative < 2g + 1/alpha.
    """
    if g < 1 or n < 2 * g or alpha < 1:
        raise ConditionViolation("need g >= 1, n >= 2g, alpha >= 1")
    deg_k = _canonical_degree(g, alpha)
    step = n + Fraction(1, alpha)
    base = Fraction(k, alpha)
    # largest representative <= deg_k + step
    shift = (deg_k + step - base) / step
    return base + (shift.numerator // shift.denominator) * step


def moy_check(g: int, n: int, alpha: int, k: int) -> MoyVerdict:
    """Reducibility and Dirac-kernel criteria at Spin^c offset k.

    The candidate degrees are D = {k/alpha + j (n + 1/alpha) : j integer}.
    Irreducible solutions need a degree in [0, deg K] \\ {deg K / 2}, so
    reducibles_only holds when D meets the window at most in deg K / 2;
    Dirac operators have trivial kernels when alpha is even or when
    deg K / 2 is not in D at all.  Both are coset conditions, so the
    verdict does not depend on the representative chosen for k.
    """
    representative = degree_representative(g, n, alpha, k)
    deg_k = _canonical_degree(g, alpha)
    step = n + Fraction(1, alpha)
    # the window [0, deg K] is shorter than the coset step, so it holds
    # at most one coset member: the one just below the representative
    candidate = representative - step
    in_window = [candidate] if 0 <= candidate <= deg_k else []
    half = deg_k / 2
    reducibles_only = all(x == half for x in in_window)
    kernels_trivial = alpha % 2 == 0 or not _in_coset(half, Fraction(k, alpha), step)
    return MoyVerdict(
        reducibles_only=reducibles_only,
        dirac_kernels_trivial=kernels_trivial,
        witness_degrees=tuple(in_window),
    )


def _in_coset(x: Fraction, base: Fraction, step: Fraction) -> bool:
    return ((x - base) / step).denominator == 1


def fillability_verdict(g: int, n: int, alpha: int, sign: int, r: int) -> dict:
    """Tightness/fillability verdict for xi^sign_r with its d3 certificate.

    The gap d3_contact - d3_canonical equals 2g + 1 on the whole
    admissible family; any nonzero gap rules out a filling whose
    canonical field would be homotopic to the contact structure, so
    fillable is 'no (certified)' whenever the gap is nonzero.  Tightness
    is established upstream for the family and reported as metadata.
    """
    contact = d3_contact(g, n, alpha, sign, r)
    canonical = d3_canonical(g, n, alpha, sign, r)
    gap = contact.value - canonical.value
    return {
        "tight": True,
        "d3_contact": contact.value,
        "d3_canonical": canonical.value,
        "gap": gap,
        "gap_law": gap == 2 * g + 1,
        "fillable": "no (certified)" if gap != 0 else "conjectured no",
    }
