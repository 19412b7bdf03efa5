"""First homology of the surgered manifolds and torsion Spin^c bookkeeping.

A Seifert fibration M(g, n; (alpha_i, beta_i)) has a star-shaped surgery
presentation: a central unknot framed n, one chain per exceptional fiber
with framings given by the negative continued fraction of -alpha_i/beta_i.
First homology is Z^{2g} plus the cokernel of the linking matrix, computed
by Smith normal form with generator tracking so that distinguished classes
keep exact coordinates.

The tracked class mu is the meridian of the terminal vertex of the first
chain: the fiber class whose order controls how many torsion Spin^c
structures the fibration supports.  For M(g, 2g; (alpha, 1)) that order
is 2g*alpha + 1, and a Spin^c structure is pinned down by its offset j in
t = t_can + j * PD(mu).  First Chern classes are multiples of PD(mu);
the canonical structure carries c1(t_can) = (alpha + 2) * PD(mu), which
makes c1 of the offset-j structure (alpha + 2 + 2j) * PD(mu) and in
particular c1 = r * PD(mu) at offset (r - alpha - 2)/2.

distinct_witness turns that arithmetic into a certificate: it searches
for alpha such that `count` admissible rotation numbers yield c1 classes
of pairwise distinct orders, which forces the corresponding contact
structures apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, count as icount

from .contfrac import neg_cf_expand
from .errors import ConditionViolation, SearchExhausted
from .intmat import determinant, smith_normal_form
from .seifert import SeifertInvariants

__all__ = [
    "IntegralPresentation",
    "FirstHomology",
    "SpinCClass",
    "Witness",
    "presentation",
    "homology",
    "mu_order",
    "c1_class",
    "spinc_offset",
    "distinct_witness",
]


@dataclass(frozen=True)
class IntegralPresentation:
    """Linking matrix of the star-shaped surgery presentation.

    Vertex 0 is the central unknot (framing n); each exceptional fiber
    contributes a chain, central vertex joined to the chain's first
    entry.  mu_index is the column of the tracked meridian: the terminal
    vertex of the first chain, or the central vertex when there is none.
    free_rank carries the 2g surface summand of H1 alongside the matrix.
    """

    matrix: tuple[tuple[int, ...], ...]
    mu_index: int
    free_rank: int


@dataclass(frozen=True)
class FirstHomology:
    """H1 = Z^free_rank + sum Z/d for d in torsion (d_1 | d_2 | ...).

    class_map[j] gives the torsion coordinates of the j-th meridian
    generator, free_map[j] its coordinates on cokernel copies of Z
    (present only when the linking matrix is singular).
    """

    free_rank: int
    torsion: tuple[int, ...]
    class_map: tuple[tuple[int, ...], ...]
    free_map: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SpinCClass:
    """A torsion Spin^c structure written relative to the canonical one.

    offset is the coefficient j in t = t_can + j * PD(mu), reduced modulo
    the order of mu; c1_coefficient is c1(t) as a multiple of PD(mu) when
    that multiple is pinned down (central framing n = 2g), None otherwise.
    """

    basepoint: str
    offset: int
    modulus: int
    c1_coefficient: int | None

    def __post_init__(self) -> None:
        if self.basepoint not in ("canonical", "contact"):
            raise ValueError("basepoint must be 'canonical' or 'contact'")
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")

    @property
    def c1_order(self) -> int:
        """Order of c1 in the cyclic group generated by PD(mu)."""
        if self.c1_coefficient is None:
            raise ConditionViolation("c1 is not pinned down for this structure")
        return self.modulus // math.gcd(self.c1_coefficient, self.modulus)


@dataclass(frozen=True)
class Witness:
    """Parameters certifying `len(rotations)` pairwise distinct structures."""

    alpha: int
    rotations: tuple[int, ...]
    orders: tuple[int, ...]


def presentation(inv: SeifertInvariants) -> IntegralPresentation:
    """Star-shaped linking matrix of M(g, n; pairs).

    Pairs must satisfy alpha >= beta >= 1 (normal form, plus the boundary
    case alpha = beta = 1 whose chain is a single (-1)-framed vertex).
    """
    for alpha, beta in inv.pairs:
        if not (alpha >= beta >= 1):
            raise ConditionViolation(
                f"pair ({alpha},{beta}) is not presentable; need alpha >= beta >= 1"
            )
    legs = [
        list(neg_cf_expand(Fraction(-alpha, beta))) for alpha, beta in inv.pairs
    ]
    size = 1 + sum(len(leg) for leg in legs)
    m = [[0] * size for _ in range(size)]
    m[0][0] = inv.n
    index = 1
    first_leg_end = 0
    for leg_number, leg in enumerate(legs):
        previous = 0  # chains hang off the central vertex
        for framing in leg:
            m[index][index] = framing
            m[previous][index] = 1
            m[index][previous] = 1
            previous = index
            index += 1
        if leg_number == 0:
            first_leg_end = previous
    return IntegralPresentation(
        matrix=tuple(tuple(row) for row in m),
        mu_index=first_leg_end,
        free_rank=2 * inv.g,
    )


def homology(p: IntegralPresentation) -> FirstHomology:
    """Cokernel of the linking matrix with tracked meridian generators.

    With D = S A T, the quotient Z^n / A Z^n is Z^n / D Z^n under x -> Sx,
    so generator j lands at column j of S, read modulo the diagonal.
    """
    snf = smith_normal_form(p.matrix)
    size = len(p.matrix)
    torsion_rows = [i for i, d in enumerate(snf.diagonal) if d > 1]
    free_rows = [i for i, d in enumerate(snf.diagonal) if d == 0]
    torsion = tuple(snf.diagonal[i] for i in torsion_rows)
    class_map = tuple(
        tuple(snf.left[i][j] % snf.diagonal[i] for i in torsion_rows)
        for j in range(size)
    )
    free_map = tuple(
        tuple(snf.left[i][j] for i in free_rows) for j in range(size)
    )
    return FirstHomology(
        free_rank=p.free_rank + len(free_rows),
        torsion=torsion,
        class_map=class_map,
        free_map=free_map,
    )


def mu_order(inv: SeifertInvariants) -> int:
    """Order of the tracked fiber meridian in H1.

    Equals n*alpha + 1 on the single-fiber family M(g, n; (alpha, 1)); in
    particular 2g*alpha + 1 when n = 2g.  Raises if the class has a free
    component (possible only for singular linking matrices, which the
    n >= 2g family never produces).
    """
    p = presentation(inv)
    h = homology(p)
    if any(c != 0 for c in h.free_map[p.mu_index]):
        raise ConditionViolation("meridian class has infinite order")
    order = 1
    for coordinate, d in zip(h.class_map[p.mu_index], h.torsion):
        order = math.lcm(order, d // math.gcd(coordinate, d))
    return order


def _require_anchor_family(inv: SeifertInvariants) -> tuple[int, int, int]:
    if len(inv.pairs) != 1 or inv.pairs[0][1] != 1:
        raise ConditionViolation("c1 arithmetic needs a single (alpha, 1) fiber")
    if inv.n != 2 * inv.g or inv.g < 1:
        raise ConditionViolation("c1 arithmetic needs central framing n = 2g, g >= 1")
    return inv.g, inv.n, inv.pairs[0][0]


def c1_class(inv: SeifertInvariants, r: int) -> SpinCClass:
    """The Spin^c structure with c1 = r * PD(mu) on M(g, 2g; (alpha, 1)).

    Admissible r are congruent to alpha mod 2 with -alpha <= r <= alpha.
    Its offset from the canonical structure is (r - alpha - 2)/2 and the
    order of c1 is (2g*alpha + 1) / gcd(r, 2g*alpha + 1).
    """
    g, _, alpha = _require_anchor_family(inv)
    if (r - alpha) % 2 != 0:
        raise ConditionViolation(f"r = {r} must have the parity of alpha = {alpha}")
    if not (-alpha <= r <= alpha):
        raise ConditionViolation(f"r = {r} outside [-{alpha}, {alpha}]")
    modulus = 2 * g * alpha + 1
    return SpinCClass(
        basepoint="contact",
        offset=((r - alpha - 2) // 2) % modulus,
        modulus=modulus,
        c1_coefficient=r % modulus,
    )


def spinc_offset(g: int, n: int, alpha: int, sign: int, r: int) -> SpinCClass:
    """Offset of t_{xi^sign_r} from the canonical Spin^c structure.

    offset = (r - alpha - 2)/2 for sign +1 and the same shifted by
    -alpha*(n - 2g) for sign -1, reduced modulo n*alpha + 1.  The
    admissible ranges are -alpha < r <= alpha (sign +1) and
    -alpha <= r < alpha (sign -1), with r = alpha (mod 2).  c1 is pinned
    down only at n = 2g, where it equals (alpha + 2 + 2*offset) * PD(mu),
    that is r * PD(mu).
    """
    check_admissible(g, n, alpha, sign, r)
    modulus = n * alpha + 1
    shift = 0 if sign == 1 else 2 * alpha * (n - 2 * g)
    offset = ((r - alpha - 2 - shift) // 2) % modulus
    c1 = (alpha + 2 + (r - alpha - 2 - shift)) % modulus if n == 2 * g else None
    return SpinCClass(
        basepoint="contact",
        offset=offset,
        modulus=modulus,
        c1_coefficient=c1,
    )


def check_admissible(g: int, n: int, alpha: int, sign: int, r: int) -> None:
    """Validate the (g, n, alpha, sign, r) range shared across the family.

    Needs g >= 1, n >= 2g, alpha >= 1, r = alpha (mod 2), and
    -alpha < r <= alpha for sign +1, -alpha <= r < alpha for sign -1.
    """
    if g < 1:
        raise ConditionViolation(f"need g >= 1, got {g}")
    if n < 2 * g:
        raise ConditionViolation(f"need n >= 2g, got n={n}, g={g}")
    if alpha < 1:
        raise ConditionViolation(f"need alpha >= 1, got {alpha}")
    if sign not in (1, -1):
        raise ConditionViolation(f"sign must be +1 or -1, got {sign}")
    if (r - alpha) % 2 != 0:
        raise ConditionViolation(f"r = {r} must have the parity of alpha = {alpha}")
    if sign == 1 and not (-alpha < r <= alpha):
        raise ConditionViolation(f"sign +1 needs -alpha < r <= alpha, got r = {r}")
    if sign == -1 and not (-alpha <= r < alpha):
        raise ConditionViolation(f"sign -1 needs -alpha <= r < alpha, got r = {r}")


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def distinct_witness(g: int, count: int, max_base: int = 10000) -> Witness:
    """Find alpha and rotation numbers with pairwise distinct c1 orders.

    The recipe: choose bases a_1 < ... < a_count with each
    p_i = 2g*a_i + 1 prime, set a = (prod p_i - 1)/(2g) (always integral
    since each p_i = 1 mod 2g), and let alpha = a when a is odd, else
    a*(2g+1) + 1, which keeps prod p_i dividing 2g*alpha + 1.  The
    rotations are the p_i themselves, so the c1 orders
    (2g*alpha + 1)/p_i are pairwise distinct.

    A candidate is valid only if every p_i <= alpha (rotations must be
    admissible); invalid candidates are skipped and the search continues.
    Base tuples are enumerated by increasing maximum element, then
    lexicographically, so the result is canonical.  Raises
    SearchExhausted if no valid tuple has maximum <= max_base.
    """
    if g < 1 or count < 1:
        raise ConditionViolation("need g >= 1 and count >= 1")
    for top in icount(count):
        if top > max_base:
            raise SearchExhausted(
                f"no valid witness with base elements <= {max_base}"
            )
        p_top = 2 * g * top + 1
        if not _is_prime(p_top):
            continue
        for rest in combinations(range(1, top), count - 1):
            primes = [2 * g * a + 1 for a in (*rest, top)]
            if not all(_is_prime(p) for p in primes[:-1]):
                continue
            product = math.prod(primes)
            a = (product - 1) // (2 * g)
            alpha = a if a % 2 == 1 else a * (2 * g + 1) + 1
            if any(p > alpha for p in primes):
                continue
            modulus = 2 * g * alpha + 1
            orders = tuple(modulus // p for p in primes)
            witness = Witness(alpha=alpha, rotations=tuple(primes), orders=orders)
            _validate_witness(g, witness)
            return witness


def _validate_witness(g: int, witness: Witness) -> None:
    inv = SeifertInvariants(g, 2 * g, ((witness.alpha, 1),))
    seen = set()
    for rotation, order in zip(witness.rotations, witness.orders):
        cls = c1_class(inv, rotation)
        if cls.c1_order != order:
            raise AssertionError("witness order disagrees with the c1 oracle")
        seen.add(cls.c1_order)
    if len(seen) != len(witness.rotations):
        raise AssertionError("witness orders are not pairwise distinct")
