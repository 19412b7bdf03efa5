"""Negative definite lattices and diagonal embedding obstructions.

lambda_q builds the rank-2q lattice spanned by a path of (-2)-vectors
v_1, ..., v_{2q-1} (consecutive products 1) and one extra vector w with
w.w = 1 - q attached to v_q; it is the intersection lattice whose
non-embeddability into every diagonal lattice D_m = (Z^m, -identity)
obstructs negative definite fillings.

embeds_in_diagonal decides that embeddability by certified exhaustive
search.  Writing each basis vector as an integer coordinate row V_i with
gram_ij = -<V_i, V_j> (Euclidean pairing), a vector of square -s has
coordinates bounded by floor(sqrt(s)) and support at most s, so
m = sum |gram_ii| columns suffice for any embedding that exists at all.
Columns of D_m can be permuted and negated freely; the search collapses
that symmetry by demanding canonical assignments: within each class of
columns that share the same history (the column of values already placed
above), coordinates must not increase, and on columns with all-zero
history they must be nonnegative.  Every embedding is column-equivalent
to exactly one canonical assignment, so an empty search certifies
non-embeddability for every m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ConditionViolation,
    DegenerateLattice,
    NoValidD,
    NotNegativeDefinite,
)
from .intmat import determinant
from .seifert import d_range

__all__ = [
    "Lattice",
    "DiagonalEmbedding",
    "lambda_q",
    "is_negative_definite",
    "embeds_in_diagonal",
    "nonfillability_obstruction",
]


@dataclass(frozen=True)
class Lattice:
    """A finite-rank lattice given by its Gram matrix."""

    gram: tuple[tuple[int, ...], ...]
    rank: int

    def __post_init__(self) -> None:
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if len(gram) != self.rank or any(len(row) != self.rank for row in gram):
            raise ConditionViolation("gram matrix must be rank x rank")
        for i in range(self.rank):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ConditionViolation("gram matrix must be symmetric")


@dataclass(frozen=True)
class DiagonalEmbedding:
    """Rows are images of the lattice basis in D_m, columns D_m coordinates."""

    vectors: tuple[tuple[int, ...], ...]

    def pairing(self, i: int, j: int) -> int:
        """The D_m product of rows i and j: minus the Euclidean dot."""
        return -sum(a * b for a, b in zip(self.vectors[i], self.vectors[j]))


def lambda_q(q: int) -> Lattice:
    """The rank-2q obstruction lattice.

    A path v_1, ..., v_{2q-1} of square -2 vectors with consecutive
    products 1, plus w with w.w = 1 - q and w.v_q = 1.  q = 1 would make
    w a square-0 vector, degenerating the form.
    """
    if q <= 1:
        raise DegenerateLattice(f"need q >= 2, got {q}")
    rank = 2 * q
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank - 1):  # vectors v_1 .. v_{2q-1} at indices 0 .. 2q-2
        gram[i][i] = -2
        if i + 1 < rank - 1:
            gram[i][i + 1] = 1
            gram[i + 1][i] = 1
    w = rank - 1
    gram[w][w] = 1 - q
    gram[w][q - 1] = 1  # attached to v_q
    gram[q - 1][w] = 1
    return Lattice(gram=tuple(tuple(row) for row in gram), rank=rank)


def is_negative_definite(lattice: Lattice) -> bool:
    """Sylvester test: k-th leading principal minor has sign (-1)^k."""
    for k in range(1, lattice.rank + 1):
        minor = determinant([row[:k] for row in lattice.gram[:k]])
        if minor * (-1) ** k <= 0:
            return False
    return True


def embeds_in_diagonal(lattice: Lattice) -> DiagonalEmbedding | None:
    """Search every diagonal lattice for an isometric image of `lattice`.

    Returns the first embedding in canonical search order (coordinate
    values ascending, vectors placed in basis order), or None, which by
    the completeness bound certifies that no embedding exists in any
    D_m.  Requires a negative definite Gram matrix.
    """
    if not is_negative_definite(lattice):
        raise NotNegativeDefinite("embedding search needs a negative definite form")
    gram = lattice.gram
    rank = lattice.rank
    columns = sum(-gram[i][i] for i in range(rank))
    placed: list[list[int]] = []

    def place(i: int) -> DiagonalEmbedding | None:
        if i == rank:
            trimmed = _trim([tuple(v) for v in placed])
            return DiagonalEmbedding(vectors=trimmed)
        norm = -gram[i][i]
        targets = [-gram[j][i] for j in range(i)]  # required Euclidean dots
        vector = [0] * columns
        return extend(i, 0, norm, targets, vector)

    def extend(
        i: int, col: int, norm_left: int, dots_left: list[int], vector: list[int]
    ) -> DiagonalEmbedding | None:
        if col == columns:
            if norm_left == 0 and all(d == 0 for d in dots_left):
                placed.append(vector[:])
                result = place(i + 1)
                if result is None:
                    placed.pop()
                return result
            return None
        history = tuple(v[col] for v in placed)
        bound = math.isqrt(norm_left)
        low, high = -bound, bound
        if col > 0 and tuple(v[col - 1] for v in placed) == history:
            # same-history class as the previous column: non-increasing
            high = min(high, vector[col - 1])
        if not any(history):
            # sign symmetry of unused columns
            low = max(low, 0)
        for value in range(low, high + 1):
            vector[col] = value
            new_dots = [d - value * h for d, h in zip(dots_left, history)]
            if _feasible(norm_left - value * value, new_dots, col, columns, placed):
                result = extend(i, col + 1, norm_left - value * value, new_dots, vector)
                if result is not None:
                    return result
        vector[col] = 0
        return None

    return place(0)


def _feasible(
    norm_left: int, dots_left: list[int], col: int, columns: int, placed: list[list[int]]
) -> bool:
    # Cauchy-Schwarz style cut: remaining dot d against a row of remaining
    # squared length s^2 needs |d| <= s * sqrt(norm_left)
    if norm_left < 0:
        return False
    for d, row in zip(dots_left, placed):
        tail = sum(x * x for x in row[col + 1 :])
        if d * d > tail * norm_left:
            return False
    return True


def _trim(vectors: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    used = max(
        (i + 1 for v in vectors for i, x in enumerate(v) if x != 0), default=1
    )
    return tuple(v[:used] for v in vectors)


def nonfillability_obstruction(g: int) -> dict:
    """The diagonal-lattice obstruction at genus g.

    Picks d with d(d+1) <= 2g <= d(d+2) - 1 (raising NoValidD when no
    such d exists), builds lambda_{d+2}, and searches all diagonal
    lattices.  A lattice that would have to embed in a diagonal lattice
    by diagonalization of a negative definite filling, but does not,
    certifies that no such filling exists.
    """
    if g < 1:
        raise ConditionViolation(f"need g >= 1, got {g}")
    d = d_range(g)
    if d is None:
        raise NoValidD(f"no d with d(d+1) <= 2g <= d(d+2)-1 for g = {g}")
    q = d + 2
    lattice = lambda_q(q)
    embedding = embeds_in_diagonal(lattice)
    return {
        "g": g,
        "d": d,
        "q": q,
        "rank": lattice.rank,
        "embeddable": embedding is not None,
        "embedding": None if embedding is None else embedding.vectors,
        "obstruction_holds": embedding is None,
        "narrative": (
            "a negative definite filling forces the lattice into a diagonal "
            "form; the certified search "
            + ("found an embedding, so this obstruction does not apply"
               if embedding is not None
               else "found none, so no negative definite filling exists")
        ),
    }
