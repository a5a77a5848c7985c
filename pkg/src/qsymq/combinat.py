"""Compositions, exponent vectors, Dyck paths, and lattice-path counting.

Compositions are tuples of positive integers; exponent vectors are tuples of
``n`` non-negative integers, read simultaneously as monomial exponents and as
north/east lattice paths of height ``n`` and width ``|nu|``.  A vector is
*Dyck* when its path stays weakly above the diagonal, i.e. when every partial
sum satisfies ``nu_1 + ... + nu_l <= l - 1``; otherwise it is *transdiagonal*.
There are exactly ``catalan(n)`` Dyck vectors of length ``n``.
"""

import enum
import math
import os
from itertools import combinations

Composition = tuple[int, ...]
ExponentVector = tuple[int, ...]

# Desk-scale caps.  Counting formulas stay exact for any n, but path
# enumeration is exponential; refuse silently huge jobs instead of hanging.
COUNTING_CAP = 20
ENUMERATION_CAP = 12
ORACLE_CAP = 6


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds the desk-scale caps."""


def desk_cap(default: int) -> int:
    """Effective cap: the QSYMQ_MAX_N environment override, else ``default``."""
    raw = os.environ.get("QSYMQ_MAX_N")
    if raw is None:
        return default
    try:
        return max(default, int(raw))
    except ValueError:
        return default


def _check_cap(n: int, default: int, what: str) -> None:
    cap = desk_cap(default)
    if n > cap:
        raise ResourceLimitError(
            f"{what} capped at n <= {cap} (set QSYMQ_MAX_N to raise); got n = {n}"
        )


class PathClass(enum.Enum):
    DYCK = "dyck"
    TRANSDIAGONAL = "transdiagonal"


# ---------------------------------------------------------------------------
# compositions


def check_composition(alpha) -> Composition:
    """Validate and normalize a composition (any iterable of parts >= 1)."""
    alpha = tuple(alpha)
    for part in alpha:
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"composition parts must be integers >= 1, got {alpha}")
    return alpha


def composition_from_subset(subset, d: int) -> Composition:
    """Composition of ``d`` whose descent set is ``subset`` (a subset of [1, d-1]).

    >>> composition_from_subset({2, 3, 5}, 7)
    (2, 1, 2, 2)
    """
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    points = sorted(subset)
    for a in points:
        if not 1 <= a <= d - 1:
            raise ValueError(f"subset element {a} outside [1, {d - 1}]")
    if d == 0:
        return ()
    cuts = [0] + points + [d]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def descent_set(alpha) -> frozenset:
    """Partial sums of ``alpha`` excluding the total: the descent set D(alpha)."""
    alpha = check_composition(alpha)
    out, total = [], 0
    for part in alpha[:-1]:
        total += part
        out.append(total)
    return frozenset(out)


def refines(beta, alpha) -> bool:
    """True iff ``beta`` refines ``alpha``: same size and D(alpha) <= D(beta)."""
    beta, alpha = check_composition(beta), check_composition(alpha)
    return sum(beta) == sum(alpha) and descent_set(alpha) <= descent_set(beta)


def refinements(alpha) -> list[Composition]:
    """All refinements of ``alpha``: supersets of D(alpha) inside [1, |alpha|-1].

    The count is ``2 ** (|alpha| - len(alpha))``.
    """
    alpha = check_composition(alpha)
    d = sum(alpha)
    base = descent_set(alpha)
    free = sorted(set(range(1, d)) - base)
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            out.append(composition_from_subset(base | set(extra), d))
    return out


def compositions_of(d: int) -> list[Composition]:
    """All compositions of ``d``, in ascending lex order on the parts."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if d == 0:
        return [()]
    subs = []
    for r in range(d):
        subs.extend(combinations(range(1, d), r))
    return sorted(composition_from_subset(s, d) for s in subs)


# ---------------------------------------------------------------------------
# exponent vectors and path classification


def check_vector(nu) -> ExponentVector:
    nu = tuple(nu)
    for e in nu:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"vector entries must be integers >= 0, got {nu}")
    return nu


def last_nonzero(nu) -> int:
    """Position (1-based) of the last nonzero entry; 0 for the zero vector."""
    nu = tuple(nu)
    for i in range(len(nu), 0, -1):
        if nu[i - 1]:
            return i
    return 0


def zero_erasure(nu) -> Composition:
    """The composition c(nu) obtained by erasing zero entries."""
    return tuple(e for e in check_vector(nu) if e)


def is_dyck(nu) -> bool:
    """Partial sums never reach the diagonal: nu_1 + ... + nu_l <= l - 1 for all l."""
    total = 0
    for l, e in enumerate(check_vector(nu), start=1):
        total += e
        if total >= l:
            return False
    return True


def classify(nu) -> PathClass:
    return PathClass.DYCK if is_dyck(nu) else PathClass.TRANSDIAGONAL


def vectors_of_degree(n: int, d: int):
    """All vectors in N^n with |nu| = d, in ascending lex order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in vectors_of_degree(n - 1, d - first):
            yield (first,) + rest


def enumerate_dyck(n: int, k: int | None = None) -> list[ExponentVector]:
    """All Dyck vectors of length ``n`` (degree ``k`` only, if given), in
    ascending graded lex order.  Total count is ``catalan(n)``; the count at
    degree ``k`` is ``ballot(n, k)``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k is not None and k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _check_cap(n, ENUMERATION_CAP, "Dyck enumeration")
    out = []
    prefix = [0] * n

    def extend(pos, total):
        if pos == n:
            if k is None or total == k:
                out.append(tuple(prefix))
            return
        # entry at 1-based position pos+1 may raise the sum up to pos
        top = pos - total
        if k is not None:
            top = min(top, k - total)
        for e in range(top + 1):
            prefix[pos] = e
            extend(pos + 1, total + e)
        prefix[pos] = 0

    extend(0, 0)
    out.sort(key=lambda v: (sum(v), v))
    return out


# ---------------------------------------------------------------------------
# counting


def catalan(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _check_cap(n, COUNTING_CAP, "Catalan numbers")
    return math.comb(2 * n, n) // (n + 1)


def ballot(n: int, k: int) -> int:
    """Number of Dyck vectors of length n and degree k:
    (n - k) / (n + k) * binom(n + k, k) for k < n, and 0 for k >= n.
    """
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n = {n}, k = {k}")
    _check_cap(n, COUNTING_CAP, "ballot numbers")
    if k >= n:
        return 0
    num = (n - k) * math.comb(n + k, k)
    assert num % (n + k) == 0
    return num // (n + k)


def dn_k(n: int, k: int) -> int:
    """Dyck words of length 2n ending with exactly k falls (equivalently, with
    exactly k factors): k * (2n - k - 1)! / (n! * (n - k)!).
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n = {n}, k = {k}")
    _check_cap(n, COUNTING_CAP, "path counting")
    num = k * math.factorial(2 * n - k - 1)
    den = math.factorial(n) * math.factorial(n - k)
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# Dyck words (up/down steps) and path statistics


def vector_to_dyck_word(eta) -> str:
    """Encode a Dyck vector as a word over U/D:
    D^eta_1 U D^eta_2 U ... D^eta_n U D^(n - |eta|).

    The word ends with exactly ``n - |eta|`` falls.
    """
    eta = check_vector(eta)
    if not is_dyck(eta):
        raise ValueError(f"{eta} is transdiagonal, not a Dyck vector")
    n = len(eta)
    parts = ["D" * e + "U" for e in eta]
    parts.append("D" * (n - sum(eta)))
    return "".join(parts)


def is_dyck_word(word: str) -> bool:
    if 2 * word.count("U") != len(word) or set(word) - {"U", "D"}:
        return False
    height = 0
    for step in word:
        height += 1 if step == "U" else -1
        if height < 0:
            return False
    return height == 0


def dyck_words(n: int):
    """All Dyck words with n ups and n downs, by backtracking."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _check_cap(n, ENUMERATION_CAP, "Dyck word enumeration")

    def extend(word, ups, height):
        if len(word) == 2 * n:
            yield word
            return
        if ups < n:
            yield from extend(word + "U", ups + 1, height + 1)
        if height > 0:
            yield from extend(word + "D", ups, height - 1)

    yield from extend("", 0, 0)


def trailing_falls(word: str) -> int:
    return len(word) - len(word.rstrip("D"))


def factor_count(word: str) -> int:
    """Number of returns to the axis (irreducible factors of the word)."""
    height = factors = 0
    for step in word:
        height += 1 if step == "U" else -1
        if height == 0:
            factors += 1
    return factors


def path_statistics(n: int) -> dict[int, tuple[int, int]]:
    """For each k in [1, n], the pair (paths ending with exactly k falls,
    paths with exactly k factors) over all Dyck words of length 2n.  Both
    counts equal ``dn_k(n, k)``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    by_falls = {k: 0 for k in range(1, n + 1)}
    by_factors = {k: 0 for k in range(1, n + 1)}
    for word in dyck_words(n):
        by_falls[trailing_falls(word)] += 1
        by_factors[factor_count(word)] += 1
    return {k: (by_falls[k], by_factors[k]) for k in range(1, n + 1)}


# ---------------------------------------------------------------------------
# words, descents, shuffles


def word_descent_set(word) -> frozenset:
    """Positions i (1-based) with word[i] > word[i+1]."""
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def canonical_descent_word(alpha, offset: int = 0) -> tuple[int, ...]:
    """A permutation word of {offset+1, ..., offset+|alpha|} whose descent set
    is exactly D(alpha).

    Runs are written increasingly and later runs take the smaller value
    blocks, so every run boundary is a descent and nothing else is.

    >>> canonical_descent_word((2, 1))
    (2, 3, 1)
    >>> canonical_descent_word((1, 2), offset=3)
    (6, 4, 5)
    """
    alpha = check_composition(alpha)
    word = []
    high = offset + sum(alpha)
    for part in alpha:
        word.extend(range(high - part + 1, high + 1))
        high -= part
    return tuple(word)


def complement_descent_word(alpha, offset: int = 0) -> tuple[int, ...]:
    """An alternative word with descent set exactly D(alpha): complement the
    canonical word built for the complementary descent set.
    """
    alpha = check_composition(alpha)
    d = sum(alpha)
    if d == 0:
        return ()
    co = composition_from_subset(set(range(1, d)) - descent_set(alpha), d)
    base = canonical_descent_word(co)
    return tuple(offset + d + 1 - v for v in base)


def shuffles(u, v) -> list[tuple]:
    """All interleavings of ``u`` and ``v`` keeping each word's internal order.

    The words must have disjoint letters; the result has binom(|u|+|v|, |v|)
    elements.
    """
    u, v = tuple(u), tuple(v)
    if set(u) & set(v):
        raise ValueError(f"words must have disjoint letters: {u} and {v}")

    def mix(a, b):
        if not a:
            yield b
            return
        if not b:
            yield a
            return
        for rest in mix(a[1:], b):
            yield (a[0],) + rest
        for rest in mix(a, b[1:]):
            yield (b[0],) + rest

    return list(mix(u, v))
