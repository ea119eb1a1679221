"""Admissible parameter tuples and the choices that embed a planar scheme into them."""

import logging
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from nornir_fatpoints.exceptions import LedgerError
from nornir_fatpoints.ledger.types import REMAINDER_LENGTHS
from nornir_fatpoints.numerics import decompose6, decompose12

LOGGER = logging.getLogger(__name__)

DOUBLES_REMAINDERS = (0, 1, 2, 3, 5)


class DoublesTuple(NamedTuple):
    """(s, d, p): simple and double pullbacks with a remainder."""

    s: int
    d: int
    p: int


class PointTuple(NamedTuple):
    """(s, d, t, p): simple, double and triple pullbacks with a remainder."""

    s: int
    d: int
    t: int
    p: int


@dataclass(frozen=True)
class Reduction:
    """Outcome of trading simple pullbacks for doubles and triples.

    `branch` is "absorb-simples" when everything collapses to triples and R_rho, otherwise "pair-doubles" with
    the doubles and triples of the resulting X configuration.
    """

    branch: str
    tuple: PointTuple
    x_doubles: Optional[int]
    x_triples: Optional[int]
    barred: bool = False


def is_admissible_doubles(s: int, d: int, p: int, k: int) -> bool:
    """Membership of (s, d, p) in the doubles-only set at degree k."""
    if k < 0 or min(s, d, p) < 0 or p not in DOUBLES_REMAINDERS:
        return False
    return 2 * s + 6 * d + p == k * (k + 2) and p <= decompose6(k).r


def is_admissible(s: int, d: int, t: int, p: int, k: int) -> bool:
    """Membership of (s, d, t, p) in the set of admissible tuples at degree k."""
    if k < 0 or min(s, d, t, p) < 0 or p not in REMAINDER_LENGTHS:
        return False
    return 2 * s + 6 * d + 12 * t + p == k * (k + 2) and p <= decompose12(k).rho


def admissible_tuples(k: int) -> Iterator[PointTuple]:
    """Every admissible tuple at degree k, ordered by t, then d, then p."""
    total = k * (k + 2)
    rho = decompose12(k).rho
    for t in range(total // 12 + 1):
        for d in range((total - 12 * t) // 6 + 1):
            for p in REMAINDER_LENGTHS:
                rest = total - 12 * t - 6 * d - p
                if p <= rho and rest >= 0 and rest % 2 == 0:
                    yield PointTuple(rest // 2, d, t, p)


def choose_doubles_subtuple(a: int, b: int, k: int) -> DoublesTuple:
    """Tuple at degree k-1 contained in the pullback of a simple and b double points.

    Raises:
        LedgerError: The pullback is not longer than (k-1)(k+1).
    """
    if (k - 1) * (k + 1) >= 2 * a + 6 * b:
        raise LedgerError(f"(k-1)(k+1) = {(k - 1) * (k + 1)} is not below {2 * a + 6 * b}", rule="doubles-subtuple")
    decomp = decompose6(k - 1)
    half, parity = divmod(decomp.r, 2)
    if decomp.q < b:
        chosen = DoublesTuple(0, decomp.q, decomp.r)
    else:
        chosen = DoublesTuple(3 * (decomp.q - b) + half, b, parity)
        # The remainder takes one of the simple points.
        if chosen.s + (1 if chosen.p else 0) > a:
            raise LedgerError(f"chosen {chosen} needs more than {a} simple points", rule="doubles-subtuple")
    if not is_admissible_doubles(*chosen, k - 1):
        raise LedgerError(f"chosen {chosen} is not admissible at degree {k - 1}", rule="doubles-subtuple")
    return chosen


def choose_doubles_supertuple(a: int, b: int, k: int) -> DoublesTuple:
    """Tuple at degree k containing the pullback of a simple and b double points."""
    if 2 * a + 6 * b > k * (k + 2):
        raise LedgerError(f"{2 * a + 6 * b} exceeds k(k+2) = {k * (k + 2)}", rule="doubles-supertuple")
    decomp = decompose6(k)
    half, parity = divmod(decomp.r, 2)
    chosen = DoublesTuple(3 * (decomp.q - b) + half, b, parity)
    if chosen.s < a or not is_admissible_doubles(*chosen, k):
        raise LedgerError(f"no doubles tuple at degree {k} contains ({a}, {b})", rule="doubles-supertuple")
    return chosen


def choose_supertuple(a: int, b: int, c: int, k: int) -> PointTuple:
    """Tuple at degree k with t = c, d = b and s >= a.

    Raises:
        LedgerError: The pullback is longer than k(k+2).
    """
    total = k * (k + 2)
    rest = total - (2 * a + 6 * b + 12 * c)
    if rest < 0:
        raise LedgerError(f"{total - rest} exceeds k(k+2) = {total}", rule="supertuple")
    rho = decompose12(k).rho
    if rest >= rho:
        p = rho
    else:
        p = max(value for value in REMAINDER_LENGTHS if value <= rest and (rest - value) % 2 == 0)
    chosen = PointTuple(a + (rest - p) // 2, b, c, p)
    if not is_admissible(*chosen, k):
        raise LedgerError(f"chosen {chosen} is not admissible at degree {k}", rule="supertuple")
    return chosen


def _housed(p: int, spare_simple: bool, spare_double: bool, spare_triple: bool) -> bool:
    if p == 0:
        return True
    if p in (1, 2):
        return spare_simple or spare_double or spare_triple
    if p in (3, 5):
        return spare_double or spare_triple
    return spare_triple


def choose_subtuple(a: int, b: int, c: int, k: int) -> PointTuple:
    """Tuple at degree k inside the pullback of (a, b, c), most triples first, then doubles, then remainder.

    The remainder sits inside a spare point: R_1 and R_2 in any, R_3 and R_5 in a double or triple, R_8 and
    R_11 in a triple.
    """
    total = k * (k + 2)
    if 2 * a + 6 * b + 12 * c < total:
        raise LedgerError(f"pullback of ({a}, {b}, {c}) is shorter than k(k+2) = {total}", rule="subtuple")
    rho = decompose12(k).rho
    for t in range(min(c, total // 12), -1, -1):
        for d in range(min(b, (total - 12 * t) // 6), -1, -1):
            for p in sorted(REMAINDER_LENGTHS, reverse=True):
                rest = total - 12 * t - 6 * d - p
                if p > rho or rest < 0 or rest % 2:
                    continue
                s = rest // 2
                if s > a or not _housed(p, s < a, d < b, t < c):
                    continue
                return PointTuple(s, d, t, p)
    raise LedgerError(f"no admissible tuple at degree {k} fits inside ({a}, {b}, {c})", rule="subtuple")


def reduce_simples(s: int, d: int, t: int, p: int, k: int) -> Reduction:
    """Trade simple pullbacks for doubles and triples.

    Raises:
        LedgerError: The tuple is not admissible or the remainder arithmetic does not close.
    """
    if not is_admissible(s, d, t, p, k):
        raise LedgerError(f"({s}, {d}, {t}, {p}) is not admissible at degree {k}", rule="membership")
    decomp = decompose12(k)
    if 3 * d <= s:
        sixes = (s - 3 * d) // 6
        leftover = s - 3 * d - 6 * sixes
        triples = t + d + sixes
        if 2 * leftover + p != decomp.rho or triples != decomp.u:
            raise LedgerError(
                f"absorbing simples left 2*{leftover}+{p} against rho={decomp.rho}", rule="absorb-simples"
            )
        return Reduction("absorb-simples", PointTuple(0, 0, decomp.u, decomp.rho), None, None)
    thirds = s // 3
    sigma, delta, tau = s - 3 * thirds, d - thirds, t + thirds
    pairs, odd = divmod(delta, 2)
    if 6 * odd + 2 * sigma + p != decomp.rho:
        raise LedgerError(f"6*{odd}+2*{sigma}+{p} does not equal rho={decomp.rho}", rule="pair-doubles")
    LOGGER.debug("k=%s | sigma=%s delta=%s tau=%s pairs=%s", k, sigma, delta, tau, pairs)
    if (sigma, odd, p) == (0, 1, 5):
        return Reduction("pair-doubles", PointTuple(0, delta - 1, tau, 11), delta - 1, tau, barred=True)
    return Reduction("pair-doubles", PointTuple(0, delta - odd, tau, decomp.rho), delta - odd, tau)
