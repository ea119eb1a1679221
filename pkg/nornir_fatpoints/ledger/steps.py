"""Conic steps: a trace of exactly 2k planar conditions on the conic and a residue settled at degree k-2."""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Tuple

from nornir_fatpoints.exceptions import LedgerError
from nornir_fatpoints.ledger.types import DOUBLE_SLICE, TRIPLE_BOTTOM, TRIPLE_TOP, Configuration, LedgerStep
from nornir_fatpoints.numerics import decompose12

LOGGER = logging.getLogger(__name__)

STEP_CITATION = "a conic holding 2k conditions reduces settledness in degree k to the residue in degree k-2"
CHAIN_CITATION = "2k-4 general double points drop the degree by six through two conics"


@dataclass(frozen=True)
class DoublesDescent:
    """Two steps spending every triple on the first conic: w flat points on C and q doubles left at k-4."""

    w: int
    q: int
    steps: Tuple[LedgerStep, LedgerStep]


def _fail(message: str, rule: str, conf: Configuration):
    LOGGER.debug("%s | %s", rule, message)
    raise LedgerError(message, rule=rule, state=conf.describe())


def apply_step(  # pylint: disable=too-many-arguments,too-many-locals
    conf: Configuration,
    g: int = 0,
    n: int = 0,
    p: int = 0,
    r: int = 0,
    s: int = 0,
    place_remainder: bool = False,
    rule: str = "conic-step",
) -> LedgerStep:
    """Specialize points on the conic and step from degree k to k-2.

    Args:
        conf (Configuration): Pre-state, of length k(k+2).
        g (int): Triples leaving a trace of 3 and a (1;2) column.
        n (int): Triples leaving a trace of 2 and a (1;3) column.
        p (int): Triples leaving a trace of 1 and a (2;3) column.
        r (int): Doubles leaving a trace of 2 and one flat point.
        s (int): Doubles leaving a trace of 1 and two flat points.
        place_remainder (bool): Specialize a general remainder on the conic as well.
        rule (str): Name recorded in the step.

    Returns:
        LedgerStep: The recorded step; its post-state has length (k-2)k.
    """
    k = conf.k
    if min(g, n, p, r, s) < 0:
        _fail("step parameters must be nonnegative", rule, conf)
    if k < 2:
        _fail("no step below degree 2", rule, conf)
    if not conf.is_settled_length():
        _fail(f"length {conf.total_length} is not k(k+2) = {k * (k + 2)}", rule, conf)
    if conf.s:
        _fail("simple pullbacks must be traded before a conic step", rule, conf)
    if g + n + p > conf.t:
        _fail(f"needs {g + n + p} triples, has {conf.t}", rule, conf)
    if r + s > conf.d:
        _fail(f"needs {r + s} doubles, has {conf.d}", rule, conf)
    if n + p > 1 or s > 1:
        _fail("at most one partial triple and one partial double per step", rule, conf)

    remainder = conf.remainder
    remainder_trace, flat = 0, 0
    if remainder.on_conic or place_remainder:
        try:
            remainder_trace, remainder, flat = remainder.split()
        except LedgerError as error:
            _fail(str(error), rule, conf)
    columns: Counter = Counter()
    trace = conf.flat + remainder_trace + 3 * g + 2 * n + p + 2 * r + s
    for column, count in conf.columns:
        trace += column.trace * count
        columns[column.residue] += count
    if trace != 2 * k:
        _fail(f"trace {trace} on the conic is not 2k = {2 * k}", rule, conf)

    columns[DOUBLE_SLICE.entries] += g
    columns[TRIPLE_TOP.entries] += n
    columns[TRIPLE_BOTTOM.entries] += p
    after = Configuration(
        k=k - 2,
        d=conf.d - r - s,
        t=conf.t - g - n - p,
        columns=[(entries, count) for entries, count in columns.items() if entries],
        flat=flat + r + 2 * s,
        remainder=remainder,
    )
    if after.total_length != (k - 2) * k:
        _fail(f"residue length {after.total_length} is not (k-2)k = {(k - 2) * k}", rule, after)
    parameters = {"g": g, "n": n, "p": p, "r": r, "s": s, "placed": int(place_remainder)}
    return LedgerStep(rule=rule, before=conf, after=after, parameters=parameters, citation=STEP_CITATION)


def standard_step(conf: Configuration, place_remainder: bool = False) -> LedgerStep:
    """Greedy step: most triples with a full trace, then one partial triple, then doubles.

    Raises:
        LedgerError: The conic is already over-full or the doubles run short.
    """
    existing = conf.conic_trace
    if place_remainder and not conf.remainder.on_conic:
        try:
            existing += conf.remainder.split()[0]
        except LedgerError as error:
            _fail(str(error), "standard-step", conf)
    need = 2 * conf.k - existing
    if need < 0:
        _fail(f"conic already holds {existing} > 2k = {2 * conf.k}", "standard-step", conf)
    g = min(conf.t, need // 3)
    rest = need - 3 * g
    n = p = r = s = 0
    if rest and g < conf.t:
        n, p = (1, 0) if rest == 2 else (0, 1)
    else:
        r, s = divmod(rest, 2)
    return apply_step(conf, g=g, n=n, p=p, r=r, s=s, place_remainder=place_remainder, rule="standard-step")


def descend_with_doubles(t: int, k: int, place_remainder: bool = False) -> DoublesDescent:
    """Two greedy steps from X(2u(k) - 2t, t, k) with every triple fully traced on the first conic.

    Args:
        t (int): Triples, at most floor(2k/3).
        k (int): Degree.
        place_remainder (bool): Specialize the remainder on the second conic.

    Returns:
        DoublesDescent: w flat points on the conic and q doubles at degree k-4, with both steps.
    """
    if not 0 <= t <= 2 * k // 3:
        raise LedgerError(f"t={t} outside 0..floor(2k/3) for k={k}", rule="descend-with-doubles")
    d = 2 * decompose12(k).u - 2 * t
    conf = Configuration.doubles_and_triples(d, t, k)
    first = standard_step(conf)
    b, a = first.parameters["r"], first.parameters["s"]
    if first.parameters["g"] != t:
        _fail("the first conic must take every triple", "descend-with-doubles", conf)
    if 2 * t + b + 2 * a > 2 * (k - 2):
        _fail(f"2t+b+2a = {2 * t + b + 2 * a} exceeds 2(k-2)", "descend-with-doubles", first.after)
    second = standard_step(first.after, place_remainder=place_remainder)
    h, i = second.parameters["r"], second.parameters["s"]
    q = d - a - b - h - i
    w = t + h + 2 * i + (1 if place_remainder and conf.remainder.p == 8 else 0)
    if q < 0 or q != second.after.d or w != second.after.flat or second.after.columns:
        _fail(f"(w, q) = ({w}, {q}) does not match the residue", "descend-with-doubles", second.after)
    return DoublesDescent(w=w, q=q, steps=(first, second))


def descend_with_triples(t: int, k: int) -> LedgerStep:
    """One step from X(2u(k) - 2t, t, k) filling the conic with triples only.

    Raises:
        LedgerError: t does not exceed floor(2k/3).
    """
    if t <= 2 * k // 3:
        raise LedgerError(f"t={t} must exceed floor(2k/3) = {2 * k // 3}", rule="descend-with-triples")
    d = 2 * decompose12(k).u - 2 * t
    if d < 0:
        raise LedgerError(f"t={t} leaves negative doubles at k={k}", rule="descend-with-triples")
    step = standard_step(Configuration.doubles_and_triples(d, t, k))
    if step.parameters["r"] or step.parameters["s"]:
        _fail("doubles were needed on the conic", "descend-with-triples", step.before)
    return step


def cotangent_chain(conf: Configuration) -> Tuple[List[LedgerStep], Configuration]:
    """Spend 2k-4 doubles to drop from degree k to k-6 through two conics.

    The first conic takes k doubles. A second conic takes k-4 further doubles and four of the k flat points
    sitting on both conics; its k-4 flat residues then move onto the first conic, which the third step empties.
    """
    k = conf.k
    rule = "cotangent-chain"
    if k < 6:
        _fail(f"needs k >= 6, got {k}", rule, conf)
    if conf.d < 2 * k - 4:
        _fail(f"needs 2k-4 = {2 * k - 4} doubles, has {conf.d}", rule, conf)
    if conf.columns or conf.flat or conf.remainder.on_conic:
        _fail("the conic must start empty", rule, conf)
    first = apply_step(conf, r=k, rule=rule)
    middle = first.after
    moved = middle.evolve(k=k - 4, d=middle.d - (k - 4), flat=2 * (k - 4))
    if moved.total_length != (k - 4) * (k - 2):
        _fail(f"second conic residue length {moved.total_length} is off", rule, moved)
    second = LedgerStep(
        rule=rule,
        before=middle,
        after=moved,
        parameters={"second_conic_doubles": k - 4, "shared_points": 4, "trace": 2 * k - 4},
        citation=CHAIN_CITATION,
    )
    third = apply_step(moved, rule=rule)
    return [first, second, third], third.after
