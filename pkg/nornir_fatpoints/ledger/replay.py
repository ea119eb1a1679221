"""Replay of the induction: every admissible tuple from degree 12 on is driven down to a terminal."""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from nornir_fatpoints.exceptions import LedgerError
from nornir_fatpoints.ledger.axioms import match_axiom
from nornir_fatpoints.ledger.steps import (
    apply_step,
    cotangent_chain,
    descend_with_doubles,
    descend_with_triples,
    standard_step,
)
from nornir_fatpoints.ledger.tuples import (
    PointTuple,
    admissible_tuples,
    choose_subtuple,
    choose_supertuple,
    is_admissible_doubles,
    reduce_simples,
)
from nornir_fatpoints.ledger.types import (
    DOUBLE_SLICE,
    TRIPLE_BOTTOM,
    TRIPLE_TOP,
    Certificate,
    Configuration,
    LedgerStep,
    Remainder,
)
from nornir_fatpoints.numerics import decompose6, decompose12, max_chain_count, scheme_length, surjectivity_degree

LOGGER = logging.getLogger(__name__)

Route = Tuple[Tuple[LedgerStep, ...], str]

FIRST_ROUTED_DEGREE = 12
INITIAL_DEGREES = range(12, 18)

# (b, c, d, e, f): (1;2) columns, flat points, (1;3) and (2;3) columns on the conic, general triples.
BARRED_DEGREE_SEVEN = (
    (0, 9, 0, 1, 2),
    (1, 5, 0, 0, 3),
    (1, 6, 0, 1, 2),
    (1, 7, 1, 0, 2),
    (2, 2, 0, 0, 3),
    (2, 3, 0, 1, 2),
    (2, 4, 1, 0, 2),
    (3, 5, 0, 0, 2),
    (4, 2, 0, 0, 2),
    (4, 3, 0, 1, 1),
    (1, 1, 1, 0, 3),
)

# Triples run through the doubles descent per degree; degree 14 places R_8 on the second conic.
DOUBLES_DESCENT_ROWS = {
    11: range(0, 8),
    12: range(1, 8),
    13: range(1, 9),
    14: range(0, 10),
    15: range(1, 11),
    16: range(1, 11),
}
TRIPLES_DESCENT_ROWS = {13: (9,), 14: (10,), 15: (11, 12, 13), 16: (11, 12)}

_CITATIONS = {
    "absorb-simples": "simple pullbacks absorbed three at a time by doubles and six at a time into triples",
    "pair-doubles": "simple pullbacks traded for doubles, pairs of doubles merged into triples",
    "doubles-on-conic": "at most k double points specialized onto the conic",
    "collapse-to-doubles": "at most five flat points join the doubles as general simple points",
    "unbar": "the barred remainder splits into a general double point and R_5",
    "five-points-on-conic": "three flat points on the conic specialize to a (1;2) column",
}


@dataclass(frozen=True)
class SweepRow:
    """Replay outcome of one admissible tuple."""

    tuple: PointTuple
    k: int
    certified: bool
    terminal: Optional[str] = None
    steps: int = 0
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Plain data form."""
        return {
            "s": self.tuple.s,
            "d": self.tuple.d,
            "t": self.tuple.t,
            "p": self.tuple.p,
            "k": self.k,
            "certified": self.certified,
            "terminal": self.terminal,
            "steps": self.steps,
            "error": self.error,
        }


@dataclass(frozen=True)
class BaseCase:
    """One initial configuration with its values and replay outcome."""

    name: str
    k: int
    certified: bool
    terminal: Optional[str] = None
    values: Dict[str, int] = field(default_factory=dict)
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Plain data form."""
        return {
            "name": self.name,
            "k": self.k,
            "certified": self.certified,
            "terminal": self.terminal,
            "values": dict(self.values),
            "error": self.error,
        }


@dataclass(frozen=True)
class CoverVerdict:  # pylint: disable=too-many-instance-attributes
    """Injectivity one degree below the surjectivity degree and surjectivity at it."""

    a: int
    b: int
    c: int
    length: int
    w: int
    subtuple: PointTuple
    supertuple: PointTuple
    injective: Certificate
    surjective: Certificate

    def to_dict(self) -> Dict[str, Any]:
        """Plain data form."""
        return {
            "scheme": {"a": self.a, "b": self.b, "c": self.c, "length": self.length},
            "w": self.w,
            "subtuple": {"k": self.w - 1, **self.subtuple._asdict()},
            "supertuple": {"k": self.w, **self.supertuple._asdict()},
            "injective": self.injective.to_dict(),
            "surjective": self.surjective.to_dict(),
        }


def _specialize(rule: str, before: Configuration, after: Configuration, **parameters) -> LedgerStep:
    if after.total_length != before.total_length or after.k != before.k:
        raise LedgerError("specialization changes length or degree", rule=rule, state=before.describe())
    return LedgerStep(rule=rule, before=before, after=after, parameters=parameters, citation=_CITATIONS[rule])


def _terminal(conf: Configuration, rule: str) -> str:
    terminal = match_axiom(conf)
    if terminal is None:
        raise LedgerError("route ended outside the axiom table", rule=rule, state=conf.describe())
    return terminal


def _prefix(steps: Sequence[LedgerStep], route: Route) -> Route:
    return tuple(steps) + route[0], route[1]


def _moves(conf: Configuration) -> Iterator[LedgerStep]:
    """Candidate moves in search order."""
    k = conf.k
    remainder = conf.remainder
    general = not remainder.barred and not remainder.on_conic
    if (
        conf.s + conf.flat <= 5
        and not conf.t
        and not conf.columns
        and general
        and k not in (2, 3)
        and is_admissible_doubles(conf.s + conf.flat, conf.d, remainder.p, k)
    ):
        decomp = decompose6(k)
        yield _specialize(
            "collapse-to-doubles", conf, Configuration(k=k, d=decomp.q, remainder=Remainder(decomp.r))
        )
    if remainder.barred:
        yield _specialize("unbar", conf, conf.evolve(d=conf.d + 1, remainder=Remainder(5)))
    if 3 <= conf.flat <= 5 and not conf.columns:
        yield _specialize(
            "five-points-on-conic", conf, conf.evolve(flat=conf.flat - 3, columns=((DOUBLE_SLICE, 1),))
        )
    if k < 2 or conf.s:
        return
    try:
        yield standard_step(conf)
    except LedgerError:
        pass
    if general and remainder.p not in (0, 1):
        try:
            yield standard_step(conf, place_remainder=True)
        except LedgerError:
            pass


@lru_cache(maxsize=None)
def _search(conf: Configuration) -> Optional[Route]:
    terminal = match_axiom(conf)
    if terminal is not None:
        return (), terminal
    for step in _moves(conf):
        found = _search(step.after)
        if found is not None:
            return _prefix((step,), found)
    return None


def _search_route(conf: Configuration) -> Route:
    found = _search(conf)
    if found is None:
        raise LedgerError("no reduction reaches a terminal", rule="search", state=conf.describe())
    return found


def search(conf: Configuration) -> Certificate:
    """Depth-first search over specializations and conic steps, memoized per configuration.

    Moves are tried in order: terminal, collapse to doubles, unbar, five points on the conic, standard step,
    standard step with the remainder on the conic.

    Raises:
        LedgerError: No sequence of moves reaches a terminal.
    """
    steps, terminal = _search_route(conf)
    return Certificate(conf, steps, terminal)


def _doubles_on_conic(conf: Configuration) -> Route:
    after = conf.evolve(d=0, columns=conf.columns + ((DOUBLE_SLICE, conf.d),))
    step = _specialize("doubles-on-conic", conf, after, doubles=conf.d)
    return (step,), _terminal(after, "doubles-on-conic")


def _triple_split(rest: int) -> Tuple[int, int, int]:
    g, extra = divmod(rest, 3)
    return g, int(extra == 2), int(extra == 1)


def _horace_split(conf: Configuration) -> Route:
    """k doubles on a first conic, then doubles and triples filling the next one or two conics."""
    k, d, rule = conf.k, conf.d, "horace-split"
    first = apply_step(conf, r=k, rule=rule)
    if d - k <= (k - 4) // 2:
        if k < 16:
            raise LedgerError(f"the one-conic split needs k >= 16, got {k}", rule=rule, state=conf.describe())
        rest = k - 4 - 2 * (d - k)
        g, h, i = _triple_split(rest)
        second = apply_step(first.after, g=g, n=h, p=i, r=d - k, rule=rule)
        steps = (first, second)
    else:
        if k < 18:
            raise LedgerError(f"the two-conic split needs k >= 18, got {k}", rule=rule, state=conf.describe())
        m, l = divmod(k - 4, 2)
        second = apply_step(first.after, r=m, s=l, rule=rule)
        left = d - k - m - l
        rest = 2 * k - 8 - (m + 2 * l) - 2 * left
        if rest < 0:
            raise LedgerError(f"{left} doubles over-fill the third conic", rule=rule, state=second.after.describe())
        g, h, i = _triple_split(rest)
        third = apply_step(second.after, g=g, n=h, p=i, r=left, rule=rule)
        steps = (first, second, third)
    return steps, _terminal(steps[-1].after, rule)


def _chains(conf: Configuration, count: int) -> Tuple[List[LedgerStep], Configuration]:
    steps: List[LedgerStep] = []
    for _ in range(count):
        chain, conf = cotangent_chain(conf)
        steps.extend(chain)
    return steps, conf


def _settle_initial(conf: Configuration) -> Route:
    k, d = conf.k, conf.d
    if k not in INITIAL_DEGREES:
        raise LedgerError(f"initial handling covers degrees 12..17, got {k}", rule="initial", state=conf.describe())
    if d <= k:
        return _doubles_on_conic(conf)
    if k in (16, 17) and d <= k + (k - 4) // 2:
        return _horace_split(conf)
    if k == 17 and d >= 2 * k - 4:
        steps, state = _chains(conf, 1)
        return _prefix(steps, _search_route(state))
    return _search_route(conf)


@lru_cache(maxsize=None)
def _settle_x(conf: Configuration) -> Route:
    """Route X(d, t, k) or its barred form, k >= 12, to a terminal."""
    k, d = conf.k, conf.d
    if d <= k:
        return _doubles_on_conic(conf)
    if d >= 2 * k - 4:
        level = k // 6
        chains = max_chain_count(d, k)
        if chains <= level - 3:
            steps, state = _chains(conf, chains)
            if state.d >= 2 * state.k - 4:
                raise LedgerError("chains left too many doubles", rule="cotangent-chain", state=state.describe())
            if state.d <= state.k:
                return _prefix(steps, _doubles_on_conic(state))
            return _prefix(steps, _horace_split(state))
        steps, state = _chains(conf, level - 2)
        return _prefix(steps, _settle_initial(state))
    if k >= 18:
        return _horace_split(conf)
    return _settle_initial(conf)


def _certify(start: Configuration, route: Route) -> Certificate:
    certificate = Certificate(start, route[0], route[1])
    if match_axiom(certificate.final) != certificate.terminal:
        raise LedgerError("terminal does not cover the final configuration", rule="certificate")
    return certificate


def replay(s: int, d: int, t: int, p: int, k: int) -> Certificate:
    """Certificate that Z(s, d, t, p) is settled at degree k >= 12.

    Raises:
        LedgerError: The tuple is not admissible, k is below 12, or a side condition fails.
    """
    if k < FIRST_ROUTED_DEGREE:
        raise LedgerError(f"replay starts at degree {FIRST_ROUTED_DEGREE}, got {k}", rule="replay")
    reduction = reduce_simples(s, d, t, p, k)
    start = Configuration.general(s, d, t, p, k)
    if reduction.branch == "absorb-simples":
        decomp = decompose12(k)
        after = Configuration(k=k, t=decomp.u, remainder=Remainder(decomp.rho))
        step = _specialize("absorb-simples", start, after, simples=s)
        return _certify(start, ((step,), _terminal(after, "absorb-simples")))
    x_conf = Configuration.doubles_and_triples(reduction.x_doubles, reduction.x_triples, k, reduction.barred)
    step = _specialize("pair-doubles", start, x_conf, barred=int(reduction.barred))
    return _certify(start, _prefix((step,), _settle_x(x_conf)))


def replay_x(d: int, t: int, k: int, barred: bool = False) -> Certificate:
    """Certificate for X(d, t, k) or its barred form; below degree 12 the search engine runs directly."""
    conf = Configuration.doubles_and_triples(d, t, k, barred)
    if not conf.is_settled_length():
        raise LedgerError(f"X({d}, {t}, {k}) has length {conf.total_length}", rule="replay", state=conf.describe())
    route = _settle_x(conf) if k >= FIRST_ROUTED_DEGREE else _search_route(conf)
    return _certify(conf, route)


def sweep(k: int) -> List[SweepRow]:
    """Replay every admissible tuple at degree k."""
    rows = []
    for point_tuple in admissible_tuples(k):
        try:
            certificate = replay(*point_tuple, k)
        except LedgerError as error:
            LOGGER.warning("k=%s | %s failed: %s", k, tuple(point_tuple), error)
            rows.append(SweepRow(point_tuple, k, certified=False, error=str(error)))
            continue
        rows.append(SweepRow(point_tuple, k, True, certificate.terminal, len(certificate.steps)))
    return rows


def _base_case(name: str, k: int, start: Configuration, values: Optional[Dict[str, int]] = None) -> BaseCase:
    try:
        certificate = search(start)
    except LedgerError as error:
        return BaseCase(name, k, False, values=values or {}, error=str(error))
    return BaseCase(name, k, True, certificate.terminal, values or {})


def barred_degree_seven() -> List[Configuration]:
    """The barred degree-7 configurations the odd-degree conic-column terminal rests on."""
    return [
        Configuration(
            k=7,
            t=f,
            columns=((DOUBLE_SLICE, b), (TRIPLE_TOP, d), (TRIPLE_BOTTOM, e)),
            flat=c,
            remainder=Remainder(11, barred=True),
        )
        for b, c, d, e, f in BARRED_DEGREE_SEVEN
    ]


def base_cases() -> List[BaseCase]:
    """Barred degree-7 schemes, the doubles and triples descents, and every X in degrees 12 to 17."""
    cases = []
    for values, conf in zip(BARRED_DEGREE_SEVEN, barred_degree_seven()):
        cases.append(_base_case("barred-degree-seven", 7, conf, dict(zip("bcdef", values))))
    for k, triples in DOUBLES_DESCENT_ROWS.items():
        for t in triples:
            try:
                descent = descend_with_doubles(t, k, place_remainder=k == 14)
            except LedgerError as error:
                cases.append(BaseCase("doubles-descent", k, False, values={"t": t}, error=str(error)))
                continue
            values = {"t": t, "w": descent.w, "q": descent.q}
            cases.append(_base_case("doubles-descent", k, descent.steps[-1].after, values))
    for k, triples in TRIPLES_DESCENT_ROWS.items():
        for t in triples:
            step = descend_with_triples(t, k)
            values = {"t": t, **{key: step.parameters[key] for key in ("g", "n", "p")}}
            cases.append(_base_case("triples-descent", k, step.after, values))
    for k in INITIAL_DEGREES:
        u = decompose12(k).u
        for t in range(u + 1):
            for barred in (False, True) if k == 17 else (False,):
                name = "x-barred" if barred else "x"
                try:
                    certificate = replay_x(2 * u - 2 * t, t, k, barred)
                except LedgerError as error:
                    cases.append(BaseCase(name, k, False, values={"d": 2 * u - 2 * t, "t": t}, error=str(error)))
                    continue
                cases.append(BaseCase(name, k, True, certificate.terminal, {"d": 2 * u - 2 * t, "t": t}))
    return cases


def cover(a: int, b: int, c: int) -> CoverVerdict:
    """Certificates for injectivity at w-1 and surjectivity at w for the pullback of (a, b, c).

    Raises:
        LedgerError: w-1 is below 12 or a replay fails.
    """
    length = scheme_length(a, b, c)
    w = surjectivity_degree(length)
    if (w - 1) * (w + 1) >= 2 * length:
        raise LedgerError(f"(w-1)(w+1) is not below 2*{length}", rule="cover")
    if w - 1 < FIRST_ROUTED_DEGREE:
        raise LedgerError(f"w-1 = {w - 1} is below {FIRST_ROUTED_DEGREE}", rule="cover")
    subtuple = choose_subtuple(a, b, c, w - 1)
    supertuple = choose_supertuple(a, b, c, w)
    return CoverVerdict(
        a=a,
        b=b,
        c=c,
        length=length,
        w=w,
        subtuple=subtuple,
        supertuple=supertuple,
        injective=replay(*subtuple, w - 1),
        surjective=replay(*supertuple, w),
    )
