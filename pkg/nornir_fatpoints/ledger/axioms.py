"""Terminal configurations known to be settled."""

from dataclasses import dataclass
from typing import Callable, List, Optional

from nornir_fatpoints.ledger.types import DOUBLE_SLICE, TRIPLE_BOTTOM, TRIPLE_TOP, Configuration
from nornir_fatpoints.numerics import decompose6, decompose12

_CONIC_SHAPES = {DOUBLE_SLICE, TRIPLE_TOP, TRIPLE_BOTTOM}


@dataclass(frozen=True)
class Axiom:
    """A terminal fact with the configurations it covers."""

    axiom_id: str
    citation: str
    predicate: Callable[[Configuration], bool]


def _bare(conf: Configuration) -> bool:
    """Nothing on the conic and no simple pullbacks."""
    return not conf.s and not conf.columns and not conf.flat and not conf.remainder.on_conic


def _double_points(conf: Configuration) -> bool:
    if not (conf.k == 1 or conf.k >= 4) or not _bare(conf) or conf.t or conf.remainder.barred:
        return False
    decomp = decompose6(conf.k)
    return conf.d == decomp.q and conf.remainder.p == decomp.r


def _triple_points(conf: Configuration) -> bool:
    if conf.k < 10 or not _bare(conf) or conf.d or conf.remainder.barred:
        return False
    decomp = decompose12(conf.k)
    return conf.t == decomp.u and conf.remainder.p == decomp.rho


def _conic_columns_shape(conf: Configuration) -> bool:
    """Column, trace, length and parity conditions shared by both conic-column axioms."""
    if conf.k < 12 or conf.s or conf.d or conf.remainder.on_conic:
        return False
    if any(column not in _CONIC_SHAPES for column, _ in conf.columns):
        return False
    slices = conf.column_count(DOUBLE_SLICE)
    tops = conf.column_count(TRIPLE_TOP)
    bottoms = conf.column_count(TRIPLE_BOTTOM)
    if 2 * slices + conf.flat + 3 * tops + 3 * bottoms > 2 * conf.k or tops + bottoms > 1:
        return False
    return conf.is_settled_length()


def _conic_columns(conf: Configuration) -> bool:
    if conf.remainder.barred or not _conic_columns_shape(conf):
        return False
    allowed = (0, 8) if conf.k % 2 == 0 else (3, 11)
    return conf.remainder.p in allowed


def _conic_columns_barred(conf: Configuration) -> bool:
    return conf.remainder.barred and conf.k % 2 == 1 and conf.k >= 13 and _conic_columns_shape(conf)


def _one_settled(conf: Configuration) -> bool:
    return (
        conf.k == 1
        and conf.flat == 1
        and not (conf.s or conf.d or conf.t or conf.columns)
        and conf.remainder.p == 1
        and not conf.remainder.on_conic
    )


def _empty(conf: Configuration) -> bool:
    return conf.k == 0 and conf.total_length == 0


_AXIOMS = (
    Axiom(
        "double-points",
        "general double points with R_r(k) are settled in every degree except 2 and 3",
        _double_points,
    ),
    Axiom("triple-points", "u(k) general triple points with R_rho(k) are settled from degree 10 on", _triple_points),
    Axiom(
        "conic-columns",
        "general triples with (1;2), (1;3), (2;3) columns and flat points on a conic are settled from degree 12 "
        "when the conic holds at most 2k conditions and the remainder matches the parity of k",
        _conic_columns,
    ),
    Axiom(
        "conic-columns-barred",
        "the conic-column configurations stay settled in odd degree from 13 on when R_11 is replaced by a double "
        "point with R_5",
        _conic_columns_barred,
    ),
    Axiom("one-settled", "a flat point and a point of the bundle are settled in degree 1", _one_settled),
    Axiom("empty", "the empty configuration is settled in degree 0", _empty),
)


def axiom_table() -> List[Axiom]:
    """The closed list of terminals a certificate may end on."""
    return list(_AXIOMS)


def match_axiom(conf: Configuration) -> Optional[str]:
    """Identifier of the first axiom covering the configuration, or None."""
    if not conf.is_settled_length():
        return None
    for axiom in _AXIOMS:
        if axiom.predicate(conf):
            return axiom.axiom_id
    return None
