"""Tests of the replay engine."""
import pytest

from nornir_fatpoints.exceptions import LedgerError
from nornir_fatpoints.ledger.axioms import match_axiom
from nornir_fatpoints.ledger.replay import (
    BARRED_DEGREE_SEVEN,
    FIRST_ROUTED_DEGREE,
    barred_degree_seven,
    base_cases,
    cover,
    replay,
    replay_x,
    search,
    sweep,
)
from nornir_fatpoints.ledger.tuples import PointTuple, admissible_tuples


def test_replay_absorbs_simples():
    certificate = replay(0, 0, 14, 0, 12)
    assert [step.rule for step in certificate.steps] == ["absorb-simples"]
    assert certificate.terminal == "triple-points"


def test_replay_puts_few_doubles_on_the_conic():
    certificate = replay(0, 2, 15, 3, 13)
    assert [step.rule for step in certificate.steps] == ["pair-doubles", "doubles-on-conic"]
    assert certificate.terminal == "conic-columns"
    assert match_axiom(certificate.final) == certificate.terminal


def test_replay_absorbs_six_simples_into_a_triple():
    certificate = replay(6, 0, 15, 3, 13)
    assert certificate.final.t == 16
    assert certificate.terminal == "triple-points"


def test_replay_starts_at_degree_twelve():
    with pytest.raises(LedgerError):
        replay(0, 0, 11, 11, 11)


def test_replay_rejects_non_members():
    with pytest.raises(LedgerError) as err:
        replay(1, 0, 14, 0, 12)

    assert err.value.rule == "membership"


def test_certificates_chain_and_keep_length():
    certificate = replay_x(28, 0, 12)
    state = certificate.start
    for step in certificate.steps:
        assert step.before == state
        assert step.after.is_settled_length()
        state = step.after
    assert match_axiom(state) == certificate.terminal


@pytest.mark.parametrize("k", [FIRST_ROUTED_DEGREE, 13])
def test_sweep_certifies_every_tuple(k):
    rows = sweep(k)
    assert len(rows) == len(list(admissible_tuples(k)))
    assert [row.to_dict()["error"] for row in rows if not row.certified] == []


def test_sweep_row_fields():
    row = sweep(FIRST_ROUTED_DEGREE)[0]
    assert row.tuple == PointTuple(84, 0, 0, 0)
    assert set(row.to_dict()) == {"s", "d", "t", "p", "k", "certified", "terminal", "steps", "error"}


def test_barred_degree_seven_configurations():
    confs = barred_degree_seven()
    assert len(confs) == len(BARRED_DEGREE_SEVEN) == 11
    for conf in confs:
        assert conf.is_settled_length()
        certificate = search(conf)
        assert match_axiom(certificate.final) == certificate.terminal


def test_base_cases_are_certified():
    cases = base_cases()
    assert {case.name for case in cases} == {
        "barred-degree-seven",
        "doubles-descent",
        "triples-descent",
        "x",
        "x-barred",
    }
    assert [case.to_dict() for case in cases if not case.certified] == []


def test_cover():
    verdict = cover(0, 0, 15)
    assert verdict.w == 13
    assert verdict.subtuple == PointTuple(0, 0, 14, 0)
    assert verdict.supertuple == PointTuple(6, 0, 15, 3)
    assert verdict.injective.terminal == "triple-points"
    assert verdict.to_dict()["subtuple"]["k"] == 12


def test_cover_needs_a_routed_degree():
    with pytest.raises(LedgerError):
        cover(1, 0, 0)


def _descent_pairs(rows):
    return {t: pair for triples, pair in rows for t in triples}


# (w, q) of the doubles descent by degree and number of triples.
DOUBLES_DESCENT_PAIRS = {
    11: _descent_pairs([(range(0, 4), (5, 7)), (range(4, 8), (8, 6))]),
    12: _descent_pairs([((1,), (4, 12)), (range(2, 6), (7, 11)), ((6, 7), (10, 10))]),
    13: _descent_pairs([(range(1, 4), (6, 14)), (range(4, 8), (9, 13)), ((8,), (12, 12))]),
    14: _descent_pairs([(range(0, 4), (6, 18)), (range(4, 8), (9, 17)), ((8, 9), (12, 16))]),
    15: _descent_pairs([(range(1, 4), (7, 21)), (range(4, 8), (10, 20)), (range(8, 11), (13, 19))]),
    16: _descent_pairs([((1,), (6, 26)), (range(2, 6), (9, 25)), (range(6, 10), (12, 24)), ((10,), (15, 23))]),
}


def test_sweep_certifies_every_degree_to_thirty():
    failures = []
    for k in range(FIRST_ROUTED_DEGREE, 31):
        rows = sweep(k)
        assert len(rows) == len(list(admissible_tuples(k)))
        failures.extend(row.to_dict() for row in rows if not row.certified)
    assert failures == []


def test_base_cases_keep_the_descent_values():
    cases = [case for case in base_cases() if case.name == "doubles-descent"]
    computed = {(case.k, case.values["t"]): (case.values["w"], case.values["q"]) for case in cases}
    assert computed == {(k, t): pair for k, pairs in DOUBLES_DESCENT_PAIRS.items() for t, pair in pairs.items()}
    quoted = {(10, 10), (7, 11), (4, 12), (12, 16), (9, 17), (6, 18), (13, 19), (10, 20), (7, 21), (8, 6), (5, 7)}
    assert quoted <= set(computed.values())


def test_base_cases_keep_the_triples_descent_values():
    cases = [case for case in base_cases() if case.name == "triples-descent"]
    computed = {(case.k, case.values["t"]): tuple(case.values[key] for key in "gnp") for case in cases}
    assert computed == {
        (13, 9): (8, 1, 0),
        (14, 10): (9, 0, 1),
        (15, 11): (10, 0, 0),
        (15, 12): (10, 0, 0),
        (15, 13): (10, 0, 0),
        (16, 11): (10, 1, 0),
        (16, 12): (10, 1, 0),
    }
