import json

import pytest

import phigold
from phigold import oracle


@pytest.fixture(scope="module")
def tables():
    return phigold.Tables(5000)


def test_arithmetic(tables):
    assert phigold.nu_p(tables, 2, 12) == 2
    assert phigold.nu(tables, 12) == 3
    assert phigold.phi(tables, 12) == 4
    assert phigold.prime_pi(tables, 18) == 7
    assert not phigold.is_prime(tables, 25)
    assert phigold.isqrt(25) == 5
    for a in range(1, 500):
        assert phigold.phi(tables, a) == oracle.phi(a)


def test_errors_map_to_python_exceptions(tables):
    with pytest.raises(ValueError):
        phigold.nu(tables, 0)
    with pytest.raises(IndexError):
        phigold.prime_pi(tables, 10**6)
    with pytest.raises(ValueError):
        phigold.certify(tables, 1)


def test_certify(tables):
    cert = phigold.certify(tables, 29)
    assert cert.verdict == "prime"
    assert [(c.modulus, c.residue) for c in cert.checks] == [(2, 1), (3, 1), (5, 1)]
    assert phigold.certify(tables, 25).failing_modulus == 5
    assert phigold.fermat_congruence_holds(tables, 9, 2)


def test_bertrand(tables):
    assert [w.x for w in phigold.bertrand_solutions(tables, 10)] == [1, 3, 7]
    assert all(phigold.count_identity_check(tables, n) for n in range(4, 1000))


def test_goldbach(tables):
    assert [w.x for w in phigold.binary_solutions(tables, 5)] == [0, 2]
    assert phigold.raw_form_solutions(tables, 5) == [13, 15, 17]
    assert phigold.fermat_system_solutions(tables, 7) == [0, 4]
    assert phigold.substitution_bijection_check(tables, 100)
    assert [(w.x, w.y) for w in phigold.ternary_solutions(tables, 11)] == [(7, 1), (8, 0), (9, 0)]
    assert [(w.x, w.y) for w in phigold.peculiar_solutions(tables, 9)] == [(6, 0)]
    assert phigold.decomposition_to_xy(tables, 3, 3, 5, 11) == (7, 1)
    assert phigold.proposition_check(tables, 101)
    assert oracle.triples(9) == [(3, 3, 3), (2, 5, 2)]


def test_sweep_and_report():
    report = phigold.run_sweep("binary", 2, 1000)
    assert report.held and report.checked == 999
    text = phigold.emit_report(report, "json")
    assert json.loads(text)["failures"] == []
    assert phigold.parse_report_json(text) == report
    assert phigold.emit_report(report, "csv").splitlines()[0] == "n,witness_count,first_witness"
    threaded = phigold.run_sweep("binary", 2, 1000, threads=4)
    assert phigold.emit_report(threaded, "json") == text
    ternary = phigold.run_sweep("ternary", 7, 7)
    assert ternary.per_n[0].first_witness == [5, 0]
    with pytest.raises(ValueError):
        phigold.run_sweep("quaternary", 2, 10)
