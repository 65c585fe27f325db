import pytest

from witrees.verify import (
    check_action,
    check_binary,
    check_closed_forms,
    check_conjecture,
    check_counting,
    check_euler,
    check_full_degree,
    check_gamma,
    check_hat,
    check_jacobi,
    check_psi_theta,
    check_schett,
    check_series,
    check_st_relations,
    check_stat_invariants,
    check_symmetry,
    check_tilde,
    run_suites,
    suite_checks,
)


@pytest.mark.parametrize(
    "fn",
    [
        check_counting,
        check_stat_invariants,
        check_hat,
        check_tilde,
        check_symmetry,
        check_psi_theta,
        check_full_degree,
        check_euler,
        check_binary,
        check_action,
        check_gamma,
    ],
    ids=lambda f: f.__name__,
)
def test_sized_checks_pass_small(fn):
    result = fn(5)
    assert result.passed, result.detail


def test_unsized_checks_pass():
    for fn in (check_schett, check_st_relations, check_jacobi):
        result = fn()
        assert result.passed, result.detail


def test_series_and_closed_forms():
    assert check_series(6).passed
    assert check_closed_forms(max_edges=6, ternary_max=12).passed


def test_conjecture_small():
    result = check_conjecture(max_nodes=7)
    assert result.passed, result.detail


def test_run_suites_selection_and_order():
    results = run_suites(["counting", "euler"], max_size=4)
    assert [r.passed for r in results] == [True, True]
    assert "counting" in results[0].name and "Euler" in results[1].name


def test_run_suites_threaded_matches_serial():
    serial = run_suites(["counting", "stats", "euler"], max_size=4, threads=1)
    threaded = run_suites(["counting", "stats", "euler"], max_size=4, threads=3)
    assert [(r.name, r.passed, r.detail) for r in serial] == [
        (r.name, r.passed, r.detail) for r in threaded
    ]


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suites(["nonsense"])


def test_suite_table_covers_everything():
    assert set(suite_checks()) == {
        "counting", "stats", "hat", "tilde", "symmetry", "psi-theta",
        "full-degree", "euler", "binary", "action", "schett", "gamma",
        "series", "closed-forms", "jacobi", "conjecture",
    }
