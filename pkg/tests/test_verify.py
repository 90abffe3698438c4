import pytest

from torusheat import verify


def test_all_hard_checks_pass():
    results = verify.run_suite("all")
    assert not verify.hard_failures(results)
    names = [r.qualified_name for r in results]
    assert len(names) == len(set(names))
    assert any(not r.hard for r in results)


def test_suites_cover_every_module():
    assert set(verify.suite_names()) == {"all", "specfun", "theta", "moduli", "lattice", "extremal", "constants"}


def test_injection_names_the_check():
    results = verify.run_suite("theta", inject="theta.quartic_identity")
    failed = verify.hard_failures(results)
    assert [r.qualified_name for r in failed] == ["theta.quartic_identity"]


def test_soft_check_never_fails_run():
    results = verify.run_suite("extremal", inject="hex_maximizes_minimum")
    soft = [r for r in results if not r.hard]
    assert soft and not soft[0].passed
    assert not verify.hard_failures(results)


def test_seed_determinism():
    a = [r.residual for r in verify.run_suite("lattice", seed=123)]
    b = [r.residual for r in verify.run_suite("lattice", seed=123)]
    assert a == b
    lats1 = verify.random_lattices(5, 3)
    lats2 = verify.random_lattices(5, 3)
    assert all((x.gen == y.gen).all() for x, y in zip(lats1, lats2))


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope")
