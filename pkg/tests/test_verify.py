import pytest

from zbappell.errors import DomainError
from zbappell.verify import PropertyResult, run_suite


def test_property_result_pass_semantics():
    assert PropertyResult("x", 10, 0, 1e-12).passed
    assert not PropertyResult("x", 10, 1, 0.5).passed


def test_unknown_suite_rejected():
    with pytest.raises(DomainError):
        run_suite("nosuch")


def test_all_concatenates_every_suite():
    results = run_suite("all", samples=20, seed=3)
    names = [r.name for r in results]
    assert names[0].startswith("bounds.")
    assert names[-1].startswith("elliptic.")
    for prefix in ("bounds", "lemma", "symmetry", "reductions", "elliptic"):
        assert any(n.startswith(prefix + ".") for n in names)
    assert len(names) == len(set(names))


def test_seed_determinism():
    a = run_suite("lemma", samples=200, seed=11)
    b = run_suite("lemma", samples=200, seed=11)
    assert [(r.name, r.failures, r.worst) for r in a] == \
           [(r.name, r.failures, r.worst) for r in b]
