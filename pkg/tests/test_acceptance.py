"""One test per acceptance criterion; each also enforces its time limit."""
import pytest

from schurmzf.suite import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA],
                         ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number):
    res = run_criterion(number)
    print(res.line())
    assert not res.notes["failures"], res.notes["failures"]
    assert res.elapsed_s < res.limit_s, f"took {res.elapsed_s:.2f}s, limit {res.limit_s}s"
    assert res.passed
