import os

import hypothesis
import pytest
from hypothesis import HealthCheck

from praaf.models import AAF, AttackEdge, PrAAF

# The autouse environment fixture runs once per test, not once per example
_SUPPRESSED = [HealthCheck.function_scoped_fixture]

hypothesis.settings.register_profile("dev", max_examples=100, deadline=None, suppress_health_check=_SUPPRESSED)
hypothesis.settings.register_profile("ci", max_examples=500, deadline=None, suppress_health_check=_SUPPRESSED)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None, suppress_health_check=_SUPPRESSED)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

BASE_TEXT = "arg(a). arg(b). arg(c). arg(d). att(a,c). att(b,c). att(c,d).\n"

EXAMPLE_TEXT = "arg(a). arg(b). arg(c,0.4). arg(d). att(a,c,0.3). att(b,c,0.7). att(c,d).\n"

NORMAL_TEXT = (
    "arg(a).\n"
    "arg(b).\n"
    "arg(c).\n"
    "arg(d).\n"
    "arg(eta).\n"
    "att(a,c,0.3).\n"
    "att(b,c,0.7).\n"
    "att(c,d).\n"
    "att(eta,c,0.6).\n"
)


def _edge(source: str, target: str) -> AttackEdge:
    return AttackEdge(source, target)


@pytest.fixture
def base() -> AAF:
    return AAF.create("abcd", [_edge("a", "c"), _edge("b", "c"), _edge("c", "d")])


@pytest.fixture
def example() -> PrAAF:
    return PrAAF.create(
        {"a": 1, "b": 1, "c": 0.4, "d": 1},
        {_edge("a", "c"): 0.3, _edge("b", "c"): 0.7, _edge("c", "d"): 1}
    )


@pytest.fixture
def normal() -> PrAAF:
    return PrAAF.create(
        {"a": 1, "b": 1, "c": 1, "d": 1, "eta": 1},
        {_edge("a", "c"): 0.3, _edge("b", "c"): 0.7, _edge("c", "d"): 1, _edge("eta", "c"): 0.6}
    )


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.praaf"
    path.write_text(EXAMPLE_TEXT, encoding="utf-8")
    return str(path)


@pytest.fixture
def normal_file(tmp_path):
    path = tmp_path / "normal.praaf"
    path.write_text(NORMAL_TEXT, encoding="utf-8")
    return str(path)


@pytest.fixture
def base_file(tmp_path):
    path = tmp_path / "base.praaf"
    path.write_text(BASE_TEXT, encoding="utf-8")
    return str(path)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """Keep PRAAF_* variables and any .env file of the developer out of the tests"""
    for name in list(os.environ):
        if name.startswith("PRAAF_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("praaf.config.load_dotenv", lambda *args, **kwargs: False)
    monkeypatch.chdir(tmp_path)
