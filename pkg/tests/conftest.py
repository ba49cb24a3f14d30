from __future__ import annotations

import pytest

from mdscubes.assembly import theorem2_ingredients, theorem2_pipeline
from mdscubes.combine import product
from mdscubes.fields import field_make
from mdscubes.linear import linear_mds
from mdscubes.steiner import theorem3_assemble, trivial_designs

RS_ORDERS = (4, 5, 7, 8, 9, 11, 13, 16)

_criteria: dict[int, list[tuple[str, bool]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria.setdefault(marker.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        ok = all(passed for _, passed in results)
        failed = [name for name, passed in results if not passed]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def rs_codes():
    return {q: linear_mds(field_make(q)) for q in RS_ORDERS}


@pytest.fixture(scope="session")
def ingredients():
    return theorem2_ingredients()


@pytest.fixture(scope="session")
def mds84():
    return theorem2_pipeline(5)


@pytest.fixture(scope="session")
def mds_fixtures(rs_codes):
    """Every MDS(2,5,q) fixture with q <= 20."""
    out = {f"rs{q}": c for q, c in rs_codes.items()}
    out["product20"] = product(rs_codes[4], rs_codes[5])
    out["steiner5"] = theorem3_assemble(*trivial_designs())
    return out
