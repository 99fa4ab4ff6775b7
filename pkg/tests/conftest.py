import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coxrigid.diagram import CoxeterDiagram, dihedral, dihedral_times_a1, linear  # noqa: E402


def product_a1(n):
    names = [f"r{i}" for i in range(1, n + 1)]
    return CoxeterDiagram(names, [(a, b, 2) for i, a in enumerate(names) for b in names[i + 1:]])


def i2_times_a1(m):
    return dihedral_times_a1(m)


def d4():
    return CoxeterDiagram(["c", "p", "q", "r"],
                          [("c", "p", 3), ("c", "q", 3), ("c", "r", 3),
                           ("p", "q", 2), ("p", "r", 2), ("q", "r", 2)])


# finite groups used by the brute-force checks (all of order <= 200)
CORPUS = {
    **{f"I2({m})": dihedral(m) for m in range(3, 9)},
    "A3": linear([3, 3]),
    "B3": linear([3, 4]),
    "I2(3)xA1": i2_times_a1(3),
    "A1^3": product_a1(3),
    "I2(5)xA1": i2_times_a1(5),
}


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_diagram(request):
    return CORPUS[request.param]


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
