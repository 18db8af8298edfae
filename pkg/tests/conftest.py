from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import strategies as st

from centralsoft import Context, make_css
from centralsoft.algebra import CentralSoftSet
from centralsoft.workspace import parse_workspace

FIXTURES = Path(__file__).parent / "fixtures"
HOUSES = FIXTURES / "houses.json"

U = ["h1", "h2", "h3", "h4", "h5"]
E = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII"]

# Tables as printed in the worked examples.
F_TABLE = {
    "I": {"h2", "h3", "h4", "h5"}, "II": {"h2", "h5"}, "III": {"h2", "h3"},
    "IV": {"h1", "h4", "h5"}, "V": {"h1", "h4"}, "VI": {"h1", "h5"},
    "VII": {"h2", "h5"}, "VIII": {"h3", "h4", "h5"},
}
G_TABLE = {
    "I": {"h2", "h3", "h4"}, "II": {"h1", "h5"}, "III": {"h3", "h4"},
    "IV": {"h2", "h4", "h5"}, "V": {"h2", "h4"}, "VI": {"h4", "h5"},
    "VII": {"h2", "h4"}, "VIII": {"h1", "h4", "h5"},
}
M_TABLE = dict(G_TABLE, VI={"h1"})


@pytest.fixture(scope="session")
def ctx() -> Context:
    return Context(U, E)


@pytest.fixture(scope="session")
def f(ctx):
    return make_css(ctx, ["IV", "V"], F_TABLE)


@pytest.fixture(scope="session")
def g(ctx):
    return make_css(ctx, ["I", "IV"], G_TABLE)


@pytest.fixture(scope="session")
def m(ctx):
    return make_css(ctx, ["I", "IV", "VI"], M_TABLE)


@pytest.fixture(scope="session")
def houses_bytes() -> bytes:
    return HOUSES.read_bytes()


@pytest.fixture(scope="session")
def houses(houses_bytes):
    return parse_workspace(houses_bytes)


def table(a: CentralSoftSet) -> dict[str, set[str]]:
    return {p: set(objs) for p, objs in a.as_dict().items()}


SMALL = Context(["o1", "o2", "o3"], ["e1", "e2", "e3"])


def css_strategy(context: Context = SMALL):
    n, m = context.n_params, context.n_objects
    return st.builds(
        CentralSoftSet,
        st.just(context),
        st.integers(0, (1 << n) - 1),
        st.lists(st.integers(0, (1 << m) - 1), min_size=n, max_size=n),
    )


def random_workspace(rng):
    """A random valid workspace; names and identifiers vary in shape."""
    from centralsoft.decision import make_system
    from centralsoft.workspace import SystemRef, Workspace

    n_obj = rng.randint(0, 5)
    n_par = rng.randint(0, 5)
    universe = [f"u{i}_{rng.choice('abcxyz')}" for i in range(n_obj)]
    params = [rng.choice(["p", "Ⅰ", "q"]) + str(i) for i in range(n_par)]
    ctx = Context(universe, params)
    ws = Workspace(ctx)
    for k in range(rng.randint(0, 4)):
        central = rng.getrandbits(n_par) if n_par else 0
        images = [rng.getrandbits(n_obj) if n_obj else 0 for _ in range(n_par)]
        ws.sets[f"s{k}{rng.choice('xyz')}"] = CentralSoftSet(ctx, central, images)
    names = list(ws.sets)
    for k in range(rng.randint(0, 2) if names else 0):
        members = tuple(rng.sample(names, rng.randint(1, len(names))))
        covered = 0
        for name in members:
            covered |= ws.sets[name].central
        target = covered & (rng.getrandbits(n_par) if n_par else 0)
        make_system([ws.sets[n] for n in members], target)
        ws.systems[f"sys{k}"] = SystemRef(members, target)
    return ws


# -- acceptance summary -----------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _CRITERIA[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title}")
