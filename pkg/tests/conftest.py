import pytest

from ggs.bd_triples import BDTriple, enumerate_all, enumerate_canonical


def T(n, *pairs):
    return BDTriple.from_pairs(n, [list(p) for p in pairs])


@pytest.fixture(scope="session")
def canonical():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_canonical(n).triples
        return cache[n]
    return get


@pytest.fixture(scope="session")
def everything():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_all(n)
        return cache[n]
    return get


ACCEPTANCE_LINES = []


@pytest.fixture
def record():
    def rec(criterion, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        return ok
    return rec


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
