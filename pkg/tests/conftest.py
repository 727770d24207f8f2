import itertools

import pytest

from revmap import dihedral, dihedral_product, rank3_cyclic_ext, s4_cover


def brute_closure(gens):
    """Closure of permutation tuples under composition, by plain breadth-first search."""
    degree = len(gens[0])
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def brute_generates(G, elems):
    """Does the set generate G?  Closure over the multiplication table, no numpy tricks."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for e in elems:
                b = G.mul(a, e)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return len(seen) == G.order


def brute_automorphism_count(G):
    """Bijections of the element set that respect the table (tiny groups only)."""
    n = G.order
    count = 0
    table = G.table.tolist()
    for perm in itertools.permutations(range(1, n)):
        f = (0,) + perm
        if all(f[table[a][b]] == table[f[a]][f[b]] for a in range(n) for b in range(n)):
            count += 1
    return count


@pytest.fixture(scope="session")
def dxd35():
    return dihedral_product(3, 5)


@pytest.fixture(scope="session")
def s4c3():
    return s4_cover(3)


@pytest.fixture(scope="session")
def s4c9():
    return s4_cover(9)


@pytest.fixture(scope="session")
def r357():
    return rank3_cyclic_ext(3, 5, 7)


@pytest.fixture(scope="session")
def d5():
    return dihedral(5)


ACCEPTANCE = {}


def record_criterion(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number])
