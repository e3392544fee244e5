import pytest

from m2zeq.quadratic import QuadInt

# Independent oracles.  They must not call into the code they check.


def brute_exponent(x: QuadInt, limit: int = 24):
    """Smallest t <= limit with x**t rational, by repeated multiplication in (s, t)."""
    s0, t0, D = x.s, x.t, x.D
    s, t = s0, t0
    for e in range(1, limit + 1):
        if t == 0:
            return e
        # ((s + t√D)/2) * ((s0 + t0√D)/2)
        s, t = (s * s0 + t * t0 * D) // 2, (s * t0 + t * s0) // 2
    return None


def trial_squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return n != 0


def naive_power(M, n):
    """Linear repeated multiplication on nested lists."""
    a = [[1, 0], [0, 1]]
    b = [[M[0], M[1]], [M[2], M[3]]]
    for _ in range(n):
        a = [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return (a[0][0], a[0][1], a[1][0], a[1][1])


def valid_quadints(D: int, bound: int):
    for s in range(-bound, bound + 1):
        for t in range(-bound, bound + 1):
            if D % 4 == 1 and (s - t) % 2:
                continue
            if D % 4 in (2, 3) and (s % 2 or t % 2):
                continue
            yield QuadInt(s, t, D)


# -- acceptance reporting ------------------------------------------------------


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    lines = request.config._acceptance_lines

    def report(name: str, ok: bool, detail: str = ""):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else ""))
        assert ok, f"{name}: {detail}"

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
