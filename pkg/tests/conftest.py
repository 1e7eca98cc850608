import os

from hypothesis import HealthCheck, settings, strategies as st

from monomialx.ideal import minimalize
from monomialx.monomial import Monomial
from monomialx.simplicial import SimplicialComplex

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=30, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def monomials(draw, n=None, max_exp=3, max_n=4):
    if n is None:
        n = draw(st.integers(1, max_n))
    return Monomial(tuple(draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n))))


@st.composite
def ideals(draw, max_n=4, max_gens=6, max_exp=3, equigenerated=False, squarefree=False):
    n = draw(st.integers(2, max_n))
    if equigenerated:
        d = draw(st.integers(1, 3 if not squarefree else n))
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        if squarefree and equigenerated:
            s = draw(st.sets(st.integers(1, n), min_size=d, max_size=d))
            gens.append(Monomial.from_support(n, s))
        elif squarefree:
            s = draw(st.sets(st.integers(1, n), min_size=1, max_size=n))
            gens.append(Monomial.from_support(n, s))
        elif equigenerated:
            e = [0] * n
            for _ in range(d):
                e[draw(st.integers(0, n - 1))] += 1
            gens.append(Monomial(tuple(e)))
        else:
            e = draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n))
            if sum(e) == 0:
                e[0] = 1
            gens.append(Monomial(tuple(e)))
    return minimalize(gens, n)


@st.composite
def complexes(draw, max_n=6, pure=False, max_facets=7):
    n = draw(st.integers(1, max_n))
    if pure:
        k = draw(st.integers(0, n))
        facets = draw(st.lists(st.sets(st.integers(1, n), min_size=k, max_size=k),
                               min_size=1, max_size=max_facets))
    else:
        facets = draw(st.lists(st.sets(st.integers(1, n), max_size=n), min_size=1, max_size=max_facets))
    return SimplicialComplex.make(n, facets)


# ---- acceptance summary -----------------------------------------------------------
# Tests in test_acceptance.py tag themselves with record_property("criterion", key);
# the terminal summary then prints one PASS/FAIL line per criterion.

_CRITERIA = {}


def pytest_runtest_logreport(report):
    for k, v in getattr(report, "user_properties", ()):
        if k != "criterion":
            continue
        if report.when == "call" or report.failed:
            prev = _CRITERIA.get(v)
            _CRITERIA[v] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def _crit_key(k):
    num = "".join(c for c in k if c.isdigit())
    return int(num), k


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    groups = {}
    for k in sorted(_CRITERIA, key=_crit_key):
        groups.setdefault(_crit_key(k)[0], []).append(k)
    for num, keys in groups.items():
        verdict = "FAIL" if any(_CRITERIA[k] == "FAIL" for k in keys) else "PASS"
        detail = ""
        if len(keys) > 1 or keys[0] != str(num):
            detail = "  (" + ", ".join(f"{k} {_CRITERIA[k]}" for k in keys) + ")"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}{detail}")
