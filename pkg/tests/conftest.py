from fractions import Fraction

from hypothesis import strategies as st

from gencarinena.exactalg import Polynomial

small_fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@st.composite
def polynomials(draw, max_degree=12):
    coeffs = draw(st.lists(small_fractions, max_size=max_degree + 1))
    return Polynomial(coeffs)


@st.composite
def nonzero_polynomials(draw, max_degree=6):
    p = draw(polynomials(max_degree))
    if p.is_zero():
        p = Polynomial.constant(draw(st.integers(1, 7)))
    return p


# -- one summary line per acceptance criterion ----------------------------------

_CRITERIA: list[tuple[str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = dict(report.user_properties).get("criterion")
    if label:
        _CRITERIA.append((label, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in sorted(_CRITERIA):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}  ({duration:.2f} s)")
