import json
import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from macdual import Ideal, Polynomial, parse_polynomial  # noqa: E402

DATA = Path(__file__).parent / "data"


def ideal_of(gens, names):
    return Ideal([parse_polynomial(g, names) for g in gens], len(names))


def ideal_from_dicts(dicts, nvars):
    return Ideal([Polynomial(d, nvars) for d in dicts], nvars)


def monomial_ideal(exps):
    n = len(exps[0])
    return Ideal([Polynomial.monomial(e) for e in exps], n)


@pytest.fixture
def cusp():
    return ideal_of(["x^2 - z^3", "y - z^2"], ["x", "y", "z"])


@pytest.fixture(scope="session")
def report_schema():
    text = resources.files("macdual").joinpath("schemas/report.schema.json").read_text()
    return json.loads(text)


@pytest.fixture
def run_cli(capsys, report_schema):
    """Run the CLI in-process, validate the JSON report and return it."""
    import jsonschema

    from macdual.cli import main

    def run(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr().out
        report = json.loads(out)
        jsonschema.validate(report, report_schema)
        assert report["exit_code"] == code
        return report

    return run
