"""Smoke test for the arctanh_mellin extension.

Build first:
    cargo build -p mellin-py --release --features extension-module
then run
    python3 python/smoke_test.py
The script imports an installed module if there is one, otherwise the
library just built under target/release.
"""

import importlib
import json
import pathlib
import shutil
import sys
import tempfile
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        return importlib.import_module("arctanh_mellin")
    except ImportError:
        pass
    for name in ("libarctanh_mellin.so", "libarctanh_mellin.dylib", "arctanh_mellin.dll"):
        built = ROOT / "target" / "release" / name
        if built.exists():
            tmp = pathlib.Path(tempfile.mkdtemp())
            suffix = ".pyd" if name.endswith(".dll") else ".so"
            shutil.copy(built, tmp / ("arctanh_mellin" + suffix))
            sys.path.insert(0, str(tmp))
            return importlib.import_module("arctanh_mellin")
    sys.exit("arctanh_mellin not found; build it with cargo first")


def main():
    am = load()

    cf = am.closed_form("log-odd", 0, 1)
    assert cf.coeff("zeta_prime_ratio", 0) == Fraction(-3)
    assert cf.coeff("one") == Fraction(-1, 2)
    assert cf.coeff("ln2") == Fraction(-2, 3)
    assert cf.to_latex().startswith(r"-3\,\frac{\zeta'(2)}{\pi^{2}}")
    assert am.ClosedForm.from_json(cf.to_json()) == cf
    assert len(cf) == 4

    phi = am.phi_odd(1, 1)
    assert phi.terms() == [("eta_prime_neg", 0, Fraction(4, 3)), ("eta_prime_neg", 1, Fraction(8, 3))]
    other = am.phi_odd(1, 1, positive=True)
    assert phi.evaluate(40) == other.evaluate(40)
    assert len(phi - phi) == 0

    value, err = am.quad_integral("log-odd", 0, 1, 30)
    assert value[:28] == cf.evaluate(30)[:28], (value, cf.evaluate(30))
    assert err < 1e-29

    assert am.c_constant(1).startswith("-0.2095053618026607653")
    consts = am.constants(25)
    assert consts["C2"].startswith("0.2059731205121406923")

    assert am.bernoulli(12) == Fraction(-691, 2730)
    assert am.c_coeff(2, 1) == Fraction(-1, 2)
    assert am.d_coeff(2, 1) == Fraction(-1, 3)

    report = am.run_suite("alt-binom-even", 1, 8)
    assert report["failed"] == 0 and report["exact"]
    json.dumps(report)
    assert "lemma-euler-bernoulli" in am.suites()
    assert am.reproduce()

    for bad in (lambda: am.closed_form("log-odd", 3, 2), lambda: am.quad_phi(1, 1.0)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        am.run_suite("no-such-suite")
    except KeyError:
        pass
    else:
        raise AssertionError("expected KeyError")

    print("arctanh_mellin smoke test passed")


if __name__ == "__main__":
    main()
