import io
import subprocess
import sys
from pathlib import Path

import pytest

from emaext.cli import run

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"

# name -> argv (relative config paths are resolved against the repository root)
CASES = {
    "ext_two_orbits": ["ext", "scenarios/multiloop_a1.cfg", "--from", "V1", "--to", "W1"],
    "oracle_multiloop": ["oracle", "scenarios/multiloop_a1.cfg", "--from", "V1", "--to", "V3"],
    "ext_onsager_mixed": ["ext", "scenarios/onsager_sl2.cfg", "--from", "mixed", "--to", "mixed"],
    "oracle_onsager_fixed": ["oracle", "scenarios/onsager_sl2.cfg", "--from", "k_half", "--to", "k_3half"],
    "oracle_onsager_mixed": ["oracle", "scenarios/onsager_sl2.cfg", "--from", "mixed", "--to", "mixed"],
    "blocks_a2": ["blocks", "scenarios/multiloop_a2.cfg", "--points", "p1,p2"],
    "spectral_a2": ["spectral", "scenarios/multiloop_a2.cfg", "--rep", "pair"],
    "spectral_onsager": ["spectral", "scenarios/onsager_sl2.cfg", "--rep", "mixed"],
    "sameblock_a2": ["sameblock", "scenarios/multiloop_a2.cfg", "--a", "pair", "--b", "twisted"],
    "oracle_exchange": ["oracle", "scenarios/exchange_a1.cfg", "--from", "A", "--to", "B"],
    "oracle_exchange_free": ["oracle", "scenarios/exchange_a1.cfg", "--from", "C", "--to", "D"],
    "oracle_sl3_so3": ["oracle", "scenarios/sl3_so3.cfg", "--from", "T", "--to", "B"],
    "tensor_a2": ["tensor", "--g", "A2", "--l", "1,0", "--m", "0,1"],
    "homdim_a1": ["homdim", "--g", "A1", "--u", "adjoint", "--v", "1", "--w", "1"],
    "quotient_a2": ["quotient", "--g", "A2"],
    "quotient_a1_span": ["quotient", "--g", "A1", "--span-of", "1"],
}


def invoke(argv, porcelain=True):
    argv = [str(ROOT / a) if a.startswith("scenarios/") else a for a in argv]
    out, err = io.StringIO(), io.StringIO()
    code = run((["--porcelain"] if porcelain else []) + argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_porcelain_matches_golden(name):
    code, out, _ = invoke(CASES[name])
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_porcelain_is_stable_across_runs():
    assert invoke(CASES["blocks_a2"]) == invoke(CASES["blocks_a2"])


def test_porcelain_flag_after_subcommand():
    code, out, _ = run_plain(["quotient", "--g", "A2", "--porcelain"])
    assert code == 0 and out.startswith("factors=3\n")


def run_plain(argv):
    out, err = io.StringIO(), io.StringIO()
    return run(argv, out, err), out.getvalue(), err.getvalue()


def test_human_output():
    code, out, _ = invoke(CASES["oracle_multiloop"], porcelain=False)
    assert code == 0 and out == "oracle_dim=1 formula_dim=1 agree=yes\n"
    code, out, _ = invoke(CASES["ext_two_orbits"], porcelain=False)
    assert out.splitlines()[0] == "dim Ext^1(V1, W1) = 0"


@pytest.mark.parametrize("argv, code", [
    (["blocks", "scenarios/onsager_sl2.cfg", "--points", "one"], 3),
    (["ext", "scenarios/multiloop_a1.cfg", "--from", "V1", "--to", "nope"], 2),
    (["ext", "scenarios/missing.cfg", "--from", "a", "--to", "b"], 2),
    (["tensor", "--g", "A2", "--l", "1", "--m", "0,1"], 2),
    (["tensor", "--g", "Z9", "--l", "1", "--m", "1"], 2),
    (["homdim", "--g", "A1", "--u", "adjoint", "--v", "-1", "--w", "1"], 2),
    (["quotient", "--g", "A1", "--span-of", "0"], 0),
    (["frobnicate"], 2),
    ([], 2),
])
def test_exit_codes(argv, code):
    got, _, err = invoke(argv)
    assert got == code
    if code:
        assert err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "emaext", "--porcelain", "quotient", "--g", "D4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "factors=2,2\norder=4\n"
