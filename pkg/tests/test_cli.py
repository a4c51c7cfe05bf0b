import io
import subprocess
import sys

import numpy as np
import pytest

from slpinterp import DEFAULT_RING as R, parse_slp, parse_sparse, probe, slp_from_sparse
from slpinterp.cli import (EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, CSV_VERSION, format_slp,
                           int_expr, main, read_bench_csv)
from slpinterp.sparsepoly import format_sparse

from conftest import poly


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def two_term(tmp_path):
    path = tmp_path / "two_term.slp"
    path.write_text(format_slp(slp_from_sparse(poly(R, (33, 1), (3, 1)))))
    return path


def test_int_expr():
    assert int_expr("2^30") == int_expr("2**30") == 1 << 30
    assert int_expr("2^61-1") == (1 << 61) - 1
    assert int_expr("170") == 170


def test_gen_is_deterministic(tmp_path):
    outs = []
    for k in range(2):
        a, b = tmp_path / f"{k}.slp", tmp_path / f"{k}.sparse"
        assert run("gen", "--terms", 2, "--degree", 33, "--seed", 7, "--out-slp", a, "--out-sparse", b)[0] == 0
        outs.append((a.read_bytes(), b.read_bytes()))
    assert outs[0] == outs[1]


def test_gen_zero_and_oracle(tmp_path):
    a, b = tmp_path / "z.slp", tmp_path / "z.sparse"
    assert run("gen", "--terms", 0, "--degree", 10, "--seed", 1, "--out-slp", a, "--out-sparse", b)[0] == 0
    s = parse_slp(a.read_text())
    assert len(s.instructions) == 1 and s.instructions[0].op == "const"
    assert run("gen", "--terms", 12, "--degree", "2^30", "--ring", "zmod:101", "--seed", 2,
               "--out-slp", a, "--out-sparse", b)[0] == 0
    s = parse_slp(a.read_text())
    f = parse_sparse(b.read_text(), R)
    assert f.ring == s.ring and f.ring.modulus == 101 and f.sparsity() == 12
    for ell in np.random.default_rng(3).integers(1, 5000, 10):
        assert probe(s, int(ell)) == f.reduce_mod_cyclic(int(ell))


def test_gen_infeasible(tmp_path):
    code, _ = run("gen", "--terms", 5, "--degree", 3, "--seed", 1,
                  "--out-slp", tmp_path / "a", "--out-sparse", tmp_path / "b")
    assert code == EXIT_USAGE


def test_interpolate_two_terms(two_term):
    code, text = run("interpolate", "--slp", two_term, "--sparsity", 2, "--degree-bound", 33,
                     "--mu", 0.05, "--verify")
    assert code == EXIT_OK
    body = [ln for ln in text.splitlines() if not ln.startswith("#")]
    assert body == ["1 3", "1 33"]
    assert "# ledger probes=" in text and "# verify ok" in text


def test_interpolate_dense_unsupported(tmp_path, capsys):
    path = tmp_path / "s.slp"
    path.write_text("slp 1\ninputs 1\nring zmod 101\nc0 = mul in0 in0\n")
    code, _ = run("interpolate", "--slp", path, "--sparsity", 1, "--degree-bound", 200, "--algo", "dense")
    assert code == EXIT_USAGE
    assert "modulus > D" in capsys.readouterr().err


def test_recursive_and_gargschost_agree(tmp_path):
    a, b = tmp_path / "i.slp", tmp_path / "i.sparse"
    run("gen", "--terms", 10, "--degree", "2^20", "--seed", 3, "--out-slp", a, "--out-sparse", b)
    outs = {}
    for algo in ("recursive", "gargschost"):
        code, text = run("interpolate", "--slp", a, "--sparsity", 10, "--degree-bound", "2^20",
                         "--seed", 3, "--algo", algo)
        assert code == EXIT_OK
        outs[algo] = "".join(ln + "\n" for ln in text.splitlines() if not ln.startswith("# ledger"))
    assert outs["recursive"] == outs["gargschost"] == b.read_text()


def test_verify_exit_codes(tmp_path, two_term):
    good, bad = tmp_path / "good.sparse", tmp_path / "bad.sparse"
    good.write_text(format_sparse(poly(R, (33, 1), (3, 1))))
    bad.write_text(format_sparse(poly(R, (33, 1), (3, 2))))
    assert run("verify", "--slp", two_term, "--candidate", good, "--sparsity", 2, "--degree-bound", 33)[0] == EXIT_OK
    code, text = run("verify", "--slp", two_term, "--candidate", bad, "--sparsity", 2, "--degree-bound", 33)
    assert code == EXIT_MISMATCH and text.startswith("mismatch")


def test_usage_errors(tmp_path, two_term):
    assert run()[0] == EXIT_USAGE
    assert run("interpolate", "--slp", tmp_path / "missing.slp", "--sparsity", 1, "--degree-bound", 3)[0] == EXIT_USAGE
    assert run("interpolate", "--slp", two_term, "--sparsity", 2, "--degree-bound", 33, "--mu", 2)[0] == EXIT_USAGE
    broken = tmp_path / "broken.slp"
    broken.write_text("slp 1\ninputs 1\nc0 = pow in0 in0\n")
    assert run("interpolate", "--slp", broken, "--sparsity", 1, "--degree-bound", 3)[0] == EXIT_USAGE
    assert run("bench", "--T", 4, "--D", 100, "--trials", 1, "--seed", 0, "--out",
               tmp_path / "x.csv", "--algos", "magic")[0] == EXIT_USAGE


def test_bench_zero_trials_is_header_only(tmp_path):
    out = tmp_path / "b.csv"
    assert run("bench", "--T", 4, "--D", 100, "--trials", 0, "--seed", 0, "--out", out)[0] == 0
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_VERSION and len(lines) == 2 and lines[1].startswith("algorithm,T,D")


def test_bench_dense_row_and_determinism(tmp_path):
    texts = []
    for k in range(2):
        out = tmp_path / f"b{k}.csv"
        assert run("bench", "--T", 4, "--D", "2^20", 500, "--trials", 2, "--seed", 5,
                   "--out", out, "--no-timing")[0] == 0
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]
    rows = read_bench_csv(texts[0].decode())
    assert len(rows) == 2 * 2 * 3
    dense = [r for r in rows if r["algorithm"] == "dense" and r["D"] == str(2**20)]
    assert all(r["probes"] == str(2**20 + 1) and r["max_degree"] == "1" for r in dense)
    ran = [r for r in rows if r["executed"] == "1"]
    assert all(r["success"] == "1" for r in ran)
    small_dense = [r for r in rows if r["algorithm"] == "dense" and r["D"] == "500"]
    assert all(r["executed"] == "1" and r["probes"] == "501" for r in small_dense)


def test_module_entry_point(two_term):
    res = subprocess.run([sys.executable, "-m", "slpinterp", "interpolate", "--slp", str(two_term),
                          "--sparsity", "2", "--degree-bound", "33"], capture_output=True, text=True)
    assert res.returncode == 0 and "1 33" in res.stdout
