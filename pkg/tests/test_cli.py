import io

import pytest

from corpus import u_all_rows, u_one_row
from pictomata import build_witness, save_automaton
from pictomata.cli import dispatch
from pictomata.onedim import load_automaton_1d, save_automaton_1d, simulate_1d
from pictomata.automaton import load_automaton
from corpus import corpus_1d


def run_cli(argv):
    out = io.StringIO()
    status = dispatch(argv, out=out)
    return status, out.getvalue()


@pytest.fixture()
def frz_path(tmp_path):
    p = tmp_path / "frz.aut"
    save_automaton(build_witness("first-row-zeros"), p)
    return str(p)


@pytest.fixture()
def pic_path(tmp_path):
    p = tmp_path / "w.pic"
    p.write_text("000\n")
    return str(p)


def test_validate_ok(frz_path):
    status, out = run_cli(["validate", frz_path])
    assert status == 0
    assert out.startswith("valid: yes")


def test_validate_bad(tmp_path):
    p = tmp_path / "bad.aut"
    p.write_text(
        "automaton bad\nvariant 2W\nmode det\nalphabet 0\nstates q0 acc\n"
        "initial q0\naccept acc\nq0 0 -> q0 L\n"
    )
    status, out = run_cli(["validate", str(p)])
    assert status == 1
    assert "illegal direction" in out


def test_run_accept_and_trace(frz_path, pic_path):
    status, out = run_cli(["run", frz_path, pic_path])
    assert status == 0
    assert out == "verdict: accepted\n"
    status, out = run_cli(["run", frz_path, pic_path, "--trace"])
    assert status == 0
    assert "q0 @ (1,1) reads '0'" in out
    assert out.strip().endswith("verdict: accepted")


def test_run_reject_status(frz_path, tmp_path):
    p = tmp_path / "v.pic"
    p.write_text("1\n")
    status, out = run_cli(["run", frz_path, str(p)])
    assert status == 1
    assert "rejected" in out


def test_enum_report(frz_path):
    status, out = run_cli(["enum", frz_path, "--max-rows", "2", "--max-cols", "2"])
    assert status == 0
    assert out.startswith("count: 8\n")


def test_concat_row(tmp_path):
    a = tmp_path / "a.pic"
    b = tmp_path / "b.pic"
    a.write_text("00\n")
    b.write_text("01\n")
    status, out = run_cli(["concat", "row", str(a), str(b)])
    assert status == 0
    assert out == "00\n01\n"
    b.write_text("011\n")
    status, _ = run_cli(["concat", "row", str(a), str(b)])
    assert status == 2


def test_concat_diag_cap(tmp_path):
    a = tmp_path / "a.pic"
    b = tmp_path / "b.pic"
    a.write_text("0\n")
    b.write_text("0\n")
    status, out = run_cli(["concat", "diag", str(a), str(b)])
    assert status == 0
    assert out.startswith("count: 1\n")  # only '0' occurs, so fillers are forced
    status, _ = run_cli(["concat", "diag", str(a), str(b), "--cap", "0"])
    assert status == 2


def test_construct_ibr_and_witness(tmp_path, frz_path):
    out_path = tmp_path / "ibr.aut"
    status, out = run_cli(["construct", "ibr", frz_path, "-o", str(out_path)])
    assert status == 0
    assert f"written: {out_path}" in out
    load_automaton(out_path)

    wpath = tmp_path / "tlo.aut"
    status, _ = run_cli(["construct", "witness", "top-left-one", "-o", str(wpath)])
    assert status == 0
    assert load_automaton(wpath).name == "top-left-one"

    fpath = tmp_path / "fam.pics"
    status, out = run_cli(["construct", "witness", "thm9-X(2)", "-o", str(fpath)])
    assert status == 0
    assert "words: 16" in out


def test_construct_unary_row_and_equiv(tmp_path):
    a_path, b_path, m_path = (tmp_path / n for n in ("a.aut", "b.aut", "m.aut"))
    save_automaton(u_one_row(), a_path)
    save_automaton(u_all_rows(), b_path)
    status, _ = run_cli(["construct", "unary-row", str(a_path), str(b_path), "-o", str(m_path)])
    assert status == 0
    status, out = run_cli([
        "equiv", str(m_path), "--against-concat", "row", str(a_path), str(b_path),
        "--max-rows", "5", "--max-cols", "5",
    ])
    assert status == 0
    assert out == "verdict: ok\n"


def test_equiv_against_aut_counterexample(tmp_path, frz_path):
    other = tmp_path / "tlo.aut"
    save_automaton(build_witness("top-left-one"), other)
    status, out = run_cli([
        "equiv", frz_path, "--against-aut", str(other), "--max-rows", "2", "--max-cols", "2",
    ])
    assert status == 1
    assert out.startswith("verdict: counterexample\n")
    assert "expected:" in out and "got:" in out


def test_refute_reports_counterexample(tmp_path, frz_path):
    status, out = run_cli([
        "refute", frz_path, "--target-concat", "row", frz_path, frz_path,
        "--max-rows", "3", "--max-cols", "3",
    ])
    assert status == 1
    assert out.startswith("verdict: counterexample\n")


def test_refute_ok_for_correct_construction(tmp_path):
    a_path, b_path, m_path = (tmp_path / n for n in ("a.aut", "b.aut", "m.aut"))
    save_automaton(u_one_row(), a_path)
    save_automaton(u_all_rows(), b_path)
    run_cli(["construct", "unary-row", str(a_path), str(b_path), "-o", str(m_path)])
    status, out = run_cli([
        "refute", str(m_path), "--target-concat", "row", str(a_path), str(b_path),
        "--max-rows", "4", "--max-cols", "4",
    ])
    assert status == 0
    assert out == "verdict: no-counterexample\n"


def test_lemma2_check(tmp_path):
    from corpus import boustro3w

    apath = tmp_path / "b3.aut"
    ppath = tmp_path / "w.pic"
    save_automaton(boustro3w(), apath)
    ppath.write_text("000\n000\n")
    status, out = run_cli(["lemma2-check", str(apath), str(ppath), "--row", "1"])
    assert status == 0
    assert out.startswith("departures: 1\n")
    assert "ok=true" in out


def test_rowsim_and_to_oneway(tmp_path):
    from corpus import t9a

    apath = tmp_path / "a3.aut"
    save_automaton(t9a(), apath)
    npath = tmp_path / "n.aut"
    status, out = run_cli([
        "rowsim", str(apath), "--entry-state", "q0", "--side", "left",
        "--offset", "1", "-o", str(npath),
    ])
    assert status == 0
    n1 = load_automaton_1d(npath)
    opath = tmp_path / "ow.aut"
    status, out = run_cli(["to-oneway", str(npath), "-o", str(opath)])
    assert status == 0
    ow = load_automaton_1d(opath)
    for s in ("", "0", "00", "01", "10"):
        assert simulate_1d(ow, s) == simulate_1d(n1, s)


def test_to_oneway_corpus_round_trip(tmp_path):
    m = corpus_1d()[0]
    path = tmp_path / "m.aut"
    save_automaton_1d(m, path)
    out_path = tmp_path / "m1w.aut"
    status, _ = run_cli(["to-oneway", str(path), "-o", str(out_path)])
    assert status == 0


def test_bound_output():
    status, out = run_cli(["bound", "3"])
    assert status == 0
    assert out.splitlines()[0] == "h(3) = 57"


def test_usage_error_status():
    status, _ = run_cli(["no-such-command"])
    assert status == 2
    status, _ = run_cli(["equiv", "x.aut", "--max-rows", "2", "--max-cols", "2"])
    assert status == 2


def test_reports_deterministic(frz_path):
    _, first = run_cli(["enum", frz_path, "--max-rows", "2", "--max-cols", "2"])
    _, second = run_cli(["enum", frz_path, "--max-rows", "2", "--max-cols", "2"])
    assert first == second
