from __future__ import annotations

import subprocess
import sys

import pytest

from kminor import bounds, certfile
from kminor.builder import build_best
from kminor.cli import main, table_mismatches
from kminor.exceptions import CertificateParseError
from kminor.kneser import Params


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("n, k, expected", [(10, 3, "40"), (4, 2, "3"), (47, 8, "62891499")])
def test_chi(capsys, n, k, expected):
    code, out, _ = run(capsys, "chi", "--n", str(n), "--k", str(k))
    assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("argv", [["chi", "--n", "5", "--k", "3"], ["chi", "--n", "x", "--k", "2"], ["bogus"]])
def test_bad_arguments_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse errors
        code = exc.code
    assert code == 2


def test_bound_rows(capsys):
    code, out, _ = run(capsys, "bound", "--n", "17", "--k", "4", "--header")
    header, row = out.strip().split("\n")
    fields = dict(zip(header.split("\t"), row.split("\t")))
    assert code == 0
    assert (fields["t3"], fields["chi"]) == ("611", "595")
    _, out, _ = run(capsys, "bound", "--n", "8", "--k", "4")
    fields = out.strip().split("\t")
    assert fields[2] == fields[7] == "35" and fields[8] == "Clique"
    _, out, _ = run(capsys, "bound", "--n", "18", "--k", "4")
    assert out.split("\t")[4] == "908"


def test_table_output(capsys):
    code, out, err = run(capsys, "table")
    lines = out.strip().split("\n")
    assert lines[0] == "n\tk\tt1\tchi\tstatus"
    assert len(lines) - 1 == len(bounds.TABLE1_GOLDEN)
    assert "10\t3\t45\t40\tmatch" in lines
    # the three golden entries that disagree with the exact formulas
    mismatched = sorted(l.split("\t")[:2] for l in lines[1:] if l.endswith("MISMATCH"))
    assert mismatched == [["29", "6"], ["32", "5"], ["40", "6"]]
    assert code == 1 and "3 row(s) differ" in err


def test_table_is_deterministic(capsys):
    _, first, _ = run(capsys, "table")
    _, second, _ = run(capsys, "table")
    assert first == second


def test_table_harness_detects_tampering():
    computed_golden = [tuple(row) for row in bounds.table1()]
    assert table_mismatches(computed_golden) == []
    tampered = list(computed_golden)
    n, k, t1, chi = tampered[5]
    tampered[5] = (n, k, t1 + 1, chi)
    assert len(table_mismatches(tampered)) == 1
    assert len(table_mismatches(tampered[:-1])) >= 1


def test_build_and_verify_roundtrip(capsys, tmp_path):
    path = tmp_path / "c.txt"
    code, out, _ = run(capsys, "build", "--n", "5", "--k", "2", "-o", str(path))
    assert code == 0 and "t=5" in out
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert out.strip().split("\n")[-1] == "PASS t=5"
    assert "check odd-witness: ok" in out


@pytest.mark.parametrize(
    "construction, n, k, t", [("3", 8, 3, 30), ("auto", 10, 3, 45), ("0", 8, 4, 35), ("0b", 7, 2, 7)]
)
def test_build_constructions(capsys, tmp_path, construction, n, k, t):
    path = tmp_path / "c.txt"
    code, _, _ = run(capsys, "build", "--n", str(n), "--k", str(k), "--construction", construction, "-o", str(path))
    assert code == 0
    cert = certfile.parse(path.read_text())
    assert cert.claimed_t == t
    assert run(capsys, "verify", str(path))[0] == 0


def test_build_to_stdout(capsys):
    code, out, _ = run(capsys, "build", "--n", "5", "--k", "2", "-o", "-")
    assert code == 0 and out.startswith("KMINOR v1\nn=5 k=2 t=5\n") and out.endswith("end\n")


def test_build_cap_exit_3(capsys, tmp_path, monkeypatch):
    path = tmp_path / "c.txt"
    code, _, err = run(capsys, "build", "--n", "12", "--k", "6", "--cap", "100", "-o", str(path))
    assert code == 3 and "cap" in err and not path.exists()
    monkeypatch.setenv("KMINOR_BUILD_CAP", "50")
    assert run(capsys, "build", "--n", "9", "--k", "3", "-o", str(path))[0] == 3
    assert not path.exists()


def test_build_engine_failure_exit_4(capsys, tmp_path):
    # construction 0b needs k = 2 and odd n
    path = tmp_path / "c.txt"
    code, _, err = run(capsys, "build", "--n", "8", "--k", "2", "--construction", "0b", "-o", str(path))
    assert code == 4 and "construction failed" in err and not path.exists()


def test_verify_corrupted_file_exit_1(capsys, tmp_path):
    text = certfile.serialize(build_best(Params(10, 3)))
    lines = text.split("\n")
    # bag 1 repeats bag 0's vertex
    lines[3] = lines[3].replace(lines[3].split()[-1], lines[2].split()[-1])
    path = tmp_path / "bad.txt"
    path.write_text("\n".join(lines))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and out.strip().endswith("FAIL t=45")


def test_verify_truncated_file_exit_2(capsys, tmp_path):
    text = certfile.serialize(build_best(Params(10, 3)))
    path = tmp_path / "cut.txt"
    path.write_text(text[: len(text) // 2])
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 2 and "parse error" in out


def test_verify_missing_file_exit_2(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "nope.txt"))[0] == 2


@pytest.mark.parametrize(
    "text",
    [
        "",
        "KMINOR v1\nn=5 k=2 t=1\nbag 0 single 1,2\nend",  # no final newline
        "KMINOR v2\nn=5 k=2 t=1\nbag 0 single 1,2\nend\n",
        "KMINOR v1\nn=5 k=3 t=1\nbag 0 single 1,2,3\nend\n",  # n < 2k
        "KMINOR v1\nn=5 k=2 t=1\nbag 1 single 1,2\nend\n",  # index must start at 0
        "KMINOR v1\nn=5 k=2 t=1\nbag 0 single 2,1\nend\n",
        "KMINOR v1\nn=5 k=2 t=1\nbag 0 pair 1,2\nend\n",
        "KMINOR v1\nn=5 k=2 t=1\nbag 0 star center=1,2 leaves=\nend\n",
        "KMINOR v1\nn=5 k=2 t=1\nbag 0 single 1,2\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(CertificateParseError):
        certfile.parse(text)


@pytest.mark.parametrize("n, k", [(5, 2), (8, 3), (10, 3), (14, 3), (8, 4), (11, 4)])
def test_certificate_roundtrip(n, k):
    cert = build_best(Params(n, k))
    text = certfile.serialize(cert)
    assert certfile.parse(text) == cert
    assert certfile.serialize(certfile.parse(text)) == text


def test_sweep_small(capsys):
    code, out, err = run(capsys, "sweep", "--k-max", "2", "--n-max", "10")
    rows = [l.split("\t") for l in out.strip().split("\n")]
    assert code == 0 and len(rows) == 7
    assert all(r[-1] == "PASS" for r in rows)
    assert {r[4] for r in rows} == {"Clique", "K2Odd"}


def test_sweep_row_count_and_order(capsys):
    code, out, _ = run(capsys, "sweep", "--k-max", "8", "--n-max", "50", "--jobs", "2")
    rows = [l.split("\t") for l in out.strip().split("\n")]
    assert code == 0
    assert len(rows) == sum(50 - 2 * k + 1 for k in range(2, 9))
    keys = [(int(r[1]), int(r[0])) for r in rows]
    assert keys == sorted(keys)
    assert all(r[-1] == "PASS" for r in rows)


def test_audit_examples(capsys):
    code, out, _ = run(capsys, "audit", "--k-max", "6", "--n-max", "40")
    rows = {(int(r[0]), int(r[1])): r for r in (l.split("\t") for l in out.strip().split("\n"))}
    assert code == 0
    assert rows[(17, 4)][2] == "Special17_4" and rows[(17, 4)][-1] == "PASS"
    assert rows[(29, 6)][2] == "Table1"
    assert rows[(14, 5)][2] == "T3(a)" and rows[(14, 5)][-1] == "PASS"
    assert "Uncovered" not in out


def test_module_entry_point(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "kminor", "chi", "--n", "17", "--k", "4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0 and result.stdout.strip() == "595"
