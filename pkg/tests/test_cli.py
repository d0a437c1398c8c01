import json
import subprocess
import sys

import pytest

from rhl.cli import main
from rhl.hypergraph import read_coloring


def run(capsys, *argv):
    code = main(["--threads", "1", *argv])
    out, err = capsys.readouterr()
    return code, out, err


def fields(out: str) -> dict:
    d = {}
    for line in out.splitlines():
        if ": " in line:
            k, v = line.split(": ", 1)
            d.setdefault(k, v)
    return d


def test_gen_check_certify_round_trip(tmp_path, capsys):
    f = tmp_path / "t9.col"
    code, out, _ = run(capsys, "gen", "--construction", "TIGHT_LB", "--n", "9", "-o", str(f))
    assert code == 0 and fields(out)["palette"] == "4"
    code, out, _ = run(capsys, "check", "--pattern", "TIGHT_T", str(f))
    assert code == 0 and fields(out)["rainbow"] == "none"
    cert = tmp_path / "t9.json"
    code, out, _ = run(capsys, "certify", "--theorem", "tight", "--cert-out", str(cert), str(f))
    assert code == 0 and fields(out)["case"] == "TIGHT_PARTITION"
    code, out, _ = run(capsys, "certify", "--theorem", "tight", "--cert", str(cert), str(f))
    assert code == 0 and fields(out)["verified"] == "yes"
    g = tmp_path / "again.col"
    run(capsys, "gen", "--construction", "tight-lb", "--n", "9", "-o", str(g))
    assert f.read_bytes() == g.read_bytes()


def test_gen_to_stdout_parses(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--construction", "MESSY_K6")
    assert code == 0 and out.startswith("host complete 6")
    p = tmp_path / "m.col"
    p.write_text(out)
    assert read_coloring(p).palette_size == 10


def test_check_finds_rainbow_and_mono(tmp_path, capsys):
    f = tmp_path / "m6.col"
    run(capsys, "gen", "--construction", "MESSY_K6", "-o", str(f))
    code, out, _ = run(capsys, "check", "--pattern", "TIGHT_T", str(f))
    assert code == 1 and fields(out)["rainbow"] == "found"
    assert len(fields(out)["witness_edge_ids"].split()) == 3
    s = tmp_path / "s.col"
    run(capsys, "gen", "--construction", "STAR_CLIQUE2", "--n", "6", "-o", str(s))
    code, out, _ = run(capsys, "check", "--mono", "--pattern", "MATCHING2", str(s))
    assert code == 0 and fields(out)["monochromatic"] == "none"


def test_certify_rejects_and_flags_bad_certificate(tmp_path, capsys):
    f = tmp_path / "m6.col"
    run(capsys, "gen", "--construction", "MESSY_K6", "-o", str(f))
    code, out, _ = run(capsys, "certify", "--theorem", "tight", str(f))
    assert code == 1 and fields(out)["status"] == "rejected"
    t = tmp_path / "t.col"
    run(capsys, "gen", "--construction", "TIGHT_LB", "--n", "9", "-o", str(t))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"case": "MONO_MINUS_VERTEX", "u": 0, "color": 0}))
    code, out, _ = run(capsys, "certify", "--theorem", "tight", "--cert", str(bad), str(t))
    assert code == 1 and fields(out)["verified"] == "no" and "failing_clause" in fields(out)


def test_certify_messy_verdict(tmp_path, capsys):
    f = tmp_path / "l.col"
    run(capsys, "gen", "--construction", "LOOSE_LB", "--n", "8", "-o", str(f))
    code, out, _ = run(capsys, "certify", "--theorem", "messy", str(f))
    assert code == 0 and fields(out)["status"] == "RAINBOW_WITNESS"


def test_sampled_cases_through_cli(tmp_path, capsys):
    for case, theorem, n in (("SPECIAL_EDGE3", "loose-plus", 8), ("MP_FIVE_VERTEX", "mp-loose", 3)):
        f = tmp_path / f"{case}.col"
        assert run(capsys, "gen", "--construction", case, "--n", str(n), "--seed", "2", "-o", str(f))[0] == 0
        code, out, _ = run(capsys, "certify", "--theorem", theorem, str(f))
        assert code == 0 and fields(out)["status"] == "accepted"


def test_ar_values_and_witness(tmp_path, capsys):
    w = tmp_path / "w.col"
    code, out, _ = run(capsys, "ar", "--n", "6", "--pattern", "T", "--witness-out", str(w))
    assert code == 0 and fields(out)["value"] == "4"
    assert read_coloring(w).palette_size == 3
    code, out, _ = run(capsys, "ar", "--host", "tripartite", "--n", "3", "--pattern", "M")
    assert code == 0 and fields(out)["value"] == "4"


def test_ar_inconclusive(capsys):
    code, out, _ = run(capsys, "ar", "--n", "7", "--pattern", "L", "--budget-nodes", "100")
    assert code == 2
    assert fields(out)["status"] == "INCONCLUSIVE" and "lower_bound" in fields(out)


def test_ramsey2(capsys):
    code, out, _ = run(capsys, "ramsey2", "--n", "6", "--target", "MATCHING2")
    assert code == 0 and fields(out)["witness"] == "found"
    code, out, _ = run(capsys, "ramsey2", "--n", "7", "--target", "MATCHING2")
    assert code == 0 and fields(out)["witness"] == "none"


def test_constrained(capsys):
    code, out, _ = run(capsys, "constrained", "--target", "MATCHING2", "--path", "M")
    d = fields(out)
    assert code == 0 and d["R2"] == "7" and d["f"] == "7" and d["equality"] == "asserted"
    code, out, _ = run(capsys, "constrained", "--target", "TIGHT_T", "--path", "M")
    assert code == 1 and fields(out)["hypothesis_met"] == "no"


def test_canonical(capsys):
    code, out, _ = run(capsys, "canonical", "--t", "3", "--host", "tripartite", "--H", "MATCHING2", "--G", "L")
    assert code == 0 and fields(out)["exists_at_t"] == "yes"
    assert sum(1 for line in out.splitlines() if line.startswith("row: ")) == 8


def test_json_format(tmp_path, capsys):
    f = tmp_path / "t.col"
    run(capsys, "gen", "--construction", "TIGHT_LB", "--n", "9", "-o", str(f))
    code, out, _ = run(capsys, "--format", "json", "certify", "--theorem", "tight", str(f))
    d = json.loads(out)
    assert code == 0 and d["certificate"]["case"] == "TIGHT_PARTITION"
    code, out, _ = run(capsys, "--format", "json", "canonical", "--t", "2", "--host", "tripartite",
                       "--H", "MATCHING2", "--G", "T")
    assert isinstance(json.loads(out)["row"], list)


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "copy-counts")
    assert code == 0 and "PASS" in fields(out)["criterion"]


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--construction", "NOPE", "--n", "5"],
        ["gen", "--construction", "TIGHT_LB", "--n", "3"],
        ["check", "--pattern", "T", "/no/such/file"],
        ["ar", "--n", "6", "--pattern", "NOPE"],
        ["ar", "--n", "2", "--pattern", "T"],
        ["ar", "--n", "6", "--pattern", "SINGLE_EDGE"],
        ["verify", "--suite", "nope"],
        ["canonical", "--t", "7", "--host", "tripartite", "--H", "MATCHING2", "--G", "T"],
        ["certify", "--theorem", "wrong", "x"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_3(argv, capsys):
    assert run(capsys, *argv)[0] == 3


def test_parse_error_exit_3(tmp_path, capsys):
    f = tmp_path / "bad.col"
    f.write_text("host complete 5\ne 0 1 2 c 0\n")
    code, _, err = run(capsys, "check", "--pattern", "T", str(f))
    assert code == 3 and "missing" in err


def test_console_script_module_entry():
    proc = subprocess.run([sys.executable, "-m", "rhl.cli", "--threads", "1", "verify", "--suite", "copy-counts"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
