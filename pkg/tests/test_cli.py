"""CLI commands, document validation, exit codes, and byte stability."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from icochains import GroupContext, bockstein_cocycle, carry_cocycle, exponent_cocycle
from icochains.cli import (
    EXIT_BUDGET,
    EXIT_INVALID,
    EXIT_NOT_COCYCLE,
    EXIT_OK,
    EXIT_USAGE,
    DocumentError,
    algebra_document,
    cochain_document,
    dumps_document,
    main,
    parse_algebra_document,
    parse_cochain_document,
)

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_document_round_trip():
    ctx = GroupContext(3, 2)
    f = bockstein_cocycle(ctx, 2)
    text = dumps_document(cochain_document(f, "icochain"))
    parsed, kind = parse_cochain_document(text)
    assert kind == "icochain"
    assert parsed == f
    # stable bytes on re-emission
    assert dumps_document(cochain_document(parsed, kind)) == text


def test_document_validation_messages():
    base = {
        "schema_version": "1", "p": 3, "r": 1, "n": 1,
        "kind": "icochain", "coeff_ring": "Fp",
        "entries": [{"key": [[1]], "value": 1}],
    }
    def broken(**changes):
        doc = dict(base)
        doc.update(changes)
        return json.dumps(doc)

    with pytest.raises(DocumentError, match="schema_version"):
        parse_cochain_document(broken(schema_version="2"))
    with pytest.raises(DocumentError, match="prime"):
        parse_cochain_document(broken(p=4))
    with pytest.raises(DocumentError, match="kind"):
        parse_cochain_document(broken(kind="chain"))
    with pytest.raises(DocumentError, match="entries\\[0\\].key\\[0\\]"):
        parse_cochain_document(broken(entries=[{"key": [[0]], "value": 1}]))
    with pytest.raises(DocumentError, match="entries\\[0\\].value"):
        parse_cochain_document(broken(entries=[{"key": [[1]], "value": 0}]))
    with pytest.raises(DocumentError, match="\\[1, 3\\)"):
        parse_cochain_document(broken(entries=[{"key": [[1]], "value": 7}]))
    with pytest.raises(DocumentError, match="duplicate"):
        parse_cochain_document(broken(entries=[
            {"key": [[1]], "value": 1}, {"key": [[1]], "value": 2}]))
    with pytest.raises(DocumentError, match="invalid JSON"):
        parse_cochain_document("{nope")


def test_algebra_document_round_trip():
    text = (GOLDEN / "h1_p3r1.expected.json").read_text()
    e = parse_algebra_document(text)
    assert e.terms == {(2,): 1}
    assert dumps_document(algebra_document(e)) == text


def test_invert_golden_files(capsys):
    for name, expected_terms in [
        ("h1_p3r1", {(2,): 1}),
        ("zero_p2r1", {}),
        ("z1_p2r1", {(2,): 1}),
    ]:
        outputs = []
        for _ in range(2):
            code, out, err = run_cli(capsys, "invert", "--in", str(GOLDEN / f"{name}.json"))
            assert code == EXIT_OK, err
            outputs.append(out)
        assert outputs[0] == outputs[1], f"{name}: output not byte-stable"
        assert outputs[0] == (GOLDEN / f"{name}.expected.json").read_text()
        assert parse_algebra_document(outputs[0]).terms == expected_terms


def test_invert_reads_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO((GOLDEN / "h1_p3r1.json").read_text()))
    code, out, err = run_cli(capsys, "invert", "--in", "-")
    assert code == EXIT_OK, err
    assert parse_algebra_document(out).terms == {(2,): 1}


def test_invert_override_flag(tmp_path, capsys):
    path = write_doc(tmp_path, "z.json", (GOLDEN / "z1_p2r1.json").read_text())
    code, out_n, _ = run_cli(capsys, "invert", "--in", path, "--normalized")
    code2, out_i, _ = run_cli(capsys, "invert", "--in", path, "--icochain")
    assert code == code2 == EXIT_OK
    assert out_n == out_i  # the correspondence is value-for-value


def test_tau_invert_round_trip(capsys):
    code, tau_out, _ = run_cli(capsys, "tau", "--p", "3", "--r", "1", "--sig", "2")
    assert code == EXIT_OK
    parsed, kind = parse_cochain_document(tau_out)
    assert kind == "icochain"
    assert parsed == bockstein_cocycle(GroupContext(3, 1), 1)


def test_tau_invert_pipeline(tmp_path, capsys):
    for p, r, sig, expected in [
        (3, 1, "2", {(2,): 1}),
        (2, 2, "1,1", {(1, 1): 1}),
        (5, 1, "3", {(3,): 1}),
    ]:
        code, tau_out, _ = run_cli(capsys, "tau", "--p", str(p), "--r", str(r), "--sig", sig)
        assert code == EXIT_OK
        path = write_doc(tmp_path, "tau.json", tau_out)
        code, inv_out, err = run_cli(capsys, "invert", "--in", path)
        assert code == EXIT_OK, err
        assert parse_algebra_document(inv_out).terms == expected


def test_tau_invert_all_small_signatures(tmp_path, capsys):
    # every signature of degree <= 4 survives the full CLI round trip
    from icochains import compositions

    for p, r in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]:
        for n in range(5):
            for sig in compositions(n, r):
                sig_arg = ",".join(map(str, sig))
                code, tau_out, _ = run_cli(capsys, "tau", "--p", str(p),
                                           "--r", str(r), "--sig", sig_arg)
                assert code == EXIT_OK
                path = write_doc(tmp_path, "tau.json", tau_out)
                code, inv_out, err = run_cli(capsys, "invert", "--in", path)
                assert code == EXIT_OK, err
                assert parse_algebra_document(inv_out).terms == {sig: 1}, (p, r, sig)


def test_cup_command(tmp_path, capsys):
    ctx = GroupContext(2, 2)
    f1 = exponent_cocycle(ctx, 1)
    path1 = write_doc(tmp_path, "f1.json",
                      dumps_document(cochain_document(f1, "icochain")))
    code, out, _ = run_cli(capsys, "cup", "--in", path1, "--in", path1)
    assert code == EXIT_OK
    parsed, _ = parse_cochain_document(out)
    assert parsed == f1.cup(f1)
    code, _, err = run_cli(capsys, "cup", "--in", path1)
    assert code == EXIT_INVALID


def test_d_command_and_check_cocycle(tmp_path, capsys):
    doc = {
        "schema_version": "1", "p": 3, "r": 1, "n": 1,
        "kind": "icochain", "coeff_ring": "Fp",
        "entries": [{"key": [[1]], "value": 1}, {"key": [[2]], "value": 1}],
    }
    path = write_doc(tmp_path, "f.json", json.dumps(doc))
    code, out, _ = run_cli(capsys, "check-cocycle", "--in", path)
    assert code == EXIT_NOT_COCYCLE
    assert out.strip() == "false"
    code, out, _ = run_cli(capsys, "d", "--in", path)
    assert code == EXIT_OK
    d_doc, kind = parse_cochain_document(out)
    assert kind == "icochain" and d_doc.degree == 2 and not d_doc.is_zero()
    # the coboundary is itself a cocycle
    path2 = write_doc(tmp_path, "df.json", out)
    code, out, _ = run_cli(capsys, "check-cocycle", "--in", path2)
    assert code == EXIT_OK
    assert out.strip() == "true"


def test_invert_rejects_non_cocycle(tmp_path, capsys):
    doc = {
        "schema_version": "1", "p": 3, "r": 1, "n": 1,
        "kind": "icochain", "coeff_ring": "Fp",
        "entries": [{"key": [[1]], "value": 1}, {"key": [[2]], "value": 1}],
    }
    path = write_doc(tmp_path, "f.json", json.dumps(doc))
    code, _, err = run_cli(capsys, "invert", "--in", path)
    assert code == EXIT_NOT_COCYCLE
    assert "not a cocycle" in err
    code, out, _ = run_cli(capsys, "invert", "--in", path, "--unchecked")
    assert code == EXIT_OK
    assert parse_algebra_document(out).terms == {(1,): 1}


def test_invert_rejects_integer_coefficients(tmp_path, capsys):
    ctx = GroupContext(2, 1)
    doc = dumps_document(cochain_document(carry_cocycle(ctx, 1), "normalized"))
    doc = doc.replace('"Fp"', '"Z"')
    path = write_doc(tmp_path, "z.json", doc)
    code, _, err = run_cli(capsys, "invert", "--in", path)
    assert code == EXIT_INVALID
    assert "mod-p" in err


def test_dims_output(capsys):
    code, out, _ = run_cli(capsys, "dims", "--p", "3", "--r", "2", "--max-n", "3")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].split() == ["n", "dim_C", "dim_Z", "dim_B", "dim_H", "expected_H"]
    assert [line.split()[4] for line in lines[1:]] == ["1", "2", "3", "4"]
    assert [line.split()[5] for line in lines[1:]] == ["1", "2", "3", "4"]


def test_dims_budget_exit(capsys):
    code, out, err = run_cli(capsys, "dims", "--p", "3", "--r", "2",
                             "--max-n", "3", "--budget", "1000")
    assert code == EXIT_BUDGET
    assert "entries" in err and out == ""


def test_count_terms_command(capsys):
    code, out, _ = run_cli(capsys, "count-terms", "--p", "2", "--r", "2", "--n", "3")
    assert code == EXIT_OK
    assert out.strip() == "8"


def test_malformed_input_exit(tmp_path, capsys):
    path = write_doc(tmp_path, "bad.json", "{broken")
    code, _, err = run_cli(capsys, "invert", "--in", path)
    assert code == EXIT_INVALID
    assert "invalid JSON" in err
    code, _, err = run_cli(capsys, "invert", "--in", str(tmp_path / "missing.json"))
    assert code == EXIT_INVALID


def test_usage_errors_exit_64():
    with pytest.raises(SystemExit) as info:
        main(["invert", "--bogus"])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == EXIT_USAGE
    assert main([]) == EXIT_USAGE


def test_cli_as_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "icochains.cli", "count-terms",
         "--p", "3", "--r", "1", "--n", "2"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout.strip() == "2"
    result = subprocess.run(
        [sys.executable, "-m", "icochains.cli", "dims", "--bad-flag"],
        capture_output=True, text=True)
    assert result.returncode == EXIT_USAGE
