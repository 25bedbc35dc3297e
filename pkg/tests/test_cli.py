"""The command-line interface: exit codes, formats, determinism."""

import json
import math

import pytest

from xapprox.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


# --- eval -----------------------------------------------------------------------

def test_eval_kernel_node_error_is_zero(capsys):
    code, out, _ = run(capsys, "eval", "--kernel", "exp", "--lambda", "1",
                       "--x", "2.5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,target,approximant,error"
    cells = lines[1].split(",")
    assert float(cells[0]) == 2.5
    assert cells[3] == "0"  # exact zero at an interpolation node


def test_eval_defaults_to_kernel_mode_and_requires_lambda(capsys):
    code, _, err = run(capsys, "eval", "--x", "1.0")
    assert code == 2
    assert "lambda" in err


def test_eval_rejects_kernel_and_measure_together(capsys):
    code, _, err = run(capsys, "eval", "--kernel", "exp", "--measure", "haar",
                       "--lambda", "1", "--x", "1.0")
    assert code == 2
    assert "either" in err


def test_eval_haar_sign_at_quarter(capsys):
    code, out, _ = run(capsys, "eval", "--measure", "haar", "--x", "0.25")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert float(row[1]) == pytest.approx(math.log(0.25), rel=1e-15)
    assert float(row[3]) < 0.0  # error sign = sign of cos(pi x) pattern


def test_eval_power_node(capsys):
    code, out, _ = run(capsys, "eval", "--measure", "power", "--sigma", "1.5",
                       "--x", "-2.5")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert float(row[1]) == pytest.approx(math.sqrt(2.5), rel=1e-14)
    assert abs(float(row[3])) < 1e-11


def test_eval_measure_json_and_range(capsys):
    code, out, _ = run(capsys, "eval", "--measure",
                       '{"kind":"points","masses":[[1.0,1.0]]}',
                       "--x-range", "0.5:2.5:0.5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 5  # header + inclusive endpoints
    err_at_half = float(lines[1].split(",")[3])
    assert err_at_half == 0.0


def test_eval_periodic_needs_degree(capsys):
    code, _, err = run(capsys, "eval", "--periodic", "--measure", "haar",
                       "--x", "0.2")
    assert code == 2
    assert "degree" in err


def test_eval_json_format(capsys):
    code, out, _ = run(capsys, "eval", "--measure", "haar", "--x", "0.25",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["x"] == 0.25
    assert payload[0]["target"] == pytest.approx(math.log(0.25))


# --- coeffs ----------------------------------------------------------------------

def test_coeffs_exports_full_spectrum(capsys):
    code, out, _ = run(capsys, "coeffs", "--kernel", "exp", "--lambda", "1",
                       "--degree", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["degree"] == 3
    assert len(obj["coeffs"]) == 7
    by_n = {row[0]: row[1] for row in obj["coeffs"]}
    assert by_n[2] == by_n[-2]  # even symmetry


def test_coeffs_negated_haar_constant(capsys):
    code, out, _ = run(capsys, "coeffs", "--measure", "haar", "--degree", "0",
                       "--negate-for-vn")
    assert code == 0
    obj = json.loads(out)
    assert obj["coeffs"][0][1] == pytest.approx(math.log(2.0) / 2.0, abs=1e-10)


def test_coeffs_degree_required(capsys):
    code, _, err = run(capsys, "coeffs", "--kernel", "exp", "--lambda", "1")
    assert code == 2
    assert "degree" in err


# --- error-table -------------------------------------------------------------------

def test_error_table_kernel_grid(capsys):
    code, out, _ = run(capsys, "error-table", "--kernel", "exp",
                       "--lambda", "0.5:4:0.5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "param,closed_form,quadrature,abs_diff"
    assert len(lines) == 1 + 8
    # closed form in column 2, verification columns empty without --verify
    assert lines[1].endswith(",,")


def test_error_table_with_verification(capsys):
    code, out, _ = run(capsys, "error-table", "--kernel", "exp", "--lambda", "1",
                       "--verify")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert float(row[3]) < 1e-8


def test_error_table_periodic_degree_grid(capsys):
    code, out, _ = run(capsys, "error-table", "--measure", "haar",
                       "--degree", "0:3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    # degree-N error decreases like 1/(2N+2)
    closed = [float(l.split(",")[1]) for l in lines[1:]]
    assert closed == sorted(closed, reverse=True)
    assert closed[0] / closed[3] == pytest.approx(4.0, rel=1e-12)


def test_error_table_measure_single_row(capsys):
    code, out, _ = run(capsys, "error-table", "--measure", "power",
                       "--sigma", "0.5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    row = lines[1].split(",")
    assert float(row[0]) == 0.5  # param column carries sigma


def test_error_table_negative_degree_rejected(capsys):
    code, _, err = run(capsys, "error-table", "--measure", "haar",
                       "--degree", "-1")
    assert code == 2
    assert "degree" in err


def test_error_table_empty_grid_rejected(capsys):
    code, _, err = run(capsys, "error-table", "--kernel", "exp",
                       "--lambda", "5:1")
    assert code == 2
    assert "grid" in err or "empty" in err


# --- plot-data -----------------------------------------------------------------------

def test_plot_data_row_count_and_default_periodic_range(capsys):
    code, out, _ = run(capsys, "plot-data", "--periodic", "--measure", "haar",
                       "--degree", "2", "--samples", "601")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 602
    assert lines[1].split(",")[0] == "0"
    assert lines[-1].split(",")[0] == "1"
    # the log target blows up at the integer points
    assert lines[1].split(",")[1] == "-inf"


def test_plot_data_requires_range_on_the_line(capsys):
    code, _, err = run(capsys, "plot-data", "--kernel", "exp", "--lambda", "1",
                       "--samples", "10")
    assert code == 2
    assert "x-range" in err


def test_plot_data_needs_two_samples(capsys):
    code, _, err = run(capsys, "plot-data", "--kernel", "exp", "--lambda", "1",
                       "--x-range", "0:1", "--samples", "1")
    assert code == 2
    assert "samples" in err


def test_plot_data_negative_range_values(capsys):
    code, out, _ = run(capsys, "plot-data", "--kernel", "exp", "--lambda", "1",
                       "--x-range", "-1:1", "--samples", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert float(lines[1].split(",")[0]) == -1.0


def test_plot_data_json_nulls_for_nonfinite(capsys):
    code, out, _ = run(capsys, "plot-data", "--periodic", "--measure", "haar",
                       "--degree", "0", "--samples", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["target"] is None  # -inf at x = 0
    assert payload[1]["target"] is not None


# --- verify ----------------------------------------------------------------------------

def test_verify_single_check_table(capsys):
    code, out, _ = run(capsys, "verify", "--only", "thm1_1_lambda1")
    assert code == 0
    assert "PASS" in out
    assert len(out.strip().splitlines()) == 2


def test_verify_comma_list_json(capsys):
    code, out, _ = run(capsys, "verify", "--only", "catalan_digits,khat_edge_zero",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    # reports come back in registration order, not selection order
    assert [r["name"] for r in payload] == ["khat_edge_zero", "catalan_digits"]
    assert all(r["passed"] for r in payload)


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--only", "bogus")
    assert code == 2
    assert err.strip() == "error: unknown check name: 'bogus'"


# --- output plumbing ---------------------------------------------------------------------

def test_output_file_and_byte_identical_reruns(tmp_path, capsys):
    f1 = tmp_path / "a.csv"
    f2 = tmp_path / "b.csv"
    for f in (f1, f2):
        code = main(["eval", "--measure", "haar", "--x", "0.3", "--x", "0.7",
                     "--output", str(f)])
        assert code == 0
    capsys.readouterr()
    b1, b2 = f1.read_bytes(), f2.read_bytes()
    assert b1 == b2
    assert b"\r" not in b1  # plain \n line endings
    assert b1.decode().count("\n") == 3


def test_seventeen_digit_floats(capsys):
    # the printed value must round-trip the library float exactly; comparing
    # against 2 - 2/cosh(0.5) in doubles would lose two digits to cancellation
    from xapprox.expkernel import l1_error_exp

    code, out, _ = run(capsys, "error-table", "--kernel", "exp", "--lambda", "1")
    closed = out.strip().splitlines()[1].split(",")[1]
    assert closed == format(l1_error_exp(1.0, 1.0), ".17g")
    assert float(closed) == pytest.approx(2.0 - 2.0 / math.cosh(0.5), rel=1e-14)


def test_unknown_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
