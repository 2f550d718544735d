"""End-to-end tests of the command-line interface."""

import json

import pytest

from cdalgebra.cli import field_from_dict, field_to_dict, run, table_from_dict
from cdalgebra.twist import build_table
from cdalgebra.algebra import Convention


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTwistCommand:
    def test_pinned_sign(self, capsys):
        code, out, _ = invoke(capsys, "twist", "--t", "2", "--p", "1", "--q", "2")
        assert code == 0
        assert out == "sign=+1 index=3\n"

    def test_left_convention_flips(self, capsys):
        code, out, _ = invoke(capsys, "twist", "--t", "2", "--p", "1", "--q", "2",
                              "--convention", "eq31")
        assert code == 0
        assert out == "sign=-1 index=3\n"

    def test_out_of_range_is_contract_error(self, capsys):
        code, _, err = invoke(capsys, "twist", "--t", "2", "--p", "9", "--q", "0")
        assert code == 1
        assert "error" in err


class TestMulTable:
    def test_csv_header_and_shape(self, capsys):
        code, out, _ = invoke(capsys, "mul-table", "--t", "2",
                              "--gammas", "-1,-1", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "p,q,index,sign,gamma_mask"
        assert len(lines) == 1 + 16
        assert lines[1] == "0,0,0,1,00"

    def test_json_round_trip(self, capsys):
        code, out, _ = invoke(capsys, "mul-table", "--t", "3",
                              "--gammas", "-1,2,1/2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["gammas"] == ["-1", "2", "1/2"]
        rebuilt = table_from_dict(data)
        assert rebuilt == build_table(3, Convention.CONJUGATE_RIGHT)

    def test_gamma_count_validated(self, capsys):
        code, _, err = invoke(capsys, "mul-table", "--t", "2", "--gammas", "-1")
        assert code == 1
        assert "error" in err

    def test_deterministic_output(self, capsys):
        _, first, _ = invoke(capsys, "mul-table", "--t", "4",
                             "--gammas", "-1,-1,-1,-1", "--format", "json")
        _, second, _ = invoke(capsys, "mul-table", "--t", "4",
                              "--gammas", "-1,-1,-1,-1", "--format", "json")
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, out, _ = invoke(capsys, "mul-table", "--t", "1", "--gammas", "-1",
                              "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("p,q,index,sign,gamma_mask")


class TestBlocks:
    def test_depth_four_summary(self, capsys):
        code, out, _ = invoke(capsys, "blocks", "--t", "4")
        assert code == 0
        assert out.strip().endswith("all 64 blocks classified: PASS")

    def test_depth_one_matrix(self, capsys):
        code, out, _ = invoke(capsys, "blocks", "--t", "1")
        assert code == 0
        assert out.splitlines()[0].strip() == "A0"


class TestVerify:
    def test_residue_suite(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "residue")
        assert code == 0
        assert "residue:" in out
        assert "0 failures" in out

    def test_core_suite_small(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "core",
                              "--samples", "5", "--t", "2")
        assert code == 0
        assert "core:" in out


class TestFibNorm:
    def test_equal_verdict(self, capsys):
        code, out, _ = invoke(capsys, "fib-norm", "--n", "3",
                              "--alpha1", "1", "--alpha2", "1")
        assert code == 0
        assert out == "direct=102\nformula=102\nequal=true\n"

    def test_rational_parameters(self, capsys):
        code, out, _ = invoke(capsys, "fib-norm", "--n", "5",
                              "--alpha1", "2/3", "--alpha2", "-7/2")
        assert code == 0
        assert "equal=true" in out


class TestThreshold:
    def test_unit_parameters(self, capsys):
        code, out, _ = invoke(capsys, "threshold", "--alpha1", "1",
                              "--alpha2", "1")
        assert code == 0
        assert "energy_sign=+1" in out
        assert "n0=0" in out

    def test_negative_parameters(self, capsys):
        code, out, _ = invoke(capsys, "threshold", "--alpha1", "-1",
                              "--alpha2", "-1", "--nmax", "200")
        assert code == 0
        assert "n0=" in out


class TestResidueFieldCommand:
    ARGS = ("--pi", "-1,2", "--w", "1,1,1,1", "--t", "2")

    def test_golden_table_csv(self, capsys):
        code, out, _ = invoke(capsys, "residue-field", "--p", "13", *self.ARGS)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "k,a,b,norm,element"
        assert len(lines) == 14
        assert lines[5] == "4,-3,1,7,-3+w"
        assert lines[13] == "12,-1,0,1,-1"

    def test_json_form(self, capsys):
        code, out, _ = invoke(capsys, "residue-field", "--format", "json",
                              *self.ARGS)
        assert code == 0
        data = json.loads(out)
        assert data["p"] == 13
        assert data["s"] == 7
        assert data["labels"][4] == {"k": 4, "a": -3, "b": 1, "norm": 7}

    def test_json_round_trip(self, capsys):
        code, out, _ = invoke(capsys, "residue-field", "--format", "json",
                              *self.ARGS)
        assert code == 0
        data = json.loads(out)
        rebuilt = field_from_dict(data)
        assert field_to_dict(rebuilt) == data
        assert rebuilt.label(rebuilt.gen.element(-3, 1)) == 4

    def test_wrong_expected_prime(self, capsys):
        code, _, err = invoke(capsys, "residue-field", "--p", "11", *self.ARGS)
        assert code == 1
        assert "13" in err

    def test_composite_modulus(self, capsys):
        code, _, err = invoke(capsys, "residue-field", "--pi", "2,0",
                              "--w", "1,1,1,1", "--t", "2")
        assert code == 1
        assert "prime" in err


class TestLabelCommand:
    ARGS = ("--pi", "-1,2", "--w", "1,1,1,1", "--t", "2")

    def test_label_element(self, capsys):
        code, out, _ = invoke(capsys, "label", *self.ARGS, "--u", "-3,1")
        assert code == 0
        assert out == "label=4\n"

    def test_unlabel_symbol(self, capsys):
        code, out, _ = invoke(capsys, "label", *self.ARGS, "--k", "9")
        assert code == 0
        assert out == "element=3,-1\n"

    def test_requires_exactly_one_mode(self, capsys):
        code, _, err = invoke(capsys, "label", *self.ARGS)
        assert code == 1
        assert "--u or --k" in err


class TestEncodeCommand:
    ARGS = ("--pi", "-1,2", "--w", "1,1,1,1", "--t", "2")

    def test_encode_and_decode_line(self, capsys):
        code, out, _ = invoke(capsys, "encode", *self.ARGS,
                              "--symbols", "4,7,12")
        assert code == 0
        assert out == "-3,1\n1,-1\n-1,0\ndecoded=4,7,12\n"

    def test_symbol_out_of_range(self, capsys):
        code, _, err = invoke(capsys, "encode", *self.ARGS, "--symbols", "13")
        assert code == 1
        assert "range" in err


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["definitely-not-a-command"])
        assert exc.value.code == 2

    def test_missing_required_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["twist", "--t", "2", "--p", "1"])
        assert exc.value.code == 2

    def test_bad_rational(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["fib-norm", "--n", "1", "--alpha1", "x", "--alpha2", "1"])
        assert exc.value.code == 2
