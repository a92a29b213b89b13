import io
import json
import pathlib
import sys

import pytest

from icis.cli import main

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestRun:
    def test_milnor(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "milnor_morse.icis"), capsys=capsys)
        assert code == 0
        assert "mu: 1" in out

    def test_icis_milnor(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "icis_milnor_pair.icis"), capsys=capsys)
        assert code == 0
        assert "mu: 3" in out

    def test_function_milnor(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "function_milnor.icis"), capsys=capsys)
        assert code == 0
        assert "mu: 4" in out

    def test_discriminant(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "discriminant_plane.icis"), capsys=capsys)
        assert code == 0
        assert "discriminant: u^3 + 27/4*v^2" in out

    def test_generic_line(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "generic_line.icis"), capsys=capsys)
        assert code == 0
        assert "multiplicity: 2" in out
        assert "intersection_number: 3" in out
        assert "generic: False" in out

    def test_family_analyze(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "ex43_23.icis"), capsys=capsys)
        assert code == 0
        assert "mu_f_at_0: 4" in out
        assert "sample t=1: mu_origin=3 total=4 off_origin=1 distinct_points=2" in out
        assert "sample t=1/2: mu_origin=3 total=4" in out
        assert "conservation: True" in out
        assert "cond1_mu_constant: False" in out
        assert "cond5_radical: False" in out
        assert "cond6_variety: False" in out
        assert "implications_ok: True" in out
        assert "radical_implies_axis: VERIFIED" in out
        assert "zero_fiber_forces_origin: VACUOUS" in out
        assert "splitting: VACUOUS" in out

    def test_family_probe_line(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "ex43_23.icis"), capsys=capsys)
        assert code == 0
        assert (
            "probe[0]: nu(dF/dt.gamma)=2 min nu(g_i.gamma)=inf "
            "strict=False weak=False on_variety=True" in out
        )

    def test_greuel_check(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "greuel_cusp.icis"), capsys=capsys)
        assert code == 0
        assert "cond5_radical: False" in out
        assert "radical_implies_axis: VERIFIED" in out

    def test_space_family(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "space_tacnode.icis"), capsys=capsys)
        assert code == 0
        assert "splitting: VACUOUS" in out
        assert "t=1: count=2 total=2" in out


class TestExitCodes:
    def test_inconclusive_is_2(self, capsys):
        code, out, _ = run_cli("run", str(FIXTURES / "inconclusive.icis"), capsys=capsys)
        assert code == 2
        assert "conservation: INCONCLUSIVE" in out
        assert "radical_implies_axis: INCONCLUSIVE" in out

    @pytest.mark.parametrize(
        "name,code_fragment",
        [
            ("bad_syntax.icis", "syntax-error"),
            ("bad_unbound.icis", "unbound-name"),
            ("bad_missing_param.icis", "missing-parameter"),
            ("nonisolated.icis", "non-isolated"),
        ],
    )
    def test_input_errors_are_3(self, capsys, name, code_fragment):
        code, out, err = run_cli("run", str(FIXTURES / name), capsys=capsys)
        assert code == 3
        assert code_fragment in err

    def test_budget_exhaustion_is_4(self, tmp_path, capsys):
        f = tmp_path / "b.icis"
        f.write_text(
            "ring t, x, y;\nparam t;\nphi = x^2 - y^3;\nF = x + t*y;\n"
            "kind family-analyze;\nbudget 10;\n"
        )
        code, _, err = run_cli("run", str(f), capsys=capsys)
        assert code == 4
        assert "budget-exhausted" in err

    def test_missing_file_is_3(self, capsys):
        code, _, err = run_cli("run", str(FIXTURES / "does_not_exist.icis"), capsys=capsys)
        assert code == 3


class TestCheck:
    def test_valid_file(self, capsys):
        code, out, _ = run_cli("check", str(FIXTURES / "ex43_23.icis"), capsys=capsys)
        assert code == 0
        assert out.startswith("ok:")

    def test_invalid_file(self, capsys):
        code, _, err = run_cli("check", str(FIXTURES / "bad_syntax.icis"), capsys=capsys)
        assert code == 3
        assert "line 2" in err


class TestFlags:
    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            "run", str(FIXTURES / "milnor_morse.icis"), "--json", capsys=capsys
        )
        assert code == 0
        payload = json.loads(out.splitlines()[-1])
        assert payload["mu"] == "1"
        assert payload["kind"] == "milnor"

    def test_samples_override(self, capsys):
        code, out, _ = run_cli(
            "run",
            str(FIXTURES / "ex43_23.icis"),
            "--samples",
            "3,1/4",
            capsys=capsys,
        )
        assert code == 0
        assert "sample t=3: mu_origin=3 total=4" in out
        assert "sample t=1/4: mu_origin=3 total=4" in out

    def test_seed_override_is_stable(self, capsys):
        outs = set()
        for seed in ("1", "2"):
            code, out, _ = run_cli(
                "run",
                str(FIXTURES / "icis_milnor_pair.icis"),
                "--seed",
                seed,
                capsys=capsys,
            )
            assert code == 0
            outs.add(out.split("[")[0])
        assert len(outs) == 1  # the invariant does not depend on the seed

    def test_budget_override(self, capsys):
        code, _, err = run_cli(
            "run",
            str(FIXTURES / "ex43_23.icis"),
            "--budget",
            "10",
            capsys=capsys,
        )
        assert code == 4
        assert "budget-exhausted" in err


class TestDeterminism:
    def test_stdout_is_byte_identical_across_runs(self, capsys):
        results = []
        for _ in range(3):
            code, out, _ = run_cli("run", str(FIXTURES / "ex43_23.icis"), capsys=capsys)
            assert code == 0
            results.append(out)
        assert results[0] == results[1] == results[2]

    def test_timing_goes_to_stderr(self, capsys):
        _, out, err = run_cli("run", str(FIXTURES / "milnor_morse.icis"), capsys=capsys)
        assert "elapsed" not in out
        assert "elapsed" in err
