import json
from unittest.mock import AsyncMock

import pytest

from wickenum import CoefficientMismatch, IdentityKind, VerificationReport, VerificationStatus
from wickenum.cli.wickenum_cli import EXIT_CONFIG, EXIT_MISMATCH, EXIT_PASS, EXIT_SCALE, build_parser, main


# noinspection PyMethodMayBeStatic
class TestWickenumCli:
    def parser__should_parse_symbolic_dimension_and_coin_total_range(self):
        args = build_parser().parse_args(["verify", "coin", "--n", "symbolic", "--total", "3..5"])
        assert args.n is None
        assert args.total == (3, 5)
        assert build_parser().parse_args(["verify", "coin", "--total", "6"]).total == (2, 6)

    def parser__should_split_comma_separated_lists(self):
        args = build_parser().parse_args(["maps", "--degrees", "2,3,4", "--sweep", "4,8"])
        assert args.degrees == [2, 3, 4]
        assert args.sweep == [4, 8]

    def integrate__should_write_exact_json_payload(self, capsys):
        exit_code = main(["integrate", "--kind", "omega", "--r", "0", "--max-edges", "2", "--n", "3"])
        assert exit_code == EXIT_PASS
        payload = json.loads(capsys.readouterr().out)
        assert payload["spec"]["kind"] == "omega_r"
        assert payload["bounds"] == {"max_edges": 2, "max_z_order": None, "n": 3}
        assert payload["reference_dimension"] is None
        assert payload["terms"] == [{"exps": {}, "coeff": "1/1"}]

    def integrate__should_write_csv_coefficients(self, capsys):
        exit_code = main(["integrate", "--kind", "omega", "--r", "0", "--max-edges", "2", "--format", "csv"])
        assert exit_code == EXIT_PASS
        assert capsys.readouterr().out.splitlines() == ["monomial,coefficient", "1,1/1"]

    def verify__should_exit_zero_and_report_pass(self, capsys):
        exit_code = main(["verify", "witt", "--max-m-degree", "3"])
        assert exit_code == EXIT_PASS
        report = json.loads(capsys.readouterr().out)
        assert report["identity"] == "witt"
        assert report["status"] == "pass"

    def verify__should_exit_with_mismatch_code_when_identity_fails(self, mocker, capsys):
        failing = VerificationReport(
            identity=IdentityKind.MAIN7,
            status=VerificationStatus.MISMATCH,
            mismatches=[CoefficientMismatch(monomial={"y": 1}, lhs="1/1", rhs="1/2")],
        )
        mocker.patch("wickenum.cli.wickenum_cli.IdentityVerifier.verify", new=AsyncMock(return_value=failing))
        exit_code = main(["verify", "main7", "--r", "1", "--max-edges", "4", "--format", "csv"])
        assert exit_code == EXIT_MISMATCH
        assert capsys.readouterr().out.splitlines() == ["section,monomial,lhs,rhs", ',"{""y"": 1}",1/1,1/2']

    def verify__should_exit_with_config_code_for_invalid_configuration(self, capsys):
        exit_code = main(["verify", "main2"])
        assert exit_code == EXIT_CONFIG
        error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert error["error_type"] == "wickenum_error:cli:config"
        assert "missing-n-max" in error["error_message"]

    def verify__should_exit_with_config_code_for_invalid_coin_range(self):
        assert main(["verify", "coin", "--total", "1..3"]) == EXIT_CONFIG

    def maps__should_run_bipz_identity(self, capsys):
        exit_code = main(["maps", "--degrees", "2,4", "--max-z-order", "1", "--max-m-degree", "4"])
        assert exit_code == EXIT_PASS
        assert json.loads(capsys.readouterr().out)["identity"] == "bipz"

    def census__should_write_one_line_per_class_of_every_order_up_to_n_max(self, capsys):
        exit_code = main(["census", "--n-max", "3", "--filter", "connected"])
        assert exit_code == EXIT_PASS
        entries = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [(entry["n"], entry["code"]) for entry in entries] == [(1, 0), (2, 1), (3, 3), (3, 7)]

    def census__should_exit_with_scale_code_beyond_desk_scale(self, capsys):
        exit_code = main(["census", "--n-max", "9"])
        assert exit_code == EXIT_SCALE
        error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert error["error_type"] == "wickenum_error:scale:exceeded"

    def census__should_write_to_output_file_when_given(self, tmp_path):
        out = tmp_path / "census.csv"
        exit_code = main(["census", "--n-max", "2", "--format", "csv", "--out", str(out)])
        assert exit_code == EXIT_PASS
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("n,edges,graph6,code,aut_order")
        assert len(lines) == 4

    def planar_count__should_tabulate_oracle_and_residuals(self, capsys):
        argv = ["planar-count", "--n-max", "2", "--max-edges", "2", "--sweep", "4,8", "--format", "csv"]
        exit_code = main(argv)
        assert exit_code == EXIT_PASS
        assert capsys.readouterr().out.splitlines() == [
            "n,r,p,value@4,value@8,residual@4,residual@8,verdict",
            "1,1,1,,,,,unreachable",
            "1,total,1,,,,,",
            "2,1,1,3/4,7/8,-1/4,-1/8,converging",
            "2,total,1,,,,,",
        ]

    def parser__should_reject_unknown_identity(self):
        with pytest.raises(SystemExit):
            main(["verify", "not-an-identity"])
