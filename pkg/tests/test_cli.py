"""Tests for the command-line surface and the command handlers."""

import json

import pytest

from grkappa.cli import build_parser, dispatch
from grkappa.config import GrkappaConfig
from grkappa.core import decomp as decomp_module
from grkappa.core.errors import DomainError, VerificationFailure
from grkappa.engine import HeckeEngine
from grkappa.handlers import (
    handle_blocks,
    handle_decomp,
    handle_graded_dim,
    handle_mullineux,
    handle_specht_char,
)
from grkappa.handlers.common import (
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILURE,
    error_output,
    heading,
)


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch, tmp_path):
    monkeypatch.delenv("GRKAPPA_CACHE", raising=False)
    monkeypatch.chdir(tmp_path)


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParser:
    def test_subcommands_registered(self):
        parser = build_parser()
        args = parser.parse_args(["blocks", "--e", "2", "--kappa", "0", "--d", "3"])
        assert args.command == "blocks"
        assert args.handler is handle_blocks
        assert args.output_format == "text"
        assert args.method == "bar"

    def test_missing_required_flag(self, capsys):
        code, out, err = run(capsys, "blocks", "--e", "2", "--d", "3")
        assert code == EXIT_DOMAIN_ERROR
        assert out == ""
        assert "--kappa" in err

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "plot", "--e", "2", "--kappa", "0")
        assert code == EXIT_DOMAIN_ERROR
        assert err.startswith("Error:")

    def test_exclusive_flags(self, capsys):
        code, _, _ = run(capsys, "decomp", "--e", "2", "--kappa", "0", "--d", "2", "--alpha", "0:1")
        assert code == EXIT_DOMAIN_ERROR


class TestDispatch:
    def test_blocks(self, capsys):
        code, out, _ = run(capsys, "blocks", "--e", "2", "--kappa", "0", "--d", "3", "--no-cache")
        assert code == EXIT_OK
        assert "alpha = 2*a0 + a1  (defect 1)" in out
        assert "  multipartitions: 3  1,1,1" in out
        assert "  restricted: 1,1,1" in out

    def test_invalid_e(self, capsys):
        code, out, err = run(capsys, "blocks", "--e", "1", "--kappa", "0", "--d", "3", "--no-cache")
        assert code == EXIT_DOMAIN_ERROR
        assert out == ""
        assert "e must be 0 or at least 2" in err

    def test_decomp_all_methods(self, capsys):
        code, out, _ = run(
            capsys, "decomp", "--e", "2", "--kappa", "0", "--d", "2", "--method", "all", "--no-cache"
        )
        assert code == EXIT_OK
        assert "Graded decomposition matrix for alpha = a0 + a1" in out
        assert out.rstrip().endswith("methods agree: yes")

    def test_decomp_csv(self, capsys):
        code, out, _ = run(
            capsys, "decomp", "--e", "2", "--kappa", "0", "--alpha", "0:1,1:1",
            "--format", "csv", "--no-cache",
        )
        assert code == EXIT_OK
        assert out == '# alpha = a0 + a1\nmu,"1,1"\n2,q\n"1,1",1\n'

    def test_decomp_specialized_json(self, capsys):
        code, out, _ = run(
            capsys, "decomp", "--e", "3", "--kappa", "0", "--d", "3",
            "--format", "json", "--specialize", "--no-cache",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        block = next(item for item in payload if item["rows"] == ["3", "2,1", "1,1,1"])
        assert block["values"] == [[1, 0], [1, 1], [0, 1]]

    def test_cache_directory_from_environment(self, capsys, monkeypatch, tmp_path):
        cache_root = tmp_path / "cache"
        monkeypatch.setenv("GRKAPPA_CACHE", str(cache_root))
        code, _, _ = run(capsys, "decomp", "--e", "2", "--kappa", "0", "--d", "2")
        assert code == EXIT_OK
        assert list(cache_root.rglob("*.json"))
        code, out, _ = run(capsys, "decomp", "--e", "2", "--kappa", "0", "--d", "2")
        assert code == EXIT_OK
        assert "q" in out

    def test_cache_dir_flag(self, capsys, tmp_path):
        cache_root = tmp_path / "flag-cache"
        code, _, _ = run(
            capsys, "decomp", "--e", "3", "--kappa", "0", "--d", "3", "--cache-dir", str(cache_root)
        )
        assert code == EXIT_OK
        assert len(list(cache_root.rglob("*.json"))) == 1

    @pytest.mark.parametrize("method", ["llt", "bar", "extremal", "all"])
    def test_warm_and_cold_cache_print_the_same(self, capsys, tmp_path, method):
        flags = ("--e", "3", "--kappa", "0", "--d", "4", "--method", method)
        cold = run(capsys, "decomp", *flags, "--cache-dir", str(tmp_path / "cold"))
        warm_root = str(tmp_path / "warm")
        run(capsys, "decomp", "--e", "3", "--kappa", "0", "--d", "4", "--cache-dir", warm_root)
        warm = run(capsys, "decomp", *flags, "--cache-dir", warm_root)
        assert cold[0] == EXIT_OK
        assert warm == cold

    def test_warm_cache_keeps_the_level_one_check(self, capsys, tmp_path):
        root = str(tmp_path / "cache")
        flags = ("--e", "3", "--kappa", "0,1", "--d", "2", "--cache-dir", root)
        cold = run(capsys, "decomp", *flags, "--method", "llt")
        assert run(capsys, "decomp", *flags, "--method", "bar")[0] == EXIT_OK
        warm = run(capsys, "decomp", *flags, "--method", "llt")
        assert cold[0] == EXIT_DOMAIN_ERROR
        assert warm == cold
        assert "level one" in warm[2]

    def test_warm_cache_still_runs_the_extremal_route(self, capsys, tmp_path, monkeypatch):
        root = str(tmp_path / "cache")
        flags = ("--e", "3", "--kappa", "0", "--d", "3", "--cache-dir", root)
        assert run(capsys, "decomp", *flags)[0] == EXIT_OK

        def failing(alpha, weight):
            raise VerificationFailure(f"extremal route ran on {alpha}")

        monkeypatch.setitem(decomp_module._ROUTES, "extremal", failing)
        code, out, _ = run(capsys, "decomp", *flags, "--method", "extremal")
        assert code == EXIT_VERIFICATION_FAILURE
        assert "extremal route ran" in out


    def test_fock_verify(self, capsys):
        code, out, _ = run(capsys, "fock-verify", "--e", "2", "--kappa", "0", "--dmax", "3")
        assert code == EXIT_OK
        assert "no violations" in out

    def test_fock_verify_applies_generators_to_one_vector(self, capsys):
        code, out, _ = run(
            capsys, "fock-verify", "--e", "2", "--kappa", "0", "--dmax", "2",
            "--mu", "1", "--format", "json",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["passed"] is True
        assert report["vector"] == "1"
        actions = {(a["generator"], a["residue"]): a["vector"] for a in report["actions"]}
        assert actions == {
            ("E", 0): [{"mp": "0", "coeff": "1"}],
            ("F", 1): [{"mp": "2", "coeff": "1"}, {"mp": "1,1", "coeff": "q^-1"}],
        }

    def test_fock_verify_text_lists_actions(self, capsys):
        code, out, _ = run(capsys, "fock-verify", "--e", "2", "--kappa", "0", "--dmax", "1", "--mu", "1")
        assert code == EXIT_OK
        assert "F_1 M[1] = (1)*M[2] + (q^-1)*M[1,1]" in out


    def test_crystal_dot(self, capsys):
        code, out, _ = run(capsys, "crystal", "--e", "3", "--kappa", "0", "--d", "2", "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith("digraph crystal {")
        assert '"0" -> "1" [label="i=0"];' in out

    def test_crystal_rejects_csv(self, capsys):
        code, _, err = run(capsys, "crystal", "--e", "3", "--kappa", "0", "--d", "2", "--format", "csv")
        assert code == EXIT_DOMAIN_ERROR
        assert "not csv" in err

    def test_restricted(self, capsys):
        code, out, _ = run(capsys, "restricted", "--e", "2", "--kappa", "0", "--d", "3")
        assert code == EXIT_OK
        assert "count: 2" in out
        assert "closed form agrees: yes" in out

    def test_mullineux(self, capsys):
        code, out, _ = run(capsys, "mullineux", "--e", "3", "--kappa", "0", "--mu", "2,1")
        assert code == EXIT_OK
        assert "2,1 -> 1,1,1" in out

    def test_mullineux_of_non_restricted(self, capsys):
        code, _, err = run(capsys, "mullineux", "--e", "3", "--kappa", "0", "--mu", "3")
        assert code == EXIT_DOMAIN_ERROR
        assert err.startswith("Error:")

    def test_graded_dim_pair(self, capsys):
        code, out, _ = run(capsys, "graded-dim", "--e", "2", "--kappa", "0", "--i", "0,1", "--j", "0,1")
        assert code == EXIT_OK
        assert "sum of deg S + deg T: 1 + q^2" in out
        assert "forms agree: yes" in out

    def test_graded_dim_totals(self, capsys):
        code, out, _ = run(capsys, "graded-dim", "--e", "2", "--kappa", "0,1", "--d", "3")
        assert code == EXIT_OK
        assert "l^d * d! = 48: yes" in out

    def test_seminormal_check(self, capsys):
        code, out, _ = run(capsys, "seminormal-check", "--e", "0", "--kappa", "0", "--d", "4")
        assert code == EXIT_OK
        assert "no violations" in out

    def test_seminormal_check_needs_e_zero(self, capsys):
        code, _, err = run(capsys, "seminormal-check", "--e", "2", "--kappa", "0", "--mu", "2,1")
        assert code == EXIT_DOMAIN_ERROR
        assert "e = 0" in err


class TestHandlers:
    @pytest.fixture
    def config(self):
        return GrkappaConfig(e=3, kappa=(0,), use_cache=False)

    @pytest.mark.asyncio
    async def test_mullineux_all_restricted(self, config):
        async with HeckeEngine(config) as engine:
            result = await handle_mullineux(engine, {"d": 3})
        assert result.exit_code == EXIT_OK
        assert "2,1 -> 1,1,1" in result.text
        assert "1,1,1 -> 2,1" in result.text

    @pytest.mark.asyncio
    async def test_missing_arguments(self, config):
        async with HeckeEngine(config) as engine:
            assert (await handle_mullineux(engine, {})).exit_code == EXIT_DOMAIN_ERROR
            assert (await handle_specht_char(engine, {})).exit_code == EXIT_DOMAIN_ERROR
            result = await handle_graded_dim(engine, {"i": "0,1"})
        assert result.exit_code == EXIT_DOMAIN_ERROR
        assert "--i and --j" in result.text

    @pytest.mark.asyncio
    async def test_specht_char_json(self, config):
        config = config.model_copy(update={"output_format": "json"})
        async with HeckeEngine(config) as engine:
            result = await handle_specht_char(engine, {"mu": "2,1"})
        assert result.exit_code == EXIT_OK
        assert json.loads(result.text)

    @pytest.mark.asyncio
    async def test_level_mismatch(self, config):
        async with HeckeEngine(config) as engine:
            result = await handle_specht_char(engine, {"mu": "1|1"})
        assert result.exit_code == EXIT_DOMAIN_ERROR

    @pytest.mark.asyncio
    async def test_decomp_blocks_keep_order(self, config):
        async with HeckeEngine(config) as engine:
            result = await handle_decomp(engine, {"d": 4})
            matrices = await engine.decomposition_matrices(engine.block_alphas(4, None), "bar")
        assert result.exit_code == EXIT_OK
        headings = [line for line in result.text.splitlines() if line.startswith("Graded")]
        assert headings == [f"Graded decomposition matrix for alpha = {m.alpha}" for m in matrices]


class TestCommon:
    def test_heading(self):
        assert heading("abc") == "abc\n===\n"

    def test_error_output_codes(self):
        assert error_output("x", VerificationFailure("bad")).exit_code == EXIT_VERIFICATION_FAILURE
        assert error_output("x", DomainError("bad")).text == "Error: bad\n"
        unexpected = error_output("doing x", RuntimeError("boom"))
        assert unexpected.exit_code == EXIT_DOMAIN_ERROR
        assert unexpected.text == "Error doing x: boom\n"
