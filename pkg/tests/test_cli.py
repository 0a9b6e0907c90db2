import json

import pytest

from setcodes.cli.dispatcher import CommandDispatcher, exit_code_for
from setcodes.cli.main import ENV_FIELDS, main
from setcodes.codecs import build_codec
from setcodes.core.bits import SubstitutionPattern, Word, apply_pattern
from setcodes.core.params import Params
from setcodes.core.patterns import random_pattern, trial_rng
from setcodes.core.wordfile import read_word, write_word
from setcodes.errors import BAD_WORD_FILE, GUARD_EXCEEDED, INADMISSIBLE_PARAMS, NO_MAJORITY, DecodeError
from setcodes.schemas import RunConfig

SINGLE = ["--codec", "single", "--M", "16", "--L", "48"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_FIELDS:
        monkeypatch.delenv(f"SETCODES_{name.upper()}", raising=False)


def test_encode_decode_through_files(tmp_path, capsys):
    word_file = tmp_path / "w.txt"
    assert main(["encode", *SINGLE, "--message", "2a", "--out", str(word_file), "--json"]) == 0
    encoded = json.loads(capsys.readouterr().out)
    assert encoded["message"] == "2a" and encoded["schema_version"] == 1
    assert len(read_word(word_file)) == 16

    assert main(["decode", *SINGLE, "--in", str(word_file)]) == 0
    assert capsys.readouterr().out.strip() == "2a"


def test_decode_after_one_flip(tmp_path, capsys):
    word_file = tmp_path / "w.txt"
    main(["encode", *SINGLE, "--message", "ff", "--out", str(word_file)])
    capsys.readouterr()
    write_word(word_file, apply_pattern(read_word(word_file), SubstitutionPattern.of([(3, 30)])))
    assert main(["decode", *SINGLE, "--in", str(word_file)]) == 0
    assert capsys.readouterr().out.strip() == "ff"


def test_encode_prints_the_word(capsys):
    assert main(["encode", *SINGLE]) == 0
    lines = capsys.readouterr().out.split()
    assert len(lines) == 16 and all(len(s) == 48 for s in lines)


def test_environment_fills_missing_flags(monkeypatch, capsys):
    monkeypatch.setenv("SETCODES_M", "16")
    monkeypatch.setenv("SETCODES_L", "48")
    assert main(["encode", "--codec", "single", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["M"] == 16


def test_environment_fills_switches(monkeypatch, capsys):
    monkeypatch.setenv("SETCODES_JSON", "1")
    monkeypatch.setenv("SETCODES_PATTERNS", "2")
    monkeypatch.setenv("SETCODES_WEIGHT", "0")
    assert main(["simulate", *SINGLE, "--trials", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["patterns"] == 2 and report["weight"] == 0


def test_every_env_field_is_a_config_field():
    fields = {f.alias or name for name, f in RunConfig.model_fields.items()}
    assert set(ENV_FIELDS) <= fields


def test_json_switch_is_read_by_alias():
    config = RunConfig.model_validate({"command": "verify", "json": True})
    assert config.as_json is True
    assert RunConfig(command="verify", as_json=True).as_json is True
    assert "json" not in RunConfig.model_fields


def test_simulate_report(capsys):
    assert main(["simulate", *SINGLE, "--trials", "2", "--patterns", "3", "--seed", "5"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["patterns"] == 6 and report["success_rate"] == 1.0
    assert report["wall_time_s"] is None


def test_bounds_report(capsys):
    assert main(["bounds", *SINGLE]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["codec"] == "single" and report["construction_holds"] is True


def test_bounds_without_a_code(capsys):
    assert main(["bounds", "--codec", "single", "--M", "4", "--L", "10"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["redundancy"] is None


def test_verify(capsys):
    assert main(["verify", "--M", "2", "--L", "3", "--K", "1", "--check", "influence-identity", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] and [c["name"] for c in report["checks"]] == ["influence-identity"]


def test_decode_past_the_budget_reports_the_failure(tmp_path, capsys):
    word_file = tmp_path / "w.txt"
    main(["encode", *SINGLE, "--message", "2a", "--out", str(word_file)])
    capsys.readouterr()
    clean = read_word(word_file)
    codec = build_codec("single", Params(M=16, L=48))
    for trial in range(200):
        noisy = apply_pattern(clean, random_pattern(16, 48, 2, trial_rng(11, trial)))
        try:
            codec.decode(noisy)
        except DecodeError:
            break
    else:
        pytest.fail("no two-flip pattern made the decoder give up")
    write_word(word_file, noisy)
    assert main(["decode", *SINGLE, "--in", str(word_file), "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["error"]["reason"]
    assert report["error"]["code"] < 0


def test_repeated_strings_in_a_word_file(tmp_path):
    bad = tmp_path / "dup.txt"
    bad.write_text("0110\n0111\n0110\n")
    assert main(["verify", "--in", str(bad)]) == 2


def test_verify_one_word(tmp_path, capsys):
    word_file = tmp_path / "w.txt"
    write_word(word_file, Word.from_strs(["0110", "0111"]))
    assert main(["verify", "--in", str(word_file), "--K", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] and report["checks"] == []
    assert report["scope"] == {"M": 2, "L": 4, "K": 2}
    word = report["word"]
    assert word["center"] == ["0110", "0111"]
    assert word["ball"]["count"] < word["ball"]["upper_bound"] == 37
    assert ["0110", "1110"] in word["ball"]["members"]
    assert word["confusable"]["K"] == 2
    assert word["boundary"]["ball_covers_boundary"] is True


@pytest.mark.parametrize(
    "argv,code",
    [
        (["encode", "--codec", "single", "--M", "16", "--L", "50"], 2),
        (["encode", "--codec", "single", "--M", "16"], 2),
        (["decode", *SINGLE], 2),
        (["encode", *SINGLE, "--message", "zz"], 2),
        (["bounds", "--codec", "anchor", "--M", "2", "--L", "256", "--K", "2"], 3),
        (["verify", "--check", "no-such-check"], 2),
    ],
)
def test_exit_codes(argv, code):
    assert main(argv) == code


def test_errors_print_as_json(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0102\n")
    assert main(["decode", *SINGLE, "--in", str(bad), "--json"]) == 2
    report = json.loads(capsys.readouterr().out)
    assert report["error"]["code"] == -32700


def test_exit_code_mapping():
    assert exit_code_for(INADMISSIBLE_PARAMS()) == 2
    assert exit_code_for(BAD_WORD_FILE()) == 2
    assert exit_code_for(GUARD_EXCEEDED()) == 3
    assert exit_code_for(NO_MAJORITY()) == 1


def test_dispatcher_reports_decode_failures(settings):
    def failing(config, settings):
        raise NO_MAJORITY({"votes": 1, "need": 2})

    dispatcher = CommandDispatcher({"decode": failing})
    result = dispatcher.dispatch(RunConfig(command="decode", M=16, L=48), settings)
    assert result.exit_code == 1
    assert result.report.error.reason == "no-majority"
