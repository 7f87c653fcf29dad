"""CLI surface: output shape, determinism, exit-status contract."""

import json

import pytest

from fsg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_orders_psl43(capsys):
    payload = run_json(capsys, "orders", "--family", "PSL", "--n", "4", "--q", "3")
    assert payload["order"] == "6065280"
    assert payload["family"] == "PSL"


def test_orders_validation_exit_2(capsys):
    code, _, err = run(capsys, "orders", "--family", "2G2", "--q", "9")
    assert code == 2
    assert "3^(2m+1)" in err


def test_moonshine_j(capsys):
    payload = run_json(capsys, "moonshine", "--j", "3")
    assert payload["j_coefficients_from_q^-1"] == [
        "1", "744", "196884", "21493760", "864299970"]


def test_moonshine_identities(capsys):
    payload = run_json(capsys, "moonshine", "--identities")
    assert payload["all_pass"]


def test_group_report_alt5(capsys):
    payload = run_json(capsys, "group", "--name", "alt", "--n", "5", "--report")
    assert payload["order"] == "60"
    assert payload["simple"] is True
    assert payload["classes"]["class_sizes"] == [1, 15, 20, 12, 12]


def test_group_from_cycles(capsys):
    payload = run_json(capsys, "group", "--gens", "(0 1);(0 1 2 3)", "--report")
    assert payload["order"] == "24"


def test_group_contains(capsys):
    payload = run_json(capsys, "group", "--name", "alt", "--n", "4",
                       "--contains", "(0 1)")
    assert payload["contains"] is False


def test_field_command(capsys):
    payload = run_json(capsys, "field", "--p", "2", "--f", "2",
                       "--op", "mul", "--a", "0 1", "--b", "0 1")
    assert payload["q"] == 4
    assert payload["op"]["result"] == [1, 1]   # t*t = 1 + t


def test_field_bad_prime_exit_2(capsys):
    code, _, err = run(capsys, "field", "--p", "9")
    assert code == 2 and "not prime" in err


def test_field_resource_exit_3(capsys):
    code, _, err = run(capsys, "field", "--p", "2", "--f", "40")
    assert code == 3


def test_census_command(capsys):
    payload = run_json(capsys, "census", "--bound", "1000")
    assert payload["count"] == 5
    assert payload["entries"][0]["order"] == "60"


def test_golay_fast(capsys):
    payload = run_json(capsys, "golay", "--steiner", "--fast")
    assert payload["weight_distribution"] == {
        "0": 1, "8": 759, "12": 2576, "16": 759, "24": 1}
    assert payload["steiner"]["octad_count"] == 759


def test_sporadic_command(capsys):
    payload = run_json(capsys, "sporadic")
    assert payload["count"] == 26
    assert payload["entries"][0]["symbol"] == "M11"


def test_algebra_probe(capsys):
    payload = run_json(capsys, "algebra", "--probe", "O", "--samples", "5")
    assert payload["alternative"] is True


def test_chartab(capsys):
    payload = run_json(capsys, "chartab", "--name", "sym", "--n", "4")
    assert payload["degrees"] == [1, 1, 2, 3, 3]
    assert payload["column_orthogonality"] is True


def test_zoo_partitions(capsys):
    payload = run_json(capsys, "zoo", "--partitions", "10")
    assert payload["partition_count"] == "42"


def test_json_round_trip_stability(capsys):
    code, first, _ = run(capsys, "orders", "--family", "G2", "--q", "2")
    code, second, _ = run(capsys, "orders", "--family", "G2", "--q", "2")
    assert first == second
    parsed = json.loads(first)
    assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) == first.strip()


def test_unknown_subcommand_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_text_format(capsys):
    code, out, _ = run(capsys, "--format", "text", "zoo", "--partitions", "8")
    assert code == 0
    assert "partition_count: 22" in out


def test_projective_named_groups(capsys):
    payload = run_json(capsys, "group", "--name", "psl2", "--n", "7", "--report")
    assert payload["order"] == "168"
    assert payload["simple"] is True
    payload = run_json(capsys, "group", "--name", "pgl2", "--n", "9")
    assert payload["order"] == "720"


def test_zoo_aut_and_holomorph(capsys):
    payload = run_json(capsys, "zoo", "--aut", "quaternion")
    assert (payload["aut_order"], payload["out_order"]) == (24, 6)
    payload = run_json(capsys, "zoo", "--holomorph", "v")
    assert payload["holomorph_order"] == "24"


def test_leech_theta_via_cli(capsys):
    payload = run_json(capsys, "leech", "--theta-terms", "3")
    assert payload["theta_coefficients_by_norm"]["4"] == "196560"
