import json

import pytest

from src.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, run
from src.factored import FactoredBPoly
from src.weyl_oracle import BernsteinOracle


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_conj_three(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'conj', '3')
    assert code == EXIT_OK
    assert out == '(s + 2/3) (s + 1)^2 (s + 4/3)\n'


def test_conj_small_n(capsys):
    assert invoke(capsys, '--no-cache', 'conj', '2')[1] == '(s + 1)\n'
    assert invoke(capsys, '--no-cache', 'conj', '1')[1] == '1\n'


def test_local_point(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'local', '5', '5', '7')
    assert code == EXIT_OK
    assert out == '(s + 1)\n'


def test_local_rational_coordinates(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'local', '1/2', '1/2', '3', '3')
    assert code == EXIT_OK
    assert out == '(s + 1)^2\n'


def test_opdam_json_flag_after_verb(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'opdam', 'A2', '--json')
    assert code == EXIT_OK
    payload = json.loads(out)
    roots = {(r['num'], r['den'], r['mult']) for r in payload['roots']}
    assert roots == {(-1, 1, 1), (-5, 6, 1), (-7, 6, 1)}
    assert payload['type'] == 'A2'
    assert payload['degrees'] == [2, 3]


def test_text_and_json_agree(capsys):
    _, text, _ = invoke(capsys, '--no-cache', 'conj', '4')
    _, raw, _ = invoke(capsys, '--no-cache', '--json', 'conj', '4')
    assert str(FactoredBPoly.from_json(json.loads(raw))) == text.strip()


def test_blowup_and_upper(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'blowup', '3')
    assert code == EXIT_OK
    assert out == '(s + 1/3) (s + 2/3) (s + 1)^2\n'
    code, out, _ = invoke(capsys, '--no-cache', 'upper', '2')
    assert code == EXIT_OK
    assert out.strip()


@pytest.mark.parametrize('argv', [
    ['opdam', 'Z9'],
    ['conj', '-1'],
    ['local', '1/0'],
    ['local', '0.5'],
    ['oracle', 'exp(x1)'],
    ['jump', '1'],
    ['frobnicate'],
    [],
])
def test_usage_errors_print_nothing_on_stdout(capsys, argv):
    code, out, _ = invoke(capsys, '--no-cache', *argv)
    assert code == EXIT_USAGE
    assert out == ''


def test_unknown_label_message(capsys):
    _, _, err = invoke(capsys, '--no-cache', 'opdam', 'Z9')
    assert err.startswith('error:')


def test_help_exits_zero(capsys):
    assert run(['--help']) == EXIT_OK
    assert 'bfunction' in capsys.readouterr().out


def test_check_passes(capsys, tmp_path):
    csv_path = tmp_path / 'suite.csv'
    code, out, _ = invoke(capsys, '--no-cache', 'check', '4', '--csv', str(csv_path))
    assert code == EXIT_OK
    assert csv_path.exists()
    assert 'passed' in out


def test_check_json(capsys):
    code, out, _ = invoke(capsys, '--no-cache', '--json', 'check', '3')
    assert code == EXIT_OK
    reports = json.loads(out)
    assert [r['n'] for r in reports] == [2, 3]


def test_verify_lemmas(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'verify-lemmas', '3')
    assert code == EXIT_OK
    assert 'beta' in out


def test_jump(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'jump', '4')
    assert code == EXIT_OK
    assert out == '1/2\n'


def test_jump_shapes_json(capsys):
    code, out, _ = invoke(capsys, '--no-cache', '--json', 'jump', '5', '--method', 'shapes')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert (payload['num'], payload['den']) == (2, 5)


def test_kashiwara(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'kashiwara', '3')
    assert code == EXIT_OK
    assert out.splitlines() == ['kashiwara: N=0 M=4', 'blowup: M=4', 'blowup-shift: N=1']


def test_oracle_found(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'oracle', 'x1^2', '--order', '2')
    assert code == EXIT_OK
    assert out.splitlines()[0] == '(s + 1/2) (s + 1)'


def test_oracle_inconclusive_is_not_an_error(capsys):
    code, out, _ = invoke(capsys, '--no-cache', '--json', 'oracle', 'x1^2', '--order', '1')
    assert code == EXIT_OK
    assert json.loads(out)['status'] == 'inconclusive'


def test_oracle_conj_two(capsys):
    code, out, _ = invoke(capsys, '--no-cache', 'oracle-conj', '2')
    assert code == EXIT_OK
    assert out.startswith('confirmed')


def test_cache_written_and_reused(capsys, tmp_path):
    cache_path = tmp_path / 'b.json'
    _, first, _ = invoke(capsys, '--cache', str(cache_path), 'conj', '5')
    assert cache_path.exists()
    stored = json.loads(cache_path.read_text())
    assert stored['version'] == 1
    assert '5' in stored['entries']
    _, second, _ = invoke(capsys, '--cache', str(cache_path), 'conj', '5')
    assert first == second


def test_no_cache_leaves_no_file(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    invoke(capsys, '--no-cache', 'conj', '4')
    assert list(tmp_path.iterdir()) == []


def test_bad_cache_version_is_usage_error(capsys, tmp_path):
    cache_path = tmp_path / 'b.json'
    cache_path.write_text(json.dumps({'version': 99, 'entries': {}}))
    code, out, err = invoke(capsys, '--cache', str(cache_path), 'conj', '3')
    assert code == EXIT_USAGE
    assert out == ''
    assert 'version' in err


def test_failed_round_trip_exits_nonzero(capsys, monkeypatch):
    monkeypatch.setattr(BernsteinOracle, '_round_trip', staticmethod(lambda *args: False))
    code, out, err = invoke(capsys, '--no-cache', 'oracle', 'x1^2', '--order', '2')
    assert code == EXIT_CHECK_FAILED
    assert out == ''
    assert err.startswith('error:')
