import json

import pytest
from click.testing import CliRunner

from cohera.main import cli


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def run(runner, model_file):
    def invoke(*args, model=True):
        extra = ['--model', str(model_file)] if model else []
        return runner.invoke(cli, [args[0], *extra, *args[1:]])

    return invoke


class TestQueries:
    def test_member(self, run):
        result = run('member', '--set', 'D', '--gamble', '1,-1,1')
        assert result.exit_code == 0
        assert result.stdout.strip() == 'true'
        assert run('member', '--set', 'D', '--gamble', '-1,1,-1').exit_code == 1

    def test_coherent(self, run):
        result = run('coherent', '--assertions', '-1,0,0', model=False)
        assert result.exit_code == 1
        assert result.stdout.strip() == 'false'
        assert run('coherent', '--assertions', '1,-1,0', model=False).exit_code == 0
        assert run('coherent', '--set', 'T').exit_code == 1

    def test_combine(self, run):
        result = run('combine', '--set', 'D', '--set', 'M')
        assert result.exit_code == 0
        assert json.loads(result.stdout)['gambles'] == ['1,-1,0', '1,1,-1']

    def test_extract(self, run):
        result = run('extract', '--set', 'E', '--question', 'px')
        assert result.exit_code == 0
        assert json.loads(result.stdout)['worlds'] == ['a', 'b']
        lazy = run('extract', '--set', 'L', '--question', 'px')
        assert json.loads(lazy.stdout)['blocks'] == [['a', 'b'], ['c']]

    def test_support(self, run):
        result = run('support', '--set', 'D')
        assert result.exit_code == 0
        assert result.stdout.split() == ['join(px,py)']

    def test_saturate(self, run):
        result = run('saturate', '--event', 'S', '--question', 'py')
        assert json.loads(result.stdout) == ['a', 'b', 'c']
        found = run('saturate', '--event', 'A')
        assert found.stdout.strip() == 'py'
        assert run('saturate', '--event', 'b').stdout.strip() == 'join(px,py)'

    def test_independence(self, run):
        assert run('independent', '--question', 'px', '--question', 'py').exit_code == 1
        result = run('cond-independent', '--question', 'px', '--question', 'py', '--given', 'join(px,py)')
        assert result.exit_code == 0

    def test_atoms(self, run):
        listed = json.loads(run('atoms').stdout)
        assert len(listed['atoms']) == 6
        split = json.loads(run('atoms', '--question', 'px').stdout)
        assert sorted(len(b) for b in split['blocks']) == [2, 4]

    def test_lift_and_at_of(self, run):
        assert json.loads(run('lift', '--event', 'a,b').stdout)['kind'] == 'event'
        assert json.loads(run('lift', '--event', 'a,b,c').stdout)['kind'] == 'unit'
        above = json.loads(run('at-of', '--set', 'E').stdout)
        assert above['atoms'] == [['a', 'b', 'c'], ['a', 'c', 'b']]


class TestExitCodes:
    def test_unknown_question_is_a_model_error(self, run):
        result = run('extract', '--set', 'D', '--question', 'pz')
        assert result.exit_code == 3
        assert result.stderr.startswith('error:')

    def test_unknown_set(self, run):
        assert run('member', '--set', 'Q', '--gamble', '1,0,0').exit_code == 3

    def test_bad_gamble(self, run):
        assert run('member', '--set', 'D', '--gamble', '1,0').exit_code == 3

    def test_missing_model(self, run):
        assert run('member', '--set', 'D', '--gamble', '1,0,0', model=False).exit_code == 2

    def test_usage(self, run):
        assert run('combine', '--set', 'D').exit_code == 2

    def test_broken_model_file(self, runner, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"omega": ["a"], "partitions": {"p": [0, 0]}}', encoding='utf-8')
        result = runner.invoke(cli, ['atoms', '--model', str(path)])
        assert result.exit_code == 3
        assert 'partitions.p' in result.stderr


class TestVerify:
    def test_size_limit_guard(self, runner):
        result = runner.invoke(cli, ['verify', '--suites', 'separoid', '--size-limit', '6'])
        assert result.exit_code == 2
        assert '--size-limit 5' in result.stderr

    def test_unknown_suite(self, runner):
        assert runner.invoke(cli, ['verify', '--suites', 'nope']).exit_code == 2

    def test_report(self, runner, tmp_path):
        out = tmp_path / 'report.json'
        result = runner.invoke(cli, ['verify', '--suites', 'separoid,saturation', '--size-limit', '3',
                                     '--output', str(out)])
        assert result.exit_code == 0
        report = json.loads(out.read_text(encoding='utf-8'))
        assert [s['suite'] for s in report['suites']] == ['separoid', 'saturation']
        assert report['exit_status'] == 0
        assert report['model_digest'] is None

    def test_exploratory_findings_do_not_fail(self, runner):
        result = runner.invoke(cli, ['verify', '--suites', 'atom-separoid', '--size-limit', '3'])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert any(f['counterexamples'] for f in report['suites'][0]['exploratory'])

    def test_model_axioms(self, runner, model_file):
        result = runner.invoke(cli, ['verify', '--suites', 'axioms', '--samples', '5',
                                     '--model', str(model_file)])
        report = json.loads(result.stdout)
        assert report['model_digest']
        assert report['suites'][0]['suite'] == 'axioms'

    def test_deterministic(self, runner, tmp_path):
        args = ['verify', '--suites', 'event-hom,coherence', '--size-limit', '3', '--samples', '10', '--seed', '7']
        first, second = tmp_path / 'first.json', tmp_path / 'second.json'
        runner.invoke(cli, args + ['--output', str(first)])
        runner.invoke(cli, args + ['--output', str(second)])
        assert first.read_bytes() == second.read_bytes()

    @pytest.mark.slow
    def test_everything_at_desk_scale(self, runner, tmp_path):
        out = tmp_path / 'all.json'
        result = runner.invoke(cli, ['verify', '--suites', 'all', '--size-limit', '3', '--seed', '7',
                                     '--output', str(out)])
        assert result.exit_code == 0


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert 'cohera' in result.stdout
