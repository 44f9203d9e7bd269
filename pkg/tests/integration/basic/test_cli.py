import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stdout

from ladderwood.api.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def run_cli(*argv):
    out = io.StringIO()
    with redirect_stdout(out):
        code = main(list(argv))
    return code, out.getvalue().strip()


class TestCli(unittest.TestCase):
    def test_normal_order(self):
        self.assertEqual(run_cli('normal-order', 'a*ad'), (EXIT_OK, 'ad*a + 1'))
        self.assertEqual(run_cli('normal-order', '1/2*p^2 + 1/2*x^2'), (EXIT_OK, 'ad*a + 1/2'))
        self.assertEqual(run_cli('normal-order', 'â*â†'), (EXIT_OK, 'ad*a + 1'))
        self.assertEqual(run_cli('normal-order', '(1 + i)*sqrt2'), (EXIT_OK, 'sqrt2 + i*sqrt2'))

    def test_normal_order_group_element(self):
        self.assertEqual(run_cli('normal-order', 'exp(a)'), (EXIT_OK, 'exp(0) * exp(a)'))
        code, text = run_cli('normal-order', 'exp(a)*exp(ad)')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(text.startswith('exp(1/2) * exp('))
        self.assertEqual(run_cli('normal-order', text), (EXIT_OK, text))

    def test_commutator(self):
        self.assertEqual(run_cli('commutator', 'x', 'p'), (EXIT_OK, 'i'))
        self.assertEqual(run_cli('commutator', 'H', 'ad'), (EXIT_OK, 'ad'))

    def test_matel(self):
        self.assertEqual(run_cli('matel', '1', 'ad', '0'), (EXIT_OK, '1'))
        self.assertEqual(run_cli('matel', '3', 'ad', '2'), (EXIT_OK, 'sqrt(3)'))
        self.assertEqual(run_cli('matel', '2', 'H', '2'), (EXIT_OK, '5/2'))
        self.assertEqual(run_cli('matel', '0', 'a', '0'), (EXIT_OK, '0'))

    def test_spectrum(self):
        code, out = run_cli('spectrum', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ['E_0 = 1/2', 'E_1 = 3/2', 'E_2 = 5/2', 'E_3 = 7/2'])

    def test_hermite(self):
        self.assertEqual(run_cli('hermite', '4'), (EXIT_OK, '12 0 -48 0 16'))
        self.assertEqual(run_cli('hermite', '5', '--path', 'reduction'), (EXIT_OK, '0 120 0 -160 0 32'))

    def test_wavefunction(self):
        code, out = run_cli('wavefunction', '2')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, 'psi_2(x) = sqrt(1/8) * (4*xi^2 - 2) * exp(-1/2*xi^2) * pi^(-1/4)')
        code, out = run_cli('wavefunction', '0', '--units', 'si')
        self.assertIn('(mω₀/πℏ)^{1/4}', out)

    def test_wavefunction_json(self):
        code, out = run_cli('wavefunction', '1', '--space', 'p', '--json')
        self.assertEqual(code, EXIT_OK)
        record = json.loads(out)
        self.assertEqual(record['space'], 'momentum')
        self.assertEqual(record['coeffs'], ['0', '2'])
        self.assertEqual(record['scale_sq'], '1/2')
        self.assertEqual(record['gaussian_rate'], '1/2')
        self.assertEqual(record['phase'], 'i')

    def test_usage_errors(self):
        self.assertEqual(run_cli('normal-order', 'a +')[0], EXIT_USAGE)
        self.assertEqual(run_cli('normal-order', 'exp(x*p)')[0], EXIT_USAGE)
        self.assertEqual(run_cli('matel', '-1', 'a', '0')[0], EXIT_USAGE)
        self.assertEqual(run_cli('verify', '--settings', '/nonexistent/settings.json')[0], EXIT_USAGE)
        with self.assertRaises(SystemExit):
            run_cli('hermite', '3', '--path', 'closed-form')

    def test_verify(self):
        settings = {'max_spectrum': 4, 'max_hermite': 4, 'max_orthonormal': 3, 'max_ladder_rung': 2,
                    'random_cases': 2}
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'settings.json')
            with open(path, 'w') as fp:
                json.dump(settings, fp)
            code, out = run_cli('verify', '--suite', 'wavefunctions', '--settings', path)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.splitlines()[-1].endswith('checks passed'))
        self.assertNotIn('FAIL', out)

    def test_verify_failure_exit_code(self):
        settings = {'oracle': {'tolerance': 0.0, 'grid_tolerance': 0.0, 'matel_tolerance': 0.0},
                    'random_cases': 1, 'max_ladder_rung': 1}
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'settings.json')
            with open(path, 'w') as fp:
                json.dump(settings, fp)
            code, out = run_cli('verify', '--suite', 'oracle', '--settings', path)
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn('FAIL', out)
