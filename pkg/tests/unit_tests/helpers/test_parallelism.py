import os
import unittest
from unittest import mock

from ladderwood.helpers.parallelism import get_nr_procs, parallel_map


def _square(x):
    return x * x


def _fail_on_three(x):
    if x == 3:
        raise ValueError('three')
    return x


class TestParallelism(unittest.TestCase):
    def test_worker_override(self):
        with mock.patch.dict(os.environ, {'LADDERWOOD_N_WORKERS': '3'}):
            self.assertEqual(get_nr_procs(), 3)
        with mock.patch.dict(os.environ, {'LADDERWOOD_N_WORKERS': 'many'}):
            self.assertEqual(get_nr_procs(), 1)

    def test_in_process(self):
        self.assertEqual(parallel_map(_square, [('two', 2), ('five', 5)], nr_procs=1), {'two': 4, 'five': 25})

    def test_pool(self):
        named_args = [(str(k), k) for k in range(6)]
        self.assertEqual(parallel_map(_square, named_args, nr_procs=2), {str(k): k * k for k in range(6)})

    def test_pool_failure_propagates(self):
        named_args = [(str(k), k) for k in range(5)]
        with self.assertRaises(ValueError):
            parallel_map(_fail_on_three, named_args, nr_procs=2)
        self.assertEqual(parallel_map(_square, named_args, nr_procs=2)['4'], 16)
