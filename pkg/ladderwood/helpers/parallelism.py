import os
from typing import Callable, Dict, Iterable, List, Tuple
import psutil
import multiprocessing as mp
from ladderwood.helpers.log import log


def get_nr_procs(max_tasks: int = None) -> int:
    if 'LADDERWOOD_N_WORKERS' in os.environ:
        try:
            n = int(os.environ['LADDERWOOD_N_WORKERS'])
        except ValueError:
            n = 1
        return max(n, 1)
    elif os.name == 'nt':
        return 1
    else:
        available_mem = psutil.virtual_memory().available
        max_per_proc_usage = 0.2 * pow(10, 9)
        proc_count = int(min(mp.cpu_count(), available_mem // max_per_proc_usage)) - 1
        if max_tasks is not None:
            proc_count = min(proc_count, max_tasks)
        return max(proc_count, 1)


def run_task(func: Callable, arg: object, identifier: str) -> Tuple[str, object]:
    try:
        return identifier, func(arg)
    except Exception as e:
        log.error(f'Exception {e} when running with identifier {identifier}')
        raise e


def parallel_map(func: Callable, named_args: Iterable[Tuple[str, object]], nr_procs: int = None) -> Dict[str, object]:
    """
    Runs `func` on every argument, either in-process (one worker) or on a process pool.

    :param func: module-level (picklable) callable.
    :param named_args: pairs of (identifier, argument).
    :param nr_procs: worker count, defaults to `get_nr_procs()`.
    :return: mapping from identifier to result, in submission order.
    """
    named_args = list(named_args)
    nr_procs = get_nr_procs(len(named_args)) if nr_procs is None else nr_procs

    if nr_procs <= 1 or len(named_args) <= 1:
        return dict(run_task(func, arg, name) for name, arg in named_args)

    results = {}
    with mp.Pool(processes=nr_procs) as pool:
        promise_arr: List = [pool.apply_async(func=run_task, args=(func, arg, name)) for name, arg in named_args]
        for promise in promise_arr:
            identifier, result = promise.get()
            results[identifier] = result
            log.info(f'Done running for: {identifier}')
    return results
