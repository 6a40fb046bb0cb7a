"""Per-trial random streams.

Every trial owns one root seed; each purpose (sample, parity, tau, ...) gets
its own generator derived from it, so a trial replays bit-exactly no matter
which worker runs it or which other streams were consumed.
"""
from typing import Dict, Optional, Tuple, Union

import numpy as np

STREAMS = ("sample", "parity", "tau", "delta", "prefix", "branch", "split", "order", "weights")


class TrialStreams:
    def __init__(self, seed: int, spawn_key: Tuple[int, ...] = ()):
        self.seed = int(seed)
        self.spawn_key = tuple(spawn_key)
        self._generators: Dict[str, np.random.Generator] = {}

    def __getitem__(self, name: str) -> np.random.Generator:
        if name not in STREAMS:
            raise KeyError(f"unknown random stream {name!r}")
        if name not in self._generators:
            sequence = np.random.SeedSequence(self.seed, spawn_key=self.spawn_key + (STREAMS.index(name),))
            self._generators[name] = np.random.default_rng(sequence)
        return self._generators[name]

    def child(self, index: int) -> "TrialStreams":
        """Independent streams for sub-run `index` (trial ids, resampled orders)"""
        return TrialStreams(self.seed, self.spawn_key + (len(STREAMS) + int(index),))


def as_streams(rng: Union[None, int, np.random.Generator, TrialStreams]) -> TrialStreams:
    if isinstance(rng, TrialStreams):
        return rng
    if isinstance(rng, np.random.Generator):
        return TrialStreams(int(rng.integers(0, 2 ** 63)))
    if rng is None:
        return TrialStreams(int(np.random.SeedSequence().entropy % 2 ** 63))
    return TrialStreams(int(rng))


def trial_streams(root_seed: int, trial_id: int, salt: Optional[int] = None) -> TrialStreams:
    key = (int(trial_id),) if salt is None else (int(salt), int(trial_id))
    return TrialStreams(root_seed, key)
