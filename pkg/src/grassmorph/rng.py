"""Named, splittable seeding.

Every random choice in the package is drawn from ``stream(seed, name, ...)``:
a ``random.Random`` whose state is a hash of the root seed and the path of
names. Two streams with different names never share state, so adding a draw
in one place never shifts the draws made elsewhere.
"""
from __future__ import annotations

import hashlib
import random


def child_seed(seed: int, *names) -> int:
    h = hashlib.blake2b(digest_size=8)
    h.update(str(int(seed)).encode())
    for name in names:
        h.update(b"\x00")
        h.update(str(name).encode())
    return int.from_bytes(h.digest(), "big")


def stream(seed: int, *names) -> random.Random:
    return random.Random(child_seed(seed, *names))
