import os

import numpy as np

seed = 42
random_state = np.random.RandomState(seed=42)

# Upper bound on the number of kets in a single degree shell
capacity = int(os.environ.get("PARABOSE_CAPACITY", 50000))


def set_random_state(seed_value: int):
    global seed, random_state
    seed = seed_value
    random_state.seed(seed_value)


def set_capacity(value: int):
    global capacity
    capacity = value
