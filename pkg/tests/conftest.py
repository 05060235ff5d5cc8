import os

import hypothesis
import numpy as np

np.seterr(all="warn")

# The numba kernels compile on first use.
hypothesis.settings.register_profile("dev", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))
