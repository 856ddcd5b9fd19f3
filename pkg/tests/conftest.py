import os
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def rationals(lo=-8, hi=8, max_den=12):
    return st.builds(lambda n, d: Fraction(n, d), st.integers(lo * max_den, hi * max_den),
                     st.integers(1, max_den))


def raw_pairs(max_size=6):
    pair = st.tuples(rationals(), rationals(0, 3)).map(lambda t: (t[0], t[0] + t[1]))
    return st.lists(pair, max_size=max_size)
