from hypothesis import strategies as st

from jackd.partitions import Partition


@st.composite
def partitions(draw, max_n=8, max_width=None):
    n = draw(st.integers(0, max_n))
    parts = []
    left = n
    cap = max_width or n
    while left:
        p = draw(st.integers(1, min(left, cap)))
        parts.append(p)
        left -= p
        cap = min(cap, p)
    return Partition(sorted(parts, reverse=True))
