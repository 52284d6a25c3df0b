from hypothesis import strategies as st

from schurmzf.combinatorics import Partition


@st.composite
def partitions(draw, max_size=6, max_len=4, min_size=1):
    n = draw(st.integers(min_size, max_size))
    parts = []
    left = n
    while left and len(parts) < max_len:
        cap = min(left, parts[-1] if parts else left)
        p = draw(st.integers(1, cap))
        parts.append(p)
        left -= p
    return Partition(parts)
