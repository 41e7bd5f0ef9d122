from fractions import Fraction

from hypothesis import strategies as st


def rationals(bound=3, max_den=12):
    return st.builds(
        lambda q, p: Fraction(p, q),
        st.integers(1, max_den),
        st.integers(-bound * max_den, bound * max_den),
    )


def points(rank, bound=3, max_den=12):
    return st.tuples(*[rationals(bound, max_den) for _ in range(rank)])


def words(rank, max_len=8):
    return st.lists(st.integers(1, rank), max_size=max_len).map(tuple)
