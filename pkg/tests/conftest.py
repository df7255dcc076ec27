import numpy as np
import pytest

from lionman import CircleSpace, DiskSpace, SquareSpace, build_space


@pytest.fixture
def disk():
    return DiskSpace()


@pytest.fixture
def circle():
    return CircleSpace()


@pytest.fixture
def square():
    return SquareSpace()


@pytest.fixture
def chain3():
    return build_space(["a", "b", "c"], leq_pairs=[("a", "b"), ("b", "c")])


@pytest.fixture
def sierpinski():
    # opens: {}, {0}, {0,1}  =>  0 <= 1
    return build_space(["0", "1"], opens=[[], ["0"], ["0", "1"]])


@pytest.fixture
def discrete2():
    return build_space(["a", "b"], leq_pairs=[])


@pytest.fixture
def indiscrete2():
    return build_space(["a", "b"], leq_pairs=[("a", "b"), ("b", "a")])


@pytest.fixture
def fence_space():
    # a <= b >= c: a zigzag that is connected but not a chain
    return build_space(["a", "b", "c"], leq_pairs=[("a", "b"), ("c", "b")])


def brute_opens(space):
    """Test-side oracle: all subsets S with x in S and y <= x implying y in S,
    checked straight from the leq relation."""
    pts = list(space.points)
    n = len(pts)
    out = []
    for mask in range(1 << n):
        s = frozenset(pts[i] for i in range(n) if mask >> i & 1)
        if all(y in s for x in s for y in pts if space.leq(y, x)):
            out.append(s)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
