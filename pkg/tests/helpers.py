from hypothesis import strategies as st

from partmatrix import Partition, parse_partition

# part -> multiplicity maps; kept small so property runs stay fast
partitions = st.dictionaries(st.integers(1, 64), st.integers(1, 40), max_size=6).map(Partition)

odd_partitions = st.dictionaries(
    st.integers(0, 31).map(lambda k: 2 * k + 1), st.integers(1, 40), max_size=6
).map(Partition)

# filled in by test_acceptance, printed by conftest
ACCEPTANCE_LINES = []


def P(text):
    return parse_partition(text)
