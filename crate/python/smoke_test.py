"""Smoke test for the Python bindings.

Build and run from the repository root:

    cargo build --release -p catabolism-python --features extension-module
    cp target/release/libcatabolism_py.so python/catabolism.so
    python3 python/smoke_test.py
"""

import catabolism as cb

w = [1, 6, 8, 4, 2, 9, 5, 7, 3]

assert cb.cocharge_label(w) == [0, 2, 3, 1, 0, 3, 1, 2, 0]
assert cb.standard_word_from_labeling([0, 2, 3, 1, 0, 3, 1, 2, 0]) == w
assert cb.catabolizability(w) == [3, 2, 1, 1, 1, 1]

steps = cb.trace(w)
assert len(steps) == 13
assert steps[1] == (2, "corotation", [3, 0, 2, 3, 1, 0, 3, 1], [1])
assert steps[6][2] == [4, 4, 3, 0, 2]
assert steps[-1][3] == [3, 2, 1, 1, 1, 1]

t = cb.insertion_tableau(w)
assert t == cb.Tableau.from_word(w)
assert t.ctype() == t.ctype("column") == [3, 2, 1, 1, 1, 1]
assert sum(t.shape) == len(t) == 9
assert cb.insertion_tableau(t.rowword()) == t
assert t.is_catabolizable([3, 2, 1, 1, 1, 1])
assert cb.Tableau([[1, 2], [3]]).catabolizable_set() == [[2, 1], [1, 1, 1]]

assert cb.run_algorithm3([1, 2, 3, 4], [3, 1])
size, chains = cb.greene(w, 2)
assert size == 5 and sum(map(len, chains)) == 5

table = cb.frobenius_table([1, 1, 1])
assert table == {(3,): [1], (2, 1): [0, 1, 1], (1, 1, 1): [0, 0, 0, 1]}

try:
    cb.cocharge_label([1, 2, 2])
except ValueError as e:
    assert "standard" in str(e)
else:
    raise AssertionError("expected ValueError")

report = cb.verify(4)
assert all(ce is None for _, _, ce in report), report
assert all(cases > 0 for _, cases, _ in report)

print("python bindings ok:", len(report), "checks passed at n <= 4")
