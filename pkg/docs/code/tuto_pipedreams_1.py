import gcdegen as gd

# Permutations are parsed from one-line notation
w = gd.Permutation.from_string("1432")
print("length:", gd.length(w))

# Every reduced pipe dream of w, ordered by its sorted cell list
for R in gd.enumerate_pipe_dreams(w):
    print(R.sorted_cells(), "->", R.permutation)

# The Schubert polynomial, twice
by_pipes = gd.schubert_pipedreams(w)
by_divided_differences = gd.schubert_divided_difference(w)
assert by_pipes == by_divided_differences
print(by_pipes)
