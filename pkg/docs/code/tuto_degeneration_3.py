import gcdegen as gd

w = gd.Permutation.from_string("2143")

# antidiagonal initial ideal against the intersection of pipe-dream primes
report = gd.verify_degeneration(w)
print("in(I_w):", report.initial)
print("intersection:", report.intersection)
assert report.equal

# faces of the Gel'fand-Cetlin polytope cut out by the pipe dreams of w
lam = gd.HighestWeight.staircase(4)
for R in gd.enumerate_pipe_dreams(w):
    face = gd.face_from_pipe_dream(R, lam)
    print(R.sorted_cells(), "dimension", gd.face_dimension(face))
print("lattice points on the union:", gd.union_face_count(w, lam))
