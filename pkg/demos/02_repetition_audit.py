"""Repetition structure: where the squares of M live, and what never occurs.

Run with: python demos/02_repetition_audit.py
"""

from tmseq import (
    check_no_overlapping_occurrences,
    classify_tm_squares,
    find_squares_all,
    is_cube_free,
    is_overlap_free,
    leftmost_square,
    lookalike_audit,
    theta_prefix,
    tm_prefix_flip,
)

N = 1 << 14
m = tm_prefix_flip(N)

print(f"Thue-Morse prefix of length {N}")
print("-" * 52)
overlap_ok, _ = is_overlap_free(m)
cube_ok, _ = is_cube_free(m)
print(f"overlap-free: {overlap_ok}   cube-free: {cube_ok}")

witness = leftmost_square(m)
print(f"but squares exist: root '{witness.root}' at index {witness.start}")
print()

print("Square census by root classification")
census = classify_tm_squares(N)
for key, count in census.counts.items():
    print(f"  {key:30s} {count:6d}")
print()
print("Sample of squares whose root is not a power-of-two block:")
for entry in census.other_entries[:5]:
    print(f"  root '{entry.root}' (length {len(entry.root)}) at index {entry.start}")
print()

print("Similar blocks never intersect")
violations = check_no_overlapping_occurrences(tm_prefix_flip(1 << 12), 32)
print(f"  overlapping same-factor pairs up to length 32: {len(violations)}")
print()

print("Unaligned look-alike blocks sit centered in doubled opposites")
for k in (2, 3, 4):
    audit = lookalike_audit(m, k)
    print(
        f"  k={k}: {audit['x_prime']:4d} X' + {audit['y_prime']:4d} Y' occurrences,"
        f" {len(audit['exceptions'])} placement exceptions"
    )
print()

print("Derived ternary sequences are square-free outright")
report = find_squares_all(theta_prefix(10**6))
print(f"  theta, 10^6 symbols: square_free = {report.square_free}")
