"""A tour of the sequence families: Thue-Morse and everything derived from it.

Run with: python demos/01_sequence_tour.py
"""

from tmseq import (
    alpha_prefix,
    beta_prefix,
    definitions_agree,
    partition_decompose,
    seeded_flip_prefix,
    theta_prefix,
    tm_prefix_flip,
    v_prefix,
    vartheta_prefix,
    w_prefix,
    Word,
)
from tmseq.method_b import kappa_prefix

print("The Thue-Morse sequence M, four ways")
print("-" * 52)
ok, _ = definitions_agree(1 << 16)
print(f"M[0:32]   = {tm_prefix_flip(32)}")
print(f"all four generators agree on 2^16 symbols: {ok}")
print()

print("Partition into aligned blocks of length 4 (X = 0110, Y = 1001)")
view = partition_decompose(tm_prefix_flip(32), 2)
print(f"labels    = {' '.join(view.labels)}")
print()

print("Ternary square-free derivatives")
print("-" * 52)
print(f"theta     = {theta_prefix(32)}   (second of 00/11 marked)")
print(f"vartheta  = {vartheta_prefix(32)}   (first of 00/11 marked)")
print(f"v         = {v_prefix(20)}   (1s between consecutive 0s)")
print(f"w         = {w_prefix(20)}   (vartheta relabeled; equals v)")
print(f"beta      = {beta_prefix(32)}   (theta shifted to letters 1,2,3)")
print()

print("Binary encodings")
print("-" * 52)
print(f"alpha(1,2,3) = {alpha_prefix(40)}")
print(f"alpha(4,5,6) = {alpha_prefix(40, (4, 5, 6))}")
print(f"kappa        = {kappa_prefix(None, 40)}")
print()

print("Seeded flipping: W -> W + complement(W)")
for seed in ("0", "00", "01", "110"):
    w = seeded_flip_prefix(Word.from_str(seed, 2), 24)
    note = "  <- this is M itself" if seed == "0" else ""
    print(f"seed {seed:>3}  -> {w}{note}")
