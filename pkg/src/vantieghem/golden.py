"""Golden fixture: the classical worked example at p = 89, b = 2.

The order of 2 mod 89 is 11, so {1, ..., 88} splits into eight cosets of
eleven elements.  The tables below are the expected decomposition, elements
in exponent order, and serve as a bit-exact regression anchor for the coset
construction and both product paths (the product of (2**n + 1) for
n = 1..88 is 1 mod 2**89 - 1).
"""

P = 89
BASE = 2
ORDER = 11
REPS = (1, 3, 5, 9, 11, 13, 19, 33)
COSETS = (
    (1, 2, 4, 8, 16, 32, 64, 39, 78, 67, 45),
    (3, 6, 12, 24, 48, 7, 14, 28, 56, 23, 46),
    (5, 10, 20, 40, 80, 71, 53, 17, 34, 68, 47),
    (9, 18, 36, 72, 55, 21, 42, 84, 79, 69, 49),
    (11, 22, 44, 88, 87, 85, 81, 73, 57, 25, 50),
    (13, 26, 52, 15, 30, 60, 31, 62, 35, 70, 51),
    (19, 38, 76, 63, 37, 74, 59, 29, 58, 27, 54),
    (33, 66, 43, 86, 83, 77, 65, 41, 82, 75, 61),
)
EXPECTED_RESIDUE = 1
