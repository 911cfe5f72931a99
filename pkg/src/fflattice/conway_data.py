"""Embedded default Conway polynomial table.

One entry per line: `p a c_0 c_1 ... c_a`, ascending coefficients.
Covers p=2 through degree 18 and p in {3, 5, 7} through degree 6.
Degrees 12 and 18 for p=2 are included because the standard polynomials of
degrees 13 and 19 need levels 12 and 18.
"""

CONWAY_TABLE_TEXT = """\
2 1 1 1
2 2 1 1 1
2 3 1 1 0 1
2 4 1 1 0 0 1
2 5 1 0 1 0 0 1
2 6 1 1 0 1 1 0 1
2 7 1 1 0 0 0 0 0 1
2 8 1 0 1 1 1 0 0 0 1
2 9 1 0 0 0 1 0 0 0 0 1
2 10 1 1 1 1 0 1 1 0 0 0 1
2 11 1 0 1 0 0 0 0 0 0 0 0 1
2 12 1 1 0 1 0 1 1 1 0 0 0 0 1
2 13 1 1 0 1 1 0 0 0 0 0 0 0 0 1
2 14 1 0 0 1 0 1 0 1 0 0 0 0 0 0 1
2 15 1 0 1 0 1 1 0 0 0 0 0 0 0 0 0 1
2 16 1 0 1 1 0 1 0 0 0 0 0 0 0 0 0 0 1
2 17 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 1
2 18 1 1 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 1
3 1 1 1
3 2 2 2 1
3 3 1 2 0 1
3 4 2 0 0 2 1
3 5 1 2 0 0 0 1
3 6 2 2 1 0 2 0 1
5 1 3 1
5 2 2 4 1
5 3 3 3 0 1
5 4 2 4 4 0 1
5 5 3 4 0 0 0 1
5 6 2 0 1 4 1 0 1
7 1 4 1
7 2 3 6 1
7 3 4 0 6 1
7 4 3 4 5 0 1
7 5 4 1 0 0 0 1
7 6 3 6 4 5 1 0 1
"""
