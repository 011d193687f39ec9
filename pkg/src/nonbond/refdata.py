"""Frozen reference values backing the verification suite.

Complete count-table rows, partially printed rows, square-board rows,
maximum fillings, generating function coefficient tables, row-sum
series, and Taylor slices for small widths.  Checkers compare engine
output against these values.  The width-6 Taylor slice entries for
one through three dominoes are a known misprint (they duplicate the
width-5 line); they are kept verbatim so the mismatch is detected
rather than silently corrected.
"""


# Complete reference rows: COUNT_ROWS[c][r] lists D(r, c, d) for
# d = 0..max fill; row length is part of the reference.
COUNT_ROWS = {
    1: {
        0: [1],
        1: [1],
        2: [1, 1],
        3: [1, 2],
        4: [1, 3],
        5: [1, 4, 1],
        6: [1, 5, 3],
        7: [1, 6, 6],
        8: [1, 7, 10, 1],
        9: [1, 8, 15, 4],
        10: [1, 9, 21, 10],
        11: [1, 10, 28, 20, 1],
        12: [1, 11, 36, 35, 5],
    },
    2: {
        0: [1],
        1: [1, 1],
        2: [1, 4],
        3: [1, 7, 1],
        4: [1, 10, 9],
        5: [1, 13, 26, 1],
        6: [1, 16, 52, 16],
        7: [1, 19, 87, 70, 1],
        8: [1, 22, 131, 190, 25],
        9: [1, 25, 184, 403, 155, 1],
        10: [1, 28, 246, 736, 553, 36],
        11: [1, 31, 317, 1216, 1462, 301, 1],
        12: [1, 34, 397, 1870, 3206, 1372, 49],
    },
    3: {
        0: [1],
        1: [1, 2],
        2: [1, 7, 1],
        3: [1, 12, 12],
        4: [1, 17, 45, 12],
        5: [1, 22, 103, 84, 3],
        6: [1, 27, 186, 314, 92, 1],
        7: [1, 32, 294, 824, 590, 60],
        8: [1, 37, 427, 1739, 2264, 726, 25],
        9: [1, 42, 585, 3184, 6467, 4234, 616, 4],
        10: [1, 47, 768, 5284, 15174, 16587, 5650, 355, 1],
        11: [1, 52, 976, 8164, 30985, 50342, 30982, 5544, 149],
        12: [1, 57, 1209, 11949, 57125, 127684, 123006, 43638, 4051, 39],
    },
    4: {
        0: [1],
        1: [1, 3],
        2: [1, 10, 9],
        3: [1, 17, 45, 12],
        4: [1, 24, 126, 148, 15],
        5: [1, 31, 256, 629, 349, 17],
        6: [1, 38, 435, 1758, 2327, 730, 22],
        7: [1, 45, 663, 3874, 8945, 7026, 1240, 9],
        8: [1, 52, 940, 7320, 25312, 36304, 17782, 1904, 25],
        9: [1, 59, 1266, 12439, 58880, 130822, 123240, 39512, 2799, 14],
        10: [1, 66, 1641, 19574, 119498, 372564, 561349, 361220, 78445, 3586, 17],
    },
    5: {
        0: [1],
        1: [1, 4, 1],
        2: [1, 13, 26, 1],
        3: [1, 22, 103, 84, 3],
        4: [1, 31, 256, 629, 349, 17],
        5: [1, 40, 490, 2204, 3337, 1244, 42],
        6: [1, 49, 805, 5485, 15504, 16072, 4555, 132, 1],
        7: [1, 58, 1201, 11196, 48977, 95706, 72644, 16110, 570],
        8: [1, 67, 1678, 20066, 122063, 373374, 535434, 313802, 58927, 1854, 12],
        9: [1, 76, 2236, 32824, 259553, 1116890, 2528682, 2790146, 1313712, 206954, 6300, 20],
    },
    6: {
        0: [1],
        1: [1, 5, 3],
        2: [1, 16, 52, 16],
        3: [1, 27, 186, 314, 92, 1],
        4: [1, 38, 435, 1758, 2327, 730, 22],
        5: [1, 49, 805, 5485, 15504, 16072, 4555, 132, 1],
        6: [1, 60, 1296, 12760, 59806, 128236, 112704, 32308, 2324, 16],
        7: [1, 71, 1908, 24908, 168949, 593937, 1029205, 792701, 227482, 17389, 159, 1],
        8: [1, 82, 2641, 43260, 390830, 1982122, 5530922, 8055060, 5586358, 1577984, 141496, 2686, 18],
    },
    7: {
        0: [1],
        1: [1, 6, 6],
        2: [1, 19, 87, 70, 1],
        3: [1, 32, 294, 824, 590, 60],
        4: [1, 45, 663, 3874, 8945, 7026, 1240, 9],
        5: [1, 58, 1201, 11196, 48977, 95706, 72644, 16110, 570],
        6: [1, 71, 1908, 24908, 168949, 593937, 1029205, 792701, 227482, 17389, 159, 1],
        7: [1, 84, 2784, 47200, 444544, 2373216, 7067000, 11186540, 8632116, 2805332, 291836, 4708, 7],
        8: [1, 97, 3829, 80269, 979481, 7189142, 31790635, 82896379, 121946290, 94134303, 34072987, 4847487, 211850, 1550, 8],
    },
    8: {
        0: [1],
        1: [1, 7, 10, 1],
        2: [1, 22, 131, 190, 25],
        3: [1, 37, 427, 1739, 2264, 726, 25],
        4: [1, 52, 940, 7320, 25312, 36304, 17782, 1904, 25],
        5: [1, 67, 1678, 20066, 122063, 373374, 535434, 313802, 58927, 1854, 12],
        6: [1, 82, 2641, 43260, 390830, 1982122, 5530922, 8055060, 5586358, 1577984, 141496, 2686, 18],
        7: [1, 97, 3829, 80269, 979481, 7189142, 31790635, 82896379, 121946290, 94134303, 34072987, 4847487, 211850, 1550, 8],
        8: [1, 112, 5242, 134468, 2085933, 20397928, 127424616, 505799712, 1249225399, 1850015072, 1553518376, 682237872, 139548569, 11218612, 294974, 2112, 16],
        9: [1, 127, 6880, 209232, 3958594, 48840665, 401073664, 2201053787, 8005746668, 18927854296, 28198554465, 25310043984, 12852685831, 3379935390, 405893730, 18447965, 244776, 1049, 9],
    },
    9: {
        0: [1],
        1: [1, 8, 15, 4],
        2: [1, 25, 184, 403, 155, 1],
        3: [1, 42, 585, 3184, 6467, 4234, 616, 4],
        4: [1, 59, 1266, 12439, 58880, 130822, 123240, 39512, 2799, 14],
        5: [1, 76, 2236, 32824, 259553, 1116890, 2528682, 2790146, 1313712, 206954, 6300, 20],
        6: [1, 93, 3495, 69147, 787891, 5327437, 21321326, 49165252, 62051636, 39434252, 11086229, 1145363, 31238, 100, 1],
        7: [1, 110, 5043, 126312, 1905925, 18044808, 108514562, 411721872, 963380633, 1335889176, 1033075988, 407606718, 71853631, 4536260, 65621, 110],
        8: [1, 127, 6880, 209232, 3958594, 48840665, 401073664, 2201053787, 8005746668, 18927854296, 28198554465, 25310043984, 12852685831, 3379935390, 405893730, 18447965, 244776, 1049, 9],
    },
}

# Rows printed only in part: PARTIAL_ROWS[c][r] maps d to the count.
PARTIAL_ROWS = {
    9: {
        9: {
            0: 1, 1: 144, 2: 9006, 3: 322820,
            4: 7374205, 5: 112989064, 6: 1191296018, 7: 8734437124,
            18: 617404,
        },
    },
}

# Square boards: SQUARE_ROWS[r] lists D(r, r, d) for d = 0..max fill.
SQUARE_ROWS = {
    0: [1],
    1: [1],
    2: [1, 4],
    3: [1, 12, 12],
    4: [1, 24, 126, 148, 15],
    5: [1, 40, 490, 2204, 3337, 1244, 42],
    6: [1, 60, 1296, 12760, 59806, 128236, 112704, 32308, 2324, 16],
}

# Largest domino count that fits, as printed: MAX_FILL[(r, c)].
MAX_FILL = {
    (1, 1): 0, (2, 1): 1, (2, 2): 1, (3, 1): 1, (3, 2): 2, (3, 3): 2,
    (4, 1): 1, (4, 2): 2, (4, 3): 3, (4, 4): 4, (5, 1): 2, (5, 2): 3,
    (5, 3): 4, (5, 4): 5, (5, 5): 6, (6, 1): 2, (6, 2): 3, (6, 3): 5,
    (6, 4): 6, (6, 5): 7, (6, 6): 9, (7, 1): 2, (7, 2): 4, (7, 3): 5,
    (7, 4): 7, (7, 5): 8, (7, 6): 10, (7, 7): 12, (8, 1): 3, (8, 2): 4,
    (8, 3): 6, (8, 4): 8, (8, 5): 10, (8, 6): 12, (8, 7): 14, (8, 8): 16,
    (9, 1): 3, (9, 2): 5, (9, 3): 7, (9, 4): 9, (9, 5): 11, (9, 6): 14,
    (9, 7): 15, (9, 8): 18, (10, 1): 3, (10, 2): 5, (10, 3): 8, (10, 4): 10,
    (10, 5): 13, (10, 6): 15, (10, 7): 18, (11, 1): 4, (11, 2): 6, (11, 3): 8,
    (11, 4): 11, (11, 5): 13, (11, 6): 17, (12, 1): 4, (12, 2): 6, (12, 3): 9,
    (12, 4): 12, (12, 5): 15, (12, 6): 18,
}

# Printed max-fill cells contradicted by the count-table rows of the
# same source: (r, c) -> (value as printed, value per the counts).
# Both the DP and the brute-force oracle give the corrected value.
MISPRINTED_MAX_FILL = {
    (6, 5): (7, 8), (7, 6): (10, 11),
}

# Exact generating function terms for narrow widths:
# GF_TERMS[c] = (numerator, denominator), each {(i, j): coef}
# for the x^i y^j term.
GF_TERMS = {1: ({(0, 0): 1, (2, 1): 1}, {(0, 0): 1, (1, 0): -1, (3, 1): -1}),
 2: ({(0, 0): 1, (1, 1): 1, (2, 1): 1, (3, 2): -1},
     {(0, 0): 1, (1, 0): -1, (2, 1): -2, (3, 1): -1, (4, 2): 1}),
 3: ({(0, 0): 1,
      (1, 1): 2,
      (2, 1): 2,
      (2, 2): 1,
      (3, 2): 2,
      (4, 2): 1,
      (4, 3): 1,
      (5, 4): -4,
      (6, 4): -2,
      (6, 5): -1,
      (8, 6): 1},
     {(0, 0): 1,
      (1, 0): -1,
      (2, 1): -3,
      (3, 1): -2,
      (3, 2): -3,
      (4, 2): -4,
      (4, 3): -2,
      (5, 2): -1,
      (5, 3): -3,
      (6, 4): 5,
      (7, 4): 2,
      (7, 5): 3,
      (8, 6): 1,
      (9, 6): -1}),
 4: ({(0, 0): 1,
      (1, 1): 4,
      (2, 1): 2,
      (2, 2): 12,
      (3, 2): 5,
      (3, 3): 20,
      (4, 2): 1,
      (4, 3): 9,
      (4, 4): 23,
      (5, 3): 1,
      (5, 4): -7,
      (5, 5): 20,
      (6, 4): -3,
      (6, 5): -11,
      (6, 6): 18,
      (7, 5): -3,
      (7, 6): 6,
      (7, 7): 4,
      (8, 6): 3,
      (8, 7): 1,
      (8, 8): 2,
      (9, 7): 3,
      (9, 8): 3,
      (10, 8): -1,
      (11, 9): -1,
      (11, 10): -6,
      (12, 11): -1,
      (13, 12): -1},
     {(0, 0): 1,
      (1, 0): -1,
      (1, 1): 1,
      (2, 1): -6,
      (3, 1): -2,
      (3, 2): -23,
      (3, 3): -1,
      (4, 2): -8,
      (4, 3): -48,
      (4, 4): -1,
      (5, 2): -1,
      (5, 3): -15,
      (5, 4): -55,
      (6, 3): -1,
      (6, 4): 7,
      (6, 5): -55,
      (7, 4): 3,
      (7, 5): 20,
      (7, 6): -66,
      (8, 5): 3,
      (8, 6): 3,
      (8, 7): -41,
      (9, 6): -3,
      (9, 7): -1,
      (9, 8): -18,
      (10, 7): -3,
      (10, 8): -9,
      (10, 9): -13,
      (11, 8): 1,
      (11, 9): -3,
      (11, 10): -9,
      (12, 9): 1,
      (12, 10): 6,
      (12, 11): -2,
      (13, 11): 1,
      (13, 12): -1,
      (14, 12): 1})}

# Row-sum (y = 1) generating functions: coefficient lists in x,
# (numerator, denominator), constant term first.
ROW_SUM_GF = {2: ([1, 1, 1, -1], [1, -1, -2, -1, 1]),
 3: ([1, 2, 3, 2, 2, -4, -3, 0, 1], [1, -1, -3, -5, -6, -4, 5, 5, 1, -1])}

# Taylor slices in the domino-count variable, as printed:
# (c, d) -> (numerator {x exponent: coef}, k) for num / (1 - x)^k.
PUBLISHED_SLICES = {(2, 0): ({0: 1}, 1),
 (2, 1): ({1: 1, 2: 2}, 2),
 (2, 2): ({3: 1, 4: 6, 5: 2}, 3),
 (2, 3): ({5: 1, 6: 12, 7: 12, 8: 2}, 4),
 (3, 0): ({0: 1}, 1),
 (3, 1): ({1: 2, 2: 3}, 2),
 (3, 2): ({2: 1, 3: 9, 4: 12, 5: 3}, 3),
 (3, 3): ({4: 12, 5: 36, 6: 50, 7: 24, 8: 3}, 4),
 (4, 0): ({0: 1}, 1),
 (4, 1): ({1: 3, 2: 4}, 2),
 (4, 2): ({2: 9, 3: 18, 4: 18, 5: 4}, 3),
 (4, 3): ({3: 12, 4: 100, 5: 109, 6: 82, 7: 36, 8: 4}, 4),
 (5, 0): ({0: 1}, 1),
 (5, 1): ({1: 4, 2: 5}, 2),
 (5, 2): ({1: 1, 2: 23, 3: 28, 4: 24, 5: 5}, 3),
 (5, 3): ({2: 1, 3: 80, 4: 299, 5: 188, 6: 108, 7: 48, 8: 5}, 4),
 (6, 0): ({0: 1}, 1),
 (6, 1): ({1: 4, 2: 5}, 2),
 (6, 2): ({1: 1, 2: 23, 3: 28, 4: 24, 5: 5}, 3),
 (6, 3): ({2: 1, 3: 80, 4: 299, 5: 188, 6: 108, 7: 48, 8: 5}, 4)}

# Printed slices known to disagree with the count tables: the
# width-6 lines duplicate the width-5 expansion.
MISPRINTED_SLICES = {(6, 1), (6, 2), (6, 3)}
