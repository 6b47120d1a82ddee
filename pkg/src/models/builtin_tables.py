"""
Published reference tables in canonical table-file format.

verhoeff-regular    block design code
verhoeff-irregular  irregular code (detects phonetic errors)
dunning-t3          permutation-free code; its source prints the last row
                    label as a second "8", read here as row 9
"""

VERHOEFF_REGULAR = """base 10
0 3 1 2 9 4 5 6 7 8
2 1 3 0 5 8 7 4 9 6
3 0 2 1 7 6 9 8 5 4
1 2 0 3 8 9 4 5 6 7
5 7 9 6 4 1 8 2 3 0
6 4 8 7 0 5 2 9 1 3
7 9 5 8 3 0 6 1 4 2
8 6 4 9 1 3 0 7 2 5
9 5 7 4 6 2 3 0 8 1
4 8 6 5 2 7 1 3 0 9
"""

VERHOEFF_IRREGULAR = """base 10
0 3 4 9 6 7 5 8 2 1
5 1 0 2 8 3 9 6 7 4
7 6 2 4 1 0 8 9 3 5
1 5 8 3 7 6 4 0 9 2
2 9 7 5 4 8 1 3 0 6
6 7 9 0 3 5 2 4 1 8
3 8 1 7 5 9 6 2 4 0
9 4 5 8 2 1 0 7 6 3
4 0 6 1 9 2 3 5 8 7
8 2 3 6 0 4 7 1 5 9
"""

DUNNING_T3 = """base 10
0 9 7 1 2 3 4 8 6 5
5 1 3 7 6 9 2 0 4 8
8 4 2 6 3 0 7 5 9 1
2 5 8 3 7 4 9 6 1 0
1 7 6 0 4 2 8 9 5 3
6 8 1 9 0 5 3 4 7 2
9 3 0 8 5 7 6 1 2 4
4 2 9 5 8 1 0 7 3 6
3 0 5 4 9 6 1 2 8 7
7 6 4 2 1 8 5 3 0 9
"""

BUILTIN_TABLE_TEXT = {
    'verhoeff-regular': VERHOEFF_REGULAR,
    'verhoeff-irregular': VERHOEFF_IRREGULAR,
    'dunning-t3': DUNNING_T3,
}
