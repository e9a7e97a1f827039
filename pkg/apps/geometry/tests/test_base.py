"""
Base test case classes for geometry tests.
Scans are expensive, so results are shared across test classes.
"""

import unittest
from functools import lru_cache

from django.conf import settings
from django.test import SimpleTestCase

from apps.geometry.scan import scan

# n: (a2, ..., a7, I, R) for n = 3..30
TABLE_SMALL = {
    3: (0, 0, 0, 0, 0, 0, 0, 1),
    4: (0, 0, 0, 0, 0, 0, 1, 4),
    5: (5, 0, 0, 0, 0, 0, 5, 11),
    6: (12, 0, 0, 0, 0, 0, 13, 24),
    7: (35, 0, 0, 0, 0, 0, 35, 50),
    8: (40, 8, 0, 0, 0, 0, 49, 80),
    9: (126, 0, 0, 0, 0, 0, 126, 154),
    10: (140, 20, 0, 0, 0, 0, 161, 220),
    11: (330, 0, 0, 0, 0, 0, 330, 375),
    12: (228, 60, 12, 0, 0, 0, 301, 444),
    13: (715, 0, 0, 0, 0, 0, 715, 781),
    14: (644, 112, 0, 0, 0, 0, 757, 952),
    15: (1365, 0, 0, 0, 0, 0, 1365, 1456),
    16: (1168, 208, 0, 0, 0, 0, 1377, 1696),
    17: (2380, 0, 0, 0, 0, 0, 2380, 2500),
    18: (1512, 216, 54, 54, 0, 0, 1837, 2466),
    19: (3876, 0, 0, 0, 0, 0, 3876, 4029),
    20: (3360, 480, 0, 0, 0, 0, 3841, 4500),
    21: (5985, 0, 0, 0, 0, 0, 5985, 6175),
    22: (5280, 660, 0, 0, 0, 0, 5941, 6820),
    23: (8855, 0, 0, 0, 0, 0, 8855, 9086),
    24: (6144, 864, 264, 24, 0, 0, 7297, 9024),
    25: (12650, 0, 0, 0, 0, 0, 12650, 12926),
    26: (11284, 1196, 0, 0, 0, 0, 12481, 13988),
    27: (17550, 0, 0, 0, 0, 0, 17550, 17875),
    28: (15680, 1568, 0, 0, 0, 0, 17249, 19180),
    29: (23751, 0, 0, 0, 0, 0, 23751, 24129),
    30: (13800, 2250, 420, 180, 120, 30, 16801, 21480),
}

# n: (a2/n, ..., a7/n, (I-1)/n)
TABLE_PER_SLICE = {
    6: (2, 0, 0, 0, 0, 0, 2),
    12: (19, 5, 1, 0, 0, 0, 25),
    18: (84, 12, 3, 3, 0, 0, 102),
    24: (256, 36, 11, 1, 0, 0, 304),
    30: (460, 75, 14, 6, 4, 1, 560),
    36: (1179, 109, 11, 6, 0, 0, 1305),
    42: (1786, 194, 27, 13, 0, 0, 2020),
    48: (3168, 220, 25, 7, 0, 0, 3420),
    54: (4722, 288, 24, 12, 0, 0, 5046),
    60: (6251, 422, 63, 12, 0, 5, 6753),
    66: (9172, 460, 35, 15, 0, 0, 9682),
    72: (12428, 504, 35, 13, 0, 0, 12980),
    78: (15920, 642, 42, 18, 0, 0, 16622),
    84: (20007, 805, 43, 28, 0, 0, 20883),
    90: (25230, 863, 45, 21, 4, 1, 26164),
    96: (31240, 948, 53, 19, 0, 0, 32260),
    102: (37786, 1096, 56, 24, 0, 0, 38962),
    108: (45447, 1201, 53, 24, 0, 0, 46725),
    114: (53768, 1368, 63, 27, 0, 0, 55226),
    120: (62652, 1601, 95, 31, 0, 5, 64384),
    126: (73676, 1658, 72, 34, 0, 0, 75440),
    132: (85319, 1825, 71, 30, 0, 0, 87245),
    138: (97990, 2002, 77, 33, 0, 0, 100102),
    144: (112100, 2136, 77, 31, 0, 0, 114344),
    150: (127070, 2345, 84, 36, 4, 1, 129540),
    156: (143635, 2549, 85, 36, 0, 0, 146305),
    162: (161520, 2736, 87, 39, 0, 0, 164382),
    168: (180504, 3008, 95, 47, 0, 0, 183654),
    174: (201448, 3178, 98, 42, 0, 0, 204766),
    180: (223251, 3470, 129, 42, 0, 5, 226897),
    186: (247562, 3630, 105, 45, 0, 0, 251342),
    192: (273144, 3844, 109, 43, 0, 0, 277140),
    198: (300294, 4092, 108, 48, 0, 0, 304542),
    204: (329171, 4357, 113, 48, 0, 0, 333689),
    210: (359556, 4661, 125, 55, 4, 1, 364402),
    216: (392564, 4848, 119, 49, 0, 0, 397580),
    222: (426836, 5166, 126, 54, 0, 0, 432182),
    228: (463303, 5441, 127, 54, 0, 0, 468925),
    234: (501762, 5718, 129, 57, 0, 0, 507666),
    240: (541612, 6121, 165, 61, 0, 5, 547964),
    246: (584782, 6340, 140, 60, 0, 0, 591322),
    252: (629399, 6693, 137, 70, 0, 0, 636299),
    258: (676580, 6972, 147, 63, 0, 0, 683762),
    264: (725976, 7276, 151, 61, 0, 0, 733464),
    270: (777420, 7643, 150, 66, 4, 1, 785284),
    276: (831575, 7969, 155, 66, 0, 0, 839765),
    282: (887986, 8326, 161, 69, 0, 0, 896542),
    288: (947132, 8640, 161, 67, 0, 0, 956000),
    294: (1008358, 9056, 174, 76, 0, 0, 1017664),
    300: (1072171, 9462, 203, 72, 0, 5, 1081913),
    306: (1139436, 9780, 171, 75, 0, 0, 1149462),
    312: (1208944, 10164, 179, 73, 0, 0, 1219360),
    318: (1281100, 10582, 182, 78, 0, 0, 1291942),
    324: (1356315, 10957, 179, 78, 0, 0, 1367529),
    330: (1434110, 11375, 189, 81, 4, 1, 1445760),
    336: (1514816, 11856, 193, 89, 0, 0, 1526954),
    342: (1598970, 12216, 192, 84, 0, 0, 1611462),
    348: (1685843, 12661, 197, 84, 0, 0, 1698785),
    354: (1775788, 13108, 203, 87, 0, 0, 1789186),
    360: (1868312, 13669, 231, 91, 0, 5, 1882308),
    366: (1965272, 14010, 210, 90, 0, 0, 1979582),
    372: (2064919, 14465, 211, 90, 0, 0, 2079685),
    378: (2167754, 14930, 219, 97, 0, 0, 2183000),
    384: (2274136, 15396, 221, 91, 0, 0, 2289844),
    390: (2383690, 15885, 224, 96, 4, 1, 2399900),
    396: (2496999, 16369, 221, 96, 0, 0, 2513685),
    402: (2613536, 16896, 231, 99, 0, 0, 2630762),
    408: (2733888, 17380, 235, 97, 0, 0, 2751600),
    414: (2857752, 17898, 234, 102, 0, 0, 2875986),
    420: (2984383, 18598, 273, 112, 0, 5, 3003371),
}

slow = unittest.skipUnless(settings.NGON_SLOW_TESTS, "set NGON_SLOW_TESTS=True to run")


@lru_cache(maxsize=None)
def cached_scan(n, mode='slice', jobs=1):
    return scan(n, mode=mode, jobs=jobs)


class BaseScanTestCase(SimpleTestCase):
    """
    Base test case for anything that needs scan results.

    Inherit from this class and call `self.scan(n, mode)`; repeated
    requests for the same scan reuse the first result.
    """

    def scan(self, n, mode='slice', jobs=1):
        return cached_scan(n, mode, jobs)

    def assertRowMatches(self, n, counts):
        """Compare a CountsRecord with the small-n table row"""
        row = TABLE_SMALL[n]
        self.assertEqual(tuple(counts.a[k] for k in range(2, 8)), row[:6], f"a_k for n={n}")
        self.assertEqual((counts.I, counts.R), row[6:], f"I, R for n={n}")
