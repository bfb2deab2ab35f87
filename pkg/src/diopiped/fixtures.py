"""Reference solution data used as regression fixtures.

TABLE1 rows: (s-set as recorded, (b, a, c), d, q) for s1 = 1/2 solutions of the
form [1/2, d/b, d/a, d/c], with q the parameter of the second pattern.
TABLE2 rows: raw search solutions that no known parameterization reproduces.
ACUTE18: prefactors of the acute sequences for s1 = 1/d.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .sspace import SParams

_TABLE1 = [
    ("1/2,16/7,16/5,16/35", (7, 5, 35), 16, "1/3"),
    ("1/2,80/119,80/91,80/221", (119, 91, 221), 80, "1/5"),
    ("1/2,160/161,160/119,160/391", (161, 119, 391), 160, "1/4"),
    ("1/2,224/527,224/425,224/775", (527, 425, 775), 224, "1/7"),
    ("1/2,480/1519,480/1271,480/2009", (1519, 1271, 2009), 480, "1/9"),
    ("1/2,560/41,560/29,560/1189", (41, 29, 1189), 560, "2/5"),
    ("1/2,560/1081,560/851,560/1739", (1081, 851, 1739), 560, "1/6"),
    ("1/2,880/3479,880/2989,880/4331", (3479, 2989, 4331), 880, "1/11"),
    ("1/2,1344/3713,1344/3055,1344/5135", (3713, 3055, 5135), 1344, "1/8"),
    ("1/2,1456/6887,1456/6035,1456/8245", (6887, 6035, 8245), 1456, "1/13"),
    ("1/2,1680/1241,1680/901,1680/3869", (1241, 901, 3869), 1680, "2/7"),
    ("1/2,2240/12319,2240/10961,2240/14351", (12319, 10961, 14351), 2240, "1/15"),
    ("1/2,2464/2047,2464/1495,2464/5785", (2047, 1495, 5785), 2464, "3/11"),
    ("1/2,2640/9401,2640/7979,2640/12019", (9401, 7979, 12019), 2640, "1/10"),
    ("1/2,3264/20447,3264/18415,3264/23345", (20447, 18415, 23345), 3264, "1/17"),
    ("1/2,3520/721,3520/511,3520/7519", (721, 511, 7519), 3520, "3/8"),
    ("1/2,3696/4633,3696/3485,3696/9605", (4633, 3485, 9605), 3696, "2/9"),
    ("1/2,4160/4879,4160/3649,4160/10591", (4879, 3649, 10591), 4160, "3/13"),
    ("1/2,6240/959,6240/679,6240/13289", (959, 679, 13289), 6240, "5/13"),
    ("1/2,7280/4681,7280/3379,7280/16459", (4681, 3379, 16459), 7280, "3/10"),
]

_TABLE2 = [
    "3/10,4/15,4/5,3/20",
    "42/55,35/132,20/77,35/132",
    "41/65,455/943,13/35,23/41",
    "143/217,403/616,8/11,104/217",
    "68/401,401/721,2807/4964,4964/41303",
    "348/401,401/527,6817/8700,8700/12431",
    "314/415,415/527,1411/1570,1570/2573",
    "188/433,433/623,964/3031,38537/45308",
    "253/439,439/527,6325/7463,6325/13609",
    "205/457,457/527,5125/7769,5125/14167",
    "294/473,473/697,3738/8041,19393/26166",
    "55/479,479/721,3353/4015,4015/49337",
    "138/481,481/527,3450/8177,3450/14911",
    "341/661,661/791,1903/4627,58993/74693",
    "38/751,751/959,3686/5257,3686/102887",
    "62/769,769/791,346/5383,10726/86897",
]

ACUTE18 = {
    2: "8/3", 3: "3/2", 4: "16/15", 5: "5/6", 6: "24/35", 7: "7/12",
    8: "32/63", 9: "9/20", 10: "40/99", 11: "11/30", 12: "48/143", 13: "13/42",
    14: "56/195", 15: "15/56", 16: "64/255", 17: "17/72", 18: "72/323", 19: "19/90",
}  # fmt: skip

# t-sequence prefactors, t = coef * n (n+1)^2 (n+2) / ((n^2-2)(n^2+2n+2)(n^2+4n+2))
ACUTE18_T = {
    2: "32/3", 3: "6", 4: "64/15", 5: "10/3", 6: "96/35", 7: "7/3",
    8: "128/63", 9: "9/5", 10: "160/99", 11: "22/15", 12: "192/143", 13: "26/21",
    14: "224/195", 15: "15/14", 16: "256/255", 17: "17/18", 18: "288/323", 19: "38/45",
}  # fmt: skip


def table1() -> list[dict]:
    return [
        {"s": SParams.parse(s), "bac": bac, "d": d, "q": Fraction(q)}
        for s, bac, d, q in _TABLE1
    ]


def table2() -> list[SParams]:
    return [SParams.parse(s) for s in _TABLE2]


def acute18() -> dict[int, Fraction]:
    return {d: Fraction(c) for d, c in ACUTE18.items()}


def emit(name: str) -> list[str]:
    """JSONL lines for a built-in table."""
    if name == "table1":
        return [
            json.dumps(
                {
                    "s": row["s"].to_strings(),
                    "bac": list(row["bac"]),
                    "d": row["d"],
                    "q": str(row["q"]),
                    "provenance": "IMPORT",
                }
            )
            for row in table1()
        ]
    if name == "table2":
        return [json.dumps({"s": s.to_strings(), "provenance": "IMPORT"}) for s in table2()]
    if name == "acute18":
        return [
            json.dumps({"d": d, "s1": f"1/{d}", "coefficient": ACUTE18[d], "t_coefficient": ACUTE18_T[d]})
            for d in sorted(ACUTE18)
        ]
    raise ValueError(f"unknown fixture table {name!r}")
