"""Regenerate the shipped instance files under instances/.

Four fixtures:
  hamming7.json       the seven-receiver demonstration instance (indicator
                      policy), whose broadcast code is the [7, 4] Hamming code
  hamming7_zero.json  same receivers under the zero choice policy (degenerate
                      identity code, everything leaks)
  repetition3.json    three receivers each holding the other two messages
  rs7_3.json          three receivers sharing side messages 4..7, with
                      explicit choice vectors picked so the broadcast code is
                      the [7, 3] Reed-Solomon code over GF(8)
"""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

HAMMING_RECEIVERS = [
    {"side_info": [6, 7], "demand": 1},
    {"side_info": [5, 7], "demand": 2},
    {"side_info": [5, 6], "demand": 3},
    {"side_info": [5, 6, 7], "demand": 4},
    {"side_info": [1, 2, 6], "demand": 5},
    {"side_info": [1, 3, 4], "demand": 6},
    {"side_info": [2, 3, 6], "demand": 7},
]

INSTANCES = {
    "hamming7.json": {
        "field": {"p": 2},
        "n": 7,
        "receivers": HAMMING_RECEIVERS,
        "choice_policy": "indicator",
    },
    "hamming7_zero.json": {
        "field": {"p": 2},
        "n": 7,
        "receivers": HAMMING_RECEIVERS,
        "choice_policy": "zero",
    },
    "repetition3.json": {
        "field": {"p": 2},
        "n": 3,
        "receivers": [
            {"side_info": [2, 3], "demand": 1},
            {"side_info": [1, 3], "demand": 2},
            {"side_info": [1, 2], "demand": 3},
        ],
        "choice_policy": "indicator",
    },
    "rs7_3.json": {
        "field": {"p": 2, "m": 3, "poly": [1, 1, 0, 1]},
        "n": 7,
        "receivers": [
            {"side_info": [4, 5, 6, 7], "demand": 1},
            {"side_info": [4, 5, 6, 7], "demand": 2},
            {"side_info": [4, 5, 6, 7], "demand": 3},
        ],
        "choice_policy": [
            [0, 0, 0, 1, 4, 5, 5],
            [0, 0, 0, 1, 3, 2, 3],
            [0, 0, 0, 1, 6, 6, 7],
        ],
    },
}


def main() -> None:
    target = ROOT / "instances"
    target.mkdir(exist_ok=True)
    for name, doc in INSTANCES.items():
        path = target / name
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
