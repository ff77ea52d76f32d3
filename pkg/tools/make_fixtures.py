"""Regenerate src/fourpage/data/fixtures from the spherogram knot tables.

Offline helper; spherogram is not a runtime dependency.
    python tools/make_fixtures.py
"""
import json
import pathlib
import warnings

warnings.filterwarnings("ignore")
import spherogram  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "fourpage" / "data" / "fixtures"

KNOTS = ["3_1", "4_1", "5_1", "5_2"] + ["6_%d" % i for i in range(1, 4)] \
    + ["7_%d" % i for i in range(1, 8)] + ["8_%d" % i for i in range(1, 22)]
LINKS = {"L2a1": ["2^2_1", "Hopf link"], "L4a1": ["4^2_1"], "L5a1": ["5^2_1", "Whitehead link"],
         "L6a4": ["6^3_2", "Borromean rings"], "L6n1": ["6^2_3"], "L7n1": []}
EXTRA = ["9_42", "10_124", "10_132", "K11n34", "K12a1", "K12n242"]

# Arc index from public tables (KnotInfo / LinkInfo).  Non-split alternating
# links have alpha = c + 2; torus knots T(p, q) have alpha = p + q.
NONALT_ARC_INDEX = {"8_19": 7, "8_20": 8, "8_21": 9, "10_124": 8}


def record(name, aliases=()):
    L = spherogram.Link(name)
    pd = [[a + 1 for a in x] for x in L.PD_code()]
    c = len(pd)
    alt = bool(L.is_alternating())
    known = {"crossing_number": c, "alternating": alt,
             "components": len(L.link_components)}
    if alt:
        known["arc_index"] = c + 2
    elif name in NONALT_ARC_INDEX:
        known["arc_index"] = NONALT_ARC_INDEX[name]
    return {"name": name, "aliases": list(aliases), "pd": pd, "known": known,
            "source": "spherogram %s Rolfsen/Thistlethwaite table" % spherogram.__version__}


def dump(rec):
    rows = ",\n  ".join(json.dumps(q) for q in rec["pd"])
    body = dict(rec, pd="@PD@")
    text = json.dumps(body, indent=1)
    return text.replace('"@PD@"', "[\n  " + rows + "\n ]") + "\n"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for n in KNOTS + EXTRA:
        rec = record(n)
        (OUT / ("%s.json" % n)).write_text(dump(rec))
    for n, aliases in LINKS.items():
        rec = record(n, aliases)
        (OUT / ("%s.json" % n)).write_text(dump(rec))


if __name__ == "__main__":
    main()
