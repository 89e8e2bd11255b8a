"""Regenerate the golden security reports for every shipped instance.

The goldens pin the exact bytes `icsisec analyze --seed 0` must produce;
the CLI tests compare against them verbatim.
"""

from pathlib import Path

from icsisec import build_scheme, dumps_report, load_instance, security_report

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    golden = ROOT / "instances" / "golden"
    golden.mkdir(parents=True, exist_ok=True)
    for path in sorted((ROOT / "instances").glob("*.json")):
        loaded = load_instance(str(path))
        scheme = build_scheme(loaded.instance, loaded.choice_vectors)
        report = security_report(scheme.code, seed=0)
        out = golden / f"{path.stem}.report.json"
        out.write_text(dumps_report(report, scheme.code), encoding="utf-8")
        print(f"wrote {out.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
