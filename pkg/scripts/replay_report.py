"""Run the full proof replay and write the report as JSON and text."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from divcodes.divlen import load_length_tables
from divcodes.replay import REPLAYS, replay_all


@dataclass(frozen=True)
class Config:
    out_dir: Path = Path("results")
    only: str | None = None


def main(cfg: Config) -> int:
    rep = replay_all(load_length_tables(), only=cfg.only)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    stem = cfg.only or "replay"
    (cfg.out_dir / f"{stem}.json").write_text(rep.dumps() + "\n", encoding="utf-8")
    (cfg.out_dir / f"{stem}.txt").write_text(rep.render_text() + "\n", encoding="utf-8")
    failed = [c for c in rep.checks if c.blocking and not c.passed]
    print(f"{len(rep.checks)} checks, {len(failed)} failed, {len(rep.flags)} flagged")
    for f in rep.flags:
        print("  flag:", f)
    return 0 if rep.overall else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", type=Path, default=Config.out_dir)
    p.add_argument("--only", choices=sorted(REPLAYS))
    a = p.parse_args()
    raise SystemExit(main(Config(a.out_dir, a.only)))
