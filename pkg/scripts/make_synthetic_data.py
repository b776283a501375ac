#!/usr/bin/env python3
"""Regenerate the synthetic fixtures under data/: the pre-classified sample
corpus (10 classes x 60 documents) and a demo batch of raw profile records.
Both are deterministic in their seeds, so reruns reproduce the shipped files
byte for byte."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from socialminer.synth import (
    DEFAULT_CORPUS_SEED,
    DEFAULT_PROFILE_SEED,
    make_corpus_records,
    make_profile_records,
    write_jsonl,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("data"))
    parser.add_argument("--corpus-seed", type=int, default=DEFAULT_CORPUS_SEED)
    parser.add_argument("--profile-seed", type=int, default=DEFAULT_PROFILE_SEED)
    parser.add_argument("--docs-per-class", type=int, default=60)
    parser.add_argument("--profiles", type=int, default=1340)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    corpus = make_corpus_records(args.corpus_seed, args.docs_per_class)
    write_jsonl(args.out_dir / "sample_corpus.jsonl", corpus)
    print(f"wrote {len(corpus)} sample documents to {args.out_dir / 'sample_corpus.jsonl'}")

    profiles = make_profile_records(args.profiles, args.profile_seed)
    write_jsonl(args.out_dir / "profiles.jsonl", profiles)
    print(f"wrote {len(profiles)} profile records to {args.out_dir / 'profiles.jsonl'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
