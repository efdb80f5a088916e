#!/usr/bin/env python3
"""Download the public multiplex datasets used by the dataset tests.

The two networks (European airline transport, London transport) are part of
the multiplex collection published at

    http://deim.urv.cat/~manlio.dedomenico/data.php

and are not vendored with this repository. This script downloads the zip
archives, extracts the ``*_multiplex.edges`` files into ``datasets/``, and
records SHA-256 checksums on first download (verified on every later run,
so a silently changed upstream file is caught).

Usage:
    python scripts/fetch_datasets.py [--dest datasets] [--euair-url URL]
                                     [--london-url URL]
"""

import argparse
import hashlib
import io
import json
import sys
import urllib.request
import zipfile
from pathlib import Path

DATASETS = {
    "euair": {
        "url": "http://deim.urv.cat/~manlio.dedomenico/data/EUAirTransportation.zip",
        "edges_name": "EUAirTransportation_multiplex.edges",
    },
    "london": {
        "url": "http://deim.urv.cat/~manlio.dedomenico/data/LondonMultiplex.zip",
        "edges_name": "london_transport_multiplex.edges",
    },
}


def sha256_of(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def load_checksums(path: Path) -> dict:
    if path.is_file():
        return json.loads(path.read_text(encoding="utf-8"))
    return {}


def fetch(name: str, url: str, dest: Path, checksums: dict) -> bool:
    info = DATASETS[name]
    target = dest / info["edges_name"]
    if target.is_file():
        digest = sha256_of(target.read_bytes())
        recorded = checksums.get(info["edges_name"])
        if recorded is None:
            checksums[info["edges_name"]] = digest
            print(f"[{name}] present; recorded checksum {digest[:16]}...")
        elif recorded != digest:
            print(f"[{name}] CHECKSUM MISMATCH for {target}: expected "
                  f"{recorded[:16]}..., got {digest[:16]}...", file=sys.stderr)
            return False
        else:
            print(f"[{name}] present and checksum verified")
        return True

    print(f"[{name}] downloading {url}")
    try:
        with urllib.request.urlopen(url, timeout=60) as resp:
            blob = resp.read()
    except Exception as exc:
        print(f"[{name}] download failed: {exc}", file=sys.stderr)
        print(f"[{name}] fetch the archive manually from the dataset page and "
              f"place {info['edges_name']} under {dest}/", file=sys.stderr)
        return False

    extracted = None
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        for member in zf.namelist():
            if member.endswith(info["edges_name"]):
                extracted = zf.read(member)
                break
    if extracted is None:
        print(f"[{name}] archive does not contain {info['edges_name']}",
              file=sys.stderr)
        return False
    dest.mkdir(parents=True, exist_ok=True)
    target.write_bytes(extracted)
    digest = sha256_of(extracted)
    recorded = checksums.get(info["edges_name"])
    if recorded is not None and recorded != digest:
        print(f"[{name}] CHECKSUM MISMATCH after download", file=sys.stderr)
        return False
    checksums[info["edges_name"]] = digest
    print(f"[{name}] extracted {target} (sha256 {digest[:16]}...)")
    return True


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", default="datasets", type=Path)
    parser.add_argument("--euair-url", default=DATASETS["euair"]["url"])
    parser.add_argument("--london-url", default=DATASETS["london"]["url"])
    args = parser.parse_args()

    args.dest.mkdir(parents=True, exist_ok=True)
    checksum_path = args.dest / "CHECKSUMS.json"
    checksums = load_checksums(checksum_path)
    ok = True
    ok &= fetch("euair", args.euair_url, args.dest, checksums)
    ok &= fetch("london", args.london_url, args.dest, checksums)
    checksum_path.write_text(json.dumps(checksums, indent=2) + "\n",
                             encoding="utf-8")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
