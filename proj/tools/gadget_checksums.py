#!/usr/bin/env python3
"""Rewrite data/gadgets/checksums.txt (FNV-1a 64 of each gadget data file)."""
import pathlib

FILES = ["wheel.gadget", "vedge.gadget", "wheel_drawings.ldr"]


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h = ((h ^ b) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def main() -> None:
    root = pathlib.Path(__file__).resolve().parent.parent / "data" / "gadgets"
    lines = [f"{f} {fnv1a64((root / f).read_bytes()):016x}" for f in FILES]
    (root / "checksums.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
