#!/usr/bin/env python3
"""Render the full 24-wheel (1..1008 by default) to an SVG file."""

import argparse
import sys

from quasiprime import shell


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sides", type=int, default=24)
    parser.add_argument("--limit", type=int, default=1008)
    parser.add_argument("--out", default="wheel.svg")
    args = parser.parse_args()

    render = shell.build_wheel_render(args.sides, args.limit)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(shell.emit_wheel_svg(render))
    print(
        f"wrote {args.out}: {render.sides}-wheel to {render.limit}, "
        f"{render.rings} rings, {len(render.primes)} primes marked"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
