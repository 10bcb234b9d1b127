"""Line-oriented text format for p-harmonic maps.

::

    p=2 N=3
    # k n re im kind
    2 1 1.0 0.0 z
    1 0 0.5 0.0 const
    1 2 0.0 -0.1 zbar

``k`` is the layer index (weight ``|z|**(2(k-1))``), ``n`` the degree and
``kind`` one of ``z``, ``zbar``, ``const``. Blank lines and ``#`` comments
are ignored. Omitted coefficients are zero.
"""
from __future__ import annotations

import re

from .harmonic import HarmonicSeries, PHarmonicMap

KINDS = ("z", "zbar", "const")
_HEADER = re.compile(r"^\s*p\s*=\s*(\d+)\s+N\s*=\s*(\d+)\s*$")


class MapFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def loads(text: str) -> PHarmonicMap:
    header = None
    entries: dict[tuple[int, int, str], complex] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise MapFormatError("expected header 'p=<int> N=<int>'", lineno)
            header = int(m.group(1)), int(m.group(2))
            if header[0] < 1:
                raise MapFormatError("p must be >= 1", lineno)
            continue
        parts = line.split()
        if len(parts) != 5:
            raise MapFormatError(f"expected 'k n re im kind', got {len(parts)} fields", lineno)
        try:
            k, n = int(parts[0]), int(parts[1])
            re_, im_ = float(parts[2]), float(parts[3])
        except ValueError as exc:
            raise MapFormatError(str(exc), lineno) from None
        kind = parts[4]
        p, N = header
        if kind not in KINDS:
            raise MapFormatError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}", lineno)
        if not 1 <= k <= p:
            raise MapFormatError(f"layer k={k} outside 1..{p}", lineno)
        if kind == "const" and n != 0:
            raise MapFormatError("const entries must have n=0", lineno)
        if kind != "const" and not 1 <= n <= N:
            raise MapFormatError(f"degree n={n} outside 1..{N}", lineno)
        value = complex(re_, im_)
        if value != value or abs(value) == float("inf"):
            raise MapFormatError("coefficient must be finite", lineno)
        key = (k, n, kind)
        if key in entries:
            raise MapFormatError(f"duplicate coefficient (k={k}, n={n}, kind={kind})", lineno)
        entries[key] = value
    if header is None:
        raise MapFormatError("empty map file")
    p, N = header
    layers = []
    for k in range(1, p + 1):
        layers.append(HarmonicSeries(
            entries.get((k, 0, "const"), 0j),
            [entries.get((k, n, "z"), 0j) for n in range(1, N + 1)],
            [entries.get((k, n, "zbar"), 0j) for n in range(1, N + 1)],
        ))
    return PHarmonicMap(tuple(layers))


def load(path) -> PHarmonicMap:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(fmap: PHarmonicMap) -> str:
    N = max(layer.N for layer in fmap.layers)
    lines = [f"p={fmap.p} N={N}"]
    for k, layer in enumerate(fmap.layers, start=1):
        if layer.c0 != 0:
            lines.append(f"{k} 0 {layer.c0.real!r} {layer.c0.imag!r} const")
        for kind, coeffs in (("z", layer.c), ("zbar", layer.d)):
            for n, v in enumerate(coeffs, start=1):
                if v != 0:
                    lines.append(f"{k} {n} {v.real!r} {v.imag!r} {kind}")
    return "\n".join(lines) + "\n"


def dump(fmap: PHarmonicMap, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(fmap))
