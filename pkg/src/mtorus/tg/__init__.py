"""The T/G triangulation format: parse, realize and emit."""

from mtorus.tg.emitter import TgWriter, emit_tg
from mtorus.tg.errors import TgEmitError, TgParseError, TgRealizeError
from mtorus.tg.parser import TgDocument, TgGluing, TgTetrahedron, parse_tg
from mtorus.tg.realize import implicit_gluings, realize

__all__ = [
    "TgDocument",
    "TgEmitError",
    "TgGluing",
    "TgParseError",
    "TgRealizeError",
    "TgTetrahedron",
    "TgWriter",
    "emit_tg",
    "implicit_gluings",
    "parse_tg",
    "realize",
]
