"""Media references: images, videos, and audio attached to a record.

The engine stores references only; playback and synthesis are left to
external tools. Schemeless URIs are treated as local file paths.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

logger = logging.getLogger(__name__)

ALLOWED_SCHEMES = ("file", "http", "https")


class MediaKind(enum.Enum):
    IMAGE = "image"
    VIDEO = "video"
    AUDIO = "audio"

    @classmethod
    def parse(cls, text: str) -> "MediaKind":
        try:
            return cls(text.strip().casefold())
        except ValueError:
            raise ValueError(f"not a media kind: {text!r}") from None


_VIDEO_EXTS = (".mp4", ".mov", ".avi", ".webm", ".mkv")
_AUDIO_EXTS = (".mp3", ".wav", ".ogg", ".m4a", ".flac")


def guess_kind(uri: str) -> MediaKind:
    """Kind by file extension; anything unrecognized counts as an image."""
    lowered = uri.casefold().split("?", 1)[0]
    if lowered.endswith(_VIDEO_EXTS):
        return MediaKind.VIDEO
    if lowered.endswith(_AUDIO_EXTS):
        return MediaKind.AUDIO
    return MediaKind.IMAGE


def uri_scheme(uri: str) -> str | None:
    """Explicit scheme of a URI, or None for bare paths."""
    head, sep, _ = uri.partition(":")
    if not sep or "/" in head or not head:
        return None
    return head.casefold()


def scheme_allowed(uri: str) -> bool:
    scheme = uri_scheme(uri)
    return scheme is None or scheme in ALLOWED_SCHEMES


@dataclass(frozen=True)
class MediaRef:
    """One media reference."""

    kind: MediaKind
    uri: str
    caption: str | None = None


@dataclass(frozen=True)
class MediaManifest:
    """Deduplicated list of media references for one record."""

    items: tuple[MediaRef, ...] = ()

    def __post_init__(self) -> None:
        seen: dict[str, MediaRef] = {}
        for ref in self.items:
            seen.setdefault(ref.uri, ref)
        object.__setattr__(self, "items", tuple(seen.values()))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def media_manifest(record) -> MediaManifest:
    """The record's manifest with invalid-scheme references dropped.

    Dropped references are logged as warnings; validation reports them
    through the record's ValidationReport as well.
    """
    kept = []
    for ref in record.media:
        if scheme_allowed(ref.uri):
            kept.append(ref)
        else:
            logger.warning(
                "record %s: dropping media ref with unsupported scheme: %s",
                record.id,
                ref.uri,
            )
    return MediaManifest(tuple(kept))
