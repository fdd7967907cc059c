"""Multilingual narration scripts: the text a TTS adapter would speak.

Run from the repository root:  python3 demos/03_narration_scripts.py
"""

from phytobase import build_narration, render_narration_plaintext
from phytobase.fixtures import load_plants_store

store = load_plants_store()
ginger = store.get("zingiber-officinale")

# labels localize per language; field content stays verbatim, and
# ailment codes always expand to their full names
for language in ("en", "yo", "fr"):
    print(f"--- narration ({language}) ---")
    script = build_narration(ginger, language, revision=store.revision)
    print(render_narration_plaintext(script))
