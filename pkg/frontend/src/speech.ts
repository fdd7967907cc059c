/** Narration playback through the platform's speech facility.
 *
 * The visible text is the source of truth; speech is an optional
 * enhancement and simply reports whether it could start.
 */

export function speechAvailable(): boolean {
  return typeof globalThis.speechSynthesis !== "undefined" &&
    typeof globalThis.SpeechSynthesisUtterance !== "undefined";
}

export function speak(text: string, lang: string): boolean {
  if (!speechAvailable()) return false;
  const utterance = new SpeechSynthesisUtterance(text);
  utterance.lang = lang;
  globalThis.speechSynthesis.cancel();
  globalThis.speechSynthesis.speak(utterance);
  return true;
}
