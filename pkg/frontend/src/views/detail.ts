/** Detail view: a record's full profile, media panel, narration playback. */

import type { ApiClient } from "../api";
import { ApiError } from "../api";
import { clear, el, errorBanner } from "../dom";
import { speak } from "../speech";
import type { MediaItem, PlantRecord } from "../types";

export interface DetailViewDeps {
  api: ApiClient;
  id: string;
  language: string;
  onLanguageChange: (lang: string) => void;
}

const LANGUAGES = ["en", "yo", "ha", "ig", "fr"];

function section(title: string, children: Array<Node | string>): HTMLElement {
  return el("section", { class: "record-section" }, [el("h3", {}, [title]), ...children]);
}

function list(items: string[]): HTMLElement {
  return el("ul", {}, items.map((item) => el("li", {}, [item])));
}

function namesSection(record: PlantRecord): HTMLElement {
  const rows: string[] = [];
  if (record.common_names.length) rows.push(`Common: ${record.common_names.join(", ")}`);
  if (record.synonyms.length) rows.push(`Synonyms: ${record.synonyms.join(", ")}`);
  for (const local of record.local_names) {
    rows.push(`Local (${local.language}): ${local.text}`);
  }
  return section("Names", [
    el("p", { class: "scientific-name" }, [record.scientific_name.raw]),
    el("p", { class: "family" }, [record.family ? `Family: ${record.family}` : "Family unknown"]),
    list(rows),
  ]);
}

function usesSection(record: PlantRecord): HTMLElement {
  const items = record.uses.map((use) => {
    const parts = use.parts_used.length ? ` [${use.parts_used.join(", ")}]` : "";
    const preparation = use.preparation ? ` via ${use.preparation}` : "";
    return `${use.ailment.full_name} (${use.ailment.code})${parts}${preparation}`;
  });
  return section("Diseases treated", [
    el("ul", { class: "diseases" }, items.map((text) => el("li", {}, [text]))),
  ]);
}

function safetySection(record: PlantRecord): HTMLElement {
  const children: Node[] = [];
  if (record.contraindications.length) {
    children.push(el("h4", {}, ["Contraindications"]), list(record.contraindications));
  }
  if (record.toxicity) children.push(el("p", {}, [`Toxicity: ${record.toxicity}`]));
  if (record.adverse_reactions.length) {
    children.push(el("h4", {}, ["Adverse reactions"]), list(record.adverse_reactions));
  }
  if (record.drug_interactions.length) {
    children.push(
      el("h4", {}, ["Drug interactions"]),
      list(record.drug_interactions.map((d) => `${d.agent}: ${d.effect}`)),
    );
  }
  return section("Safety", children.length ? children : [el("p", {}, ["Nothing recorded."])]);
}

function mediaPanel(items: MediaItem[]): HTMLElement {
  const children: Node[] = items.map((item) => {
    if (item.kind === "video") {
      return el("figure", { class: "media-item" }, [
        el("video", { controls: "", src: item.uri, "data-kind": "video" }),
        el("figcaption", {}, [item.caption ?? item.uri]),
      ]);
    }
    if (item.kind === "audio") {
      return el("figure", { class: "media-item" }, [
        el("audio", { controls: "", src: item.uri, "data-kind": "audio" }),
        el("figcaption", {}, [item.caption ?? item.uri]),
      ]);
    }
    return el("figure", { class: "media-item" }, [
      el("img", { src: item.uri, alt: item.caption ?? item.uri, "data-kind": "image" }),
      el("figcaption", {}, [item.caption ?? item.uri]),
    ]);
  });
  return section("Media", children.length ? children : [el("p", {}, ["No media."])]);
}

export async function renderDetailView(
  container: HTMLElement,
  deps: DetailViewDeps,
): Promise<void> {
  clear(container);

  let record: PlantRecord;
  try {
    record = await deps.api.getPlant(deps.id);
  } catch (error) {
    if (error instanceof ApiError && error.status === 404) {
      container.append(
        el("h2", {}, ["Record not found"]),
        el("p", { class: "not-found" }, [`No plant is stored under "${deps.id}".`]),
      );
    } else {
      container.append(errorBanner(error instanceof Error ? error.message : String(error)));
    }
    return;
  }

  container.append(el("h2", {}, [record.scientific_name.raw]));
  if (record.description) container.append(el("p", { class: "description" }, [record.description]));

  container.append(namesSection(record), usesSection(record));

  if (record.areas_of_origin.length) {
    container.append(section("Areas of origin", [list(record.areas_of_origin)]));
  }
  if (record.phytoconstituents.length) {
    container.append(section("Phytoconstituents", [list(record.phytoconstituents)]));
  }
  container.append(safetySection(record));
  if (record.pharmacology) {
    container.append(section("Pharmacology", [el("p", {}, [record.pharmacology])]));
  }
  if (record.sources.length) {
    container.append(section("Sources", [list(record.sources)]));
  }

  try {
    container.append(mediaPanel(await deps.api.media(deps.id)));
  } catch {
    container.append(section("Media", [el("p", {}, ["Media manifest unavailable."])]));
  }

  // narration: fetch the script, always show the text, speak when possible
  const langSelect = el("select", { class: "narration-lang" }) as HTMLSelectElement;
  for (const lang of LANGUAGES) {
    const option = el("option", { value: lang }, [lang]) as HTMLOptionElement;
    option.selected = lang === deps.language;
    langSelect.append(option);
  }
  const playButton = el("button", { class: "play-narration", type: "button" }, [
    "Play narration",
  ]);
  const transcript = el("pre", { class: "narration-text" });
  const narrationStatus = el("span", { class: "narration-status" });

  playButton.addEventListener("click", async () => {
    const lang = langSelect.value;
    deps.onLanguageChange(lang);
    try {
      const text = await deps.api.narration(deps.id, lang);
      transcript.textContent = text;
      const spoken = speak(text, lang);
      narrationStatus.textContent = spoken ? "speaking…" : "speech unavailable; text below";
    } catch (error) {
      narrationStatus.textContent = "";
      transcript.textContent = "";
      container.append(errorBanner(error instanceof Error ? error.message : String(error)));
    }
  });

  container.append(
    section("Narration", [
      el("div", { class: "narration-controls" }, [langSelect, playButton, narrationStatus]),
      transcript,
    ]),
  );
}
