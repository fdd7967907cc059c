/** Payload shapes of the phytobase HTTP API. */

export interface PlantSummary {
  id: string;
  scientific_name: string;
  family: string;
  ailments: string[];
}

export interface AilmentRef {
  code: string;
  full_name: string;
}

export interface UseEntry {
  ailment: AilmentRef;
  parts_used: string[];
  preparation: string | null;
  dosage: string | null;
}

export interface LocalizedName {
  text: string;
  language: string;
}

export interface DrugInteraction {
  agent: string;
  effect: string;
  severity_note: string | null;
}

export interface MediaItem {
  kind: "image" | "video" | "audio";
  uri: string;
  caption: string | null;
}

export interface PlantRecord {
  id: string;
  scientific_name: {
    genus: string;
    epithet: string;
    authority: string | null;
    raw: string;
  };
  family: string;
  common_names: string[];
  synonyms: string[];
  local_names: LocalizedName[];
  description: string;
  uses: UseEntry[];
  areas_of_origin: string[];
  contraindications: string[];
  phytoconstituents: string[];
  adverse_reactions: string[];
  toxicity: string | null;
  pharmacology: string | null;
  drug_interactions: DrugInteraction[];
  media: { items: MediaItem[] };
  sources: string[];
  conservation: {
    paper_status: string | null;
    iucn: string | null;
    opinions: Record<string, number> | null;
    market_status: string | null;
    assessed_on: string | null;
    manual_override: boolean;
  } | null;
  market_status: string | null;
}

export interface ResultRow {
  id: string;
  values: Record<string, string | string[] | null>;
}

export interface ResultSet {
  total: number;
  rows: ResultRow[];
}

export interface StatusReport {
  counts: Record<string, number>;
  total_assessed: number;
  unassessed: number;
}

export interface ApiErrorPayload {
  code: string;
  message: string;
  span?: [number, number];
}
