// Wire types, mirroring the service JSON exactly.

export type Band = "VERY_HIGH" | "HIGH" | "MEDIUM" | "LOW";

export type Status = "LIVE" | "DEAD" | "PENDING";

export interface ResultItem {
  serial: string;
  mark: string;
  status: Status;
  classes: number[];
  owner: string | null;
  score: number;
  band: Band;
  exact_match: boolean;
  phonetic_match: boolean;
  levenshtein: number;
  rank: number;
}

export interface SearchResponse {
  query: string;
  normalized: string;
  total: number;
  truncated: boolean;
  results: ResultItem[];
}

export interface TrademarkRecord {
  serial: string;
  registration: string | null;
  mark: string;
  status: Status;
  classes: number[];
  owner: string | null;
  filing_date: string | null;
  registration_date: string | null;
}

export interface HealthResponse {
  status: string;
  records: number;
}

export interface ErrorBody {
  error: string;
  message: string;
}
