import type { Band } from "./types.js";

export const ALL_BANDS: readonly Band[] = ["VERY_HIGH", "HIGH", "MEDIUM", "LOW"];

// Total over the four bands; the riskiest results jump out first.
export const BAND_COLORS: Record<Band, string> = {
  VERY_HIGH: "#c0392b", // red
  HIGH: "#e67e22", // orange
  MEDIUM: "#f1c40f", // yellow
  LOW: "#95a5a6", // gray
};

export function bandColor(band: Band): string {
  return BAND_COLORS[band];
}

export function bandLabel(band: Band): string {
  return band.replace("_", " ");
}
