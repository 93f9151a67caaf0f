// DOM builders for the results table and error banner. Rows are emitted
// in the exact order the service returned them; the band filter only
// hides rows, it never reorders or rebuilds the response.

import { bandColor, bandLabel } from "./bands.js";
import type { Band, ResultItem, SearchResponse } from "./types.js";

export const TABLE_COLUMNS = ["rank", "risk", "score", "mark", "status", "classes", "serial"] as const;

export function headlineCount(results: readonly ResultItem[]): number {
  return results.filter((r) => r.band === "VERY_HIGH" || r.band === "HIGH").length;
}

export function renderResultsTable(doc: Document, response: SearchResponse): HTMLTableElement {
  const table = doc.createElement("table");
  table.className = "results";
  const head = doc.createElement("tr");
  for (const column of TABLE_COLUMNS) {
    const th = doc.createElement("th");
    th.textContent = column;
    head.appendChild(th);
  }
  table.appendChild(head);

  for (const result of response.results) {
    const row = doc.createElement("tr");
    row.dataset.band = result.band;
    row.dataset.serial = result.serial;

    const rank = doc.createElement("td");
    rank.textContent = String(result.rank);

    const risk = doc.createElement("td");
    risk.textContent = bandLabel(result.band);
    risk.style.color = "#fff";
    risk.style.backgroundColor = bandColor(result.band);

    const score = doc.createElement("td");
    score.textContent = result.score.toFixed(4);

    const mark = doc.createElement("td");
    mark.textContent = result.mark;
    if (result.exact_match) mark.classList.add("exact");

    const status = doc.createElement("td");
    status.textContent = result.status;

    const classes = doc.createElement("td");
    classes.textContent = result.classes.join(", ");

    const serial = doc.createElement("td");
    serial.textContent = result.serial;

    for (const cell of [rank, risk, score, mark, status, classes, serial]) {
      row.appendChild(cell);
    }
    table.appendChild(row);
  }
  return table;
}

// Hide rows whose band is toggled off; returns how many stay visible.
export function applyBandFilter(table: HTMLTableElement, hidden: ReadonlySet<Band>): number {
  let visible = 0;
  for (const row of Array.from(table.querySelectorAll<HTMLTableRowElement>("tr[data-band]"))) {
    const band = row.dataset.band as Band;
    if (hidden.has(band)) {
      row.style.display = "none";
    } else {
      row.style.display = "";
      visible += 1;
    }
  }
  return visible;
}

export function renderBanner(doc: Document, code: string, message: string): HTMLElement {
  const banner = doc.createElement("div");
  banner.className = "banner";
  banner.dataset.code = code;
  const strong = doc.createElement("strong");
  strong.textContent = code;
  banner.appendChild(strong);
  banner.appendChild(doc.createTextNode(` ${message}`));
  return banner;
}

export function renderSummary(doc: Document, response: SearchResponse): HTMLElement {
  const p = doc.createElement("p");
  p.className = "summary";
  const shown = response.results.length;
  const suffix = response.truncated ? ` of ${response.total}` : "";
  p.textContent = `${shown}${suffix} result${shown === 1 && !response.truncated ? "" : "s"} for "${response.normalized}"`;
  return p;
}
