/** Header-row CSV reading for the solver's output schemas (no quoting used). */

import * as fs from "node:fs";

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("CSV is empty");
  }
  const columns = lines[0].split(",");
  const rows = lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== columns.length) {
      throw new Error(`row ${i + 2} has ${cells.length} cells, header has ${columns.length}`);
    }
    return Object.fromEntries(columns.map((c, k) => [c, cells[k]]));
  });
  return { columns, rows };
}

export function readCsv(path: string): Table {
  let text: string;
  try {
    text = fs.readFileSync(path, "utf8");
  } catch {
    throw new Error(`cannot read CSV file: ${path}`);
  }
  try {
    return parseCsv(text);
  } catch (err) {
    throw new Error(`${path}: ${(err as Error).message}`);
  }
}

export function requireColumns(table: Table, needed: string[], path: string): void {
  const missing = needed.filter((c) => !table.columns.includes(c));
  if (missing.length > 0) {
    throw new Error(`${path}: missing column(s) ${missing.join(", ")}`);
  }
  if (table.rows.length === 0) {
    throw new Error(`${path}: no data rows`);
  }
}

export function numeric(row: Record<string, string>, column: string): number {
  const value = Number(row[column]);
  if (Number.isNaN(value) && row[column] !== "nan") {
    throw new Error(`non-numeric value ${row[column]!} in column ${column}`);
  }
  return value;
}
