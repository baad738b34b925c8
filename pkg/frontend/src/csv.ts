import { readFileSync } from "node:fs";

/** Raised for malformed or mismatched inputs; message names the column. */
export class CsvError extends Error {}

export interface CsvTable {
    path: string;
    header: string[];
    rows: string[][];
}

/** Parse a simple comma-separated file; the header row is mandatory. */
export function readCsv(path: string): CsvTable {
    const text = readFileSync(path, "utf-8");
    const lines = text.split(/\r?\n/).filter(line => line.trim().length > 0);
    if (lines.length === 0) {
        throw new CsvError(`${path}: empty CSV (missing header row)`);
    }
    const header = lines[0].split(",").map(s => s.trim());
    const rows = lines.slice(1).map(line => line.split(",").map(s => s.trim()));
    for (const row of rows) {
        if (row.length !== header.length) {
            throw new CsvError(
                `${path}: row has ${row.length} fields, header has ${header.length}`
            );
        }
    }
    return { path, header, rows };
}

/** Enforce the documented header exactly; mismatches name the column. */
export function requireColumns(table: CsvTable, expected: string[]): void {
    const n = Math.max(table.header.length, expected.length);
    for (let i = 0; i < n; i++) {
        const want = expected[i];
        const got = table.header[i];
        if (want === undefined) {
            throw new CsvError(
                `${table.path}: unexpected extra column "${got}" at position ${i + 1}`
            );
        }
        if (got !== want) {
            throw new CsvError(
                `${table.path}: header mismatch at position ${i + 1}: ` +
                `expected column "${want}", found "${got ?? "(none)"}"`
            );
        }
    }
    if (table.rows.length === 0) {
        throw new CsvError(`${table.path}: no data rows`);
    }
}

/** Numeric cell parser that also accepts exact rationals like "7/6". */
export function toNumber(cell: string, path: string): number {
    const slash = cell.indexOf("/");
    if (slash > 0) {
        const num = Number(cell.slice(0, slash));
        const den = Number(cell.slice(slash + 1));
        if (Number.isFinite(num) && Number.isFinite(den) && den !== 0) {
            return num / den;
        }
    }
    const value = Number(cell);
    if (!Number.isFinite(value)) {
        throw new CsvError(`${path}: cell "${cell}" is not numeric`);
    }
    return value;
}

/** One numeric column by name. */
export function column(table: CsvTable, name: string): number[] {
    const idx = table.header.indexOf(name);
    if (idx < 0) {
        throw new CsvError(`${table.path}: missing column "${name}"`);
    }
    return table.rows.map(row => toNumber(row[idx], table.path));
}
