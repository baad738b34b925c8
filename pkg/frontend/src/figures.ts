import { readFileSync } from "node:fs";

import { CsvError, column, readCsv, requireColumns } from "./csv.js";
import { logLogFit } from "./regression.js";
import { SvgDoc, linearScale, log10Scale, plotArea } from "./svg.js";

export type FigureKind = "sweep" | "conservation" | "table1" | "scattering" | "symbol";

export interface FigureJob {
    kind: FigureKind;
    input: string;
    /** summary.json path; mandatory for sweep figures (slope cross-check). */
    summary?: string;
    output: string;
}

/** Documented CSV headers of the producing component, matched exactly. */
export const EXPECTED_HEADERS: Record<FigureKind, string[]> = {
    sweep: ["N", "max_drift"],
    conservation: ["t", "mass", "energy"],
    table1: ["nu", "d", "gamma_c", "paper_value", "computed", "abs_error"],
    scattering: ["t1", "t2", "residual"],
    symbol: ["rho", "value"],
};

/** Required agreement between the recomputed slope and the summary value. */
export const SLOPE_TOLERANCE = 1e-6;

interface Summary {
    config_hash?: string;
    slopes?: Record<string, number>;
}

function readSummary(path: string): Summary {
    const parsed = JSON.parse(readFileSync(path, "utf-8"));
    if (typeof parsed !== "object" || parsed === null) {
        throw new CsvError(`${path}: summary must be a JSON object`);
    }
    return parsed as Summary;
}

function footer(doc: SvgDoc, hash: string | undefined): void {
    doc.text(8, 410, `config ${hash ?? "(no summary)"}`, {
        size: 10, role: "config-hash", fill: "#6b655c",
    });
}

function logTicks(doc: SvgDoc, lo: number, hi: number, scale: (v: number) => number, axis: "x" | "y"): void {
    const { x0, y0 } = plotArea();
    for (let e = Math.ceil(Math.log10(lo)); e <= Math.floor(Math.log10(hi)); e++) {
        const v = 10 ** e;
        const pos = scale(v);
        if (axis === "x") {
            doc.text(pos, y0 + 16, `1e${e}`, { size: 10, anchor: "middle" });
        } else {
            doc.text(x0 - 6, pos + 3, `1e${e}`, { size: 10, anchor: "end" });
        }
    }
}

function renderSweep(job: FigureJob): string {
    if (!job.summary) {
        throw new CsvError("sweep figures need --summary for the slope cross-check");
    }
    const table = readCsv(job.input);
    requireColumns(table, EXPECTED_HEADERS.sweep);
    const ns = column(table, "N");
    const drifts = column(table, "max_drift");
    let slope: number;
    let intercept: number;
    if (ns.length === 2) {
        // two points determine the line exactly
        slope = (Math.log(drifts[1]) - Math.log(drifts[0])) / (Math.log(ns[1]) - Math.log(ns[0]));
        intercept = Math.log(drifts[0]) - slope * Math.log(ns[0]);
    } else {
        ({ slope, intercept } = logLogFit(ns, drifts));
    }
    const summary = readSummary(job.summary);
    const reference = summary.slopes?.sweep;
    if (typeof reference !== "number") {
        throw new CsvError(`${job.summary}: missing slopes.sweep`);
    }
    if (Math.abs(slope - reference) > SLOPE_TOLERANCE) {
        throw new CsvError(
            `slope recomputed from ${job.input} (${slope}) disagrees with ` +
            `summary value (${reference}) beyond ${SLOPE_TOLERANCE}`
        );
    }

    const doc = new SvgDoc();
    const { x0, x1, y0, y1 } = plotArea();
    const sx = log10Scale(Math.min(...ns) / 1.3, Math.max(...ns) * 1.3, x0, x1);
    const lo = Math.min(...drifts);
    const hi = Math.max(...drifts);
    const sy = log10Scale(lo / 2, hi * 2, y0, y1);
    doc.axes();
    logTicks(doc, Math.min(...ns), Math.max(...ns), sx, "x");
    logTicks(doc, lo, hi, sy, "y");
    const fitted: Array<[number, number]> = ns.map(n => [
        sx(n), sy(Math.exp(intercept + slope * Math.log(n))),
    ]);
    doc.polyline(fitted, "#888077", 1.0);
    doc.polyline(ns.map((n, i) => [sx(n), sy(drifts[i])]), "#ff7a59", 1.5);
    ns.forEach((n, i) => doc.circle(sx(n), sy(drifts[i]), 3.5, "#1d1a16"));
    doc.text(x0, 24, "modified-energy drift vs smoothing cutoff", { size: 14 });
    doc.text(x1, y1 + 14, `slope = ${slope.toPrecision(12)}`, {
        anchor: "end", role: "slope-annotation",
    });
    doc.text((x0 + x1) / 2, y0 + 34, "N", { anchor: "middle" });
    footer(doc, summary.config_hash);
    return doc.render();
}

function renderConservation(job: FigureJob): string {
    const table = readCsv(job.input);
    requireColumns(table, EXPECTED_HEADERS.conservation);
    const ts = column(table, "t");
    const masses = column(table, "mass");
    const energies = column(table, "energy");
    const floor = 1e-17;
    const massDev = masses.map(m => Math.max(Math.abs(m - masses[0]) / masses[0], floor));
    const energyDev = energies.map(e => Math.max(Math.abs(e - energies[0]), floor));
    const doc = new SvgDoc();
    const { x0, x1, y0, y1 } = plotArea();
    const sx = linearScale(ts[0], ts[ts.length - 1] || 1, x0, x1);
    const hi = Math.max(...massDev, ...energyDev) * 2;
    const sy = log10Scale(floor, hi, y0, y1);
    doc.axes();
    logTicks(doc, floor, hi, sy, "y");
    doc.polyline(ts.map((t, i) => [sx(t), sy(massDev[i])]), "#2a7de1");
    doc.polyline(ts.map((t, i) => [sx(t), sy(energyDev[i])]), "#ff7a59");
    doc.text(x0, 24, "conservation drift traces", { size: 14 });
    doc.text(x1, y1 + 14, "mass (blue), energy (orange)", { anchor: "end", size: 11 });
    doc.text((x0 + x1) / 2, y0 + 34, "t", { anchor: "middle" });
    footer(doc, job.summary ? readSummary(job.summary).config_hash : undefined);
    return doc.render();
}

function renderTable1(job: FigureJob): string {
    const table = readCsv(job.input);
    requireColumns(table, EXPECTED_HEADERS.table1);
    const errors = column(table, "abs_error");
    const nus = column(table, "nu");
    const ds = column(table, "d");
    const threshold = 2e-3;
    const doc = new SvgDoc();
    const { x0, x1, y0, y1 } = plotArea();
    const hi = Math.max(threshold * 1.25, ...errors);
    const sy = linearScale(0, hi, y0, y1);
    const slot = (x1 - x0) / errors.length;
    doc.axes();
    errors.forEach((err, i) => {
        const xc = x0 + slot * (i + 0.5);
        doc.rect(xc - slot * 0.3, sy(err), slot * 0.6, y0 - sy(err), "#ff7a59");
        doc.text(xc, y0 + 16, `nu=${nus[i]},d=${ds[i]}`, { size: 10, anchor: "middle" });
    });
    doc.line(x0, sy(threshold), x1, sy(threshold), "#1d1a16", "5,4");
    doc.text(x1, sy(threshold) - 5, `tolerance ${threshold}`, { anchor: "end", size: 10 });
    doc.text(x0, 24, "threshold reproduction: absolute error per case", { size: 14 });
    footer(doc, job.summary ? readSummary(job.summary).config_hash : undefined);
    return doc.render();
}

function renderScattering(job: FigureJob): string {
    const table = readCsv(job.input);
    requireColumns(table, EXPECTED_HEADERS.scattering);
    const t2s = column(table, "t2");
    const residuals = column(table, "residual");
    const doc = new SvgDoc();
    const { x0, x1, y0, y1 } = plotArea();
    const sx = linearScale(0, Math.max(...t2s), x0, x1);
    const positive = residuals.filter(r => r > 0);
    const lo = positive.length ? Math.min(...positive) / 2 : 1e-16;
    const hi = Math.max(...residuals, lo * 10) * 2;
    const sy = log10Scale(lo, hi, y0, y1);
    doc.axes();
    logTicks(doc, lo, hi, sy, "y");
    const points: Array<[number, number]> = residuals.map(
        (r, i) => [sx(t2s[i]), sy(Math.max(r, lo))]
    );
    doc.polyline(points, "#2a7de1");
    points.forEach(([x, y]) => doc.circle(x, y, 3.5, "#1d1a16"));
    doc.text(x0, 24, "free-flow pullback residual over dyadic pairs", { size: 14 });
    doc.text((x0 + x1) / 2, y0 + 34, "t2", { anchor: "middle" });
    footer(doc, job.summary ? readSummary(job.summary).config_hash : undefined);
    return doc.render();
}

function renderSymbol(job: FigureJob): string {
    const table = readCsv(job.input);
    requireColumns(table, EXPECTED_HEADERS.symbol);
    const rhos = column(table, "rho");
    const values = column(table, "value");
    const doc = new SvgDoc();
    const { x0, x1, y0, y1 } = plotArea();
    const sx = linearScale(Math.min(...rhos), Math.max(...rhos) || 1, x0, x1);
    const sy = linearScale(0, Math.max(...values, 1) * 1.05, y0, y1);
    doc.axes();
    doc.polyline(rhos.map((r, i) => [sx(r), sy(values[i])]), "#2a7de1");
    doc.text(x0, 24, "radial symbol profile", { size: 14 });
    doc.text((x0 + x1) / 2, y0 + 34, "|xi|", { anchor: "middle" });
    footer(doc, job.summary ? readSummary(job.summary).config_hash : undefined);
    return doc.render();
}

/** Render one figure job to an SVG string (pure in its file inputs). */
export function renderFigure(job: FigureJob): string {
    switch (job.kind) {
        case "sweep":
            return renderSweep(job);
        case "conservation":
            return renderConservation(job);
        case "table1":
            return renderTable1(job);
        case "scattering":
            return renderScattering(job);
        case "symbol":
            return renderSymbol(job);
    }
}
