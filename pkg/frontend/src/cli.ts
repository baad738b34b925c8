import { mkdirSync, writeFileSync } from "node:fs";
import { dirname } from "node:path";

import { CsvError } from "./csv.js";
import { EXPECTED_HEADERS, FigureJob, FigureKind, renderFigure } from "./figures.js";

const USAGE = `usage: render --kind <${Object.keys(EXPECTED_HEADERS).join("|")}> \
--input data.csv [--summary summary.json] --out figure.svg`;

export function parseArgs(argv: string[]): FigureJob {
    const opts = new Map<string, string>();
    for (let i = 0; i < argv.length; i += 2) {
        const key = argv[i];
        const value = argv[i + 1];
        if (!key.startsWith("--") || value === undefined) {
            throw new UsageError(`bad argument ${key ?? "(none)"}\n${USAGE}`);
        }
        opts.set(key.slice(2), value);
    }
    const kind = opts.get("kind");
    const input = opts.get("input");
    const output = opts.get("out");
    if (!kind || !input || !output) {
        throw new UsageError(`--kind, --input and --out are required\n${USAGE}`);
    }
    if (!(kind in EXPECTED_HEADERS)) {
        throw new UsageError(`unknown figure kind "${kind}"\n${USAGE}`);
    }
    return { kind: kind as FigureKind, input, summary: opts.get("summary"), output };
}

export class UsageError extends Error {}

export function main(argv: string[]): number {
    let job: FigureJob;
    try {
        job = parseArgs(argv);
    } catch (err) {
        console.error(String(err instanceof Error ? err.message : err));
        return 2;
    }
    try {
        const svg = renderFigure(job);
        mkdirSync(dirname(job.output), { recursive: true });
        writeFileSync(job.output, svg, "utf-8");
        console.log(`wrote ${job.output}`);
        return 0;
    } catch (err) {
        if (err instanceof CsvError || err instanceof SyntaxError || err instanceof Error) {
            console.error(`error: ${err.message}`);
            return 1;
        }
        console.error(`error: ${String(err)}`);
        return 1;
    }
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
    process.exit(main(process.argv.slice(2)));
}
