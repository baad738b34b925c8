/** Minimal deterministic SVG builder: same inputs, same bytes. */

export const WIDTH = 640;
export const HEIGHT = 420;
export const MARGIN = { left: 70, right: 20, top: 40, bottom: 58 };

export interface Scale {
    (value: number): number;
}

export function linearScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
    const span = hi - lo || 1;
    return value => outLo + ((value - lo) / span) * (outHi - outLo);
}

export function log10Scale(lo: number, hi: number, outLo: number, outHi: number): Scale {
    const base = linearScale(Math.log10(lo), Math.log10(hi), outLo, outHi);
    return value => base(Math.log10(value));
}

export function plotArea(): { x0: number; x1: number; y0: number; y1: number } {
    return {
        x0: MARGIN.left,
        x1: WIDTH - MARGIN.right,
        y0: HEIGHT - MARGIN.bottom,
        y1: MARGIN.top,
    };
}

const esc = (s: string) =>
    s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

export class SvgDoc {
    private parts: string[] = [];

    polyline(points: Array<[number, number]>, stroke: string, width = 1.5): void {
        const path = points.map(([x, y]) => `${x.toFixed(2)},${y.toFixed(2)}`).join(" ");
        this.parts.push(
            `<polyline fill="none" stroke="${stroke}" stroke-width="${width}" points="${path}"/>`
        );
    }

    circle(x: number, y: number, r: number, fill: string): void {
        this.parts.push(
            `<circle cx="${x.toFixed(2)}" cy="${y.toFixed(2)}" r="${r}" fill="${fill}"/>`
        );
    }

    rect(x: number, y: number, w: number, h: number, fill: string): void {
        this.parts.push(
            `<rect x="${x.toFixed(2)}" y="${y.toFixed(2)}" width="${w.toFixed(2)}" ` +
            `height="${h.toFixed(2)}" fill="${fill}"/>`
        );
    }

    line(x1: number, y1: number, x2: number, y2: number, stroke: string, dash = ""): void {
        const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
        this.parts.push(
            `<line x1="${x1.toFixed(2)}" y1="${y1.toFixed(2)}" x2="${x2.toFixed(2)}" ` +
            `y2="${y2.toFixed(2)}" stroke="${stroke}"${dashAttr}/>`
        );
    }

    text(
        x: number, y: number, content: string,
        opts: { size?: number; anchor?: string; role?: string; fill?: string } = {}
    ): void {
        const size = opts.size ?? 12;
        const anchor = opts.anchor ?? "start";
        const role = opts.role ? ` data-role="${opts.role}"` : "";
        const fill = opts.fill ?? "#1d1a16";
        this.parts.push(
            `<text x="${x.toFixed(2)}" y="${y.toFixed(2)}" font-size="${size}" ` +
            `font-family="sans-serif" text-anchor="${anchor}" fill="${fill}"${role}>` +
            `${esc(content)}</text>`
        );
    }

    axes(): void {
        const { x0, x1, y0, y1 } = plotArea();
        this.line(x0, y0, x1, y0, "#1d1a16");
        this.line(x0, y0, x0, y1, "#1d1a16");
    }

    render(): string {
        return (
            `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
            `viewBox="0 0 ${WIDTH} ${HEIGHT}">\n` +
            `<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>\n` +
            this.parts.join("\n") +
            `\n</svg>\n`
        );
    }
}
