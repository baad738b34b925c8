export interface LineFit {
    slope: number;
    intercept: number;
}

/** Ordinary least squares y = slope * x + intercept. */
export function linearFit(xs: number[], ys: number[]): LineFit {
    if (xs.length !== ys.length || xs.length < 2) {
        throw new Error(`need at least two matched points, got ${xs.length}/${ys.length}`);
    }
    const n = xs.length;
    const mx = xs.reduce((a, b) => a + b, 0) / n;
    const my = ys.reduce((a, b) => a + b, 0) / n;
    let sxx = 0;
    let sxy = 0;
    for (let i = 0; i < n; i++) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx === 0) {
        throw new Error("degenerate fit: all abscissae identical");
    }
    const slope = sxy / sxx;
    return { slope, intercept: my - slope * mx };
}

/** Least squares in log-log coordinates (drift-vs-N decay laws). */
export function logLogFit(xs: number[], ys: number[]): LineFit {
    if (xs.some(x => x <= 0) || ys.some(y => y <= 0)) {
        throw new Error("log-log fit needs strictly positive data");
    }
    return linearFit(xs.map(Math.log), ys.map(Math.log));
}
