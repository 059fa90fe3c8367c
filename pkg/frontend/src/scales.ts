/**
 * Linear and log10 scales with tick generation, plus deterministic number
 * formatting for SVG output (fixed precision; no locale, no exponent noise).
 */

export interface Scale {
  (value: number): number;
  ticks(): number[];
  domain: [number, number];
}

/** Format a coordinate for SVG: 2 decimals, stable across runs. */
export function fmt(v: number): string {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

/** Format a data value for labels: short scientific/plain form. */
export function fmtLabel(v: number): string {
  if (v === 0) return "0";
  const exp = Math.floor(Math.log10(Math.abs(v)));
  if (exp >= -2 && exp <= 3) {
    const s = v.toPrecision(3);
    return s.includes(".") ? s.replace(/\.?0+$/, "") : s;
  }
  const mant = v / 10 ** exp;
  const m = mant.toPrecision(2).replace(/\.?0+$/, "");
  return m === "1" ? `1e${exp}` : `${m}e${exp}`;
}

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = [d0, d1];
  scale.ticks = () => {
    const step = tickStep(d0, d1);
    const ticks: number[] = [];
    for (let v = Math.ceil(d0 / step) * step; v <= d1 + 1e-12 * Math.abs(step); v += step) {
      ticks.push(Math.abs(v) < 1e-12 * Math.abs(step) ? 0 : v);
    }
    return ticks;
  };
  return scale;
}

export function logScale(d0: number, d1: number, r0: number, r1: number): Scale {
  if (d0 <= 0 || d1 <= 0) {
    throw new Error(`log scale needs positive domain, got [${d0}, ${d1}]`);
  }
  const l0 = Math.log10(d0);
  const l1 = Math.log10(d1);
  const span = l1 - l0 || 1;
  const scale = ((value: number) =>
    r0 + ((Math.log10(value) - l0) / span) * (r1 - r0)) as Scale;
  scale.domain = [d0, d1];
  scale.ticks = () => {
    const ticks: number[] = [];
    for (let e = Math.ceil(l0 - 1e-9); e <= Math.floor(l1 + 1e-9); e++) {
      ticks.push(10 ** e);
    }
    if (ticks.length < 2) {
      return [d0, d1];
    }
    return ticks;
  };
  return scale;
}

function tickStep(d0: number, d1: number): number {
  const raw = (d1 - d0) / 6 || 1;
  const mag = 10 ** Math.floor(Math.log10(Math.abs(raw)));
  const norm = raw / mag;
  const nice = norm >= 5 ? 5 : norm >= 2 ? 2 : 1;
  return nice * mag;
}

/** Expand [lo, hi] multiplicatively for log axes. */
export function padLog(lo: number, hi: number, factor = 1.4): [number, number] {
  return [lo / factor, hi * factor];
}

/** Expand [lo, hi] additively for linear axes. */
export function padLinear(lo: number, hi: number, frac = 0.05): [number, number] {
  const pad = (hi - lo || 1) * frac;
  return [lo - pad, hi + pad];
}
