/**
 * Log-log error-vs-tau plot from convergence.csv, one curve per
 * (scheme, norm) pair, with dashed order-1 and order-2 guide lines.
 */

import { ConvergenceRow, SchemaError, readConvergence } from "./csv.js";
import { Scale, logScale, padLog } from "./scales.js";
import { DEFAULT_FRAME, Frame, SERIES_COLORS, SvgBuilder } from "./svg.js";

export interface ConvergenceOptions {
  title?: string;
  norms?: string[];
  frame?: Frame;
}

export interface PlacedSeries {
  label: string;
  color: string;
  points: Array<[number, number]>; // screen coordinates, tau descending
}

export function groupSeries(rows: ConvergenceRow[], norms?: string[]): Map<string, ConvergenceRow[]> {
  const groups = new Map<string, ConvergenceRow[]>();
  for (const row of rows) {
    if (norms && !norms.includes(row.norm)) continue;
    const key = `${row.scheme} ${row.norm}`;
    if (!groups.has(key)) groups.set(key, []);
    groups.get(key)!.push(row);
  }
  for (const rows_ of groups.values()) {
    rows_.sort((p, q) => q.tau - p.tau);
  }
  return groups;
}

/** Pure layout: data -> screen coordinates (exposed for tests). */
export function layoutConvergence(
  rows: ConvergenceRow[],
  options: ConvergenceOptions = {},
): { series: PlacedSeries[]; xScale: Scale; yScale: Scale; frame: Frame } {
  const frame = options.frame ?? DEFAULT_FRAME;
  const groups = groupSeries(rows, options.norms);
  if (groups.size === 0) {
    throw new SchemaError("no convergence rows after norm filtering");
  }
  const all = [...groups.values()].flat();
  const errs = all.map((r) => r.error).filter((e) => e > 0);
  if (errs.length === 0) {
    throw new SchemaError("all errors are zero; nothing to plot on a log axis");
  }
  const taus = all.map((r) => r.tau);
  const [t0, t1] = padLog(Math.min(...taus), Math.max(...taus));
  const [e0, e1] = padLog(Math.min(...errs), Math.max(...errs));
  const xScale = logScale(t0, t1, frame.left, frame.width - frame.right);
  const yScale = logScale(e0, e1, frame.height - frame.bottom, frame.top);
  const series = [...groups.entries()].map(([label, rows_], i) => ({
    label,
    color: SERIES_COLORS[i % SERIES_COLORS.length],
    points: rows_
      .filter((r) => r.error > 0)
      .map((r) => [xScale(r.tau), yScale(r.error)] as [number, number]),
  }));
  return { series, xScale, yScale, frame };
}

export function renderConvergence(rows: ConvergenceRow[], options: ConvergenceOptions = {}): string {
  const { series, xScale, yScale, frame } = layoutConvergence(rows, options);
  const svg = new SvgBuilder(frame);
  svg.title(options.title ?? "error vs time step");
  svg.axes(xScale, yScale, "tau", "error");

  // order guide lines anchored at the coarsest tau's maximum error
  const [tauMax, tauMin] = [xScale.domain[1] / 1.4, xScale.domain[0] * 1.4];
  const anchor = Math.max(...series.flatMap((s) => s.points.length ? [yScale.domain[1] / 1.4] : []));
  for (const order of [1, 2]) {
    const eAt = (tau: number) => anchor * (tau / tauMax) ** order;
    svg.path(
      [[xScale(tauMax), yScale(eAt(tauMax))], [xScale(tauMin), yScale(eAt(tauMin))]],
      `stroke="#999" stroke-width="1" stroke-dasharray="6 3"`,
    );
    svg.text(xScale(tauMin) + 4, yScale(eAt(tauMin)) + 4, `order ${order}`,
      'fill="#777"');
  }

  for (const s of series) {
    svg.path(s.points, `stroke="${s.color}" stroke-width="1.5"`);
    for (const [x, y] of s.points) {
      svg.circle(x, y, 3, s.color);
    }
  }
  svg.legend(series.map((s) => ({ label: s.label, color: s.color })));
  return svg.render();
}

export function plotConvergence(inputPath: string, options: ConvergenceOptions = {}): string {
  return renderConvergence(readConvergence(inputPath), options);
}
