/** Energy evolution plot: E_total, E_kin, E_int against t from observables.csv. */

import { ObservablesTable, readObservables } from "./csv.js";
import { linearScale, padLinear } from "./scales.js";
import { DEFAULT_FRAME, Frame, SERIES_COLORS, SvgBuilder } from "./svg.js";

export interface EnergiesOptions {
  title?: string;
  frame?: Frame;
}

const ENERGY_COLUMNS = ["E_total", "E_kin", "E_int"];

export function layoutEnergies(table: ObservablesTable, frame: Frame) {
  const t = table.t;
  const values = ENERGY_COLUMNS.map((name) => table.columns.get(name)!);
  const flat = values.flat();
  const [lo, hi] = padLinear(Math.min(...flat), Math.max(...flat));
  const xScale = linearScale(t[0], t[t.length - 1] || 1, frame.left,
    frame.width - frame.right);
  const yScale = linearScale(lo, hi, frame.height - frame.bottom, frame.top);
  const series = ENERGY_COLUMNS.map((name, i) => ({
    label: name,
    color: SERIES_COLORS[i % SERIES_COLORS.length],
    points: t.map((tv, j) => [xScale(tv), yScale(values[i][j])] as [number, number]),
  }));
  return { series, xScale, yScale };
}

export function renderEnergies(table: ObservablesTable, options: EnergiesOptions = {}): string {
  const frame = options.frame ?? DEFAULT_FRAME;
  const { series, xScale, yScale } = layoutEnergies(table, frame);
  const svg = new SvgBuilder(frame);
  svg.title(options.title ?? "energy evolution");
  svg.axes(xScale, yScale, "t", "energy");
  for (const s of series) {
    svg.path(s.points, `stroke="${s.color}" stroke-width="1.5"`);
  }
  svg.legend(series.map((s) => ({ label: s.label, color: s.color })));
  return svg.render();
}

export function plotEnergies(inputPath: string, options: EnergiesOptions = {}): string {
  return renderEnergies(readObservables(inputPath, ENERGY_COLUMNS), options);
}
