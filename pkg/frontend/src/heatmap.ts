/**
 * Space-time heatmap of sqrt|u(x,t)| from a directory of snapshot files.
 * The raster is encoded as a PNG and embedded in an SVG with proper axes;
 * snapshot times come from the embedded file headers.
 */

import { readdirSync } from "node:fs";
import { join } from "node:path";

import { viridis } from "./colormap.js";
import { SchemaError, Snapshot, readSnapshot } from "./csv.js";
import { linearScale } from "./scales.js";
import { DEFAULT_FRAME, Frame, SvgBuilder } from "./svg.js";
import { encodePng } from "./png.js";

export interface HeatmapOptions {
  title?: string;
  frame?: Frame;
  maxColumns?: number; // x-resolution cap (block averaging beyond it)
}

export function loadSnapshotDir(dir: string): Snapshot[] {
  const names = readdirSync(dir)
    .filter((n) => n.startsWith("snapshot_t") && n.endsWith(".csv"))
    .sort();
  if (names.length === 0) {
    throw new SchemaError(`${dir}: no snapshot_t*.csv files`);
  }
  const snaps = names.map((n) => readSnapshot(join(dir, n)));
  snaps.sort((p, q) => p.t - q.t);
  return snaps;
}

/** sqrt|u| rows (t ascending), block-averaged to at most maxColumns. */
export function heatmapRows(snaps: Snapshot[], maxColumns = 1024): {
  rows: Float64Array[];
  columns: number;
  vmax: number;
} {
  const M = snaps[0].M;
  for (const snap of snaps) {
    if (snap.M !== M) {
      throw new SchemaError("snapshots disagree on grid size");
    }
  }
  const block = Math.max(1, Math.ceil(M / maxColumns));
  const columns = Math.ceil(M / block);
  let vmax = 0;
  const rows = snaps.map((snap) => {
    const row = new Float64Array(columns);
    for (let c = 0; c < columns; c++) {
      let acc = 0;
      let count = 0;
      for (let j = c * block; j < Math.min((c + 1) * block, M); j++) {
        acc += Math.sqrt(Math.hypot(snap.re[j], snap.im[j]));
        count++;
      }
      row[c] = acc / count;
      vmax = Math.max(vmax, row[c]);
    }
    return row;
  });
  return { rows, columns, vmax };
}

export function renderHeatmap(snaps: Snapshot[], options: HeatmapOptions = {}): string {
  const frame = options.frame ?? DEFAULT_FRAME;
  const { rows, columns, vmax } = heatmapRows(snaps, options.maxColumns ?? 1024);
  const scale = vmax > 0 ? 1 / vmax : 1;
  const rgb = new Uint8Array(columns * rows.length * 3);
  // latest time on top: flip rows into image scanlines
  rows.forEach((row, r) => {
    const y = rows.length - 1 - r;
    for (let c = 0; c < columns; c++) {
      const [cr, cg, cb] = viridis(row[c] * scale);
      const k = (y * columns + c) * 3;
      rgb[k] = cr;
      rgb[k + 1] = cg;
      rgb[k + 2] = cb;
    }
  });
  const png = encodePng(columns, rows.length, rgb);

  const svg = new SvgBuilder(frame);
  svg.title(options.title ?? "sqrt|u(x,t)|");
  const first = snaps[0];
  const tLo = snaps[0].t;
  const tHi = snaps[snaps.length - 1].t;
  const xScale = linearScale(first.a, first.b, frame.left, frame.width - frame.right);
  const yScale = linearScale(tLo, tHi === tLo ? tLo + 1 : tHi,
    frame.height - frame.bottom, frame.top);
  svg.axes(xScale, yScale, "x", "t");
  const plotW = frame.width - frame.left - frame.right;
  const plotH = frame.height - frame.top - frame.bottom;
  svg.raw(
    `<image x="${frame.left}" y="${frame.top}" width="${plotW}" height="${plotH}" ` +
    `preserveAspectRatio="none" style="image-rendering:pixelated" ` +
    `href="data:image/png;base64,${Buffer.from(png).toString("base64")}"/>`,
  );
  return svg.render();
}

export function plotHeatmap(inputDir: string, options: HeatmapOptions = {}): string {
  return renderHeatmap(loadSnapshotDir(inputDir), options);
}
