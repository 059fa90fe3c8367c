/** |u(x)| profile overlays for a list of snapshot files. */

import { SchemaError, Snapshot, readSnapshot } from "./csv.js";
import { linearScale, padLinear } from "./scales.js";
import { DEFAULT_FRAME, Frame, SERIES_COLORS, SvgBuilder } from "./svg.js";
import { fmtLabel } from "./scales.js";

export interface ProfilesOptions {
  title?: string;
  frame?: Frame;
}

export function renderProfiles(snaps: Snapshot[], options: ProfilesOptions = {}): string {
  if (snaps.length === 0) {
    throw new SchemaError("profiles need at least one snapshot");
  }
  const frame = options.frame ?? DEFAULT_FRAME;
  const amp = (s: Snapshot) => s.x.map((_, j) => Math.hypot(s.re[j], s.im[j]));
  const amps = snaps.map(amp);
  const vmax = Math.max(...amps.map((a) => Math.max(...a)));
  const [lo, hi] = padLinear(0, vmax || 1);
  const first = snaps[0];
  const xScale = linearScale(first.a, first.b, frame.left, frame.width - frame.right);
  const yScale = linearScale(Math.max(lo, 0), hi, frame.height - frame.bottom, frame.top);

  const svg = new SvgBuilder(frame);
  svg.title(options.title ?? "|u(x)| profiles");
  svg.axes(xScale, yScale, "x", "|u|");
  snaps.forEach((snap, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const points = snap.x.map((x, j) =>
      [xScale(x), yScale(amps[i][j])] as [number, number]);
    svg.path(points, `stroke="${color}" stroke-width="1.2"`);
  });
  svg.legend(snaps.map((snap, i) => ({
    label: `t = ${fmtLabel(snap.t)}`,
    color: SERIES_COLORS[i % SERIES_COLORS.length],
  })));
  return svg.render();
}

export function plotProfiles(paths: string[], options: ProfilesOptions = {}): string {
  return renderProfiles(paths.map(readSnapshot), options);
}
