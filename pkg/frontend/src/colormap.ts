/** Viridis colormap sampling (anchor stops, linear interpolation). */

const STOPS: Array<[number, number, number]> = [
  [68, 1, 84], [71, 19, 101], [72, 36, 117], [70, 52, 128],
  [65, 68, 135], [59, 82, 139], [53, 95, 141], [47, 108, 142],
  [42, 120, 142], [37, 132, 142], [33, 145, 140], [30, 156, 137],
  [34, 168, 132], [47, 180, 124], [68, 191, 112], [94, 201, 98],
  [122, 209, 81], [155, 217, 60], [189, 223, 38], [223, 227, 24],
  [253, 231, 37],
];

/** Map value in [0, 1] to an RGB triple. */
export function viridis(value: number): [number, number, number] {
  const v = Math.min(1, Math.max(0, value));
  const pos = v * (STOPS.length - 1);
  const i = Math.min(STOPS.length - 2, Math.floor(pos));
  const frac = pos - i;
  const lo = STOPS[i];
  const hi = STOPS[i + 1];
  return [
    Math.round(lo[0] + frac * (hi[0] - lo[0])),
    Math.round(lo[1] + frac * (hi[1] - lo[1])),
    Math.round(lo[2] + frac * (hi[2] - lo[2])),
  ];
}
