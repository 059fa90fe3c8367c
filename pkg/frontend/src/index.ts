export { SchemaError, readConvergence, readObservables, readSnapshot } from "./csv.js";
export type { ConvergenceRow, ObservablesTable, Snapshot } from "./csv.js";
export { layoutConvergence, plotConvergence, renderConvergence } from "./convergence.js";
export { heatmapRows, loadSnapshotDir, plotHeatmap, renderHeatmap } from "./heatmap.js";
export { plotProfiles, renderProfiles } from "./profiles.js";
export { layoutEnergies, plotEnergies, renderEnergies } from "./energies.js";
export { parseFigureSpec, renderFigure, runFigureSpec } from "./spec.js";
export type { FigureSpec } from "./spec.js";
export { encodePng, decodePng } from "./png.js";
export { viridis } from "./colormap.js";
