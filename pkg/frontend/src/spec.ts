/**
 * Figure-spec files: JSON with the figure kind, CSV input(s), the output
 * image path, and axis/label options.
 *
 *   { "kind": "convergence", "input": "out/convergence.csv",
 *     "output": "figs/orders.svg", "options": { "title": "..." } }
 *
 * kinds: convergence | heatmap (input = snapshot directory) |
 *        profiles (input = array of snapshot paths) | energies
 */

import { readFileSync, writeFileSync, existsSync } from "node:fs";
import { dirname } from "node:path";
import { mkdirSync } from "node:fs";

import { SchemaError } from "./csv.js";
import { plotConvergence } from "./convergence.js";
import { plotEnergies } from "./energies.js";
import { plotHeatmap } from "./heatmap.js";
import { plotProfiles } from "./profiles.js";

export interface FigureSpec {
  kind: "convergence" | "heatmap" | "profiles" | "energies";
  input: string | string[];
  output: string;
  options?: { title?: string; norms?: string[] };
}

const KINDS = ["convergence", "heatmap", "profiles", "energies"];

export function parseFigureSpec(text: string, where = "figure spec"): FigureSpec {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new SchemaError(`${where}: not valid JSON (${(err as Error).message})`);
  }
  const spec = data as Partial<FigureSpec>;
  if (!spec || typeof spec !== "object") {
    throw new SchemaError(`${where}: expected a JSON object`);
  }
  if (!spec.kind || !KINDS.includes(spec.kind)) {
    throw new SchemaError(`${where}: kind must be one of ${KINDS.join(", ")}`);
  }
  if (spec.input === undefined) {
    throw new SchemaError(`${where}: missing input`);
  }
  if (typeof spec.output !== "string" || spec.output.length === 0) {
    throw new SchemaError(`${where}: missing output path`);
  }
  if (spec.kind === "profiles" && !Array.isArray(spec.input)) {
    throw new SchemaError(`${where}: profiles need an array of snapshot paths`);
  }
  if (spec.kind !== "profiles" && typeof spec.input !== "string") {
    throw new SchemaError(`${where}: input must be a single path`);
  }
  return spec as FigureSpec;
}

export function checkInputsExist(spec: FigureSpec): void {
  const paths = Array.isArray(spec.input) ? spec.input : [spec.input];
  for (const path of paths) {
    if (!existsSync(path)) {
      throw new SchemaError(`input does not exist: ${path}`);
    }
  }
}

export function renderFigure(spec: FigureSpec): string {
  checkInputsExist(spec);
  switch (spec.kind) {
    case "convergence":
      return plotConvergence(spec.input as string, spec.options);
    case "heatmap":
      return plotHeatmap(spec.input as string, spec.options);
    case "profiles":
      return plotProfiles(spec.input as string[], spec.options);
    case "energies":
      return plotEnergies(spec.input as string, spec.options);
  }
}

export function runFigureSpec(specPath: string): string {
  const spec = parseFigureSpec(readFileSync(specPath, "utf8"), specPath);
  const svg = renderFigure(spec);
  mkdirSync(dirname(spec.output) || ".", { recursive: true });
  writeFileSync(spec.output, svg);
  return spec.output;
}
