#!/usr/bin/env node
/** `logse-figs <figure-spec.json> [...]` renders figures from solver CSVs. */

import { SchemaError } from "./csv.js";
import { runFigureSpec } from "./spec.js";

export function main(argv: string[]): number {
  if (argv.length === 0 || argv.includes("--help") || argv.includes("-h")) {
    console.log("usage: logse-figs <figure-spec.json> [more specs...]");
    console.log("spec: { kind: convergence|heatmap|profiles|energies,");
    console.log("        input: path | [paths], output: figure.svg,");
    console.log('        options?: { "title": "..." } }');
    return argv.length === 0 ? 2 : 0;
  }
  for (const specPath of argv) {
    try {
      const output = runFigureSpec(specPath);
      console.log(`wrote ${output}`);
    } catch (err) {
      if (err instanceof SchemaError || (err as NodeJS.ErrnoException).code === "ENOENT") {
        console.error(`error: ${(err as Error).message}`);
        return 2;
      }
      throw err;
    }
  }
  return 0;
}

const invokedDirectly = process.argv[1] !== undefined
  && import.meta.url.endsWith(process.argv[1].split("/").pop() ?? "");
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
