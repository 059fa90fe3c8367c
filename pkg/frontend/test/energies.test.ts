import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { readObservables } from "../src/csv.js";
import { layoutEnergies, plotEnergies } from "../src/energies.js";
import { DEFAULT_FRAME } from "../src/svg.js";

const FIXTURES = join(__dirname, "..", "fixtures");

function tempCsv(content: string): string {
  const dir = mkdtempSync(join(tmpdir(), "logse-figs-"));
  const path = join(dir, "observables.csv");
  writeFileSync(path, content);
  return path;
}

describe("energies", () => {
  it("renders three flat lines for constant columns", () => {
    const path = tempCsv(
      "t,mass,momentum,E_total,E_kin,E_int\n" +
      "0,1,0,2.5,1.5,1.0\n1,1,0,2.5,1.5,1.0\n2,1,0,2.5,1.5,1.0\n");
    const table = readObservables(path, ["E_total", "E_kin", "E_int"]);
    const { series } = layoutEnergies(table, DEFAULT_FRAME);
    for (const s of series) {
      const ys = s.points.map(([, y]) => y);
      expect(Math.max(...ys) - Math.min(...ys)).toBeLessThan(1e-9);
    }
    expect(plotEnergies(path)).toContain("E_total");
  });

  it("reports a missing energy column by name", () => {
    const path = tempCsv("t,mass,momentum,E_total,E_kin\n0,1,0,2,1\n");
    expect(() => plotEnergies(path)).toThrow(/missing column 'E_int'/);
  });

  it("fixture run has flat total energy and oscillating parts", () => {
    const table = readObservables(
      join(FIXTURES, "case-ii", "observables.csv"),
      ["E_total", "E_kin", "E_int"],
    );
    const { series } = layoutEnergies(table, DEFAULT_FRAME);
    const span = (pts: Array<[number, number]>) => {
      const ys = pts.map(([, y]) => y);
      return Math.max(...ys) - Math.min(...ys);
    };
    const total = series.find((s) => s.label === "E_total")!;
    const kin = series.find((s) => s.label === "E_kin")!;
    expect(span(total.points)).toBeLessThan(0.05 * span(kin.points));
  });

  it("is byte-stable", () => {
    const path = join(FIXTURES, "case-ii", "observables.csv");
    expect(plotEnergies(path)).toBe(plotEnergies(path));
  });
});
