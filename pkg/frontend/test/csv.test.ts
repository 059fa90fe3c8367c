import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { SchemaError, readConvergence, readObservables, readSnapshot } from "../src/csv.js";

const FIXTURES = join(__dirname, "..", "fixtures");

function tempFile(name: string, content: string): string {
  const dir = mkdtempSync(join(tmpdir(), "logse-figs-"));
  const path = join(dir, name);
  writeFileSync(path, content);
  return path;
}

describe("readConvergence", () => {
  it("reads the fixture produced by the solver harness", () => {
    const rows = readConvergence(join(FIXTURES, "example1", "convergence.csv"));
    expect(rows.length).toBeGreaterThan(0);
    const schemes = new Set(rows.map((r) => r.scheme));
    expect(schemes.has("LT")).toBe(true);
    expect(schemes.has("ST1")).toBe(true);
    for (const row of rows) {
      expect(row.tau).toBeGreaterThan(0);
      expect(row.error).toBeGreaterThan(0);
    }
  });

  it("rejects an empty file with an explicit error", () => {
    const path = tempFile("empty.csv", "");
    expect(() => readConvergence(path)).toThrow(SchemaError);
    expect(() => readConvergence(path)).toThrow(/empty/);
  });

  it("names the offending column on header mismatch", () => {
    const path = tempFile("bad.csv", "scheme,tau,h,morm,error\nLT,0.1,0.1,L2,1\n");
    expect(() => readConvergence(path)).toThrow(/'norm'/);
  });

  it("rejects non-numeric cells", () => {
    const path = tempFile("nan.csv", "scheme,tau,h,norm,error\nLT,xyz,0.1,L2,1\n");
    expect(() => readConvergence(path)).toThrow(/not a finite number/);
  });
});

describe("readObservables", () => {
  it("reads the case-ii fixture", () => {
    const table = readObservables(
      join(FIXTURES, "case-ii", "observables.csv"),
      ["E_total", "E_kin", "E_int"],
    );
    expect(table.t.length).toBeGreaterThan(3);
    expect(table.columns.get("mass")!.length).toBe(table.t.length);
  });

  it("reports a missing column by name", () => {
    const path = tempFile("obs.csv", "t,mass\n0,1\n");
    expect(() => readObservables(path, ["E_total"])).toThrow(/missing column 'E_total'/);
  });
});

describe("readSnapshot", () => {
  it("round-trips header metadata", () => {
    const path = tempFile("snapshot_t0.5.csv",
      "# -1.0 1.0 4 0.5 1e-15 -1.0\nx,Re(u),Im(u)\n" +
      "-1.0,1.0,0.0\n-0.5,0.5,0.1\n0.0,0.25,0.0\n0.5,0.5,-0.1\n");
    const snap = readSnapshot(path);
    expect(snap.M).toBe(4);
    expect(snap.t).toBe(0.5);
    expect(snap.lambda).toBe(-1.0);
    expect(snap.x[2]).toBe(0.0);
  });

  it("rejects a snapshot without the metadata header", () => {
    const path = tempFile("snap.csv", "x,Re(u),Im(u)\n0,1,0\n");
    expect(() => readSnapshot(path)).toThrow(/header/);
  });

  it("rejects row-count mismatches", () => {
    const path = tempFile("snap.csv",
      "# -1.0 1.0 4 0.0 1e-15 -1.0\nx,Re(u),Im(u)\n0,1,0\n");
    expect(() => readSnapshot(path)).toThrow(/rows/);
  });
});
