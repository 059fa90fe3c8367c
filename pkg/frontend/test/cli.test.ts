import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { SchemaError } from "../src/csv.js";
import { parseFigureSpec, runFigureSpec } from "../src/spec.js";
import { main } from "../src/cli.js";

const FIXTURES = join(__dirname, "..", "fixtures");

function specFile(spec: object): string {
  const dir = mkdtempSync(join(tmpdir(), "logse-figs-"));
  const path = join(dir, "figure.json");
  writeFileSync(path, JSON.stringify(spec));
  return path;
}

describe("figure specs", () => {
  it("validates kinds", () => {
    expect(() => parseFigureSpec('{"kind":"pie","input":"a","output":"b"}'))
      .toThrow(/kind must be one of/);
    expect(() => parseFigureSpec("not json")).toThrow(SchemaError);
    expect(() => parseFigureSpec('{"kind":"convergence","input":"a.csv"}'))
      .toThrow(/output/);
    expect(() => parseFigureSpec(
      '{"kind":"profiles","input":"a.csv","output":"b.svg"}'))
      .toThrow(/array/);
  });

  it("rejects missing inputs with a named path", () => {
    const path = specFile({
      kind: "convergence",
      input: "/nonexistent/convergence.csv",
      output: join(tmpdir(), "x.svg"),
    });
    expect(() => runFigureSpec(path)).toThrow(/nonexistent/);
  });
});

describe("cli end to end", () => {
  it("renders all four figure kinds from the preset fixtures", () => {
    const out = mkdtempSync(join(tmpdir(), "logse-figs-out-"));
    const specs = [
      {
        kind: "convergence",
        input: join(FIXTURES, "example1", "convergence.csv"),
        output: join(out, "orders.svg"),
        options: { title: "example1 accuracy ladder" },
      },
      {
        kind: "heatmap",
        input: join(FIXTURES, "case-ii"),
        output: join(out, "heatmap.svg"),
      },
      {
        kind: "energies",
        input: join(FIXTURES, "case-ii", "observables.csv"),
        output: join(out, "energies.svg"),
      },
      {
        kind: "profiles",
        input: [
          join(FIXTURES, "case-ii", "snapshot_t0.0.csv"),
          join(FIXTURES, "case-ii", "snapshot_t15.0.csv"),
          join(FIXTURES, "case-ii", "snapshot_t30.0.csv"),
        ],
        output: join(out, "profiles.svg"),
      },
    ];
    const paths = specs.map((s) => specFile(s));
    expect(main(paths)).toBe(0);
    for (const spec of specs) {
      const svg = readFileSync(spec.output, "utf8");
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg.endsWith("</svg>\n")).toBe(true);
    }
  });

  it("is byte-stable across repeated CLI runs", () => {
    const out = mkdtempSync(join(tmpdir(), "logse-figs-out-"));
    const spec = specFile({
      kind: "convergence",
      input: join(FIXTURES, "example1", "convergence.csv"),
      output: join(out, "orders.svg"),
    });
    expect(main([spec])).toBe(0);
    const first = readFileSync(join(out, "orders.svg"));
    expect(main([spec])).toBe(0);
    const second = readFileSync(join(out, "orders.svg"));
    expect(second.equals(first)).toBe(true);
  });

  it("returns exit code 2 on schema errors", () => {
    const bad = specFile({ kind: "nope", input: "x", output: "y" });
    expect(main([bad])).toBe(2);
  });

  it("prints usage without arguments", () => {
    expect(main([])).toBe(2);
    expect(main(["--help"])).toBe(0);
  });
});
