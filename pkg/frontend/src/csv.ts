/**
 * Readers for the solver's CSV schemas.
 *
 * - convergence.csv:  scheme,tau,h,norm,error
 * - observables.csv:  t,mass,momentum,E_total,E_kin,E_int[,fp_iters]
 * - snapshot_t*.csv:  `# a b M t epsilon lambda` header, then x,Re(u),Im(u)
 *
 * These scripts never recompute physics; they only consume these files.
 */

import { readFileSync } from "node:fs";

export class SchemaError extends Error {}

export interface ConvergenceRow {
  scheme: string;
  tau: number;
  h: number;
  norm: string;
  error: number;
}

export interface ObservablesTable {
  t: number[];
  columns: Map<string, number[]>;
}

export interface Snapshot {
  a: number;
  b: number;
  M: number;
  t: number;
  epsilon: number;
  lambda: number;
  x: number[];
  re: number[];
  im: number[];
}

function splitLines(text: string): string[] {
  return text.split(/\r?\n/).filter((line) => line.length > 0);
}

function parseNumber(token: string, where: string): number {
  const value = Number(token);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`${where}: not a finite number: '${token}'`);
  }
  return value;
}

export function readConvergence(path: string): ConvergenceRow[] {
  const lines = splitLines(readFileSync(path, "utf8"));
  if (lines.length === 0) {
    throw new SchemaError(`${path}: empty file`);
  }
  const header = lines[0];
  const expected = "scheme,tau,h,norm,error";
  if (header !== expected) {
    const got = header.split(",");
    const want = expected.split(",");
    const bad = want.find((col, i) => got[i] !== col) ?? header;
    throw new SchemaError(`${path}: bad convergence header, expected column '${bad}'`);
  }
  if (lines.length === 1) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== 5) {
      throw new SchemaError(`${path}:${i + 2}: expected 5 cells, got ${cells.length}`);
    }
    return {
      scheme: cells[0],
      tau: parseNumber(cells[1], `${path}:${i + 2} tau`),
      h: parseNumber(cells[2], `${path}:${i + 2} h`),
      norm: cells[3],
      error: parseNumber(cells[4], `${path}:${i + 2} error`),
    };
  });
}

export function readObservables(path: string, required: string[]): ObservablesTable {
  const lines = splitLines(readFileSync(path, "utf8"));
  if (lines.length < 2) {
    throw new SchemaError(`${path}: empty observables file`);
  }
  const names = lines[0].split(",");
  for (const col of ["t", ...required]) {
    if (!names.includes(col)) {
      throw new SchemaError(`${path}: missing column '${col}'`);
    }
  }
  const columns = new Map<string, number[]>(names.map((n) => [n, []]));
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== names.length) {
      throw new SchemaError(`${path}:${i + 1}: expected ${names.length} cells`);
    }
    cells.forEach((cell, j) => {
      columns.get(names[j])!.push(parseNumber(cell, `${path}:${i + 1} ${names[j]}`));
    });
  }
  return { t: columns.get("t")!, columns };
}

export function readSnapshot(path: string): Snapshot {
  const lines = splitLines(readFileSync(path, "utf8"));
  if (lines.length === 0 || !lines[0].startsWith("#")) {
    throw new SchemaError(`${path}: missing '# a b M t epsilon lambda' header`);
  }
  const head = lines[0].slice(1).trim().split(/\s+/);
  if (head.length !== 6) {
    throw new SchemaError(`${path}: header needs 6 fields, got ${head.length}`);
  }
  const [a, b, M, t, epsilon, lambda] = head.map((tok, i) =>
    parseNumber(tok, `${path}: header field ${i}`),
  );
  if (lines[1] !== "x,Re(u),Im(u)") {
    throw new SchemaError(`${path}: expected column row 'x,Re(u),Im(u)'`);
  }
  const x: number[] = [];
  const re: number[] = [];
  const im: number[] = [];
  for (let i = 2; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== 3) {
      throw new SchemaError(`${path}:${i + 1}: expected 3 cells`);
    }
    x.push(parseNumber(cells[0], `${path}:${i + 1} x`));
    re.push(parseNumber(cells[1], `${path}:${i + 1} Re(u)`));
    im.push(parseNumber(cells[2], `${path}:${i + 1} Im(u)`));
  }
  if (x.length !== M) {
    throw new SchemaError(`${path}: ${x.length} rows for M=${M}`);
  }
  return { a, b, M, t, epsilon, lambda, x, re, im };
}
