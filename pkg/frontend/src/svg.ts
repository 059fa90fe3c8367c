/**
 * Minimal deterministic SVG assembly: an element tree serialized with
 * stable attribute order (insertion order) and fixed number formatting.
 */

import { Scale, fmt, fmtLabel } from "./scales.js";

export interface Frame {
  width: number;
  height: number;
  left: number;
  right: number;
  top: number;
  bottom: number;
}

export const DEFAULT_FRAME: Frame = {
  width: 640,
  height: 440,
  left: 64,
  right: 20,
  top: 34,
  bottom: 46,
};

export const SERIES_COLORS = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

const ESCAPES: Record<string, string> = {
  "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;",
};

export function escapeText(text: string): string {
  return text.replace(/[&<>"]/g, (ch) => ESCAPES[ch]);
}

export class SvgBuilder {
  private parts: string[] = [];

  constructor(readonly frame: Frame) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${frame.width}" ` +
      `height="${frame.height}" viewBox="0 0 ${frame.width} ${frame.height}">`,
      `<rect width="${frame.width}" height="${frame.height}" fill="white"/>`,
    );
  }

  raw(markup: string): void {
    this.parts.push(markup);
  }

  line(x1: number, y1: number, x2: number, y2: number, style: string): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ${style}/>`,
    );
  }

  circle(cx: number, cy: number, r: number, fill: string): void {
    this.parts.push(`<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="${r}" fill="${fill}"/>`);
  }

  path(points: Array<[number, number]>, style: string): void {
    if (points.length === 0) return;
    const d = points
      .map(([x, y], i) => `${i === 0 ? "M" : "L"}${fmt(x)} ${fmt(y)}`)
      .join(" ");
    this.parts.push(`<path d="${d}" fill="none" ${style}/>`);
  }

  text(x: number, y: number, content: string, style = ""): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-family="sans-serif" ` +
      `font-size="12" ${style}>${escapeText(content)}</text>`,
    );
  }

  title(content: string): void {
    this.text(this.frame.width / 2, 18, content,
      'text-anchor="middle" font-size="14"');
  }

  axes(xScale: Scale, yScale: Scale, xLabel: string, yLabel: string): void {
    const f = this.frame;
    const axisStyle = 'stroke="#333" stroke-width="1"';
    const gridStyle = 'stroke="#ddd" stroke-width="0.5"';
    this.line(f.left, f.height - f.bottom, f.width - f.right, f.height - f.bottom, axisStyle);
    this.line(f.left, f.top, f.left, f.height - f.bottom, axisStyle);
    for (const tick of xScale.ticks()) {
      const x = xScale(tick);
      this.line(x, f.top, x, f.height - f.bottom, gridStyle);
      this.line(x, f.height - f.bottom, x, f.height - f.bottom + 4, axisStyle);
      this.text(x, f.height - f.bottom + 17, fmtLabel(tick), 'text-anchor="middle"');
    }
    for (const tick of yScale.ticks()) {
      const y = yScale(tick);
      this.line(f.left, y, f.width - f.right, y, gridStyle);
      this.line(f.left - 4, y, f.left, y, axisStyle);
      this.text(f.left - 7, y + 4, fmtLabel(tick), 'text-anchor="end"');
    }
    this.text((f.left + f.width - f.right) / 2, f.height - 10, xLabel,
      'text-anchor="middle"');
    this.raw(
      `<text x="16" y="${fmt((f.top + f.height - f.bottom) / 2)}" ` +
      `font-family="sans-serif" font-size="12" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${fmt((f.top + f.height - f.bottom) / 2)})">` +
      `${escapeText(yLabel)}</text>`,
    );
  }

  legend(entries: Array<{ label: string; color: string; dashed?: boolean }>): void {
    const f = this.frame;
    let y = f.top + 12;
    for (const entry of entries) {
      const x = f.width - f.right - 150;
      const dash = entry.dashed ? ' stroke-dasharray="6 3"' : "";
      this.line(x, y - 4, x + 22, y - 4,
        `stroke="${entry.color}" stroke-width="2"${dash}`);
      this.text(x + 28, y, entry.label);
      y += 16;
    }
  }

  render(): string {
    return [...this.parts, "</svg>"].join("\n") + "\n";
  }
}
