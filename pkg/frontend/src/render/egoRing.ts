import type { EgoView } from "../types";

// Circular layout: node angles follow the payload's position indices
// (degree-descending order computed server-side). Edges are drawn as
// quadratic curves pulled toward the centre, a fixed-tension stand-in for
// hierarchical edge bundling; green marks cross-network linked nodes and
// hovering a node turns its incident edges red.

const SVG_NS = "http://www.w3.org/2000/svg";
const RADIUS = 84;
const LABEL_RADIUS = 92;
const BUNDLE_TENSION = 0.75;

export interface EgoRingOptions {
  hovered?: number | null;
  onHover?: (position: number | null) => void;
}

function point(position: number, count: number, radius: number): { x: number; y: number } {
  const angle = (2 * Math.PI * position) / count - Math.PI / 2;
  return { x: radius * Math.cos(angle), y: radius * Math.sin(angle) };
}

export function renderEgoRing(container: HTMLElement, view: EgoView, opts: EgoRingOptions = {}): void {
  container.innerHTML = "";
  const hovered = opts.hovered ?? null;
  const count = view.nodes.length;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", "-110 -110 220 220");
  svg.setAttribute("class", "ego-ring");

  for (const [a, b] of view.edges) {
    const from = point(a, count, RADIUS);
    const to = point(b, count, RADIUS);
    const mx = ((from.x + to.x) / 2) * (1 - BUNDLE_TENSION);
    const my = ((from.y + to.y) / 2) * (1 - BUNDLE_TENSION);
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", `M ${from.x.toFixed(2)} ${from.y.toFixed(2)} Q ${mx.toFixed(2)} ${my.toFixed(2)} ${to.x.toFixed(2)} ${to.y.toFixed(2)}`);
    const incident = hovered !== null && (a === hovered || b === hovered);
    path.setAttribute("class", incident ? "ego-edge red" : "ego-edge");
    path.dataset.from = String(a);
    path.dataset.to = String(b);
    svg.appendChild(path);
  }

  const highlighted = new Set(view.linked_highlight);
  for (const node of view.nodes) {
    const at = point(node.position, count, RADIUS);
    const isEgo = node.ref.platform === view.ego.platform && node.ref.user_id === view.ego.user_id;
    const classes = ["ego-node"];
    if (highlighted.has(node.position)) classes.push("green");
    if (isEgo) classes.push("ego-self");
    if (hovered === node.position) classes.push("hovered");

    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", at.x.toFixed(2));
    circle.setAttribute("cy", at.y.toFixed(2));
    circle.setAttribute("r", isEgo ? "6" : "4");
    circle.setAttribute("class", classes.join(" "));
    circle.dataset.position = String(node.position);
    if (opts.onHover) {
      circle.addEventListener("mouseenter", () => opts.onHover!(node.position));
      circle.addEventListener("mouseleave", () => opts.onHover!(null));
    }
    svg.appendChild(circle);

    const label = document.createElementNS(SVG_NS, "text");
    const anchor = point(node.position, count, LABEL_RADIUS);
    label.setAttribute("x", anchor.x.toFixed(2));
    label.setAttribute("y", anchor.y.toFixed(2));
    label.setAttribute("text-anchor", anchor.x < -1 ? "end" : anchor.x > 1 ? "start" : "middle");
    label.setAttribute("dominant-baseline", "middle");
    label.setAttribute("class", highlighted.has(node.position) ? "ego-label green" : "ego-label");
    label.dataset.position = String(node.position);
    label.textContent = node.username;
    svg.appendChild(label);
  }

  container.appendChild(svg);
}
