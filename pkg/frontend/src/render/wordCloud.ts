import type { CloudTerm } from "../types";

// Font size scales linearly with the API-reported count; the term order is
// the payload order (count descending). Placement is just wrapped inline
// text, which keeps the contract surface to sizes and counts.

const MIN_PX = 12;
const MAX_PX = 30;

export function renderWordCloud(container: HTMLElement, terms: CloudTerm[]): void {
  container.innerHTML = "";
  const wrap = document.createElement("div");
  wrap.className = "word-cloud";
  if (terms.length === 0) {
    const empty = document.createElement("span");
    empty.className = "empty-note";
    empty.textContent = "no content";
    wrap.appendChild(empty);
  } else {
    const max = Math.max(...terms.map((t) => t.count));
    for (const { term, count } of terms) {
      const span = document.createElement("span");
      span.className = "cloud-term";
      span.textContent = term;
      span.title = `${term}: ${count}`;
      span.dataset.count = String(count);
      const size = MIN_PX + ((MAX_PX - MIN_PX) * count) / max;
      span.style.fontSize = `${size.toFixed(1)}px`;
      wrap.appendChild(span);
    }
  }
  container.appendChild(wrap);
}
