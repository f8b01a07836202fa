import type { SolutionSummary } from "../types";

export interface SolutionListOptions {
  selectedId: string | null;
  onSelect: (methodId: string) => void;
}

function metric(value: number | null): string {
  return value === null ? "–" : value.toFixed(3);
}

export function renderSolutionList(
  container: HTMLElement,
  solutions: SolutionSummary[],
  opts: SolutionListOptions,
): void {
  container.innerHTML = "";
  const heading = document.createElement("h2");
  heading.textContent = "Methods";
  container.appendChild(heading);

  if (solutions.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-note";
    empty.textContent = "No solutions uploaded yet. Run the baseline or import a solution file.";
    container.appendChild(empty);
    return;
  }

  const table = document.createElement("table");
  table.className = "solution-table";
  const head = document.createElement("tr");
  for (const label of ["Method", "Prec@1", "MRR", "n"]) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  table.appendChild(head);

  for (const solution of solutions) {
    const row = document.createElement("tr");
    row.className = solution.method_id === opts.selectedId ? "solution-row selected" : "solution-row";
    row.dataset.methodId = solution.method_id;
    const cells = [
      solution.display_name,
      metric(solution.prec_at_1),
      metric(solution.mrr),
      String(solution.n_evaluated),
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      row.appendChild(td);
    }
    row.addEventListener("click", () => opts.onSelect(solution.method_id));
    table.appendChild(row);
  }
  container.appendChild(table);
}
