import type { DiffResponse, SolutionSummary } from "../types";

export interface DiffPanelOptions {
  methods: SolutionSummary[];
  methodA: string;
  methodB: string | null;
  diff: DiffResponse | null;
  error: string | null;
  onCompareChange: (methodId: string) => void;
  onOpen: (sourceId: string) => void;
}

// Left-hand panel: sources the selected method links correctly while the
// comparison method does not. Entries open the pair view under method A.
export function renderDiffPanel(container: HTMLElement, opts: DiffPanelOptions): void {
  container.innerHTML = "";
  const heading = document.createElement("h2");
  heading.textContent = "Correct here, missed there";
  container.appendChild(heading);

  const picker = document.createElement("label");
  picker.className = "compare-picker";
  picker.textContent = "compare against ";
  const select = document.createElement("select");
  select.id = "compare-select";
  for (const method of opts.methods) {
    if (method.method_id === opts.methodA) continue;
    const option = document.createElement("option");
    option.value = method.method_id;
    option.textContent = method.method_id;
    option.selected = method.method_id === opts.methodB;
    select.appendChild(option);
  }
  select.addEventListener("change", () => opts.onCompareChange(select.value));
  picker.appendChild(select);
  container.appendChild(picker);

  if (opts.error) {
    const note = document.createElement("p");
    note.className = "inline-error";
    note.textContent = opts.error;
    container.appendChild(note);
    return;
  }
  if (!opts.diff) {
    return;
  }

  if (opts.diff.sources.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-note";
    empty.textContent =
      opts.diff.method_a === opts.diff.method_b
        ? "A method never beats itself: the diff of a method against itself is empty."
        : `No sources are correct under ${opts.diff.method_a} but wrong under ${opts.diff.method_b}.`;
    container.appendChild(empty);
    return;
  }

  const list = document.createElement("ul");
  list.className = "diff-list";
  for (const source of opts.diff.sources) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.className = "diff-entry";
    button.dataset.sourceId = source.source_id;
    button.textContent = source.username;
    button.addEventListener("click", () => opts.onOpen(source.source_id));
    item.appendChild(button);
    list.appendChild(item);
  }
  container.appendChild(list);
}
