import "./styles.css";
import { ApiError, createApi } from "./api";
import {
  RequestGate,
  initialState,
  selectMethod,
  selectPair,
  selectTab,
  setHover,
  type HoverRef,
  type ViewState,
} from "./state";
import { renderDiffPanel } from "./render/diffPanel";
import { renderPairEmptyState, renderPairView } from "./render/pairView";
import { renderSolutionList } from "./render/solutionList";
import type { DiffResponse, PairViewResponse, SolutionSummary } from "./types";

const apiBase = (globalThis as { LINKY_API_BASE?: string }).LINKY_API_BASE ?? "";
const api = createApi(apiBase);

let state: ViewState = initialState();
let solutions: SolutionSummary[] = [];
let diff: DiffResponse | null = null;
let diffError: string | null = null;
let pair: PairViewResponse | null = null;
let pairMessage = "Pick a source identity from the diff list or search to open a pair view.";

const pairGate = new RequestGate();

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function showBanner(message: string | null): void {
  const banner = el("banner");
  banner.textContent = message ?? "";
  banner.classList.toggle("hidden", message === null);
}

function redrawSolutions(): void {
  renderSolutionList(el("solutions"), solutions, {
    selectedId: state.methodId,
    onSelect: (methodId) => void chooseMethod(methodId),
  });
}

function redrawDiff(): void {
  if (!state.methodId) {
    el("diff").innerHTML = "";
    return;
  }
  renderDiffPanel(el("diff"), {
    methods: solutions,
    methodA: state.methodId,
    methodB: state.compareId,
    diff,
    error: diffError,
    onCompareChange: (methodId) => void chooseCompare(methodId),
    onOpen: (sourceId) => void openPair(sourceId),
  });
}

function redrawPair(): void {
  const target = el("pair");
  if (!pair) {
    renderPairEmptyState(target, pairMessage);
    return;
  }
  renderPairView(
    target,
    pair,
    { tab: state.tab, hover: state.hover },
    {
      onTab: (tab) => {
        state = selectTab(state, tab);
        redrawPair();
      },
      onHover: (hover: HoverRef | null) => {
        state = setHover(state, hover);
        redrawPair();
      },
    },
  );
}

async function loadDiff(): Promise<void> {
  diff = null;
  diffError = null;
  if (!state.methodId || !state.compareId) {
    redrawDiff();
    return;
  }
  try {
    diff = await api.getDiff(state.methodId, state.compareId);
  } catch (err) {
    diffError = err instanceof ApiError ? err.message : String(err);
  }
  redrawDiff();
}

async function chooseMethod(methodId: string): Promise<void> {
  const fallback = solutions.find((s) => s.method_id !== methodId);
  state = selectMethod(state, methodId, fallback ? fallback.method_id : null);
  pair = null;
  pairMessage = "Pick a source identity from the diff list or search to open a pair view.";
  redrawSolutions();
  redrawPair();
  updateSearchPlatforms();
  await loadDiff();
}

async function chooseCompare(methodId: string): Promise<void> {
  state = { ...state, compareId: methodId };
  await loadDiff();
}

async function openPair(sourceId: string): Promise<void> {
  if (!state.methodId) return;
  const token = pairGate.next();
  try {
    const fetched = await api.getPair(state.methodId, sourceId);
    if (!pairGate.isCurrent(token)) return; // stale response, a newer pair won
    pair = fetched;
    state = selectPair(state, sourceId, fetched.tabs.length);
  } catch (err) {
    if (!pairGate.isCurrent(token)) return;
    pair = null;
    pairMessage =
      err instanceof ApiError && err.code === "no_candidates"
        ? "This method returned no candidates for that identity."
        : err instanceof ApiError
          ? err.message
          : String(err);
  }
  redrawPair();
}

function updateSearchPlatforms(): void {
  const select = el("search-platform") as HTMLSelectElement;
  const current = solutions.find((s) => s.method_id === state.methodId);
  select.innerHTML = "";
  if (!current) return;
  for (const platform of [current.source_platform, current.target_platform]) {
    const option = document.createElement("option");
    option.value = platform;
    option.textContent = platform;
    select.appendChild(option);
  }
}

async function runSearch(): Promise<void> {
  const q = (el("search") as HTMLInputElement).value.trim();
  const platform = (el("search-platform") as HTMLSelectElement).value;
  const results = el("search-results");
  if (!platform || !q) {
    results.innerHTML = "";
    return;
  }
  try {
    const body = await api.searchIdentities(platform, q);
    results.innerHTML = "";
    for (const identity of body.identities) {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "search-hit";
      button.textContent = identity.screen_name
        ? `@${identity.username} (${identity.screen_name})`
        : `@${identity.username}`;
      button.addEventListener("click", () => {
        results.innerHTML = "";
        void openPair(identity.user_id);
      });
      results.appendChild(button);
    }
  } catch (err) {
    showBanner(err instanceof ApiError ? err.message : String(err));
  }
}

async function boot(): Promise<void> {
  showBanner(null);
  try {
    const body = await api.getSolutions();
    solutions = body.solutions;
  } catch (err) {
    showBanner(
      err instanceof ApiError && err.status > 0
        ? `service error: ${err.message}`
        : "cannot reach the linky service; start it with `linky serve`",
    );
    solutions = [];
  }
  redrawSolutions();
  redrawPair();
  if (solutions.length > 0) {
    await chooseMethod(solutions[0].method_id);
  }
  el("search").addEventListener("keydown", (event) => {
    if ((event as KeyboardEvent).key === "Enter") void runSearch();
  });
  el("search-button").addEventListener("click", () => void runSearch());
}

void boot();
